#ifndef CYV_CHOW_HPP
#define CYV_CHOW_HPP

#include "cyv/chow/bundles.hpp"
#include "cyv/chow/expr.hpp"
#include "cyv/chow/json.hpp"
#include "cyv/chow/ring.hpp"

#endif  // CYV_CHOW_HPP

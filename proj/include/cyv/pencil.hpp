#ifndef CYV_PENCIL_HPP
#define CYV_PENCIL_HPP

#include "cyv/pencil/pencil.hpp"
#include "cyv/pencil/scan.hpp"
#include "cyv/pencil/singular.hpp"

#endif  // CYV_PENCIL_HPP

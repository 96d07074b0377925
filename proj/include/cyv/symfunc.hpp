#ifndef CYV_SYMFUNC_HPP
#define CYV_SYMFUNC_HPP

#include "cyv/symfunc/chern.hpp"
#include "cyv/symfunc/littlewood_richardson.hpp"
#include "cyv/symfunc/partition.hpp"
#include "cyv/symfunc/symmetric.hpp"
#include "cyv/symfunc/weyl.hpp"

#endif  // CYV_SYMFUNC_HPP

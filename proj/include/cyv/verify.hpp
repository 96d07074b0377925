#ifndef CYV_VERIFY_HPP
#define CYV_VERIFY_HPP

#include "cyv/verify/checks.hpp"
#include "cyv/verify/report.hpp"

#endif  // CYV_VERIFY_HPP

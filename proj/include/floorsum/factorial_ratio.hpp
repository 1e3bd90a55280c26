#pragma once

#include "floorsum/numeric.hpp"
#include "floorsum/param_set.hpp"

#include <cstdint>
#include <optional>

namespace floorsum {

// u_n = prod (a_k n)! / prod (b_l n)!, exact. The two factorial products are
// accumulated separately and the ratio is reduced once at the end.
Rational un_term(const ParamSet& p, std::uint64_t n);

// Smallest n in [1, n_max] with u_n not an integer, or nullopt if none.
// By Landau's criterion this is empty for every n_max iff f >= 0, which makes
// the scan an independent oracle for is_nonnegative().
std::optional<std::uint64_t> integrality_scan(const ParamSet& p, std::uint64_t n_max);

}  // namespace floorsum

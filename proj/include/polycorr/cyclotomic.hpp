#pragma once

#include "polycorr/numeric.hpp"

#include <utility>
#include <vector>

namespace polycorr {

/// Coefficients of the L-th cyclotomic polynomial, ascending degree.
const std::vector<BigInt>& cyclotomic_poly(unsigned long L);

/// Decides whether sum_j c_j * e(q_j) vanishes, for rational angles q_j.
/// Exact: the sum is mapped into Q(zeta_L), L = lcm of denominators, and
/// reduced modulo the L-th cyclotomic polynomial.
bool rootsum_is_zero(const std::vector<std::pair<BigRat, BigRat>>& terms);

/// Coordinates of sum_j c_j * e(q_j) in the power basis
/// zeta_L^0 .. zeta_L^{phi(L)-1} of Q(zeta_L). Returns (coords, L).
std::pair<std::vector<BigRat>, unsigned long> rootsum_reduce(
    const std::vector<std::pair<BigRat, BigRat>>& terms);

}  // namespace polycorr

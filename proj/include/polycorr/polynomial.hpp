#pragma once

#include "polycorr/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace polycorr {

struct NotIntegerValued : std::runtime_error {
    explicit NotIntegerValued(const std::string& what) : std::runtime_error(what) {}
};

/// Integer-valued polynomial, stored by its integer binomial-basis
/// coefficients: p(n) = sum_i c_i * C(n, i). Canonical trailing form
/// (c_d != 0 unless p is the constant c_0). Immutable.
class IntPolynomial {
  public:
    IntPolynomial() : coeffs_{0} {}
    static IntPolynomial from_binomial(std::vector<BigInt> coeffs);
    /// Standard-basis rational coefficients a_0 + a_1 n + ... ;
    /// throws NotIntegerValued unless the polynomial is integer on Z.
    static IntPolynomial from_rational_coeffs(const std::vector<BigRat>& standard);

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_constant() const { return coeffs_.size() == 1; }
    bool vanishes_at_zero() const { return coeffs_[0] == 0; }

    BigInt evaluate(const BigInt& n) const;

    /// q with q(n) = p(s*n + r), in binomial form.
    IntPolynomial compose_affine(const BigInt& s, const BigInt& r) const;

    /// Derived standard-basis view (rational coefficients, ascending).
    std::vector<BigRat> standard_coeffs() const;

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;  // canonical "[c0,c1,...]"

  private:
    std::vector<BigInt> coeffs_;
};

class PolyFamily {
  public:
    explicit PolyFamily(std::vector<IntPolynomial> polys);

    size_t k() const { return polys_.size(); }
    unsigned max_degree() const;
    const std::vector<IntPolynomial>& polys() const { return polys_; }
    bool vanishes_at_zero() const;

    std::string str() const;

  private:
    std::vector<IntPolynomial> polys_;
};

/// True iff no nontrivial integer combination of the members is constant;
/// equivalently the binomial coefficient vectors restricted to indices >= 1
/// are linearly independent over Q (exact rank).
bool is_rationally_independent(const PolyFamily& fam);

/// A nontrivial integer vector lambda with sum_i lambda_i * p_i constant,
/// when the family is dependent; nullopt when independent.
std::optional<std::vector<BigInt>> dependence_witness(const PolyFamily& fam);

/// Accepted text forms: binomial "[c0,c1,...]", standard rational
/// coefficients "c0,c1/2,...", or an expression in n built from rationals,
/// n^j and C(n,j), e.g. "2n+1", "n^2/2-n/2".
IntPolynomial parse_polynomial(std::string_view text);

/// "{p, p, ...}" with expression members, or "{p; p; ...}" where members
/// may additionally be coefficient lists (';' disambiguates their commas).
PolyFamily parse_family(std::string_view text);

}  // namespace polycorr

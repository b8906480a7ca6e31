#pragma once

#include "polycorr/phase.hpp"

#include <complex>
#include <map>
#include <optional>

namespace polycorr {

/// An exact complex scalar: a finite sum of rational multiples of exact
/// unit-circle phases, sum_j c_j * e(theta_j). The imaginary unit is the
/// phase 1/4. Closed under +, -, *, conjugation; zero is decidable
/// (cyclotomic reduction per formal-irrational component).
class ExactCx {
  public:
    ExactCx() = default;
    static ExactCx from_rational(const BigRat& c);
    static ExactCx from_gaussian(const BigRat& re, const BigRat& im);
    static ExactCx unit(const Phase& p);          // e(p)
    static ExactCx term(const Phase& p, const BigRat& c);
    static ExactCx one() { return from_rational(1); }

    ExactCx operator+(const ExactCx& o) const;
    ExactCx operator-(const ExactCx& o) const;
    ExactCx operator*(const ExactCx& o) const;
    ExactCx operator-() const;
    ExactCx& operator+=(const ExactCx& o);
    ExactCx conj() const;
    ExactCx scaled(const BigRat& c) const;

    /// |z|^2 = z * conj(z), exact.
    ExactCx norm_sq() const { return *this * conj(); }

    /// True complex-number zero (not merely formal emptiness).
    bool is_zero() const;
    bool equals(const ExactCx& o) const { return (*this - o).is_zero(); }

    /// The exact rational value, when the number is rational; nullopt otherwise.
    std::optional<BigRat> as_rational() const;
    /// Re/Im as exact values.
    ExactCx real_part() const;
    ExactCx imag_part() const;

    std::complex<double> numeric(const IrrAssign& a = {}) const;

    bool formally_empty() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Phase, BigRat>& terms() const { return terms_; }

    std::string str() const;

  private:
    std::map<Phase, BigRat> terms_;  // nonzero rational coefficients
    void prune();
};

}  // namespace polycorr

#pragma once

#include "polycorr/numeric.hpp"
#include "polycorr/symbols.hpp"

#include <utility>
#include <vector>

namespace polycorr {

/// An exact angle mod 1: rational part plus integer multiples of formal
/// irrationals. The unit-circle value it denotes is e(frac + sum t_i*alpha_i),
/// e(x) = exp(2*pi*i*x).
class Phase {
  public:
    Phase() = default;
    static Phase rational(const BigRat& q);
    static Phase irrational(uint32_t id, const BigInt& coeff = 1);

    const BigRat& frac() const { return frac_; }
    const std::vector<std::pair<uint32_t, BigInt>>& irr() const { return irr_; }

    bool is_zero() const { return frac_ == 0 && irr_.empty(); }
    bool is_rational() const { return irr_.empty(); }

    Phase operator+(const Phase& o) const;
    Phase operator-(const Phase& o) const;
    Phase operator-() const;
    Phase scaled(const BigInt& k) const;

    bool operator==(const Phase& o) const { return frac_ == o.frac_ && irr_ == o.irr_; }
    /// Total order usable as a map key. <0, 0, >0.
    int cmp(const Phase& o) const;
    bool operator<(const Phase& o) const { return cmp(o) < 0; }

    /// Angle value in [0,1) under the given assignments.
    double numeric(const IrrAssign& a) const;

    std::string str() const;

  private:
    BigRat frac_;  // reduced to [0,1)
    std::vector<std::pair<uint32_t, BigInt>> irr_;  // sorted by id, coeffs nonzero
    void normalize();
};

}  // namespace polycorr

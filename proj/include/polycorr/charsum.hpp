#pragma once

#include "polycorr/group.hpp"

#include <map>

namespace polycorr {

struct NotIndicator : std::runtime_error {
    explicit NotIndicator(const std::string& what) : std::runtime_error(what) {}
};

/// Finite character combination f(x) = sum_chi coef_chi * chi(x), the
/// function space on which all integrals are closed-form. Coefficients are
/// exact complex scalars; Haar integral = trivial-character coefficient.
class CharSum {
  public:
    explicit CharSum(AbGroup g) : group_(std::move(g)) {}
    static CharSum constant(const AbGroup& g, const ExactCx& c);
    static CharSum character(const AbGroup& g, const CharIndex& chi,
                             const ExactCx& coef = ExactCx::one());

    const AbGroup& group() const { return group_; }
    const std::map<CharIndex, ExactCx>& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }
    ExactCx coefficient(const CharIndex& chi) const;

    CharSum operator+(const CharSum& o) const;
    CharSum operator-(const CharSum& o) const;
    CharSum operator*(const CharSum& o) const;  // pointwise product
    CharSum scaled(const ExactCx& c) const;
    CharSum conj() const;

    /// (T_a f)(x) = f(x + a): each coefficient gains the phase chi(a).
    CharSum translate(const GroupPoint& a) const;

    /// Haar integral (trivial-character coefficient).
    ExactCx integrate() const;
    /// <f, g> = integral of f * conj(g).
    ExactCx inner(const CharSum& o) const { return (*this * o.conj()).integrate(); }
    /// ||f||^2, exact (Parseval).
    ExactCx norm_sq() const;
    double l2_norm_numeric(const IrrAssign& a = {}) const;

    std::complex<double> numeric_eval(const GroupPoint& x, const IrrAssign& a = {}) const;
    ExactCx exact_eval(const GroupPoint& x) const;

    bool is_zero() const;
    bool equals(const CharSum& o) const;
    /// Drop coefficients that are complex-number zero.
    CharSum simplified() const;

    /// Exact test that f is {0,1}-valued: f*f == f.
    bool is_indicator() const { return (*this * *this).equals(*this); }

    void add_term(const CharIndex& chi, const ExactCx& coef);

  private:
    AbGroup group_;
    std::map<CharIndex, ExactCx> terms_;  // canonical indices, formally nonzero coefs
    void require_same_group(const CharSum& o) const;
};

/// f tensor g on the direct product group.
CharSum tensor(const CharSum& f, const CharSum& g);

}  // namespace polycorr

#include "polycorr/exact.hpp"

#include "polycorr/cyclotomic.hpp"

#include <cmath>

namespace polycorr {

namespace {
const double kTau = 6.283185307179586476925286766559;
}

void ExactCx::prune() {
    std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

ExactCx ExactCx::from_rational(const BigRat& c) {
    ExactCx v;
    if (c != 0) v.terms_.emplace(Phase{}, c);
    return v;
}

ExactCx ExactCx::from_gaussian(const BigRat& re, const BigRat& im) {
    ExactCx v = from_rational(re);
    if (im != 0) v.terms_.emplace(Phase::rational(BigRat(1, 4)), im);
    return v;
}

ExactCx ExactCx::unit(const Phase& p) {
    ExactCx v;
    v.terms_.emplace(p, 1);
    return v;
}

ExactCx ExactCx::term(const Phase& p, const BigRat& c) {
    ExactCx v;
    if (c != 0) v.terms_.emplace(p, c);
    return v;
}

ExactCx& ExactCx::operator+=(const ExactCx& o) {
    for (const auto& [p, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ExactCx ExactCx::operator+(const ExactCx& o) const {
    ExactCx v = *this;
    v += o;
    return v;
}

ExactCx ExactCx::operator-() const {
    ExactCx v = *this;
    for (auto& [p, c] : v.terms_) c = -c;
    return v;
}

ExactCx ExactCx::operator-(const ExactCx& o) const { return *this + (-o); }

ExactCx ExactCx::operator*(const ExactCx& o) const {
    ExactCx v;
    for (const auto& [p1, c1] : terms_)
        for (const auto& [p2, c2] : o.terms_) {
            Phase p = p1 + p2;
            auto [it, fresh] = v.terms_.emplace(p, c1 * c2);
            if (!fresh) it->second += c1 * c2;
        }
    v.prune();
    return v;
}

ExactCx ExactCx::conj() const {
    ExactCx v;
    for (const auto& [p, c] : terms_) v.terms_.emplace(-p, c);
    return v;
}

ExactCx ExactCx::scaled(const BigRat& c) const {
    ExactCx v;
    if (c == 0) return v;
    for (const auto& [p, k] : terms_) v.terms_.emplace(p, k * c);
    return v;
}

bool ExactCx::is_zero() const {
    if (terms_.empty()) return true;
    // Terms with distinct formal-irrational parts are independent; the
    // rational-phase sum within each part must vanish cyclotomically.
    std::map<std::vector<std::pair<uint32_t, BigInt>>, std::vector<std::pair<BigRat, BigRat>>> parts;
    for (const auto& [p, c] : terms_) parts[p.irr()].emplace_back(p.frac(), c);
    for (const auto& [irr, sum] : parts)
        if (!rootsum_is_zero(sum)) return false;
    return true;
}

std::optional<BigRat> ExactCx::as_rational() const {
    std::map<std::vector<std::pair<uint32_t, BigInt>>, std::vector<std::pair<BigRat, BigRat>>> parts;
    for (const auto& [p, c] : terms_) parts[p.irr()].emplace_back(p.frac(), c);
    BigRat value = 0;
    for (const auto& [irr, sum] : parts) {
        if (!irr.empty()) {
            if (!rootsum_is_zero(sum)) return std::nullopt;
            continue;
        }
        auto [coords, L] = rootsum_reduce(sum);
        for (size_t i = 1; i < coords.size(); ++i)
            if (coords[i] != 0) return std::nullopt;
        if (!coords.empty()) value = coords[0];
    }
    return value;
}

ExactCx ExactCx::real_part() const {
    return (*this + conj()).scaled(BigRat(1, 2));
}

ExactCx ExactCx::imag_part() const {
    // (v - conj v) * (-i/2)
    return (*this - conj()) * term(Phase::rational(BigRat(3, 4)), BigRat(1, 2));
}

std::complex<double> ExactCx::numeric(const IrrAssign& a) const {
    std::complex<double> z = 0;
    for (const auto& [p, c] : terms_) {
        double t = kTau * p.numeric(a);
        z += to_double(c) * std::complex<double>(std::cos(t), std::sin(t));
    }
    return z;
}

std::string ExactCx::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rat_str(c);
        if (!p.is_zero()) s += "*e(" + p.str() + ")";
    }
    return s;
}

}  // namespace polycorr

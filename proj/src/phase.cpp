#include "polycorr/phase.hpp"

#include <algorithm>
#include <cmath>

namespace polycorr {

void Phase::normalize() {
    frac_ = mod1(frac_);
    std::sort(irr_.begin(), irr_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<uint32_t, BigInt>> out;
    for (auto& [id, c] : irr_) {
        if (!out.empty() && out.back().first == id)
            out.back().second += c;
        else
            out.emplace_back(id, c);
    }
    std::erase_if(out, [](const auto& p) { return p.second == 0; });
    irr_ = std::move(out);
}

Phase Phase::rational(const BigRat& q) {
    Phase p;
    p.frac_ = mod1(q);
    return p;
}

Phase Phase::irrational(uint32_t id, const BigInt& coeff) {
    Phase p;
    if (coeff != 0) p.irr_.emplace_back(id, coeff);
    return p;
}

Phase Phase::operator+(const Phase& o) const {
    Phase r;
    r.frac_ = frac_ + o.frac_;
    r.irr_ = irr_;
    r.irr_.insert(r.irr_.end(), o.irr_.begin(), o.irr_.end());
    r.normalize();
    return r;
}

Phase Phase::operator-() const {
    Phase r;
    r.frac_ = -frac_;
    r.irr_ = irr_;
    for (auto& [id, c] : r.irr_) c = -c;
    r.normalize();
    return r;
}

Phase Phase::operator-(const Phase& o) const { return *this + (-o); }

Phase Phase::scaled(const BigInt& k) const {
    Phase r;
    r.frac_ = frac_ * BigRat(k);
    r.irr_ = irr_;
    for (auto& [id, c] : r.irr_) c *= k;
    r.normalize();
    return r;
}

int Phase::cmp(const Phase& o) const {
    if (frac_ != o.frac_) return frac_ < o.frac_ ? -1 : 1;
    size_t n = std::min(irr_.size(), o.irr_.size());
    for (size_t i = 0; i < n; ++i) {
        if (irr_[i].first != o.irr_[i].first) return irr_[i].first < o.irr_[i].first ? -1 : 1;
        if (irr_[i].second != o.irr_[i].second) return irr_[i].second < o.irr_[i].second ? -1 : 1;
    }
    if (irr_.size() != o.irr_.size()) return irr_.size() < o.irr_.size() ? -1 : 1;
    return 0;
}

double Phase::numeric(const IrrAssign& a) const {
    double x = to_double(frac_);
    for (const auto& [id, c] : irr_) x += to_double(c) * a.get(id);
    x = std::fmod(x, 1.0);
    if (x < 0) x += 1.0;
    return x;
}

std::string Phase::str() const {
    std::string s = rat_str(frac_);
    for (const auto& [id, c] : irr_) {
        s += (c < 0) ? "-" : "+";
        BigInt ac = abs(c);
        if (ac != 1) s += ac.str() + "*";
        s += irr_name(id);
    }
    return s;
}

}  // namespace polycorr

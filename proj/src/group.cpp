#include "polycorr/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace polycorr {

namespace {
long long mod_ll(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}
}  // namespace

AbGroup AbGroup::cyclic_group(long long m) {
    AbGroup g;
    g.cyclic = {m};
    g.validate();
    return g;
}

AbGroup AbGroup::torus(int d, const std::vector<std::string>& irr_names) {
    AbGroup g;
    g.torus_dim = d;
    for (const auto& n : irr_names) g.irrationals.push_back(irr_intern(n));
    g.validate();
    return g;
}

AbGroup AbGroup::direct_product(const AbGroup& a, const AbGroup& b) {
    AbGroup g;
    g.cyclic = a.cyclic;
    g.cyclic.insert(g.cyclic.end(), b.cyclic.begin(), b.cyclic.end());
    g.torus_dim = a.torus_dim + b.torus_dim;
    g.irrationals = a.irrationals;
    for (auto id : b.irrationals)
        if (std::find(g.irrationals.begin(), g.irrationals.end(), id) == g.irrationals.end())
            g.irrationals.push_back(id);
    return g;
}

AbGroup AbGroup::power(const AbGroup& g, int d) {
    AbGroup out;
    out.irrationals = g.irrationals;
    out.torus_dim = g.torus_dim * d;
    for (int i = 0; i < d; ++i)
        out.cyclic.insert(out.cyclic.end(), g.cyclic.begin(), g.cyclic.end());
    return out;
}

bool AbGroup::is_trivial() const {
    return torus_dim == 0 &&
           std::all_of(cyclic.begin(), cyclic.end(), [](long long m) { return m == 1; });
}

BigInt AbGroup::order() const {
    if (!is_finite()) throw std::logic_error("order() of a group with torus factors");
    BigInt n = 1;
    for (long long m : cyclic) n *= m;
    return n;
}

void AbGroup::validate() const {
    for (long long m : cyclic)
        if (m < 1) throw std::invalid_argument("cyclic order must be >= 1");
    if (torus_dim < 0) throw std::invalid_argument("negative torus dimension");
}

bool CharIndex::operator<(const CharIndex& o) const {
    if (cyc != o.cyc) return cyc < o.cyc;
    return tor < o.tor;
}

bool CharIndex::is_trivial() const {
    return std::all_of(cyc.begin(), cyc.end(), [](long long v) { return v == 0; }) &&
           std::all_of(tor.begin(), tor.end(), [](long long v) { return v == 0; });
}

namespace {
void check_index(const AbGroup& g, const CharIndex& chi) {
    if (chi.cyc.size() != g.cyclic.size() || chi.tor.size() != static_cast<size_t>(g.torus_dim))
        throw std::invalid_argument("character index does not match group shape");
}
void check_point(const AbGroup& g, const GroupPoint& x) {
    if (x.cyc.size() != g.cyclic.size() || x.tor.size() != static_cast<size_t>(g.torus_dim))
        throw std::invalid_argument("group point does not match group shape");
}
}  // namespace

CharIndex canonical_index(const AbGroup& g, CharIndex chi) {
    check_index(g, chi);
    for (size_t j = 0; j < chi.cyc.size(); ++j) chi.cyc[j] = mod_ll(chi.cyc[j], g.cyclic[j]);
    return chi;
}

CharIndex zero_index(const AbGroup& g) {
    CharIndex chi;
    chi.cyc.assign(g.cyclic.size(), 0);
    chi.tor.assign(g.torus_dim, 0);
    return chi;
}

CharIndex add_index(const AbGroup& g, const CharIndex& a, const CharIndex& b) {
    check_index(g, a);
    check_index(g, b);
    CharIndex r = a;
    for (size_t j = 0; j < r.cyc.size(); ++j) r.cyc[j] = mod_ll(r.cyc[j] + b.cyc[j], g.cyclic[j]);
    for (size_t j = 0; j < r.tor.size(); ++j) r.tor[j] += b.tor[j];
    return r;
}

CharIndex neg_index(const AbGroup& g, const CharIndex& a) {
    check_index(g, a);
    CharIndex r = a;
    for (size_t j = 0; j < r.cyc.size(); ++j) r.cyc[j] = mod_ll(-r.cyc[j], g.cyclic[j]);
    for (size_t j = 0; j < r.tor.size(); ++j) r.tor[j] = -r.tor[j];
    return r;
}

CharIndex scale_index(const AbGroup& g, const BigInt& c, const CharIndex& a) {
    check_index(g, a);
    CharIndex r = a;
    for (size_t j = 0; j < r.cyc.size(); ++j) {
        BigInt v = c % g.cyclic[j];
        r.cyc[j] = mod_ll(v.convert_to<long long>() * r.cyc[j], g.cyclic[j]);
    }
    for (size_t j = 0; j < r.tor.size(); ++j) r.tor[j] = to_ll(c * r.tor[j]);
    return r;
}

GroupPoint zero_point(const AbGroup& g) {
    GroupPoint x;
    x.cyc.assign(g.cyclic.size(), 0);
    x.tor.assign(g.torus_dim, Phase{});
    return x;
}

GroupPoint canonical_point(const AbGroup& g, GroupPoint x) {
    check_point(g, x);
    for (size_t j = 0; j < x.cyc.size(); ++j) x.cyc[j] = mod_ll(x.cyc[j], g.cyclic[j]);
    return x;
}

GroupPoint add_point(const AbGroup& g, const GroupPoint& a, const GroupPoint& b) {
    check_point(g, a);
    check_point(g, b);
    GroupPoint r = a;
    for (size_t j = 0; j < r.cyc.size(); ++j) r.cyc[j] = mod_ll(r.cyc[j] + b.cyc[j], g.cyclic[j]);
    for (size_t j = 0; j < r.tor.size(); ++j) r.tor[j] = r.tor[j] + b.tor[j];
    return r;
}

GroupPoint neg_point(const AbGroup& g, const GroupPoint& a) {
    check_point(g, a);
    GroupPoint r = a;
    for (size_t j = 0; j < r.cyc.size(); ++j) r.cyc[j] = mod_ll(-r.cyc[j], g.cyclic[j]);
    for (size_t j = 0; j < r.tor.size(); ++j) r.tor[j] = -r.tor[j];
    return r;
}

GroupPoint scale_point(const AbGroup& g, const BigInt& n, const GroupPoint& a) {
    check_point(g, a);
    GroupPoint r = a;
    for (size_t j = 0; j < r.cyc.size(); ++j) {
        BigInt v = (n % g.cyclic[j]) * r.cyc[j];
        r.cyc[j] = mod_ll(v.convert_to<long long>(), g.cyclic[j]);
    }
    for (size_t j = 0; j < r.tor.size(); ++j) r.tor[j] = r.tor[j].scaled(n);
    return r;
}

Phase char_eval(const AbGroup& g, const CharIndex& chi, const GroupPoint& x) {
    check_index(g, chi);
    check_point(g, x);
    BigRat frac = 0;
    for (size_t j = 0; j < chi.cyc.size(); ++j)
        if (chi.cyc[j] != 0 && x.cyc[j] != 0)
            frac += BigRat(BigInt(chi.cyc[j]) * x.cyc[j], BigInt(g.cyclic[j]));
    Phase p = Phase::rational(frac);
    for (size_t j = 0; j < chi.tor.size(); ++j)
        if (chi.tor[j] != 0) p = p + x.tor[j].scaled(chi.tor[j]);
    return p;
}

GroupPoint concat_points(const std::vector<GroupPoint>& xs) {
    GroupPoint r;
    for (const auto& x : xs) {
        r.cyc.insert(r.cyc.end(), x.cyc.begin(), x.cyc.end());
        r.tor.insert(r.tor.end(), x.tor.begin(), x.tor.end());
    }
    return r;
}

CharIndex concat_indices(const std::vector<CharIndex>& chis) {
    CharIndex r;
    for (const auto& c : chis) {
        r.cyc.insert(r.cyc.end(), c.cyc.begin(), c.cyc.end());
        r.tor.insert(r.tor.end(), c.tor.begin(), c.tor.end());
    }
    return r;
}

CharIndex index_component(const AbGroup& base, const CharIndex& chi, int i) {
    CharIndex r;
    const size_t nc = base.cyclic.size(), nt = base.torus_dim;
    r.cyc.assign(chi.cyc.begin() + i * nc, chi.cyc.begin() + (i + 1) * nc);
    r.tor.assign(chi.tor.begin() + i * nt, chi.tor.begin() + (i + 1) * nt);
    return r;
}

std::vector<GroupPoint> enumerate_points(const AbGroup& g) {
    if (!g.is_finite()) throw std::logic_error("enumerate_points needs a finite group");
    std::vector<GroupPoint> out;
    BigInt n = g.order();
    if (n > 1'000'000) throw std::invalid_argument("group too large to enumerate");
    out.reserve(n.convert_to<size_t>());
    GroupPoint x = zero_point(g);
    while (true) {
        out.push_back(x);
        size_t j = 0;
        for (; j < g.cyclic.size(); ++j) {
            if (++x.cyc[j] < g.cyclic[j]) break;
            x.cyc[j] = 0;
        }
        if (j == g.cyclic.size()) break;
    }
    return out;
}

size_t point_ordinal(const AbGroup& g, const GroupPoint& x) {
    size_t ord = 0, stride = 1;
    for (size_t j = 0; j < g.cyclic.size(); ++j) {
        ord += stride * static_cast<size_t>(mod_ll(x.cyc[j], g.cyclic[j]));
        stride *= static_cast<size_t>(g.cyclic[j]);
    }
    return ord;
}

}  // namespace polycorr

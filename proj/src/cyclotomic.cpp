#include "polycorr/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace polycorr {

namespace {

constexpr unsigned long kMaxOrder = 1u << 16;

// Exact division of integer polynomials, divisor monic. a := a / b.
std::vector<BigInt> divide_monic(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("cyclotomic division underflow");
    std::vector<BigInt> q(a.size() - db);
    for (size_t i = a.size(); i-- > db;) {
        BigInt c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (size_t j = 0; j < db; ++j)
        if (a[j] != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

std::vector<BigInt> compute_cyclotomic(unsigned long L) {
    // x^L - 1 divided by Phi_d for every proper divisor d of L.
    std::vector<BigInt> p(L + 1);
    p[0] = -1;
    p[L] = 1;
    for (unsigned long d = 1; d < L; ++d)
        if (L % d == 0) p = divide_monic(std::move(p), cyclotomic_poly(d));
    return p;
}

std::mutex g_mu;
std::map<unsigned long, std::vector<BigInt>> g_cache;

}  // namespace

const std::vector<BigInt>& cyclotomic_poly(unsigned long L) {
    if (L == 0 || L > kMaxOrder) throw std::invalid_argument("cyclotomic order out of range");
    {
        std::lock_guard<std::mutex> lock(g_mu);
        auto it = g_cache.find(L);
        if (it != g_cache.end()) return it->second;
    }
    auto poly = compute_cyclotomic(L);
    std::lock_guard<std::mutex> lock(g_mu);
    return g_cache.emplace(L, std::move(poly)).first->second;
}

std::pair<std::vector<BigRat>, unsigned long> rootsum_reduce(
    const std::vector<std::pair<BigRat, BigRat>>& terms) {
    BigInt lcm = 1;
    for (const auto& [q, c] : terms) lcm = lcm_ll(lcm, rat_den(q));
    if (lcm > kMaxOrder) throw std::invalid_argument("phase denominator too large for exact test");
    const unsigned long L = lcm.convert_to<unsigned long>();

    std::vector<BigRat> p(L);
    for (const auto& [q, c] : terms) {
        BigInt e = rat_num(mod1(q)) * (L / rat_den(q).convert_to<unsigned long>());
        p[e.convert_to<unsigned long>()] += c;
    }

    const auto& phi = cyclotomic_poly(L);
    const size_t dphi = phi.size() - 1;
    for (size_t i = p.size(); i-- > dphi;) {
        BigRat c = p[i];
        if (c == 0) continue;
        for (size_t j = 0; j <= dphi; ++j) p[i - dphi + j] -= c * BigRat(phi[j]);
    }
    p.resize(dphi);
    return {std::move(p), L};
}

bool rootsum_is_zero(const std::vector<std::pair<BigRat, BigRat>>& terms) {
    if (terms.empty()) return true;
    if (terms.size() == 1) return terms[0].second == 0;
    auto [coords, L] = rootsum_reduce(terms);
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

}  // namespace polycorr

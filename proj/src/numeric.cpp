#include "polycorr/numeric.hpp"

#include <charconv>

namespace polycorr {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial_ext(const BigInt& n, unsigned k) {
    BigInt num = 1;
    for (unsigned i = 0; i < k; ++i) num *= (n - i);
    return num / factorial(k);  // exact: k! divides any product of k consecutive integers
}

BigInt rat_floor(const BigRat& q) {
    BigInt n = rat_num(q), d = rat_den(q);  // d > 0 canonical
    BigInt f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

BigRat mod1(const BigRat& q) {
    BigRat r = q - BigRat(rat_floor(q));
    return r;
}

bool is_integer(const BigRat& q) { return rat_den(q) == 1; }

double to_double(const BigRat& q) { return q.convert_to<double>(); }
double to_double(const BigInt& n) { return n.convert_to<double>(); }

long long to_ll(const BigInt& n) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi) throw std::overflow_error("integer does not fit in 64 bits");
    return n.convert_to<long long>();
}

std::string rat_str(const BigRat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) {
        s += '/';
        s += rat_den(q).str();
    }
    return s;
}

BigRat rat_parse(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("bad rational: '" + std::string(s) + "'"); };
    size_t slash = s.find('/');
    auto parse_int = [&](std::string_view t) -> BigInt {
        if (t.empty()) bad();
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) bad();
        for (size_t j = i; j < t.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(t[j]))) bad();
        return BigInt(std::string(t));
    };
    if (slash == std::string_view::npos) return BigRat(parse_int(s));
    BigInt n = parse_int(s.substr(0, slash));
    BigInt d = parse_int(s.substr(slash + 1));
    if (d == 0) bad();
    return BigRat(n, d);
}

BigInt lcm_ll(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

}  // namespace polycorr

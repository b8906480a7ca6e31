#include "polycorr/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace polycorr {

namespace {

void trim_trailing(std::vector<BigInt>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

// Standard-basis coefficients of C(n, j), ascending.
std::vector<BigRat> binom_standard(unsigned j) {
    std::vector<BigRat> poly{1};
    for (unsigned t = 0; t < j; ++t) {
        // poly *= (n - t)
        std::vector<BigRat> next(poly.size() + 1);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * BigRat(t);
        }
        poly = std::move(next);
    }
    BigRat inv(1, factorial(j));
    for (auto& c : poly) c *= inv;
    return poly;
}

BigRat eval_standard(const std::vector<BigRat>& a, const BigInt& n) {
    BigRat v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * BigRat(n) + a[i];
    return v;
}

}  // namespace

IntPolynomial IntPolynomial::from_binomial(std::vector<BigInt> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0);
    trim_trailing(coeffs);
    IntPolynomial p;
    p.coeffs_ = std::move(coeffs);
    return p;
}

IntPolynomial IntPolynomial::from_rational_coeffs(const std::vector<BigRat>& standard) {
    std::vector<BigRat> a = standard;
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    if (a.empty()) a.push_back(0);
    const size_t d = a.size() - 1;
    // forward-difference table: c_i = Delta^i p(0)
    std::vector<BigRat> row(d + 1);
    for (size_t j = 0; j <= d; ++j) row[j] = eval_standard(a, BigInt(j));
    std::vector<BigInt> c;
    for (size_t i = 0; i <= d; ++i) {
        if (!is_integer(row[0]))
            throw NotIntegerValued("binomial coefficient c_" + std::to_string(i) + " = " +
                                   rat_str(row[0]) + " is not an integer");
        c.push_back(rat_num(row[0]));
        for (size_t j = 0; j + 1 < row.size(); ++j) row[j] = row[j + 1] - row[j];
        row.pop_back();
    }
    return from_binomial(std::move(c));
}

BigInt IntPolynomial::evaluate(const BigInt& n) const {
    BigInt v = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) v += coeffs_[i] * binomial_ext(n, static_cast<unsigned>(i));
    return v;
}

IntPolynomial IntPolynomial::compose_affine(const BigInt& s, const BigInt& r) const {
    const size_t d = coeffs_.size() - 1;
    std::vector<BigInt> row(d + 1);
    for (size_t j = 0; j <= d; ++j) row[j] = evaluate(s * j + r);
    std::vector<BigInt> c;
    for (size_t i = 0; i <= d; ++i) {
        c.push_back(row[0]);
        for (size_t j = 0; j + 1 < row.size(); ++j) row[j] = row[j + 1] - row[j];
        row.pop_back();
    }
    return from_binomial(std::move(c));
}

std::vector<BigRat> IntPolynomial::standard_coeffs() const {
    std::vector<BigRat> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        auto b = binom_standard(static_cast<unsigned>(i));
        for (size_t j = 0; j < b.size(); ++j) out[j] += BigRat(coeffs_[i]) * b[j];
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::string IntPolynomial::str() const {
    std::string s = "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += coeffs_[i].str();
    }
    return s + "]";
}

PolyFamily::PolyFamily(std::vector<IntPolynomial> polys) : polys_(std::move(polys)) {
    if (polys_.empty()) throw std::invalid_argument("polynomial family must be nonempty");
}

unsigned PolyFamily::max_degree() const {
    unsigned d = 0;
    for (const auto& p : polys_) d = std::max(d, p.degree());
    return d;
}

bool PolyFamily::vanishes_at_zero() const {
    return std::all_of(polys_.begin(), polys_.end(),
                       [](const IntPolynomial& p) { return p.vanishes_at_zero(); });
}

std::string PolyFamily::str() const {
    std::string s = "{";
    for (size_t i = 0; i < polys_.size(); ++i) {
        if (i) s += "; ";
        s += polys_[i].str();
    }
    return s + "}";
}

namespace {

// Rows: binomial coefficients of each member at indices 1..d.
std::vector<std::vector<BigRat>> restricted_rows(const PolyFamily& fam) {
    const unsigned d = std::max(fam.max_degree(), 1u);
    std::vector<std::vector<BigRat>> rows;
    for (const auto& p : fam.polys()) {
        std::vector<BigRat> row(d);
        for (size_t i = 1; i < p.coeffs().size(); ++i) row[i - 1] = BigRat(p.coeffs()[i]);
        rows.push_back(std::move(row));
    }
    return rows;
}

size_t rank_of(std::vector<std::vector<BigRat>> m) {
    size_t rank = 0;
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            BigRat f = m[r][col] / m[rank][col];
            for (size_t cc = col; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

bool is_rationally_independent(const PolyFamily& fam) {
    return rank_of(restricted_rows(fam)) == fam.k();
}

std::optional<std::vector<BigInt>> dependence_witness(const PolyFamily& fam) {
    // Kernel vector of the row matrix: Gauss-Jordan on the transpose system.
    auto rows = restricted_rows(fam);
    const size_t k = rows.size();
    const size_t d = rows[0].size();
    // Solve lambda^T * rows = 0: columns of `rows` give equations over lambda.
    std::vector<std::vector<BigRat>> eq(d, std::vector<BigRat>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < d; ++j) eq[j][i] = rows[i][j];

    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < k && rank < d; ++col) {
        size_t piv = rank;
        while (piv < d && eq[piv][col] == 0) ++piv;
        if (piv == d) continue;
        std::swap(eq[rank], eq[piv]);
        BigRat lead = eq[rank][col];
        for (auto& x : eq[rank]) x /= lead;
        for (size_t r = 0; r < d; ++r) {
            if (r == rank || eq[r][col] == 0) continue;
            BigRat f = eq[r][col];
            for (size_t cc = 0; cc < k; ++cc) eq[r][cc] -= f * eq[rank][cc];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank == k) return std::nullopt;

    // Free column -> kernel vector with that entry 1.
    size_t free_col = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
    std::vector<BigRat> lambda(k);
    lambda[free_col] = 1;
    for (size_t r = 0; r < rank; ++r) lambda[pivot_col[r]] = -eq[r][free_col];

    BigInt den = 1;
    for (const auto& x : lambda) den = lcm_ll(den, rat_den(x));
    std::vector<BigInt> out(k);
    for (size_t i = 0; i < k; ++i) out[i] = rat_num(lambda[i] * BigRat(den));
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("polynomial parse error at index " + std::to_string(i) + ": " + msg);
    }
    BigInt integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return BigInt(std::string(s.substr(start, i - start)));
    }
};

// One additive term -> standard-basis coefficients added into `acc`.
void parse_term(Cursor& cur, int sign, std::vector<BigRat>& acc) {
    BigRat coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        coeff = BigRat(cur.integer());
        have_coeff = true;
        if (cur.eat('/')) coeff /= BigRat(cur.integer());
        cur.eat('*');
    }
    std::vector<BigRat> var{1};  // standard coeffs of the variable part
    char c = cur.peek();
    if (c == 'n') {
        ++cur.i;
        unsigned e = 1;
        if (cur.eat('^')) e = static_cast<unsigned>(cur.integer().convert_to<unsigned long>());
        var.assign(e + 1, BigRat(0));
        var[e] = 1;
    } else if (c == 'C') {
        ++cur.i;
        if (!cur.eat('(')) cur.fail("expected '(' after C");
        if (cur.peek() != 'n') cur.fail("expected n in C(n,j)");
        ++cur.i;
        if (!cur.eat(',')) cur.fail("expected ',' in C(n,j)");
        unsigned j = static_cast<unsigned>(cur.integer().convert_to<unsigned long>());
        if (!cur.eat(')')) cur.fail("expected ')' in C(n,j)");
        var = binom_standard(j);
    } else if (!have_coeff) {
        cur.fail("expected term");
    }
    if (cur.eat('/')) coeff /= BigRat(cur.integer());
    if (acc.size() < var.size()) acc.resize(var.size());
    for (size_t i = 0; i < var.size(); ++i) acc[i] += BigRat(sign) * coeff * var[i];
}

IntPolynomial parse_expression(std::string_view text) {
    Cursor cur{text};
    std::vector<BigRat> acc{BigRat(0)};
    int sign = 1;
    if (cur.eat('-')) sign = -1;
    parse_term(cur, sign, acc);
    while (!cur.eof()) {
        if (cur.eat('+'))
            sign = 1;
        else if (cur.eat('-'))
            sign = -1;
        else
            cur.fail("expected '+' or '-'");
        parse_term(cur, sign, acc);
    }
    return IntPolynomial::from_rational_coeffs(acc);
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') --depth;
        if (s[i] == sep && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
    std::string_view s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    if (s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unterminated '['");
        std::vector<BigInt> c;
        for (auto part : split_top_level(s.substr(1, s.size() - 2), ',')) {
            part = strip(part);
            BigRat q = rat_parse(part);
            if (!is_integer(q))
                throw std::invalid_argument("binomial coefficients must be integers");
            c.push_back(rat_num(q));
        }
        return IntPolynomial::from_binomial(std::move(c));
    }
    if (s.find('n') != std::string_view::npos || s.find('C') != std::string_view::npos)
        return parse_expression(s);
    std::vector<BigRat> a;
    for (auto part : split_top_level(s, ',')) a.push_back(rat_parse(strip(part)));
    return IntPolynomial::from_rational_coeffs(a);
}

PolyFamily parse_family(std::string_view text) {
    std::string_view s = strip(text);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw std::invalid_argument("unterminated '{'");
        s = strip(s.substr(1, s.size() - 2));
    }
    if (s.empty()) throw std::invalid_argument("empty polynomial family");
    char sep = (s.find(';') != std::string_view::npos) ? ';' : ',';
    std::vector<IntPolynomial> polys;
    for (auto part : split_top_level(s, sep)) polys.push_back(parse_polynomial(strip(part)));
    return PolyFamily(std::move(polys));
}

}  // namespace polycorr

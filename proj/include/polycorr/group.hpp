#pragma once

#include "polycorr/exact.hpp"

#include <string>
#include <vector>

namespace polycorr {

/// Product of finite cyclic groups and a torus: Z_{m_1} x ... x Z_{m_r} x T^d.
/// Torus coordinates may carry the listed formal irrationals.
struct AbGroup {
    std::vector<long long> cyclic;      // orders m_j >= 1
    int torus_dim = 0;
    std::vector<uint32_t> irrationals;  // interned symbol ids

    static AbGroup cyclic_group(long long m);
    static AbGroup torus(int d, const std::vector<std::string>& irr_names);
    static AbGroup direct_product(const AbGroup& a, const AbGroup& b);
    static AbGroup power(const AbGroup& g, int d);

    bool is_finite() const { return torus_dim == 0; }
    bool is_trivial() const;
    BigInt order() const;  // finite groups only

    bool operator==(const AbGroup& o) const = default;
    void validate() const;
};

/// Character index: one residue per cyclic factor, one integer per torus
/// dimension.
struct CharIndex {
    std::vector<long long> cyc;
    std::vector<long long> tor;

    bool operator==(const CharIndex& o) const = default;
    bool operator<(const CharIndex& o) const;
    bool is_trivial() const;
};

CharIndex canonical_index(const AbGroup& g, CharIndex chi);
CharIndex zero_index(const AbGroup& g);
CharIndex add_index(const AbGroup& g, const CharIndex& a, const CharIndex& b);
CharIndex neg_index(const AbGroup& g, const CharIndex& a);
CharIndex scale_index(const AbGroup& g, const BigInt& c, const CharIndex& a);

/// Group element: cyclic residues plus exact torus coordinates.
struct GroupPoint {
    std::vector<long long> cyc;
    std::vector<Phase> tor;

    bool operator==(const GroupPoint& o) const = default;
};

GroupPoint zero_point(const AbGroup& g);
GroupPoint canonical_point(const AbGroup& g, GroupPoint x);
GroupPoint add_point(const AbGroup& g, const GroupPoint& a, const GroupPoint& b);
GroupPoint neg_point(const AbGroup& g, const GroupPoint& a);
GroupPoint scale_point(const AbGroup& g, const BigInt& n, const GroupPoint& a);

/// Exact phase of chi(x).
Phase char_eval(const AbGroup& g, const CharIndex& chi, const GroupPoint& x);

/// Concatenations for product/power groups.
GroupPoint concat_points(const std::vector<GroupPoint>& xs);
CharIndex concat_indices(const std::vector<CharIndex>& chis);
/// The i-th copy's component of an index on power(g, d).
CharIndex index_component(const AbGroup& base, const CharIndex& chi, int i);

/// All elements of a finite group, mixed-radix order; index_of inverts it.
std::vector<GroupPoint> enumerate_points(const AbGroup& g);
size_t point_ordinal(const AbGroup& g, const GroupPoint& x);

}  // namespace polycorr

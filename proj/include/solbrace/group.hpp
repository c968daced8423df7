#ifndef SOLBRACE_GROUP_HPP
#define SOLBRACE_GROUP_HPP

#include <numeric>
#include <string>
#include <vector>

#include "solbrace/errors.hpp"

namespace solbrace {

// A finite group given by a dense multiplication table over indices 0..n-1.
// Instances are immutable once built; make_group is the only sanctioned way
// to construct one and it rejects anything that is not a group.
struct FiniteGroup {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<int> table;  // flat n*n, table[a*n+b] = a*b
    int identity = 0;
    std::vector<int> inv;

    int mul(int a, int b) const { return table[a * n + b]; }
    int inverse(int a) const { return inv[a]; }
    int conj(int a, int g) const {  // g^-1 a g
        return mul(mul(inv[g], a), g);
    }
    int comm(int a, int b) const {  // [a,b] = a^-1 b^-1 a b
        return mul(mul(inv[a], inv[b]), mul(a, b));
    }
    int pow(int a, int k) const {
        int r = identity;
        for (int i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }
    int element_order(int a) const {
        int r = a, o = 1;
        while (r != identity) {
            r = mul(r, a);
            ++o;
        }
        return o;
    }
    bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }
};

namespace detail {

inline void validate_table(const std::vector<std::vector<int>>& rows, int n) {
    if (n == 0) throw ParseError("empty multiplication table");
    if (static_cast<int>(rows.size()) != n)
        throw ParseError("table has " + std::to_string(rows.size()) +
                         " rows, expected " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw ParseError("row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j)
            if (rows[i][j] < 0 || rows[i][j] >= n)
                throw ParseError("entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") out of range");
    }
}

}  // namespace detail

// Builds a FiniteGroup after checking every group axiom on the table.
// All checks are exhaustive; the associativity pass is O(n^3) which is fine
// at the orders this library works with.
inline FiniteGroup make_group(std::vector<std::string> labels,
                              const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    detail::validate_table(rows, n);
    if (labels.empty()) {
        labels.resize(n);
        for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
    }
    if (static_cast<int>(labels.size()) != n)
        throw ParseError("label count does not match table size");

    // Latin square: every row and column is a permutation.
    for (int i = 0; i < n; ++i) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int j = 0; j < n; ++j) {
            if (seen_row[rows[i][j]]++) throw NotLatinSquare(i, j);
            if (seen_col[rows[j][i]]++) throw NotLatinSquare(j, i);
        }
    }

    // Two-sided identity.
    int e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            ok = rows[i][j] == j && rows[j][i] == j;
        if (ok) e = i;
    }
    if (e < 0) throw NoIdentity();

    FiniteGroup g;
    g.n = n;
    g.labels = std::move(labels);
    g.identity = e;
    g.table.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.table[i * n + j] = rows[i][j];

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
                    throw NotAssociative(i, j, k);

    g.inv.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (g.mul(i, j) == e && g.mul(j, i) == e) {
                g.inv[i] = j;
                break;
            }
        if (g.inv[i] < 0) throw NoInverse(i);
    }
    return g;
}

inline FiniteGroup make_group(const std::vector<std::vector<int>>& rows) {
    return make_group({}, rows);
}

// Multiset of element orders, as counts[d] = number of elements of order d.
// Cheap isomorphism invariant used all over the test and search code.
inline std::vector<int> order_profile(const FiniteGroup& g) {
    std::vector<int> counts(g.n + 1, 0);
    for (int i = 0; i < g.n; ++i) ++counts[g.element_order(i)];
    return counts;
}

inline bool is_abelian(const FiniteGroup& g) {
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.mul(i, j) != g.mul(j, i)) return false;
    return true;
}

// Direct product with pair labels; index of (a, b) is a*|G2| + b.
inline FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
    const int n = g1.n * g2.n;
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < g1.n; ++a)
        for (int b = 0; b < g2.n; ++b)
            labels[a * g2.n + b] = "(" + g1.labels[a] + "," + g2.labels[b] + ")";
    for (int a = 0; a < g1.n; ++a)
        for (int b = 0; b < g2.n; ++b)
            for (int c = 0; c < g1.n; ++c)
                for (int d = 0; d < g2.n; ++d)
                    rows[a * g2.n + b][c * g2.n + d] =
                        g1.mul(a, c) * g2.n + g2.mul(b, d);
    return make_group(std::move(labels), rows);
}

inline std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline int p_part(int n, int p) {
    int q = 1;
    while (n % p == 0) {
        n /= p;
        q *= p;
    }
    return q;
}

}  // namespace solbrace

#endif

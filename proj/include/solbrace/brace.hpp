#ifndef SOLBRACE_BRACE_HPP
#define SOLBRACE_BRACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "solbrace/certificate.hpp"
#include "solbrace/perm.hpp"
#include "solbrace/subgroup.hpp"

namespace solbrace {

// Two group structures on one carrier, linked by the left brace law
//   a*(b+c) = a*b - a + a*c
// (written with * for the multiplicative and + for the additive operation).
// Both tables are validated as groups with the same identity, and the law
// is checked on every triple when the brace is built.
struct SkewBrace {
    FiniteGroup add;
    FiniteGroup mul;

    int n() const { return add.n; }
    int identity() const { return add.identity; }
    const std::vector<std::string>& labels() const { return add.labels; }

    int plus(int a, int b) const { return add.mul(a, b); }
    int neg(int a) const { return add.inv[a]; }
    int times(int a, int b) const { return mul.mul(a, b); }
    int lambda(int a, int b) const {  // -a + a*b
        return plus(neg(a), times(a, b));
    }
    int lambda_inv(int a, int b) const {  // the unique c with lambda(a,c)=b
        return mul.mul(mul.inv[a], plus(a, b));
    }
};

inline SkewBrace make_skew_brace(std::vector<std::string> labels,
                                 const std::vector<std::vector<int>>& add_rows,
                                 const std::vector<std::vector<int>>& mul_rows) {
    SkewBrace b;
    b.add = make_group(labels, add_rows);
    b.mul = make_group(std::move(labels), mul_rows);
    if (b.add.identity != b.mul.identity)
        throw IdentityMismatch(b.add.identity, b.mul.identity);
    const int n = b.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lhs = b.times(x, b.plus(y, z));
                int rhs = b.plus(b.plus(b.times(x, y), b.neg(x)), b.times(x, z));
                if (lhs != rhs) throw CompatibilityFailure(x, y, z);
            }
    return b;
}

inline std::vector<std::vector<int>> table_rows(const FiniteGroup& g) {
    std::vector<std::vector<int>> rows(g.n, std::vector<int>(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) rows[i][j] = g.mul(i, j);
    return rows;
}

// Both operations equal: a + b = a * b. Valid for any group.
inline SkewBrace trivial_brace(const FiniteGroup& g) {
    auto rows = table_rows(g);
    return make_skew_brace(g.labels, rows, rows);
}

// lambda_a as a map on the additive group. The brace law makes each of
// these an automorphism of (B,+); callers can check via is_homomorphism.
inline GroupMap lambda_of(const SkewBrace& b, int a) {
    GroupMap m;
    m.source = &b.add;
    m.target = &b.add;
    m.images.resize(b.n());
    for (int x = 0; x < b.n(); ++x) m.images[x] = b.lambda(a, x);
    return m;
}

// Elements acting trivially through lambda, as a subgroup of (B,*).
inline Subgroup kernel(const SkewBrace& b) {
    Subgroup k;
    k.parent = &b.mul;
    for (int a = 0; a < b.n(); ++a) {
        bool fixes = true;
        for (int x = 0; x < b.n(); ++x)
            if (b.lambda(a, x) != x) {
                fixes = false;
                break;
            }
        if (fixes) k.members.push_back(a);
    }
    if (!subgroup_generated(b.mul, k.members).same_as(k))
        throw Error("kernel member set is not a subgroup");
    return k;
}

// Subset closed under both operations. Finite closure under each group
// operation implies closure under both inverses.
inline bool is_subbrace(const SkewBrace& b, const std::vector<int>& members) {
    std::vector<char> in(b.n(), 0);
    for (int x : members) in[x] = 1;
    if (!in[b.identity()]) return false;
    for (int x : members)
        for (int y : members)
            if (!in[b.plus(x, y)] || !in[b.times(x, y)]) return false;
    return true;
}

// Kernel elements that are additively central: exactly the a with
// a*b = a+b = b+a for every b. Always a subbrace; that is re-checked here.
inline Subgroup socle(const SkewBrace& b) {
    Subgroup ker = kernel(b);
    Subgroup zadd = center(b.add);
    Subgroup s;
    s.parent = &b.mul;
    for (int a : ker.members)
        if (zadd.contains(a)) s.members.push_back(a);
    if (!is_subbrace(b, s.members))
        throw Error("socle failed its subbrace check");
    return s;
}

// A group acting on the carrier by permutations, one per actor element.
struct BraceAction {
    const FiniteGroup* actor = nullptr;
    std::vector<Perm> perm_of;
};

struct EquivarianceReport {
    std::vector<Certificate> items;
    bool all_pass() const { return ::solbrace::all_pass(items); }
};

// Verifies that every action permutation preserves both brace operations.
// Witness collection stops after max_witnesses failures.
inline EquivarianceReport check_equivariant(const SkewBrace& b,
                                            const BraceAction& act,
                                            int max_witnesses = 10) {
    EquivarianceReport rep;
    int failures = 0;
    for (int gidx = 0; gidx < act.actor->n; ++gidx) {
        const Perm& f = act.perm_of[gidx];
        std::string bad;
        for (int x = 0; x < b.n() && bad.empty(); ++x)
            for (int y = 0; y < b.n(); ++y) {
                if (f[b.plus(x, y)] != b.plus(f[x], f[y])) {
                    bad = "+ at (" + b.labels()[x] + ", " + b.labels()[y] + ")";
                    break;
                }
                if (f[b.times(x, y)] != b.times(f[x], f[y])) {
                    bad = "* at (" + b.labels()[x] + ", " + b.labels()[y] + ")";
                    break;
                }
            }
        if (!bad.empty() && ++failures > max_witnesses) break;
        rep.items.push_back({"actor " + act.actor->labels[gidx] +
                                 " preserves both operations",
                             bad.empty(), bad});
    }
    return rep;
}

// Additive-group shape: abelian braces are the classical involutive case,
// a nilpotent additive group is the wider class this library targets.
struct BraceType {
    bool abelian_additive = false;
    std::optional<int> additive_class;

    bool nilpotent_additive() const { return additive_class.has_value(); }
    std::string describe() const {
        if (abelian_additive) return "abelian additive group";
        if (additive_class)
            return "nilpotent additive group of class " +
                   std::to_string(*additive_class);
        return "non-nilpotent additive group";
    }
};

inline BraceType brace_type(const SkewBrace& b) {
    BraceType t;
    t.abelian_additive = is_abelian(b.add);
    t.additive_class = nilpotency_class(full_subgroup(b.add));
    return t;
}

}  // namespace solbrace

#endif

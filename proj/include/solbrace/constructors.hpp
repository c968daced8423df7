#ifndef SOLBRACE_CONSTRUCTORS_HPP
#define SOLBRACE_CONSTRUCTORS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "solbrace/brace.hpp"
#include "solbrace/errors.hpp"
#include "solbrace/group.hpp"
#include "solbrace/isomorphism.hpp"
#include "solbrace/perm.hpp"
#include "solbrace/q8.hpp"
#include "solbrace/soluble.hpp"
#include "solbrace/subgroup.hpp"

namespace solbrace {

// A subgroup of some ambient group together with a brace structure on it.
// Brace carrier index i corresponds to factor.members[i]; members are
// sorted ascending, matching the as_group labelling.
struct FactorStructure {
    Subgroup factor;
    SkewBrace brace;
};

struct BraceBuild {
    SkewBrace brace;
    std::vector<Certificate> certificates;

    bool all_pass() const { return ::solbrace::all_pass(certificates); }
};

namespace detail {

// position of each parent index within a sorted member list, -1 elsewhere
inline std::vector<int> position_map(int parent_n,
                                     const std::vector<int>& members) {
    std::vector<int> pos(parent_n, -1);
    for (int i = 0; i < static_cast<int>(members.size()); ++i)
        pos[members[i]] = i;
    return pos;
}

inline void append_prefixed(std::vector<Certificate>& out,
                            const std::string& prefix,
                            const std::vector<Certificate>& items) {
    for (const Certificate& c : items)
        out.push_back({prefix + c.name, c.pass, c.witness});
}

}  // namespace detail

// ---- the quaternion brace ----

// The order-8 quaternion group carries an addition making it a brace over
// the elementary abelian group of order 8: with a^x b^y c^z stored at index
// 4x + 2y + z, addition is bitwise xor of indices.
inline SkewBrace q8_brace() {
    FiniteGroup mul = q8_group();
    std::vector<std::vector<int>> add(8, std::vector<int>(8));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) add[i][j] = i ^ j;
    return make_skew_brace(mul.labels, add, table_rows(mul));
}

// The four order-3 maps respecting both quaternion brace operations, in
// closed form: a^x b^y c^z goes to a^y b^(x+y) c^(z+t) with twist t running
// through 0, y, x, x+y.
inline std::array<Perm, 4> q8_order3_automorphisms() {
    std::array<Perm, 4> out;
    for (int t = 0; t < 4; ++t) {
        Perm p(8);
        for (int idx = 0; idx < 8; ++idx) {
            int x = (idx >> 2) & 1, y = (idx >> 1) & 1, z = idx & 1;
            int tw = ((t & 2) ? x : 0) ^ ((t & 1) ? y : 0);
            p[idx] = (y << 2) | ((x ^ y) << 1) | (z ^ tw);
        }
        out[t] = p;
    }
    return out;
}

// Every permutation of the eight quaternion elements that preserves both
// the multiplication and the xor addition: the closure of the four order-3
// maps, twelve permutations in all. Each one is verified against both
// tables before being returned.
inline std::vector<Perm> q8_equivariant_automorphisms() {
    SkewBrace b = q8_brace();
    std::array<Perm, 4> gens = q8_order3_automorphisms();
    std::vector<Perm> closure{perm_identity(8)};
    for (size_t at = 0; at < closure.size(); ++at)
        for (const Perm& gperm : gens) {
            Perm c = perm_compose(closure[at], gperm);
            if (std::find(closure.begin(), closure.end(), c) == closure.end())
                closure.push_back(c);
        }
    if (closure.size() != 12)
        throw Error("quaternion automorphism closure has order " +
                    std::to_string(closure.size()) + ", expected 12");
    for (const Perm& p : closure)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (p[b.plus(i, j)] != b.plus(p[i], p[j]) ||
                    p[b.times(i, j)] != b.times(p[i], p[j]))
                    throw Error("quaternion map " + perm_label(p) +
                                " does not preserve the brace");
    return closure;
}

// ---- transport along an isomorphism ----

// Pulls a brace structure across an isomorphism of multiplicative groups.
// iso maps target onto model's multiplicative group; the result lives on
// target's own element indices and labels.
inline SkewBrace transported_brace(const SkewBrace& model,
                                   const FiniteGroup& target,
                                   const GroupMap& iso) {
    GroupMap back = inverse_map(iso);
    std::vector<std::vector<int>> add(target.n, std::vector<int>(target.n));
    for (int i = 0; i < target.n; ++i)
        for (int j = 0; j < target.n; ++j)
            add[i][j] =
                back.images[model.plus(iso.images[i], iso.images[j])];
    return make_skew_brace(target.labels, add, table_rows(target));
}

// ---- square-root addition ----

// On a group of nilpotency class at most two whose derived subgroup has odd
// order, halving commutators defines an abelian addition:
//     a + b = a b [b,a]^((o+1)/2)   with o the order of [b,a].
// Negation is then inversion and the centre lands in the kernel; both facts
// are re-checked on the finished tables.
inline SkewBrace baer_brace(const FiniteGroup& g) {
    auto cls = nilpotency_class(full_subgroup(g));
    if (!cls)
        throw NotClassTwo("order " + std::to_string(g.n) +
                          " group is not nilpotent");
    if (*cls > 2)
        throw NotClassTwo("order " + std::to_string(g.n) + " group has class " +
                          std::to_string(*cls));
    std::vector<std::vector<int>> add(g.n, std::vector<int>(g.n));
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            int c = g.comm(b, a);
            int o = g.element_order(c);
            if (o % 2 == 0) throw EvenCommutator(a, b);
            add[a][b] = g.mul(g.mul(a, b), g.pow(c, (o + 1) / 2));
        }
    SkewBrace out = make_skew_brace(g.labels, add, table_rows(g));
    for (int a = 0; a < g.n; ++a)
        if (out.neg(a) != g.inv[a])
            throw Error("negation differs from inversion at " + g.labels[a]);
    Subgroup ker = kernel(out);
    for (int z : center(g).members)
        if (!ker.contains(z))
            throw Error("central element " + g.labels[z] +
                        " escapes the kernel");
    return out;
}

// ---- abelian and class-two decompositions ----

// Cyclic decomposition of a finite abelian group: take a maximal-order
// element, grow a subgroup meeting its span trivially until no element
// enlarges it (that subgroup is then a complement), and recurse.
inline std::vector<Subgroup> abelian_basis(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    for (int a : h.members)
        for (int b : h.members)
            if (!g.commutes(a, b))
                throw Error("cyclic decomposition applied to a nonabelian "
                            "group, offending pair (" +
                            g.labels[a] + ", " + g.labels[b] + ")");
    std::vector<Subgroup> out;
    Subgroup rest = h;
    while (rest.order() > 1) {
        int best = g.identity;
        for (int x : rest.members)
            if (g.element_order(x) > g.element_order(best)) best = x;
        Subgroup span = subgroup_generated(g, {best});
        Subgroup comp{&g, {g.identity}};
        for (int y : rest.members) {
            std::vector<int> gens = comp.members;
            gens.push_back(y);
            Subgroup cand = subgroup_generated(g, gens);
            if (intersect(cand, span).order() == 1) comp = cand;
        }
        if (comp.order() * span.order() != rest.order())
            throw Error("complement search failed inside an abelian group "
                        "of order " +
                        std::to_string(rest.order()));
        out.push_back(span);
        rest = comp;
    }
    return out;
}

// Splits a group of nilpotency class at most two into a chain of abelian
// factors. An abelian input splits into its cyclic basis, where prefixes
// and tails meet trivially. Otherwise each basis element of the central
// quotient is lifted and the full centre is absorbed into every factor, so
// consecutive prefixes and tails meet exactly in the centre; that weaker
// overlap bound is what gets certified.
inline NDecomposition class2_abelian_decomposition(const FiniteGroup& p) {
    auto cls = nilpotency_class(full_subgroup(p));
    if (!cls)
        throw NotClassTwo("order " + std::to_string(p.n) +
                          " group is not nilpotent");
    if (*cls > 2)
        throw NotClassTwo("order " + std::to_string(p.n) + " group has class " +
                          std::to_string(*cls));
    NDecomposition dec;
    const bool abelian = is_abelian(p);
    if (abelian) {
        dec.factors = abelian_basis(full_subgroup(p));
    } else {
        Subgroup z = center(p);
        Quotient q = quotient_group(p, z);
        for (const Subgroup& span : abelian_basis(full_subgroup(q.group))) {
            int gen = q.group.identity;
            for (int x : span.members)
                if (q.group.element_order(x) > q.group.element_order(gen))
                    gen = x;
            std::vector<int> gens = z.members;
            gens.push_back(q.reps[gen]);
            dec.factors.push_back(subgroup_generated(p, gens));
        }
    }
    if (dec.factors.empty()) dec.factors.push_back(full_subgroup(p));
    dec.tails.resize(dec.k());
    std::vector<int> suffix{p.identity};
    for (int i = dec.k() - 1; i >= 0; --i) {
        dec.tails[i] = Subgroup{&p, suffix};
        suffix = product_set(p, dec.factors[i].members, suffix);
    }
    detail::certify_decomposition_core(p, dec);
    Subgroup bound = abelian ? trivial_subgroup(p) : center(p);
    std::string bad;
    std::vector<int> prefix{p.identity};
    for (int i = 0; bad.empty() && i + 1 < dec.k(); ++i) {
        prefix = product_set(p, prefix, dec.factors[i].members);
        for (int x : prefix)
            if (dec.tails[i].contains(x) && !bound.contains(x)) {
                bad = p.labels[x] + " at cut " + std::to_string(i + 1);
                break;
            }
    }
    dec.certificates.push_back({abelian
                                    ? "prefixes meet tails trivially"
                                    : "prefixes meet tails inside the centre",
                                bad.empty(), bad});
    return dec;
}

// ---- binary product of braces ----

// Builds a brace on g from braces on a normal subgroup and a supplement.
// Every element factors as n*h; sums are computed through the first
// factorisation in lexicographic member order,
//     n1 h1 + n2 h2 = (n1 + n2)(h1 + h2),
// and checked against every other factorisation, so the finished table does
// not depend on the choice. The stated overlap and equivariance hypotheses
// are verified up front and the socle conclusion is certified at the end.
inline BraceBuild product_brace(const FiniteGroup& g, const FactorStructure& nf,
                                const FactorStructure& hf) {
    const Subgroup& n = nf.factor;
    const Subgroup& h = hf.factor;
    const SkewBrace& nb = nf.brace;
    const SkewBrace& hb = hf.brace;
    std::vector<int> npos = detail::position_map(g.n, n.members);
    std::vector<int> hpos = detail::position_map(g.n, h.members);

    for (int x = 0; x < g.n; ++x)
        for (int m : n.members)
            if (!n.contains(g.conj(m, x))) throw NotNormal(x, m);
    for (int i = 0; i < n.order(); ++i)
        for (int j = 0; j < n.order(); ++j)
            if (g.mul(n.members[i], n.members[j]) != n.members[nb.times(i, j)])
                throw HypothesisFailure(
                    "the normal factor's multiplication restricts the "
                    "ambient one",
                    g.labels[n.members[i]] + " * " + g.labels[n.members[j]]);
    for (int i = 0; i < h.order(); ++i)
        for (int j = 0; j < h.order(); ++j)
            if (g.mul(h.members[i], h.members[j]) != h.members[hb.times(i, j)])
                throw HypothesisFailure(
                    "the supplement's multiplication restricts the ambient "
                    "one",
                    g.labels[h.members[i]] + " * " + g.labels[h.members[j]]);

    std::vector<std::vector<std::pair<int, int>>> fact(g.n);
    for (int a : n.members)
        for (int b : h.members) fact[g.mul(a, b)].push_back({a, b});
    for (int x = 0; x < g.n; ++x)
        if (fact[x].empty())
            throw HypothesisFailure(
                "the two factors multiply to the whole group", g.labels[x]);

    Subgroup inter = intersect(n, h);
    Subgroup nker = kernel(nb);
    Subgroup hker = kernel(hb);
    Subgroup nzadd = center(nb.add);
    Subgroup hzadd = center(hb.add);
    for (int t : inter.members) {
        for (int m : n.members)
            if (!g.commutes(t, m))
                throw HypothesisFailure(
                    "the overlap centralises the normal factor",
                    g.labels[t] + " against " + g.labels[m]);
        if (!nker.contains(npos[t]) || !hker.contains(hpos[t]))
            throw HypothesisFailure(
                "the overlap acts trivially inside both factors",
                g.labels[t]);
        if (!nzadd.contains(npos[t]) || !hzadd.contains(hpos[t]))
            throw HypothesisFailure(
                "the overlap is additively central in both factors",
                g.labels[t]);
    }

    // conjugation by the supplement must respect the normal factor's
    // addition; it respects the multiplication automatically
    for (int b : h.members) {
        Perm p(n.order());
        for (int i = 0; i < n.order(); ++i)
            p[i] = npos[g.conj(n.members[i], b)];
        for (int i = 0; i < n.order(); ++i)
            for (int j = 0; j < n.order(); ++j)
                if (p[nb.plus(i, j)] != nb.plus(p[i], p[j]))
                    throw HypothesisFailure(
                        "conjugation by the supplement preserves the normal "
                        "factor's addition",
                        g.labels[b] + " at (" + g.labels[n.members[i]] + ", " +
                            g.labels[n.members[j]] + ")");
    }

    auto piece_sum = [&](std::pair<int, int> u, std::pair<int, int> v) {
        int ns = n.members[nb.plus(npos[u.first], npos[v.first])];
        int hs = h.members[hb.plus(hpos[u.second], hpos[v.second])];
        return g.mul(ns, hs);
    };
    std::vector<std::vector<int>> add(g.n, std::vector<int>(g.n));
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            int s = piece_sum(fact[x][0], fact[y][0]);
            for (const auto& u : fact[x])
                for (const auto& v : fact[y])
                    if (piece_sum(u, v) != s)
                        throw NotWellDefined(g.labels[x] + " + " +
                                             g.labels[y]);
            add[x][y] = s;
        }

    BraceBuild out{make_skew_brace(g.labels, add, table_rows(g)), {}};

    Subgroup socn = socle(nb);
    Subgroup soch = socle(hb);
    Subgroup socg = socle(out.brace);
    std::string bad;
    for (int i : socn.members) {
        for (int j : soch.members) {
            int b = h.members[j];
            bool centralises = true;
            for (int m : n.members)
                if (!g.commutes(b, m)) {
                    centralises = false;
                    break;
                }
            if (!centralises) continue;
            int prod = g.mul(n.members[i], b);
            if (!socg.contains(prod)) {
                bad = g.labels[n.members[i]] + " * " + g.labels[b];
                break;
            }
        }
        if (!bad.empty()) break;
    }
    out.certificates.push_back(
        {"factor socles multiply into the socle", bad.empty(), bad});

    auto embeds = [&](const FactorStructure& f) {
        for (int i = 0; i < f.factor.order(); ++i)
            for (int j = 0; j < f.factor.order(); ++j) {
                int a = f.factor.members[i], b = f.factor.members[j];
                if (out.brace.plus(a, b) !=
                    f.factor.members[f.brace.plus(i, j)])
                    return g.labels[a] + " + " + g.labels[b];
            }
        return std::string();
    };
    bad = embeds(nf);
    out.certificates.push_back(
        {"the normal factor embeds as a subbrace", bad.empty(), bad});
    bad = embeds(hf);
    out.certificates.push_back(
        {"the supplement embeds as a subbrace", bad.empty(), bad});
    return out;
}

// ---- chains of factors ----

// Central elements of the factors whose suffix products centralise the
// factor before them always multiply into the socle of the assembled brace.
// Checked exhaustively for short chains in small groups and by seeded
// sampling otherwise.
inline Certificate property_star_certificate(
    const FiniteGroup& g, const std::vector<Subgroup>& factors,
    const SkewBrace& built, std::uint64_t seed) {
    const int k = static_cast<int>(factors.size());
    Subgroup soc = socle(built);
    std::vector<std::vector<int>> zs;
    for (const Subgroup& a : factors) zs.push_back(center(a).members);

    auto admissible = [&](const std::vector<int>& tuple) {
        int suffix = g.identity;
        for (int i = k - 1; i >= 1; --i) {
            suffix = g.mul(tuple[i], suffix);
            for (int m : factors[i - 1].members)
                if (!g.commutes(suffix, m)) return false;
        }
        return true;
    };
    auto violation = [&](const std::vector<int>& tuple) -> std::string {
        if (!admissible(tuple)) return "";
        int prod = g.identity;
        for (int x : tuple) prod = g.mul(prod, x);
        if (soc.contains(prod)) return "";
        std::string s = "(";
        for (int i = 0; i < k; ++i)
            s += (i ? ", " : "") + g.labels[tuple[i]];
        return s + ")";
    };

    const bool exhaustive = k <= 3 && g.n <= 30;
    std::string bad;
    std::vector<int> tuple(k);
    if (exhaustive) {
        std::vector<int> idx(k, 0);
        while (bad.empty()) {
            for (int i = 0; i < k; ++i) tuple[i] = zs[i][idx[i]];
            bad = violation(tuple);
            int i = k - 1;
            while (i >= 0 &&
                   ++idx[i] == static_cast<int>(zs[i].size()))
                idx[i--] = 0;
            if (i < 0) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 500 && bad.empty(); ++trial) {
            for (int i = 0; i < k; ++i)
                tuple[i] = zs[i][rng() % zs[i].size()];
            bad = violation(tuple);
        }
    }
    std::string name =
        "central chains through the centralisers land in the socle";
    if (!exhaustive) name += " (sampled)";
    return {name, bad.empty(), bad};
}

// Assembles a brace on g from a chain of factor braces, working right to
// left. Before each assembly step the factor must be normalised by the
// product of the later factors (1), conjugation by that product must
// preserve the factor's structure (2), their overlap must sit inside both
// socles (3), and the factor's centre must sit inside its socle (4); the
// numbered condition is reported when one fails. Each step then runs the
// binary product construction with its own hypothesis checks.
inline BraceBuild chain_brace(const FiniteGroup& g,
                              const std::vector<FactorStructure>& factors,
                              std::uint64_t seed = 0) {
    if (factors.empty()) throw Error("cannot chain an empty factor list");
    const int k = static_cast<int>(factors.size());
    BraceBuild cur{factors.back().brace, {}};
    std::vector<int> cur_members = factors.back().factor.members;

    for (int i = k - 2; i >= 0; --i) {
        const Subgroup& a = factors[i].factor;
        const SkewBrace& ab = factors[i].brace;
        const int fnum = i + 1;
        std::vector<int> span = product_set(g, a.members, cur_members);
        Subgroup t{&g, span};
        if (subgroup_generated(g, span).order() != t.order())
            throw ConditionFailure(
                fnum, 1, "the factor and its tail do not span a subgroup");
        for (int x : t.members)
            for (int m : a.members)
                if (!a.contains(g.conj(m, x)))
                    throw ConditionFailure(fnum, 1,
                                           g.labels[m] + " conjugated by " +
                                               g.labels[x] + " leaves the "
                                               "factor");

        std::vector<int> apos = detail::position_map(g.n, a.members);
        for (int x : cur_members) {
            Perm p(a.order());
            for (int j = 0; j < a.order(); ++j)
                p[j] = apos[g.conj(a.members[j], x)];
            for (int u = 0; u < a.order(); ++u)
                for (int v = 0; v < a.order(); ++v)
                    if (p[ab.plus(u, v)] != ab.plus(p[u], p[v]))
                        throw ConditionFailure(
                            fnum, 2,
                            "conjugation by " + g.labels[x] +
                                " breaks the addition at (" +
                                g.labels[a.members[u]] + ", " +
                                g.labels[a.members[v]] + ")");
        }

        Subgroup tail_sub{&g, cur_members};
        Subgroup overlap = intersect(a, tail_sub);
        Subgroup soca = socle(ab);
        Subgroup soct = socle(cur.brace);
        std::vector<int> tpos = detail::position_map(g.n, cur_members);
        for (int x : overlap.members)
            if (!soca.contains(apos[x]) || !soct.contains(tpos[x]))
                throw ConditionFailure(fnum, 3, g.labels[x]);
        for (int z : center(a).members)
            if (!soca.contains(apos[z]))
                throw ConditionFailure(fnum, 4, g.labels[z]);

        MaterializedSubgroup m = as_group(t);
        FactorStructure nf{restrict_into(m, a), ab};
        FactorStructure hf{restrict_into(m, tail_sub), cur.brace};
        BraceBuild step = product_brace(m.group, nf, hf);
        detail::append_prefixed(cur.certificates,
                                "factor " + std::to_string(fnum) + ": ",
                                step.certificates);
        cur.brace = std::move(step.brace);
        cur_members = t.members;
    }

    if (static_cast<int>(cur_members.size()) != g.n)
        throw HypothesisFailure(
            "the factors multiply to the whole group",
            std::to_string(cur_members.size()) + " of " +
                std::to_string(g.n) + " elements reached");
    cur.certificates.push_back({"multiplication reproduces the input group",
                                cur.brace.mul.table == g.table, ""});
    std::vector<Subgroup> plain;
    for (const FactorStructure& f : factors) plain.push_back(f.factor);
    cur.certificates.push_back(
        property_star_certificate(g, plain, cur.brace, seed));
    return cur;
}

// ---- braces on nilpotent groups of class at most two ----

// One brace per Sylow subgroup, chained over the Sylow decomposition: the
// square-root addition at odd primes, the one-operation brace on an abelian
// two-part, and a chain of abelian pieces on a nonabelian two-part.
inline BraceBuild nilpotent_class2_brace(const FiniteGroup& g,
                                         std::uint64_t seed = 0) {
    if (g.n == 1) return BraceBuild{trivial_brace(g), {}};
    auto cls = nilpotency_class(full_subgroup(g));
    if (!cls)
        throw NotClassTwo("order " + std::to_string(g.n) +
                          " group is not nilpotent");
    if (*cls > 2)
        throw NotClassTwo("order " + std::to_string(g.n) + " group has class " +
                          std::to_string(*cls));
    std::vector<FactorStructure> parts;
    std::vector<Certificate> pre;
    for (int p : prime_divisors(g.n)) {
        Subgroup s = sylow_subgroup(g, p);
        MaterializedSubgroup m = as_group(s);
        if (p % 2 == 1) {
            parts.push_back({s, baer_brace(m.group)});
        } else if (is_abelian(m.group)) {
            parts.push_back({s, trivial_brace(m.group)});
        } else {
            NDecomposition dec = class2_abelian_decomposition(m.group);
            detail::append_prefixed(pre, "two-part split: ",
                                    dec.certificates);
            std::vector<FactorStructure> pieces;
            for (const Subgroup& piece : dec.factors)
                pieces.push_back(
                    {piece, trivial_brace(as_group(piece).group)});
            BraceBuild two = chain_brace(m.group, pieces, seed);
            detail::append_prefixed(pre, "two-part: ", two.certificates);
            parts.push_back({s, std::move(two.brace)});
        }
    }
    BraceBuild out = chain_brace(g, parts, seed);
    out.certificates.insert(out.certificates.begin(), pre.begin(), pre.end());
    return out;
}

// ---- full pipelines ----

namespace detail {

inline Certificate commutative_addition_certificate(const SkewBrace& b) {
    std::string bad;
    for (int x = 0; x < b.n() && bad.empty(); ++x)
        for (int y = 0; y < x; ++y)
            if (b.plus(x, y) != b.plus(y, x)) {
                bad = b.labels()[x] + ", " + b.labels()[y];
                break;
            }
    return {"addition is commutative", bad.empty(), bad};
}

}  // namespace detail

// Involutive route for soluble groups whose nilpotent residual has no
// quaternion section: square-root additions along the nilpotent
// factorisation, with the class-two construction taking over wherever a
// factor has a two-part in its derived subgroup, in particular on the final
// nilpotent factor.
inline BraceBuild build_iyb_q8free(const FiniteGroup& g,
                                   std::uint64_t seed = 0) {
    if (!is_soluble(g))
        throw NotSoluble("the derived series does not reach the identity");
    Subgroup res = nilpotent_residual(full_subgroup(g));
    if (auto sec = find_q8_section(res))
        throw HypothesisFailure(
            "the nilpotent residual is quaternion-free",
            "section carried by " + std::to_string(sec->subgroup.order()) +
                " elements");
    NDecomposition dec = n_decomposition(g);
    CentralizerConditionReport cc = verify_centralizer_condition(g, dec);
    std::vector<Certificate> certs = dec.certificates;
    certs.insert(certs.end(), cc.items.begin(), cc.items.end());

    std::vector<FactorStructure> parts;
    for (int i = 0; i < dec.k(); ++i) {
        MaterializedSubgroup m = as_group(dec.factors[i]);
        bool odd_derived =
            derived_subgroup(full_subgroup(m.group)).order() % 2 == 1;
        if (i + 1 < dec.k() && odd_derived) {
            parts.push_back({dec.factors[i], baer_brace(m.group)});
        } else {
            BraceBuild nb = nilpotent_class2_brace(m.group, seed);
            detail::append_prefixed(
                certs, "factor " + std::to_string(i + 1) + ": ",
                nb.certificates);
            parts.push_back({dec.factors[i], std::move(nb.brace)});
        }
    }
    BraceBuild out = chain_brace(g, parts, seed);
    out.certificates.insert(out.certificates.begin(), certs.begin(),
                            certs.end());
    out.certificates.push_back(
        detail::commutative_addition_certificate(out.brace));
    return out;
}

// Involutive route for soluble groups with quaternion Sylow two-subgroup:
// the quaternion brace is carried onto each factor's two-part along an
// isomorphism and completed with the square-root addition on the odd part.
inline BraceBuild build_iyb_sylow_q8(const FiniteGroup& g,
                                     std::uint64_t seed = 0) {
    if (!is_soluble(g))
        throw NotSoluble("the derived series does not reach the identity");
    Subgroup s2 = sylow_subgroup(g, 2);
    if (s2.order() != 8 ||
        !is_isomorphic(as_group(s2).group, q8_group()).has_value())
        throw HypothesisFailure("the Sylow two-subgroup is quaternion",
                                "its order is " +
                                    std::to_string(s2.order()));
    NDecomposition dec = n_decomposition(g);
    CentralizerConditionReport cc = verify_centralizer_condition(g, dec);
    std::vector<Certificate> certs = dec.certificates;
    certs.insert(certs.end(), cc.items.begin(), cc.items.end());

    std::vector<FactorStructure> parts;
    for (int i = 0; i < dec.k(); ++i) {
        MaterializedSubgroup m = as_group(dec.factors[i]);
        Subgroup p2 = sylow_subgroup(m.group, 2);
        if (p2.order() <= 4) {
            // abelian two-part, so the derived subgroup has odd order
            parts.push_back({dec.factors[i], baer_brace(m.group)});
            continue;
        }
        MaterializedSubgroup pm = as_group(p2);
        auto iso = is_isomorphic(pm.group, q8_group());
        if (!iso)
            throw HypothesisFailure(
                "the factor's two-part is quaternion",
                "factor " + std::to_string(i + 1) + " has a two-part of "
                "order " + std::to_string(p2.order()));
        SkewBrace pb = transported_brace(q8_brace(), pm.group, *iso);
        Subgroup w = hall_complement(m.group, 2);
        if (w.order() == 1) {
            parts.push_back({dec.factors[i], std::move(pb)});
        } else {
            FactorStructure two{p2, std::move(pb)};
            FactorStructure odd{w, baer_brace(as_group(w).group)};
            BraceBuild pr = product_brace(m.group, two, odd);
            detail::append_prefixed(
                certs, "factor " + std::to_string(i + 1) + ": ",
                pr.certificates);
            parts.push_back({dec.factors[i], std::move(pr.brace)});
        }
    }
    BraceBuild out = chain_brace(g, parts, seed);
    out.certificates.insert(out.certificates.begin(), certs.begin(),
                            certs.end());
    out.certificates.push_back(
        detail::commutative_addition_certificate(out.brace));
    return out;
}

// Skew route along a Sylow tower: repeatedly split off a normal Sylow
// subgroup for the smallest prime admitting one, with the one-operation
// brace on every factor. No class bound is needed.
inline BraceBuild build_nyb_sylow_tower(const FiniteGroup& g,
                                        std::uint64_t seed = 0) {
    if (!is_soluble(g))
        throw NotSoluble("the derived series does not reach the identity");
    std::vector<FactorStructure> parts;
    Subgroup rest = full_subgroup(g);
    while (rest.order() > 1) {
        std::optional<Subgroup> pick;
        int picked_prime = 0;
        for (int p : prime_divisors(rest.order())) {
            Subgroup s = sylow_subgroup(rest, p);
            if (is_normal_in(s, rest)) {
                pick = s;
                picked_prime = p;
                break;
            }
        }
        if (!pick) throw NoSylowTower();
        parts.push_back({*pick, trivial_brace(as_group(*pick).group)});
        rest = hall_complement(rest, picked_prime);
    }
    if (parts.empty())
        parts.push_back({full_subgroup(g), trivial_brace(g)});
    return chain_brace(g, parts, seed);
}

// Skew route under the class bound: the one-operation brace on every factor
// of the nilpotent factorisation.
inline BraceBuild build_nyb_class2(const FiniteGroup& g,
                                   std::uint64_t seed = 0) {
    if (!is_soluble(g))
        throw NotSoluble("the derived series does not reach the identity");
    NDecomposition dec = n_decomposition(g);
    CentralizerConditionReport cc = verify_centralizer_condition(g, dec);
    std::vector<FactorStructure> parts;
    for (const Subgroup& a : dec.factors)
        parts.push_back({a, trivial_brace(as_group(a).group)});
    BraceBuild out = chain_brace(g, parts, seed);
    std::vector<Certificate> certs = dec.certificates;
    certs.insert(certs.end(), cc.items.begin(), cc.items.end());
    out.certificates.insert(out.certificates.begin(), certs.begin(),
                            certs.end());
    return out;
}

}  // namespace solbrace

#endif

#ifndef SOLBRACE_SOLUBLE_HPP
#define SOLBRACE_SOLUBLE_HPP

#include <set>
#include <string>
#include <vector>

#include "solbrace/certificate.hpp"
#include "solbrace/subgroup.hpp"

namespace solbrace {

inline bool is_soluble(const Subgroup& h) {
    return derived_series(h).back().order() == 1;
}

inline bool is_soluble(const FiniteGroup& g) {
    return is_soluble(full_subgroup(g));
}

// Sylow p-subgroup by normaliser growth: start from a p-element of maximal
// order and keep adjoining p-elements of the normaliser until the full
// p-part is reached. Deterministic given the element ordering.
inline Subgroup sylow_subgroup(const Subgroup& h, int p) {
    const FiniteGroup& g = *h.parent;
    const int target = p_part(h.order(), p);
    if (target == 1) return trivial_subgroup(g);

    std::vector<int> order_of(g.n, 0);
    auto is_p_element = [&](int x) {
        int o = order_of[x] ? order_of[x] : (order_of[x] = g.element_order(x));
        while (o % p == 0) o /= p;
        return o == 1;
    };

    int start = -1;
    for (int x : h.members)
        if (is_p_element(x) && (start < 0 || order_of[x] > order_of[start]))
            start = x;
    Subgroup cur = subgroup_generated(g, {start});
    while (cur.order() < target) {
        Subgroup norm = normalizer(h, cur);
        int grow = -1;
        for (int y : norm.members)
            if (!cur.contains(y) && is_p_element(y)) {
                grow = y;
                break;
            }
        if (grow < 0)
            throw NotFound("normaliser growth stalled below the full " +
                           std::to_string(p) + "-part");
        std::vector<int> gens = cur.members;
        gens.push_back(grow);
        cur = subgroup_generated(g, gens);
    }
    return cur;
}

inline Subgroup sylow_subgroup(const FiniteGroup& g, int p) {
    return sylow_subgroup(full_subgroup(g), p);
}

namespace detail {

// Depth-first search for a subgroup of the exact target order, generated by
// candidates added in strictly increasing index order. Every subgroup has a
// unique minimal generating path of that shape, so the scan is exhaustive.
inline bool order_search(const Subgroup& env, const std::vector<int>& cands,
                         size_t from, const Subgroup& cur, int target,
                         Subgroup& out) {
    if (cur.order() == target) {
        out = cur;
        return true;
    }
    for (size_t i = from; i < cands.size(); ++i) {
        int y = cands[i];
        if (cur.contains(y)) continue;
        std::vector<int> gens = cur.members;
        gens.push_back(y);
        Subgroup next = subgroup_generated(*env.parent, gens);
        if (target % next.order() != 0) continue;
        if (order_search(env, cands, i + 1, next, target, out)) return true;
    }
    return false;
}

}  // namespace detail

// Hall p-complement: a subgroup of order |H| / p-part. Found by pruned
// backtracking over p'-elements; existence is Hall's theorem, so the search
// is only attempted for soluble groups.
inline Subgroup hall_complement(const Subgroup& h, int p) {
    const FiniteGroup& g = *h.parent;
    const int target = h.order() / p_part(h.order(), p);
    if (target == h.order()) return h;
    if (!is_soluble(h)) throw NotSoluble("Hall complement search refused");

    std::vector<int> cands;
    for (int x : h.members)
        if (g.element_order(x) % p != 0) cands.push_back(x);
    Subgroup out;
    if (!detail::order_search(h, cands, 0, trivial_subgroup(g), target, out))
        throw NotFound("no Hall complement for p = " + std::to_string(p) +
                       " despite solubility");
    return out;
}

inline Subgroup hall_complement(const FiniteGroup& g, int p) {
    return hall_complement(full_subgroup(g), p);
}

// One p-complement per prime divisor. Pairwise set products are checked to
// commute; for complements this always holds because each pairwise product
// already covers the whole group.
struct ComplementBasis {
    Subgroup of;  // the group the basis belongs to
    std::vector<int> primes;
    std::vector<Subgroup> complements;  // aligned with primes
};

inline ComplementBasis complement_basis(const Subgroup& f) {
    ComplementBasis basis;
    basis.of = f;
    for (int p : prime_divisors(f.order())) {
        basis.primes.push_back(p);
        basis.complements.push_back(hall_complement(f, p));
    }
    const FiniteGroup& g = *f.parent;
    for (size_t i = 0; i < basis.complements.size(); ++i)
        for (size_t j = i + 1; j < basis.complements.size(); ++j) {
            auto ab = product_set(g, basis.complements[i].members,
                                  basis.complements[j].members);
            auto ba = product_set(g, basis.complements[j].members,
                                  basis.complements[i].members);
            if (ab != ba)
                throw Error("complement basis products fail to commute");
        }
    return basis;
}

inline ComplementBasis complement_basis(const FiniteGroup& g) {
    return complement_basis(full_subgroup(g));
}

// Elements of env normalising every complement in the basis. With env equal
// to the basis group this is the system normaliser; with a larger env it is
// the relative one.
inline Subgroup system_normalizer(const Subgroup& env,
                                  const ComplementBasis& basis) {
    Subgroup cur = env;
    for (const Subgroup& k : basis.complements) cur = normalizer(cur, k);
    return cur;
}

// Stable term of the lower central series. The quotient by it is checked
// to be nilpotent rather than assumed.
inline Subgroup nilpotent_residual(const Subgroup& h) {
    Subgroup res = lower_central_series(h).back();
    Quotient q = quotient_group(h, res);
    if (!nilpotency_class(full_subgroup(q.group)).has_value())
        throw Error("residual quotient is not nilpotent");
    return res;
}

inline Subgroup nilpotent_residual(const FiniteGroup& g) {
    return nilpotent_residual(full_subgroup(g));
}

// Largest nilpotent normal subgroup, assembled as the product of the cores
// O_p(H), each the intersection of the conjugates of one Sylow subgroup.
inline Subgroup fitting(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    std::vector<int> gens;
    for (int p : prime_divisors(h.order())) {
        Subgroup syl = sylow_subgroup(h, p);
        std::vector<char> core(g.n, 0);
        for (int x : syl.members) core[x] = 1;
        for (int c : h.members) {
            std::vector<char> conj_set(g.n, 0);
            for (int x : syl.members) conj_set[g.conj(x, c)] = 1;
            for (int i = 0; i < g.n; ++i) core[i] = core[i] && conj_set[i];
        }
        for (int i = 0; i < g.n; ++i)
            if (core[i]) gens.push_back(i);
    }
    return subgroup_generated(g, gens);
}

inline Subgroup fitting(const FiniteGroup& g) {
    return fitting(full_subgroup(g));
}

// Preimage of Fit(H / Fit(H)) back in the parent's index space.
inline Subgroup fitting2(const Subgroup& h) {
    Subgroup fit1 = fitting(h);
    MaterializedSubgroup m = as_group(h);
    Quotient q = quotient_group(m.group, restrict_into(m, fit1));
    Subgroup f2q = fitting(q.group);
    Subgroup pre = q.preimage(f2q, m.group);
    Subgroup out;
    out.parent = h.parent;
    for (int i : pre.members) out.members.push_back(m.to_parent[i]);
    return out;
}

inline Subgroup fitting2(const FiniteGroup& g) {
    return fitting2(full_subgroup(g));
}

// ---- iterated decomposition into nilpotent factors ----

// G = A_1 ... A_k with every factor nilpotent and normalised by the later
// ones. tails[i] is the subgroup A_{i+2} ... A_k left after factor i+1; the
// last tail is trivial. certificates record the checked invariants.
struct NDecomposition {
    std::vector<Subgroup> factors;
    std::vector<Subgroup> tails;
    std::vector<Certificate> certificates;

    int k() const { return static_cast<int>(factors.size()); }
    bool all_pass() const { return ::solbrace::all_pass(certificates); }
};

namespace detail {

inline std::string members_brief(const FiniteGroup& g,
                                 const std::vector<int>& xs, size_t cap = 4) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size() && i < cap; ++i) {
        if (i) s += ", ";
        s += g.labels[xs[i]];
    }
    if (xs.size() > cap) s += ", ...";
    return s + "}";
}

// Shared certification for both decomposition builders: coverage, factor
// nilpotency, normalisation by later factors, and tail identities.
inline void certify_decomposition_core(const FiniteGroup& g,
                                       NDecomposition& dec) {
    std::vector<int> prod{g.identity};
    for (const Subgroup& a : dec.factors)
        prod = product_set(g, prod, a.members);
    bool covers = static_cast<int>(prod.size()) == g.n;
    dec.certificates.push_back(
        {"product of factors covers the group", covers,
         covers ? "" : "product has " + std::to_string(prod.size()) +
                           " of " + std::to_string(g.n) + " elements"});

    for (int i = 0; i < dec.k(); ++i) {
        bool nil = is_nilpotent(dec.factors[i]);
        dec.certificates.push_back(
            {"factor " + std::to_string(i + 1) + " nilpotent", nil,
             nil ? "" : members_brief(g, dec.factors[i].members)});
    }
    for (int i = 0; i < dec.k(); ++i)
        for (int j = i + 1; j < dec.k(); ++j) {
            bool norm = true;
            int bad = -1;
            for (int y : dec.factors[j].members) {
                for (int x : dec.factors[i].members)
                    if (!dec.factors[i].contains(g.conj(x, y))) {
                        norm = false;
                        bad = y;
                        break;
                    }
                if (!norm) break;
            }
            dec.certificates.push_back(
                {"factor " + std::to_string(i + 1) + " normalised by factor " +
                     std::to_string(j + 1),
                 norm, norm ? "" : "conjugating by " + g.labels[bad]});
        }

    for (int i = 0; i < dec.k(); ++i) {
        std::vector<int> suffix{g.identity};
        for (int j = i + 1; j < dec.k(); ++j)
            suffix = product_set(g, suffix, dec.factors[j].members);
        bool same = suffix == dec.tails[i].members;
        dec.certificates.push_back(
            {"tail " + std::to_string(i + 1) + " equals the suffix product",
             same, same ? "" : members_brief(g, suffix)});
    }
}

}  // namespace detail

// Iterated construction: split off the nilpotent residual of the second
// Fitting subgroup, pass to the relative system normaliser, and repeat
// until what is left is nilpotent. A nilpotent group yields {1, G}.
inline NDecomposition n_decomposition(const FiniteGroup& g) {
    if (!is_soluble(g)) throw NotSoluble("no nilpotent factorisation");

    NDecomposition dec;
    Subgroup cur = full_subgroup(g);
    if (is_nilpotent(cur)) {
        dec.factors = {trivial_subgroup(g), cur};
        dec.tails = {cur, trivial_subgroup(g)};
    } else {
        while (!is_nilpotent(cur)) {
            Subgroup f2 = fitting2(cur);
            Subgroup a = nilpotent_residual(f2);
            ComplementBasis basis = complement_basis(f2);
            Subgroup next = system_normalizer(cur, basis);
            if (next.order() >= cur.order())
                throw Error("system normaliser failed to shrink");
            dec.factors.push_back(a);
            dec.tails.push_back(next);
            cur = next;
        }
        dec.factors.push_back(cur);
        dec.tails.push_back(trivial_subgroup(g));
    }

    detail::certify_decomposition_core(g, dec);

    // prefix/suffix intersections land inside the product of the earlier
    // factors' derived subgroups
    std::vector<int> prefix{g.identity};
    std::vector<int> derived_prod{g.identity};
    for (int i = 0; i + 1 < dec.k(); ++i) {
        prefix = product_set(g, prefix, dec.factors[i].members);
        derived_prod = product_set(
            g, derived_prod, derived_subgroup(dec.factors[i]).members);
        std::vector<int> suffix{g.identity};
        for (int j = i + 1; j < dec.k(); ++j)
            suffix = product_set(g, suffix, dec.factors[j].members);
        std::string bad;
        for (int x : prefix) {
            if (!std::binary_search(suffix.begin(), suffix.end(), x)) continue;
            if (!std::binary_search(derived_prod.begin(), derived_prod.end(),
                                    x)) {
                bad = g.labels[x];
                break;
            }
        }
        dec.certificates.push_back(
            {"prefix/suffix intersection at " + std::to_string(i + 1) +
                 " inside the derived product",
             bad.empty(), bad});
    }

    // what is cut off a factor by its tail lies in the factor's derived
    // subgroup
    for (int i = 0; i + 1 < dec.k(); ++i) {
        Subgroup meet = intersect(dec.factors[i], dec.tails[i]);
        Subgroup der = derived_subgroup(dec.factors[i]);
        std::string bad;
        for (int x : meet.members)
            if (!der.contains(x)) {
                bad = g.labels[x];
                break;
            }
        dec.certificates.push_back(
            {"factor " + std::to_string(i + 1) +
                 " meets its tail inside its derived subgroup",
             bad.empty(), bad});
    }
    return dec;
}

// Checks that every prefix/tail intersection centralises the two factors
// it straddles. Requires every Sylow subgroup of the ambient group to have
// nilpotency class at most 2; refuses otherwise.
struct CentralizerConditionReport {
    std::vector<Certificate> items;
    bool all_pass() const { return ::solbrace::all_pass(items); }
};

inline CentralizerConditionReport verify_centralizer_condition(
    const FiniteGroup& g, const NDecomposition& dec) {
    for (int p : prime_divisors(g.n)) {
        auto cls = nilpotency_class(sylow_subgroup(g, p));
        if (!cls || *cls > 2) throw SylowClassTooBig(p);
    }
    CentralizerConditionReport rep;
    std::vector<int> prefix{g.identity};
    for (int i = 0; i + 1 < dec.k(); ++i) {
        prefix = product_set(g, prefix, dec.factors[i].members);
        std::vector<int> both = dec.factors[i].members;
        both.insert(both.end(), dec.factors[i + 1].members.begin(),
                    dec.factors[i + 1].members.end());
        Subgroup cent = centralizer(full_subgroup(g), both);
        std::string bad;
        for (int x : prefix) {
            if (!dec.tails[i].contains(x)) continue;
            if (!cent.contains(x)) {
                bad = g.labels[x];
                break;
            }
        }
        rep.items.push_back(
            {"prefix/tail intersection at " + std::to_string(i + 1) +
                 " centralises factors " + std::to_string(i + 1) + "," +
                 std::to_string(i + 2),
             bad.empty(), bad});
    }
    return rep;
}

// ---- quaternion section scan ----

// A section isomorphic to the order-8 quaternion group survives on the
// subgroup generated by preimages of its two generators, so scanning the
// two-generated subgroups of order divisible by 8 is exhaustive. The order-8
// quaternion group is recognised by its order profile: it is the only group
// of order 8 with six elements of order 4.
struct Q8Section {
    Subgroup subgroup;
    Subgroup kernel;
};

namespace detail {

inline Subgroup normal_closure_in(const Subgroup& s,
                                  const std::vector<int>& seed) {
    const FiniteGroup& g = *s.parent;
    std::vector<int> gens;
    for (int z : seed)
        for (int c : s.members) gens.push_back(g.conj(z, c));
    return subgroup_generated(g, gens);
}

inline std::vector<Subgroup> normal_subgroups_of(const Subgroup& s) {
    const FiniteGroup& g = *s.parent;
    std::vector<Subgroup> found{trivial_subgroup(g)};
    std::set<std::vector<int>> seen{found[0].members};
    for (size_t i = 0; i < found.size(); ++i) {
        Subgroup base = found[i];  // copy, found may reallocate
        for (int x : s.members) {
            if (base.contains(x)) continue;
            std::vector<int> seed = base.members;
            seed.push_back(x);
            Subgroup bigger = normal_closure_in(s, seed);
            if (seen.insert(bigger.members).second)
                found.push_back(std::move(bigger));
        }
    }
    return found;
}

}  // namespace detail

inline std::optional<Q8Section> find_q8_section(const Subgroup& h,
                                                int cap = 200) {
    if (h.order() > cap)
        throw TooLarge("quaternion section scan refused above order " +
                       std::to_string(cap));
    const FiniteGroup& g = *h.parent;
    if (h.order() % 8 != 0) return std::nullopt;

    std::set<std::vector<int>> scanned;
    for (size_t i = 0; i < h.members.size(); ++i)
        for (size_t j = i + 1; j < h.members.size(); ++j) {
            Subgroup s =
                subgroup_generated(g, {h.members[i], h.members[j]});
            if (s.order() % 8 != 0) continue;
            if (!scanned.insert(s.members).second) continue;
            for (const Subgroup& k : detail::normal_subgroups_of(s)) {
                if (k.order() * 8 != s.order()) continue;
                Quotient q = quotient_group(s, k);
                if (order_profile(q.group)[4] == 6)
                    return Q8Section{s, k};
            }
        }
    return std::nullopt;
}

inline bool q8_free(const Subgroup& h, int cap = 200) {
    return !find_q8_section(h, cap).has_value();
}

inline bool q8_free(const FiniteGroup& g, int cap = 200) {
    return q8_free(full_subgroup(g), cap);
}

}  // namespace solbrace

#endif

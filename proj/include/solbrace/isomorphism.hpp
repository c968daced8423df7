#ifndef SOLBRACE_ISOMORPHISM_HPP
#define SOLBRACE_ISOMORPHISM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "solbrace/subgroup.hpp"

namespace solbrace {

// Deterministic small generating set: repeatedly adjoin the element of
// largest order (ties by index) outside the closure built so far.
inline std::vector<int> small_generating_set(const FiniteGroup& g) {
    std::vector<int> orders(g.n);
    for (int i = 0; i < g.n; ++i) orders[i] = g.element_order(i);
    std::vector<int> gens;
    Subgroup span = trivial_subgroup(g);
    while (span.order() < g.n) {
        int best = -1;
        for (int i = 0; i < g.n; ++i) {
            if (span.contains(i)) continue;
            if (best < 0 || orders[i] > orders[best]) best = i;
        }
        gens.push_back(best);
        span = subgroup_generated(g, gens);
    }
    return gens;
}

namespace detail {

// Partial isomorphism built by propagating products of defined elements.
// img/pre are inverse partial bijections between the two index spaces.
struct IsoState {
    std::vector<int> img, pre, defined;
};

inline bool iso_define(const FiniteGroup& g1, const FiniteGroup& g2,
                       IsoState& st, int a, int b) {
    size_t fresh_from = st.defined.size();
    if (st.img[a] >= 0) return st.img[a] == b;
    if (st.pre[b] >= 0) return false;
    st.img[a] = b;
    st.pre[b] = a;
    st.defined.push_back(a);
    // close under products against everything defined so far
    for (size_t i = fresh_from; i < st.defined.size(); ++i) {
        int x = st.defined[i];
        size_t count = st.defined.size();
        for (size_t j = 0; j < count; ++j) {
            int y = st.defined[j];
            int pairs[2][2] = {{x, y}, {y, x}};
            for (auto& p : pairs) {
                int s = g1.mul(p[0], p[1]);
                int t = g2.mul(st.img[p[0]], st.img[p[1]]);
                if (st.img[s] >= 0) {
                    if (st.img[s] != t) return false;
                } else {
                    if (st.pre[t] >= 0) return false;
                    st.img[s] = t;
                    st.pre[t] = s;
                    st.defined.push_back(s);
                }
            }
        }
    }
    return true;
}

// Backtracks over images of a fixed generating sequence. Calls found() on
// every full isomorphism; stops early once found() returns false.
inline bool iso_search(const FiniteGroup& g1, const FiniteGroup& g2,
                       const std::vector<int>& gens,
                       const std::vector<int>& ord1,
                       const std::vector<int>& ord2, IsoState& st, size_t k,
                       const std::function<bool(const IsoState&)>& found) {
    if (k == gens.size()) {
        if (static_cast<int>(st.defined.size()) != g1.n) return true;
        return found(st);
    }
    int a = gens[k];
    for (int b = 0; b < g2.n; ++b) {
        if (ord2[b] != ord1[a] || st.pre[b] >= 0) continue;
        IsoState saved = st;
        if (iso_define(g1, g2, st, a, b)) {
            if (!iso_search(g1, g2, gens, ord1, ord2, st, k + 1, found))
                return false;
        }
        st = std::move(saved);
    }
    return true;
}

}  // namespace detail

// Searches for an isomorphism by backtracking over generator images with
// order-profile pruning. Returns the witness map or nullopt. Groups larger
// than the bound are refused rather than searched.
inline std::optional<GroupMap> is_isomorphic(const FiniteGroup& g1,
                                             const FiniteGroup& g2,
                                             int bound = 256) {
    if (g1.n != g2.n) return std::nullopt;
    if (g1.n > bound)
        throw TooLarge("isomorphism search refused above order " +
                       std::to_string(bound));
    if (order_profile(g1) != order_profile(g2)) return std::nullopt;
    if (is_abelian(g1) != is_abelian(g2)) return std::nullopt;

    std::vector<int> ord1(g1.n), ord2(g2.n);
    for (int i = 0; i < g1.n; ++i) ord1[i] = g1.element_order(i);
    for (int i = 0; i < g2.n; ++i) ord2[i] = g2.element_order(i);
    std::vector<int> gens = small_generating_set(g1);

    detail::IsoState st;
    st.img.assign(g1.n, -1);
    st.pre.assign(g2.n, -1);
    if (!detail::iso_define(g1, g2, st, g1.identity, g2.identity))
        return std::nullopt;

    std::optional<GroupMap> result;
    detail::iso_search(g1, g2, gens, ord1, ord2, st, 0,
                       [&](const detail::IsoState& full) {
                           GroupMap m;
                           m.source = &g1;
                           m.target = &g2;
                           m.images = full.img;
                           result = std::move(m);
                           return false;  // stop at the first witness
                       });
    return result;
}

// Every automorphism of g, enumerated by the same backtracking search.
inline std::vector<GroupMap> all_automorphisms(const FiniteGroup& g,
                                               int bound = 256) {
    if (g.n > bound)
        throw TooLarge("automorphism enumeration refused above order " +
                       std::to_string(bound));
    std::vector<int> ord(g.n);
    for (int i = 0; i < g.n; ++i) ord[i] = g.element_order(i);
    std::vector<int> gens = small_generating_set(g);

    detail::IsoState st;
    st.img.assign(g.n, -1);
    st.pre.assign(g.n, -1);
    detail::iso_define(g, g, st, g.identity, g.identity);

    std::vector<GroupMap> out;
    detail::iso_search(g, g, gens, ord, ord, st, 0,
                       [&](const detail::IsoState& full) {
                           GroupMap m;
                           m.source = &g;
                           m.target = &g;
                           m.images = full.img;
                           out.push_back(std::move(m));
                           return true;  // keep enumerating
                       });
    return out;
}

}  // namespace solbrace

#endif

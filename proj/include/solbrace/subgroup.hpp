#ifndef SOLBRACE_SUBGROUP_HPP
#define SOLBRACE_SUBGROUP_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "solbrace/group.hpp"

namespace solbrace {

// A subgroup is a sorted member list inside a parent group. The parent is
// held by pointer and must outlive the subgroup; every operation producing
// subgroups keeps them inside the same parent so they can be intersected
// and multiplied without index translation.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members;  // sorted ascending

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }
    bool contains(const Subgroup& other) const {
        return std::includes(members.begin(), members.end(),
                             other.members.begin(), other.members.end());
    }
    bool same_as(const Subgroup& other) const {
        return members == other.members;
    }
};

inline Subgroup full_subgroup(const FiniteGroup& g) {
    Subgroup s;
    s.parent = &g;
    s.members.resize(g.n);
    std::iota(s.members.begin(), s.members.end(), 0);
    return s;
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
    return Subgroup{&g, {g.identity}};
}

namespace detail {

// Closure of a generating set under multiplication. A finite set closed
// under the product already contains inverses, so this is the subgroup.
inline std::vector<int> closure(const FiniteGroup& g, std::vector<int> gens) {
    std::vector<char> in(g.n, 0);
    std::vector<int> work;
    in[g.identity] = 1;
    work.push_back(g.identity);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (size_t i = 0; i < work.size(); ++i)
        for (int x : gens) {
            int y = g.mul(work[i], x);
            if (!in[y]) {
                in[y] = 1;
                work.push_back(y);
            }
        }
    std::sort(work.begin(), work.end());
    return work;
}

inline std::vector<char> member_mask(const Subgroup& s) {
    std::vector<char> m(s.parent->n, 0);
    for (int x : s.members) m[x] = 1;
    return m;
}

}  // namespace detail

inline Subgroup subgroup_generated(const FiniteGroup& g,
                                   const std::vector<int>& gens) {
    return Subgroup{&g, detail::closure(g, gens)};
}

inline Subgroup subgroup_generated(const Subgroup& env,
                                   const std::vector<int>& gens) {
    // generators must already lie in env, so the closure stays inside it
    return Subgroup{env.parent, detail::closure(*env.parent, gens)};
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup r;
    r.parent = a.parent;
    std::set_intersection(a.members.begin(), a.members.end(),
                          b.members.begin(), b.members.end(),
                          std::back_inserter(r.members));
    return r;
}

// Product set A*B inside the common parent. Not a subgroup in general.
inline std::vector<int> product_set(const FiniteGroup& g,
                                    const std::vector<int>& a,
                                    const std::vector<int>& b) {
    std::vector<char> in(g.n, 0);
    for (int x : a)
        for (int y : b) in[g.mul(x, y)] = 1;
    std::vector<int> r;
    for (int i = 0; i < g.n; ++i)
        if (in[i]) r.push_back(i);
    return r;
}

inline Subgroup center(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    Subgroup r;
    r.parent = &g;
    for (int x : h.members) {
        bool central = true;
        for (int y : h.members)
            if (g.mul(x, y) != g.mul(y, x)) {
                central = false;
                break;
            }
        if (central) r.members.push_back(x);
    }
    return r;
}

inline Subgroup center(const FiniteGroup& g) { return center(full_subgroup(g)); }

// Elements of env commuting with everything in s.
inline Subgroup centralizer(const Subgroup& env, const std::vector<int>& s) {
    const FiniteGroup& g = *env.parent;
    Subgroup r;
    r.parent = &g;
    for (int x : env.members) {
        bool ok = true;
        for (int y : s)
            if (g.mul(x, y) != g.mul(y, x)) {
                ok = false;
                break;
            }
        if (ok) r.members.push_back(x);
    }
    return r;
}

inline Subgroup normalizer(const Subgroup& env, const Subgroup& h) {
    const FiniteGroup& g = *env.parent;
    std::vector<char> mask = detail::member_mask(h);
    Subgroup r;
    r.parent = &g;
    for (int x : env.members) {
        bool ok = true;
        for (int y : h.members)
            if (!mask[g.conj(y, x)]) {
                ok = false;
                break;
            }
        if (ok) r.members.push_back(x);
    }
    return r;
}

inline bool is_normal_in(const Subgroup& h, const Subgroup& env) {
    std::vector<char> mask = detail::member_mask(h);
    const FiniteGroup& g = *h.parent;
    for (int x : env.members)
        for (int y : h.members)
            if (!mask[g.conj(y, x)]) return false;
    return true;
}

// Subgroup generated by all commutators [a,b], a in A, b in B.
inline Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a,
                                    const Subgroup& b) {
    std::vector<int> gens;
    for (int x : a.members)
        for (int y : b.members) gens.push_back(g.comm(x, y));
    return subgroup_generated(g, gens);
}

inline Subgroup derived_subgroup(const Subgroup& h) {
    return commutator_subgroup(*h.parent, h, h);
}

// gamma_1 = H, gamma_{i+1} = [gamma_i, H]; stops once the term repeats.
inline std::vector<Subgroup> lower_central_series(const Subgroup& h) {
    std::vector<Subgroup> series{h};
    for (;;) {
        Subgroup next = commutator_subgroup(*h.parent, series.back(), h);
        if (next.same_as(series.back())) break;
        series.push_back(std::move(next));
    }
    return series;
}

// Number of strict steps the lower central series takes to reach 1, or
// nullopt when it stabilises above the trivial subgroup.
inline std::optional<int> nilpotency_class(const Subgroup& h) {
    std::vector<Subgroup> series = lower_central_series(h);
    if (series.back().order() != 1) return std::nullopt;
    return static_cast<int>(series.size()) - 1;
}

inline bool is_nilpotent(const Subgroup& h) {
    return nilpotency_class(h).has_value();
}

inline std::vector<Subgroup> derived_series(const Subgroup& h) {
    std::vector<Subgroup> series{h};
    for (;;) {
        Subgroup next = derived_subgroup(series.back());
        if (next.same_as(series.back())) break;
        series.push_back(std::move(next));
    }
    return series;
}

// ---- materialising subgroups and quotients as standalone groups ----

// A subgroup copied out into its own FiniteGroup. to_parent maps the new
// indices back into the parent; it is exactly the sorted member list.
struct MaterializedSubgroup {
    FiniteGroup group;
    std::vector<int> to_parent;

    int from_parent(int parent_index) const {
        auto it = std::lower_bound(to_parent.begin(), to_parent.end(),
                                   parent_index);
        return static_cast<int>(it - to_parent.begin());
    }
};

inline MaterializedSubgroup as_group(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    const int m = h.order();
    std::vector<int> index_of(g.n, -1);
    for (int i = 0; i < m; ++i) index_of[h.members[i]] = i;
    std::vector<std::vector<int>> rows(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        labels[i] = g.labels[h.members[i]];
        for (int j = 0; j < m; ++j) {
            int p = g.mul(h.members[i], h.members[j]);
            if (index_of[p] < 0) throw Error("member list is not closed");
            rows[i][j] = index_of[p];
        }
    }
    return MaterializedSubgroup{make_group(std::move(labels), rows), h.members};
}

// Carries a subgroup of the parent into a materialised copy of an enclosing
// subgroup. Every member must lie inside the materialised one.
inline Subgroup restrict_into(const MaterializedSubgroup& m,
                              const Subgroup& h) {
    Subgroup r;
    r.parent = &m.group;
    for (int x : h.members) {
        int i = m.from_parent(x);
        if (i >= static_cast<int>(m.to_parent.size()) || m.to_parent[i] != x)
            throw Error("subgroup not contained in the materialised ambient");
        r.members.push_back(i);
    }
    return r;
}

// Quotient G/N by a normal subgroup, with coset-representative labels.
// class_of[g] is the quotient index of gN and reps[i] the least member of
// the i-th coset; reps are listed in ascending representative order.
struct Quotient {
    FiniteGroup group;
    std::vector<int> class_of;
    std::vector<int> reps;

    Subgroup preimage(const Subgroup& sub_of_quotient,
                      const FiniteGroup& parent) const {
        std::vector<char> wanted(group.n, 0);
        for (int x : sub_of_quotient.members) wanted[x] = 1;
        Subgroup r;
        r.parent = &parent;
        for (int gidx = 0; gidx < parent.n; ++gidx)
            if (wanted[class_of[gidx]]) r.members.push_back(gidx);
        return r;
    }
};

inline Quotient quotient_group(const FiniteGroup& g, const Subgroup& n) {
    for (int x = 0; x < g.n; ++x)
        for (int y : n.members)
            if (!n.contains(g.conj(y, x))) throw NotNormal(x, y);

    std::vector<int> coset_min(g.n, -1);  // least element of xN, per x
    std::vector<int> reps;
    for (int x = 0; x < g.n; ++x) {
        if (coset_min[x] >= 0) continue;
        int least = x;
        std::vector<int> coset;
        for (int y : n.members) coset.push_back(g.mul(x, y));
        for (int c : coset) least = std::min(least, c);
        for (int c : coset) coset_min[c] = least;
        reps.push_back(least);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<int> class_of(g.n);
    for (int x = 0; x < g.n; ++x) {
        auto it = std::lower_bound(reps.begin(), reps.end(), coset_min[x]);
        class_of[x] = static_cast<int>(it - reps.begin());
    }

    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> rows(q, std::vector<int>(q));
    std::vector<std::string> labels(q);
    for (int i = 0; i < q; ++i) {
        labels[i] = g.labels[reps[i]];
        for (int j = 0; j < q; ++j)
            rows[i][j] = class_of[g.mul(reps[i], reps[j])];
    }
    Quotient out;
    out.group = make_group(std::move(labels), rows);
    out.class_of = std::move(class_of);
    out.reps = std::move(reps);
    return out;
}

inline Quotient quotient_group(const Subgroup& h, const Subgroup& n) {
    MaterializedSubgroup m = as_group(h);
    return quotient_group(m.group, restrict_into(m, n));
}

// ---- maps between groups ----

struct GroupMap {
    const FiniteGroup* source = nullptr;
    const FiniteGroup* target = nullptr;
    std::vector<int> images;

    int apply(int x) const { return images[x]; }
};

inline bool is_homomorphism(const GroupMap& f) {
    for (int a = 0; a < f.source->n; ++a)
        for (int b = 0; b < f.source->n; ++b)
            if (f.images[f.source->mul(a, b)] !=
                f.target->mul(f.images[a], f.images[b]))
                return false;
    return true;
}

inline bool is_bijective(const GroupMap& f) {
    if (f.source->n != f.target->n) return false;
    std::vector<char> hit(f.target->n, 0);
    for (int x : f.images)
        if (hit[x]++) return false;
    return true;
}

inline GroupMap compose(const GroupMap& second, const GroupMap& first) {
    GroupMap r;
    r.source = first.source;
    r.target = second.target;
    r.images.resize(first.source->n);
    for (int x = 0; x < first.source->n; ++x)
        r.images[x] = second.images[first.images[x]];
    return r;
}

inline GroupMap inverse_map(const GroupMap& f) {
    GroupMap r;
    r.source = f.target;
    r.target = f.source;
    r.images.resize(f.target->n);
    for (int x = 0; x < f.source->n; ++x) r.images[f.images[x]] = x;
    return r;
}

}  // namespace solbrace

#endif

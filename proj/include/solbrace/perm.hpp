#ifndef SOLBRACE_PERM_HPP
#define SOLBRACE_PERM_HPP

#include <map>
#include <string>
#include <vector>

#include "solbrace/group.hpp"

namespace solbrace {

// Permutations of {0..d-1} as image vectors; p[i] is where i goes.
using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
    Perm p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    return p;
}

// Composition acting left to right: (a
// then b), i.e. result[i] = b[a[i]].
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

inline Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

inline bool perm_is_identity(const Perm& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != static_cast<int>(i)) return false;
    return true;
}

inline std::string perm_label(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        s += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) s += " ";
            s += std::to_string(j);
            first = false;
            j = p[j];
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

inline Perm perm_from_cycles(int degree,
                             const std::vector<std::vector<int>>& cycles) {
    Perm p = perm_identity(degree);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= degree || to < 0 || to >= degree)
                throw ParseError("cycle entry out of range for degree " +
                                 std::to_string(degree));
            p[from] = to;
        }
    }
    return p;
}

// The group generated by a permutation list, materialised with a full
// multiplication table. Enumeration is breadth first, so element order is
// stable for a fixed generator list. Refuses to close beyond the cap.
struct PermClosure {
    FiniteGroup group;
    std::vector<Perm> perm_of;  // realising permutation of each element
};

inline PermClosure permutations_to_group(int degree, std::vector<Perm> gens,
                                         int cap = 10080) {
    std::map<Perm, int> index;
    std::vector<Perm> elems{perm_identity(degree)};
    index[elems[0]] = 0;
    for (size_t i = 0; i < elems.size(); ++i)
        for (const Perm& g : gens) {
            Perm next = perm_compose(elems[i], g);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (static_cast<int>(elems.size()) > cap)
                    throw TooLarge("permutation closure exceeds " +
                                   std::to_string(cap) + " elements");
            }
        }

    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = perm_label(elems[i]);
        for (int j = 0; j < n; ++j)
            rows[i][j] = index.at(perm_compose(elems[i], elems[j]));
    }
    PermClosure out;
    out.group = make_group(std::move(labels), rows);
    out.perm_of = std::move(elems);
    return out;
}

}  // namespace solbrace

#endif

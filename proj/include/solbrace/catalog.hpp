#ifndef SOLBRACE_CATALOG_HPP
#define SOLBRACE_CATALOG_HPP

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "solbrace/perm.hpp"
#include "solbrace/q8.hpp"
#include "solbrace/subgroup.hpp"

namespace solbrace {

inline FiniteGroup cyclic_group(int n) {
    if (n < 1) throw UnknownName("cyclic:" + std::to_string(n));
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
    }
    return make_group(std::move(labels), rows);
}

// Dihedral group of the given order: r^(m) = s^2 = 1, srs = r^-1, m = n/2.
inline FiniteGroup dihedral_group(int order) {
    if (order < 4 || order % 2 != 0)
        throw UnknownName("dihedral:" + std::to_string(order));
    const int m = order / 2;
    auto idx = [m](int i, int j) { return ((i % m + m) % m) * 2 + j; };
    std::vector<std::vector<int>> rows(order, std::vector<int>(order));
    std::vector<std::string> labels(order);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string rot = i ? "r^" + std::to_string(i) : "";
            std::string ref = j ? "s" : "";
            std::string sep = (i && j) ? " " : "";
            labels[idx(i, j)] = (i || j) ? rot + sep + ref : "1";
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < 2; ++l)
                    rows[idx(i, j)][idx(k, l)] =
                        idx(j ? i - k : i + k, (j + l) % 2);
        }
    return make_group(std::move(labels), rows);
}

inline FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5) throw UnknownName("symmetric:" + std::to_string(n));
    if (n == 1) return cyclic_group(1);
    std::vector<Perm> gens{perm_from_cycles(n, {{0, 1}})};
    if (n > 2) {
        std::vector<int> cyc(n);
        std::iota(cyc.begin(), cyc.end(), 0);
        gens.push_back(perm_from_cycles(n, {cyc}));
    }
    return permutations_to_group(n, gens).group;
}

inline FiniteGroup alternating_group(int n) {
    if (n < 3 || n > 5) throw UnknownName("alternating:" + std::to_string(n));
    std::vector<Perm> gens{perm_from_cycles(n, {{0, 1, 2}})};
    if (n == 4) gens.push_back(perm_from_cycles(n, {{0, 1}, {2, 3}}));
    if (n == 5) gens.push_back(perm_from_cycles(n, {{0, 1, 2, 3, 4}}));
    return permutations_to_group(n, gens).group;
}

inline FiniteGroup sl23_group() {
    // all 2x2 matrices over F_3 with determinant 1, in lexicographic order
    std::vector<std::array<int, 4>> mats;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    if (((a * d - b * c) % 3 + 3) % 3 == 1)
                        mats.push_back({a, b, c, d});
    const int n = static_cast<int>(mats.size());
    auto find = [&](const std::array<int, 4>& m) {
        for (int i = 0; i < n; ++i)
            if (mats[i] == m) return i;
        throw Error("matrix product left the group");
    };
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        const auto& m = mats[i];
        labels[i] = "[" + std::to_string(m[0]) + std::to_string(m[1]) +
                    std::to_string(m[2]) + std::to_string(m[3]) + "]";
        for (int j = 0; j < n; ++j) {
            const auto& p = mats[i];
            const auto& q = mats[j];
            rows[i][j] = find({(p[0] * q[0] + p[1] * q[2]) % 3,
                               (p[0] * q[1] + p[1] * q[3]) % 3,
                               (p[2] * q[0] + p[3] * q[2]) % 3,
                               (p[2] * q[1] + p[3] * q[3]) % 3});
        }
    }
    return make_group(std::move(labels), rows);
}

// Upper unitriangular 3x3 matrices over F_3 as coordinate triples; the
// third coordinate picks up the product a * b' of the outer two.
inline FiniteGroup heisenberg27_group() {
    auto idx = [](int a, int b, int c) { return a * 9 + b * 3 + c; };
    std::vector<std::vector<int>> rows(27, std::vector<int>(27));
    std::vector<std::string> labels(27);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                labels[idx(a, b, c)] = "(" + std::to_string(a) + "," +
                                       std::to_string(b) + "," +
                                       std::to_string(c) + ")";
                for (int d = 0; d < 3; ++d)
                    for (int e = 0; e < 3; ++e)
                        for (int f = 0; f < 3; ++f)
                            rows[idx(a, b, c)][idx(d, e, f)] =
                                idx((a + d) % 3, (b + e) % 3,
                                    (c + f + a * e) % 3);
            }
    return make_group(std::move(labels), rows);
}

// The other nonabelian group of order 27: generator of order 9 twisted by
// an order-3 automorphism, b^-1 a b = a^4.
inline FiniteGroup modular27_group() {
    auto idx = [](int i, int j) { return i * 3 + j; };
    const int pw[3] = {1, 4, 7};  // 4^j mod 9
    std::vector<std::vector<int>> rows(27, std::vector<int>(27));
    std::vector<std::string> labels(27);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 3; ++j) {
            labels[idx(i, j)] = "a^" + std::to_string(i) + " b^" +
                                std::to_string(j);
            for (int k = 0; k < 9; ++k)
                for (int l = 0; l < 3; ++l)
                    rows[idx(i, j)][idx(k, l)] =
                        idx((i + pw[j] * k) % 9, (j + l) % 3);
        }
    return make_group(std::move(labels), rows);
}

// Semidirect product N x| H for an action of H on N by automorphisms,
// given as one permutation of N's indices per element of H.
inline FiniteGroup semidirect_product(const FiniteGroup& n,
                                      const FiniteGroup& h,
                                      const std::vector<Perm>& action) {
    const int total = n.n * h.n;
    auto idx = [&](int a, int b) { return a * h.n + b; };
    std::vector<std::vector<int>> rows(total, std::vector<int>(total));
    std::vector<std::string> labels(total);
    for (int a = 0; a < n.n; ++a)
        for (int b = 0; b < h.n; ++b) {
            labels[idx(a, b)] = "(" + n.labels[a] + "," + h.labels[b] + ")";
            for (int c = 0; c < n.n; ++c)
                for (int d = 0; d < h.n; ++d)
                    rows[idx(a, b)][idx(c, d)] =
                        idx(n.mul(a, action[b][c]), h.mul(b, d));
        }
    return make_group(std::move(labels), rows);
}

// C_q x| C_m with the generator of C_m acting as multiplication by r.
inline FiniteGroup metacyclic_group(int q, int m, int r) {
    FiniteGroup n = cyclic_group(q), h = cyclic_group(m);
    std::vector<Perm> action(m, perm_identity(q));
    for (int j = 0; j < m; ++j) {
        int mult = 1;
        for (int t = 0; t < j; ++t) mult = (mult * r) % q;
        for (int x = 0; x < q; ++x) action[j][x] = (x * mult) % q;
    }
    return semidirect_product(n, h, action);
}

inline FiniteGroup catalog_atom(const std::string& name) {
    if (name == "q8") return q8_group();
    if (name == "sl23") return sl23_group();
    if (name == "heis27") return heisenberg27_group();
    if (name == "m27") return modular27_group();
    if (name == "v4") return direct_product(cyclic_group(2), cyclic_group(2));
    if (name == "dic12") return metacyclic_group(3, 4, 2);
    if (name == "f20") return metacyclic_group(5, 4, 2);
    if (name == "f21") return metacyclic_group(7, 3, 2);
    auto num = [&](size_t at) -> int {
        if (at >= name.size()) return -1;
        for (size_t i = at; i < name.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(name[i]))) return -1;
        return std::stoi(name.substr(at));
    };
    if (name.rfind("cyclic:", 0) == 0) return cyclic_group(num(7));
    if (name.rfind("dihedral:", 0) == 0) return dihedral_group(num(9));
    if (name.rfind("symmetric:", 0) == 0) return symmetric_group(num(10));
    if (name.rfind("alternating:", 0) == 0) return alternating_group(num(12));
    if (name.size() > 1 && num(1) > 0) {
        int k = num(1);
        switch (name[0]) {
            case 'c': return cyclic_group(k);
            case 'd': return dihedral_group(k);
            case 's': return symmetric_group(k);
            case 'a': return alternating_group(k);
            default: break;
        }
    }
    throw UnknownName(name);
}

// Catalog names are atoms joined by 'x' for direct products, e.g. q8xc3.
inline FiniteGroup catalog_group(const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : name) {
        if (ch == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    FiniteGroup g = catalog_atom(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i)
        g = direct_product(g, catalog_atom(parts[i]));
    return g;
}

inline std::vector<std::string> catalog_atom_names() {
    return {"cyclic:n (alias cN)",   "dihedral:n of order n (alias dN)",
            "symmetric:n (alias sN)", "alternating:n (alias aN)",
            "v4",                     "q8",
            "sl23",                   "heis27",
            "m27",                    "dic12",
            "f20",                    "f21"};
}

// Groups the test suites sweep: everything of order at most 24 the catalog
// can spell, plus the larger named entries used by specific checks.
inline std::vector<std::string> catalog_survey_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 24; ++n) names.push_back("c" + std::to_string(n));
    for (const char* s :
         {"v4",      "c4xc2",   "c2xc2xc2", "c6xc2",  "c3xc3",  "c8xc2",
          "c4xc4",   "c4xc2xc2", "c12xc2",  "c3xc3xc2", "d8",    "d10",
          "d12",     "d14",     "d16",      "d8xc2",  "d8xc3",  "q8",
          "q8xc2",   "q8xc3",   "s3",       "s4",     "a4",     "a4xc2",
          "dic12",   "dic12xc2", "f20",     "f21",    "s3xc2",  "s3xc3",
          "s3xc4",   "c3xs3"})
        names.push_back(s);
    return names;
}

inline std::vector<std::string> catalog_named_large() {
    return {"heis27", "m27", "heis27xc3", "q8xc5", "sl23", "a5"};
}

}  // namespace solbrace

#endif

#ifndef SOLBRACE_SOLUTION_HPP
#define SOLBRACE_SOLUTION_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "solbrace/brace.hpp"
#include "solbrace/certificate.hpp"
#include "solbrace/errors.hpp"
#include "solbrace/perm.hpp"

namespace solbrace {

// A map r(x, y) = (f_x(y), g_y(x)) on pairs from an n-element set, stored
// as two n-by-n tables.
struct Solution {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<int> f;  // f[x*n + y] = f_x(y)
    std::vector<int> g;  // g[y*n + x] = g_y(x)

    int fx(int x, int y) const { return f[x * n + y]; }
    int gy(int y, int x) const { return g[y * n + x]; }
    std::pair<int, int> r(int x, int y) const { return {fx(x, y), gy(y, x)}; }
};

// The solution attached to a brace: f_x(y) = -x + xy and
// g_y(x) = (f_x(y))^-1 x y, computed in the multiplicative group.
inline Solution solution_from_brace(const SkewBrace& b) {
    Solution s;
    s.n = b.n();
    s.labels = b.labels();
    s.f.resize(s.n * s.n);
    s.g.resize(s.n * s.n);
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            int u = b.lambda(x, y);
            s.f[x * s.n + y] = u;
            s.g[y * s.n + x] = b.times(b.times(b.mul.inv[u], x), y);
        }
    return s;
}

// Braid identity, checked on all n^3 triples: writing r1 = r x id and
// r2 = id x r on triples, r1 r2 r1 must agree with r2 r1 r2.
inline Certificate check_ybe(const Solution& s) {
    auto r1 = [&](std::array<int, 3> t) {
        auto [a, b] = s.r(t[0], t[1]);
        return std::array<int, 3>{a, b, t[2]};
    };
    auto r2 = [&](std::array<int, 3> t) {
        auto [a, b] = s.r(t[1], t[2]);
        return std::array<int, 3>{t[0], a, b};
    };
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y)
            for (int z = 0; z < s.n; ++z) {
                std::array<int, 3> t{x, y, z};
                if (r1(r2(r1(t))) != r2(r1(r2(t))))
                    return {"braid identity holds", false,
                            "(" + s.labels[x] + ", " + s.labels[y] + ", " +
                                s.labels[z] + ")"};
            }
    return {"braid identity holds", true, ""};
}

// r composed with itself is the identity on pairs.
inline Certificate check_involutive(const Solution& s) {
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            auto [a, b] = s.r(x, y);
            if (s.r(a, b) != std::pair<int, int>{x, y})
                return {"solution is involutive", false,
                        "(" + s.labels[x] + ", " + s.labels[y] + ")"};
        }
    return {"solution is involutive", true, ""};
}

// Every f_x and every g_y permutes the set.
inline Certificate check_nondegenerate(const Solution& s) {
    for (int x = 0; x < s.n; ++x) {
        std::vector<char> hit_f(s.n, 0), hit_g(s.n, 0);
        for (int y = 0; y < s.n; ++y) {
            if (hit_f[s.fx(x, y)]++)
                return {"solution is non-degenerate", false,
                        "f_" + s.labels[x] + " repeats a value"};
            if (hit_g[s.gy(x, y)]++)
                return {"solution is non-degenerate", false,
                        "g_" + s.labels[x] + " repeats a value"};
        }
    }
    return {"solution is non-degenerate", true, ""};
}

struct SolutionReport {
    std::vector<Certificate> items;

    bool all_pass() const { return ::solbrace::all_pass(items); }
};

inline SolutionReport check_solution(const Solution& s) {
    return SolutionReport{
        {check_ybe(s), check_involutive(s), check_nondegenerate(s)}};
}

// Group generated by the maps f_x inside the symmetric group on the
// carrier, realised with a full multiplication table.
inline PermClosure solution_permutation_group(const Solution& s,
                                              int cap = 10080) {
    std::vector<Perm> gens;
    for (int x = 0; x < s.n; ++x) {
        Perm p(s.n);
        for (int y = 0; y < s.n; ++y) p[y] = s.fx(x, y);
        gens.push_back(p);
    }
    return permutations_to_group(s.n, gens, cap);
}

}  // namespace solbrace

#endif

#ifndef SOLBRACE_IO_HPP
#define SOLBRACE_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "solbrace/brace.hpp"
#include "solbrace/errors.hpp"
#include "solbrace/group.hpp"
#include "solbrace/perm.hpp"
#include "solbrace/solution.hpp"

namespace solbrace {

using nlohmann::json;

namespace detail {

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline std::vector<std::vector<int>> table_from_json(const json& j,
                                                     const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError("missing table \"" + key + "\"");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j[key]) {
        if (!row.is_array())
            throw ParseError("rows of \"" + key + "\" must be arrays");
        rows.push_back(row.get<std::vector<int>>());
    }
    return rows;
}

inline std::vector<std::string> labels_from_json(const json& j, size_t n) {
    if (j.contains("labels"))
        return j["labels"].get<std::vector<std::string>>();
    std::vector<std::string> labels(n);
    for (size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return labels;
}

}  // namespace detail

// Group files carry either a full multiplication table
//     {"labels": [...], "table": [[...]], "identity": 0}
// (labels and identity optional, the table is validated on load) or
// permutation generators in cycle form
//     {"degree": 4, "generators": [[[0, 1]], [[0, 1, 2, 3]]]}.
inline FiniteGroup group_from_json(const json& j) {
    try {
        if (j.is_object() && j.contains("table")) {
            auto rows = detail::table_from_json(j, "table");
            FiniteGroup g =
                make_group(detail::labels_from_json(j, rows.size()), rows);
            if (j.contains("identity") &&
                j["identity"].get<int>() != g.identity)
                throw ParseError(
                    "declared identity " + j["identity"].dump() +
                    " but the table's identity is " +
                    std::to_string(g.identity));
            return g;
        }
        if (j.is_object() && j.contains("generators")) {
            if (!j.contains("degree"))
                throw ParseError("permutation input needs \"degree\"");
            int degree = j["degree"].get<int>();
            if (degree <= 0) throw ParseError("degree must be positive");
            std::vector<Perm> gens;
            for (const auto& gj : j["generators"])
                gens.push_back(perm_from_cycles(
                    degree, gj.get<std::vector<std::vector<int>>>()));
            return permutations_to_group(degree, gens).group;
        }
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    throw ParseError("group object needs \"table\" or \"generators\"");
}

inline FiniteGroup load_group(const std::string& path) {
    return group_from_json(detail::load_json_file(path));
}

inline json group_to_json(const FiniteGroup& g) {
    json j;
    j["labels"] = g.labels;
    j["identity"] = g.identity;
    j["table"] = table_rows(g);
    return j;
}

// Brace files carry both tables over one label list:
//     {"labels": [...], "add": [[...]], "mul": [[...]]}.
inline SkewBrace brace_from_json(const json& j) {
    try {
        auto add = detail::table_from_json(j, "add");
        auto mul = detail::table_from_json(j, "mul");
        return make_skew_brace(detail::labels_from_json(j, add.size()), add,
                               mul);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

inline SkewBrace load_brace(const std::string& path) {
    return brace_from_json(detail::load_json_file(path));
}

inline json brace_to_json(const SkewBrace& b) {
    json j;
    j["labels"] = b.labels();
    j["add"] = table_rows(b.add);
    j["mul"] = table_rows(b.mul);
    return j;
}

// Solution files: {"n": n, "labels": [...], "f": [[...]], "g": [[...]]}
// with f[x][y] = f_x(y) and g[y][x] = g_y(x).
inline json solution_to_json(const Solution& s) {
    json j;
    j["n"] = s.n;
    j["labels"] = s.labels;
    std::vector<std::vector<int>> f(s.n, std::vector<int>(s.n));
    std::vector<std::vector<int>> g(s.n, std::vector<int>(s.n));
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            f[x][y] = s.fx(x, y);
            g[x][y] = s.gy(x, y);
        }
    j["f"] = f;
    j["g"] = g;
    return j;
}

inline Solution solution_from_json(const json& j) {
    try {
        Solution s;
        s.n = j.at("n").get<int>();
        if (s.n <= 0) throw ParseError("solution size must be positive");
        auto f = detail::table_from_json(j, "f");
        auto g = detail::table_from_json(j, "g");
        if (static_cast<int>(f.size()) != s.n ||
            static_cast<int>(g.size()) != s.n)
            throw ParseError("solution tables must have n rows");
        s.labels = detail::labels_from_json(j, s.n);
        s.f.resize(s.n * s.n);
        s.g.resize(s.n * s.n);
        for (int x = 0; x < s.n; ++x) {
            if (static_cast<int>(f[x].size()) != s.n ||
                static_cast<int>(g[x].size()) != s.n)
                throw ParseError("solution tables must have n columns");
            for (int y = 0; y < s.n; ++y) {
                if (f[x][y] < 0 || f[x][y] >= s.n || g[x][y] < 0 ||
                    g[x][y] >= s.n)
                    throw ParseError("solution entries must index the set");
                s.f[x * s.n + y] = f[x][y];
                s.g[x * s.n + y] = g[x][y];
            }
        }
        return s;
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

inline void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace solbrace

#endif

#ifndef SOLBRACE_TESTS_SUPPORT_HPP
#define SOLBRACE_TESTS_SUPPORT_HPP

#include <set>
#include <string>
#include <vector>

#include "solbrace/catalog.hpp"
#include "solbrace/subgroup.hpp"

namespace testsupport {

inline int by_label(const solbrace::FiniteGroup& g, const std::string& label) {
    for (int i = 0; i < g.n; ++i)
        if (g.labels[i] == label) return i;
    throw std::runtime_error("no element labelled " + label);
}

inline solbrace::Subgroup span(const solbrace::FiniteGroup& g,
                               std::initializer_list<const char*> labels) {
    std::vector<int> gens;
    for (const char* l : labels) gens.push_back(by_label(g, l));
    return solbrace::subgroup_generated(g, gens);
}

// Every subgroup, found by closing each known subgroup over each element.
// Deliberately naive; used as the independent oracle for the structure
// operations.
inline std::vector<solbrace::Subgroup> all_subgroups(
    const solbrace::FiniteGroup& g) {
    std::vector<solbrace::Subgroup> found{solbrace::trivial_subgroup(g)};
    std::set<std::vector<int>> seen{found[0].members};
    for (size_t i = 0; i < found.size(); ++i) {
        solbrace::Subgroup base = found[i];
        for (int x = 0; x < g.n; ++x) {
            if (base.contains(x)) continue;
            std::vector<int> gens = base.members;
            gens.push_back(x);
            solbrace::Subgroup bigger = solbrace::subgroup_generated(g, gens);
            if (seen.insert(bigger.members).second)
                found.push_back(std::move(bigger));
        }
    }
    return found;
}

}  // namespace testsupport

#endif

// Acceptance gate: one timed criterion per line, nonzero exit when any
// fails. Each criterion re-derives its expected values from scratch or from
// the deliberately naive subgroup scan in tests/support.hpp, so a
// regression in the library cannot hide behind its own bookkeeping.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "solbrace/catalog.hpp"
#include "solbrace/constructors.hpp"
#include "solbrace/pipeline.hpp"
#include "support.hpp"

using namespace solbrace;

namespace {

struct Failed : std::runtime_error {
    explicit Failed(const std::string& what_) : std::runtime_error(what_) {}
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failed(what);
}

bool normal_in(const FiniteGroup& g, const Subgroup& s) {
    for (int x = 0; x < g.n; ++x)
        for (int m : s.members)
            if (!s.contains(g.conj(m, x))) return false;
    return true;
}

// ---- criterion bodies ----

void quaternion_fidelity() {
    SkewBrace b = q8_brace();
    const FiniteGroup& m = b.mul;
    int c = testsupport::by_label(m, "c");
    int a = testsupport::by_label(m, "a");
    int bb = testsupport::by_label(m, "b");
    require(b.times(a, a) == c, "a*a should be c");
    require(b.times(bb, bb) == c, "b*b should be c");
    require(b.times(bb, a) == testsupport::by_label(m, "abc"),
            "b*a should be abc");
    require(m.element_order(c) == 2, "c should have order two");
    for (int x = 0; x < 8; ++x) {
        require(b.plus(x, x) == b.identity(), "x+x should vanish");
        for (int y = 0; y < 8; ++y)
            require(b.plus(x, y) == (x ^ y), "addition should be xor");
    }
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            for (int z = 0; z < 8; ++z)
                require(b.times(x, b.plus(y, z)) ==
                            b.plus(b.plus(b.times(x, y), b.neg(x)),
                                   b.times(x, z)),
                        "brace law must hold on every triple");
    require(kernel(b).members == std::vector<int>({0, c}),
            "kernel should be the centre");
    require(socle(b).members == kernel(b).members,
            "socle should equal the kernel");
}

void preserved_automorphisms() {
    std::vector<Perm> eq = q8_equivariant_automorphisms();
    require(eq.size() == 12, "twelve preserving automorphisms expected");
    for (const Perm& alpha : q8_order3_automorphisms()) {
        Perm sq = perm_compose(alpha, alpha);
        require(perm_is_identity(perm_compose(sq, alpha)),
                "the distinguished maps should have order three");
        require(std::find(eq.begin(), eq.end(), sq) != eq.end(),
                "squares of the distinguished maps should preserve");
    }
    std::vector<GroupMap> all = all_automorphisms(q8_group());
    require(all.size() == 24, "the quaternion group has 24 automorphisms");
    int preserving = 0;
    for (const GroupMap& f : all) {
        bool adds = true;
        for (int i = 0; i < 8 && adds; ++i)
            for (int j = 0; j < 8; ++j)
                if (f.images[i ^ j] != (f.images[i] ^ f.images[j])) {
                    adds = false;
                    break;
                }
        if (!adds) continue;
        ++preserving;
        require(std::find(eq.begin(), eq.end(), f.images) != eq.end(),
                "every preserving automorphism should be enumerated");
    }
    require(preserving == 12, "exactly half the automorphisms preserve");
}

std::vector<std::pair<std::string, BraceBuild>> pipeline_builds() {
    std::vector<std::pair<std::string, BraceBuild>> out;
    for (const char* name : {"s3", "s4", "d8", "a4", "dic12"})
        out.emplace_back(name, build_iyb_q8free(catalog_group(name)));
    for (const char* name : {"sl23", "q8xc3", "q8xc5"})
        out.emplace_back(name, build_iyb_sylow_q8(catalog_group(name)));
    return out;
}

void involutive_builds() {
    for (auto& [name, out] : pipeline_builds()) {
        require(out.all_pass(), name + ": a build certificate failed");
        require(out.brace.mul.table == catalog_group(name).table,
                name + ": multiplication must reproduce the input");
        Solution s = solution_from_brace(out.brace);
        require(check_ybe(s).pass, name + ": braid identity failed");
        require(check_involutive(s).pass, name + ": involutivity failed");
        require(check_nondegenerate(s).pass,
                name + ": non-degeneracy failed");
    }
}

void permutation_group_match() {
    for (auto& [name, out] : pipeline_builds()) {
        Solution s = solution_from_brace(out.brace);
        PermClosure pc = solution_permutation_group(s);
        Quotient q = quotient_group(full_subgroup(out.brace.mul),
                                    kernel(out.brace));
        require(pc.group.n == q.group.n,
                name + ": realised group has the wrong order");
        require(is_isomorphic(pc.group, q.group).has_value(),
                name + ": realised group is not the kernel quotient");
    }
}

void structure_oracles() {
    FiniteGroup g = symmetric_group(4);
    std::vector<Subgroup> subs = testsupport::all_subgroups(g);
    require(subs.size() == 30, "the order 24 symmetric group has 30 subgroups");

    Subgroup res = nilpotent_residual(full_subgroup(g));
    require(res.order() == 12, "residual should have order 12");
    for (const Subgroup& s : subs) {
        if (!normal_in(g, s)) continue;
        Quotient q = quotient_group(full_subgroup(g), s);
        if (!nilpotency_class(full_subgroup(q.group))) continue;
        for (int x : res.members)
            require(s.contains(x),
                    "residual must sit inside every normal subgroup with "
                    "nilpotent quotient");
    }

    Subgroup fit = fitting(full_subgroup(g));
    require(fit.order() == 4, "Fitting subgroup should have order 4");
    for (const Subgroup& s : subs)
        if (normal_in(g, s) && is_nilpotent(s))
            for (int x : s.members)
                require(fit.contains(x),
                        "Fitting subgroup must absorb every nilpotent "
                        "normal subgroup");

    Subgroup f2 = fitting2(full_subgroup(g));
    require(f2.members == res.members,
            "the second Fitting subgroup should be the order 12 normal one");

    ComplementBasis basis = complement_basis(full_subgroup(g));
    Subgroup ns = system_normalizer(full_subgroup(g), basis);
    require(ns.order() == 2, "system normaliser should have order 2");
    std::vector<int> brute;
    for (int x = 0; x < g.n; ++x) {
        bool fixes_all = true;
        for (const Subgroup& k : basis.complements) {
            for (int m : k.members)
                if (!k.contains(g.conj(m, g.inv[x]))) {
                    fixes_all = false;
                    break;
                }
            if (!fixes_all) break;
        }
        if (fixes_all) brute.push_back(x);
    }
    require(brute == ns.members,
            "system normaliser must match the brute-force scan");

    auto orders = [](const NDecomposition& d) {
        std::vector<int> os;
        for (const Subgroup& a : d.factors) os.push_back(a.order());
        return os;
    };
    require(orders(n_decomposition(g)) == std::vector<int>({4, 3, 2}),
            "factorisation of the order 24 symmetric group");
    require(orders(n_decomposition(symmetric_group(3))) ==
                std::vector<int>({3, 2}),
            "factorisation of the order 6 symmetric group");
}

void survey_of_lemmas() {
    for (const std::string& name : catalog_survey_names()) {
        FiniteGroup g = catalog_group(name);
        require(is_soluble(g), name + ": survey group should be soluble");
        std::vector<Subgroup> subs = testsupport::all_subgroups(g);

        ComplementBasis basis = complement_basis(full_subgroup(g));
        for (size_t i = 0; i < basis.primes.size(); ++i) {
            int p = basis.primes[i];
            require(basis.complements[i].order() == g.n / p_part(g.n, p),
                    name + ": complement order");
            auto cover = product_set(g, basis.complements[i].members,
                                     sylow_subgroup(g, p).members);
            require(static_cast<int>(cover.size()) == g.n,
                    name + ": complement times Sylow must cover the group");
        }

        Subgroup ns = system_normalizer(full_subgroup(g), basis);
        require(is_nilpotent(ns), name + ": system normaliser nilpotent");

        Subgroup res = nilpotent_residual(full_subgroup(g));
        for (const Subgroup& s : subs) {
            if (!normal_in(g, s)) continue;
            Quotient q = quotient_group(full_subgroup(g), s);
            if (!nilpotency_class(full_subgroup(q.group))) continue;
            for (int x : res.members)
                require(s.contains(x), name + ": residual minimality");
        }

        Subgroup fit = fitting(full_subgroup(g));
        for (const Subgroup& s : subs)
            if (normal_in(g, s) && is_nilpotent(s))
                for (int x : s.members)
                    require(fit.contains(x), name + ": Fitting maximality");

        NDecomposition dec = n_decomposition(g);
        require(dec.all_pass(), name + ": factorisation certificates");
        for (int p : prime_divisors(g.n)) {
            int prodp = 1;
            for (const Subgroup& a : dec.factors)
                prodp *= p_part(a.order(), p);
            require(prodp == p_part(g.n, p),
                    name + ": factor Sylow orders must multiply up");
        }
    }
}

void baer_equivariance() {
    for (const char* name : {"heis27", "m27", "heis27xc3", "c9xc3"}) {
        FiniteGroup g = catalog_group(name);
        SkewBrace b = baer_brace(g);
        require(is_abelian(b.add), std::string(name) + ": abelian addition");
        for (int x = 0; x < g.n; ++x)
            require(b.neg(x) == g.inv[x],
                    std::string(name) + ": negation should invert");
        Subgroup ker = kernel(b);
        for (int z : center(g).members)
            require(ker.contains(z),
                    std::string(name) + ": centre inside the kernel");
        std::vector<GroupMap> autos = all_automorphisms(g);
        require(autos.size() >= static_cast<size_t>(g.n / 2),
            std::string(name) + ": automorphism enumeration looks truncated");
        for (const GroupMap& f : autos)
            for (int x = 0; x < g.n; ++x)
                for (int y = 0; y < g.n; ++y)
                    require(f.images[b.plus(x, y)] ==
                                b.plus(f.images[x], f.images[y]),
                            std::string(name) +
                                ": every automorphism must preserve the "
                                "square-root addition");
    }
}

void negative_controls() {
    try {
        build_iyb_q8free(dihedral_group(16));
        throw Failed("the order 16 dihedral group must be refused");
    } catch (const SylowClassTooBig& e) {
        require(e.prime == 2, "refusal should name the prime");
    }
    try {
        build_iyb_sylow_q8(symmetric_group(4));
        throw Failed("the order 24 symmetric group must be refused");
    } catch (const HypothesisFailure& e) {
        require(e.which.find("quaternion") != std::string::npos,
                "refusal should name the Sylow shape");
    }
    try {
        build_iyb_q8free(alternating_group(5));
        throw Failed("the order 60 alternating group must be refused");
    } catch (const NotSoluble&) {
    }
    try {
        json j;
        j["labels"] = {"e", "t"};
        j["add"] = {{0, 1}, {1, 0}};
        j["mul"] = {{0, 1}, {1, 1}};
        brace_from_json(j);
        throw Failed("a non Latin square must be refused");
    } catch (const NotLatinSquare& e) {
        require(e.row == 1, "refusal should name the duplicated row");
    }
    FiniteGroup q = q8_group();
    auto tau = [](int i) { return i == 2 ? 4 : i == 4 ? 2 : i; };
    json add = json::array(), mul = json::array();
    for (int i = 0; i < 8; ++i) {
        json arow = json::array(), mrow = json::array();
        for (int j2 = 0; j2 < 8; ++j2) {
            arow.push_back(i ^ j2);
            mrow.push_back(tau(q.mul(tau(i), tau(j2))));
        }
        add.push_back(arow);
        mul.push_back(mrow);
    }
    json j;
    j["labels"] = q.labels;
    j["add"] = add;
    j["mul"] = mul;
    try {
        brace_from_json(j);
        throw Failed("an incompatible pair of groups must be refused");
    } catch (const CompatibilityFailure& e) {
        require(e.a >= 0 && e.a < 8, "refusal should name the triple");
    }
}

void central_chain_property() {
    for (const char* name :
         {"s3", "s4", "a4", "dic12", "sl23", "q8", "d8", "c12"}) {
        FiniteGroup g = catalog_group(name);
        BraceBuild out = run_method(g, pick_method(g), 0);
        const Certificate* star = nullptr;
        for (const Certificate& c : out.certificates)
            if (c.name.find("central chains") != std::string::npos &&
                c.name.find(": ") == std::string::npos)
                star = &c;
        require(star != nullptr,
                std::string(name) + ": chain property certificate missing");
        require(star->pass, std::string(name) + ": chain property failed");
        require(star->name.find("sampled") == std::string::npos,
                std::string(name) + ": order at most 30 must be exhaustive");
    }
    BraceBuild big = build_iyb_sylow_q8(catalog_group("q8xc5"));
    bool sampled_found = false;
    for (const Certificate& c : big.certificates)
        if (c.name.find("central chains") != std::string::npos &&
            c.name.find("sampled") != std::string::npos && c.pass)
            sampled_found = true;
    require(sampled_found,
            "orders above 30 must carry a passing sampled certificate");
}

}  // namespace

int main() {
    struct Criterion {
        const char* text;
        double budget_seconds;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {"quaternion brace fidelity", 0.1, quaternion_fidelity},
        {"preserving automorphisms are exactly the enumerated twelve", 0.1,
         preserved_automorphisms},
        {"pipeline builds yield fully checked involutive solutions", 10.0,
         involutive_builds},
        {"realised permutation groups match the kernel quotients", 5.0,
         permutation_group_match},
        {"structure operations agree with the exhaustive subgroup scan",
         30.0, structure_oracles},
        {"structural lemmas hold across the survey catalog", 120.0,
         survey_of_lemmas},
        {"square-root addition is preserved by every automorphism", 60.0,
         baer_equivariance},
        {"out-of-scope inputs are refused with named reasons", 10.0,
         negative_controls},
        {"central chain property verified exhaustively at small orders",
         60.0, central_chain_property},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        try {
            c.run();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        if (detail.empty() && secs > c.budget_seconds)
            detail = "over the time budget";
        char line[512];
        std::snprintf(line, sizeof(line),
                      "[%s] %zu. %s (%.3fs, budget %.1fs)%s%s",
                      detail.empty() ? "PASS" : "FAIL", i + 1, c.text, secs,
                      c.budget_seconds, detail.empty() ? "" : ": ",
                      detail.c_str());
        std::cout << line << "\n";
        if (!detail.empty()) ++failures;
    }
    if (failures) std::cout << failures << " criteria failed\n";
    return failures ? 1 : 0;
}

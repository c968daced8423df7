#ifndef SOLBRACE_PIPELINE_HPP
#define SOLBRACE_PIPELINE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "solbrace/catalog.hpp"
#include "solbrace/constructors.hpp"
#include "solbrace/io.hpp"
#include "solbrace/isomorphism.hpp"
#include "solbrace/solution.hpp"

namespace solbrace {

// Resolves a group argument: a path when it names a JSON file, a catalog
// name otherwise.
inline FiniteGroup resolve_group(const std::string& spec, int max_order) {
    FiniteGroup g;
    if (spec.size() > 5 && spec.compare(spec.size() - 5, 5, ".json") == 0)
        g = load_group(spec);
    else
        g = catalog_group(spec);
    if (g.n > max_order)
        throw TooLarge("group of order " + std::to_string(g.n) +
                       " exceeds the limit of " + std::to_string(max_order));
    return g;
}

inline bool has_sylow_tower(const FiniteGroup& g) {
    Subgroup rest = full_subgroup(g);
    while (rest.order() > 1) {
        bool found = false;
        for (int p : prime_divisors(rest.order())) {
            Subgroup s = sylow_subgroup(rest, p);
            if (is_normal_in(s, rest)) {
                rest = hall_complement(rest, p);
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

inline bool sylow_classes_at_most_two(const FiniteGroup& g) {
    for (int p : prime_divisors(g.n)) {
        auto c = nilpotency_class(sylow_subgroup(g, p));
        if (!c || *c > 2) return false;
    }
    return true;
}

// Chooses a construction: the quaternion transport when the two-part is
// quaternion, the square-root route when the residual is quaternion-free
// under the class bound, and the skew routes otherwise.
inline std::string pick_method(const FiniteGroup& g) {
    if (!is_soluble(g))
        throw NotSoluble("the derived series does not reach the identity");
    Subgroup s2 = sylow_subgroup(g, 2);
    if (s2.order() == 8 &&
        is_isomorphic(as_group(s2).group, q8_group()).has_value())
        return "sylowq8";
    bool class_ok = sylow_classes_at_most_two(g);
    if (class_ok && q8_free(nilpotent_residual(full_subgroup(g))))
        return "q8free";
    if (has_sylow_tower(g)) return "nyb-tower";
    if (class_ok) return "nyb-class2";
    throw Unsupported(
        "no construction covers this group: a Sylow subgroup has class "
        "above two and there is no Sylow tower");
}

inline BraceBuild run_method(const FiniteGroup& g, const std::string& method,
                             std::uint64_t seed) {
    if (method == "q8free") return build_iyb_q8free(g, seed);
    if (method == "sylowq8") return build_iyb_sylow_q8(g, seed);
    if (method == "nyb-tower") return build_nyb_sylow_tower(g, seed);
    if (method == "nyb-class2") return build_nyb_class2(g, seed);
    if (method == "trivial")
        return BraceBuild{trivial_brace(g),
                          {{"brace axioms validated", true, ""}}};
    if (method == "baer")
        return BraceBuild{baer_brace(g),
                          {{"brace axioms validated", true, ""}}};
    throw Unsupported("unknown method \"" + method + "\"");
}

inline json certificates_to_json(const std::vector<Certificate>& certs) {
    json arr = json::array();
    for (const Certificate& c : certs) {
        json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        if (!c.witness.empty()) item["witness"] = c.witness;
        arr.push_back(item);
    }
    return arr;
}

inline void print_certificates(const std::vector<Certificate>& certs,
                               std::ostream& out) {
    for (const Certificate& c : certs)
        out << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name
            << (c.witness.empty() ? "" : " (" + c.witness + ")") << "\n";
}

inline int cmd_analyze(const FiniteGroup& g, bool json_out,
                       std::ostream& out) {
    json j;
    j["order"] = g.n;
    j["abelian"] = is_abelian(g);
    bool soluble = is_soluble(g);
    j["soluble"] = soluble;
    auto cls = nilpotency_class(full_subgroup(g));
    if (cls)
        j["nilpotency_class"] = *cls;
    else
        j["nilpotency_class"] = nullptr;
    json sylows = json::array();
    for (int p : prime_divisors(g.n)) {
        Subgroup s = sylow_subgroup(g, p);
        json row;
        row["prime"] = p;
        row["order"] = s.order();
        auto sc = nilpotency_class(s);
        row["class"] = sc ? json(*sc) : json(nullptr);
        sylows.push_back(row);
    }
    j["sylow"] = sylows;
    try {
        j["quaternion_free"] = q8_free(g);
    } catch (const TooLarge&) {
        j["quaternion_free"] = nullptr;
    }
    if (soluble) {
        j["nilpotent_residual_order"] =
            nilpotent_residual(full_subgroup(g)).order();
        NDecomposition dec = n_decomposition(g);
        std::vector<int> orders;
        for (const Subgroup& a : dec.factors) orders.push_back(a.order());
        j["factor_orders"] = orders;
        j["sylow_tower"] = has_sylow_tower(g);
    }
    try {
        j["method"] = pick_method(g);
    } catch (const Error& e) {
        j["method"] = nullptr;
        j["method_obstruction"] = e.what();
    }

    if (json_out) {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "order " << g.n << "\n";
    out << "abelian: " << (j["abelian"].get<bool>() ? "yes" : "no") << "\n";
    out << "soluble: " << (soluble ? "yes" : "no") << "\n";
    out << "nilpotency class: "
        << (cls ? std::to_string(*cls) : std::string("none")) << "\n";
    for (const auto& row : j["sylow"])
        out << "Sylow " << row["prime"] << ": order " << row["order"]
            << ", class " << row["class"].dump() << "\n";
    if (!j["quaternion_free"].is_null())
        out << "quaternion-free: "
            << (j["quaternion_free"].get<bool>() ? "yes" : "no") << "\n";
    if (soluble) {
        out << "nilpotent residual order: "
            << j["nilpotent_residual_order"] << "\n";
        out << "nilpotent factor orders:";
        for (int o : j["factor_orders"].get<std::vector<int>>())
            out << " " << o;
        out << "\n";
        out << "Sylow tower: "
            << (j["sylow_tower"].get<bool>() ? "yes" : "no") << "\n";
    }
    if (j["method"].is_null())
        out << "method: none (" << j["method_obstruction"].get<std::string>()
            << ")\n";
    else
        out << "method: " << j["method"].get<std::string>() << "\n";
    return 0;
}

// Appends checks of the derived solution: the braid identity and
// non-degeneracy always, involutivity whenever the addition is commutative.
inline void append_solution_certificates(const SkewBrace& b,
                                         std::vector<Certificate>& certs) {
    Solution s = solution_from_brace(b);
    certs.push_back(check_ybe(s));
    certs.push_back(check_nondegenerate(s));
    if (is_abelian(b.add)) certs.push_back(check_involutive(s));
}

inline int cmd_build(const FiniteGroup& g, const std::string& method,
                     std::uint64_t seed, bool json_out, std::ostream& out) {
    std::string chosen = method == "auto" ? pick_method(g) : method;
    BraceBuild b = run_method(g, chosen, seed);
    append_solution_certificates(b.brace, b.certificates);
    BraceType t = brace_type(b.brace);
    Subgroup ker = kernel(b.brace);
    Subgroup soc = socle(b.brace);
    bool ok = b.all_pass();

    if (json_out) {
        json j;
        j["method"] = chosen;
        j["order"] = b.brace.n();
        j["type"] = t.describe();
        j["kernel_order"] = ker.order();
        j["socle_order"] = soc.order();
        j["certificates"] = certificates_to_json(b.certificates);
        j["pass"] = ok;
        j["brace"] = brace_to_json(b.brace);
        out << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    out << "method " << chosen << ", order " << b.brace.n() << "\n";
    out << "type: " << t.describe() << "\n";
    out << "kernel order " << ker.order() << ", socle order " << soc.order()
        << "\n";
    out << "certificates:\n";
    print_certificates(b.certificates, out);
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

inline int cmd_verify(const SkewBrace& b, bool json_out, std::ostream& out) {
    std::vector<Certificate> certs;
    certs.push_back({"brace axioms validated", true, ""});
    std::string bad;
    for (int a = 0; a < b.n() && bad.empty(); ++a) {
        GroupMap lam = lambda_of(b, a);
        if (!is_homomorphism(lam) || !is_bijective(lam))
            bad = b.labels()[a];
    }
    certs.push_back(
        {"every lambda map is an additive automorphism", bad.empty(), bad});
    Subgroup ker = kernel(b);
    Subgroup soc = socle(b);
    certs.push_back({"kernel is a multiplicative subgroup", true, ""});
    certs.push_back({"socle is a subbrace", true, ""});
    append_solution_certificates(b, certs);
    BraceType t = brace_type(b);
    bool ok = ::solbrace::all_pass(certs);

    if (json_out) {
        json j;
        j["order"] = b.n();
        j["type"] = t.describe();
        j["kernel_order"] = ker.order();
        j["socle_order"] = soc.order();
        j["certificates"] = certificates_to_json(certs);
        j["pass"] = ok;
        out << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    out << "order " << b.n() << "\n";
    out << "type: " << t.describe() << "\n";
    out << "kernel order " << ker.order() << ", socle order " << soc.order()
        << "\n";
    out << "certificates:\n";
    print_certificates(certs, out);
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

inline int cmd_solution(const SkewBrace& b, bool json_out,
                        std::ostream& out) {
    Solution s = solution_from_brace(b);
    std::vector<Certificate> certs;
    certs.push_back(check_ybe(s));
    certs.push_back(check_nondegenerate(s));
    if (is_abelian(b.add)) certs.push_back(check_involutive(s));
    try {
        PermClosure pc = solution_permutation_group(s);
        Quotient q = quotient_group(b.mul, kernel(b));
        bool match = is_isomorphic(pc.group, q.group).has_value();
        certs.push_back({"permutation group matches the multiplicative "
                         "group modulo the kernel",
                         match,
                         match ? ""
                               : "orders " + std::to_string(pc.group.n) +
                                     " and " + std::to_string(q.group.n)});
    } catch (const TooLarge&) {
        certs.push_back(
            {"permutation group closure stayed within bounds", false,
             "closure exceeded the cap"});
    }
    bool ok = ::solbrace::all_pass(certs);

    if (json_out) {
        json j = solution_to_json(s);
        j["certificates"] = certificates_to_json(certs);
        j["pass"] = ok;
        out << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    out << "solution on " << s.n << " points\n";
    out << "certificates:\n";
    print_certificates(certs, out);
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

inline int cmd_catalog(std::ostream& out) {
    out << "named groups:\n";
    for (const std::string& name : catalog_atom_names())
        out << "  " << name << "\n";
    out << "families: cyclic:N  dihedral:N  symmetric:N  alternating:N "
           "(aliases cN dN sN aN)\n";
    out << "direct products join names with x, as in q8xc3\n";
    return 0;
}

}  // namespace solbrace

#endif

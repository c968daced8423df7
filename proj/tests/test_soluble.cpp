#include <catch2/catch_amalgamated.hpp>

#include "solbrace/catalog.hpp"
#include "solbrace/isomorphism.hpp"
#include "solbrace/soluble.hpp"
#include "support.hpp"

using namespace solbrace;
using testsupport::all_subgroups;
using testsupport::span;

TEST_CASE("solubility by derived series") {
    REQUIRE(is_soluble(symmetric_group(4)));
    REQUIRE(is_soluble(sl23_group()));
    REQUIRE(is_soluble(dihedral_group(16)));
    REQUIRE_FALSE(is_soluble(alternating_group(5)));
}

TEST_CASE("sylow subgroups by normaliser growth") {
    FiniteGroup s4 = symmetric_group(4);
    Subgroup p2 = sylow_subgroup(s4, 2);
    REQUIRE(p2.order() == 8);
    REQUIRE(is_isomorphic(as_group(p2).group, dihedral_group(8)).has_value());
    REQUIRE(sylow_subgroup(s4, 3).order() == 3);
    REQUIRE(sylow_subgroup(s4, 5).order() == 1);

    FiniteGroup g = direct_product(q8_group(), cyclic_group(3));
    Subgroup p = sylow_subgroup(g, 2);
    REQUIRE(p.order() == 8);
    REQUIRE(is_isomorphic(as_group(p).group, q8_group()).has_value());

    SECTION("oracle: the found set is one of the exhaustively listed Sylows") {
        int sylow_count = 0;
        bool found_matches = false;
        for (const Subgroup& h : all_subgroups(s4))
            if (h.order() == 8) {
                ++sylow_count;
                found_matches = found_matches || h.same_as(p2);
            }
        REQUIRE(sylow_count == 3);  // and 3 = 1 mod 2
        REQUIRE(found_matches);
    }
}

TEST_CASE("hall complements") {
    FiniteGroup s4 = symmetric_group(4);
    REQUIRE(hall_complement(s4, 2).order() == 3);
    REQUIRE(hall_complement(s4, 3).order() == 8);
    REQUIRE(hall_complement(sl23_group(), 2).order() == 3);
    REQUIRE_THROWS_AS(hall_complement(alternating_group(5), 2), NotSoluble);

    // searches inside a subgroup stay inside it
    FiniteGroup g = direct_product(symmetric_group(3), cyclic_group(4));
    Subgroup syl2 = sylow_subgroup(g, 2);
    REQUIRE(hall_complement(syl2, 2).order() == 1);
}

TEST_CASE("complement bases") {
    FiniteGroup s3 = symmetric_group(3);
    ComplementBasis basis = complement_basis(s3);
    REQUIRE(basis.primes == std::vector<int>{2, 3});
    REQUIRE(basis.complements[0].order() == 3);  // the 2-complement
    REQUIRE(basis.complements[1].order() == 2);
    REQUIRE(basis.complements[0].same_as(span(s3, {"(0 1 2)"})));

    FiniteGroup s4 = symmetric_group(4);
    ComplementBasis b4 = complement_basis(s4);
    REQUIRE(b4.complements[0].order() == 3);
    REQUIRE(b4.complements[1].order() == 8);
}

TEST_CASE("system normalisers") {
    FiniteGroup s4 = symmetric_group(4);
    Subgroup n4 = system_normalizer(full_subgroup(s4), complement_basis(s4));
    REQUIRE(n4.order() == 2);

    FiniteGroup s3 = symmetric_group(3);
    Subgroup n3 = system_normalizer(full_subgroup(s3), complement_basis(s3));
    REQUIRE(n3.order() == 2);

    SECTION("equals the whole group exactly for nilpotent groups") {
        for (const char* name : {"q8", "d8", "c12", "q8xc3"}) {
            FiniteGroup g = catalog_group(name);
            REQUIRE(system_normalizer(full_subgroup(g), complement_basis(g))
                        .order() == g.n);
        }
        for (const char* name : {"s3", "s4", "a4", "dic12", "f20"}) {
            FiniteGroup g = catalog_group(name);
            REQUIRE(system_normalizer(full_subgroup(g), complement_basis(g))
                        .order() < g.n);
        }
    }

    SECTION("compatible with quotients") {
        // the image of the system normaliser is the system normaliser of
        // the image basis
        for (const char* name : {"s4", "s3", "dic12", "a4"}) {
            FiniteGroup g = catalog_group(name);
            Subgroup n = derived_subgroup(full_subgroup(g));
            Quotient q = quotient_group(g, n);
            ComplementBasis basis = complement_basis(g);

            ComplementBasis image_basis;
            image_basis.of = full_subgroup(q.group);
            for (size_t i = 0; i < basis.primes.size(); ++i) {
                std::set<int> img;
                for (int x : basis.complements[i].members)
                    img.insert(q.class_of[x]);
                image_basis.primes.push_back(basis.primes[i]);
                image_basis.complements.push_back(
                    Subgroup{&q.group, {img.begin(), img.end()}});
            }

            Subgroup sys = system_normalizer(full_subgroup(g), basis);
            std::set<int> sys_img;
            for (int x : sys.members) sys_img.insert(q.class_of[x]);
            Subgroup sys_q =
                system_normalizer(full_subgroup(q.group), image_basis);
            REQUIRE(std::vector<int>(sys_img.begin(), sys_img.end()) ==
                    sys_q.members);
        }
    }
}

TEST_CASE("nilpotent residual") {
    FiniteGroup s4 = symmetric_group(4);
    Subgroup res = nilpotent_residual(full_subgroup(s4));
    REQUIRE(res.order() == 12);

    FiniteGroup s3 = symmetric_group(3);
    REQUIRE(nilpotent_residual(full_subgroup(s3)).order() == 3);
    REQUIRE(nilpotent_residual(full_subgroup(q8_group())).order() == 1);

    SECTION("oracle: smallest normal subgroup with nilpotent quotient") {
        for (const char* name : {"s3", "a4", "dic12"}) {
            FiniteGroup g = catalog_group(name);
            Subgroup res_g = nilpotent_residual(full_subgroup(g));
            int smallest = g.n + 1;
            for (const Subgroup& h : all_subgroups(g)) {
                if (!is_normal_in(h, full_subgroup(g))) continue;
                Quotient q = quotient_group(g, h);
                if (is_nilpotent(full_subgroup(q.group)))
                    smallest = std::min(smallest, h.order());
            }
            REQUIRE(res_g.order() == smallest);
        }
    }
}

TEST_CASE("fitting subgroups") {
    FiniteGroup s4 = symmetric_group(4);
    Subgroup fit = fitting(s4);
    REQUIRE(fit.order() == 4);
    REQUIRE(is_abelian(as_group(fit).group));
    Subgroup fit2 = fitting2(s4);
    REQUIRE(fit2.order() == 12);

    REQUIRE(fitting(symmetric_group(3)).order() == 3);
    REQUIRE(fitting(dihedral_group(8)).order() == 8);

    SECTION("oracle: largest nilpotent normal subgroup") {
        for (const char* name : {"s4", "s3", "dic12", "d12"}) {
            FiniteGroup g = catalog_group(name);
            Subgroup fit_g = fitting(g);
            int largest = 0;
            for (const Subgroup& h : all_subgroups(g)) {
                if (!is_normal_in(h, full_subgroup(g))) continue;
                if (is_nilpotent(h)) largest = std::max(largest, h.order());
            }
            REQUIRE(fit_g.order() == largest);
            REQUIRE(is_nilpotent(fit_g));
            REQUIRE(is_normal_in(fit_g, full_subgroup(g)));
        }
    }

    SECTION("oracle: second fitting via the quotient") {
        FiniteGroup g = symmetric_group(4);
        Quotient q = quotient_group(g, fitting(g));
        Subgroup fq = fitting(q.group);
        Subgroup pre = q.preimage(fq, g);
        REQUIRE(pre.members == fitting2(g).members);
    }
}

TEST_CASE("nilpotent factorisation") {
    FiniteGroup s4 = symmetric_group(4);
    NDecomposition dec = n_decomposition(s4);
    REQUIRE(dec.k() == 3);
    REQUIRE(dec.factors[0].order() == 4);
    REQUIRE(dec.factors[1].order() == 3);
    REQUIRE(dec.factors[2].order() == 2);
    REQUIRE(dec.tails[0].order() == 6);
    REQUIRE(dec.tails[1].order() == 2);
    REQUIRE(dec.tails[2].order() == 1);
    REQUIRE(dec.all_pass());

    FiniteGroup s3 = symmetric_group(3);
    NDecomposition dec3 = n_decomposition(s3);
    REQUIRE(dec3.k() == 2);
    REQUIRE(dec3.factors[0].order() == 3);
    REQUIRE(dec3.factors[1].order() == 2);
    REQUIRE(dec3.all_pass());

    SECTION("nilpotent input gives the two trivial factors") {
        FiniteGroup q8 = q8_group();
        NDecomposition decq = n_decomposition(q8);
        REQUIRE(decq.k() == 2);
        REQUIRE(decq.factors[0].order() == 1);
        REQUIRE(decq.factors[1].order() == 8);
        REQUIRE(decq.all_pass());
    }
    SECTION("insoluble input is refused") {
        REQUIRE_THROWS_AS(n_decomposition(alternating_group(5)), NotSoluble);
    }
    SECTION("factor sylows multiply to ambient sylows") {
        for (int p : {2, 3}) {
            std::vector<int> prod{s4.identity};
            for (const Subgroup& a : dec.factors)
                prod = product_set(s4, prod, sylow_subgroup(a, p).members);
            Subgroup whole = subgroup_generated(s4, prod);
            REQUIRE(static_cast<int>(prod.size()) == whole.order());
            REQUIRE(whole.order() == p_part(s4.n, p));
        }
    }
}

TEST_CASE("centraliser condition over a factorisation") {
    FiniteGroup s4 = symmetric_group(4);
    NDecomposition dec = n_decomposition(s4);
    CentralizerConditionReport rep = verify_centralizer_condition(s4, dec);
    REQUIRE(rep.all_pass());

    FiniteGroup d16 = dihedral_group(16);
    NDecomposition d16dec = n_decomposition(d16);
    try {
        verify_centralizer_condition(d16, d16dec);
        FAIL("expected the class bound to fire");
    } catch (const SylowClassTooBig& e) {
        REQUIRE(e.prime == 2);
    }
}

TEST_CASE("quaternion sections") {
    REQUIRE(q8_free(symmetric_group(4)));
    REQUIRE(q8_free(dihedral_group(8)));
    REQUIRE(q8_free(dihedral_group(16)));
    REQUIRE_FALSE(q8_free(q8_group()));
    REQUIRE_FALSE(q8_free(sl23_group()));
    REQUIRE_FALSE(q8_free(direct_product(q8_group(), cyclic_group(3))));

    SECTION("witness data is a genuine section") {
        // the section holds subgroups of the scanned group, so it must
        // outlive them
        FiniteGroup sl23 = sl23_group();
        auto w = find_q8_section(full_subgroup(sl23));
        REQUIRE(w.has_value());
        Quotient q = quotient_group(w->subgroup, w->kernel);
        REQUIRE(is_isomorphic(q.group, q8_group()).has_value());
    }
    SECTION("groups with no order-8 section at all") {
        REQUIRE(q8_free(catalog_group("dic12")));
        REQUIRE(q8_free(catalog_group("f20")));
    }
    SECTION("size cap") {
        REQUIRE_THROWS_AS(q8_free(cyclic_group(208)), TooLarge);
    }
}

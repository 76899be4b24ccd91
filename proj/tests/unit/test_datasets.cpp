#include <doctest.h>

#include <sstream>

#include "solvspec/datasets.hpp"

using namespace solvspec;
namespace fit = solvspec::fitting;

TEST_SUITE_BEGIN("datasets");

TEST_CASE("the bundled solvation table loads and validates") {
    const auto data = fit::load_reference_datasets();
    CHECK(data.solvation.size() == 22);
    for (const auto& r : data.solvation) {
        CHECK_NOTHROW(r.validate());
        double sum = 0.0;
        for (const auto& c : r.components) sum += c.weight;
        CHECK(sum >= 0.98);
        CHECK(sum <= 1.02);
    }
}

TEST_CASE("specific rows carry the published values") {
    const auto rows = fit::load_reference_datasets().solvation;

    SUBCASE("free tryptophan in water") {
        bool found = false;
        for (const auto& r : rows) {
            if (r.chromophore == "Trp" && r.protein == "none" && r.source == "Lu04CPL") {
                found = true;
                REQUIRE(r.reorganization_energy_cm1);
                CHECK(*r.reorganization_energy_cm1 == 2193.0);
                REQUIRE(r.components.size() == 2);
                CHECK(r.components[0].weight == doctest::Approx(0.55));
                CHECK(r.components[0].tau_ps == doctest::Approx(0.34));
                CHECK(r.components[1].weight == doctest::Approx(0.45));
                CHECK(r.components[1].tau_ps == doctest::Approx(1.6));
                CHECK(!r.unresolved_fast_window);
            }
        }
        CHECK(found);
    }

    SUBCASE("prodan bound to serum albumin has three components") {
        bool found = false;
        for (const auto& r : rows) {
            if (r.chromophore == "Prodan" && r.protein == "HSA") {
                found = true;
                REQUIRE(r.reorganization_energy_cm1);
                CHECK(*r.reorganization_energy_cm1 == 916.0);
                CHECK(r.components.size() == 3);
            }
        }
        CHECK(found);
    }

    SUBCASE("slow-only experiments are marked as unresolved in the fast window") {
        int unresolved = 0;
        for (const auto& r : rows) {
            if (r.unresolved_fast_window) {
                ++unresolved;
                CHECK(r.components.size() == 2);
            }
        }
        // DCM/HSA, both bis-ANS rows, both 4-AP rows, Zn-porphyrin.
        CHECK(unresolved == 6);
    }

    SUBCASE("rows without a reported reorganization energy load as absent") {
        int missing = 0;
        for (const auto& r : rows) {
            if (!r.reorganization_energy_cm1) ++missing;
        }
        CHECK(missing == 3);
    }
}

TEST_CASE("the coupling and timescale tables load") {
    const auto data = fit::load_reference_datasets();
    CHECK(data.delta_scales.size() == 12);
    CHECK(data.timescales.size() == 12);
    for (const auto& d : data.delta_scales) {
        CHECK(d.delta_min_mev > 0.0);
        CHECK(d.delta_max_mev >= d.delta_min_mev);
    }
    bool found_bound = false;
    for (const auto& t : data.timescales) {
        CHECK(t.timescale_min_ps > 0.0);
        CHECK(t.timescale_max_ps >= t.timescale_min_ps);
        if (t.process.find("bound water") != std::string::npos) {
            found_bound = true;
            CHECK(t.timescale_min_ps == 5.0);
            CHECK(t.timescale_max_ps == 50.0);
        }
    }
    CHECK(found_bound);
}

TEST_CASE("missing files are reported") {
    CHECK_THROWS_AS(fit::load_solvation_file("no/such/file.csv"), ParseError);
}

TEST_CASE("malformed rows report the line and field") {
    const std::string header =
        "chromophore,protein,solvent,E_R_cm1,A1,tau1_ps,A2,tau2_ps,A3,tau3_ps,source\n";

    SUBCASE("bad number") {
        std::istringstream in(header + "X,none,water,abc,1,1,,,,,src\n");
        try {
            fit::parse_solvation_csv(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("line 2") != std::string::npos);
            CHECK(msg.find("E_R_cm1") != std::string::npos);
        }
    }

    SUBCASE("weight without a time") {
        std::istringstream in(header + "X,none,water,100,0.5,,0.5,1,,,src\n");
        CHECK_THROWS_AS(fit::parse_solvation_csv(in), ParseError);
    }

    SUBCASE("wrong field count") {
        std::istringstream in(header + "X,none,water,100,1,1\n");
        CHECK_THROWS_AS(fit::parse_solvation_csv(in), ParseError);
    }

    SUBCASE("weights off the simplex") {
        std::istringstream in(header + "X,none,water,100,0.5,1,0.1,2,,,src\n");
        CHECK_THROWS_AS(fit::parse_solvation_csv(in), ParseError);
    }
}

TEST_SUITE_END();

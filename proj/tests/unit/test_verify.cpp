#include <doctest.h>

#include <cmath>

#include "genrest/errors.hpp"
#include "genrest/matq.hpp"
#include "genrest/tables.hpp"
#include "genrest/verify.hpp"
#include "testsupport.hpp"

using namespace genrest;
using testsupport::group;

TEST_CASE("transfer identity for every torus character of GL(2,3)") {
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    const auto& borel = record_by_levi(G, "torus");
    IrreducibleTable chis = dixon_table(*borel.levi);
    REQUIRE(chis.row_count() == 4);
    for (int i = 0; i < chis.row_count(); ++i) {
        auto rep = rodier_check(G, borel, chis.rows[static_cast<size_t>(i)],
                                chis.labels[static_cast<size_t>(i)]);
        CHECK(rep.pass);
        CHECK(rep.cells.size() == 2); // two generic characters at q = 3
        for (const auto& c : rep.cells) {
            CHECK(c.lhs == 1);
            CHECK(c.rhs == 1);
        }
    }
}

TEST_CASE("transfer identity across the rank-two group at q=2") {
    const EnumeratedGroup& G = group(Family::Gsp4, 2);
    const auto& borel = record_by_levi(G, "torus");
    auto rep = rodier_check(G, borel, trivial_character(*borel.levi), "dixon-row-0");
    CHECK(rep.pass);
    REQUIRE(rep.cells.size() == 1);
    CHECK(rep.cells[0].lhs == 1);
    CHECK(rep.cells[0].rhs == 1);
}

TEST_CASE("rodier_check rejects reducible inputs") {
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    const auto& borel = record_by_levi(G, "torus");
    ClassFunction twice = trivial_character(*borel.levi) + trivial_character(*borel.levi);
    CHECK_THROWS_AS(rodier_check(G, borel, twice, "2*1"), StructuralError);
}

TEST_CASE("genericity transfer: principal series of GL(2,3) from the trivial torus character") {
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    const auto& borel = record_by_levi(G, "torus");
    IrreducibleTable t = gl2_table(G);
    auto rep = genericity_transfer_check(G, borel, trivial_character(*borel.levi), "triv", t);
    CHECK(rep.pass);
    for (const auto& c : rep.cells) {
        CHECK(c.lhs == 1);
        CHECK(c.constituents == 1); // 1 + St with only St generic
    }
    // and the induced character really is 1 + St
    ClassFunction ind = hc_induce(G, borel, trivial_character(*borel.levi));
    auto mult = decompose(t, ind);
    long long total = 0;
    for (size_t i = 0; i < mult.size(); ++i) {
        total += mult[i];
        if (mult[i] == 1)
            CHECK((t.labels[i] == "det-twist(0)" || t.labels[i] == "steinberg(0)"));
    }
    CHECK(total == 2);
}

TEST_CASE("genericity transfer through the improper parabolic is the identity case") {
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    const auto& full = record_by_levi(G, "full");
    IrreducibleTable t = gl2_table(G);
    for (int i = 0; i < t.row_count(); ++i) {
        if (t.labels[static_cast<size_t>(i)].rfind("cuspidal", 0) != 0) continue;
        auto rep = genericity_transfer_check(G, full, t.rows[static_cast<size_t>(i)],
                                             t.labels[static_cast<size_t>(i)], t);
        CHECK(rep.pass);
    }
}

TEST_CASE("genericity transfer requires cuspidal input") {
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    const auto& full = record_by_levi(G, "full");
    IrreducibleTable t = gl2_table(G);
    CHECK_THROWS_AS(genericity_transfer_check(G, full, trivial_character(G), "triv", t),
                    StructuralError);
}

TEST_CASE("counterexample: nonzero restriction with zero Whittaker dimension everywhere") {
    for (int q : {2, 3}) {
        auto rep = counterexample_check(q, true, {});
        CHECK(rep.pass);
        bool saw_degree = false;
        for (const auto& [k, v] : rep.params) {
            if (k == "degree") {
                CHECK(v == std::to_string(2 * q));
                saw_degree = true;
            }
            if (k == "control_max_dim") CHECK(v != "0");
        }
        CHECK(saw_degree);
        for (const auto& c : rep.cells) CHECK(c.lhs == 0);
        CHECK(rep.cells.size() == (q == 2 ? 1 : 4));
    }
}

TEST_CASE("multiplicity one across torus characters and generic psi") {
    for (int q : {2, 3}) {
        auto rep = run_mult_one(Family::Gl2, q, {});
        CHECK(rep.pass);
    }
    auto rep = multiplicity_one_suite(group(Family::Gsp4, 2));
    CHECK(rep.pass);
    CHECK(rep.cells.size() == 1); // |T| = 1 and one generic psi
}

TEST_CASE("suite runners merge cells deterministically") {
    auto rep1 = run_rodier(Family::Gl2, 2, "torus", {});
    auto rep2 = run_rodier(Family::Gl2, 2, "torus", {});
    CHECK(rep1.pass);
    CHECK(report_to_json(rep1) == report_to_json(rep2));
    CHECK(report_to_json(rep1).find("\"ms\"") == std::string::npos);
    CHECK(report_to_json(rep1, true).find("\"ms\"") != std::string::npos);
}

TEST_CASE("prime power parsing") {
    CHECK(parse_prime_power(8).p == 2);
    CHECK(parse_prime_power(8).k == 3);
    CHECK(parse_prime_power(9).p == 3);
    CHECK_THROWS_AS(parse_prime_power(6), StructuralError);
    CHECK_THROWS_AS(parse_prime_power(12), StructuralError);
    CHECK_THROWS_AS(parse_prime_power(1), StructuralError);
}

TEST_CASE("order-bound rejection surfaces as a structural error") {
    BuildOptions tiny;
    tiny.order_bound = 10;
    CHECK_THROWS_AS(run_counterexample(3, false, tiny), StructuralError);
}

TEST_CASE("Siegel and Klingen cuspidal inputs factor as gl2-cuspidal x similitude") {
    const EnumeratedGroup& G = group(Family::Gsp4, 3);
    const EnumeratedGroup& L = group(Family::Gl2, 3);
    const FieldTable& F = G.field();
    IrreducibleTable gl2t = gl2_table(L);

    for (const std::string levi_name : {"siegel", "klingen"}) {
        const auto& rec = record_by_levi(G, levi_name);
        const EnumeratedGroup& M = *rec.levi;
        IrreducibleTable mt = dixon_table(M);

        // the GL(2) block and the scalar factor of a Levi element
        auto factors = [&](const MatQ& m) {
            MatQ a = MatQ::zero(2);
            int row0 = levi_name == "siegel" ? 0 : 1;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) a.set(i, j, m.at(i + row0, j + row0));
            int scalar = levi_name == "siegel" ? similitude_factor(F, m) : m.at(0, 0);
            return std::make_pair(L.find_mat(a), scalar);
        };

        int matched = 0;
        for (int r = 0; r < gl2t.row_count(); ++r) {
            if (gl2t.labels[static_cast<size_t>(r)].rfind("cuspidal", 0) != 0) continue;
            for (int j = 0; j < F.q() - 1; ++j) {
                MultiplicativeCharacter lam(F, j);
                ClassFunction f = zero_function(M);
                for (int c = 0; c < M.class_count(); ++c) {
                    auto [a_elem, scalar] = factors(M.mat(M.cls(c).rep));
                    REQUIRE(a_elem >= 0);
                    f.vals[static_cast<size_t>(c)] =
                        gl2t.rows[static_cast<size_t>(r)].at_elem(a_elem) * lam(scalar);
                }
                CHECK(round_to_int(inner(f, f), kIntTol, "norm") == 1);
                CHECK(is_cuspidal(f));
                // the tensor is one of the table rows
                bool found = false;
                for (const auto& row : mt.rows) {
                    double dist = 0;
                    for (size_t k = 0; k < row.vals.size(); ++k)
                        dist = std::max(dist, std::abs(row.vals[k] - f.vals[k]));
                    if (dist < 1e-6) { found = true; break; }
                }
                CHECK(found);
                ++matched;
            }
        }
        CHECK(matched == 6); // q(q-1)/2 cuspidal rows x (q-1) scalar characters

        // and those are exactly the cuspidal rows of the table
        int cuspidal_rows = 0;
        for (const auto& row : mt.rows)
            if (is_cuspidal(row)) ++cuspidal_rows;
        CHECK(cuspidal_rows == 6);
    }
}

TEST_CASE("genericity transfer holds at the rank-two group for q=3 as well") {
    auto rep = run_transfer(Family::Gsp4, 3, "siegel", {});
    CHECK(rep.pass);
    CHECK(!rep.cells.empty());
    for (const auto& c : rep.cells)
        if (c.lhs > 0) CHECK(c.constituents == 1);
}

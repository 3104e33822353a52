#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "genrest/errors.hpp"
#include "genrest/tables.hpp"
#include "testsupport.hpp"

using namespace genrest;
using testsupport::group;
using testsupport::subgroup_from;

namespace {
std::multiset<long long> degree_multiset(const IrreducibleTable& t) {
    std::multiset<long long> out;
    for (const auto& r : t.rows) out.insert(r.degree());
    return out;
}
} // namespace

TEST_CASE("closed-form GL(2) degrees") {
    CHECK(degree_multiset(gl2_table(group(Family::Gl2, 2))) == std::multiset<long long>{1, 1, 2});
    CHECK(degree_multiset(gl2_table(group(Family::Gl2, 3))) ==
          std::multiset<long long>{1, 1, 2, 2, 2, 3, 3, 4});
}

TEST_CASE("sum of squared degrees is the group order") {
    for (int q : {2, 3, 4, 5}) {
        const EnumeratedGroup& G = group(Family::Gl2, q);
        IrreducibleTable t = gl2_table(G);
        long long s = 0;
        for (const auto& r : t.rows) s += r.degree() * r.degree();
        CHECK(s == G.size());
        CHECK(t.row_count() == G.class_count());
    }
}

TEST_CASE("constructive Steinberg character") {
    CHECK(steinberg(group(Family::Gl2, 2)).degree() == 2);
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    ClassFunction st = steinberg(G);
    CHECK(st.degree() == 3);
    CHECK(round_to_int(inner(st, st), kIntTol, "norm") == 1);
    // matches the untwisted Steinberg row of the closed-form table exactly
    IrreducibleTable t = gl2_table(G);
    for (int i = 0; i < t.row_count(); ++i)
        if (t.labels[static_cast<size_t>(i)] == "steinberg(0)")
            for (size_t k = 0; k < st.vals.size(); ++k)
                CHECK(std::abs(st.vals[k] - t.rows[static_cast<size_t>(i)].vals[k]) < 1e-9);
}

TEST_CASE("class-algebra table of the trivial group") {
    const EnumeratedGroup& G = group(Family::Gl2, 2);
    auto triv = subgroup_from(G, {G.identity()}, Structure::Torus);
    IrreducibleTable t = dixon_table(*triv);
    CHECK(t.row_count() == 1);
    CHECK(t.rows[0].degree() == 1);
}

TEST_CASE("class-algebra table matches the closed form up to row order") {
    for (int q : {2, 3, 5}) {
        const EnumeratedGroup& G = group(Family::Gl2, q);
        IrreducibleTable closed = gl2_table(G);
        IrreducibleTable dx = dixon_table(G);
        auto perm = match_rows(closed, dx, 1e-6);
        std::set<int> targets(perm.begin(), perm.end());
        CHECK(static_cast<int>(targets.size()) == closed.row_count());
    }
}

TEST_CASE("class-algebra table of the order-720 symplectic similitude group") {
    const EnumeratedGroup& G = group(Family::Gsp4, 2);
    IrreducibleTable t = dixon_table(G);
    CHECK(t.row_count() == G.class_count());
    long long s = 0;
    for (const auto& r : t.rows) s += r.degree() * r.degree();
    CHECK(s == 720);
    // this group is the full symmetry group of 6 letters
    CHECK(degree_multiset(t) == std::multiset<long long>{1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16});
}

TEST_CASE("every degree divides the group order") {
    for (const EnumeratedGroup* G :
         {&group(Family::Gl2, 3), &group(Family::Gl2, 5), &group(Family::Gsp4, 2),
          &group(Family::ParamodularLevi, 2), &group(Family::ParamodularLevi, 3)}) {
        IrreducibleTable t = dixon_table(*G);
        for (const auto& r : t.rows) CHECK(G->size() % r.degree() == 0);
    }
}

TEST_CASE("orthogonality within 1e-8 on a nontrivial table") {
    const EnumeratedGroup& G = group(Family::ParamodularLevi, 3);
    IrreducibleTable t = dixon_table(G);
    CHECK_NOTHROW(validate_table(t, 1e-8));
    // spot check one off-diagonal inner product directly
    cplx ip = inner(t.rows[0], t.rows[static_cast<size_t>(t.row_count() - 1)]);
    CHECK(std::abs(ip) < 1e-8);
}

TEST_CASE("closed-form table is rejected off-family") {
    CHECK_THROWS_AS(gl2_table(group(Family::Gsp4, 2)), StructuralError);
}

TEST_CASE("table export is canonical and carries the expected row shape") {
    const EnumeratedGroup& G = group(Family::Gl2, 2);
    IrreducibleTable t = gl2_table(G);
    std::string a = table_to_json(t);
    std::string b = table_to_json(gl2_table(G));
    CHECK(a == b);
    CHECK(a.find("\"label\":\"det-twist(0)\"") != std::string::npos);
    CHECK(a.find("\"degree\":2") != std::string::npos);
    CHECK(a.find("\"class_reps\"") != std::string::npos);
}

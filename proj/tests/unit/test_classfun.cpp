#include <doctest.h>

#include <cmath>
#include <set>

#include "genrest/classfun.hpp"
#include "genrest/errors.hpp"
#include "genrest/modarith.hpp"
#include "genrest/tables.hpp"
#include "testsupport.hpp"

using namespace genrest;
using testsupport::group;
using testsupport::subgroup_from;

namespace {

// independent oracle: |B \ G / B| by orbit counting
int double_coset_count(const EnumeratedGroup& G, const std::vector<int>& b) {
    std::vector<char> seen(static_cast<size_t>(G.size()), 0);
    int count = 0;
    for (int g = 0; g < G.size(); ++g) {
        if (seen[static_cast<size_t>(g)]) continue;
        ++count;
        for (int x : b)
            for (int y : b) seen[static_cast<size_t>(G.mul(G.mul(x, g), y))] = 1;
    }
    return count;
}

ClassFunction random_class_function(const EnumeratedGroup& G, SplitMix64& rng) {
    ClassFunction f = zero_function(G);
    for (auto& v : f.vals)
        v = cplx(static_cast<double>(rng.below(19)) - 9.0, static_cast<double>(rng.below(19)) - 9.0);
    return f;
}

const ParabolicRecord& record(const EnumeratedGroup& G, const std::string& name) {
    for (const auto& rec : G.subgroups().parabolics)
        if (rec.name == name) return rec;
    throw StructuralError("no record " + name);
}

// torus class functions live on singleton classes; move one between two
// enumerations of the same element set by key matching
ClassFunction transfer_by_keys(const ClassFunction& f, const EnumeratedGroup& to) {
    const EnumeratedGroup& from = *f.group;
    REQUIRE(from.size() == to.size());
    ClassFunction out = zero_function(to);
    for (int c = 0; c < to.class_count(); ++c) {
        int e = from.find(to.key(to.cls(c).rep));
        REQUIRE(e >= 0);
        out.vals[static_cast<size_t>(c)] = f.at_elem(e);
    }
    return out;
}

} // namespace

TEST_CASE("inner products: trivial character and induced-from-Borel norms") {
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    ClassFunction one = trivial_character(G);
    CHECK(round_to_int(inner(one, one), kIntTol, "norm") == 1);

    ClassFunction indb = induce_from_subset(G, G.subgroups().borel, [](int) { return cplx(1, 0); });
    CHECK(round_to_int(inner(indb, indb), kIntTol, "norm") == double_coset_count(G, G.subgroups().borel));
    CHECK(round_to_int(inner(indb, indb), kIntTol, "norm") == 2);

    const EnumeratedGroup& H = group(Family::Gsp4, 2);
    ClassFunction indh = induce_from_subset(H, H.subgroups().borel, [](int) { return cplx(1, 0); });
    CHECK(round_to_int(inner(indh, indh), kIntTol, "norm") == double_coset_count(H, H.subgroups().borel));
    CHECK(round_to_int(inner(indh, indh), kIntTol, "norm") == 8);
}

TEST_CASE("induction basics: identity induction and degree scaling") {
    const EnumeratedGroup& G = group(Family::Gl2, 2);
    auto Gself = subgroup_from(G, [&] {
        std::vector<int> all(static_cast<size_t>(G.size()));
        for (int i = 0; i < G.size(); ++i) all[static_cast<size_t>(i)] = i;
        return all;
    }());
    ClassFunction st = steinberg(G);
    ClassFunction moved = transfer_by_keys(st, *Gself);
    ClassFunction back = induce(G, *Gself, moved);
    for (size_t i = 0; i < back.vals.size(); ++i) CHECK(std::abs(back.vals[i] - st.vals[i]) < 1e-9);

    ClassFunction indb = induce_from_subset(G, G.subgroups().borel, [](int) { return cplx(1, 0); });
    CHECK(indb.degree() == 3); // [G : B]
}

TEST_CASE("Frobenius reciprocity on random pairs through the Borel") {
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    auto B = subgroup_from(G, G.subgroups().borel);
    SplitMix64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        ClassFunction chi = random_class_function(*B, rng);
        ClassFunction pi = random_class_function(G, rng);
        cplx lhs = inner(induce(G, *B, chi), pi);
        cplx rhs = inner(chi, restrict_to(pi, *B));
        CHECK(std::abs(lhs - rhs) < 1e-6);
    }
}

TEST_CASE("restriction: trivial stays trivial, degree preserved, tensor blocks") {
    const EnumeratedGroup& G = group(Family::Gl2Product, 2);
    const EnumeratedGroup& P = group(Family::ParamodularLevi, 2);
    const EnumeratedGroup& L = group(Family::Gl2, 2);

    ClassFunction oneP = restrict_to(trivial_character(G), P);
    for (const auto& v : oneP.vals) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);

    ClassFunction st = steinberg(L);
    ClassFunction st_one = outer_tensor_on_blocks(G, L, st, trivial_character(L));
    CHECK(st_one.degree() == 2);
    ClassFunction rho = restrict_to(st_one, P);
    CHECK(rho.degree() == 2);
}

TEST_CASE("Harish-Chandra induction: improper identity and degree indices") {
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    const auto& full = record(G, "full");
    ClassFunction st = steinberg(G);
    ClassFunction same = hc_induce(G, full, st);
    for (size_t i = 0; i < same.vals.size(); ++i) CHECK(std::abs(same.vals[i] - st.vals[i]) < 1e-12);

    const auto& borel = record(G, "borel");
    ClassFunction ind = hc_induce(G, borel, trivial_character(*borel.levi));
    CHECK(ind.degree() == 4); // q + 1

    const EnumeratedGroup& H = group(Family::Gsp4, 2);
    const auto& siegel = record(H, "siegel");
    IrreducibleTable mt = dixon_table(*siegel.levi);
    for (int i = 0; i < mt.row_count(); ++i) {
        long long deg = mt.rows[static_cast<size_t>(i)].degree();
        if (deg != 2) continue; // Steinberg-type of the GL(2) factor
        ClassFunction big = hc_induce(H, siegel, mt.rows[static_cast<size_t>(i)]);
        long long index = H.size() / static_cast<long long>(siegel.p_elems.size());
        CHECK(big.degree() == index * deg);
    }
}

TEST_CASE("Harish-Chandra restriction: trivial, cuspidal kill, adjunction") {
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    const auto& borel = record(G, "borel");
    ClassFunction resid = hc_restrict(G, borel, trivial_character(G));
    for (const auto& v : resid.vals) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);

    IrreducibleTable t = gl2_table(G);
    for (int i = 0; i < t.row_count(); ++i) {
        if (t.labels[static_cast<size_t>(i)].rfind("cuspidal", 0) != 0) continue;
        CHECK(is_zero_function(hc_restrict(G, borel, t.rows[static_cast<size_t>(i)])));
    }

    SplitMix64 rng(202);
    for (const auto* Gp : {&group(Family::Gl2, 3), &group(Family::Gsp4, 2)}) {
        for (const auto& rec : Gp->subgroups().parabolics) {
            if (!rec.proper) continue;
            for (int trial = 0; trial < 20; ++trial) {
                ClassFunction sigma = random_class_function(*rec.levi, rng);
                ClassFunction pi = random_class_function(*Gp, rng);
                cplx lhs = inner(hc_induce(*Gp, rec, sigma), pi);
                cplx rhs = inner(sigma, hc_restrict(*Gp, rec, pi));
                CHECK(std::abs(lhs - rhs) < 1e-6);
            }
        }
    }
}

TEST_CASE("adjunction exhaustively over irreducible pairs at q=2") {
    for (Family fam : {Family::Gl2, Family::Gsp4}) {
        const EnumeratedGroup& G = group(fam, 2);
        IrreducibleTable gt = dixon_table(G);
        for (const auto& rec : G.subgroups().parabolics) {
            if (!rec.proper) continue;
            IrreducibleTable mt = dixon_table(*rec.levi);
            for (const auto& sigma : mt.rows)
                for (const auto& pi : gt.rows) {
                    cplx lhs = inner(hc_induce(G, rec, sigma), pi);
                    cplx rhs = inner(sigma, hc_restrict(G, rec, pi));
                    CHECK(std::abs(lhs - rhs) < 1e-6);
                }
        }
    }
}

TEST_CASE("cuspidality by vanishing restriction") {
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    CHECK_FALSE(is_cuspidal(trivial_character(G)));
    CHECK_FALSE(is_cuspidal(steinberg(G)));
    IrreducibleTable t = gl2_table(G);
    int cuspidal_rows = 0;
    for (int i = 0; i < t.row_count(); ++i)
        if (t.labels[static_cast<size_t>(i)].rfind("cuspidal", 0) == 0) {
            CHECK(is_cuspidal(t.rows[static_cast<size_t>(i)]));
            ++cuspidal_rows;
        }
    CHECK(cuspidal_rows == 3); // q(q-1)/2
}

TEST_CASE("induction in stages equals direct induction") {
    for (int q : {2, 3}) {
        const EnumeratedGroup& G = group(Family::Gsp4, q);
        const auto& gborel = record(G, "borel");
        IrreducibleTable torus_chars = dixon_table(*gborel.levi);
        for (const std::string levi_name : {"siegel", "klingen"}) {
            const auto& prec = record(G, levi_name);
            const EnumeratedGroup& M = *prec.levi;
            const auto& mborel = record(M, "borel");
            for (int i = 0; i < torus_chars.row_count(); ++i) {
                ClassFunction chiT = torus_chars.rows[static_cast<size_t>(i)];
                ClassFunction direct = hc_induce(G, gborel, chiT);
                ClassFunction staged =
                    hc_induce(G, prec, hc_induce(M, mborel, transfer_by_keys(chiT, *mborel.levi)));
                for (size_t k = 0; k < direct.vals.size(); ++k)
                    CHECK(std::abs(direct.vals[k] - staged.vals[k]) < 1e-6);
            }
        }
    }
}

TEST_CASE("induced characters decompose with non-negative integer multiplicities") {
    const EnumeratedGroup& G = group(Family::Gl2, 3);
    IrreducibleTable t = gl2_table(G);
    const auto& borel = record(G, "borel");
    IrreducibleTable torus_chars = dixon_table(*borel.levi);
    for (int i = 0; i < torus_chars.row_count(); ++i) {
        ClassFunction ind = hc_induce(G, borel, torus_chars.rows[static_cast<size_t>(i)]);
        auto mult = decompose(t, ind);
        long long total = 0;
        for (size_t r = 0; r < mult.size(); ++r) {
            CHECK(mult[r] >= 0);
            total += mult[r] * t.rows[r].degree();
        }
        CHECK(total == ind.degree());
    }
}

TEST_CASE("group mismatch is rejected") {
    ClassFunction a = trivial_character(group(Family::Gl2, 3));
    ClassFunction b = trivial_character(group(Family::Gl2, 2));
    CHECK_THROWS_AS(inner(a, b), StructuralError);
}

// Acceptance suite: every release criterion, run end to end at its stated
// tolerance, one pass/fail line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "genrest/cache.hpp"
#include "genrest/classfun.hpp"
#include "genrest/field.hpp"
#include "genrest/genericity.hpp"
#include "genrest/groups.hpp"
#include "genrest/tables.hpp"
#include "genrest/verify.hpp"

using namespace genrest;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool check(bool cond, std::string& detail, const std::string& what) {
    if (!cond) detail += (detail.empty() ? "" : "; ") + what;
    return cond;
}

// 1. Restriction of 1 (x) St + St (x) 1 to the det-matched pair group is a
//    nonzero degree-2q character with Whittaker dimension 0 for every generic
//    psi, at q in {2, 3}, each within 10 s.
bool crit_counterexample(std::string& detail) {
    bool ok = true;
    for (int q : {2, 3}) {
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport rep = run_counterexample(q, false, {});
        double secs = seconds_since(t0);
        ok &= check(rep.pass, detail, "q=" + std::to_string(q) + " failed");
        bool deg_ok = false;
        for (const auto& [k, v] : rep.params)
            if (k == "degree" && v == std::to_string(2 * q)) deg_ok = true;
        ok &= check(deg_ok, detail, "q=" + std::to_string(q) + " degree != 2q");
        for (const auto& c : rep.cells)
            ok &= check(c.lhs == 0, detail, "q=" + std::to_string(q) + " " + c.psi + " nonzero");
        ok &= check(!rep.cells.empty(), detail, "no generic psi enumerated");
        ok &= check(secs < 10.0, detail, "q=" + std::to_string(q) + " exceeded 10 s");
    }
    return ok;
}

// 2. Whittaker transfer identity, exhaustively over every proper Levi and
//    every irreducible sigma, for gl2 and gsp4 at q in {2, 3}; under 5 min.
bool crit_rodier(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    struct Row {
        Family fam;
        int q;
        std::vector<std::string> levis;
    };
    const std::vector<Row> rows = {{Family::Gl2, 2, {"torus"}},
                                   {Family::Gl2, 3, {"torus"}},
                                   {Family::Gsp4, 2, {"torus", "siegel", "klingen"}},
                                   {Family::Gsp4, 3, {"torus", "siegel", "klingen"}}};
    for (const auto& row : rows)
        for (const auto& levi : row.levis) {
            VerificationReport rep = run_rodier(row.fam, row.q, levi, {});
            ok &= check(rep.pass, detail,
                        std::string(family_name(row.fam)) + " q=" + std::to_string(row.q) + " " + levi);
        }
    ok &= check(seconds_since(t0) < 300.0, detail, "exceeded 5 min");
    return ok;
}

// 3. Whittaker dimension of Ind_B^G chi is exactly 1 for every torus
//    character chi and every generic psi; gl2 and gsp4, q in {2, 3}; under 2 min.
bool crit_mult_one(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (Family fam : {Family::Gl2, Family::Gsp4})
        for (int q : {2, 3}) {
            VerificationReport rep = run_mult_one(fam, q, {});
            ok &= check(rep.pass, detail, std::string(family_name(fam)) + " q=" + std::to_string(q));
            for (const auto& c : rep.cells)
                ok &= check(c.lhs == 1, detail, c.psi + " dim != 1");
        }
    ok &= check(seconds_since(t0) < 120.0, detail, "exceeded 2 min");
    return ok;
}

// 4. Genericity transfer at gsp4 q=2: every cuspidal sigma of every proper
//    Levi induces a character with exactly one generic irreducible
//    constituent per generic psi; under 3 min.
bool crit_transfer(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = run_transfer(Family::Gsp4, 2, "all", {});
    bool ok = check(rep.pass, detail, "transfer suite failed");
    for (const auto& c : rep.cells)
        if (c.lhs > 0) ok &= check(c.constituents == 1, detail, c.psi + " constituents != 1");
    ok &= check(seconds_since(t0) < 180.0, detail, "exceeded 3 min");
    return ok;
}

// 5. gl2 closed-form table equals the class-algebra table up to row
//    permutation at q in {2, 3, 5}; orthogonality within 1e-8 on both; sum of
//    squared degrees exactly |G|.
bool crit_tables(std::string& detail) {
    bool ok = true;
    for (int q : {2, 3, 5}) {
        FieldTable F = field_build(parse_prime_power(q));
        auto G = build_group(Family::Gl2, F, {});
        IrreducibleTable closed = gl2_table(*G);
        IrreducibleTable dx = dixon_table(*G);
        try {
            validate_table(closed, 1e-8);
            validate_table(dx, 1e-8);
        } catch (const std::exception& e) {
            ok &= check(false, detail, "orthogonality q=" + std::to_string(q) + ": " + e.what());
        }
        long long s1 = 0, s2 = 0;
        for (const auto& r : closed.rows) s1 += r.degree() * r.degree();
        for (const auto& r : dx.rows) s2 += r.degree() * r.degree();
        ok &= check(s1 == G->size() && s2 == G->size(), detail, "sum d^2 q=" + std::to_string(q));
        try {
            match_rows(closed, dx, 1e-6);
        } catch (const std::exception& e) {
            ok &= check(false, detail, "row match q=" + std::to_string(q) + ": " + e.what());
        }
    }
    return ok;
}

// 6. The stabilizer-equals-center criterion, the trivial-adjoint-stabilizer
//    criterion and the coordinate criterion agree on every U-character of
//    every family at q in {2, 3}.
bool crit_equivalence(std::string& detail) {
    bool ok = true;
    for (Family fam : {Family::Gl2, Family::Sp4, Family::Gsp4, Family::ParamodularLevi})
        for (int q : {2, 3}) {
            FieldTable F = field_build(parse_prime_power(q));
            auto G = build_group(fam, F, {});
            int generic = 0;
            for (const auto& psi : enumerate_u_characters(*G)) {
                try {
                    GenericityReport rep = is_generic(psi);
                    bool agree = rep.crit_stabilizer_center == rep.crit_tad_trivial &&
                                 rep.crit_stabilizer_center == rep.crit_coordinates;
                    ok &= check(agree, detail,
                                std::string(family_name(fam)) + " q=" + std::to_string(q) + " " +
                                    psi.label());
                    if (rep.generic) ++generic;
                } catch (const std::exception& e) {
                    ok &= check(false, detail, std::string("disagreement: ") + e.what());
                }
            }
            ok &= check(generic > 0, detail,
                        std::string(family_name(fam)) + " q=" + std::to_string(q) + " no generic psi");
        }
    return ok;
}

// 7. Structural oracles: enumerated orders match the closed-form formulas,
//    class partitions sum to |G|, and B cap w_o B w_o^{-1} = T.
bool crit_structural(std::string& detail) {
    bool ok = true;
    for (Family fam : {Family::Gl2, Family::Sp4, Family::Gsp4, Family::ParamodularLevi})
        for (int q : {2, 3}) {
            FieldTable F = field_build(parse_prime_power(q));
            auto G = build_group(fam, F, {});
            std::string tag = std::string(family_name(fam)) + " q=" + std::to_string(q);
            ok &= check(static_cast<long long>(G->size()) == family_order_formula(fam, q), detail,
                        tag + " order");
            long long total = 0;
            for (int c = 0; c < G->class_count(); ++c)
                total += static_cast<long long>(G->cls(c).members.size());
            ok &= check(total == G->size(), detail, tag + " class partition");
            const auto& sub = G->subgroups();
            std::vector<int> both;
            {
                std::vector<char> in_b(static_cast<size_t>(G->size()), 0);
                for (int b : sub.borel) in_b[static_cast<size_t>(b)] = 1;
                int w = sub.weyl_long, winv = G->inv(w);
                for (int b : sub.borel)
                    if (in_b[static_cast<size_t>(G->mul(G->mul(winv, b), w))]) both.push_back(b);
            }
            ok &= check(both == sub.torus, detail, tag + " w_o identity");
        }
    return ok;
}

// 8. Two consecutive runs of the full verification suite produce
//    byte-identical JSON reports (the second run reads the cache the first
//    one wrote, so cached and fresh paths must agree byte for byte).
bool crit_determinism(std::string& detail) {
    auto tmp = std::filesystem::temp_directory_path() / "genrest-acceptance-cache";
    std::filesystem::remove_all(tmp);
    BuildOptions opts;
    opts.cache_dir = tmp.string();

    auto run_suite = [&]() {
        std::string out;
        out += report_to_json(run_counterexample(2, false, opts)) + "\n";
        out += report_to_json(run_counterexample(3, false, opts)) + "\n";
        out += report_to_json(run_rodier(Family::Gl2, 2, "torus", opts)) + "\n";
        out += report_to_json(run_rodier(Family::Gsp4, 2, "torus", opts)) + "\n";
        out += report_to_json(run_mult_one(Family::Gsp4, 2, opts)) + "\n";
        out += report_to_json(run_transfer(Family::Gsp4, 2, "all", opts)) + "\n";
        return out;
    };
    std::string first = run_suite();
    std::string second = run_suite();
    bool ok = check(first == second, detail, "reports differ between consecutive runs");
    ok &= check(first.find("\"pass\":true") != std::string::npos, detail, "suite did not pass");
    std::filesystem::remove_all(tmp);
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 counterexample reproduction (q=2,3)", crit_counterexample},
        {"2 Whittaker transfer identity, exhaustive (gl2/gsp4, q=2,3)", crit_rodier},
        {"3 multiplicity one for Ind_B^G chi (gl2/gsp4, q=2,3)", crit_mult_one},
        {"4 genericity transfer via full decomposition (gsp4, q=2)", crit_transfer},
        {"5 table correctness: closed form vs class algebra (q=2,3,5)", crit_tables},
        {"6 genericity definition equivalence (all families, q=2,3)", crit_equivalence},
        {"7 structural oracles: orders, partitions, Weyl identity", crit_structural},
        {"8 determinism: byte-identical reports across runs", crit_determinism},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double secs = seconds_since(t0);
        std::printf("[%s] criterion %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}

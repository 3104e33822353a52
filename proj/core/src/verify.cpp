#include "genrest/verify.hpp"

#include <algorithm>
#include <chrono>

#include "genrest/errors.hpp"
#include "genrest/json_writer.hpp"

namespace genrest {

namespace {

class Stopwatch {
public:
    long long ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// dim Hom_Q(sigma, psi_M): average of sigma(x) conj(psi(w_o^{-1} x w_o)) over Q
long long transfer_rhs(const EnumeratedGroup& G, const ParabolicRecord& rec, const ClassFunction& sigma,
                       const UnipotentCharacter& psi) {
    const int w = G.subgroups().weyl_long;
    const int winv = G.inv(w);
    cplx acc(0, 0);
    for (int x : rec.q_elems) {
        int y = G.mul(G.mul(winv, x), w); // lands in U by construction of Q
        cplx sv;
        if (rec.proper) {
            const EnumeratedGroup& M = *rec.levi;
            int mx = M.find(G.key(x));
            if (mx < 0) throw StructuralError("Q element missing from the Levi group");
            sv = sigma.at_elem(mx);
        } else {
            sv = sigma.at_elem(x);
        }
        acc += sv * std::conj(psi.value(y));
    }
    if (rec.q_elems.empty()) throw StructuralError("empty Q in a parabolic record");
    long long d = round_to_int(acc / static_cast<double>(rec.q_elems.size()), kIntTol, "transfer dimension");
    if (d < 0) throw IntegralityError("negative transfer dimension");
    return d;
}

std::string q_string(const EnumeratedGroup& G) { return std::to_string(G.field().q()); }

} // namespace

const ParabolicRecord& record_by_levi(const EnumeratedGroup& G, const std::string& levi) {
    std::string want = levi == "torus" ? "borel" : levi;
    for (const auto& rec : G.subgroups().parabolics)
        if (rec.name == want) return rec;
    throw StructuralError("no parabolic record with Levi '" + levi + "' for this family");
}

FieldSpec parse_prime_power(int q) {
    if (q < 2) throw StructuralError("q must be at least 2");
    int p = q;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    int k = 0;
    long long acc = 1;
    while (acc < q) {
        acc *= p;
        ++k;
    }
    if (acc != q) throw StructuralError(std::to_string(q) + " is not a prime power");
    return FieldSpec::make(p, k);
}

std::string report_to_json(const VerificationReport& r, bool include_ms) {
    JsonWriter w;
    w.begin_object();
    w.key("statement");
    w.value(r.statement);
    w.key("params");
    w.begin_object();
    for (const auto& [k, v] : r.params) {
        w.key(k);
        w.value(v);
    }
    w.end_object();
    w.key("cells");
    w.begin_array();
    for (const auto& c : r.cells) {
        w.begin_object();
        w.key("psi");
        w.value(c.psi);
        w.key("lhs");
        w.value(c.lhs);
        w.key("rhs");
        w.value(c.rhs);
        if (c.constituents >= 0) {
            w.key("constituents");
            w.value(c.constituents);
        }
        w.end_object();
    }
    w.end_array();
    w.key("pass");
    w.value(r.pass);
    if (include_ms) {
        w.key("ms");
        w.value(r.wall_ms);
    }
    w.end_object();
    return w.str();
}

VerificationReport rodier_check(const EnumeratedGroup& G, const ParabolicRecord& rec,
                                const ClassFunction& sigma, const std::string& sigma_label) {
    Stopwatch sw;
    if (round_to_int(inner(sigma, sigma), kIntTol, "sigma norm") != 1)
        throw StructuralError("rodier_check requires an irreducible sigma");
    VerificationReport rep;
    rep.statement = "rodier";
    rep.params = {{"family", family_name(G.family())},
                  {"q", q_string(G)},
                  {"levi", rec.name},
                  {"sigma", sigma_label}};
    ClassFunction ind = hc_induce(G, rec, sigma);
    rep.pass = true;
    for (const auto& psi : generic_characters(G)) {
        VerificationCell cell;
        cell.psi = psi.label();
        cell.lhs = whittaker_dim(ind, psi);
        cell.rhs = transfer_rhs(G, rec, sigma, psi);
        if (cell.lhs != cell.rhs) rep.pass = false;
        rep.cells.push_back(std::move(cell));
    }
    rep.wall_ms = sw.ms();
    return rep;
}

VerificationReport genericity_transfer_check(const EnumeratedGroup& G, const ParabolicRecord& rec,
                                             const ClassFunction& sigma, const std::string& sigma_label,
                                             const IrreducibleTable& g_table) {
    Stopwatch sw;
    if (!is_cuspidal(sigma)) throw StructuralError("genericity transfer requires a cuspidal sigma");
    VerificationReport rep;
    rep.statement = "transfer";
    rep.params = {{"family", family_name(G.family())},
                  {"q", q_string(G)},
                  {"levi", rec.name},
                  {"sigma", sigma_label}};
    ClassFunction ind = hc_induce(G, rec, sigma);
    auto mults = decompose(g_table, ind);
    long long degsum = 0;
    for (size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] < 0) throw IntegralityError("negative multiplicity in the decomposition");
        degsum += mults[i] * g_table.rows[i].degree();
    }
    if (degsum != ind.degree()) throw StructuralError("decomposition residual: degrees do not add up");

    rep.pass = true;
    for (const auto& psi : generic_characters(G)) {
        VerificationCell cell;
        cell.psi = psi.label();
        cell.lhs = whittaker_dim(ind, psi);
        cell.rhs = transfer_rhs(G, rec, sigma, psi);
        long long generic_constituents = 0;
        bool mult_free_generic = true;
        for (size_t i = 0; i < mults.size(); ++i) {
            if (mults[i] == 0) continue;
            long long w = whittaker_dim(g_table.rows[i], psi);
            if (w == 1) ++generic_constituents;
            if (w > 1) mult_free_generic = false;
        }
        cell.constituents = generic_constituents;
        if (cell.lhs != cell.rhs || !mult_free_generic ||
            generic_constituents != (cell.lhs > 0 ? 1 : 0))
            rep.pass = false;
        rep.cells.push_back(std::move(cell));
    }
    rep.wall_ms = sw.ms();
    return rep;
}

VerificationReport counterexample_check(int q, bool control, const BuildOptions& opts) {
    Stopwatch sw;
    FieldTable F = field_build(parse_prime_power(q));
    auto Ggl2 = build_group(Family::Gl2, F, opts);
    auto Gprod = build_group(Family::Gl2Product, F, opts);
    auto Gpml = build_group(Family::ParamodularLevi, F, opts);

    ClassFunction st = steinberg(*Ggl2);
    ClassFunction one = trivial_character(*Ggl2);
    ClassFunction big = outer_tensor_on_blocks(*Gprod, *Ggl2, one, st) +
                        outer_tensor_on_blocks(*Gprod, *Ggl2, st, one);
    ClassFunction rho = restrict_to(big, *Gpml);

    VerificationReport rep;
    rep.statement = "counterexample";
    rep.params = {{"family", family_name(Family::ParamodularLevi)}, {"q", std::to_string(q)}};
    long long deg = rho.degree();
    rep.params.emplace_back("degree", std::to_string(deg));
    rep.pass = deg == 2LL * q && !is_zero_function(rho);

    for (const auto& psi : generic_characters(*Gpml)) {
        VerificationCell cell;
        cell.psi = psi.label();
        cell.lhs = whittaker_dim(rho, psi);
        cell.rhs = 0;
        if (cell.lhs != 0) rep.pass = false;
        rep.cells.push_back(std::move(cell));
    }

    if (control) {
        // St (x) St restricted the same way must be detected as generic
        ClassFunction rho2 = restrict_to(outer_tensor_on_blocks(*Gprod, *Ggl2, st, st), *Gpml);
        long long best = 0;
        for (const auto& psi : generic_characters(*Gpml))
            best = std::max(best, whittaker_dim(rho2, psi));
        rep.params.emplace_back("control_max_dim", std::to_string(best));
        if (best < 1) rep.pass = false;
    }
    rep.wall_ms = sw.ms();
    return rep;
}

VerificationReport multiplicity_one_suite(const EnumeratedGroup& G) {
    Stopwatch sw;
    VerificationReport rep;
    rep.statement = "mult-one";
    rep.params = {{"family", family_name(G.family())}, {"q", q_string(G)}};
    const ParabolicRecord& borel = record_by_levi(G, "torus");
    IrreducibleTable torus_chars = dixon_table(*borel.levi);
    auto psis = generic_characters(G);
    rep.pass = true;
    for (int i = 0; i < torus_chars.row_count(); ++i) {
        ClassFunction ind = hc_induce(G, borel, torus_chars.rows[static_cast<size_t>(i)]);
        for (const auto& psi : psis) {
            VerificationCell cell;
            cell.psi = "chi=" + std::to_string(i) + "|" + psi.label();
            cell.lhs = whittaker_dim(ind, psi);
            cell.rhs = 1;
            if (cell.lhs != 1) rep.pass = false;
            rep.cells.push_back(std::move(cell));
        }
    }
    rep.wall_ms = sw.ms();
    return rep;
}

namespace {

VerificationReport merge_reports(std::string statement,
                                 std::vector<std::pair<std::string, std::string>> params,
                                 const std::vector<VerificationReport>& parts, long long ms) {
    VerificationReport rep;
    rep.statement = std::move(statement);
    rep.params = std::move(params);
    rep.pass = true;
    for (const auto& part : parts) {
        if (!part.pass) rep.pass = false;
        std::string sigma;
        for (const auto& [k, v] : part.params)
            if (k == "sigma") sigma = v;
        for (const auto& c : part.cells) {
            VerificationCell cell = c;
            if (!sigma.empty()) cell.psi = "sigma=" + sigma + "|" + cell.psi;
            rep.cells.push_back(std::move(cell));
        }
    }
    rep.wall_ms = ms;
    return rep;
}

} // namespace

VerificationReport run_rodier(Family family, int q, const std::string& levi, const BuildOptions& opts) {
    Stopwatch sw;
    FieldTable F = field_build(parse_prime_power(q));
    auto G = build_group(family, F, opts);
    const ParabolicRecord& rec = record_by_levi(*G, levi);
    if (!rec.proper) throw StructuralError("rodier suite expects a proper Levi");
    IrreducibleTable mtable = dixon_table(*rec.levi);
    std::vector<VerificationReport> parts;
    for (int i = 0; i < mtable.row_count(); ++i)
        parts.push_back(rodier_check(*G, rec, mtable.rows[static_cast<size_t>(i)],
                                     mtable.labels[static_cast<size_t>(i)]));
    return merge_reports("rodier",
                         {{"family", family_name(family)}, {"q", std::to_string(q)}, {"levi", levi}},
                         parts, sw.ms());
}

VerificationReport run_transfer(Family family, int q, const std::string& levi, const BuildOptions& opts) {
    Stopwatch sw;
    FieldTable F = field_build(parse_prime_power(q));
    auto G = build_group(family, F, opts);
    IrreducibleTable g_table = dixon_table(*G);
    std::vector<VerificationReport> parts;
    for (const auto& rec : G->subgroups().parabolics) {
        if (!rec.proper) continue;
        if (levi != "all" && rec.name != (levi == "torus" ? "borel" : levi)) continue;
        IrreducibleTable mtable = dixon_table(*rec.levi);
        for (int i = 0; i < mtable.row_count(); ++i) {
            const ClassFunction& sigma = mtable.rows[static_cast<size_t>(i)];
            if (!is_cuspidal(sigma)) continue;
            parts.push_back(genericity_transfer_check(*G, rec, sigma,
                                                      rec.name + ":" + mtable.labels[static_cast<size_t>(i)],
                                                      g_table));
        }
    }
    if (parts.empty()) throw StructuralError("no cuspidal sigma found for the requested Levi");
    return merge_reports("transfer",
                         {{"family", family_name(family)}, {"q", std::to_string(q)}, {"levi", levi}},
                         parts, sw.ms());
}

VerificationReport run_mult_one(Family family, int q, const BuildOptions& opts) {
    FieldTable F = field_build(parse_prime_power(q));
    auto G = build_group(family, F, opts);
    return multiplicity_one_suite(*G);
}

VerificationReport run_counterexample(int q, bool control, const BuildOptions& opts) {
    return counterexample_check(q, control, opts);
}

} // namespace genrest

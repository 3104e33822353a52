#include "genrest/genericity.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "genrest/errors.hpp"

namespace genrest {

cplx UnipotentCharacter::value(int u_elem) const {
    const FieldTable& F = group->field();
    auto x = group->root_coords(u_elem);
    int arg = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) arg = F.add(arg, F.mul(coeffs[i], x[i]));
    return root_of_unity(F.p(), F.trace(arg));
}

bool UnipotentCharacter::trivial() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int a) { return a == 0; });
}

std::string UnipotentCharacter::label() const {
    std::string s = "psi[";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs[i]);
    }
    return s + "]";
}

std::vector<UnipotentCharacter> enumerate_u_characters(const EnumeratedGroup& G) {
    const int q = G.field().q();
    const int r = static_cast<int>(G.subgroups().coord_positions.size());
    long long total = 1;
    for (int i = 0; i < r; ++i) total *= q;
    std::vector<UnipotentCharacter> out;
    out.reserve(static_cast<size_t>(total));
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> coeffs(static_cast<size_t>(r), 0);
        long long rem = idx;
        for (int i = r - 1; i >= 0; --i) {
            coeffs[static_cast<size_t>(i)] = static_cast<int>(rem % q);
            rem /= q;
        }
        out.push_back({&G, std::move(coeffs)});
    }
    return out;
}

namespace {

// Torus parameter models per family, over an arbitrary coefficient field.
// Points are parameter tuples; the root values are the values of the
// simple-root characters and the center test is the family's scalar shape.
std::vector<std::vector<int>> torus_points(Family fam, const FieldTable& F) {
    std::vector<int> units;
    for (int a = 1; a < F.q(); ++a) units.push_back(a);
    std::vector<std::vector<int>> pts;
    switch (fam) {
        case Family::Gl2:
        case Family::Sp4:
            for (int a : units)
                for (int b : units) pts.push_back({a, b});
            return pts;
        case Family::Gsp4:
            for (int a : units)
                for (int b : units)
                    for (int c : units) pts.push_back({a, b, c});
            return pts;
        case Family::ParamodularLevi:
            for (int a : units)
                for (int b : units)
                    for (int c : units) {
                        // d is forced by det matching: ab = cd
                        int d = F.mul(F.mul(a, b), F.inv(c));
                        pts.push_back({a, b, c, d});
                    }
            return pts;
        case Family::Gl2Product:
            for (int a : units)
                for (int b : units)
                    for (int c : units)
                        for (int d : units) pts.push_back({a, b, c, d});
            return pts;
    }
    throw StructuralError("unsupported family for the torus model");
}

std::vector<int> torus_root_values(Family fam, const FieldTable& F, const std::vector<int>& t) {
    switch (fam) {
        case Family::Gl2:
            return {F.mul(t[0], F.inv(t[1]))};
        case Family::Sp4: // diag(a, b, 1/b, 1/a); roots a/b and b^2
            return {F.mul(t[0], F.inv(t[1])), F.mul(t[1], t[1])};
        case Family::Gsp4: // diag(a, b, c/b, c/a); roots a/b and b^2/c
            return {F.mul(t[0], F.inv(t[1])), F.mul(F.mul(t[1], t[1]), F.inv(t[2]))};
        case Family::ParamodularLevi:
        case Family::Gl2Product:
            return {F.mul(t[0], F.inv(t[1])), F.mul(t[2], F.inv(t[3]))};
    }
    throw StructuralError("unsupported family for the torus model");
}

bool torus_point_central(Family fam, const FieldTable& F, const std::vector<int>& t) {
    switch (fam) {
        case Family::Gl2:
            return t[0] == t[1];
        case Family::Sp4:
            return t[0] == t[1] && F.mul(t[0], t[0]) == 1;
        case Family::Gsp4:
            return t[0] == t[1] && t[2] == F.mul(t[0], t[0]);
        case Family::ParamodularLevi:
        case Family::Gl2Product:
            return t[0] == t[1] && t[2] == t[3];
    }
    throw StructuralError("unsupported family for the torus model");
}

} // namespace

GenericityReport is_generic(const UnipotentCharacter& psi) {
    const EnumeratedGroup& G = *psi.group;
    if (G.derived()) throw StructuralError("genericity is defined on top-level family groups");
    const FieldTable& F = G.field();
    const auto& sub = G.subgroups();
    const int r = static_cast<int>(sub.coord_positions.size());

    GenericityReport rep;
    rep.psi = psi.label();

    std::vector<int> support;
    for (int i = 0; i < r; ++i)
        if (psi.coeffs[static_cast<size_t>(i)] != 0) support.push_back(i);
    rep.crit_coordinates = static_cast<int>(support.size()) == r;

    // finite-points stabilizer by direct conjugation, reported for reference
    std::vector<int> stab_fq;
    for (int t : sub.torus) {
        int tinv = G.inv(t);
        bool fixes = true;
        for (int u : sub.unipotent) {
            int y = G.mul(G.mul(tinv, u), t);
            if (std::abs(psi.value(y) - psi.value(u)) > 1e-9) { fixes = false; break; }
        }
        if (fixes) stab_fq.push_back(t);
    }
    rep.stabilizer_size_fq = static_cast<long long>(stab_fq.size());
    rep.center_size_fq = static_cast<long long>(sub.center.size());
    {
        // cross-check: the direct computation must match the symbolic action
        // alpha_i(t) = 1 on the support of the coefficient tuple
        std::vector<int> stab_sym;
        for (int t : sub.torus) {
            auto rv = G.root_values(t);
            bool fixes = true;
            for (int i : support)
                if (rv[static_cast<size_t>(i)] != 1) { fixes = false; break; }
            if (fixes) stab_sym.push_back(t);
        }
        if (stab_sym != stab_fq)
            throw StructuralError("torus stabilizer: direct and symbolic computations disagree");
    }

    // decision-level stabilizer on the parameter torus over F_{q^2}
    FieldTable F2 = field_build(FieldSpec::make(F.p(), 2 * F.k()));
    auto pts = torus_points(G.family(), F2);
    long long stab = 0, cent = 0;
    for (const auto& t : pts) {
        auto rv = torus_root_values(G.family(), F2, t);
        bool fixes = true;
        for (int i : support)
            if (rv[static_cast<size_t>(i)] != 1) { fixes = false; break; }
        bool central = torus_point_central(G.family(), F2, t);
        if (central && !fixes) throw StructuralError("central torus point moves a U-character");
        if (fixes) ++stab;
        if (central) ++cent;
    }
    rep.stabilizer_size = stab;
    rep.center_size = cent;
    rep.crit_stabilizer_center = stab == cent;

    // adjoint-torus criterion: the coordinatewise action of (F^x)^r has
    // trivial stabilizer
    {
        long long tad_stab = 1;
        for (int i = 0; i < r; ++i)
            if (std::find(support.begin(), support.end(), i) == support.end()) tad_stab *= F2.q() - 1;
        rep.crit_tad_trivial = tad_stab == 1;
    }

    if (rep.crit_stabilizer_center != rep.crit_tad_trivial ||
        rep.crit_stabilizer_center != rep.crit_coordinates)
        throw StructuralError("genericity criteria disagree for " + psi.label());
    rep.generic = rep.crit_stabilizer_center;

    bool fq_matches = (rep.stabilizer_size_fq == rep.center_size_fq) == rep.generic;
    rep.notes = fq_matches ? "finite-points stabilizer agrees"
                           : "finite-points stabilizer degenerates at this q (torus too small)";
    return rep;
}

bool is_generic_flag(const UnipotentCharacter& psi) { return is_generic(psi).generic; }

std::vector<UnipotentCharacter> generic_characters(const EnumeratedGroup& G) {
    std::vector<UnipotentCharacter> out;
    for (auto& psi : enumerate_u_characters(G))
        if (is_generic(psi).generic) out.push_back(std::move(psi));
    return out;
}

UnipotentCharacter psi_conjugate(const UnipotentCharacter& psi, int t_elem) {
    const EnumeratedGroup& G = *psi.group;
    const FieldTable& F = G.field();
    auto rv = G.root_values(t_elem);
    UnipotentCharacter out{&G, psi.coeffs};
    for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = F.mul(out.coeffs[i], F.inv(rv[i]));
    return out;
}

long long whittaker_dim(const ClassFunction& pi, const UnipotentCharacter& psi) {
    const EnumeratedGroup& G = *pi.group;
    if (psi.group != &G) throw StructuralError("character and U-character live on different groups");
    const auto& u = G.subgroups().unipotent;
    cplx acc(0, 0);
    for (int e : u) acc += pi.at_elem(e) * std::conj(psi.value(e));
    long long d = round_to_int(acc / static_cast<double>(u.size()), kIntTol, "Whittaker dimension");
    if (d < 0) throw IntegralityError("negative Whittaker dimension");
    return d;
}

ClassFunction gelfand_graev(const EnumeratedGroup& G, const UnipotentCharacter& psi) {
    if (!is_generic(psi).generic) throw StructuralError("Gelfand-Graev requires a generic character");
    return induce_from_subset(G, G.subgroups().unipotent, [&](int e) { return psi.value(e); });
}

} // namespace genrest

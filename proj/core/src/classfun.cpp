#include "genrest/classfun.hpp"

#include <cmath>

#include "genrest/errors.hpp"

namespace genrest {

long long round_to_int(cplx z, double tol, const std::string& context) {
    double r = std::round(z.real());
    if (std::abs(z.imag()) > tol || std::abs(z.real() - r) > tol)
        throw IntegralityError(context + ": value (" + std::to_string(z.real()) + ", " +
                               std::to_string(z.imag()) + "i) is not an integer within tolerance");
    return static_cast<long long>(r);
}

ClassFunction trivial_character(const EnumeratedGroup& G) {
    return {&G, std::vector<cplx>(static_cast<size_t>(G.class_count()), cplx(1.0, 0.0))};
}

ClassFunction zero_function(const EnumeratedGroup& G) {
    return {&G, std::vector<cplx>(static_cast<size_t>(G.class_count()), cplx(0.0, 0.0))};
}

namespace {
void check_same_group(const ClassFunction& a, const ClassFunction& b) {
    if (a.group != b.group) throw StructuralError("class functions live on different groups");
}
} // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    check_same_group(a, b);
    ClassFunction out = a;
    for (size_t i = 0; i < out.vals.size(); ++i) out.vals[i] += b.vals[i];
    return out;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    check_same_group(a, b);
    ClassFunction out = a;
    for (size_t i = 0; i < out.vals.size(); ++i) out.vals[i] -= b.vals[i];
    return out;
}

ClassFunction operator*(cplx s, const ClassFunction& a) {
    ClassFunction out = a;
    for (auto& v : out.vals) v *= s;
    return out;
}

bool is_zero_function(const ClassFunction& f, double tol) {
    for (const auto& v : f.vals)
        if (std::abs(v) > tol) return false;
    return true;
}

cplx inner(const ClassFunction& f, const ClassFunction& g) {
    check_same_group(f, g);
    const EnumeratedGroup& G = *f.group;
    cplx acc(0.0, 0.0);
    for (int c = 0; c < G.class_count(); ++c)
        acc += static_cast<double>(G.cls(c).members.size()) * f.vals[static_cast<size_t>(c)] *
               std::conj(g.vals[static_cast<size_t>(c)]);
    return acc / static_cast<double>(G.size());
}

ClassFunction induce_from_subset(const EnumeratedGroup& G, std::span<const int> h_elems,
                                 const std::function<cplx(int)>& f) {
    if (h_elems.empty()) throw StructuralError("induction from an empty subset");
    ClassFunction out = zero_function(G);
    for (int e : h_elems) out.vals[static_cast<size_t>(G.class_of(e))] += f(e);
    const double scale_num = static_cast<double>(G.size()) / static_cast<double>(h_elems.size());
    for (int c = 0; c < G.class_count(); ++c)
        out.vals[static_cast<size_t>(c)] *= scale_num / static_cast<double>(G.cls(c).members.size());
    return out;
}

ClassFunction induce(const EnumeratedGroup& G, const EnumeratedGroup& H, const ClassFunction& fH) {
    if (fH.group != &H) throw StructuralError("class function does not live on the inducing subgroup");
    std::vector<int> h_elems;
    h_elems.reserve(static_cast<size_t>(H.size()));
    std::vector<cplx> by_parent_elem;
    by_parent_elem.reserve(static_cast<size_t>(H.size()));
    for (int h = 0; h < H.size(); ++h) {
        int e = G.find(H.key(h));
        if (e < 0) throw StructuralError("subgroup element not found in the ambient group");
        h_elems.push_back(e);
        by_parent_elem.push_back(fH.vals[static_cast<size_t>(H.class_of(h))]);
    }
    ClassFunction out = zero_function(G);
    for (size_t i = 0; i < h_elems.size(); ++i)
        out.vals[static_cast<size_t>(G.class_of(h_elems[i]))] += by_parent_elem[i];
    const double scale_num = static_cast<double>(G.size()) / static_cast<double>(h_elems.size());
    for (int c = 0; c < G.class_count(); ++c)
        out.vals[static_cast<size_t>(c)] *= scale_num / static_cast<double>(G.cls(c).members.size());
    return out;
}

ClassFunction restrict_to(const ClassFunction& f, const EnumeratedGroup& H) {
    const EnumeratedGroup& G = *f.group;
    ClassFunction out = zero_function(H);
    for (int c = 0; c < H.class_count(); ++c) {
        int e = G.find(H.key(H.cls(c).rep));
        if (e < 0) throw StructuralError("subgroup element not found in the ambient group");
        out.vals[static_cast<size_t>(c)] = f.vals[static_cast<size_t>(G.class_of(e))];
    }
    return out;
}

ClassFunction hc_induce(const EnumeratedGroup& G, const ParabolicRecord& rec, const ClassFunction& sigma) {
    if (!rec.proper) {
        if (sigma.group != &G) throw StructuralError("improper induction expects a class function on G");
        return sigma;
    }
    const EnumeratedGroup& M = *rec.levi;
    if (sigma.group != &M) throw StructuralError("class function does not live on the Levi of the record");
    auto inflate = [&](int p) {
        LeviParts parts = levi_decompose(G, rec, p);
        int m = M.find(G.key(parts.m));
        if (m < 0) throw StructuralError("Levi part missing from the Levi group");
        return sigma.vals[static_cast<size_t>(M.class_of(m))];
    };
    return induce_from_subset(G, rec.p_elems, inflate);
}

ClassFunction hc_restrict(const EnumeratedGroup& G, const ParabolicRecord& rec, const ClassFunction& pi) {
    if (pi.group != &G) throw StructuralError("class function does not live on the ambient group");
    if (!rec.proper) return pi;
    const EnumeratedGroup& M = *rec.levi;
    ClassFunction out = zero_function(M);
    for (int c = 0; c < M.class_count(); ++c) {
        int m = G.find(M.key(M.cls(c).rep));
        if (m < 0) throw StructuralError("Levi element missing from the ambient group");
        cplx acc(0.0, 0.0);
        for (int n : rec.n_elems) acc += pi.vals[static_cast<size_t>(G.class_of(G.mul(m, n)))];
        out.vals[static_cast<size_t>(c)] = acc / static_cast<double>(rec.n_elems.size());
    }
    return out;
}

bool is_cuspidal(const ClassFunction& sigma) {
    const EnumeratedGroup& M = *sigma.group;
    for (const auto& rec : M.subgroups().parabolics) {
        if (!rec.proper) continue;
        if (!is_zero_function(hc_restrict(M, rec, sigma))) return false;
    }
    return true;
}

ClassFunction outer_tensor_on_blocks(const EnumeratedGroup& Gpair, const EnumeratedGroup& Ggl2,
                                     const ClassFunction& f1, const ClassFunction& f2) {
    if (f1.group != &Ggl2 || f2.group != &Ggl2)
        throw StructuralError("tensor factors must live on the GL(2) group");
    if (Gpair.dim() != 4 || Ggl2.dim() != 2) throw StructuralError("outer tensor needs a 4x4 pair group");
    const FieldTable& F = Ggl2.field();
    ClassFunction out = zero_function(Gpair);
    for (int c = 0; c < Gpair.class_count(); ++c) {
        const MatQ& m = Gpair.mat(Gpair.cls(c).rep);
        MatQ b1 = MatQ::zero(2), b2 = MatQ::zero(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                b1.set(i, j, m.at(i, j));
                b2.set(i, j, m.at(i + 2, j + 2));
            }
        int e1 = Ggl2.find(mat_pack(b1, F.q()));
        int e2 = Ggl2.find(mat_pack(b2, F.q()));
        if (e1 < 0 || e2 < 0) throw StructuralError("block not found in the GL(2) group");
        out.vals[static_cast<size_t>(c)] = f1.at_elem(e1) * f2.at_elem(e2);
    }
    return out;
}

} // namespace genrest

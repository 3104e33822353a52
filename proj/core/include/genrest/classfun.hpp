#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "genrest/groups.hpp"

namespace genrest {

using cplx = std::complex<double>;

/// Uniform zero/integrality threshold for dimension counts and vanishing
/// tests. Deviations beyond it are treated as bugs, not noise.
inline constexpr double kIntTol = 1e-6;

/// Rounds to the nearest integer, failing hard when the value is further than
/// tol from any integer (or has an imaginary part beyond tol).
long long round_to_int(cplx z, double tol, const std::string& context);

/// Complex-valued function on the conjugacy classes of a fixed group, stored
/// in the group's class order (identity class first).
struct ClassFunction {
    const EnumeratedGroup* group = nullptr;
    std::vector<cplx> vals;

    cplx at_class(int c) const { return vals[static_cast<size_t>(c)]; }
    cplx at_elem(int e) const { return vals[static_cast<size_t>(group->class_of(e))]; }
    /// Value at the identity class, rounded; the degree for characters.
    long long degree() const { return round_to_int(vals[0], kIntTol, "character degree"); }
};

ClassFunction trivial_character(const EnumeratedGroup& G);
ClassFunction zero_function(const EnumeratedGroup& G);

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(cplx s, const ClassFunction& a);

bool is_zero_function(const ClassFunction& f, double tol = kIntTol);

/// (1/|G|) sum over classes of |C| f(C) conj(g(C)). Errors on group mismatch.
cplx inner(const ClassFunction& f, const ClassFunction& g);

/// Induction of an element-level function on a subgroup given by parent
/// element indices: chi(g) = (1/|H|) sum_{x in G, x g x^{-1} in H} f(x g x^{-1}).
ClassFunction induce_from_subset(const EnumeratedGroup& G, std::span<const int> h_elems,
                                 const std::function<cplx(int)>& f);

/// Induction of a class function on a subgroup H (its own enumerated group,
/// with keys contained in G's key set).
ClassFunction induce(const EnumeratedGroup& G, const EnumeratedGroup& H, const ClassFunction& fH);

/// Restriction of a class function on G to the subgroup H.
ClassFunction restrict_to(const ClassFunction& f, const EnumeratedGroup& H);

/// Harish-Chandra induction: inflate sigma from the Levi through P (value at
/// p is sigma at the Levi part), then induce to G. No modulus twist: the
/// finite group has trivial modulus character. For the improper record this
/// is the identity.
ClassFunction hc_induce(const EnumeratedGroup& G, const ParabolicRecord& rec, const ClassFunction& sigma);

/// Harish-Chandra restriction (finite Jacquet functor): value at m is the
/// average of pi(m n) over the unipotent radical N. Adjoint to hc_induce.
ClassFunction hc_restrict(const EnumeratedGroup& G, const ParabolicRecord& rec, const ClassFunction& pi);

/// True iff every proper Harish-Chandra restriction of sigma vanishes.
/// Groups without proper parabolic records (tori) are trivially cuspidal.
bool is_cuspidal(const ClassFunction& sigma);

/// Outer tensor of two GL(2) class functions on a block-diagonal pair group
/// (value at (x1, x2) is f1(x1) * f2(x2)).
ClassFunction outer_tensor_on_blocks(const EnumeratedGroup& Gpair, const EnumeratedGroup& Ggl2,
                                     const ClassFunction& f1, const ClassFunction& f2);

} // namespace genrest

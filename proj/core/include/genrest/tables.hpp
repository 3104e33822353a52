#pragma once

#include <string>
#include <vector>

#include "genrest/classfun.hpp"
#include "genrest/groups.hpp"

namespace genrest {

/// Complete list of irreducible characters of a group, one row per conjugacy
/// class, validated for row/column orthogonality and sum of squared degrees.
struct IrreducibleTable {
    const EnumeratedGroup* group = nullptr;
    std::vector<ClassFunction> rows;
    std::vector<std::string> labels;

    int row_count() const { return static_cast<int>(rows.size()); }
};

/// Orthogonality within tol, row count == class count, sum of degree^2 == |G|.
void validate_table(const IrreducibleTable& t, double tol = 1e-8);

/// Closed-form GL(2, q) table from the classical parametrization:
/// q-1 determinant twists (degree 1), q-1 Steinberg twists (degree q),
/// (q-1)(q-2)/2 principal series (degree q+1) and q(q-1)/2 cuspidal rows
/// (degree q-1) indexed by Frobenius orbits of regular characters of the
/// quadratic extension's multiplicative group.
IrreducibleTable gl2_table(const EnumeratedGroup& G);

/// Constructive Steinberg character Ind_B^G 1 - 1. Errors when the result is
/// not irreducible (which signals broken Borel data; irreducibility holds for
/// GL2).
ClassFunction steinberg(const EnumeratedGroup& G);

/// Full irreducible table by the class-algebra method: class multiplication
/// coefficients, simultaneous eigenvectors of the class-sum matrices over a
/// prime field F_l with l = 1 (mod exponent) and l > 2 sqrt(|G|), and a
/// discrete-Fourier lift of eigenvalues to complex character values.
/// Deterministic: the separating combinations use a fixed documented seed.
IrreducibleTable dixon_table(const EnumeratedGroup& G);

/// Multiplicities of each table row in f; integrality-checked.
std::vector<long long> decompose(const IrreducibleTable& t, const ClassFunction& f);

/// Bijective row matching between two tables of the same group with value
/// distance below tol; returns perm with b.rows[perm[i]] matching a.rows[i].
/// Errors when no bijection exists.
std::vector<int> match_rows(const IrreducibleTable& a, const IrreducibleTable& b, double tol = 1e-6);

/// Canonical JSON export: rows of {label, degree, values} with values as
/// (re, im) pairs keyed by class representative.
std::string table_to_json(const IrreducibleTable& t);

} // namespace genrest

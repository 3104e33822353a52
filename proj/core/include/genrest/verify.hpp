#pragma once

#include <string>
#include <utility>
#include <vector>

#include "genrest/classfun.hpp"
#include "genrest/genericity.hpp"
#include "genrest/groups.hpp"
#include "genrest/tables.hpp"

namespace genrest {

/// One verified equality. For transfer checks, `constituents` carries the
/// number of generic irreducible constituents of the induced character
/// (-1 when not applicable).
struct VerificationCell {
    std::string psi;
    long long lhs = 0;
    long long rhs = 0;
    long long constituents = -1;
};

struct VerificationReport {
    std::string statement;
    std::vector<std::pair<std::string, std::string>> params; // emitted in order
    std::vector<VerificationCell> cells;
    bool pass = false;
    long long wall_ms = 0;
};

/// Canonical JSON. Timing is volatile, so "ms" is only emitted on request;
/// the default output is byte-identical across runs.
std::string report_to_json(const VerificationReport& r, bool include_ms = false);

/// Whittaker transfer identity for one irreducible sigma on the Levi of rec:
/// for every generic psi of U, dim Hom_U(Ind_P^G sigma, psi) equals
/// dim Hom_Q(sigma, psi_M) with Q = M cap w_o U w_o^{-1} and
/// psi_M(x) = psi(w_o^{-1} x w_o).
VerificationReport rodier_check(const EnumeratedGroup& G, const ParabolicRecord& rec,
                                const ClassFunction& sigma, const std::string& sigma_label);

/// Genericity transfer for a cuspidal sigma: the induced character's
/// Whittaker dimension matches the transfer identity, and when positive there
/// is exactly one generic irreducible constituent per generic psi (with
/// Whittaker dimension exactly 1).
VerificationReport genericity_transfer_check(const EnumeratedGroup& G, const ParabolicRecord& rec,
                                             const ClassFunction& sigma, const std::string& sigma_label,
                                             const IrreducibleTable& g_table);

/// Degree-2q character that restricts from the full GL(2,q)^2 block pair to
/// the det-matched group yet has Whittaker dimension 0 against every generic
/// U-character: a nonzero, non-generic restriction. With `control` set, also
/// verifies that the same machinery detects a generic restriction.
VerificationReport counterexample_check(int q, bool control, const BuildOptions& opts = {});

/// For every character chi of T and every generic psi, the Whittaker
/// dimension of Ind_B^G chi is exactly 1.
VerificationReport multiplicity_one_suite(const EnumeratedGroup& G);

// ---- CLI-level suite runners (build their own groups) ----

/// Merged rodier_check over all irreducible sigma of the named Levi.
VerificationReport run_rodier(Family family, int q, const std::string& levi, const BuildOptions& opts);

/// Merged genericity_transfer_check over all cuspidal sigma of the named
/// Levi ("all" for every proper Levi).
VerificationReport run_transfer(Family family, int q, const std::string& levi, const BuildOptions& opts);

VerificationReport run_mult_one(Family family, int q, const BuildOptions& opts);

VerificationReport run_counterexample(int q, bool control, const BuildOptions& opts);

/// Record lookup by Levi name: "torus" -> borel record, "siegel"/"klingen" ->
/// those records, "full" -> the improper record.
const ParabolicRecord& record_by_levi(const EnumeratedGroup& G, const std::string& levi);

/// (p, k) with q = p^k; errors when q is not a prime power.
FieldSpec parse_prime_power(int q);

} // namespace genrest

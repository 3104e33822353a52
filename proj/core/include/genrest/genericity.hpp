#pragma once

#include <string>
#include <vector>

#include "genrest/classfun.hpp"
#include "genrest/groups.hpp"

namespace genrest {

/// Linear character of the unipotent radical U, parametrized by coefficients
/// over the simple-root coordinates: psi(u) = psi_0(sum_i a_i x_i(u)) where
/// psi_0 is the principal additive character. Trivial on [U, U].
struct UnipotentCharacter {
    const EnumeratedGroup* group = nullptr;
    std::vector<int> coeffs; // field indices, one per coordinate

    cplx value(int u_elem) const;
    bool trivial() const;
    std::string label() const; // "psi[a1,a2]"
};

/// All q^rank coefficient tuples in lexicographic order, trivial tuple first.
std::vector<UnipotentCharacter> enumerate_u_characters(const EnumeratedGroup& G);

/// Outcome of the genericity decision for one U-character.
///
/// Genericity is decided on the torus parameters over the quadratic extension
/// F_{q^2}, the smallest field whose points see the full torus stabilizer: at
/// q = 2 the F_q-points of T can collapse onto the center and make the
/// finite-points stabilizer test vacuous, while the extension-level test
/// is stable in q. The naive F_q computation is still performed and reported.
struct GenericityReport {
    std::string psi;
    // decision-level data (parameter torus over F_{q^2})
    long long stabilizer_size = 0;
    long long center_size = 0;
    bool crit_stabilizer_center = false; // Stab_T(psi) = Z
    bool crit_tad_trivial = false;       // trivial stabilizer in the adjoint torus coordinates
    bool crit_coordinates = false;       // nonzero in every simple-root coordinate
    bool generic = false;
    // finite-points data over F_q (informational)
    long long stabilizer_size_fq = 0;
    long long center_size_fq = 0;
    std::string notes;
};

/// Computes all three criteria and fails hard when they disagree.
GenericityReport is_generic(const UnipotentCharacter& psi);

bool is_generic_flag(const UnipotentCharacter& psi);

std::vector<UnipotentCharacter> generic_characters(const EnumeratedGroup& G);

/// psi^t with psi^t(u) = psi(t^{-1} u t), computed on coefficients through
/// the simple-root values of t.
UnipotentCharacter psi_conjugate(const UnipotentCharacter& psi, int t_elem);

/// dim Hom_U(pi, psi) = (1/|U|) sum_u pi(u) conj(psi(u)), rounded to an
/// integer. Errors on non-integral or negative values.
long long whittaker_dim(const ClassFunction& pi, const UnipotentCharacter& psi);

/// Gelfand-Graev character Ind_U^G psi; requires psi generic.
ClassFunction gelfand_graev(const EnumeratedGroup& G, const UnipotentCharacter& psi);

} // namespace genrest

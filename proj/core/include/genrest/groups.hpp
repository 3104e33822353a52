#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "genrest/field.hpp"
#include "genrest/matq.hpp"

namespace genrest {

/// Group families constructible by generator closure.
///
/// Sp4/Gsp4 use the symplectic form with antidiagonal 2x2 blocks
/// ((0, w), (-w, 0)), w = antidiag(1,1). ParamodularLevi is the det-matched
/// pair group {(x1, x2) in GL(2,q)^2 : det x1 = det x2} embedded as
/// block-diagonal 4x4 matrices; Gl2Product is the full product without the
/// determinant condition (it hosts outer tensor characters that are then
/// restricted to the det-matched subgroup).
enum class Family { Gl2, Sp4, Gsp4, ParamodularLevi, Gl2Product };

/// Shape of a group's parabolic/coordinate data. Levi subgroups constructed
/// inside a parent group carry their own structure. Plain is for arbitrary
/// subgroups (induction sources, tests): no Borel-pair data is asserted.
enum class Structure { Gl2, Symplectic4, BlockPair, SiegelLevi, KlingenLevi, Torus, Plain };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

struct BuildOptions {
    long long order_bound = 200000; // refuse enumerations beyond this
    std::string cache_dir;          // empty disables the element/class cache
};

struct ConjClass {
    int rep = 0;              // minimal-index (= minimal-key) member
    std::vector<int> members; // ascending element indices
};

class EnumeratedGroup;

/// Standard parabolic subgroup P = M ltimes N given by a block partition,
/// together with Q = M cap w_o U w_o^{-1} used by the Whittaker transfer
/// identity. The improper record (P = G) has levi == nullptr.
struct ParabolicRecord {
    std::string name; // "borel", "siegel", "klingen", "full"
    bool proper = true;
    std::vector<int> blocks;  // consecutive block sizes summing to n
    std::vector<int> p_elems; // ascending element indices
    std::vector<int> n_elems;
    std::vector<int> q_elems;
    std::unique_ptr<EnumeratedGroup> levi;
};

struct SubgroupData {
    std::vector<int> borel;     // upper-triangular members
    std::vector<int> torus;     // diagonal members
    std::vector<int> unipotent; // unitriangular members
    std::vector<int> center;    // computed by brute force
    int weyl_long = 0;          // w_o with B cap w_o B w_o^{-1} = T
    std::vector<std::pair<int, int>> coord_positions; // simple-root entries
    std::vector<ParabolicRecord> parabolics;
};

/// A finite matrix group with indexed elements, conjugacy classes, and tagged
/// subgroup data. Elements are ordered by ascending packed key; conjugacy
/// classes are ordered identity class first, then by representative key.
/// Immutable after construction.
class EnumeratedGroup {
public:
    EnumeratedGroup(const EnumeratedGroup&) = delete;
    EnumeratedGroup& operator=(const EnumeratedGroup&) = delete;

    Family family() const { return family_; }
    Structure structure() const { return structure_; }
    bool derived() const { return derived_; } // true for Levi/subgroup views
    const FieldTable& field() const { return *field_; }
    int dim() const { return n_; }
    int size() const { return static_cast<int>(keys_.size()); }

    uint64_t key(int i) const { return keys_[static_cast<size_t>(i)]; }
    const MatQ& mat(int i) const { return mats_[static_cast<size_t>(i)]; }
    /// Index of a packed key, -1 when absent.
    int find(uint64_t key) const;
    int find_mat(const MatQ& m) const { return find(mat_pack(m, field_->q())); }

    int identity() const { return id_; }
    int mul(int i, int j) const;
    int inv(int i) const { return inv_[static_cast<size_t>(i)]; }
    /// g x g^{-1}
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int element_order(int i) const;
    /// lcm of element orders
    long long exponent() const;

    const std::vector<int>& generators() const { return gens_; }

    int class_count() const { return static_cast<int>(classes_.size()); }
    int class_of(int elem) const { return class_of_[static_cast<size_t>(elem)]; }
    const ConjClass& cls(int c) const { return classes_[static_cast<size_t>(c)]; }
    const std::vector<ConjClass>& classes() const { return classes_; }

    const SubgroupData& subgroups() const { return sub_; }

    /// Simple-root coordinates of a unipotent element, one per coordinate
    /// position; a homomorphism U -> F_q^r with kernel [U, U].
    std::vector<int> root_coords(int u_elem) const;

    /// Values alpha_i(t) of the simple-root characters on a torus element.
    std::vector<int> root_values(int t_elem) const;

    /// Builds a subgroup of the same matrix universe from an explicit key
    /// set (must be closed); used for Levi subgroups. Classes and subgroup
    /// data are computed for the subgroup in its own right.
    static std::unique_ptr<EnumeratedGroup> from_key_set(Structure st, Family parent_family,
                                                         const FieldTable& F, int n,
                                                         std::vector<uint64_t> keys);

private:
    friend std::unique_ptr<EnumeratedGroup> build_group(Family, const FieldTable&, const BuildOptions&);
    EnumeratedGroup() = default;

    void index_elements();                       // sort keys, build mats/index
    void compute_classes(const std::vector<int>& conjugators);
    void compute_inverses();
    void derive_generators();                    // greedy key-order generator set
    void build_subgroup_data();
    void validate_family_equations() const;

    Family family_ = Family::Gl2;
    Structure structure_ = Structure::Gl2;
    bool derived_ = false;
    const FieldTable* field_ = nullptr;
    int n_ = 0;
    int id_ = 0;
    std::vector<uint64_t> keys_;
    std::vector<MatQ> mats_;
    std::unordered_map<uint64_t, int> index_;
    std::vector<int> inv_;
    std::vector<int> gens_;
    std::vector<ConjClass> classes_;
    std::vector<int> class_of_;
    SubgroupData sub_;
};

/// Enumerates the family over the given field by breadth-first closure of a
/// fixed generator set. Errors: order bound exceeded, generator failing the
/// family's defining equations, structural invariant failure.
std::unique_ptr<EnumeratedGroup> build_group(Family family, const FieldTable& F,
                                             const BuildOptions& opts = {});

/// Unique Levi decomposition p = m * n within a parabolic record.
/// Errors: p not in P.
struct LeviParts {
    int m = 0;
    int n = 0;
};
LeviParts levi_decompose(const EnumeratedGroup& G, const ParabolicRecord& rec, int p_elem);

/// Defining-equation check for one matrix (exposed for tests).
bool family_equations_hold(Family family, const FieldTable& F, const MatQ& m);

/// Similitude factor of a Gsp4/Sp4 element (mu with g^T J g = mu J).
int similitude_factor(const FieldTable& F, const MatQ& g);

/// Closed-form order of the family over F_q (cross-check oracle).
long long family_order_formula(Family family, int q);

} // namespace genrest

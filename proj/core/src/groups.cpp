#include "genrest/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "genrest/cache.hpp"
#include "genrest/errors.hpp"

namespace genrest {

namespace {

MatQ diag2(int a, int b) {
    MatQ m = MatQ::zero(2);
    m.set(0, 0, a);
    m.set(1, 1, b);
    return m;
}

MatQ diag4(int a, int b, int c, int d) {
    MatQ m = MatQ::zero(4);
    m.set(0, 0, a);
    m.set(1, 1, b);
    m.set(2, 2, c);
    m.set(3, 3, d);
    return m;
}

MatQ block_diag(const MatQ& a, const MatQ& b) {
    MatQ m = MatQ::zero(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m.set(i, j, a.at(i, j));
            m.set(i + 2, j + 2, b.at(i, j));
        }
    return m;
}

// The fixed symplectic form: J(0,3) = J(1,2) = 1, J(2,1) = J(3,0) = -1.
MatQ symplectic_form(const FieldTable& F) {
    MatQ j = MatQ::zero(4);
    j.set(0, 3, 1);
    j.set(1, 2, 1);
    j.set(2, 1, F.neg(1));
    j.set(3, 0, F.neg(1));
    return j;
}

bool is_block_diagonal(const MatQ& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if ((i / 2) != (j / 2) && m.at(i, j) != 0) return false;
    return true;
}

MatQ block_of(const MatQ& m, int which) {
    MatQ b = MatQ::zero(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) b.set(i, j, m.at(i + 2 * which, j + 2 * which));
    return b;
}

struct RecordSpec {
    const char* name;
    std::vector<int> blocks;
    Structure levi_structure;
    bool proper;
};

struct StructureSpec {
    int n;
    std::vector<std::pair<int, int>> coords;
    std::vector<RecordSpec> records;
};

const StructureSpec& structure_spec(Structure st) {
    static const StructureSpec gl2{2, {{0, 1}}, {{"borel", {1, 1}, Structure::Torus, true}, {"full", {2}, Structure::Gl2, false}}};
    static const StructureSpec sp4{4,
                                   {{0, 1}, {1, 2}},
                                   {{"borel", {1, 1, 1, 1}, Structure::Torus, true},
                                    {"siegel", {2, 2}, Structure::SiegelLevi, true},
                                    {"klingen", {1, 2, 1}, Structure::KlingenLevi, true},
                                    {"full", {4}, Structure::Symplectic4, false}}};
    static const StructureSpec pair{4,
                                    {{0, 1}, {2, 3}},
                                    {{"borel", {1, 1, 1, 1}, Structure::Torus, true},
                                     {"full", {4}, Structure::BlockPair, false}}};
    static const StructureSpec siegel{4,
                                      {{0, 1}},
                                      {{"borel", {1, 1, 1, 1}, Structure::Torus, true},
                                       {"full", {4}, Structure::SiegelLevi, false}}};
    static const StructureSpec klingen{4,
                                       {{1, 2}},
                                       {{"borel", {1, 1, 1, 1}, Structure::Torus, true},
                                        {"full", {4}, Structure::KlingenLevi, false}}};
    static const StructureSpec torus{0, {}, {{"full", {}, Structure::Torus, false}}};
    static const StructureSpec plain{0, {}, {{"full", {}, Structure::Plain, false}}};
    switch (st) {
        case Structure::Gl2: return gl2;
        case Structure::Symplectic4: return sp4;
        case Structure::BlockPair: return pair;
        case Structure::SiegelLevi: return siegel;
        case Structure::KlingenLevi: return klingen;
        case Structure::Torus: return torus;
        case Structure::Plain: return plain;
    }
    throw StructuralError("unknown structure");
}

MatQ weyl_long_matrix(Structure st, int n, const FieldTable& F) {
    MatQ flip2 = MatQ::zero(2);
    flip2.set(0, 1, 1);
    flip2.set(1, 0, 1);
    switch (st) {
        case Structure::Gl2:
            return flip2;
        case Structure::Symplectic4:
            // the form matrix itself: antidiagonal with signs, mu = 1
            return symplectic_form(F);
        case Structure::BlockPair:
        case Structure::SiegelLevi:
            return block_diag(flip2, flip2);
        case Structure::KlingenLevi: {
            // middle 2x2 flip needs a sign to stay symplectic
            MatQ w = MatQ::zero(4);
            w.set(0, 0, 1);
            w.set(3, 3, 1);
            w.set(1, 2, 1);
            w.set(2, 1, F.neg(1));
            return w;
        }
        case Structure::Torus:
        case Structure::Plain:
            return MatQ::identity(n);
    }
    throw StructuralError("unknown structure");
}

Structure family_structure(Family f) {
    switch (f) {
        case Family::Gl2: return Structure::Gl2;
        case Family::Sp4:
        case Family::Gsp4: return Structure::Symplectic4;
        case Family::ParamodularLevi:
        case Family::Gl2Product: return Structure::BlockPair;
    }
    throw StructuralError("unknown family");
}

std::vector<MatQ> family_generators(Family fam, const FieldTable& F) {
    const int g = F.generator();
    MatQ x2 = MatQ::identity(2);
    x2.set(0, 1, 1);
    MatQ y2 = MatQ::identity(2);
    y2.set(1, 0, 1);
    MatQ i2 = MatQ::identity(2);
    switch (fam) {
        case Family::Gl2:
            return {x2, y2, diag2(g, 1), diag2(1, g)};
        case Family::Sp4:
        case Family::Gsp4: {
            MatQ xa = MatQ::identity(4); // short simple root
            xa.set(0, 1, 1);
            xa.set(2, 3, F.neg(1));
            MatQ xb = MatQ::identity(4); // long simple root
            xb.set(1, 2, 1);
            MatQ xma = MatQ::identity(4);
            xma.set(1, 0, 1);
            xma.set(3, 2, F.neg(1));
            MatQ xmb = MatQ::identity(4);
            xmb.set(2, 1, 1);
            std::vector<MatQ> gens{xa, xb, xma, xmb, diag4(g, 1, 1, F.inv(g)), diag4(1, g, F.inv(g), 1)};
            if (fam == Family::Gsp4) gens.push_back(diag4(1, 1, g, g)); // similitude g
            return gens;
        }
        case Family::ParamodularLevi:
            return {block_diag(x2, i2),         block_diag(y2, i2),
                    block_diag(i2, x2),         block_diag(i2, y2),
                    block_diag(diag2(g, 1), diag2(g, 1)),
                    block_diag(diag2(g, F.inv(g)), i2),
                    block_diag(i2, diag2(g, F.inv(g)))};
        case Family::Gl2Product:
            return {block_diag(x2, i2), block_diag(y2, i2), block_diag(i2, x2),
                    block_diag(i2, y2), block_diag(diag2(g, 1), i2), block_diag(i2, diag2(g, 1))};
    }
    throw StructuralError("unknown family");
}

std::vector<int> block_index_of_rows(const std::vector<int>& blocks) {
    std::vector<int> out;
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int i = 0; i < blocks[b]; ++i) out.push_back(static_cast<int>(b));
    return out;
}

bool in_parabolic_pattern(const MatQ& m, const std::vector<int>& blk_of) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (blk_of[static_cast<size_t>(i)] > blk_of[static_cast<size_t>(j)] && m.at(i, j) != 0) return false;
    return true;
}

bool in_levi_pattern(const MatQ& m, const std::vector<int>& blk_of) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (blk_of[static_cast<size_t>(i)] != blk_of[static_cast<size_t>(j)] && m.at(i, j) != 0) return false;
    return true;
}

bool diagonal_blocks_identity(const MatQ& m, const std::vector<int>& blk_of) {
    for (int i = 0; i < m.n; ++i) {
        if (m.at(i, i) != 1) return false;
        for (int j = 0; j < m.n; ++j)
            if (i != j && blk_of[static_cast<size_t>(i)] == blk_of[static_cast<size_t>(j)] && m.at(i, j) != 0)
                return false;
    }
    return true;
}

bool is_upper_triangular(const MatQ& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < i; ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

bool is_diagonal(const MatQ& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (i != j && m.at(i, j) != 0) return false;
    return true;
}

bool is_unitriangular(const MatQ& m) {
    if (!is_upper_triangular(m)) return false;
    for (int i = 0; i < m.n; ++i)
        if (m.at(i, i) != 1) return false;
    return true;
}

MatQ extract_diag_blocks(const MatQ& m, const std::vector<int>& blk_of) {
    MatQ out = MatQ::zero(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (blk_of[static_cast<size_t>(i)] == blk_of[static_cast<size_t>(j)]) out.set(i, j, m.at(i, j));
    return out;
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Gl2: return "gl2";
        case Family::Sp4: return "sp4";
        case Family::Gsp4: return "gsp4";
        case Family::ParamodularLevi: return "paramodular-levi";
        case Family::Gl2Product: return "gl2xgl2";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    if (s == "gl2") return Family::Gl2;
    if (s == "sp4") return Family::Sp4;
    if (s == "gsp4") return Family::Gsp4;
    if (s == "paramodular-levi") return Family::ParamodularLevi;
    if (s == "gl2xgl2") return Family::Gl2Product;
    return std::nullopt;
}

int similitude_factor(const FieldTable& F, const MatQ& g) {
    MatQ j = symplectic_form(F);
    MatQ a = mat_mul(F, mat_mul(F, mat_transpose(g), j), g);
    int mu = a.at(0, 3);
    if (mu == 0) throw StructuralError("not a symplectic similitude (mu = 0)");
    for (int i = 0; i < 4; ++i)
        for (int jj = 0; jj < 4; ++jj)
            if (a.at(i, jj) != F.mul(mu, j.at(i, jj)))
                throw StructuralError("not a symplectic similitude (form not preserved)");
    return mu;
}

bool family_equations_hold(Family family, const FieldTable& F, const MatQ& m) {
    switch (family) {
        case Family::Gl2:
            return m.n == 2 && mat_det(F, m) != 0;
        case Family::Sp4: {
            if (m.n != 4) return false;
            try {
                return similitude_factor(F, m) == 1;
            } catch (const StructuralError&) {
                return false;
            }
        }
        case Family::Gsp4: {
            if (m.n != 4) return false;
            try {
                similitude_factor(F, m);
                return true;
            } catch (const StructuralError&) {
                return false;
            }
        }
        case Family::ParamodularLevi: {
            if (m.n != 4 || !is_block_diagonal(m)) return false;
            int d1 = mat_det(F, block_of(m, 0)), d2 = mat_det(F, block_of(m, 1));
            return d1 != 0 && d1 == d2;
        }
        case Family::Gl2Product: {
            if (m.n != 4 || !is_block_diagonal(m)) return false;
            return mat_det(F, block_of(m, 0)) != 0 && mat_det(F, block_of(m, 1)) != 0;
        }
    }
    return false;
}

long long family_order_formula(Family family, int q) {
    long long Q = q;
    long long gl2 = (Q * Q - 1) * (Q * Q - Q);
    switch (family) {
        case Family::Gl2: return gl2;
        case Family::Sp4: return Q * Q * Q * Q * (Q * Q - 1) * (Q * Q * Q * Q - 1);
        case Family::Gsp4: return Q * Q * Q * Q * (Q * Q - 1) * (Q * Q * Q * Q - 1) * (Q - 1);
        case Family::ParamodularLevi: return gl2 * gl2 / (Q - 1);
        case Family::Gl2Product: return gl2 * gl2;
    }
    throw StructuralError("unknown family");
}

int EnumeratedGroup::find(uint64_t key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
}

int EnumeratedGroup::mul(int i, int j) const {
    MatQ p = mat_mul(*field_, mats_[static_cast<size_t>(i)], mats_[static_cast<size_t>(j)]);
    int r = find(mat_pack(p, field_->q()));
    if (r < 0) throw StructuralError("product left the element set (set not closed)");
    return r;
}

int EnumeratedGroup::element_order(int i) const {
    int ord = 1, x = i;
    while (x != id_) {
        x = mul(x, i);
        ++ord;
        if (ord > size()) throw StructuralError("element order exceeded group size");
    }
    return ord;
}

long long EnumeratedGroup::exponent() const {
    long long e = 1;
    for (const auto& c : classes_) e = std::lcm(e, static_cast<long long>(element_order(c.rep)));
    return e;
}

std::vector<int> EnumeratedGroup::root_coords(int u_elem) const {
    std::vector<int> out;
    const MatQ& m = mats_[static_cast<size_t>(u_elem)];
    out.reserve(sub_.coord_positions.size());
    for (auto [i, j] : sub_.coord_positions) out.push_back(m.at(i, j));
    return out;
}

std::vector<int> EnumeratedGroup::root_values(int t_elem) const {
    std::vector<int> out;
    const MatQ& m = mats_[static_cast<size_t>(t_elem)];
    out.reserve(sub_.coord_positions.size());
    for (auto [i, j] : sub_.coord_positions) out.push_back(field_->mul(m.at(i, i), field_->inv(m.at(j, j))));
    return out;
}

void EnumeratedGroup::index_elements() {
    std::sort(keys_.begin(), keys_.end());
    if (std::adjacent_find(keys_.begin(), keys_.end()) != keys_.end())
        throw StructuralError("duplicate element keys");
    mats_.clear();
    mats_.reserve(keys_.size());
    index_.clear();
    index_.reserve(keys_.size() * 2);
    for (size_t i = 0; i < keys_.size(); ++i) {
        mats_.push_back(mat_unpack(keys_[i], n_, field_->q()));
        index_.emplace(keys_[i], static_cast<int>(i));
    }
    id_ = find(mat_pack(MatQ::identity(n_), field_->q()));
    if (id_ < 0) throw StructuralError("identity missing from element set");
}

void EnumeratedGroup::compute_inverses() {
    inv_.assign(keys_.size(), -1);
    for (size_t i = 0; i < keys_.size(); ++i) {
        MatQ m = mat_inv(*field_, mats_[i]);
        int r = find(mat_pack(m, field_->q()));
        if (r < 0) throw StructuralError("inverse missing from element set");
        inv_[i] = r;
    }
}

void EnumeratedGroup::compute_classes(const std::vector<int>& conjugators) {
    const int nelem = size();
    class_of_.assign(static_cast<size_t>(nelem), -1);
    std::vector<ConjClass> raw;
    for (int seed = 0; seed < nelem; ++seed) {
        if (class_of_[static_cast<size_t>(seed)] >= 0) continue;
        int cid = static_cast<int>(raw.size());
        ConjClass c;
        std::deque<int> work{seed};
        class_of_[static_cast<size_t>(seed)] = cid;
        c.members.push_back(seed);
        while (!work.empty()) {
            int x = work.front();
            work.pop_front();
            for (int g : conjugators) {
                int y = conj(g, x);
                if (class_of_[static_cast<size_t>(y)] < 0) {
                    class_of_[static_cast<size_t>(y)] = cid;
                    c.members.push_back(y);
                    work.push_back(y);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.rep = c.members.front();
        raw.push_back(std::move(c));
    }
    // identity class first, then ascending representative key
    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    int id_class = class_of_[static_cast<size_t>(id_)];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (a == id_class || b == id_class) return a == id_class;
        return raw[static_cast<size_t>(a)].rep < raw[static_cast<size_t>(b)].rep;
    });
    classes_.clear();
    classes_.reserve(raw.size());
    std::vector<int> remap(raw.size());
    for (size_t pos = 0; pos < order.size(); ++pos) {
        remap[static_cast<size_t>(order[pos])] = static_cast<int>(pos);
        classes_.push_back(std::move(raw[static_cast<size_t>(order[pos])]));
    }
    for (auto& c : class_of_) c = remap[static_cast<size_t>(c)];
    long long total = 0;
    for (const auto& c : classes_) total += static_cast<long long>(c.members.size());
    if (total != nelem) throw StructuralError("conjugacy classes do not partition the group");
}

void EnumeratedGroup::derive_generators() {
    const int nelem = size();
    std::vector<char> closed(static_cast<size_t>(nelem), 0);
    gens_.clear();
    auto reclose = [&]() {
        std::fill(closed.begin(), closed.end(), 0);
        closed[static_cast<size_t>(id_)] = 1;
        std::deque<int> work{id_};
        while (!work.empty()) {
            int x = work.front();
            work.pop_front();
            for (int g : gens_) {
                int y = mul(x, g);
                if (!closed[static_cast<size_t>(y)]) {
                    closed[static_cast<size_t>(y)] = 1;
                    work.push_back(y);
                }
            }
        }
    };
    reclose();
    for (int i = 0; i < nelem; ++i) {
        if (closed[static_cast<size_t>(i)]) continue;
        gens_.push_back(i);
        reclose();
    }
}

void EnumeratedGroup::validate_family_equations() const {
    for (const auto& m : mats_)
        if (!family_equations_hold(family_, *field_, m))
            throw StructuralError("element violates the family's defining equations");
}

void EnumeratedGroup::build_subgroup_data() {
    const StructureSpec& spec = structure_spec(structure_);
    sub_ = SubgroupData{};
    sub_.coord_positions = spec.coords;

    for (int i = 0; i < size(); ++i) {
        const MatQ& m = mats_[static_cast<size_t>(i)];
        if (is_upper_triangular(m)) sub_.borel.push_back(i);
        if (is_diagonal(m)) sub_.torus.push_back(i);
        if (is_unitriangular(m)) sub_.unipotent.push_back(i);
    }
    for (int i = 0; i < size(); ++i) {
        bool central = true;
        for (int g : gens_)
            if (mul(i, g) != mul(g, i)) { central = false; break; }
        if (central) sub_.center.push_back(i);
    }

    MatQ wo = weyl_long_matrix(structure_, n_, *field_);
    sub_.weyl_long = find(mat_pack(wo, field_->q()));
    if (sub_.weyl_long < 0) throw StructuralError("long Weyl element not in the group");

    // Borel-pair identities; meaningless for arbitrary Plain subgroups
    if (structure_ != Structure::Plain) {
        if (sub_.borel.size() != sub_.torus.size() * sub_.unipotent.size())
            throw StructuralError("|B| != |T| * |U|");
        // B cap w_o B w_o^{-1} = T
        std::unordered_set<int> bset(sub_.borel.begin(), sub_.borel.end());
        std::vector<int> both;
        int w = sub_.weyl_long;
        int winv = inv_[static_cast<size_t>(w)];
        for (int b : sub_.borel) {
            int cb = mul(mul(winv, b), w); // in B iff b in w_o B w_o^{-1}
            if (bset.count(cb)) both.push_back(b);
        }
        std::sort(both.begin(), both.end());
        if (both != sub_.torus) throw StructuralError("B cap w_o B w_o^{-1} != T");
    }

    std::unordered_set<int> uset(sub_.unipotent.begin(), sub_.unipotent.end());
    const int w = sub_.weyl_long;
    const int winv = inv_[static_cast<size_t>(w)];

    for (const auto& rs : spec.records) {
        ParabolicRecord rec;
        rec.name = rs.name;
        rec.proper = rs.proper;
        rec.blocks = rs.blocks;

        if (!rs.proper) {
            rec.p_elems.resize(static_cast<size_t>(size()));
            std::iota(rec.p_elems.begin(), rec.p_elems.end(), 0);
            rec.n_elems = {id_};
            for (int x : rec.p_elems)
                if (uset.count(mul(mul(winv, x), w))) rec.q_elems.push_back(x);
            sub_.parabolics.push_back(std::move(rec));
            continue;
        }

        auto blk_of = block_index_of_rows(rs.blocks);
        std::vector<uint64_t> m_keys;
        for (int i = 0; i < size(); ++i) {
            const MatQ& m = mats_[static_cast<size_t>(i)];
            if (in_parabolic_pattern(m, blk_of)) {
                rec.p_elems.push_back(i);
                if (diagonal_blocks_identity(m, blk_of)) rec.n_elems.push_back(i);
                if (in_levi_pattern(m, blk_of)) m_keys.push_back(keys_[static_cast<size_t>(i)]);
            }
        }
        rec.levi = from_key_set(rs.levi_structure, family_, *field_, n_, m_keys);
        for (uint64_t mk : m_keys) {
            int x = find(mk);
            if (uset.count(mul(mul(winv, x), w))) rec.q_elems.push_back(x);
        }

        if (rec.p_elems.size() != m_keys.size() * rec.n_elems.size())
            throw StructuralError("|P| != |M| * |N| for parabolic " + rec.name);
        if (rec.q_elems.size() != rec.levi->subgroups().unipotent.size())
            throw StructuralError("|Q| != |U_M| for parabolic " + rec.name);

        // Levi decomposition recomposes (exhaustive when P is small)
        size_t step = rec.p_elems.size() <= 5000 ? 1 : rec.p_elems.size() / 1000;
        for (size_t pi = 0; pi < rec.p_elems.size(); pi += step) {
            int p = rec.p_elems[pi];
            LeviParts parts = levi_decompose(*this, rec, p);
            if (mul(parts.m, parts.n) != p) throw StructuralError("Levi recomposition failed");
        }
        sub_.parabolics.push_back(std::move(rec));
    }

    // the coordinate map is a surjective homomorphism U -> F_q^rank
    if (!sub_.coord_positions.empty()) {
        std::unordered_set<uint64_t> images;
        for (int u : sub_.unipotent) {
            auto c = root_coords(u);
            uint64_t ck = 0;
            for (int v : c) ck = ck * static_cast<uint64_t>(field_->q()) + static_cast<uint64_t>(v);
            images.insert(ck);
        }
        size_t expect = 1;
        for (size_t i = 0; i < sub_.coord_positions.size(); ++i) expect *= static_cast<size_t>(field_->q());
        if (images.size() != expect)
            throw StructuralError("simple-root coordinate map is not onto F_q^rank");
    }
}

std::unique_ptr<EnumeratedGroup> EnumeratedGroup::from_key_set(Structure st, Family parent_family,
                                                               const FieldTable& F, int n,
                                                               std::vector<uint64_t> keys) {
    auto G = std::unique_ptr<EnumeratedGroup>(new EnumeratedGroup());
    G->family_ = parent_family;
    G->structure_ = st;
    G->derived_ = true;
    G->field_ = &F;
    G->n_ = n;
    G->keys_ = std::move(keys);
    G->index_elements();
    G->compute_inverses();
    G->derive_generators();
    G->compute_classes(G->gens_);
    G->build_subgroup_data();
    return G;
}

std::unique_ptr<EnumeratedGroup> build_group(Family family, const FieldTable& F, const BuildOptions& opts) {
    auto G = std::unique_ptr<EnumeratedGroup>(new EnumeratedGroup());
    G->family_ = family;
    G->structure_ = family_structure(family);
    G->field_ = &F;
    G->n_ = structure_spec(G->structure_).n;

    auto gen_mats = family_generators(family, F);
    for (const auto& m : gen_mats)
        if (!family_equations_hold(family, F, m))
            throw StructuralError("generator not in family (defining-equation check failed)");

    long long predicted = family_order_formula(family, F.q());
    if (predicted > opts.order_bound)
        throw StructuralError("group order " + std::to_string(predicted) + " exceeds bound " +
                              std::to_string(opts.order_bound));

    bool loaded = false;
    std::optional<GroupCacheData> cached;
    if (!opts.cache_dir.empty()) {
        if (auto data = load_group_cache(opts.cache_dir, family_name(family), F.q())) {
            try {
                G->keys_ = data->keys;
                G->index_elements();
                G->compute_inverses();
                G->classes_.clear();
                G->class_of_.assign(G->keys_.size(), -1);
                for (const auto& members : data->classes) {
                    ConjClass c;
                    c.members = members;
                    if (c.members.empty()) throw StructuralError("empty cached class");
                    c.rep = c.members.front();
                    for (int m : c.members) {
                        if (m < 0 || m >= G->size()) throw StructuralError("cached class index out of range");
                        G->class_of_[static_cast<size_t>(m)] = static_cast<int>(G->classes_.size());
                    }
                    G->classes_.push_back(std::move(c));
                }
                long long total = 0;
                for (const auto& c : G->classes_) total += static_cast<long long>(c.members.size());
                if (total != G->size()) throw StructuralError("cached classes do not partition");
                cached = std::move(*data);
                loaded = true;
            } catch (const std::exception&) {
                loaded = false; // fall through to a fresh build
            }
        }
    }

    if (!loaded) {
        // breadth-first closure over the generator set
        std::unordered_map<uint64_t, MatQ> seen;
        std::deque<MatQ> work;
        MatQ id = MatQ::identity(G->n_);
        seen.emplace(mat_pack(id, F.q()), id);
        work.push_back(id);
        while (!work.empty()) {
            MatQ x = work.front();
            work.pop_front();
            for (const auto& g : gen_mats) {
                MatQ y = mat_mul(F, x, g);
                uint64_t yk = mat_pack(y, F.q());
                if (seen.emplace(yk, y).second) {
                    if (static_cast<long long>(seen.size()) > opts.order_bound)
                        throw StructuralError("enumeration exceeded the configured order bound");
                    work.push_back(y);
                }
            }
        }
        G->keys_.clear();
        G->keys_.reserve(seen.size());
        for (const auto& [k, _] : seen) G->keys_.push_back(k);
        G->index_elements();
        G->compute_inverses();

        G->gens_.clear();
        for (const auto& m : gen_mats) {
            int gi = G->find(mat_pack(m, F.q()));
            if (gi < 0) throw StructuralError("generator missing after closure");
            if (gi != G->id_ && std::find(G->gens_.begin(), G->gens_.end(), gi) == G->gens_.end())
                G->gens_.push_back(gi);
        }
        if (G->gens_.empty()) G->gens_.push_back(G->id_); // trivial group edge case
        G->compute_classes(G->gens_);
    } else {
        G->gens_.clear();
        for (const auto& m : gen_mats) {
            int gi = G->find(mat_pack(m, F.q()));
            if (gi < 0) throw StructuralError("cached elements missing a generator");
            if (gi != G->id_ && std::find(G->gens_.begin(), G->gens_.end(), gi) == G->gens_.end())
                G->gens_.push_back(gi);
        }
        if (G->gens_.empty()) G->gens_.push_back(G->id_);
    }

    if (G->size() != predicted)
        throw StructuralError("enumerated order " + std::to_string(G->size()) +
                              " does not match the closed-form order " + std::to_string(predicted));
    G->validate_family_equations();
    G->build_subgroup_data();

    if (loaded) {
        // a hash-valid cache whose derived sets drifted means the code and the
        // cache version disagree; refuse rather than guess
        if (cached->borel != G->sub_.borel || cached->torus != G->sub_.torus ||
            cached->unipotent != G->sub_.unipotent || cached->center != G->sub_.center)
            throw StructuralError("cached subgroup sets disagree with the rebuilt ones");
    } else if (!opts.cache_dir.empty()) {
        GroupCacheData data;
        data.family = family_name(family);
        data.q = F.q();
        data.keys = G->keys_;
        for (const auto& c : G->classes_) data.classes.push_back(c.members);
        data.borel = G->sub_.borel;
        data.torus = G->sub_.torus;
        data.unipotent = G->sub_.unipotent;
        data.center = G->sub_.center;
        store_group_cache(opts.cache_dir, data);
    }
    return G;
}

LeviParts levi_decompose(const EnumeratedGroup& G, const ParabolicRecord& rec, int p_elem) {
    if (!rec.proper) return {p_elem, G.identity()};
    auto blk_of = block_index_of_rows(rec.blocks);
    const MatQ& pm = G.mat(p_elem);
    if (!in_parabolic_pattern(pm, blk_of)) throw StructuralError("element not in the parabolic subgroup");
    MatQ mm = extract_diag_blocks(pm, blk_of);
    int m = G.find(mat_pack(mm, G.field().q()));
    if (m < 0) throw StructuralError("Levi part missing from the group");
    int n = G.mul(G.inv(m), p_elem);
    const MatQ& nm = G.mat(n);
    if (!in_parabolic_pattern(nm, blk_of) || !diagonal_blocks_identity(nm, blk_of))
        throw StructuralError("unipotent part has the wrong shape");
    return {m, n};
}

} // namespace genrest

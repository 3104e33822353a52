#include "genrest/tables.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "genrest/errors.hpp"
#include "genrest/json_writer.hpp"
#include "genrest/modarith.hpp"

namespace genrest {

namespace {
// Seed for the separating linear combinations and root splitting in
// dixon_table; fixed so repeated runs produce identical tables.
constexpr uint64_t kDixonSeed = 0x67656e72657374ULL;
} // namespace

void validate_table(const IrreducibleTable& t, double tol) {
    const EnumeratedGroup& G = *t.group;
    const int c = G.class_count();
    if (t.row_count() != c) throw StructuralError("table row count differs from class count");
    long long sumsq = 0;
    for (const auto& r : t.rows) {
        long long d = r.degree();
        if (d <= 0) throw StructuralError("non-positive character degree");
        sumsq += d * d;
    }
    if (sumsq != G.size()) throw StructuralError("sum of squared degrees differs from |G|");
    for (int i = 0; i < c; ++i)
        for (int j = i; j < c; ++j) {
            cplx ip = inner(t.rows[static_cast<size_t>(i)], t.rows[static_cast<size_t>(j)]);
            cplx want = i == j ? cplx(1, 0) : cplx(0, 0);
            if (std::abs(ip - want) > tol) throw StructuralError("row orthogonality violated");
        }
    for (int a = 0; a < c; ++a)
        for (int b = a; b < c; ++b) {
            cplx acc(0, 0);
            for (const auto& r : t.rows)
                acc += r.vals[static_cast<size_t>(a)] * std::conj(r.vals[static_cast<size_t>(b)]);
            double want = a == b ? static_cast<double>(G.size()) / static_cast<double>(G.cls(a).members.size()) : 0.0;
            if (std::abs(acc - cplx(want, 0)) > tol * static_cast<double>(G.size()))
                throw StructuralError("column orthogonality violated");
        }
}

namespace {

enum class Gl2ClassType { Central, NonSemisimple, Split, Elliptic };

struct Gl2ClassInfo {
    Gl2ClassType type;
    int a = 0;   // central / non-semisimple / first split eigenvalue
    int b = 0;   // second split eigenvalue
    int tau = 0; // elliptic eigenvalue in the quadratic extension (orbit minimum)
    int det = 0;
};

std::vector<Gl2ClassInfo> classify_gl2_classes(const EnumeratedGroup& G, const FieldTable& F2,
                                               const FieldEmbedding& emb) {
    const FieldTable& F = G.field();
    const int q = F.q();
    std::vector<Gl2ClassInfo> out;
    out.reserve(static_cast<size_t>(G.class_count()));
    for (int c = 0; c < G.class_count(); ++c) {
        const MatQ& m = G.mat(G.cls(c).rep);
        int tr = F.add(m.at(0, 0), m.at(1, 1));
        int det = mat_det(F, m);
        Gl2ClassInfo info;
        info.det = det;
        std::vector<int> roots;
        for (int a = 0; a < q; ++a) {
            // a^2 - tr*a + det
            int v = F.add(F.sub(F.mul(a, a), F.mul(tr, a)), det);
            if (v == 0) roots.push_back(a);
        }
        bool scalar = m.at(0, 1) == 0 && m.at(1, 0) == 0 && m.at(0, 0) == m.at(1, 1);
        if (scalar) {
            info.type = Gl2ClassType::Central;
            info.a = m.at(0, 0);
        } else if (roots.size() == 2) {
            info.type = Gl2ClassType::Split;
            info.a = roots[0];
            info.b = roots[1];
        } else if (roots.size() == 1) {
            info.type = Gl2ClassType::NonSemisimple;
            info.a = roots[0];
        } else {
            info.type = Gl2ClassType::Elliptic;
            int trE = emb(tr), detE = emb(det);
            int tau = -1;
            for (int t = 0; t < F2.q(); ++t) {
                int v = F2.add(F2.sub(F2.mul(t, t), F2.mul(trE, t)), detE);
                if (v == 0) { tau = t; break; } // the smaller root of the Frobenius pair
            }
            if (tau < 0) throw StructuralError("elliptic eigenvalue missing from the quadratic extension");
            info.tau = tau;
        }
        out.push_back(info);
    }
    return out;
}

} // namespace

IrreducibleTable gl2_table(const EnumeratedGroup& G) {
    if (G.family() != Family::Gl2 || G.derived())
        throw StructuralError("closed-form table is only defined for the GL2 family");
    const FieldTable& F = G.field();
    const int q = F.q();
    FieldTable F2 = field_build(FieldSpec::make(F.p(), 2 * F.k()));
    FieldEmbedding emb(F, F2);
    auto cls = classify_gl2_classes(G, F2, emb);

    const int c = G.class_count();
    if (c != q * q - 1) throw StructuralError("GL2 class count differs from q^2 - 1");

    IrreducibleTable t;
    t.group = &G;

    auto alpha = [&](int i, int x) { return MultiplicativeCharacter(F, i)(x); };
    auto theta = [&](int j, int x2) { return MultiplicativeCharacter(F2, j)(x2); };

    // determinant twists, degree 1
    for (int i = 0; i < q - 1; ++i) {
        ClassFunction row = zero_function(G);
        for (int k = 0; k < c; ++k) row.vals[static_cast<size_t>(k)] = alpha(i, cls[static_cast<size_t>(k)].det);
        t.rows.push_back(std::move(row));
        t.labels.push_back("det-twist(" + std::to_string(i) + ")");
    }
    // Steinberg twists, degree q
    for (int i = 0; i < q - 1; ++i) {
        ClassFunction row = zero_function(G);
        for (int k = 0; k < c; ++k) {
            const auto& ci = cls[static_cast<size_t>(k)];
            cplx v;
            switch (ci.type) {
                case Gl2ClassType::Central: v = static_cast<double>(q) * alpha(i, ci.det); break;
                case Gl2ClassType::NonSemisimple: v = 0; break;
                case Gl2ClassType::Split: v = alpha(i, ci.det); break;
                case Gl2ClassType::Elliptic: v = -alpha(i, ci.det); break;
            }
            row.vals[static_cast<size_t>(k)] = v;
        }
        t.rows.push_back(std::move(row));
        t.labels.push_back("steinberg(" + std::to_string(i) + ")");
    }
    // principal series, degree q+1
    for (int i = 0; i < q - 1; ++i)
        for (int j = i + 1; j < q - 1; ++j) {
            ClassFunction row = zero_function(G);
            for (int k = 0; k < c; ++k) {
                const auto& ci = cls[static_cast<size_t>(k)];
                cplx v;
                switch (ci.type) {
                    case Gl2ClassType::Central: v = static_cast<double>(q + 1) * alpha(i, ci.a) * alpha(j, ci.a); break;
                    case Gl2ClassType::NonSemisimple: v = alpha(i, ci.a) * alpha(j, ci.a); break;
                    case Gl2ClassType::Split:
                        v = alpha(i, ci.a) * alpha(j, ci.b) + alpha(i, ci.b) * alpha(j, ci.a);
                        break;
                    case Gl2ClassType::Elliptic: v = 0; break;
                }
                row.vals[static_cast<size_t>(k)] = v;
            }
            t.rows.push_back(std::move(row));
            t.labels.push_back("principal(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    // cuspidal rows from Frobenius orbits {theta, theta^q} of regular
    // characters of the quadratic extension
    const int Q1 = F2.q() - 1;
    for (int j = 0; j < Q1; ++j) {
        int fr = static_cast<int>(static_cast<long long>(j) * q % Q1);
        if (fr == j || fr < j) continue; // irregular, or not the orbit minimum
        ClassFunction row = zero_function(G);
        for (int k = 0; k < c; ++k) {
            const auto& ci = cls[static_cast<size_t>(k)];
            cplx v;
            switch (ci.type) {
                case Gl2ClassType::Central: v = static_cast<double>(q - 1) * theta(j, emb(ci.a)); break;
                case Gl2ClassType::NonSemisimple: v = -theta(j, emb(ci.a)); break;
                case Gl2ClassType::Split: v = 0; break;
                case Gl2ClassType::Elliptic:
                    v = -(theta(j, ci.tau) + theta(j, F2.pow(ci.tau, q)));
                    break;
            }
            row.vals[static_cast<size_t>(k)] = v;
        }
        t.rows.push_back(std::move(row));
        t.labels.push_back("cuspidal(" + std::to_string(j) + ")");
    }

    validate_table(t);
    return t;
}

ClassFunction steinberg(const EnumeratedGroup& G) {
    const auto& b = G.subgroups().borel;
    ClassFunction st = induce_from_subset(G, b, [](int) { return cplx(1, 0); }) - trivial_character(G);
    if (round_to_int(inner(st, st), kIntTol, "Steinberg norm") != 1)
        throw StructuralError("Ind_B^G 1 - 1 is not irreducible (broken Borel data?)");
    return st;
}

namespace {

struct OmegaVector {
    std::vector<uint64_t> omega; // h_k chi(z_k) / d mod l
    long long degree = 0;
    std::vector<uint64_t> chi_mod; // chi(z_k) mod l
};

} // namespace

IrreducibleTable dixon_table(const EnumeratedGroup& G) {
    const int c = G.class_count();
    const long long n = G.size();
    if (c > 256) throw StructuralError("class count too large for the dense class-algebra method");

    const long long e = G.exponent();
    double lower = 2.0 * std::sqrt(static_cast<double>(n));
    uint64_t l = smallest_admissible_prime(static_cast<uint64_t>(e), static_cast<uint64_t>(lower) + 1);
    if (l == 0) throw StructuralError("no admissible prime below 2^31");

    // class multiplication coefficients a[i][j][k] = #{(x,y) in C_i x C_j : x y = z_k}
    std::vector<int32_t> a(static_cast<size_t>(c) * c * c, 0);
    for (int k = 0; k < c; ++k) {
        int zk = G.cls(k).rep;
        for (int x = 0; x < G.size(); ++x) {
            int i = G.class_of(x);
            int j = G.class_of(G.mul(G.inv(x), zk));
            ++a[(static_cast<size_t>(i) * c + static_cast<size_t>(j)) * c + static_cast<size_t>(k)];
        }
    }

    std::vector<uint64_t> h(static_cast<size_t>(c));
    for (int k = 0; k < c; ++k) h[static_cast<size_t>(k)] = G.cls(k).members.size();

    // Simultaneous eigenvectors of the class-sum matrices A_i[j][k] = a_{ijk}
    // over F_l, by iterative subspace refinement: Z(F_l G) is split semisimple
    // (l = 1 mod e and l does not divide |G|), so its c algebra characters are
    // pairwise distinct and refining by every A_i separates them completely.
    auto class_sum_matrix = [&](int i) {
        ModMatrix A(static_cast<size_t>(c), std::vector<uint64_t>(static_cast<size_t>(c), 0));
        for (int j = 0; j < c; ++j)
            for (int k = 0; k < c; ++k)
                A[static_cast<size_t>(j)][static_cast<size_t>(k)] = static_cast<uint64_t>(
                    a[(static_cast<size_t>(i) * c + static_cast<size_t>(j)) * c + static_cast<size_t>(k)] %
                    static_cast<int64_t>(l));
        return A;
    };

    using Basis = std::vector<std::vector<uint64_t>>; // ambient vectors spanning a subspace
    std::vector<Basis> spaces;
    {
        Basis full;
        for (int k = 0; k < c; ++k) {
            std::vector<uint64_t> ek(static_cast<size_t>(c), 0);
            ek[static_cast<size_t>(k)] = 1;
            full.push_back(std::move(ek));
        }
        spaces.push_back(std::move(full));
    }
    SplitMix64 rng(kDixonSeed);
    auto all_split = [&]() {
        return std::all_of(spaces.begin(), spaces.end(), [](const Basis& b) { return b.size() == 1; });
    };
    auto refine_with = [&](const ModMatrix& A) {
        std::vector<Basis> next;
        for (Basis& B : spaces) {
            const int d = static_cast<int>(B.size());
            if (d == 1) {
                next.push_back(std::move(B));
                continue;
            }
            // restriction S of A to span(B): solve B S = A B column by column
            // via one Gaussian elimination of [B | A b_1 ... A b_d]
            ModMatrix aug(static_cast<size_t>(c), std::vector<uint64_t>(static_cast<size_t>(2 * d), 0));
            for (int col = 0; col < d; ++col) {
                for (int row = 0; row < c; ++row) aug[static_cast<size_t>(row)][static_cast<size_t>(col)] =
                    B[static_cast<size_t>(col)][static_cast<size_t>(row)];
                for (int row = 0; row < c; ++row) {
                    unsigned __int128 acc = 0;
                    for (int k = 0; k < c; ++k)
                        acc += static_cast<unsigned __int128>(A[static_cast<size_t>(row)][static_cast<size_t>(k)]) *
                               B[static_cast<size_t>(col)][static_cast<size_t>(k)];
                    aug[static_cast<size_t>(row)][static_cast<size_t>(d + col)] = static_cast<uint64_t>(acc % l);
                }
            }
            // forward elimination with full pivot bookkeeping
            std::vector<int> pivot_rows;
            int r = 0;
            for (int cc = 0; cc < d && r < c; ++cc) {
                int piv = -1;
                for (int i = r; i < c; ++i)
                    if (aug[static_cast<size_t>(i)][static_cast<size_t>(cc)] != 0) { piv = i; break; }
                if (piv < 0) throw StructuralError("subspace basis is rank-deficient");
                std::swap(aug[static_cast<size_t>(piv)], aug[static_cast<size_t>(r)]);
                uint64_t inv = mod_inv(aug[static_cast<size_t>(r)][static_cast<size_t>(cc)], l);
                for (int j = 0; j < 2 * d; ++j)
                    aug[static_cast<size_t>(r)][static_cast<size_t>(j)] = static_cast<uint64_t>(
                        static_cast<unsigned __int128>(aug[static_cast<size_t>(r)][static_cast<size_t>(j)]) * inv % l);
                for (int i = 0; i < c; ++i) {
                    if (i == r) continue;
                    uint64_t f = aug[static_cast<size_t>(i)][static_cast<size_t>(cc)];
                    if (f == 0) continue;
                    for (int j = 0; j < 2 * d; ++j) {
                        uint64_t sub = static_cast<uint64_t>(
                            static_cast<unsigned __int128>(f) * aug[static_cast<size_t>(r)][static_cast<size_t>(j)] % l);
                        uint64_t& tgt = aug[static_cast<size_t>(i)][static_cast<size_t>(j)];
                        tgt = (tgt + l - sub) % l;
                    }
                }
                pivot_rows.push_back(r);
                ++r;
            }
            for (int i = r; i < c; ++i)
                for (int j = d; j < 2 * d; ++j)
                    if (aug[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
                        throw StructuralError("class-sum matrix does not preserve the subspace");
            ModMatrix S(static_cast<size_t>(d), std::vector<uint64_t>(static_cast<size_t>(d), 0));
            for (int row = 0; row < d; ++row)
                for (int col = 0; col < d; ++col)
                    S[static_cast<size_t>(row)][static_cast<size_t>(col)] =
                        aug[static_cast<size_t>(row)][static_cast<size_t>(d + col)];

            auto roots = distinct_roots_mod(charpoly_mod(S, l), l, rng);
            if (roots.empty()) throw StructuralError("restricted class-sum matrix has no eigenvalues");
            for (uint64_t lam : roots) {
                ModMatrix Sl = S;
                for (int i = 0; i < d; ++i)
                    Sl[static_cast<size_t>(i)][static_cast<size_t>(i)] =
                        (Sl[static_cast<size_t>(i)][static_cast<size_t>(i)] + l - lam % l) % l;
                auto ns = nullspace_mod(Sl, l);
                if (ns.empty()) throw StructuralError("missing eigenspace for a computed eigenvalue");
                Basis refined;
                for (const auto& y : ns) {
                    std::vector<uint64_t> v(static_cast<size_t>(c), 0);
                    for (int m = 0; m < d; ++m) {
                        if (y[static_cast<size_t>(m)] == 0) continue;
                        for (int k = 0; k < c; ++k)
                            v[static_cast<size_t>(k)] = static_cast<uint64_t>(
                                (v[static_cast<size_t>(k)] +
                                 static_cast<unsigned __int128>(y[static_cast<size_t>(m)]) *
                                     B[static_cast<size_t>(m)][static_cast<size_t>(k)]) %
                                l);
                    }
                    refined.push_back(std::move(v));
                }
                next.push_back(std::move(refined));
            }
        }
        spaces = std::move(next);
    };

    for (int i = 1; i < c && !all_split(); ++i) refine_with(class_sum_matrix(i));
    // fallback: deterministic random combinations of the class-sum matrices
    for (int attempt = 0; attempt < 16 && !all_split(); ++attempt) {
        std::vector<uint64_t> r(static_cast<size_t>(c));
        for (auto& v : r) v = rng.below(l);
        ModMatrix M(static_cast<size_t>(c), std::vector<uint64_t>(static_cast<size_t>(c), 0));
        for (int j = 0; j < c; ++j)
            for (int k = 0; k < c; ++k) {
                unsigned __int128 acc = 0;
                for (int i = 0; i < c; ++i)
                    acc += static_cast<unsigned __int128>(r[static_cast<size_t>(i)]) *
                           static_cast<uint64_t>(
                               a[(static_cast<size_t>(i) * c + static_cast<size_t>(j)) * c + static_cast<size_t>(k)]);
                M[static_cast<size_t>(j)][static_cast<size_t>(k)] = static_cast<uint64_t>(acc % l);
            }
        refine_with(M);
    }
    if (!all_split()) throw StructuralError("eigenspace separation failed after retries");

    std::vector<std::vector<uint64_t>> omegas;
    for (const auto& B : spaces) {
        const auto& v0 = B.front();
        if (v0[0] == 0) throw StructuralError("eigenvector vanishes on the identity class");
        uint64_t inv0 = mod_inv(v0[0], l);
        std::vector<uint64_t> v(static_cast<size_t>(c));
        for (int k = 0; k < c; ++k)
            v[static_cast<size_t>(k)] =
                static_cast<uint64_t>(static_cast<unsigned __int128>(v0[static_cast<size_t>(k)]) * inv0 % l);
        omegas.push_back(std::move(v));
    }

    // inverse-class map
    std::vector<int> kstar(static_cast<size_t>(c));
    for (int k = 0; k < c; ++k) kstar[static_cast<size_t>(k)] = G.class_of(G.inv(G.cls(k).rep));

    std::vector<OmegaVector> rowsm;
    for (auto& om : omegas) {
        OmegaVector ov;
        ov.omega = om;
        uint64_t s = 0;
        for (int k = 0; k < c; ++k) {
            uint64_t term = static_cast<uint64_t>(
                static_cast<unsigned __int128>(om[static_cast<size_t>(k)]) *
                om[static_cast<size_t>(kstar[static_cast<size_t>(k)])] % l);
            term = static_cast<uint64_t>(static_cast<unsigned __int128>(term) * mod_inv(h[static_cast<size_t>(k)], l) % l);
            s = (s + term) % l;
        }
        if (s == 0) throw StructuralError("degenerate norm sum in the class algebra");
        uint64_t d2 = static_cast<uint64_t>(static_cast<unsigned __int128>(n % l) * mod_inv(s, l) % l);
        long long d = 0;
        for (long long cand = 1; cand * cand <= n; ++cand)
            if (static_cast<uint64_t>(cand * cand % static_cast<long long>(l)) == d2) { d = cand; break; }
        if (d == 0) throw StructuralError("no integer degree matches the eigenvector norm");
        ov.degree = d;
        ov.chi_mod.resize(static_cast<size_t>(c));
        for (int k = 0; k < c; ++k)
            ov.chi_mod[static_cast<size_t>(k)] = static_cast<uint64_t>(
                static_cast<unsigned __int128>(om[static_cast<size_t>(k)]) * (static_cast<uint64_t>(d) % l) % l *
                    mod_inv(h[static_cast<size_t>(k)], l) % l);
        rowsm.push_back(std::move(ov));
    }

    // deterministic row order: by degree, then by the chi-mod-l vector
    std::sort(rowsm.begin(), rowsm.end(), [](const OmegaVector& x, const OmegaVector& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        return x.chi_mod < y.chi_mod;
    });

    // discrete-Fourier lift of chi mod l to exact complex values
    uint64_t g0 = primitive_root_mod(l);
    uint64_t z = mod_pow(g0, (l - 1) / static_cast<uint64_t>(e), l); // primitive e-th root mod l

    IrreducibleTable t;
    t.group = &G;
    for (size_t ri = 0; ri < rowsm.size(); ++ri) {
        const auto& ov = rowsm[ri];
        ClassFunction row = zero_function(G);
        for (int k = 0; k < c; ++k) {
            int rep = G.cls(k).rep;
            int ord = G.element_order(rep);
            // chi values on the cyclic group generated by the representative
            std::vector<uint64_t> chis(static_cast<size_t>(ord));
            int x = G.identity();
            for (int nn = 0; nn < ord; ++nn) {
                chis[static_cast<size_t>(nn)] = ov.chi_mod[static_cast<size_t>(G.class_of(x))];
                x = G.mul(x, rep);
            }
            uint64_t zk = mod_pow(z, static_cast<uint64_t>(e / ord), l); // primitive ord-th root
            uint64_t zk_inv = mod_inv(zk, l);
            uint64_t ord_inv = mod_inv(static_cast<uint64_t>(ord) % l, l);
            cplx val(0, 0);
            long long multsum = 0;
            for (int m = 0; m < ord; ++m) {
                uint64_t acc = 0;
                uint64_t w = 1; // zk^{-m n}
                uint64_t step = mod_pow(zk_inv, static_cast<uint64_t>(m), l);
                for (int nn = 0; nn < ord; ++nn) {
                    acc = static_cast<uint64_t>(
                        (acc + static_cast<unsigned __int128>(chis[static_cast<size_t>(nn)]) * w) % l);
                    w = static_cast<uint64_t>(static_cast<unsigned __int128>(w) * step % l);
                }
                uint64_t mult = static_cast<uint64_t>(static_cast<unsigned __int128>(acc) * ord_inv % l);
                if (mult > static_cast<uint64_t>(ov.degree))
                    throw StructuralError("eigenvalue multiplicity exceeds the degree (lift failure)");
                multsum += static_cast<long long>(mult);
                if (mult != 0) val += static_cast<double>(mult) * root_of_unity(ord, m);
            }
            if (multsum != ov.degree) throw StructuralError("eigenvalue multiplicities do not sum to the degree");
            row.vals[static_cast<size_t>(k)] = val;
        }
        t.rows.push_back(std::move(row));
        t.labels.push_back("dixon-row-" + std::to_string(ri));
    }
    validate_table(t);
    return t;
}

std::vector<long long> decompose(const IrreducibleTable& t, const ClassFunction& f) {
    std::vector<long long> mult;
    mult.reserve(t.rows.size());
    for (const auto& r : t.rows)
        mult.push_back(round_to_int(inner(f, r), kIntTol, "decomposition multiplicity"));
    return mult;
}

std::vector<int> match_rows(const IrreducibleTable& a, const IrreducibleTable& b, double tol) {
    if (a.group != b.group || a.row_count() != b.row_count())
        throw StructuralError("tables are not comparable");
    const int c = a.row_count();
    std::vector<int> perm(static_cast<size_t>(c), -1);
    std::vector<char> used(static_cast<size_t>(c), 0);
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < c; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            double dist = 0;
            for (size_t k = 0; k < a.rows[static_cast<size_t>(i)].vals.size(); ++k)
                dist = std::max(dist, std::abs(a.rows[static_cast<size_t>(i)].vals[k] -
                                               b.rows[static_cast<size_t>(j)].vals[k]));
            if (dist < tol) {
                perm[static_cast<size_t>(i)] = j;
                used[static_cast<size_t>(j)] = 1;
                break;
            }
        }
        if (perm[static_cast<size_t>(i)] < 0)
            throw StructuralError("no matching row for " + a.labels[static_cast<size_t>(i)]);
    }
    return perm;
}

std::string table_to_json(const IrreducibleTable& t) {
    const EnumeratedGroup& G = *t.group;
    JsonWriter w;
    w.begin_object();
    w.key("family");
    w.value(family_name(G.family()));
    w.key("q");
    w.value(G.field().q());
    w.key("order");
    w.value(static_cast<long long>(G.size()));
    w.key("class_reps");
    w.begin_array();
    for (int c = 0; c < G.class_count(); ++c) w.value(static_cast<unsigned long long>(G.key(G.cls(c).rep)));
    w.end_array();
    w.key("class_sizes");
    w.begin_array();
    for (int c = 0; c < G.class_count(); ++c) w.value(static_cast<long long>(G.cls(c).members.size()));
    w.end_array();
    w.key("rows");
    w.begin_array();
    for (size_t i = 0; i < t.rows.size(); ++i) {
        w.begin_object();
        w.key("label");
        w.value(t.labels[i]);
        w.key("degree");
        w.value(t.rows[i].degree());
        w.key("values");
        w.begin_array();
        for (const auto& v : t.rows[i].vals) {
            w.begin_array();
            w.value(v.real());
            w.value(v.imag());
            w.end_array();
        }
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

} // namespace genrest

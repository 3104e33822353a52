#include "genrest/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "genrest/errors.hpp"

namespace genrest {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> prime_factors(long long n) {
    std::vector<int> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<int>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<int>(n));
    return out;
}

// Polynomial arithmetic over F_p, coefficient vectors of fixed length k
// (residues mod the monic degree-k modulus).
struct PolyCtx {
    int p;
    int k;
    std::vector<int> mod; // monic, size k+1

    std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> full(static_cast<size_t>(2 * k - 1), 0);
        for (int i = 0; i < k; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < k; ++j)
                full[static_cast<size_t>(i + j)] =
                    (full[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]) % p;
        }
        // reduce: x^k = -(mod[0] + ... + mod[k-1] x^{k-1})
        for (int d = 2 * k - 2; d >= k; --d) {
            int c = full[static_cast<size_t>(d)];
            if (c == 0) continue;
            full[static_cast<size_t>(d)] = 0;
            for (int j = 0; j < k; ++j) {
                int t = full[static_cast<size_t>(d - k + j)] - c * mod[static_cast<size_t>(j)];
                full[static_cast<size_t>(d - k + j)] = ((t % p) + p) % p;
            }
        }
        full.resize(static_cast<size_t>(k));
        return full;
    }

    std::vector<int> pow(std::vector<int> base, long long e) const {
        std::vector<int> acc(static_cast<size_t>(k), 0);
        acc[0] = 1;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
};

std::vector<int> decode_poly(int index, int p, int k) {
    std::vector<int> c(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        c[static_cast<size_t>(i)] = index % p;
        index /= p;
    }
    return c;
}

int encode_poly(const std::vector<int>& c, int p) {
    int idx = 0;
    for (size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
    return idx;
}

bool is_one(const std::vector<int>& c) {
    if (c[0] != 1) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

// x has multiplicative order exactly q-1 mod (m, p); this forces m primitive.
bool x_is_primitive(const PolyCtx& ctx, long long qm1) {
    std::vector<int> x(static_cast<size_t>(ctx.k), 0);
    x[1] = 1;
    if (!is_one(ctx.pow(x, qm1))) return false;
    for (int r : prime_factors(qm1))
        if (is_one(ctx.pow(x, qm1 / r))) return false;
    return true;
}

int smallest_primitive_root(int p) {
    auto fac = prime_factors(p - 1);
    for (int g = 1; g < p; ++g) {
        bool ok = true;
        for (int r : fac) {
            long long acc = 1, base = g, e = (p - 1) / r;
            while (e > 0) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            if (acc == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw StructuralError("no primitive root mod " + std::to_string(p));
}

} // namespace

FieldSpec FieldSpec::make(int p, int k) {
    FieldSpec s;
    s.p = p;
    s.k = k;
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    s.q = static_cast<int>(q);
    return s;
}

int FieldTable::add_slow(int a, int b) const {
    int out = 0, mult = 1;
    int p = spec_.p;
    for (int i = 0; i < spec_.k; ++i) {
        out += ((a % p) + (b % p)) % p * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

int FieldTable::add(int a, int b) const {
    return dense_ ? add_tab_[static_cast<size_t>(a) * static_cast<size_t>(spec_.q) + static_cast<size_t>(b)]
                  : add_slow(a, b);
}

int FieldTable::neg(int a) const {
    if (dense_) return neg_tab_[static_cast<size_t>(a)];
    int out = 0, mult = 1;
    int p = spec_.p;
    for (int i = 0; i < spec_.k; ++i) {
        out += (p - a % p) % p * mult;
        a /= p;
        mult *= p;
    }
    return out;
}

int FieldTable::sub(int a, int b) const { return add(a, neg(b)); }

int FieldTable::mul(int a, int b) const {
    if (dense_) return mul_tab_[static_cast<size_t>(a) * static_cast<size_t>(spec_.q) + static_cast<size_t>(b)];
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<size_t>((log_[static_cast<size_t>(a)] + log_[static_cast<size_t>(b)]) % (spec_.q - 1))];
}

int FieldTable::inv(int a) const {
    if (a == 0) throw StructuralError("field inverse of 0");
    if (dense_) return inv_tab_[static_cast<size_t>(a)];
    int l = log_[static_cast<size_t>(a)];
    return exp_[static_cast<size_t>((spec_.q - 1 - l) % (spec_.q - 1))];
}

int FieldTable::pow(int a, long long e) const {
    long long ord = spec_.q - 1;
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw StructuralError("field pow: 0 to a negative power");
        return 0;
    }
    long long le = ((e % ord) + ord) % ord;
    return exp_[static_cast<size_t>(static_cast<long long>(log_[static_cast<size_t>(a)]) * le % ord)];
}

int FieldTable::log(int a) const {
    if (a == 0) throw StructuralError("field log of 0");
    return log_[static_cast<size_t>(a)];
}

int FieldTable::exp(long long i) const {
    long long ord = spec_.q - 1;
    return exp_[static_cast<size_t>(((i % ord) + ord) % ord)];
}

int FieldTable::trace(int a) const { return trace_[static_cast<size_t>(a)]; }

FieldTable field_build(const FieldSpec& spec) {
    if (!is_prime(spec.p)) throw StructuralError("field characteristic " + std::to_string(spec.p) + " is not prime");
    if (spec.k < 1) throw StructuralError("field extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < spec.k; ++i) {
        q *= spec.p;
        if (q > FieldTable::kMaxQ) throw StructuralError("field size exceeds configuration bound 2^16");
    }
    if (q != spec.q) throw StructuralError("inconsistent FieldSpec: q != p^k");

    FieldTable t;
    t.spec_ = spec;
    const int p = spec.p, k = spec.k;

    if (k == 1) {
        t.gen_ = smallest_primitive_root(p);
        t.modulus_ = {(p - t.gen_ % p) % p, 1}; // x - g, so the basis root is g itself
    } else {
        // smallest base-p encoding of a monic primitive polynomial of degree k
        bool found = false;
        for (int enc = 1; enc < spec.q; ++enc) {
            if (enc % p == 0) continue; // m(0) = 0 can never be primitive
            auto coeffs = decode_poly(enc, p, k);
            coeffs.push_back(1);
            PolyCtx ctx{p, k, coeffs};
            if (x_is_primitive(ctx, spec.q - 1)) {
                t.modulus_ = coeffs;
                found = true;
                break;
            }
        }
        if (!found) throw StructuralError("no primitive polynomial found (unexpected)");
        t.gen_ = p; // the class of x
    }

    // exp/log from the generator
    t.exp_.assign(static_cast<size_t>(spec.q - 1), 0);
    t.log_.assign(static_cast<size_t>(spec.q), -1);
    if (k == 1) {
        long long acc = 1;
        for (int i = 0; i < spec.q - 1; ++i) {
            t.exp_[static_cast<size_t>(i)] = static_cast<int>(acc);
            t.log_[static_cast<size_t>(acc)] = i;
            acc = acc * t.gen_ % p;
        }
    } else {
        PolyCtx ctx{p, k, t.modulus_};
        std::vector<int> x(static_cast<size_t>(k), 0);
        x[1] = 1;
        std::vector<int> acc(static_cast<size_t>(k), 0);
        acc[0] = 1;
        for (int i = 0; i < spec.q - 1; ++i) {
            int e = encode_poly(acc, p);
            t.exp_[static_cast<size_t>(i)] = e;
            if (t.log_[static_cast<size_t>(e)] != -1)
                throw StructuralError("generator order below q-1 (modulus not primitive?)");
            t.log_[static_cast<size_t>(e)] = i;
            acc = ctx.mul(acc, x);
        }
        if (!is_one(acc)) throw StructuralError("exp table period mismatch");
    }

    // Tr(a) = a + a^p + ... + a^{p^{k-1}}, computed by repeated Frobenius
    t.trace_.assign(static_cast<size_t>(spec.q), 0);
    for (int a = 0; a < spec.q; ++a) {
        int s = 0, f = a;
        for (int j = 0; j < k; ++j) {
            s = t.add_slow(s, f);
            f = t.pow(f, p);
        }
        if (s >= p) throw StructuralError("trace left the prime field");
        t.trace_[static_cast<size_t>(a)] = s;
    }

    if (spec.q <= 512) {
        t.dense_ = true;
        size_t n = static_cast<size_t>(spec.q);
        t.add_tab_.resize(n * n);
        t.mul_tab_.resize(n * n);
        t.neg_tab_.resize(n);
        t.inv_tab_.assign(n, 0);
        for (int a = 0; a < spec.q; ++a) {
            for (int b = 0; b < spec.q; ++b) {
                int s = t.add_slow(a, b);
                t.add_tab_[static_cast<size_t>(a) * n + static_cast<size_t>(b)] = s;
                int m = 0;
                if (a != 0 && b != 0)
                    m = t.exp_[static_cast<size_t>((t.log_[static_cast<size_t>(a)] + t.log_[static_cast<size_t>(b)]) %
                                                   (spec.q - 1))];
                t.mul_tab_[static_cast<size_t>(a) * n + static_cast<size_t>(b)] = m;
            }
        }
        for (int a = 0; a < spec.q; ++a) {
            t.dense_ = false;
            t.neg_tab_[static_cast<size_t>(a)] = t.neg(a);
            if (a != 0) t.inv_tab_[static_cast<size_t>(a)] = t.inv(a);
            t.dense_ = true;
        }
    }
    return t;
}

std::complex<double> root_of_unity(long long n, long long m) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(((m % n) + n) % n) / static_cast<double>(n);
    return {std::cos(ang), std::sin(ang)};
}

std::complex<double> AdditiveCharacter::operator()(int x) const {
    return root_of_unity(tbl_->p(), tbl_->trace(tbl_->mul(a_, x)));
}

MultiplicativeCharacter::MultiplicativeCharacter(const FieldTable& tbl, int j) : tbl_(&tbl), j_(j) {
    if (j < 0 || j >= tbl.q() - 1)
        throw StructuralError("multiplicative character index out of range [0, q-1)");
}

std::complex<double> MultiplicativeCharacter::operator()(int x) const {
    if (x == 0) throw StructuralError("multiplicative character evaluated at 0");
    return root_of_unity(tbl_->q() - 1, static_cast<long long>(j_) * tbl_->log(x));
}

FieldEmbedding::FieldEmbedding(const FieldTable& small, const FieldTable& big) : small_(&small), big_(&big) {
    if (big.p() != small.p() || big.k() != 2 * small.k())
        throw StructuralError("field embedding requires the (p, 2k) tower");
    const int p = small.p(), k = small.k();
    // image of the basis element x: smallest root of small's modulus in big
    int root = -1;
    for (int r = 0; r < big.q(); ++r) {
        int val = 0;
        for (int i = k; i >= 0; --i) val = big.add(big.mul(val, r), small.modulus()[static_cast<size_t>(i)] % p);
        if (val == 0) { root = r; break; }
    }
    if (root < 0) throw StructuralError("modulus has no root in the quadratic extension");
    map_.assign(static_cast<size_t>(small.q()), 0);
    for (int a = 0; a < small.q(); ++a) {
        int img = 0, aa = a;
        int rp = 1; // root^i
        for (int i = 0; i < k; ++i) {
            img = big.add(img, big.mul(aa % p, rp));
            rp = big.mul(rp, root);
            aa /= p;
        }
        map_[static_cast<size_t>(a)] = img;
    }
    // ring homomorphism sanity on a sample
    for (int a = 0; a < std::min(small.q(), 16); ++a)
        for (int b = 0; b < std::min(small.q(), 16); ++b) {
            if (map_[static_cast<size_t>(small.add(a, b))] != big.add(map_[static_cast<size_t>(a)], map_[static_cast<size_t>(b)]) ||
                map_[static_cast<size_t>(small.mul(a, b))] != big.mul(map_[static_cast<size_t>(a)], map_[static_cast<size_t>(b)]))
                throw StructuralError("field embedding is not a ring homomorphism");
        }
}

int FieldEmbedding::preimage(int b) const {
    for (int a = 0; a < small_->q(); ++a)
        if (map_[static_cast<size_t>(a)] == b) return a;
    return -1;
}

} // namespace genrest

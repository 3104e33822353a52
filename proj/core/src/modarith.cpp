#include "genrest/modarith.hpp"

#include <algorithm>

#include "genrest/errors.hpp"

namespace genrest {

uint64_t SplitMix64::next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t m) {
    unsigned __int128 acc = 1, b = base % m;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<uint64_t>(acc);
}

uint64_t mod_inv(uint64_t a, uint64_t p) {
    if (a % p == 0) throw StructuralError("modular inverse of 0");
    return mod_pow(a % p, p - 2, p);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t smallest_admissible_prime(uint64_t e, uint64_t lower) {
    for (uint64_t l = e + 1;; l += e) {
        if (l > (1ULL << 31)) return 0;
        if (l > lower && is_prime_u64(l)) return l;
    }
}

uint64_t primitive_root_mod(uint64_t p) {
    std::vector<uint64_t> fac;
    uint64_t n = p - 1;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fac.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fac.push_back(n);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t r : fac)
            if (mod_pow(g, (p - 1) / r, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw StructuralError("no primitive root (modulus not prime?)");
}

namespace {

using Poly = std::vector<uint64_t>; // ascending coefficients

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_monic(Poly f, uint64_t l) {
    trim(f);
    if (f.empty()) return f;
    uint64_t inv = mod_inv(f.back(), l);
    for (auto& c : f) c = static_cast<uint64_t>(static_cast<unsigned __int128>(c) * inv % l);
    return f;
}

// remainder of a mod b (b monic)
Poly poly_rem(Poly a, const Poly& b, uint64_t l) {
    trim(a);
    while (deg(a) >= deg(b) && !a.empty()) {
        uint64_t c = a.back();
        int shift = deg(a) - deg(b);
        if (c != 0)
            for (int i = 0; i <= deg(b); ++i) {
                uint64_t sub = static_cast<uint64_t>(static_cast<unsigned __int128>(c) * b[static_cast<size_t>(i)] % l);
                uint64_t& tgt = a[static_cast<size_t>(i + shift)];
                tgt = (tgt + l - sub) % l;
            }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_quot(Poly a, const Poly& b, uint64_t l) {
    trim(a);
    if (deg(a) < deg(b)) return {};
    Poly q(static_cast<size_t>(deg(a) - deg(b) + 1), 0);
    while (deg(a) >= deg(b) && !a.empty()) {
        uint64_t c = a.back();
        int shift = deg(a) - deg(b);
        q[static_cast<size_t>(shift)] = c;
        if (c != 0)
            for (int i = 0; i <= deg(b); ++i) {
                uint64_t sub = static_cast<uint64_t>(static_cast<unsigned __int128>(c) * b[static_cast<size_t>(i)] % l);
                uint64_t& tgt = a[static_cast<size_t>(i + shift)];
                tgt = (tgt + l - sub) % l;
            }
        a.pop_back();
        trim(a);
    }
    return q;
}

Poly poly_gcd(Poly a, Poly b, uint64_t l) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, poly_monic(b, l), l);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a, l);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t l) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<uint64_t>(
                (prod[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % l);
    }
    return poly_rem(std::move(prod), f, l);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t l) {
    Poly acc{1};
    base = poly_rem(std::move(base), f, l);
    while (e > 0) {
        if (e & 1) acc = poly_mulmod(acc, base, f, l);
        base = poly_mulmod(base, base, f, l);
        e >>= 1;
    }
    return acc;
}

Poly poly_derivative(const Poly& f, uint64_t l) {
    Poly d;
    for (size_t i = 1; i < f.size(); ++i)
        d.push_back(static_cast<uint64_t>(static_cast<unsigned __int128>(f[i]) * (i % l) % l));
    trim(d);
    return d;
}

// f: monic, squarefree, splits into linear factors over F_l
void collect_roots(const Poly& f, uint64_t l, SplitMix64& rng, std::vector<uint64_t>& out) {
    if (deg(f) <= 0) return;
    if (deg(f) == 1) {
        out.push_back((l - f[0] % l) % l);
        return;
    }
    for (int attempt = 0; attempt < 256; ++attempt) {
        uint64_t a = rng.below(l);
        // gcd(f, (x+a)^((l-1)/2) - 1) splits off roots r with r+a a QR
        Poly base{a % l, 1};
        Poly p = poly_powmod(base, (l - 1) / 2, f, l);
        if (p.empty())
            p = {l - 1};
        else
            p[0] = (p[0] + l - 1) % l;
        trim(p);
        Poly g = poly_gcd(f, p, l);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            Poly h = poly_quot(f, g, l);
            collect_roots(g, l, rng, out);
            collect_roots(poly_monic(h, l), l, rng, out);
            return;
        }
    }
    throw StructuralError("root splitting failed to converge");
}

} // namespace

int squarefree_degree_mod(std::vector<uint64_t> f, uint64_t l) {
    Poly fm = poly_monic(std::move(f), l);
    Poly d = poly_derivative(fm, l);
    if (d.empty()) return 0; // f is a p-th power; no squarefree content of interest
    Poly g = poly_gcd(fm, d, l);
    return deg(fm) - deg(g);
}

std::vector<uint64_t> distinct_roots_mod(std::vector<uint64_t> f, uint64_t l, SplitMix64& rng) {
    Poly fm = poly_monic(std::move(f), l);
    Poly d = poly_derivative(fm, l);
    Poly sq = d.empty() ? fm : poly_quot(fm, poly_gcd(fm, d, l), l);
    sq = poly_monic(std::move(sq), l);
    // keep only the part splitting into linear factors
    Poly xl = poly_powmod(Poly{0, 1}, l, sq, l); // x^l mod sq
    if (xl.size() < 2) xl.resize(2, 0);
    xl[1] = (xl[1] + l - 1) % l; // x^l - x
    trim(xl);
    Poly lin = xl.empty() ? sq : poly_gcd(sq, xl, l);
    std::vector<uint64_t> out;
    collect_roots(lin, l, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> charpoly_mod(ModMatrix m, uint64_t l) {
    const int n = static_cast<int>(m.size());
    // similarity reduction to upper Hessenberg form
    for (int col = 0; col + 2 < n; ++col) {
        int piv = -1;
        for (int r = col + 1; r < n; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != col + 1) {
            std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col + 1)]);
            for (int r = 0; r < n; ++r)
                std::swap(m[static_cast<size_t>(r)][static_cast<size_t>(piv)],
                          m[static_cast<size_t>(r)][static_cast<size_t>(col + 1)]);
        }
        uint64_t inv = mod_inv(m[static_cast<size_t>(col + 1)][static_cast<size_t>(col)], l);
        for (int r = col + 2; r < n; ++r) {
            uint64_t f = static_cast<uint64_t>(
                static_cast<unsigned __int128>(m[static_cast<size_t>(r)][static_cast<size_t>(col)]) * inv % l);
            if (f == 0) continue;
            for (int c = 0; c < n; ++c) {
                uint64_t sub = static_cast<uint64_t>(
                    static_cast<unsigned __int128>(f) * m[static_cast<size_t>(col + 1)][static_cast<size_t>(c)] % l);
                uint64_t& tgt = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
                tgt = (tgt + l - sub) % l;
            }
            for (int r2 = 0; r2 < n; ++r2) {
                uint64_t addv = static_cast<uint64_t>(
                    static_cast<unsigned __int128>(f) * m[static_cast<size_t>(r2)][static_cast<size_t>(r)] % l);
                uint64_t& tgt = m[static_cast<size_t>(r2)][static_cast<size_t>(col + 1)];
                tgt = (tgt + addv) % l;
            }
        }
    }
    // char polys of leading principal minors of the Hessenberg form
    std::vector<Poly> p(static_cast<size_t>(n + 1));
    p[0] = {1};
    for (int k = 1; k <= n; ++k) {
        // (x - H[k-1][k-1]) * p[k-1]
        Poly t(p[static_cast<size_t>(k - 1)].size() + 1, 0);
        uint64_t hkk = m[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)] % l;
        for (size_t i = 0; i < p[static_cast<size_t>(k - 1)].size(); ++i) {
            uint64_t c = p[static_cast<size_t>(k - 1)][i];
            t[i + 1] = (t[i + 1] + c) % l;
            t[i] = static_cast<uint64_t>((t[i] + l - static_cast<unsigned __int128>(hkk) * c % l) % l);
        }
        // minus the subdiagonal contributions
        uint64_t subprod = 1;
        for (int i = 1; i < k; ++i) {
            subprod = static_cast<uint64_t>(
                static_cast<unsigned __int128>(subprod) *
                m[static_cast<size_t>(k - i)][static_cast<size_t>(k - i - 1)] % l);
            if (subprod == 0) break;
            uint64_t coef = static_cast<uint64_t>(
                static_cast<unsigned __int128>(subprod) *
                m[static_cast<size_t>(k - 1 - i)][static_cast<size_t>(k - 1)] % l);
            if (coef == 0) continue;
            const Poly& pk = p[static_cast<size_t>(k - 1 - i)];
            for (size_t j = 0; j < pk.size(); ++j) {
                uint64_t sub = static_cast<uint64_t>(static_cast<unsigned __int128>(coef) * pk[j] % l);
                t[j] = (t[j] + l - sub) % l;
            }
        }
        p[static_cast<size_t>(k)] = std::move(t);
    }
    return p[static_cast<size_t>(n)];
}

std::vector<std::vector<uint64_t>> nullspace_mod(ModMatrix m, uint64_t l) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(r)]);
        uint64_t inv = mod_inv(m[static_cast<size_t>(r)][static_cast<size_t>(c)], l);
        for (int j = 0; j < cols; ++j)
            m[static_cast<size_t>(r)][static_cast<size_t>(j)] = static_cast<uint64_t>(
                static_cast<unsigned __int128>(m[static_cast<size_t>(r)][static_cast<size_t>(j)]) * inv % l);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint64_t f = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j) {
                uint64_t sub = static_cast<uint64_t>(
                    static_cast<unsigned __int128>(f) * m[static_cast<size_t>(r)][static_cast<size_t>(j)] % l);
                uint64_t& tgt = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                tgt = (tgt + l - sub) % l;
            }
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (int c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<std::vector<uint64_t>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<uint64_t> v(static_cast<size_t>(cols), 0);
        v[static_cast<size_t>(free)] = 1;
        for (size_t pr = 0; pr < pivot_col_of_row.size(); ++pr) {
            uint64_t coef = m[pr][static_cast<size_t>(free)];
            v[static_cast<size_t>(pivot_col_of_row[pr])] = (l - coef % l) % l;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace genrest

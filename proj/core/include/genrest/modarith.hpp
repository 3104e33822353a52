#pragma once

#include <cstdint>
#include <vector>

namespace genrest {

/// Deterministic 64-bit generator (splitmix64); the table algorithms seed it
/// with a fixed documented constant so reruns are bit-identical.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next();
    /// uniform in [0, n)
    uint64_t below(uint64_t n) { return next() % n; }

private:
    uint64_t state_;
};

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t m);
uint64_t mod_inv(uint64_t a, uint64_t p); // p prime
bool is_prime_u64(uint64_t n);

/// Smallest prime l with l ≡ 1 (mod e) and l > lower, or 0 if none below 2^31.
uint64_t smallest_admissible_prime(uint64_t e, uint64_t lower);

/// Generator of the multiplicative group mod p.
uint64_t primitive_root_mod(uint64_t p);

/// Dense square matrix over F_l.
using ModMatrix = std::vector<std::vector<uint64_t>>;

/// Characteristic polynomial det(xI - M) mod l, ascending coefficients,
/// computed by Hessenberg reduction.
std::vector<uint64_t> charpoly_mod(ModMatrix m, uint64_t l);

/// Distinct roots in F_l of the squarefree part of f (f need not be
/// squarefree); ascending. Requires the squarefree part to split completely,
/// which holds for the class-algebra polynomials this backs.
std::vector<uint64_t> distinct_roots_mod(std::vector<uint64_t> f, uint64_t l, SplitMix64& rng);

/// Degree of the squarefree part of f mod l.
int squarefree_degree_mod(std::vector<uint64_t> f, uint64_t l);

/// Basis of the nullspace of m over F_l.
std::vector<std::vector<uint64_t>> nullspace_mod(ModMatrix m, uint64_t l);

} // namespace genrest

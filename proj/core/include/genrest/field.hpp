#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace genrest {

/// Parameters of a finite field F_q, q = p^k.
struct FieldSpec {
    int p = 0; // characteristic, prime
    int k = 0; // extension degree over F_p
    int q = 0; // p^k

    static FieldSpec make(int p, int k);
};

/// Exact arithmetic in F_q with elements encoded as indices in [0, q).
///
/// The index encodes the coefficients of the polynomial-basis representation
/// over F_p in base p: index = c_0 + c_1*p + ... + c_{k-1}*p^{k-1} for the
/// element c_0 + c_1*x + ... + c_{k-1}*x^{k-1} mod m(x). Index 0 is the
/// additive identity and index 1 the multiplicative identity.
///
/// For k >= 2 the modulus m(x) is the monic primitive polynomial of degree k
/// with the smallest base-p coefficient encoding, and the multiplicative
/// generator is the class of x. For k = 1 the generator is the smallest
/// primitive root mod p.
///
/// Immutable after construction; safe for concurrent reads.
class FieldTable {
public:
    static constexpr int kMaxQ = 1 << 16;

    const FieldSpec& spec() const { return spec_; }
    int p() const { return spec_.p; }
    int k() const { return spec_.k; }
    int q() const { return spec_.q; }

    /// Monic modulus polynomial, coefficient i of x^i, size k+1.
    const std::vector<int>& modulus() const { return modulus_; }

    /// Fixed multiplicative generator g.
    int generator() const { return gen_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;            // error on 0
    int pow(int a, long long e) const;

    /// Discrete log base g; defined for nonzero a, log(1) = 0.
    int log(int a) const;
    /// g^i for 0 <= i < q-1; periodic in i.
    int exp(long long i) const;

    /// Trace to the prime field, returned as an integer in [0, p).
    int trace(int a) const;

    /// True if a is in the prime subfield (a constant polynomial).
    bool in_prime_field(int a) const { return a < spec_.p; }

private:
    friend FieldTable field_build(const FieldSpec&);

    FieldSpec spec_;
    std::vector<int> modulus_;
    int gen_ = 0;
    std::vector<int> exp_;   // size q-1, exp_[i] = g^i
    std::vector<int> log_;   // size q, log_[0] = -1
    std::vector<int> trace_; // size q
    // dense tables, only populated for small q
    std::vector<int> add_tab_, mul_tab_, neg_tab_, inv_tab_;
    bool dense_ = false;

    int add_slow(int a, int b) const;
};

/// Builds the field table. Errors: p not prime, k < 1, q out of bounds.
FieldTable field_build(const FieldSpec& spec);

/// Additive character x -> zeta_p^{Tr(a*x)} with zeta_p = exp(2*pi*i/p).
/// a = 0 gives the trivial character; a -> psi_a is a bijection onto the
/// additive character group.
class AdditiveCharacter {
public:
    AdditiveCharacter(const FieldTable& tbl, int a) : tbl_(&tbl), a_(a) {}
    std::complex<double> operator()(int x) const;
    int parameter() const { return a_; }

private:
    const FieldTable* tbl_;
    int a_;
};

/// Multiplicative character x -> zeta_{q-1}^{j*log(x)} on nonzero elements.
/// Evaluation at 0 is an error. j = 0 is the trivial character.
class MultiplicativeCharacter {
public:
    MultiplicativeCharacter(const FieldTable& tbl, int j);
    std::complex<double> operator()(int x) const;
    int parameter() const { return j_; }

private:
    const FieldTable* tbl_;
    int j_;
};

/// exp(2*pi*i*m/n)
std::complex<double> root_of_unity(long long n, long long m);

/// Ring embedding F_q -> F_Q where Q = q^2 and `big` is the field built from
/// (p, 2k). Deterministic: the polynomial-basis generator of `small` is sent
/// to its smallest-index root in `big`.
class FieldEmbedding {
public:
    FieldEmbedding(const FieldTable& small, const FieldTable& big);
    int operator()(int a) const { return map_[static_cast<size_t>(a)]; }
    /// Preimage; -1 when the element is not in the embedded subfield.
    int preimage(int b) const;
    const FieldTable& small() const { return *small_; }
    const FieldTable& big() const { return *big_; }

private:
    const FieldTable* small_;
    const FieldTable* big_;
    std::vector<int> map_;
};

} // namespace genrest

#pragma once

#include <array>
#include <cstdint>

#include "genrest/field.hpp"

namespace genrest {

/// Dense n x n matrix over F_q, n <= 4, entries stored as field indices.
/// Packs injectively into a 64-bit key via base-q positional encoding of the
/// row-major entries, which gives constant-time hashing and a reproducible
/// total order on group elements.
struct MatQ {
    int n = 0;
    std::array<uint8_t, 16> e{}; // row-major; entries beyond n*n stay 0

    int at(int i, int j) const { return e[static_cast<size_t>(i * n + j)]; }
    void set(int i, int j, int v) { e[static_cast<size_t>(i * n + j)] = static_cast<uint8_t>(v); }

    static MatQ identity(int n);
    static MatQ zero(int n);

    bool operator==(const MatQ& o) const { return n == o.n && e == o.e; }
};

uint64_t mat_pack(const MatQ& m, int q);
MatQ mat_unpack(uint64_t key, int n, int q);

MatQ mat_mul(const FieldTable& F, const MatQ& a, const MatQ& b);
MatQ mat_transpose(const MatQ& a);
int mat_det(const FieldTable& F, const MatQ& a);
/// Inverse by Gauss-Jordan elimination; error if singular.
MatQ mat_inv(const FieldTable& F, const MatQ& a);

} // namespace genrest

#include "genrest/matq.hpp"

#include "genrest/errors.hpp"

namespace genrest {

MatQ MatQ::identity(int n) {
    MatQ m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatQ MatQ::zero(int n) {
    MatQ m;
    m.n = n;
    return m;
}

uint64_t mat_pack(const MatQ& m, int q) {
    uint64_t key = 0;
    for (int pos = m.n * m.n - 1; pos >= 0; --pos)
        key = key * static_cast<uint64_t>(q) + m.e[static_cast<size_t>(pos)];
    return key;
}

MatQ mat_unpack(uint64_t key, int n, int q) {
    MatQ m;
    m.n = n;
    for (int pos = 0; pos < n * n; ++pos) {
        m.e[static_cast<size_t>(pos)] = static_cast<uint8_t>(key % static_cast<uint64_t>(q));
        key /= static_cast<uint64_t>(q);
    }
    return m;
}

MatQ mat_mul(const FieldTable& F, const MatQ& a, const MatQ& b) {
    const int n = a.n;
    MatQ c = MatQ::zero(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                int bkj = b.at(k, j);
                if (bkj == 0) continue;
                c.set(i, j, F.add(c.at(i, j), F.mul(aik, bkj)));
            }
        }
    return c;
}

MatQ mat_transpose(const MatQ& a) {
    MatQ t = MatQ::zero(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) t.set(j, i, a.at(i, j));
    return t;
}

int mat_det(const FieldTable& F, const MatQ& a) {
    // Gaussian elimination; n <= 4 so no pivot-scaling niceties needed.
    MatQ m = a;
    const int n = m.n;
    int det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                int t = m.at(col, j);
                m.set(col, j, m.at(piv, j));
                m.set(piv, j, t);
            }
            det = F.neg(det);
        }
        int d = m.at(col, col);
        det = F.mul(det, d);
        int dinv = F.inv(d);
        for (int r = col + 1; r < n; ++r) {
            int f = F.mul(m.at(r, col), dinv);
            if (f == 0) continue;
            for (int j = col; j < n; ++j) m.set(r, j, F.sub(m.at(r, j), F.mul(f, m.at(col, j))));
        }
    }
    return det;
}

MatQ mat_inv(const FieldTable& F, const MatQ& a) {
    const int n = a.n;
    MatQ m = a;
    MatQ inv = MatQ::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) throw StructuralError("matrix inverse of a singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                int t = m.at(col, j);
                m.set(col, j, m.at(piv, j));
                m.set(piv, j, t);
                t = inv.at(col, j);
                inv.set(col, j, inv.at(piv, j));
                inv.set(piv, j, t);
            }
        int dinv = F.inv(m.at(col, col));
        for (int j = 0; j < n; ++j) {
            m.set(col, j, F.mul(m.at(col, j), dinv));
            inv.set(col, j, F.mul(inv.at(col, j), dinv));
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            int f = m.at(r, col);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                m.set(r, j, F.sub(m.at(r, j), F.mul(f, m.at(col, j))));
                inv.set(r, j, F.sub(inv.at(r, j), F.mul(f, inv.at(col, j))));
            }
        }
    }
    return inv;
}

} // namespace genrest

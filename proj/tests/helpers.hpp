#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "deltatopo/delta_set.hpp"
#include "deltatopo/snf.hpp"

namespace testutil {

using delta::Int;
using delta::Matrix;
using delta::RingSpec;

using Rng = std::mt19937;

inline long rand_range(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Matrix random_int_matrix(Rng& rng, long rows, long cols, long lo = -4, long hi = 4) {
    Matrix m(RingSpec::integers(), rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) {
            delta::RingElem e;
            e.c = {Int(rand_range(rng, lo, hi))};
            m.set(i, j, std::move(e));
        }
    return m;
}

// Exact determinant by fraction-free (Bareiss) elimination; an oracle
// independent of the SNF code path.
inline Int bareiss_det(const Matrix& m) {
    long n = m.rows();
    if (n != m.cols()) throw std::runtime_error("det of non-square matrix");
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) a[i][j] = m.at(i, j).c[0];
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            long swap = -1;
            for (long i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

inline bool is_unimodular(const Matrix& m) {
    Int d = bareiss_det(m);
    return d == 1 || d == -1;
}

// Determinantal-divisor oracle for the Smith form: the k-th diagonal entry
// is gcd(k x k minors) / gcd((k-1) x (k-1) minors). Exponential, only for
// small matrices.
inline std::vector<Int> minors_gcd_divisors(const Matrix& m) {
    long rows = m.rows(), cols = m.cols();
    long k_max = std::min(rows, cols);
    std::vector<Int> gcds(k_max + 1, 0);
    gcds[0] = 1;
    // enumerate k-subsets of rows and cols
    auto subsets = [](long n, long k) {
        std::vector<std::vector<long>> out;
        if (k > n) return out;
        std::vector<long> c(k);
        for (long i = 0; i < k; ++i) c[i] = i;
        for (;;) {
            out.push_back(c);
            long i = k - 1;
            while (i >= 0 && c[i] == n - (k - i)) --i;
            if (i < 0) break;
            ++c[i];
            for (long j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        }
        return out;
    };
    for (long k = 1; k <= k_max; ++k) {
        Int g = 0;
        for (const auto& rs : subsets(rows, k))
            for (const auto& cs : subsets(cols, k)) {
                Matrix sub(RingSpec::integers(), k, k);
                for (long i = 0; i < k; ++i)
                    for (long j = 0; j < k; ++j) sub.set(i, j, m.at(rs[i], cs[j]));
                Int d = bareiss_det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            }
        gcds[k] = g;
        if (g == 0) break;
    }
    std::vector<Int> out;
    for (long k = 1; k <= k_max; ++k) {
        if (gcds[k] == 0) break;
        out.push_back(gcds[k] / gcds[k - 1]);
    }
    return out;
}

// (P, P^{-1}) from a random product of elementary row operations.
inline std::pair<Matrix, Matrix> random_unimodular_pair(Rng& rng, long n) {
    Matrix p = Matrix::identity(RingSpec::integers(), n);
    Matrix pinv = Matrix::identity(RingSpec::integers(), n);
    long ops = n == 0 ? 0 : 2 * n + 2;
    for (long t = 0; t < ops; ++t) {
        long i = rand_range(rng, 0, n - 1), j = rand_range(rng, 0, n - 1);
        long f = rand_range(rng, -2, 2);
        if (i == j) continue;
        Matrix e = Matrix::identity(RingSpec::integers(), n);
        Matrix einv = Matrix::identity(RingSpec::integers(), n);
        delta::RingElem fe, fneg;
        fe.c = {Int(f)};
        fneg.c = {Int(-f)};
        e.set(i, j, fe);
        einv.set(i, j, fneg);
        p = e * p;
        pinv = pinv * einv;
    }
    return {p, pinv};
}

// Random face-closed vertex-subset complex on up to nv vertices.
inline delta::DeltaSet random_simplicial_complex(Rng& rng, int nv_max = 5, int top_cells = 3) {
    int nv = static_cast<int>(rand_range(rng, 1, nv_max));
    std::vector<std::string> verts;
    for (int i = 0; i < nv; ++i) verts.push_back(std::to_string(i));
    std::vector<std::vector<std::string>> simplices;
    std::set<std::vector<int>> seen;
    auto add_with_faces = [&](std::vector<int> s) {
        // all nonempty subsets
        int m = static_cast<int>(s.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> sub;
            for (int b = 0; b < m; ++b)
                if (mask & (1 << b)) sub.push_back(s[b]);
            if (seen.insert(sub).second) {
                std::vector<std::string> lbl;
                for (int v : sub) lbl.push_back(verts[v]);
                simplices.push_back(std::move(lbl));
            }
        }
    };
    int cells = static_cast<int>(rand_range(rng, 1, top_cells));
    for (int c = 0; c < cells; ++c) {
        int dim = static_cast<int>(rand_range(rng, 0, std::min(nv - 1, 3)));
        std::vector<int> pool(nv);
        for (int i = 0; i < nv; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(dim + 1);
        std::sort(pool.begin(), pool.end());
        add_with_faces(pool);
    }
    return delta::from_simplicial_complex(verts, simplices);
}

}  // namespace testutil

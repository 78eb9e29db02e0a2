#include "deltatopo/snf.hpp"

namespace delta {

namespace {

struct Work {
    long m, n;
    std::vector<std::vector<Int>> d, u, v;

    void row_swap(long i, long j) {
        if (i == j) return;
        std::swap(d[i], d[j]);
        std::swap(u[i], u[j]);
    }
    void col_swap(long i, long j) {
        if (i == j) return;
        for (long r = 0; r < m; ++r) std::swap(d[r][i], d[r][j]);
        for (long r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
    }
    // row i += f * row j
    void row_add(long i, long j, const Int& f) {
        for (long c = 0; c < n; ++c) d[i][c] += f * d[j][c];
        for (long c = 0; c < m; ++c) u[i][c] += f * u[j][c];
    }
    // col i += f * col j
    void col_add(long i, long j, const Int& f) {
        for (long r = 0; r < m; ++r) d[r][i] += f * d[r][j];
        for (long r = 0; r < n; ++r) v[r][i] += f * v[r][j];
    }
    void row_negate(long i) {
        for (long c = 0; c < n; ++c) d[i][c] = -d[i][c];
        for (long c = 0; c < m; ++c) u[i][c] = -u[i][c];
    }

    // Smallest nonzero |entry| of d[s:,s:]; ties broken by position.
    bool find_pivot(long s, long& pi, long& pj) const {
        bool found = false;
        Int best;
        for (long i = s; i < m; ++i)
            for (long j = s; j < n; ++j) {
                if (d[i][j] == 0) continue;
                Int a = abs(d[i][j]);
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    bool cross_clear(long s) const {
        for (long i = s + 1; i < m; ++i)
            if (d[i][s] != 0) return false;
        for (long j = s + 1; j < n; ++j)
            if (d[s][j] != 0) return false;
        return true;
    }
};

}  // namespace

SnfResult smith_normal_form(const Matrix& mat) {
    if (mat.ring() != RingSpec::integers())
        throw DomainError("smith_normal_form requires integer entries, got " + mat.ring().describe());

    Work w;
    w.m = mat.rows();
    w.n = mat.cols();
    w.d.assign(w.m, std::vector<Int>(w.n, 0));
    for (long i = 0; i < w.m; ++i)
        for (long j = 0; j < w.n; ++j) w.d[i][j] = mat.at(i, j).c[0];
    w.u.assign(w.m, std::vector<Int>(w.m, 0));
    w.v.assign(w.n, std::vector<Int>(w.n, 0));
    for (long i = 0; i < w.m; ++i) w.u[i][i] = 1;
    for (long j = 0; j < w.n; ++j) w.v[j][j] = 1;

    long steps = std::min(w.m, w.n);
    long rank = 0;
    for (long s = 0; s < steps; ++s) {
        long pi = s, pj = s;
        if (!w.find_pivot(s, pi, pj)) break;  // trailing block is zero
        w.row_swap(s, pi);
        w.col_swap(s, pj);

        for (;;) {
            // Kill the cross through (s,s). Each pass strictly shrinks the
            // pivot or clears an entry, so this terminates.
            for (long i = s + 1; i < w.m; ++i) {
                if (w.d[i][s] == 0) continue;
                Int q = w.d[i][s] / w.d[s][s];
                if (q != 0) w.row_add(i, s, -q);
            }
            for (long j = s + 1; j < w.n; ++j) {
                if (w.d[s][j] == 0) continue;
                Int q = w.d[s][j] / w.d[s][s];
                if (q != 0) w.col_add(j, s, -q);
            }
            if (!w.cross_clear(s)) {
                long qi = s, qj = s;
                w.find_pivot(s, qi, qj);
                w.row_swap(s, qi);
                w.col_swap(s, qj);
                continue;
            }
            // Cross is clear; enforce divisibility into the trailing block.
            bool divides_all = true;
            for (long i = s + 1; i < w.m && divides_all; ++i)
                for (long j = s + 1; j < w.n; ++j)
                    if (w.d[i][j] % w.d[s][s] != 0) {
                        w.row_add(s, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (w.d[s][s] < 0) w.row_negate(s);
        ++rank;
    }

    SnfResult res;
    res.rank = rank;
    res.u = Matrix(RingSpec::integers(), w.m, w.m);
    res.v = Matrix(RingSpec::integers(), w.n, w.n);
    res.d = Matrix(RingSpec::integers(), w.m, w.n);
    auto put = [](Matrix& out, long i, long j, const Int& val) {
        RingElem e;
        e.c = {val};
        out.set(i, j, std::move(e));
    };
    for (long i = 0; i < w.m; ++i)
        for (long j = 0; j < w.m; ++j) put(res.u, i, j, w.u[i][j]);
    for (long i = 0; i < w.n; ++i)
        for (long j = 0; j < w.n; ++j) put(res.v, i, j, w.v[i][j]);
    for (long i = 0; i < w.m; ++i)
        for (long j = 0; j < w.n; ++j) put(res.d, i, j, w.d[i][j]);
    return res;
}

std::vector<Int> SnfResult::divisors() const {
    std::vector<Int> out;
    long k = std::min(d.rows(), d.cols());
    for (long i = 0; i < k; ++i) {
        const Int& v = d.at(i, i).c[0];
        if (v == 0) break;
        out.push_back(v);
    }
    return out;
}

long snf_rank(const Matrix& m) { return smith_normal_form(m).rank; }

bool snf_in_image(const Matrix& m, const std::vector<Int>& b) {
    if (static_cast<long>(b.size()) != m.rows()) throw DomainError("snf_in_image: size mismatch");
    SnfResult s = smith_normal_form(m);
    // m x = b  <=>  d y = u b with x = v y
    std::vector<Int> ub(m.rows(), 0);
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.rows(); ++j) ub[i] += s.u.at(i, j).c[0] * b[j];
    for (long i = 0; i < m.rows(); ++i) {
        Int di = (i < std::min(m.rows(), m.cols())) ? s.d.at(i, i).c[0] : Int(0);
        if (di == 0) {
            if (ub[i] != 0) return false;
        } else if (ub[i] % di != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace delta

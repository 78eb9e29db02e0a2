#include "deltatopo/chain_complex.hpp"

#include <algorithm>
#include <sstream>

namespace delta {

std::string GradedGroup::describe() const {
    if (groups.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, g] : groups) {
        if (!first) os << ", ";
        first = false;
        os << "H_" << n << " = ";
        bool any = false;
        if (g.free_rank > 0) {
            os << "Z";
            if (g.free_rank > 1) os << "^" << g.free_rank;
            any = true;
        }
        for (const auto& t : g.torsion) {
            if (any) os << " + ";
            os << "Z/" << t.get_str();
            any = true;
        }
    }
    return os.str();
}

ChainComplex::ChainComplex(RingSpec ring, int lo, std::vector<long> ranks)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)) {}

long ChainComplex::rank(int n) const {
    if (ranks_.empty() || n < lo_ || n > hi()) return 0;
    return ranks_[n - lo_];
}

long ChainComplex::total_rank() const {
    long t = 0;
    for (long r : ranks_) t += r;
    return t;
}

Matrix ChainComplex::diff(int n) const {
    auto it = diffs_.find(n);
    if (it != diffs_.end()) return it->second;
    return Matrix::zero(ring_, rank(n - 1), rank(n));
}

void ChainComplex::set_diff(int n, Matrix d) {
    if (d.rows() != rank(n - 1) || d.cols() != rank(n))
        throw DomainError("differential d_" + std::to_string(n) + " has wrong shape");
    if (d.ring() != ring_) throw DomainError("differential ring mismatch");
    diffs_[n] = std::move(d);
}

void ChainComplex::validate() const {
    for (const auto& [n, d] : diffs_) {
        if (d.rows() != rank(n - 1) || d.cols() != rank(n))
            throw DomainError("differential d_" + std::to_string(n) + " has wrong shape");
    }
    for (int n = lo_ + 1; n <= hi(); ++n) {
        if (!(diff(n) * diff(n + 1)).is_zero())
            throw DomainError("d^2 != 0 at degree " + std::to_string(n + 1));
    }
}

bool ChainComplex::operator==(const ChainComplex& o) const {
    if (ring_ != o.ring_) return false;
    ChainComplex a = trimmed(), b = o.trimmed();
    if (a.lo_ != b.lo_ || a.ranks_ != b.ranks_) return false;
    for (int n = a.lo_; n <= a.hi() + 1; ++n)
        if (!(a.diff(n) == b.diff(n))) return false;
    return true;
}

ChainComplex ChainComplex::shifted(int k) const {
    ChainComplex r(ring_, lo_ + k, ranks_);
    for (const auto& [n, d] : diffs_) {
        Matrix m = (k % 2 == 0) ? d : d.negated();
        r.diffs_[n + k] = std::move(m);
    }
    return r;
}

ChainComplex ChainComplex::direct_sum(const ChainComplex& o) const {
    if (ring_ != o.ring_) throw DomainError("direct sum: ring mismatch");
    if (empty()) return o;
    if (o.empty()) return *this;
    int lo = std::min(lo_, o.lo_), hi2 = std::max(hi(), o.hi());
    std::vector<long> ranks;
    for (int n = lo; n <= hi2; ++n) ranks.push_back(rank(n) + o.rank(n));
    ChainComplex r(ring_, lo, std::move(ranks));
    for (int n = lo + 1; n <= hi2; ++n) {
        Matrix d(ring_, r.rank(n - 1), r.rank(n));
        d.insert_block(0, 0, diff(n));
        d.insert_block(rank(n - 1), rank(n), o.diff(n));
        r.diffs_[n] = std::move(d);
    }
    return r;
}

ChainComplex ChainComplex::trimmed() const {
    int a = lo_, b = hi();
    while (a <= b && rank(a) == 0) ++a;
    while (b >= a && rank(b) == 0) --b;
    if (a > b) return ChainComplex(ring_);
    std::vector<long> ranks;
    for (int n = a; n <= b; ++n) ranks.push_back(rank(n));
    ChainComplex r(ring_, a, std::move(ranks));
    for (int n = a + 1; n <= b; ++n) {
        Matrix d = diff(n);
        if (!d.is_zero()) r.diffs_[n] = std::move(d);
    }
    return r;
}

long ChainComplex::euler_characteristic() const {
    long chi = 0;
    for (int n = lo_; n <= hi(); ++n) chi += (n % 2 == 0 ? 1 : -1) * rank(n);
    return chi;
}

Matrix ChainMap::comp(int n) const {
    auto it = comps.find(n);
    if (it != comps.end()) return it->second;
    return Matrix::zero(source.ring(), target.rank(n), source.rank(n));
}

void ChainMap::validate() const {
    if (source.ring() != target.ring()) throw DomainError("chain map: ring mismatch");
    for (const auto& [n, m] : comps)
        if (m.rows() != target.rank(n) || m.cols() != source.rank(n))
            throw DomainError("chain map component at degree " + std::to_string(n) + " has wrong shape");
    int lo = std::min(source.lo(), target.lo());
    int hi = std::max(source.hi(), target.hi());
    for (int n = lo; n <= hi + 1; ++n)
        if (!(target.diff(n) * comp(n) == comp(n - 1) * source.diff(n)))
            throw DomainError("chain map does not commute with d at degree " + std::to_string(n));
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    ChainMap f{c, c, {}};
    for (int n = c.lo(); n <= c.hi(); ++n)
        if (c.rank(n) > 0) f.comps[n] = Matrix::identity(c.ring(), c.rank(n));
    return f;
}

long rank_over(const RingSpec& ring, const Matrix& m) {
    if (ring.kind == RingKind::Integers) return snf_rank(m);
    if (ring.kind != RingKind::PrimeField)
        throw DomainError("rank over " + ring.describe() + " is not supported");
    // Gaussian elimination mod p.
    long p = ring.p;
    long rows = m.rows(), cols = m.cols();
    std::vector<std::vector<long>> a(rows, std::vector<long>(cols, 0));
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) {
            Int r = m.at(i, j).c[0] % p;
            if (r < 0) r += p;
            a[i][j] = r.get_si();
        }
    auto inv_mod = [p](long x) {
        long r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = (r * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        return r;
    };
    long rank = 0;
    for (long col = 0; col < cols && rank < rows; ++col) {
        long piv = -1;
        for (long i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        long inv = inv_mod(a[rank][col]);
        for (long j = col; j < cols; ++j) a[rank][j] = (a[rank][j] * inv) % p;
        for (long i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            long f = a[i][col];
            for (long j = col; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

GradedGroup homology(const ChainComplex& c) {
    const RingSpec& ring = c.ring();
    if (ring.kind == RingKind::CyclicGroupRing)
        throw DomainError("homology over " + ring.describe() + " is not supported; restrict scalars first");
    GradedGroup out;
    if (c.empty()) return out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        long rn = c.rank(n);
        if (rn == 0) continue;
        GradedPiece g;
        if (ring.kind == RingKind::Integers) {
            SnfResult below = smith_normal_form(c.diff(n));
            SnfResult above = smith_normal_form(c.diff(n + 1));
            g.free_rank = rn - below.rank - above.rank;
            for (const auto& t : above.divisors())
                if (t > 1) g.torsion.push_back(t);
        } else {
            long a = rank_over(ring, c.diff(n));
            long b = rank_over(ring, c.diff(n + 1));
            g.free_rank = rn - a - b;
        }
        out.set(n, std::move(g));
    }
    return out;
}

bool is_acyclic(const ChainComplex& c) { return homology(c).is_zero(); }

ChainComplex dualize_complex(const ChainComplex& c) {
    if (c.empty()) return ChainComplex(c.ring());
    int lo = -c.hi(), hi = -c.lo();
    std::vector<long> ranks;
    for (int n = lo; n <= hi; ++n) ranks.push_back(c.rank(-n));
    ChainComplex r(c.ring(), lo, std::move(ranks));
    for (int n = lo + 1; n <= hi; ++n) {
        // d^dual_n : (C_{-n})^* -> (C_{-n+1})^* is the transpose of d_{-n+1}.
        r.set_diff(n, c.diff(-n + 1).transpose_involute());
    }
    return r;
}

ChainComplex hom_complex(const ChainComplex& c, const ChainComplex& d) {
    if (c.ring() != d.ring()) throw DomainError("hom_complex: ring mismatch");
    const RingSpec& ring = c.ring();
    if (c.empty() || d.empty()) return ChainComplex(ring);
    int lo = d.lo() - c.hi(), hi = d.hi() - c.lo();

    // Block offsets per total degree, blocks ordered by p ascending.
    auto block_offsets = [&](int n) {
        std::map<int, long> off;
        long total = 0;
        for (int p = c.lo(); p <= c.hi(); ++p) {
            int q = n + p;
            long size = c.rank(p) * d.rank(q);
            if (size > 0) off[p] = total;
            total += size;
        }
        return std::pair(off, total);
    };

    std::vector<long> ranks;
    for (int n = lo; n <= hi; ++n) ranks.push_back(block_offsets(n).second);
    ChainComplex out(ring, lo, std::move(ranks));

    for (int n = lo + 1; n <= hi; ++n) {
        auto [src_off, src_total] = block_offsets(n);
        auto [dst_off, dst_total] = block_offsets(n - 1);
        Matrix m(ring, dst_total, src_total);
        for (const auto& [p, off] : src_off) {
            int q = n + p;
            long alpha = c.rank(p), beta = d.rank(q);
            // d_D o f : lands in block (p, q-1)
            if (d.rank(q - 1) > 0 && dst_off.count(p)) {
                Matrix dd = d.diff(q);
                for (long i = 0; i < beta; ++i)
                    for (long j = 0; j < alpha; ++j)
                        for (long k = 0; k < d.rank(q - 1); ++k) {
                            const RingElem& v = dd.at(k, i);
                            if (re_is_zero(ring, v)) continue;
                            m.add_at(dst_off.at(p) + k * alpha + j, off + i * alpha + j, v);
                        }
            }
            // (-1)^q f o d_C : lands in block (p+1, q)
            if (c.rank(p + 1) > 0 && dst_off.count(p + 1)) {
                Matrix dc = c.diff(p + 1);
                bool neg = (q % 2 != 0);
                long alpha2 = c.rank(p + 1);
                for (long i = 0; i < beta; ++i)
                    for (long j = 0; j < alpha; ++j)
                        for (long j2 = 0; j2 < alpha2; ++j2) {
                            RingElem v = dc.at(j, j2);
                            if (re_is_zero(ring, v)) continue;
                            if (neg) v = re_neg(ring, v);
                            m.add_at(dst_off.at(p + 1) + i * alpha2 + j2, off + i * alpha + j, v);
                        }
            }
        }
        out.set_diff(n, std::move(m));
    }
    return out;
}

ChainComplex mapping_cone(const ChainMap& f) {
    f.validate();
    const ChainComplex& c = f.source;
    const ChainComplex& d = f.target;
    const RingSpec& ring = c.ring();
    int lo = std::min(c.lo() + 1, d.lo());
    int hi = std::max(c.hi() + 1, d.hi());
    if (c.empty() && d.empty()) return ChainComplex(ring);
    if (c.empty()) return d;
    std::vector<long> ranks;
    for (int n = lo; n <= hi; ++n) ranks.push_back(c.rank(n - 1) + d.rank(n));
    ChainComplex cone(ring, lo, std::move(ranks));
    for (int n = lo + 1; n <= hi; ++n) {
        Matrix m(ring, cone.rank(n - 1), cone.rank(n));
        m.insert_block(0, 0, c.diff(n - 1).negated());
        m.insert_block(c.rank(n - 2), 0, f.comp(n - 1));
        m.insert_block(c.rank(n - 2), c.rank(n - 1), d.diff(n));
        cone.set_diff(n, std::move(m));
    }
    return cone;
}

bool is_quasi_iso(const ChainMap& f) { return is_acyclic(mapping_cone(f)); }

}  // namespace delta

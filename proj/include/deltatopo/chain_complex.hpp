#pragma once

#include <map>
#include <optional>

#include "deltatopo/snf.hpp"

namespace delta {

// One homology group: free part plus torsion coefficients t1 | t2 | ...
// (each > 1). Over a prime field free_rank is the dimension and torsion
// stays empty.
struct GradedPiece {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const GradedPiece&) const = default;
};

// Graded abelian group keyed by degree; degrees with zero groups are absent.
struct GradedGroup {
    std::map<int, GradedPiece> groups;

    bool is_zero() const { return groups.empty(); }
    GradedPiece at(int n) const {
        auto it = groups.find(n);
        return it == groups.end() ? GradedPiece{} : it->second;
    }
    void set(int n, GradedPiece g) {
        if (!g.is_zero()) groups[n] = std::move(g);
    }
    bool operator==(const GradedGroup&) const = default;
    std::string describe() const;
};

// Bounded chain complex of f.g. free modules: ranks per degree plus the
// differentials d_n : C_n -> C_{n-1}.
class ChainComplex {
  public:
    explicit ChainComplex(RingSpec ring = RingSpec::integers()) : ring_(std::move(ring)) {}
    ChainComplex(RingSpec ring, int lo, std::vector<long> ranks);

    const RingSpec& ring() const { return ring_; }
    bool empty() const { return ranks_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    long rank(int n) const;
    long total_rank() const;
    std::vector<long> rank_vector() const { return ranks_; }

    Matrix diff(int n) const;  // zero matrix of the right shape when unset
    void set_diff(int n, Matrix d);

    // Shape and d^2 = 0. Throws DomainError on violation.
    void validate() const;

    bool operator==(const ChainComplex& o) const;

    // Degree shift by k with the Koszul sign (-1)^k on differentials.
    ChainComplex shifted(int k) const;
    ChainComplex direct_sum(const ChainComplex& o) const;
    // Drop zero-rank degrees at both ends.
    ChainComplex trimmed() const;

    long euler_characteristic() const;

  private:
    RingSpec ring_;
    int lo_ = 0;
    std::vector<long> ranks_;
    std::map<int, Matrix> diffs_;
};

// Chain map f : source -> target (degreewise matrices).
struct ChainMap {
    ChainComplex source, target;
    std::map<int, Matrix> comps;

    Matrix comp(int n) const;
    void validate() const;  // shapes and d f = f d
    static ChainMap identity(const ChainComplex& c);
};

// Homology via Smith normal form (Z) or mod-p rank (Z/p). Group rings are
// rejected; restrict scalars first.
GradedGroup homology(const ChainComplex& c);
bool is_acyclic(const ChainComplex& c);

// C^{-*}: degree n holds the dual of C_{-n}; differentials are involution
// transposes. Cochain complexes are stored this way (non-positive degrees
// for a complex supported in non-negative degrees).
ChainComplex dualize_complex(const ChainComplex& c);

// Hom(C, D)_n = sum_{q-p=n} Hom(C_p, D_q), d(f) = d_D f + (-1)^q f d_C.
// Basis of a (p, q) block: e_{ij} flattened as i * rank(C_p) + j.
ChainComplex hom_complex(const ChainComplex& c, const ChainComplex& d);

ChainComplex mapping_cone(const ChainMap& f);
// Quasi-isomorphism test via acyclicity of the cone (exact, torsion-aware).
bool is_quasi_iso(const ChainMap& f);

long rank_over(const RingSpec& ring, const Matrix& m);

}  // namespace delta

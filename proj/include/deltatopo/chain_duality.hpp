#pragma once

#include "deltatopo/total_complex.hpp"

namespace delta {

// Module-level duality on f.g. free modules with standard bases: T is the
// involution transpose, the double-dual identification e is the identity
// matrix, so T is a strict involution.
struct ModuleDuality {
    RingSpec ring;

    long dual_rank(long r) const { return r; }
    Matrix on_morphism(const Matrix& f) const { return f.transpose_involute(); }
    Matrix e(long rank) const { return Matrix::identity(ring, rank); }
    // e(T(M)) o T(e(M)) = 1
    bool axiom_one(long rank) const { return (e(rank) * on_morphism(e(rank))).is_identity(); }
};

// T on the bounded complex category: degree n holds the dual of C_{-n}.
// With a 0-dimensional module-level duality this is exactly the cochain
// reindexing of dualize_complex.
ChainComplex dual_of_complex(const ChainComplex& c);

// T on A_*(X): dualize Tot degreewise and reattach the transposed
// components on the contravariant side. Component ranks satisfy
// T(C)(x)_n = sum over x->y of rank C(y)_{-n-|x|}.
XComplex chain_dual_x(const XComplex& c);
XChainMap chain_dual_x_map(const XChainMap& f);

// Rank table of one dual component in the presentation normalized so that
// the dual of Delta(X') at x prints as Delta(perp x)^{|x|-*}: normalized
// degree r = internal degree + 2|x|.
std::map<int, long> dual_component_ranks(const XComplex& dual_complex, SimplexRef x);

// H(T^2 C [x]) must match H(C[x]) for every simplex.
PerSimplexReport double_dual_check(const XComplex& c);

// Hom complex of two contravariant X-complexes, assembled to scalars, with
// block metadata kept for the symmetry map.
struct HomBlock {
    int p = 0, q = 0;
    MorKey phi;       // x -> y
    long offset = 0;
    long rows = 0, cols = 0;  // rows = rank B_q(y), cols = rank A_p(x)
};

struct HomXComplex {
    ChainComplex complex;
    std::map<int, std::vector<HomBlock>> blocks;
};

HomXComplex hom_x_complex(const XComplex& a, const XComplex& b);

// Chain product C (x) D = Hom(TC, D).
struct ChainProduct {
    XComplex dual;  // TC
    HomXComplex hom;
    const ChainComplex& complex() const { return hom.complex; }
};

ChainProduct chain_product(const XComplex& c, const XComplex& d);

// The symmetry b(C, D): C (x) D -> D (x) C. Swaps elementary tensor blocks
// with the sign (-1)^{ab + |x|(a+b)}; an exact involution here because the
// module-level duality is strict.
std::map<int, Matrix> symmetry_b(const XComplex& c, const XComplex& d);

// Cohomology computed through the chain dual of Delta(X'), reported in
// cochain degrees (H^n keyed by n >= 0).
GradedGroup cohomology_via_dual(const DeltaSet& x, const RingSpec& ring);
// Independent route: dualize the simplicial complex of X' directly.
GradedGroup cohomology_via_cochain(const DeltaSet& x, const RingSpec& ring);

}  // namespace delta

#pragma once

#include "deltatopo/simplicial.hpp"

namespace delta {

// An n-simplex of the barycentric subdivision: base simplex plus n
// composable non-identity morphisms.
struct MorphismChain {
    SimplexRef base;
    std::vector<CatMorphism> links;

    int dim() const { return static_cast<int>(links.size()); }
    SimplexRef end() const { return links.empty() ? base : links.back().target; }
    auto operator<=>(const MorphismChain&) const = default;
};

// X' together with per-simplex chain provenance. The n-simplices of X' are
// enumerated grouped by base simplex, so the assembled chain complex of X'
// aligns block-by-block with the induced-functor presentation.
struct Subdivision {
    DeltaSet original;
    DeltaSet prime;
    std::vector<std::vector<MorphismChain>> chains;  // chains[d][i] describes prime simplex (d,i)

    SimplexRef index_of(const MorphismChain& c) const;
    // [first, last) range of prime indices in dimension d whose base is x.
    std::pair<int, int> base_block(int d, SimplexRef x) const;
};

Subdivision barycentric_subdivide(const DeltaSet& x);

// A simplex of a dual complex: leading morphism x -> x0 (identity allowed)
// plus non-identity links.
struct DualSimplex {
    CatMorphism lead;
    std::vector<CatMorphism> links;

    int dim() const { return static_cast<int>(links.size()); }
    SimplexRef end() const { return links.empty() ? lead.target : links.back().target; }
    auto operator<=>(const DualSimplex&) const = default;
};

struct DualComplex {
    SimplexRef anchor;
    DeltaSet dual;                                     // the dual of the anchor
    std::vector<std::vector<DualSimplex>> simplices;   // per prime (d, i)
    SubDeltaSet boundary;                              // simplices with non-identity lead

    DeltaSet boundary_set() const { return extract(dual, boundary); }
    bool in_boundary(SimplexRef r) const { return boundary.contains(r); }
};

DualComplex dual(const DeltaSet& x, SimplexRef anchor);

// Characteristic map into X': forgets the leading morphism.
DeltaMap characteristic_map(const DualComplex& dc, const Subdivision& sub);

// A morphism x -> y contravariantly induces dual(y) -> dual(x).
DeltaMap induced_dual_map(const DeltaSet& x, const CatMorphism& phi,
                          const DualComplex& dual_of_target, const DualComplex& dual_of_source);

// Simplices of the target hit by f; face-closed because f is a delta map.
SubDeltaSet image_subdelta(const DeltaMap& f);

struct StrictPullback {
    DeltaSet total;                                          // x/f
    SubDeltaSet boundary;                                    // part over the dual boundary
    std::vector<std::vector<std::pair<SimplexRef, SimplexRef>>> pairs;  // (simplex of Y, simplex of the dual)
};

// Strict pullback of f : Y -> X' against the characteristic map of the
// anchor's dual. f.target must structurally equal sub.prime.
StrictPullback strict_pullback(const DeltaMap& f, const Subdivision& sub, SimplexRef anchor);

// H_*(st(x)): the relative homology of the dual pair, shifted up by |x|.
GradedGroup star_homology(const DeltaSet& x, SimplexRef anchor, const RingSpec& ring);

struct ManifoldCheckEntry {
    SimplexRef ref;
    std::string label;
    GradedGroup star;
    bool ok = false;
};

struct ManifoldCheckReport {
    bool pass = true;
    std::vector<ManifoldCheckEntry> entries;
    std::vector<std::string> failures() const;
};

// Dimension-n homology manifold test: every open star must have the
// homology of Z concentrated in degree n. All simplices are tested.
ManifoldCheckReport homology_manifold_check(const DeltaSet& x, int n);

}  // namespace delta

#pragma once

#include <map>
#include <memory>

#include "deltatopo/subdivision.hpp"

namespace delta {

using DeltaSetPtr = std::shared_ptr<const DeltaSet>;
DeltaSetPtr share(DeltaSet x);

enum class Variance { Contravariant, Covariant };

// Sparse component key: a morphism of the simplex category (target simplex
// plus injection image; the source is derived).
struct MorKey {
    SimplexRef target;
    std::vector<int> image;

    static MorKey of(const CatMorphism& f) { return {f.target, f.inj.image}; }
    CatMorphism morphism() const { return {target, FaceInjection{target.dim, image}}; }
    bool is_identity() const { return static_cast<int>(image.size()) == target.dim + 1; }
    auto operator<=>(const MorKey&) const = default;
};

using XComps = std::map<MorKey, Matrix>;

// Rank assignment per simplex: an object of the induced functor category.
// Contravariant components f(phi: x->y) map M(x) -> N(y); covariant ones
// map M(y) -> N(x).
struct XObject {
    DeltaSetPtr base;
    Variance var = Variance::Contravariant;
    RingSpec ring;
    std::vector<std::vector<long>> ranks;  // [dim][index]

    long rank(SimplexRef r) const;
    long total_rank() const;
    static XObject zeros(DeltaSetPtr base, Variance var, RingSpec ring);
};

bool same_base(const XObject& a, const XObject& b);

struct XMorphism {
    XObject source, target;
    XComps comps;

    Matrix comp(const CatMorphism& f) const;
    void set_comp(const CatMorphism& f, Matrix m);
    void validate() const;  // shapes
    bool is_zero() const;
    static XMorphism zero(XObject src, XObject tgt);
    static XMorphism identity(const XObject& m);
};

// Composite with the factorization sum: (g f)(psi) = sum over theta phi =
// psi of g(theta) f(phi) (mirrored on the covariant side).
XMorphism compose(const XMorphism& g, const XMorphism& f);
XMorphism add(const XMorphism& a, const XMorphism& b);
bool equal(const XMorphism& a, const XMorphism& b);

// Component-level primitives shared by objects, complexes and chain maps.
XComps compose_comps(const DeltaSet& base, Variance var, const RingSpec& ring,
                     const XComps& g, const XComps& f,
                     const XObject& f_source, const XObject& f_target, const XObject& g_target);
XComps add_comps(const RingSpec& ring, const XComps& a, const XComps& b);
XComps prune_comps(const XComps& a);

// Bounded chain complex in the functor category.
struct XComplex {
    DeltaSetPtr base;
    Variance var = Variance::Contravariant;
    RingSpec ring;
    int lo = 0;
    std::vector<std::vector<std::vector<long>>> ranks;  // [degree - lo][dim][index]
    std::map<int, XComps> diffs;                        // d_n : degree n -> n-1

    bool empty() const { return ranks.empty(); }
    int hi() const { return lo + static_cast<int>(ranks.size()) - 1; }
    long rank(int n, SimplexRef r) const;
    XObject object(int n) const;
    XComps diff(int n) const;
    XMorphism diff_morphism(int n) const;

    void validate() const;  // shapes and d^2 = 0
    XComplex shifted(int k) const;
    XComplex direct_sum(const XComplex& o) const;
};

// Chain map of X-complexes.
struct XChainMap {
    XComplex source, target;
    std::map<int, XComps> comps;

    XComps comp(int n) const;
    XMorphism comp_morphism(int n) const;
    void validate() const;  // shapes and d f = f d
    static XChainMap identity(const XComplex& c);
    static XChainMap zero(XComplex src, XComplex tgt);
};

XChainMap compose(const XChainMap& g, const XChainMap& f);

// Bracket M[x]: one summand per morphism of st(x) (contravariant) or of
// cl(x) (covariant), with the induced differential.
struct Bracket {
    ChainComplex complex;
    std::vector<CatMorphism> summands;
    // offsets[degree - complex.lo()][j] = first row of summand j
    std::map<int, std::vector<long>> offsets;
};

Bracket bracket(const XComplex& c, SimplexRef x);
// The bracket map f[x] of a chain map.
ChainMap bracket_map(const XChainMap& f, SimplexRef x);
// Diagonal piece: the complex C(x) with differential d(1_x), and f(1_x).
ChainComplex diagonal_complex(const XComplex& c, SimplexRef x);
ChainMap diagonal_map(const XChainMap& f, SimplexRef x);

// Direct-sum collapse: blocks ordered by (dim, index); morphism components
// accumulate over every face operator between fixed source and target.
ChainComplex assemble(const XComplex& c);
Matrix assemble_morphism(const XObject& src, const XObject& tgt, const XComps& comps);
ChainMap assemble_map(const XChainMap& f);

// Delta(X') as a contravariant X-complex: the component at x holds the
// chains based at x (the interior of the dual), the d_0 face relocates to
// the target of the first link, the other faces stay put.
XComplex delta_prime_as_xcomplex(const Subdivision& sub, const RingSpec& ring);

struct PerSimplexReport {
    bool overall = true;
    std::vector<std::pair<std::string, bool>> entries;  // label -> ok
    std::vector<std::string> failures() const;
};

// Weak equivalence: every bracket map is a quasi-isomorphism.
PerSimplexReport is_weak_equivalence(const XChainMap& f);
// Local criterion: every diagonal component f(1_x) is a quasi-isomorphism.
PerSimplexReport local_criterion(const XChainMap& f);

}  // namespace delta

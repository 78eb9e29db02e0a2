#pragma once

#include <optional>

#include "deltatopo/functor_cat.hpp"

namespace delta {

// A contravariant functor-category chain complex presented by its bracket
// values: one chain complex C[x] per simplex plus a chain map C[y] -> C[w]
// per non-identity morphism w -> y. Induced complexes embed via
// from_induced; the constant functor is the non-induced example.
struct GeneralXComplex {
    DeltaSetPtr base;
    RingSpec ring;
    std::vector<ChainComplex> brackets;                    // per flat simplex index
    std::map<MorKey, std::map<int, Matrix>> restrictions;  // per morphism, per degree

    const ChainComplex& bracket_at(SimplexRef r) const;
    Matrix restriction(const CatMorphism& f, int degree) const;
    void validate() const;  // functoriality on face pairs and chain-map property

    static GeneralXComplex constant(DeltaSetPtr base, const RingSpec& ring);
    static GeneralXComplex from_induced(const XComplex& c);
};

// Tot of a contravariant complex: a covariant-side complex with
// (Tot C)(x)_n = C[x]_{n-|x|}. The relocation components carry the sign
// (-1)^{i+|x|}; the internal differential is the shifted one, i.e. it
// carries (-1)^{|x|}, which is what makes d^2 = 0 against the simplicial
// identities.
struct TotComplex {
    XComplex total;                           // covariant side
    std::optional<XComplex> induced_source;   // provenance when built from an induced complex
};

TotComplex tot(const GeneralXComplex& c);
TotComplex tot(const XComplex& c);
ChainComplex tot_assembled(const GeneralXComplex& c);
ChainComplex tot_assembled(const XComplex& c);

// Tot of a chain map of induced complexes: the diagonal bracket maps.
XChainMap tot_map(const XChainMap& f);

// Example check: for constant coefficients the assembled Tot equals the
// simplicial chain complex via the diagonal sign map eps_n = (-1)^{n(n+1)/2}.
bool constant_tot_matches_simplicial(const DeltaSet& x, const RingSpec& ring);

}  // namespace delta

#pragma once

#include "deltatopo/chain_complex.hpp"
#include "deltatopo/delta_set.hpp"

namespace delta {

// Simplicial chain complex: rank |X^(n)| in degree n, d = sum (-1)^i d_i.
// Entries accumulate one +-1 per face occurrence, so repeated faces cancel
// or double.
ChainComplex simplicial_chain_complex(const DeltaSet& x, const RingSpec& ring);

// Quotient complex of a face-closed pair (X, A): free on the simplices of
// X \ A.
ChainComplex relative_complex(const DeltaSet& x, const SubDeltaSet& a, const RingSpec& ring);

}  // namespace delta

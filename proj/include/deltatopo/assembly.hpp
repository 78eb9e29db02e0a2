#pragma once

#include "deltatopo/functor_cat.hpp"

namespace delta {

// A finite regular cover: total complex with a free action whose orbits
// biject with the base simplices through the projection.
struct CoverSpec {
    DeltaSet total;
    DeltaSet base;
    GroupAction action;   // on total
    DeltaMap projection;  // total -> base
};

ValidationReport validate_cover(const CoverSpec& c);

// The n-fold cyclic cover of the one-vertex circle: total space is the
// n-cycle, deck group Z/n by rotation.
CoverSpec cyclic_cover_of_circle(long n);

// True if the deck group is cyclic; power_of[g] gives the exponent of the
// chosen generator representing element g.
bool cover_group_is_cyclic(const GroupAction& a, std::vector<long>& power_of);

// C(X~) = sum over x~ of C(p(x~)) as a free Z[Z/n]-complex: one generator
// per base contribution (orbit representatives are the lexicographically
// least labels), deck translations become group-ring coefficients.
ChainComplex assemble_over_cover(const XComplex& c, const CoverSpec& cover);
// Same with explicit orbit representatives (reps[d][base index] = total index).
ChainComplex assemble_over_cover_with_reps(const XComplex& c, const CoverSpec& cover,
                                           const std::vector<std::vector<int>>& reps);
std::vector<std::vector<int>> default_cover_reps(const CoverSpec& cover);

// Z[Z/n] -> Z: every generator becomes n generators, group elements become
// cyclic permutation blocks.
ChainComplex restrict_scalars(const ChainComplex& c);

}  // namespace delta

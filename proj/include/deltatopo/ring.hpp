#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "deltatopo/errors.hpp"

namespace delta {

using Int = mpz_class;

enum class RingKind { Integers, PrimeField, CyclicGroupRing };

// A ring with involution. Supported kinds:
//   Integers          Z, identity involution
//   PrimeField        Z/p (p prime), identity involution
//   CyclicGroupRing   Z[Z/m], involution t^k -> t^{m-k}
struct RingSpec {
    RingKind kind = RingKind::Integers;
    long p = 0;      // PrimeField modulus
    long order = 1;  // CyclicGroupRing group order

    static RingSpec integers() { return {}; }
    static RingSpec prime_field(long p);
    static RingSpec cyclic_group_ring(long m);

    // Length of the coefficient vector of one ring element.
    long elem_len() const { return kind == RingKind::CyclicGroupRing ? order : 1; }
    bool is_scalar() const { return kind != RingKind::CyclicGroupRing; }
    bool commutative() const { return true; }

    bool operator==(const RingSpec&) const = default;
    std::string describe() const;
};

// One ring element: coefficient vector of length ring.elem_len().
// For Z and Z/p this is a single integer; for Z[Z/m] coefficient i is the
// coefficient of t^i.
struct RingElem {
    std::vector<Int> c;

    bool operator==(const RingElem&) const = default;
};

RingElem re_zero(const RingSpec& ring);
RingElem re_one(const RingSpec& ring);
RingElem re_from_int(const RingSpec& ring, long v);
// Generator power t^k of a cyclic group ring (k taken mod order).
RingElem re_group_gen_pow(const RingSpec& ring, long k);

RingElem re_normalize(const RingSpec& ring, RingElem a);
RingElem re_add(const RingSpec& ring, const RingElem& a, const RingElem& b);
RingElem re_sub(const RingSpec& ring, const RingElem& a, const RingElem& b);
RingElem re_neg(const RingSpec& ring, const RingElem& a);
RingElem re_mul(const RingSpec& ring, const RingElem& a, const RingElem& b);
// The involution r -> \bar r (identity on the scalar part, g -> g^{-1}).
RingElem re_involute(const RingSpec& ring, const RingElem& a);
bool re_is_zero(const RingSpec& ring, const RingElem& a);
std::string re_to_string(const RingSpec& ring, const RingElem& a);

}  // namespace delta

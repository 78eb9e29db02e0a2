#include "deltatopo/ring.hpp"

#include <sstream>

namespace delta {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int mod_reduce(const Int& v, long p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

RingSpec RingSpec::prime_field(long p) {
    if (!is_prime(p)) throw DomainError("ring Z/" + std::to_string(p) + ": modulus is not prime");
    RingSpec r;
    r.kind = RingKind::PrimeField;
    r.p = p;
    return r;
}

RingSpec RingSpec::cyclic_group_ring(long m) {
    if (m < 1) throw DomainError("group ring Z[Z/m] needs m >= 1");
    RingSpec r;
    r.kind = RingKind::CyclicGroupRing;
    r.order = m;
    return r;
}

std::string RingSpec::describe() const {
    switch (kind) {
        case RingKind::Integers: return "Z";
        case RingKind::PrimeField: return "Z/" + std::to_string(p);
        case RingKind::CyclicGroupRing: return "Z[Z/" + std::to_string(order) + "]";
    }
    return "?";
}

RingElem re_zero(const RingSpec& ring) {
    RingElem e;
    e.c.assign(ring.elem_len(), Int(0));
    return e;
}

RingElem re_one(const RingSpec& ring) {
    RingElem e = re_zero(ring);
    e.c[0] = 1;
    return re_normalize(ring, std::move(e));
}

RingElem re_from_int(const RingSpec& ring, long v) {
    RingElem e = re_zero(ring);
    e.c[0] = v;
    return re_normalize(ring, std::move(e));
}

RingElem re_group_gen_pow(const RingSpec& ring, long k) {
    if (ring.kind != RingKind::CyclicGroupRing)
        throw DomainError("group generator requested over " + ring.describe());
    RingElem e = re_zero(ring);
    long m = ring.order;
    e.c[((k % m) + m) % m] = 1;
    return e;
}

RingElem re_normalize(const RingSpec& ring, RingElem a) {
    if (ring.kind == RingKind::PrimeField)
        a.c[0] = mod_reduce(a.c[0], ring.p);
    return a;
}

RingElem re_add(const RingSpec& ring, const RingElem& a, const RingElem& b) {
    RingElem r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return re_normalize(ring, std::move(r));
}

RingElem re_sub(const RingSpec& ring, const RingElem& a, const RingElem& b) {
    RingElem r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return re_normalize(ring, std::move(r));
}

RingElem re_neg(const RingSpec& ring, const RingElem& a) {
    RingElem r = a;
    for (auto& v : r.c) v = -v;
    return re_normalize(ring, std::move(r));
}

RingElem re_mul(const RingSpec& ring, const RingElem& a, const RingElem& b) {
    if (ring.is_scalar()) {
        RingElem r = re_zero(ring);
        r.c[0] = a.c[0] * b.c[0];
        return re_normalize(ring, std::move(r));
    }
    // cyclic convolution in Z[t]/(t^m - 1)
    long m = ring.order;
    RingElem r = re_zero(ring);
    for (long i = 0; i < m; ++i) {
        if (a.c[i] == 0) continue;
        for (long j = 0; j < m; ++j) {
            if (b.c[j] == 0) continue;
            r.c[(i + j) % m] += a.c[i] * b.c[j];
        }
    }
    return r;
}

RingElem re_involute(const RingSpec& ring, const RingElem& a) {
    if (ring.is_scalar()) return re_normalize(ring, a);
    long m = ring.order;
    RingElem r = re_zero(ring);
    for (long i = 0; i < m; ++i) r.c[(m - i) % m] = a.c[i];
    return r;
}

bool re_is_zero(const RingSpec& ring, const RingElem& a) {
    RingElem n = re_normalize(ring, a);
    for (const auto& v : n.c)
        if (v != 0) return false;
    return true;
}

std::string re_to_string(const RingSpec& ring, const RingElem& a) {
    if (ring.is_scalar()) return a.c[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < ring.order; ++i) {
        if (a.c[i] == 0) continue;
        if (!first) os << " + ";
        os << a.c[i].get_str();
        if (i > 0) os << "*t^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace delta

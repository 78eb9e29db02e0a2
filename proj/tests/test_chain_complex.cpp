#include <doctest.h>

#include "deltatopo/fixtures.hpp"
#include "deltatopo/simplicial.hpp"
#include "helpers.hpp"

using namespace delta;
using testutil::Rng;

namespace {

GradedGroup graded(std::initializer_list<std::pair<int, GradedPiece>> parts) {
    GradedGroup g;
    for (auto& [n, p] : parts) g.set(n, p);
    return g;
}

ChainComplex two_term(long v) {
    // 0 -> Z -(x v)-> Z -> 0
    ChainComplex c(RingSpec::integers(), 0, {1, 1});
    c.set_diff(1, Matrix::from_ints(RingSpec::integers(), {{v}}));
    return c;
}

// Random complex assembled from real constructions so that d^2 = 0 holds
// by design: simplicial complexes of random Delta-sets, shifts, duals and
// direct sums.
ChainComplex random_complex(Rng& rng) {
    ChainComplex c = simplicial_chain_complex(testutil::random_simplicial_complex(rng), RingSpec::integers());
    if (testutil::rand_range(rng, 0, 1)) c = dualize_complex(c);
    c = c.shifted(static_cast<int>(testutil::rand_range(rng, -2, 2)));
    if (testutil::rand_range(rng, 0, 1))
        c = c.direct_sum(
            simplicial_chain_complex(testutil::random_simplicial_complex(rng), RingSpec::integers()));
    return c;
}

}  // namespace

TEST_CASE("simplicial chain complexes of the fixtures") {
    RingSpec z = RingSpec::integers();
    SUBCASE("circle: the two faces cancel") {
        ChainComplex c = simplicial_chain_complex(fixtures::circle(), z);
        CHECK(c.rank_vector() == std::vector<long>{1, 1});
        CHECK(c.diff(1).is_zero());
        CHECK(homology(c) == graded({{0, {1, {}}}, {1, {1, {}}}}));
    }
    SUBCASE("full 2-simplex") {
        ChainComplex c = simplicial_chain_complex(standard_simplex(2), z);
        CHECK(c.rank_vector() == std::vector<long>{3, 3, 1});
        c.validate();
        CHECK(homology(c) == graded({{0, {1, {}}}}));
    }
    SUBCASE("empty set") {
        ChainComplex c = simplicial_chain_complex(fixtures::empty(), z);
        CHECK(c.empty());
        CHECK(homology(c).is_zero());
    }
    SUBCASE("dunce hat is acyclic above degree 0") {
        ChainComplex c = simplicial_chain_complex(fixtures::dunce_hat(), z);
        CHECK(homology(c) == graded({{0, {1, {}}}}));
    }
    SUBCASE("torsion: multiplication by 2") {
        CHECK(homology(two_term(-2)) == graded({{0, {0, {Int(2)}}}}));
        CHECK(homology(two_term(1)).is_zero());
    }
    SUBCASE("prime field coefficients") {
        ChainComplex c2(RingSpec::prime_field(2), 0, {1, 1});
        c2.set_diff(1, Matrix::from_ints(RingSpec::prime_field(2), {{-2}}));
        // mod 2 the differential dies, so both degrees survive
        CHECK(c2.diff(1).is_zero());
        CHECK(homology(c2) == graded({{0, {1, {}}}, {1, {1, {}}}}));
        CHECK_THROWS_AS(homology(ChainComplex(RingSpec::cyclic_group_ring(3), 0, {1})), DomainError);
    }
}

TEST_CASE("relative complexes") {
    RingSpec z = RingSpec::integers();
    DeltaSet x = fixtures::triangle_circle();
    SUBCASE("full pair is zero") {
        ChainComplex c = relative_complex(x, SubDeltaSet::full(x), z);
        CHECK(c.empty());
    }
    SUBCASE("empty pair is the absolute complex") {
        CHECK(relative_complex(x, SubDeltaSet::empty(x), z) == simplicial_chain_complex(x, z));
    }
    SUBCASE("non-face-closed subsets are rejected") {
        SubDeltaSet bad = SubDeltaSet::empty(x);
        bad.members[1] = {0};  // an edge without its vertices
        CHECK_THROWS_AS(relative_complex(x, bad, z), DomainError);
    }
}

TEST_CASE("dualize_complex") {
    RingSpec z = RingSpec::integers();
    SUBCASE("circle: both dual degrees survive") {
        ChainComplex d = dualize_complex(simplicial_chain_complex(fixtures::circle(), z));
        CHECK(d.lo() == -1);
        CHECK(d.rank_vector() == std::vector<long>{1, 1});
        CHECK(homology(d) == GradedGroup{{{-1, {1, {}}}, {0, {1, {}}}}});
    }
    SUBCASE("double dual is the identity on the nose") {
        Rng rng(7);
        for (int t = 0; t < 10; ++t) {
            ChainComplex c = random_complex(rng);
            CHECK(dualize_complex(dualize_complex(c)) == c);
        }
    }
    SUBCASE("zero complex") { CHECK(dualize_complex(ChainComplex(z)).empty()); }
}

TEST_CASE("hom complexes") {
    RingSpec z = RingSpec::integers();
    ChainComplex pt(z, 0, {1});
    SUBCASE("Hom(point, D) = D") {
        ChainComplex d = simplicial_chain_complex(fixtures::triangle_circle(), z);
        CHECK(hom_complex(pt, d) == d);
    }
    SUBCASE("Hom(C, point) = dual of C") {
        Rng rng(11);
        for (int t = 0; t < 8; ++t) {
            ChainComplex c = random_complex(rng);
            CHECK(hom_complex(c, pt) == dualize_complex(c));
        }
    }
    SUBCASE("endomorphisms of the circle complex: the identity class is nonzero") {
        ChainComplex c = simplicial_chain_complex(fixtures::circle(), z);
        ChainComplex h = hom_complex(c, c);
        h.validate();
        // identity element: block (p, p) diagonal units, blocks ordered by p
        CHECK(h.rank(0) == 2);
        std::vector<Int> id_vec = {Int(1), Int(1)};
        // it is a cycle ...
        Matrix d0 = h.diff(0);
        for (long i = 0; i < d0.rows(); ++i) {
            Int acc = 0;
            for (long j = 0; j < d0.cols(); ++j) acc += d0.at(i, j).c[0] * id_vec[j];
            CHECK(acc == 0);
        }
        // ... and not a boundary
        CHECK_FALSE(snf_in_image(h.diff(1), id_vec));
    }
    SUBCASE("hom complex differentials square to zero") {
        Rng rng(23);
        for (int t = 0; t < 6; ++t) {
            ChainComplex c = random_complex(rng), d = random_complex(rng);
            hom_complex(c, d).validate();
        }
    }
}

TEST_CASE("homology is invariant under unimodular change of basis") {
    Rng rng(99);
    RingSpec z = RingSpec::integers();
    for (int t = 0; t < 12; ++t) {
        ChainComplex c = random_complex(rng).trimmed();
        if (c.empty()) continue;
        std::map<int, std::pair<Matrix, Matrix>> p;
        for (int n = c.lo(); n <= c.hi(); ++n) p[n] = testutil::random_unimodular_pair(rng, c.rank(n));
        ChainComplex conj(z, c.lo(), c.rank_vector());
        for (int n = c.lo() + 1; n <= c.hi(); ++n)
            conj.set_diff(n, p.at(n - 1).first * c.diff(n) * p.at(n).second);
        conj.validate();
        CHECK(homology(conj) == homology(c));
    }
}

TEST_CASE("euler characteristic equals the alternating sum of homology ranks") {
    Rng rng(4242);
    for (int t = 0; t < 12; ++t) {
        ChainComplex c = random_complex(rng);
        GradedGroup h = homology(c);
        long chi = 0;
        for (const auto& [n, g] : h.groups) chi += (n % 2 == 0 ? 1 : -1) * g.free_rank;
        CHECK(chi == c.euler_characteristic());
    }
}

TEST_CASE("mapping cones and quasi-isomorphisms") {
    RingSpec z = RingSpec::integers();
    ChainComplex c = simplicial_chain_complex(fixtures::dunce_hat(), z);
    SUBCASE("identity is a quasi-isomorphism") { CHECK(is_quasi_iso(ChainMap::identity(c))); }
    SUBCASE("multiplication by 2 is detected exactly") {
        ChainComplex pt(z, 0, {1});
        ChainMap f{pt, pt, {{0, Matrix::from_ints(z, {{2}})}}};
        CHECK_FALSE(is_quasi_iso(f));
        ChainComplex pt3(RingSpec::prime_field(3), 0, {1});
        ChainMap f3{pt3, pt3, {{0, Matrix::from_ints(RingSpec::prime_field(3), {{2}})}}};
        CHECK(is_quasi_iso(f3));
    }
    SUBCASE("non-chain-maps are rejected") {
        ChainComplex a(z, 0, {1, 1});
        ChainComplex b = two_term(1);
        ChainMap f{b, a, {{0, Matrix::from_ints(z, {{1}})}}};
        CHECK_THROWS_AS(f.validate(), DomainError);
    }
}

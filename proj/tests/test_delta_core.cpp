#include <doctest.h>

#include <algorithm>

#include "deltatopo/delta_io.hpp"
#include "deltatopo/fixtures.hpp"
#include "deltatopo/simplicial.hpp"
#include "helpers.hpp"

using namespace delta;
using testutil::Rng;

namespace {

// A small complex rigged to break d1 d2 = d1 d1 at its triangle.
DeltaSet corrupted_two_complex() {
    DeltaSet x;
    x.labels = {{"v0", "v1"}, {"e0", "e1"}, {"x2"}};
    // e0: v0 -> v0 loop, e1: v0 -> v1
    // triangle faces (e0, e0, e1): the (1,2) identity fails
    x.faces = {{{}, {}}, {{0, 0}, {0, 1}}, {{0, 0, 1}}};
    return x;
}

}  // namespace

TEST_CASE("validate") {
    SUBCASE("constructions are valid") {
        CHECK(validate(standard_simplex(2)).ok);
        CHECK(validate(fixtures::dunce_hat()).ok);
        CHECK(validate(fixtures::circle()).ok);
        CHECK(validate(fixtures::empty()).ok);
    }
    SUBCASE("violations name the simplex and identity") {
        ValidationReport rep = validate(corrupted_two_complex());
        CHECK_FALSE(rep.ok);
        REQUIRE_FALSE(rep.violations.empty());
        CHECK(rep.violations.front().find("x2") != std::string::npos);
        CHECK(rep.violations.front().find("d1 d2") != std::string::npos);
    }
    SUBCASE("dangling face reference") {
        DeltaSet x;
        x.labels = {{"a"}, {"e"}};
        x.faces = {{{}}, {{0, 3}}};
        CHECK_FALSE(validate(x).ok);
    }
    SUBCASE("duplicate labels") {
        DeltaSet x;
        x.labels = {{"a", "a"}};
        x.faces = {{{}, {}}};
        CHECK_FALSE(validate(x).ok);
    }
}

TEST_CASE("standard simplices") {
    CHECK(standard_simplex(2).counts() == std::vector<long>{3, 3, 1});
    CHECK(standard_simplex(0).counts() == std::vector<long>{1});
    CHECK(standard_simplex(3).counts() == std::vector<long>{4, 6, 4, 1});
    CHECK(validate(standard_simplex(3)).ok);
}

TEST_CASE("from_simplicial_complex") {
    SUBCASE("triangle boundary") {
        DeltaSet x = fixtures::triangle_circle();
        CHECK(x.counts() == std::vector<long>{3, 3});
        GradedGroup h = homology(simplicial_chain_complex(x, RingSpec::integers()));
        CHECK(h.at(0) == GradedPiece{1, {}});
        CHECK(h.at(1) == GradedPiece{1, {}});
    }
    SUBCASE("full 2-simplex matches the standard one up to labels") {
        DeltaSet x = from_simplicial_complex(
            {"0", "1", "2"}, {{"0"}, {"1"}, {"2"}, {"0", "1"}, {"0", "2"}, {"1", "2"}, {"0", "1", "2"}});
        DeltaSet s = standard_simplex(2);
        CHECK(x.faces == s.faces);
        CHECK(x.counts() == s.counts());
    }
    SUBCASE("missing face is rejected with the offending subset") {
        CHECK_THROWS_WITH_AS(
            from_simplicial_complex({"0", "1", "2"}, {{"0"}, {"1"}, {"2"}, {"0", "1"}, {"0", "2"},
                                                      {"0", "1", "2"}}),
            doctest::Contains("{1.2}"), DomainError);
    }
}

TEST_CASE("apply_injection") {
    DeltaSet s1 = fixtures::circle();
    SimplexRef x1{1, 0}, x0{0, 0};
    SUBCASE("identity") { CHECK(apply_injection(FaceInjection::identity(1), x1, s1) == x1); }
    SUBCASE("both vertices of the circle edge are x0") {
        FaceInjection f0{1, {0}}, f1{1, {1}};
        CHECK(apply_injection(f0, x1, s1) == x0);
        CHECK(apply_injection(f1, x1, s1) == x0);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(apply_injection(FaceInjection::identity(2), x1, s1), DomainError);
    }
    SUBCASE("decreasing-order evaluation agrees with increasing-order evaluation") {
        // increasing order needs the omitted indices shifted as lower ones
        // are consumed
        auto increasing_eval = [](const FaceInjection& f, SimplexRef y, const DeltaSet& x) {
            SimplexRef cur = y;
            auto omitted = f.omitted();
            for (size_t k = 0; k < omitted.size(); ++k) cur = x.face(cur, omitted[k] - static_cast<int>(k));
            return cur;
        };
        DeltaSet d3 = standard_simplex(3);
        for (int m = 0; m <= 3; ++m)
            for (const auto& f : all_injections(m, 3)) {
                SimplexRef top{3, 0};
                CHECK(apply_injection(f, top, d3) == increasing_eval(f, top, d3));
            }
        // and on a non-complex fixture
        DeltaSet dh = fixtures::dunce_hat();
        for (int m = 0; m <= 2; ++m)
            for (const auto& f : all_injections(m, 2))
                CHECK(apply_injection(f, {2, 0}, dh) == increasing_eval(f, {2, 0}, dh));
    }
    SUBCASE("composition of injections evaluates contravariantly") {
        DeltaSet d3 = standard_simplex(3);
        for (int m = 0; m <= 3; ++m)
            for (const auto& lam : all_injections(m, 3))
                for (int k = 0; k <= m; ++k)
                    for (const auto& mu : all_injections(k, m)) {
                        SimplexRef top{3, 0};
                        CHECK(apply_injection(lam.compose(mu), top, d3) ==
                              apply_injection(mu, apply_injection(lam, top, d3), d3));
                    }
    }
}

TEST_CASE("morphism enumeration") {
    DeltaSet s1 = fixtures::circle();
    DeltaSet dh = fixtures::dunce_hat();
    SUBCASE("the circle has two arrows from the vertex to the edge") {
        CHECK(morphisms_between({0, 0}, {1, 0}, s1).size() == 2);
    }
    SUBCASE("three arrows from the dunce hat vertex to the triangle") {
        CHECK(morphisms_between({0, 0}, {2, 0}, dh).size() == 3);
    }
    SUBCASE("endomorphisms are only the identity") {
        for (auto r : dh.all_refs()) {
            auto ms = morphisms_between(r, r, dh);
            REQUIRE(ms.size() == 1);
            CHECK(ms[0].is_identity());
        }
    }
    SUBCASE("no morphisms downward in dimension") {
        CHECK(morphisms_between({1, 0}, {0, 0}, s1).empty());
        CHECK(morphisms_between({2, 0}, {1, 0}, dh).empty());
    }
    SUBCASE("stars") {
        CHECK(star({0, 0}, s1).size() == 3);   // id and the two arrows
        CHECK(star({2, 0}, dh).size() == 1);   // top simplex
        CHECK(star({2, 0}, standard_simplex(2)).size() == 1);
        // identity is always present
        for (auto r : dh.all_refs()) {
            auto st = star(r, dh);
            CHECK(std::any_of(st.begin(), st.end(), [](const CatMorphism& f) { return f.is_identity(); }));
        }
    }
}

TEST_CASE("over categories") {
    DeltaSet s1 = fixtures::circle();
    SUBCASE("over the circle edge: the 1-simplex, both vertices sent to x0") {
        OverCategory oc = over_category({1, 0}, s1);
        CHECK(oc.over.faces == standard_simplex(1).faces);
        oc.forgetful.validate();
        CHECK(oc.forgetful.assignment[0] == std::vector<int>{0, 0});
        CHECK(oc.forgetful.assignment[1] == std::vector<int>{0});
    }
    SUBCASE("over a vertex") {
        OverCategory oc = over_category({0, 0}, s1);
        CHECK(oc.over.counts() == std::vector<long>{1});
    }
    SUBCASE("over the dunce hat triangle") {
        OverCategory oc = over_category({2, 0}, fixtures::dunce_hat());
        CHECK(oc.over.faces == standard_simplex(2).faces);
        oc.forgetful.validate();
        CHECK(oc.forgetful.assignment[0] == std::vector<int>{0, 0, 0});
        CHECK(oc.forgetful.assignment[1] == std::vector<int>{0, 0, 0});
        CHECK(oc.forgetful.assignment[2] == std::vector<int>{0});
    }
}

TEST_CASE("quotients") {
    SUBCASE("trivial group") {
        DeltaSet x = fixtures::triangle_circle();
        Quotient q = quotient_by_action(x, GroupAction::trivial(x));
        CHECK(q.quotient.counts() == x.counts());
        CHECK(q.quotient.faces == x.faces);
    }
    SUBCASE("the rotating 3-cycle descends to the circle") {
        DeltaSet x = fixtures::three_cycle();
        GroupAction rot = GroupAction::cyclic(x, {{1, 2, 0}, {1, 2, 0}});
        CHECK(rot.order() == 3);
        Quotient q = quotient_by_action(x, rot);
        CHECK(q.quotient.counts() == std::vector<long>{1, 1});
        CHECK(q.quotient.faces[1][0] == std::vector<int>{0, 0});
        CHECK(validate(q.quotient).ok);
        q.projection.validate();
        // orbit counting per dimension
        CHECK(q.quotient.count(0) * rot.order() == x.count(0));
        CHECK(q.quotient.count(1) * rot.order() == x.count(1));
    }
    SUBCASE("two swapped points collapse to one") {
        DeltaSet x;
        x.labels = {{"p", "q"}};
        x.faces = {{{}, {}}};
        GroupAction swap = GroupAction::cyclic(x, {{1, 0}});
        Quotient q = quotient_by_action(x, swap);
        CHECK(q.quotient.counts() == std::vector<long>{1});
        CHECK(q.quotient.labels[0][0] == "p");  // lexicographically least representative
    }
    SUBCASE("invalid actions are rejected") {
        DeltaSet x = fixtures::three_cycle();
        GroupAction bad = GroupAction::trivial(x);
        bad.maps[0][0][0] = 1;  // identity no longer acts as identity
        CHECK_THROWS_AS(quotient_by_action(x, bad), DomainError);
    }
}

TEST_CASE("euler characteristics") {
    CHECK(euler_characteristic(fixtures::circle()) == 0);
    CHECK(euler_characteristic(fixtures::dunce_hat()) == 1);
    CHECK(euler_characteristic(fixtures::empty()) == 0);
    CHECK(euler_characteristic(standard_simplex(3)) == 1);
}

TEST_CASE("complement of a star is face-closed") {
    Rng rng(31);
    std::vector<DeltaSet> xs = {fixtures::circle(), fixtures::dunce_hat(), fixtures::triangle_circle()};
    for (int t = 0; t < 5; ++t) xs.push_back(testutil::random_simplicial_complex(rng));
    for (const auto& x : xs)
        for (auto r : x.all_refs()) CHECK(is_face_closed(x, complement_of_star(x, r)));
}

TEST_CASE("json round trips and parse errors") {
    SUBCASE("fixtures round-trip exactly") {
        for (const auto& x : {fixtures::circle(), fixtures::dunce_hat(), fixtures::triangle_circle(),
                              fixtures::three_cycle(), fixtures::empty(), standard_simplex(3)}) {
            CHECK(delta_from_json(delta_to_json(x)) == x);
        }
    }
    SUBCASE("random complexes round-trip") {
        Rng rng(77);
        for (int t = 0; t < 8; ++t) {
            DeltaSet x = testutil::random_simplicial_complex(rng);
            CHECK(delta_from_json(delta_to_json(x)) == x);
        }
    }
    SUBCASE("unresolvable face labels are reported") {
        Json j = delta_to_json(fixtures::circle());
        j["faces"]["x1"][0] = "nope";
        CHECK_THROWS_WITH_AS(delta_from_json(j), doctest::Contains("'nope'"), ParseError);
    }
    SUBCASE("missing faces entry is reported") {
        Json j = delta_to_json(fixtures::circle());
        j["faces"].erase("x1");
        CHECK_THROWS_WITH_AS(delta_from_json(j), doctest::Contains("'x1'"), ParseError);
    }
    SUBCASE("duplicate labels are reported") {
        Json j;
        j["simplices"] = {{"0", {"a", "a"}}};
        CHECK_THROWS_AS(delta_from_json(j), ParseError);
    }
}

TEST_CASE("validate passes on every constructor output, randomized") {
    Rng rng(123);
    for (int t = 0; t < 10; ++t) {
        DeltaSet x = testutil::random_simplicial_complex(rng);
        CHECK(validate(x).ok);
        CHECK(validate(over_category({0, 0}, x).over).ok);
    }
}

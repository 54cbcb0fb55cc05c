#include "doctest.h"

#include "fwps/oracle.hpp"
#include "fwps/toric.hpp"
#include "support.hpp"

using namespace fwps;
using testsupport::Rng;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::Overflow;
}

} // namespace

TEST_SUITE("toric") {

TEST_CASE("weight vector construction") {
    WeightVector w({1, 2, 3});
    CHECK(w.values() == IntVec{1, 2, 3});
    CHECK(WeightVector::normalized({2, 2, 2}).values() == IntVec{1, 1, 1});
    CHECK(WeightVector::normalized({4, 6}).values() == IntVec{2, 3});
    CHECK_THROWS_AS(WeightVector({2, 2}), std::invalid_argument);  // gcd 2
    CHECK(code_of([] { WeightVector({0, 1, 1}); }) == Errc::NonpositiveWeight);
    CHECK(code_of([] { WeightVector::normalized({1, -2}); }) == Errc::NonpositiveWeight);
}

TEST_CASE("validate_fwps accepts the standard fans") {
    SUBCASE("P^2") {
        FwpsFan f = validate_fwps({{1, 0}, {0, 1}, {-1, -1}});
        CHECK(f.dim() == 2);
        CHECK(f.weights().values() == IntVec{1, 1, 1});
    }
    SUBCASE("index-3 fan") {
        FwpsFan f = validate_fwps({{1, -1}, {1, 2}, {-2, -1}});
        CHECK(f.weights().values() == IntVec{1, 1, 1});
    }
    SUBCASE("P^1") {
        FwpsFan f = validate_fwps({{1}, {-1}});
        CHECK(f.dim() == 1);
        CHECK(f.weights().values() == IntVec{1, 1});
    }
    SUBCASE("P(1,2,1) shape") {
        FwpsFan f = validate_fwps({{1, 0}, {0, 1}, {-1, -2}});
        CHECK(f.weights().values() == IntVec{1, 2, 1});
    }
}

TEST_CASE("validate_fwps rejections") {
    CHECK(code_of([] { validate_fwps({{2, 4}, {0, 1}, {-1, -1}}); }) == Errc::NotPrimitive);
    CHECK(code_of([] { validate_fwps({{1, 0}, {0, 1}}); }) == Errc::WrongCount);
    CHECK(code_of([] { validate_fwps({{1, 0}, {0, 1}, {-1, -1}, {1, 1}}); }) == Errc::WrongCount);
    CHECK(code_of([] { validate_fwps({{1, 0}, {-1, 0}, {1, 0}}); }) == Errc::NotSpanning);
    CHECK(code_of([] { validate_fwps({{1, 0}, {0, 1}, {-1, 0}}); }) == Errc::NoPositiveRelation);
    CHECK(code_of([] { validate_fwps({{1, 0}, {0, 1}, {1, 1}}); }) == Errc::NoPositiveRelation);
    CHECK_THROWS_AS(validate_fwps({}), std::invalid_argument);
    CHECK_THROWS_AS(validate_fwps({{1, 0}, {1}}), std::invalid_argument);
    // the NotPrimitive index names the offending ray
    try {
        validate_fwps({{1, 0}, {0, 2}, {-1, -1}});
        FAIL("expected NotPrimitive");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrimitive);
        CHECK(e.index() == 1);
    }
}

TEST_CASE("weights_from_rays matches the elimination oracle") {
    SUBCASE("pinned examples") {
        CHECK(validate_fwps({{1, 0}, {0, 1}, {-1, -2}}).weights().values() == IntVec{1, 2, 1});
        CHECK(validate_fwps({{1, 0}, {0, 1}, {-1, -1}}).weights().values() == IntVec{1, 1, 1});
        CHECK(validate_fwps({{1, -1}, {1, 2}, {-2, 1}}).weights().values() == IntVec{5, 1, 3});
    }
    SUBCASE("random fans") {
        Rng rng(201);
        for (int it = 0; it < 60; ++it) {
            int dim = static_cast<int>(rng.uniform(2, 3));
            FwpsFan f = testsupport::random_fwps(rng, dim, -9, 9);
            auto ref = oracle::kernel_by_elimination(ray_matrix(f.rays()));
            REQUIRE(ref.size() == 1);
            CHECK(sign_normalize(ref[0]) == f.weights().values());
        }
    }
}

TEST_CASE("fan_from_weights") {
    SUBCASE("P^2 from unit weights") {
        FwpsFan f = fan_from_weights(WeightVector({1, 1, 1}));
        CHECK(f.rays() == std::vector<IntVec>{{-1, -1}, {1, 0}, {0, 1}});
        CHECK(f.weights().values() == IntVec{1, 1, 1});
    }
    SUBCASE("round-trip with full lattice") {
        FwpsFan f = fan_from_weights(WeightVector({1, 1, 2}));
        CHECK(f.weights().values() == IntVec{1, 1, 2});
        CHECK(sublattice_index(ray_matrix(f.rays())) == Int(1));
    }
    SUBCASE("scaled weights give the identical fan") {
        CHECK(fan_from_weights(WeightVector::normalized({2, 2, 2})) ==
              fan_from_weights(WeightVector({1, 1, 1})));
    }
    SUBCASE("P^1") {
        FwpsFan f = fan_from_weights(WeightVector({1, 1}));
        CHECK(f.rays() == std::vector<IntVec>{{-1}, {1}});
    }
}

TEST_CASE("round-trip on well-formed weights") {
    Rng rng(202);
    for (int it = 0; it < 200; ++it) {
        int len = static_cast<int>(rng.uniform(2, 5));
        WeightVector raw = testsupport::random_weights(rng, len, 20);
        WeightVector wf = wellform_weights(raw.values());
        FwpsFan f = fan_from_weights(wf);
        CHECK(f.weights() == wf);
        CHECK(sublattice_index(ray_matrix(f.rays())) == Int(1));
    }
}

TEST_CASE("wellform_weights") {
    CHECK(wellform_weights({2, 2, 2}).values() == IntVec{1, 1, 1});
    CHECK(wellform_weights({1, 1, 1}).values() == IntVec{1, 1, 1});
    CHECK(wellform_weights({1, 2, 2}).values() == IntVec{1, 1, 1});
    CHECK(wellform_weights({6, 10, 15}).values() == IntVec{1, 1, 1});
    CHECK(wellform_weights({1, 1, 2}).values() == IntVec{1, 1, 2});

    SUBCASE("agrees with the reduction-rule oracle") {
        Rng rng(203);
        for (int it = 0; it < 300; ++it) {
            IntVec a(3);
            for (Int& x : a) x = rng.uniform(1, 20);
            CHECK(wellform_weights(a) == oracle::fletcher_wellform(a));
        }
    }
}

TEST_CASE("validation agrees with the rational-kernel criterion") {
    // accepted iff the kernel of the ray matrix is one-dimensional and
    // strictly positive somewhere on its line
    Rng rng(204);
    int accepted = 0, rejected = 0;
    for (int it = 0; it < 400; ++it) {
        std::vector<IntVec> rays;
        for (int i = 0; i < 3; ++i) {
            IntVec v{rng.uniform(-4, 4), rng.uniform(-4, 4)};
            if (v == IntVec{0, 0}) v[0] = 1;
            rays.push_back(primitivize(std::move(v)));
        }
        bool valid;
        try {
            validate_fwps(rays);
            valid = true;
            ++accepted;
        } catch (const Error&) {
            valid = false;
            ++rejected;
        }
        auto ker = oracle::kernel_by_elimination(ray_matrix(rays));
        bool expect = ker.size() == 1;
        if (expect) {
            bool all_pos = true, all_neg = true;
            for (Int c : ker.front()) {
                all_pos &= c > 0;
                all_neg &= c < 0;
            }
            expect = all_pos || all_neg;
        }
        CHECK(valid == expect);
    }
    CHECK(accepted > 0);
    CHECK(rejected > 0);
}

TEST_CASE("picard rank") {
    FwpsFan p2 = validate_fwps({{1, 0}, {0, 1}, {-1, -1}});
    CHECK(picard_rank(p2) == 1);
    CHECK(picard_rank(p2.as_fan()) == 1);
    Fan five(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}});
    CHECK(picard_rank(five) == 3);
    CHECK(code_of([] { picard_rank(Fan(2, {})); }) == Errc::Underflow);
}

TEST_CASE("fan type validation") {
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {1, 0}}), std::invalid_argument); // duplicate
    CHECK(code_of([] { Fan(2, {{2, 0}}); }) == Errc::NotPrimitive);
    std::vector<std::vector<int>> bad_cones{{0, 1}};
    CHECK_THROWS_AS(Fan(2, {{1, 0}}, bad_cones), std::invalid_argument);
    std::vector<std::vector<int>> cones{{0, 1}};
    Fan ok(2, {{1, 0}, {0, 1}}, cones);
    CHECK(ok.max_cones().has_value());
}

} // TEST_SUITE

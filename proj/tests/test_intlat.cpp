#include "doctest.h"

#include "fwps/intlat.hpp"
#include "fwps/oracle.hpp"
#include "support.hpp"

using namespace fwps;
using testsupport::Rng;

namespace {

void check_snf_contract(const IntMatrix& a) {
    SnfDecomposition s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    IntVec d = s.diagonal();
    bool seen_zero = false;
    for (size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (d[i] == 0) seen_zero = true;
        if (seen_zero) CHECK(d[i] == 0);
        if (i + 1 < d.size() && d[i] != 0 && d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
    }
    for (int i = 0; i < s.D.rows(); ++i)
        for (int j = 0; j < s.D.cols(); ++j)
            if (i != j) CHECK(s.D.at(i, j) == 0);
}

} // namespace

TEST_SUITE("intlat") {

TEST_CASE("gcd_vector") {
    CHECK(gcd_vector({6, 10, 15}) == 1);
    CHECK(gcd_vector({0, 0}) == 0);
    CHECK(gcd_vector({4, 8}) == 4);
    CHECK(gcd_vector({-4, 8}) == 4);
    CHECK(gcd_vector({7}) == 7);
}

TEST_CASE("primitivize") {
    CHECK(primitivize({2, 4}) == IntVec{1, 2});
    CHECK(primitivize({1, -1}) == IntVec{1, -1});
    CHECK(primitivize({-3, 6, -9}) == IntVec{-1, 2, -3});
    CHECK_THROWS_AS(primitivize({0, 0}), Error);
    // idempotence
    Rng rng(11);
    for (int it = 0; it < 100; ++it) {
        IntVec v(3);
        for (Int& x : v) x = rng.uniform(-20, 20);
        if (v == IntVec{0, 0, 0}) continue;
        IntVec p = primitivize(v);
        CHECK(primitivize(p) == p);
    }
}

TEST_CASE("smith normal form: pinned examples") {
    SUBCASE("identity stays put") {
        IntMatrix a = IntMatrix::identity(2);
        SnfDecomposition s = smith_normal_form(a);
        CHECK(s.D == IntMatrix::identity(2));
        CHECK(s.U == IntMatrix::identity(2));
        CHECK(s.V == IntMatrix::identity(2));
    }
    SUBCASE("columns (1,-1),(1,2)") {
        IntMatrix a = IntMatrix::from_columns({{1, -1}, {1, 2}});
        SnfDecomposition s = smith_normal_form(a);
        CHECK(s.diagonal() == IntVec{1, 3});
        check_snf_contract(a);
    }
    SUBCASE("single column (4,6)") {
        IntMatrix a = IntMatrix::from_columns({{4, 6}});
        SnfDecomposition s = smith_normal_form(a);
        CHECK(s.D.rows() == 2);
        CHECK(s.D.cols() == 1);
        CHECK(s.D.at(0, 0) == 2);
        CHECK(s.D.at(1, 0) == 0);
        check_snf_contract(a);
    }
    SUBCASE("deterministic output") {
        IntMatrix a = IntMatrix::from_rows({{3, -1, 4}, {2, 2, -5}});
        SnfDecomposition s1 = smith_normal_form(a);
        SnfDecomposition s2 = smith_normal_form(a);
        CHECK(s1.U == s2.U);
        CHECK(s1.D == s2.D);
        CHECK(s1.V == s2.V);
    }
}

TEST_CASE("smith normal form: contract on random matrices") {
    Rng rng(101);
    for (int it = 0; it < 300; ++it) {
        int rows = static_cast<int>(rng.uniform(1, 5));
        int cols = static_cast<int>(rng.uniform(1, 5));
        check_snf_contract(testsupport::random_matrix(rng, rows, cols, -20, 20));
    }
}

TEST_CASE("snf diagonal product equals |det| for square full-rank") {
    Rng rng(102);
    int done = 0;
    while (done < 100) {
        int n = static_cast<int>(rng.uniform(2, 4));
        IntMatrix a = testsupport::random_matrix(rng, n, n, -9, 9);
        BigInt det = determinant(a);
        if (det == 0) continue;
        ++done;
        SnfDecomposition s = smith_normal_form(a);
        BigInt prod = 1;
        for (Int d : s.diagonal()) prod *= d;
        CHECK(prod == abs(det));
    }
}

TEST_CASE("quotient_invariants") {
    SUBCASE("basis columns give the trivial group") {
        AbelianGroupInvariants g =
            quotient_invariants(IntMatrix::from_columns({{1, 0}, {0, 1}}));
        CHECK(g.is_trivial());
        CHECK(g.order() == Int(1));
    }
    SUBCASE("index-3 sublattice") {
        AbelianGroupInvariants g =
            quotient_invariants(IntMatrix::from_columns({{1, -1}, {1, 2}, {-2, -1}}));
        CHECK(g.torsion == IntVec{3});
        CHECK(g.free_rank == 0);
        // independent count of the three cosets
        auto brute = oracle::coset_enumeration(
            IntMatrix::from_columns({{1, -1}, {1, 2}, {-2, -1}}), 10);
        REQUIRE(brute.has_value());
        CHECK(*brute == g);
    }
    SUBCASE("one generator in rank 2") {
        AbelianGroupInvariants g = quotient_invariants(IntMatrix::from_columns({{1, 0}}));
        CHECK(g.torsion.empty());
        CHECK(g.free_rank == 1);
        CHECK_FALSE(g.order().has_value());
    }
}

TEST_CASE("quotient_invariants agrees with coset enumeration") {
    Rng rng(103);
    int done = 0;
    while (done < 150) {
        int n = static_cast<int>(rng.uniform(2, 3));
        IntMatrix a = testsupport::random_matrix(rng, n, n, -6, 6);
        BigInt det = determinant(a);
        if (det == 0 || abs(det) > 60) continue;
        ++done;
        auto brute = oracle::coset_enumeration(a, 60);
        REQUIRE(brute.has_value());
        CHECK(*brute == quotient_invariants(a));
    }
}

TEST_CASE("integer_kernel") {
    SUBCASE("rank-1 row map on Z^3") {
        std::vector<IntVec> k = integer_kernel(IntMatrix::from_rows({{1, 1, 1}}));
        REQUIRE(k.size() == 2);
        for (const IntVec& v : k) {
            CHECK(v[0] + v[1] + v[2] == 0);
            CHECK(gcd_vector(v) == 1);
        }
    }
    SUBCASE("positive relation of the index-3 rays") {
        std::vector<IntVec> k =
            integer_kernel(IntMatrix::from_columns({{1, -1}, {1, 2}, {-2, -1}}));
        REQUIRE(k.size() == 1);
        CHECK(k[0] == IntVec{1, 1, 1});
    }
    SUBCASE("injective map has empty kernel") {
        CHECK(integer_kernel(IntMatrix::identity(2)).empty());
    }
    SUBCASE("kernel vectors satisfy A x = 0 exactly") {
        Rng rng(104);
        for (int it = 0; it < 200; ++it) {
            int rows = static_cast<int>(rng.uniform(1, 3));
            int cols = static_cast<int>(rng.uniform(1, 4));
            IntMatrix a = testsupport::random_matrix(rng, rows, cols, -9, 9);
            std::vector<IntVec> k = integer_kernel(a);
            CHECK(static_cast<int>(k.size()) == a.cols() - lattice_rank(a));
            for (const IntVec& v : k) {
                for (const BigInt& y : a.apply(v)) CHECK(y == 0);
                CHECK(gcd_vector(v) == 1);
            }
        }
    }
}

TEST_CASE("kernel lattice matches the elimination oracle") {
    Rng rng(105);
    for (int it = 0; it < 150; ++it) {
        int rows = static_cast<int>(rng.uniform(2, 3));
        int cols = rows + 1;
        IntMatrix a = testsupport::random_matrix(rng, rows, cols, -9, 9);
        std::vector<IntVec> mine = integer_kernel(a);
        std::vector<IntVec> ref = oracle::kernel_by_elimination(a);
        REQUIRE(mine.size() == ref.size());
        for (const IntVec& v : mine) CHECK(oracle::in_lattice(ref, v));
        for (const IntVec& v : ref) CHECK(oracle::in_lattice(mine, v));
    }
}

TEST_CASE("sublattice_index") {
    CHECK(sublattice_index(IntMatrix::from_columns({{1, -1}, {1, 2}, {-2, -1}})) == Int(3));
    CHECK(sublattice_index(IntMatrix::from_columns({{1, 0}, {0, 1}})) == Int(1));
    CHECK(sublattice_index(IntMatrix::from_columns({{2, 0}, {0, 2}})) == Int(4));
    CHECK_FALSE(sublattice_index(IntMatrix::from_columns({{1, 0}})).has_value());
}

TEST_CASE("hnf column basis") {
    SUBCASE("pinned index-3 lattice") {
        IntMatrix h = hnf_column_basis(IntMatrix::from_columns({{1, -1}, {1, 2}, {-2, -1}}));
        CHECK(h == IntMatrix::from_rows({{3, 2}, {0, 1}}));
    }
    SUBCASE("single non-primitive generator is kept verbatim") {
        IntMatrix h = hnf_column_basis(IntMatrix::from_columns({{4, 6}}));
        CHECK(h == IntMatrix::from_rows({{4}, {6}}));
    }
    SUBCASE("spans exactly the input lattice") {
        Rng rng(106);
        int done = 0;
        while (done < 120) {
            int rows = static_cast<int>(rng.uniform(1, 3));
            int cols = static_cast<int>(rng.uniform(rows, 4));
            IntMatrix a = testsupport::random_matrix(rng, rows, cols, -9, 9);
            // full-row-rank inputs only; the span tester needs a finite index
            if (!oracle::in_column_span(a, IntVec(rows, 0)).has_value()) continue;
            ++done;
            IntMatrix h = hnf_column_basis(a);
            std::vector<IntVec> hb;
            for (int j = 0; j < h.cols(); ++j) hb.push_back(narrow_vec(h.column(j)));
            for (int j = 0; j < cols; ++j)
                CHECK(oracle::in_lattice(hb, narrow_vec(a.column(j))));
            for (const IntVec& v : hb) {
                auto inside = oracle::in_column_span(a, v);
                REQUIRE(inside.has_value());
                CHECK(*inside);
            }
        }
    }
}

TEST_CASE("overflow at the 64-bit boundaries is reported, not wrapped") {
    Int big = Int(1) << 40;
    // the quotient group Z^2 / <(2^40,0),(0,2^40)> has order 2^80
    IntMatrix a = IntMatrix::from_columns({{big, 0}, {0, big}});
    CHECK_THROWS_AS(sublattice_index(a), Error);
    CHECK_THROWS_AS(checked::mul(INT64_MAX / 2 + 1, 3), Error);
    CHECK(narrow(BigInt(7)) == 7);
    CHECK_THROWS_AS(narrow(BigInt(1) << 64), Error);
}

TEST_CASE("determinant") {
    CHECK(determinant(IntMatrix::identity(3)) == 1);
    CHECK(determinant(IntMatrix::from_rows({{1, 1}, {-1, 2}})) == 3);
    CHECK(determinant(IntMatrix::from_rows({{2, 0}, {0, 2}})) == 4);
    CHECK(determinant(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
    // cross-check against cofactor expansion
    Rng rng(107);
    for (int it = 0; it < 100; ++it) {
        int n = static_cast<int>(rng.uniform(1, 4));
        IntMatrix a = testsupport::random_matrix(rng, n, n, -9, 9);
        std::vector<IntVec> rows;
        for (int i = 0; i < n; ++i) rows.push_back(narrow_vec(a.row(i)));
        CHECK(determinant(a) == oracle::det_laplace(rows));
    }
}

} // TEST_SUITE

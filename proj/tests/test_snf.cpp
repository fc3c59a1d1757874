#include "catlim/snf.hpp"

#include "test_support.hpp"

#include "doctest.h"

using namespace catlim;
using testing::Rng;

namespace {

void check_postconditions(const IMat& a, const SmithDecomposition<Int>& s) {
    CHECK(is_unimodular<Int>(s.U));
    CHECK(is_unimodular<Int>(s.V));
    CHECK(s.U * a * s.V == s.D);
    for (Index i = 0; i < s.D.rows(); ++i)
        for (Index j = 0; j < s.D.cols(); ++j)
            if (i != j) CHECK(s.D(i, j) == Int(0));
    for (Index i = 0; i < s.rank; ++i) {
        CHECK(s.D(i, i) > Int(0));
        if (i + 1 < s.rank) CHECK(s.D(i + 1, i + 1) % s.D(i, i) == Int(0));
    }
    Index mn = std::min(s.D.rows(), s.D.cols());
    for (Index i = s.rank; i < mn; ++i) CHECK(s.D(i, i) == Int(0));
}

}  // namespace

TEST_CASE("smith normal form of the zero matrix") {
    IMat z = IMat::Zero(3, 2);
    auto s = smith_normal_form<Int>(z);
    CHECK(s.rank == 0);
    CHECK(is_zero_matrix<Int>(s.D));
    check_postconditions(z, s);
}

TEST_CASE("smith normal form of the identity") {
    IMat id = IMat::Identity(4, 4);
    auto s = smith_normal_form<Int>(id);
    CHECK(s.rank == 4);
    CHECK(s.D == id);
    check_postconditions(id, s);
}

TEST_CASE("smith normal form of [[2,4],[6,8]]") {
    IMat a = imat({{2, 4}, {6, 8}});
    // Oracle: gcd of entries is 2, gcd of 2x2 minors is 8, so factors are 2, 4.
    auto oracle = testing::invariant_factors_by_minor_gcd(a);
    REQUIRE(oracle.size() == 2);
    CHECK(oracle[0] == Int(2));
    CHECK(oracle[1] == Int(4));
    auto s = smith_normal_form<Int>(a);
    REQUIRE(s.rank == 2);
    CHECK(s.D(0, 0) == Int(2));
    CHECK(s.D(1, 1) == Int(4));
    check_postconditions(a, s);
}

TEST_CASE("smith normal form postconditions and minor-gcd oracle on random matrices") {
    Rng rng(20240701);
    for (int trial = 0; trial < 250; ++trial) {
        Index rows = rng.uniform(0, 5), cols = rng.uniform(0, 5);
        IMat a = testing::random_matrix(rng, rows, cols, -9, 9);
        auto s = smith_normal_form<Int>(a);
        check_postconditions(a, s);
        if (rows > 0 && cols > 0 && rows <= 4 && cols <= 4) {
            auto expect = testing::invariant_factors_by_minor_gcd(a);
            auto got = s.invariant_factors();
            CHECK(expect == got);
        }
    }
}

TEST_CASE("kernel basis spans the kernel and is full rank") {
    Rng rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        Index rows = rng.uniform(1, 5), cols = rng.uniform(1, 5);
        IMat a = testing::random_matrix(rng, rows, cols, -4, 4);
        IMat k = kernel_basis<Int>(a);
        CHECK(is_zero_matrix<Int>(IMat(a * k)));
        CHECK(matrix_rank<Int>(k) == k.cols());
        CHECK(matrix_rank<Int>(a) + k.cols() == cols);
    }
}

TEST_CASE("exact solve recovers solvable systems and rejects unsolvable ones") {
    Rng rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        Index rows = rng.uniform(1, 5), cols = rng.uniform(1, 5), rhs = rng.uniform(1, 3);
        IMat a = testing::random_matrix(rng, rows, cols, -5, 5);
        IMat x = testing::random_matrix(rng, cols, rhs, -5, 5);
        IMat b = a * x;
        auto sol = solve_exact<Int>(a, b);
        REQUIRE(sol.has_value());
        CHECK(IMat(a * *sol) == b);
    }
    IMat two = imat({{2}});
    IMat one = imat({{1}});
    CHECK(!solve_exact<Int>(two, one).has_value());
    CHECK(solve_exact<Int>(two, imat({{6}})).has_value());
}

TEST_CASE("determinant is exact on unimodular products") {
    Rng rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        auto u = testing::random_unimodular(rng, rng.uniform(1, 5));
        CHECK(IMat(u.P * u.Pinv) == IMat(IMat::Identity(u.P.rows(), u.P.cols())));
        CHECK(is_unimodular<Int>(u.P));
    }
}

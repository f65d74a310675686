#include <doctest.h>

#include "test_util.hpp"

using namespace braidgal;
using testutil::compose_oracle;
using testutil::random_map;

TEST_CASE("composition matches the triple-loop oracle") {
    std::mt19937_64 rng(0xc0217);
    for (const Field &f : {Field::rational(), Field::prime(7)}) {
        LinMap i2 = LinMap::identity(f, 2);
        CHECK(i2 * i2 == i2);
        LinMap flip = LinMap::from_rows(f, {{0, 1}, {1, 0}});
        CHECK(flip * flip == i2);
        for (int trial = 0; trial < 25; ++trial) {
            LinMap a = random_map(f, 3, 4, rng);
            LinMap b = random_map(f, 4, 2, rng);
            CHECK(a * b == compose_oracle(a, b));
        }
        LinMap a = random_map(f, 3, 4, rng);
        CHECK_THROWS_AS((void)(a * a), DimensionMismatch);
    }
}

TEST_CASE("composition is associative") {
    std::mt19937_64 rng(0xa550c);
    Field f = Field::rational();
    for (int trial = 0; trial < 10; ++trial) {
        LinMap a = random_map(f, 2, 3, rng);
        LinMap b = random_map(f, 3, 4, rng);
        LinMap c = random_map(f, 4, 2, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("kron identities and basis enumeration") {
    Field f = Field::rational();
    CHECK(kron(LinMap::identity(f, 2), LinMap::identity(f, 3)) == LinMap::identity(f, 6));

    // kron(swap, id) sends basis (i,j),k -> (j,i),k; enumerate all inputs
    LinMap s = swap_map(f, 2, 2);
    LinMap m = kron(s, LinMap::identity(f, 2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                int in = (i * 2 + j) * 2 + k;
                int out = (j * 2 + i) * 2 + k;
                for (int r = 0; r < 8; ++r)
                    CHECK(m.at(r, in) == Scalar::of(f, r == out ? 1 : 0));
            }
}

TEST_CASE("kron interchange with composition") {
    std::mt19937_64 rng(0x1f2e3);
    for (const Field &f : {Field::rational(), Field::prime(5)}) {
        for (int trial = 0; trial < 10; ++trial) {
            LinMap a = random_map(f, 2, 2, rng), b = random_map(f, 2, 2, rng);
            LinMap c = random_map(f, 2, 2, rng), d = random_map(f, 2, 2, rng);
            CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
        }
    }
}

TEST_CASE("kernel and cokernel") {
    Field f = Field::rational();

    LinMap zero2 = LinMap::zero(f, 2, 2);
    CHECK(*kernel_basis(zero2) == LinMap::identity(f, 2));
    CHECK(*cokernel_projection(zero2) == LinMap::identity(f, 2));
    CHECK_FALSE(kernel_basis(LinMap::identity(f, 2)).has_value());
    CHECK_FALSE(cokernel_projection(LinMap::identity(f, 2)).has_value());

    LinMap row = LinMap::from_rows(f, {{1, 1}});
    LinMap k = *kernel_basis(row);
    CHECK(k.cols() == 1);
    CHECK((row * k).is_zero());
    CHECK(rank(k) == 1);

    LinMap col = LinMap::from_rows(f, {{1}, {1}});
    LinMap q = *cokernel_projection(col);
    CHECK(q.rows() == 1);
    CHECK((q * col).is_zero());
    CHECK(rank(q) == 1);
}

TEST_CASE("rank identities on random matrices") {
    std::mt19937_64 rng(0xfeed5);
    for (const Field &f : {Field::rational(), Field::prime(7)}) {
        for (int trial = 0; trial < 30; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 5);
            int cols = 1 + static_cast<int>(rng() % 5);
            LinMap a = random_map(f, rows, cols, rng, 3);
            int r = rank(a);
            auto k = kernel_basis(a);
            int kdim = k ? k->cols() : 0;
            CHECK(kdim + r == cols);
            if (k) {
                CHECK((a * *k).is_zero());
                CHECK(rank(*k) == kdim);
            }
            auto q = cokernel_projection(a);
            int qdim = q ? q->rows() : 0;
            CHECK(qdim + r == rows);
            if (q) {
                CHECK((*q * a).is_zero());
                CHECK(rank(*q) == qdim);
            }
        }
    }
}

TEST_CASE("inversion") {
    Field f11 = Field::prime(11);
    CHECK(invert(LinMap::identity(f11, 4)) == LinMap::identity(f11, 4));
    LinMap flip = LinMap::from_rows(f11, {{0, 1}, {1, 0}});
    CHECK(invert(flip) == flip);

    std::mt19937_64 rng(0xdead1);
    int found = 0;
    while (found < 5) {
        LinMap a = random_map(f11, 5, 5, rng);
        auto inv = try_invert(a);
        if (!inv)
            continue;
        ++found;
        CHECK(a * *inv == LinMap::identity(f11, 5));
        CHECK(*inv * a == LinMap::identity(f11, 5));
    }
    LinMap sing = LinMap::from_rows(f11, {{1, 2}, {2, 4}});
    CHECK_THROWS_AS(invert(sing), NotInvertible);
    CHECK_THROWS_AS(invert(LinMap::zero(f11, 2, 3)), DimensionMismatch);
}

TEST_CASE("factorization through a mono") {
    Field f = Field::rational();
    std::mt19937_64 rng(0xf00d);

    LinMap any = random_map(f, 2, 3, rng);
    CHECK(solve_factor_through_mono(LinMap::identity(f, 2), any) == any);

    LinMap incl = LinMap::from_rows(f, {{1}, {0}}); // first coordinate into k^2
    LinMap into = LinMap::from_rows(f, {{1}, {0}});
    CHECK(solve_factor_through_mono(incl, into) == LinMap::identity(f, 1));

    LinMap outside = LinMap::from_rows(f, {{0}, {1}});
    CHECK_THROWS_AS(solve_factor_through_mono(incl, outside), NotFactorable);

    // p g == f exactly whenever the solve succeeds
    for (int trial = 0; trial < 10; ++trial) {
        LinMap p = random_map(f, 4, 2, rng);
        if (rank(p) != 2)
            continue;
        LinMap g = random_map(f, 2, 3, rng);
        LinMap back = solve_factor_through_mono(p, p * g);
        CHECK(back == g);
        CHECK(p * back == p * g);
    }
}

TEST_CASE("factorization through an epi") {
    Field f = Field::prime(5);
    std::mt19937_64 rng(0xe91);
    for (int trial = 0; trial < 10; ++trial) {
        LinMap q = random_map(f, 2, 4, rng);
        if (rank(q) != 2)
            continue;
        LinMap g = random_map(f, 3, 2, rng);
        CHECK(solve_factor_through_epi(q, g * q) == g);
    }
    LinMap q = LinMap::from_rows(f, {{1, 0}});
    LinMap bad = LinMap::from_rows(f, {{0, 1}});
    CHECK_THROWS_AS(solve_factor_through_epi(q, bad), NotWellDefined);
}

TEST_CASE("leg permutations agree with direct index shuffling") {
    Field f = Field::rational();
    std::vector<int> dims{2, 3, 2};
    LinMap p = leg_permutation(f, dims, {2, 0, 1});
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 2; ++c) {
                int in = (a * 3 + b) * 2 + c;
                int out = (c * 2 + a) * 3 + b;
                CHECK(p.at(out, in).is_one());
            }
    CHECK(rank(p) == 12);
}

TEST_CASE("zero-dimensional spaces are rejected") {
    Field f = Field::rational();
    CHECK_THROWS_AS(LinMap(f, 0, 2), DimensionMismatch);
    CHECK_THROWS_AS(LinMap(f, 2, 0), DimensionMismatch);
}

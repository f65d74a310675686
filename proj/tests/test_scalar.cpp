#include <doctest.h>

#include "braidgal/scalar.hpp"

using namespace braidgal;

TEST_CASE("rationals are canonical and parse round-trips") {
    Field q = Field::rational();
    Scalar a = Scalar::parse(q, "6/8");
    CHECK(a.str() == "3/4");
    Scalar b = Scalar::parse(q, "-3/-4");
    CHECK(b.str() == "3/4");
    CHECK(a == b);
    CHECK(Scalar::parse(q, "-2/4").str() == "-1/2");
    CHECK((a + b).str() == "3/2");
    CHECK((a * Scalar::of(q, 4)).str() == "3");
    CHECK((a - a).is_zero());
    CHECK(Scalar::parse(q, a.str()) == a);
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
    CHECK_THROWS_AS(Scalar::of(q, 0).inverse(), NotInvertible);
}

TEST_CASE("prime field arithmetic") {
    Field f7 = Field::prime(7);
    Scalar a = Scalar::of(f7, 5), b = Scalar::of(f7, 4);
    CHECK((a * b).str() == "6");
    CHECK((a + b).str() == "2");
    CHECK((-a).str() == "2");
    CHECK((a * a.inverse()).is_one());
    CHECK(Scalar::of(f7, -1) == Scalar::of(f7, 6));
    CHECK(Scalar::parse(f7, "23").str() == "2");
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK_THROWS_AS(Field::prime(1), Error);
    CHECK(Field::prime(2).characteristic() == 2);
}

TEST_CASE("fields do not mix") {
    Scalar a = Scalar::of(Field::rational(), 1);
    Scalar b = Scalar::of(Field::prime(5), 1);
    CHECK_THROWS_AS((void)(a + b), FieldMismatch);
    CHECK(a != b);
}

TEST_CASE("prime testing covers the interesting range") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(5));
    CHECK(is_prime_u64(7));
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(1000001)); // 101 * 9901
}

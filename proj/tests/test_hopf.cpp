#include <doctest.h>

#include "braidgal/examples.hpp"
#include "test_util.hpp"

using namespace braidgal;

TEST_CASE("group algebras and the 4-dimensional Hopf algebra pass the battery") {
    for (const Field &f : {Field::rational(), Field::prime(5)}) {
        BaseHopf D = trivial_base(f);
        CHECK(check_hopf(D, group_algebra(D, f, cyclic_table(2))).all_pass());
        CHECK(check_hopf(D, group_algebra(D, f, cyclic_table(4))).all_pass());
        CHECK(check_hopf(D, sweedler_h4(D, f)).all_pass());
    }
    CHECK_THROWS_AS(sweedler_h4(trivial_base(Field::prime(2)), Field::prime(2)), BadCharacteristic);
}

TEST_CASE("the antipode of the 4-dimensional Hopf algebra has order 4") {
    Field f = Field::rational();
    BaseHopf D = trivial_base(f);
    HopfAlgebra h4 = sweedler_h4(D, f);
    const LinMap &S = h4.antipode;
    LinMap S2 = S * S;
    CHECK(S2 != LinMap::identity(f, 4));
    CHECK(S2.at(2, 2) == Scalar::of(f, -1)); // S^2(x) = -x
    CHECK(S2 * S2 == LinMap::identity(f, 4));
}

TEST_CASE("antipode of a cyclic group algebra is the inversion permutation") {
    Field f = Field::rational();
    BaseHopf D = trivial_base(f);
    HopfAlgebra c4 = group_algebra(D, f, cyclic_table(4));
    const LinMap &S = c4.antipode;
    CHECK(S.at(0, 0).is_one());
    CHECK(S.at(3, 1).is_one()); // S(g) = g^3
    CHECK(S * S == LinMap::identity(f, 4));
}

TEST_CASE("the exterior line is Hopf with the YD braiding and not with the flip") {
    for (const Field &f : {Field::rational(), Field::prime(5)}) {
        SuperLine sl = super_line_over_c2(f);
        CHECK(check_yd_object(sl.D, sl.H.algebra.object).all_pass());
        CHECK(check_hopf(sl.D, sl.H).all_pass());

        LinMap flip = swap_map(f, 2, 2);
        CheckReport swapped = check_hopf(sl.D, sl.H, &flip);
        CHECK_FALSE(swapped.all_pass());
        // exactly the braided bialgebra law breaks
        for (const auto &item : swapped.items) {
            if (item.name == "bialg.braided_compat")
                CHECK_FALSE(item.pass);
            else
                CHECK(item.pass);
        }
    }
}

TEST_CASE("a perturbed multiplication table fails associativity with an index") {
    Field f = Field::rational();
    BaseHopf D = trivial_base(f);
    HopfAlgebra c4 = group_algebra(D, f, cyclic_table(4));
    CHECK(check_algebra(D, c4.algebra).all_pass());
    Algebra broken = c4.algebra;
    broken.mul.set(2, 1 * 4 + 1, Scalar::of(f, 0)); // g*g = g^3 instead of g^2
    broken.mul.set(3, 1 * 4 + 1, Scalar::of(f, 1));
    CheckReport rep = check_algebra(D, broken);
    CHECK_FALSE(rep.find("alg.assoc")->pass);
    // first failing triple is (g, g, g^2), flattened to (1*4+1)*4+2
    CHECK(rep.find("alg.assoc")->detail == "differs on domain basis index 22");
}

TEST_CASE("H is a comodule algebra over itself") {
    Field f = Field::rational();
    BaseHopf D = trivial_base(f);
    HopfAlgebra h4 = sweedler_h4(D, f);
    ComoduleAlgebra over_itself{h4.algebra, h4, h4.comul};
    CHECK(check_comodule_algebra(D, over_itself).all_pass());

    // breaking coassociativity of psi is caught
    ComoduleAlgebra broken = over_itself;
    broken.psi.set(0, 1, Scalar::of(f, 1));
    CHECK_FALSE(check_comodule_algebra(D, broken).all_pass());
}

TEST_CASE("convolution unit and the antipode as convolution inverse") {
    Field f = Field::rational();
    BaseHopf D = trivial_base(f);
    HopfAlgebra h4 = sweedler_h4(D, f);
    Coalgebra ch = coalgebra_of(h4);
    LinMap id4 = LinMap::identity(f, 4);
    LinMap unit = convolution_unit(ch, h4.algebra);

    std::mt19937_64 rng(0xabc1);
    for (int trial = 0; trial < 5; ++trial) {
        LinMap g = testutil::random_map(f, 4, 4, rng);
        CHECK(convolution(g, unit, ch, h4.algebra) == g);
        CHECK(convolution(unit, g, ch, h4.algebra) == g);
    }

    CHECK(convolution(id4, h4.antipode, ch, h4.algebra) == unit);
    CHECK(convolution_inverse(id4, ch, h4.algebra) == h4.antipode);
}

TEST_CASE("convolution is associative for arbitrary linear maps") {
    Field f = Field::prime(7);
    BaseHopf D = trivial_base(f);
    HopfAlgebra h4 = sweedler_h4(D, f);
    Coalgebra ch = coalgebra_of(h4);
    std::mt19937_64 rng(0x777);
    for (int trial = 0; trial < 10; ++trial) {
        LinMap a = testutil::random_map(f, 4, 4, rng);
        LinMap b = testutil::random_map(f, 4, 4, rng);
        LinMap c = testutil::random_map(f, 4, 4, rng);
        CHECK(convolution(convolution(a, b, ch, h4.algebra), c, ch, h4.algebra) ==
              convolution(a, convolution(b, c, ch, h4.algebra), ch, h4.algebra));
    }
}

TEST_CASE("convolution inverse failure is detected") {
    Field f = Field::prime(5);
    BaseHopf D = trivial_base(f);
    HopfAlgebra c2 = group_algebra(D, f, cyclic_table(2));
    Coalgebra ch = coalgebra_of(c2);
    // vanishing on the group-like g can never be convolution-inverted
    LinMap bad = LinMap::zero(f, 2, 2);
    bad.set(0, 0, Scalar::of(f, 1));
    CHECK_FALSE(try_convolution_inverse(bad, ch, c2.algebra).has_value());
    CHECK_THROWS_AS(convolution_inverse(bad, ch, c2.algebra), NotConvInvertible);
}

TEST_CASE("braided tensor coalgebra is a coalgebra") {
    Field f = Field::rational();
    SuperLine sl = super_line_over_c2(f);
    Coalgebra ch = coalgebra_of(sl.H);
    Coalgebra chh =
        tensor_coalgebra(f, ch, ch, braiding(sl.D, sl.H.algebra.object, sl.H.algebra.object));
    LinMap id = LinMap::identity(f, 4);
    CHECK(kron(chh.comul, id) * chh.comul == kron(id, chh.comul) * chh.comul);
    CHECK(kron(chh.counit, id) * chh.comul == id);
    CHECK(kron(id, chh.counit) * chh.comul == id);
}

#include <doctest.h>

#include "braidgal/examples.hpp"
#include "test_util.hpp"

using namespace braidgal;

TEST_CASE("group algebras satisfy the ordinary Hopf axioms") {
    for (const Field &f : {Field::rational(), Field::prime(5)}) {
        CHECK(check_base_hopf(trivial_base(f)).all_pass());
        CHECK(check_base_hopf(group_base_hopf(f, cyclic_table(2))).all_pass());
        CHECK(check_base_hopf(group_base_hopf(f, cyclic_table(4))).all_pass());
    }
}

TEST_CASE("group validation rejects non-groups") {
    Field f = Field::rational();
    CayleyTable bad{{0, 1}, {1, 1}}; // 1*1 = 1 has no inverse... and no associativity either
    CHECK_THROWS_AS(group_base_hopf(f, bad), NotAGroup);
    CayleyTable no_assoc{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
    CHECK_THROWS_AS(group_base_hopf(f, no_assoc), NotAGroup);
}

TEST_CASE("objects over the trivial base always pass and braid by the flip") {
    Field f = Field::rational();
    BaseHopf D = trivial_base(f);
    LinMap id2 = LinMap::identity(f, 2);
    LinMap id3 = LinMap::identity(f, 3);
    YDObject V{2, kron(D.counit, id2), kron(D.unit, id2)};
    YDObject W{3, kron(D.counit, id3), kron(D.unit, id3)};
    CHECK(check_yd_object(D, V).all_pass());
    CHECK(check_yd_object(D, W).all_pass());
    CHECK(check_yd_object(D, trivial_object(D)).all_pass());
    CHECK(braiding(D, V, W) == swap_map(f, 2, 3));
    CHECK(braiding(D, W, V) == swap_map(f, 3, 2));
    CHECK(inverse_braiding(D, V, W) == swap_map(f, 3, 2));
}

TEST_CASE("the sign line over kC2 is a YD module and braids with a sign") {
    Field f = Field::rational();
    SuperLine sl = super_line_over_c2(f);
    const YDObject &V = sl.H.algebra.object;
    CHECK(check_yd_object(sl.D, V).all_pass());

    LinMap c = braiding(sl.D, V, V);
    // basis 0:1, 1:x; index 3 = x (x) x must pick up the sign
    CHECK(c.at(3, 3) == Scalar::of(f, -1));
    CHECK(c.at(1, 2).is_one()); // 1 (x) x -> x (x) 1... flipped legs
    CHECK(c.at(2, 1).is_one());
    CHECK(c.at(0, 0).is_one());

    LinMap cinv = inverse_braiding(sl.D, V, V);
    CHECK(cinv * c == LinMap::identity(f, 4));
    CHECK(c * cinv == LinMap::identity(f, 4));
    CHECK(cinv.at(3, 3) == Scalar::of(f, -1));
}

TEST_CASE("a character with trivial grading is still YD over kC2") {
    // the base is cocommutative, so any module with trivial coaction is
    // compatible; the sign action alone cannot break the axiom
    Field f = Field::rational();
    BaseHopf D = group_base_hopf(f, cyclic_table(2));
    LinMap action = LinMap::zero(f, 1, 2);
    action.set(0, 0, Scalar::of(f, 1));
    action.set(0, 1, Scalar::of(f, -1));
    YDObject signline{1, action, kron(D.unit, LinMap::identity(f, 1))};
    CHECK(check_yd_object(D, signline).all_pass());
}

TEST_CASE("broken YD compatibility is detected with an index") {
    Field f = Field::rational();
    BaseHopf D = group_base_hopf(f, cyclic_table(2));
    // a valid module and a valid comodule whose action swaps the grading:
    // over an abelian base the compatibility forces the action to preserve
    // degrees, so it must fail on the input g (x) v0 (basis index 2)
    LinMap action = LinMap::zero(f, 2, 4);
    action.set(0, 0, Scalar::of(f, 1));
    action.set(1, 1, Scalar::of(f, 1));
    action.set(1, 2, Scalar::of(f, 1)); // g.v0 = v1
    action.set(0, 3, Scalar::of(f, 1)); // g.v1 = v0
    LinMap coaction = LinMap::zero(f, 4, 2);
    coaction.set(0, 0, Scalar::of(f, 1)); // v0 even
    coaction.set(3, 1, Scalar::of(f, 1)); // v1 odd
    YDObject bad{2, action, coaction};
    CheckReport rep = check_yd_object(D, bad);
    CHECK(rep.find("yd.module_assoc")->pass);
    CHECK(rep.find("yd.comodule_coassoc")->pass);
    const CheckItem *fail = rep.first_failure();
    REQUIRE(fail != nullptr);
    CHECK(fail->name == "yd.compatibility");
    CHECK(fail->detail == "differs on domain basis index 2");
}

TEST_CASE("tensor objects: unit object, dimensions, strict associativity") {
    Field f = Field::rational();
    SuperLine sl = super_line_over_c2(f);
    const YDObject &V = sl.H.algebra.object;
    YDObject I = trivial_object(sl.D);

    YDObject VI = tensor_object(sl.D, V, I);
    CHECK(VI.dim == V.dim);
    CHECK(VI.action == V.action);
    CHECK(VI.coaction == V.coaction);
    YDObject IV = tensor_object(sl.D, I, V);
    CHECK(IV.action == V.action);

    YDObject VV = tensor_object(sl.D, V, V);
    CHECK(VV.dim == 4);
    CHECK(check_yd_object(sl.D, VV).all_pass());

    YDObject l = tensor_object(sl.D, VV, V);
    YDObject r = tensor_object(sl.D, V, VV);
    CHECK(l.dim == r.dim);
    CHECK(l.action == r.action);
    CHECK(l.coaction == r.coaction);
}

TEST_CASE("hexagon identities") {
    Field f = Field::rational();
    SuperLine sl = super_line_over_c2(f);
    const YDObject &V = sl.H.algebra.object;
    YDObject VV = tensor_object(sl.D, V, V);
    std::vector<YDObject> objs{V, VV, trivial_object(sl.D)};
    for (const YDObject &U : objs)
        for (const YDObject &X : objs)
            for (const YDObject &W : objs) {
                LinMap idX = LinMap::identity(f, X.dim);
                LinMap idW = LinMap::identity(f, W.dim);
                LinMap idU = LinMap::identity(f, U.dim);
                YDObject UX = tensor_object(sl.D, U, X);
                YDObject XW = tensor_object(sl.D, X, W);
                CHECK(braiding(sl.D, UX, W) ==
                      kron(braiding(sl.D, U, W), idX) * kron(idU, braiding(sl.D, X, W)));
                CHECK(braiding(sl.D, U, XW) ==
                      kron(idX, braiding(sl.D, U, W)) * kron(braiding(sl.D, U, X), idW));
            }
}

TEST_CASE("braiding is natural in both legs") {
    Field f = Field::rational();
    SuperLine sl = super_line_over_c2(f);
    const YDObject &H = sl.H.algebra.object;
    YDObject HH = tensor_object(sl.D, H, H);
    struct Arrow {
        const YDObject &dom;
        const YDObject &cod;
        LinMap map;
    };
    std::vector<Arrow> arrows{{H, H, sl.H.antipode},
                              {HH, H, sl.H.algebra.mul},
                              {H, HH, sl.H.comul},
                              {H, H, LinMap::identity(f, 2)}};
    for (const Arrow &a : arrows)
        for (const Arrow &b : arrows) {
            LinMap lhs = braiding(sl.D, a.cod, b.cod) * kron(a.map, b.map);
            LinMap rhs = kron(b.map, a.map) * braiding(sl.D, a.dom, b.dom);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("morphism membership") {
    Field f7 = Field::prime(7);
    SuperLine sl = super_line_over_c2(f7);
    const YDObject &V = sl.H.algebra.object;
    CHECK(check_morphism_in_C(sl.D, V, V, LinMap::identity(f7, 2)).all_pass());
    YDObject VV = tensor_object(sl.D, V, V);
    CHECK(check_morphism_in_C(sl.D, VV, VV, braiding(sl.D, V, V)).all_pass());

    // mixing the even and odd lines is not equivariant
    LinMap bad = LinMap::from_rows(f7, {{0, 1}, {1, 0}});
    CheckReport rep = check_morphism_in_C(sl.D, V, V, bad);
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.first_failure()->detail.find("basis index") != std::string::npos);

    std::mt19937_64 rng(0x5eed);
    int rejected = 0;
    for (int trial = 0; trial < 20; ++trial)
        if (!check_morphism_in_C(sl.D, V, V, testutil::random_map(f7, 2, 2, rng)).all_pass())
            ++rejected;
    CHECK(rejected > 10);
}

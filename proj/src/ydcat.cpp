#include "braidgal/ydcat.hpp"

namespace braidgal {

BaseHopf trivial_base(const Field &f) {
    LinMap one = LinMap::identity(f, 1);
    return BaseHopf{1, one, one, one, one, one, one};
}

YDObject trivial_object(const BaseHopf &D) {
    // action = counit, coaction = unit (both reindexed through dim-1 legs)
    return YDObject{1, D.counit, D.unit};
}

CheckReport check_base_hopf(const BaseHopf &D) {
    const Field &f = D.mul.field();
    int n = D.dim;
    LinMap id = LinMap::identity(f, n);
    CheckReport rep;
    check_equal(rep, "base.assoc", D.mul * kron(D.mul, id), D.mul * kron(id, D.mul));
    check_equal(rep, "base.unit_left", D.mul * kron(D.unit, id), id);
    check_equal(rep, "base.unit_right", D.mul * kron(id, D.unit), id);
    check_equal(rep, "base.coassoc", kron(D.comul, id) * D.comul, kron(id, D.comul) * D.comul);
    check_equal(rep, "base.counit_left", kron(D.counit, id) * D.comul, id);
    check_equal(rep, "base.counit_right", kron(id, D.counit) * D.comul, id);
    // D is an ordinary Hopf algebra, so its own bialgebra law uses the flip
    check_equal(rep, "base.bialgebra", D.comul * D.mul,
                kron(D.mul, D.mul) * kron(id, swap_map(f, n, n), id) * kron(D.comul, D.comul));
    check_equal(rep, "base.counit_mult", D.counit * D.mul, kron(D.counit, D.counit));
    check_equal(rep, "base.comul_unit", D.comul * D.unit, kron(D.unit, D.unit));
    LinMap eta_eps = D.unit * D.counit;
    check_equal(rep, "base.antipode_left", D.mul * kron(D.antipode, id) * D.comul, eta_eps);
    check_equal(rep, "base.antipode_right", D.mul * kron(id, D.antipode) * D.comul, eta_eps);
    check_equal(rep, "base.antipode_inv", D.antipode_inv * D.antipode, id);
    check_equal(rep, "base.antipode_inv_right", D.antipode * D.antipode_inv, id);
    return rep;
}

CheckReport check_yd_object(const BaseHopf &D, const YDObject &V) {
    const Field &f = D.mul.field();
    int n = D.dim, v = V.dim;
    if (V.action.rows() != v || V.action.cols() != n * v || V.coaction.rows() != n * v || V.coaction.cols() != v)
        throw DimensionMismatch("YD structure maps have wrong shape");
    LinMap idD = LinMap::identity(f, n);
    LinMap idV = LinMap::identity(f, v);
    CheckReport rep;
    check_equal(rep, "yd.module_assoc", V.action * kron(D.mul, idV), V.action * kron(idD, V.action));
    check_equal(rep, "yd.module_unit", V.action * kron(D.unit, idV), idV);
    check_equal(rep, "yd.comodule_coassoc", kron(D.comul, idV) * V.coaction, kron(idD, V.coaction) * V.coaction);
    check_equal(rep, "yd.comodule_counit", kron(D.counit, idV) * V.coaction, idV);

    // delta(h.v) = h1 v(-1) S(h3) (x) h2.v(0)
    LinMap lhs = V.coaction * V.action;
    LinMap comul2 = kron(D.comul, idD) * D.comul; // D -> D (x) D (x) D
    LinMap stage = kron(comul2, V.coaction);      // legs [h1,h2,h3,v-1,v0]
    stage = kron(idD, idD, D.antipode, idD, idV) * stage;
    stage = leg_permutation(f, {n, n, n, n, v}, {0, 3, 2, 1, 4}) * stage; // [h1,v-1,Sh3,h2,v0]
    LinMap rhs = kron(D.mul, idD, idD, idV) * stage;                     // [h1 v-1, Sh3, h2, v0]
    rhs = kron(D.mul, idD, idV) * rhs;                                   // [h1 v-1 Sh3, h2, v0]
    rhs = kron(idD, V.action) * rhs;
    check_equal(rep, "yd.compatibility", lhs, rhs);
    return rep;
}

YDObject tensor_object(const BaseHopf &D, const YDObject &V, const YDObject &W) {
    const Field &f = D.mul.field();
    int n = D.dim;
    LinMap idD = LinMap::identity(f, n);
    LinMap idV = LinMap::identity(f, V.dim);
    LinMap idW = LinMap::identity(f, W.dim);
    LinMap action = kron(V.action, W.action) * kron(idD, swap_map(f, n, V.dim), idW) * kron(D.comul, idV, idW);
    LinMap coaction = kron(D.mul, idV, idW) * kron(idD, swap_map(f, V.dim, n), idW) * kron(V.coaction, W.coaction);
    return YDObject{V.dim * W.dim, action, coaction};
}

LinMap braiding(const BaseHopf &D, const YDObject &V, const YDObject &W) {
    const Field &f = D.mul.field();
    LinMap idW = LinMap::identity(f, W.dim);
    LinMap idV = LinMap::identity(f, V.dim);
    return kron(W.action, idV) * kron(LinMap::identity(f, D.dim), swap_map(f, V.dim, W.dim)) * kron(V.coaction, idW);
}

LinMap inverse_braiding(const BaseHopf &D, const YDObject &V, const YDObject &W) {
    const Field &f = D.mul.field();
    int n = D.dim;
    LinMap idW = LinMap::identity(f, W.dim);
    LinMap idV = LinMap::identity(f, V.dim);
    // w (x) v -> v(0) (x) S^{-1}(v(-1)).w
    LinMap m = kron(idW, V.coaction);                         // [w, v-1, v0]
    m = kron(idW, D.antipode_inv, idV) * m;                   // [w, S^{-1} v-1, v0]
    m = swap_map(f, W.dim * n, V.dim) * m;                    // [v0, w, d]
    m = kron(idV, swap_map(f, W.dim, n)) * m;                 // [v0, d, w]
    m = kron(idV, W.action) * m;                              // [v0, d.w]
    LinMap c = braiding(D, V, W);
    if (m * c != LinMap::identity(f, V.dim * W.dim) || c * m != LinMap::identity(f, W.dim * V.dim))
        throw NotInvertible("constructed inverse braiding fails; YD data is inconsistent");
    return m;
}

CheckReport check_morphism_in_C(const BaseHopf &D, const YDObject &V, const YDObject &W, const LinMap &f) {
    if (f.cols() != V.dim || f.rows() != W.dim)
        throw DimensionMismatch("morphism shape does not match objects");
    LinMap idD = LinMap::identity(f.field(), D.dim);
    CheckReport rep;
    check_equal(rep, "morphism.linear", f * V.action, W.action * kron(idD, f));
    check_equal(rep, "morphism.colinear", W.coaction * f, kron(idD, f) * V.coaction);
    return rep;
}

} // namespace braidgal

#include "braidgal/hopf.hpp"

namespace braidgal {

Coalgebra coalgebra_of(const HopfAlgebra &H) { return Coalgebra{H.dim(), H.comul, H.counit}; }

Coalgebra tensor_coalgebra(const Field &f, const Coalgebra &X, const Coalgebra &Y, const LinMap &braiding_xy) {
    LinMap idX = LinMap::identity(f, X.dim);
    LinMap idY = LinMap::identity(f, Y.dim);
    LinMap comul = kmul(kron(X.comul, Y.comul), idX, braiding_xy, idY);
    return Coalgebra{X.dim * Y.dim, comul, kron(X.counit, Y.counit)};
}

CheckReport check_algebra(const BaseHopf &D, const Algebra &A) {
    const Field &f = A.mul.field();
    int n = A.object.dim;
    LinMap id = LinMap::identity(f, n);
    CheckReport rep;
    check_equal(rep, "alg.assoc", A.mul * kron(A.mul, id), A.mul * kron(id, A.mul));
    check_equal(rep, "alg.unit_left", A.mul * kron(A.unit, id), id);
    check_equal(rep, "alg.unit_right", A.mul * kron(id, A.unit), id);
    YDObject AA = tensor_object(D, A.object, A.object);
    rep.merge(check_morphism_in_C(D, AA, A.object, A.mul), "alg.mul_");
    rep.merge(check_morphism_in_C(D, trivial_object(D), A.object, A.unit), "alg.unit_");
    return rep;
}

CheckReport check_hopf(const BaseHopf &D, const HopfAlgebra &H, const LinMap *braiding_override) {
    const Field &f = H.algebra.mul.field();
    int n = H.dim();
    LinMap id = LinMap::identity(f, n);
    const LinMap &m = H.algebra.mul;
    const LinMap &eta = H.algebra.unit;

    CheckReport rep = check_algebra(D, H.algebra);
    check_equal(rep, "coalg.coassoc", kron(H.comul, id) * H.comul, kron(id, H.comul) * H.comul);
    check_equal(rep, "coalg.counit_left", kron(H.counit, id) * H.comul, id);
    check_equal(rep, "coalg.counit_right", kron(id, H.counit) * H.comul, id);
    rep.merge(check_morphism_in_C(D, H.algebra.object, tensor_object(D, H.algebra.object, H.algebra.object), H.comul),
              "coalg.comul_");
    rep.merge(check_morphism_in_C(D, H.algebra.object, trivial_object(D), H.counit), "coalg.counit_");

    LinMap c = braiding_override ? *braiding_override : braiding(D, H.algebra.object, H.algebra.object);
    check_equal(rep, "bialg.braided_compat", H.comul * m, kron(m, m) * kron(id, c, id) * kron(H.comul, H.comul));
    check_equal(rep, "bialg.counit_mult", H.counit * m, kron(H.counit, H.counit));
    check_equal(rep, "bialg.comul_unit", H.comul * eta, kron(eta, eta));

    LinMap eta_eps = eta * H.counit;
    check_equal(rep, "antipode.left", m * kron(H.antipode, id) * H.comul, eta_eps);
    check_equal(rep, "antipode.right", m * kron(id, H.antipode) * H.comul, eta_eps);
    rep.merge(check_morphism_in_C(D, H.algebra.object, H.algebra.object, H.antipode), "antipode.");
    return rep;
}

CheckReport check_comodule_algebra(const BaseHopf &D, const ComoduleAlgebra &A) {
    const Field &f = A.psi.field();
    int na = A.dim(), nh = A.H.dim();
    LinMap idA = LinMap::identity(f, na);
    LinMap idH = LinMap::identity(f, nh);

    CheckReport rep = check_algebra(D, A.algebra);
    check_equal(rep, "comod.coassoc", kron(A.psi, idH) * A.psi, kron(idA, A.H.comul) * A.psi);
    check_equal(rep, "comod.counit", kron(idA, A.H.counit) * A.psi, idA);
    LinMap c_ha = braiding(D, A.H.algebra.object, A.algebra.object);
    LinMap mult_rhs = kmul(kmul(kron(A.psi, A.psi), idA, c_ha, idH), A.algebra.mul, A.H.algebra.mul);
    check_equal(rep, "comod.multiplicative", A.psi * A.algebra.mul, mult_rhs);
    check_equal(rep, "comod.unit", A.psi * A.algebra.unit, kron(A.algebra.unit, A.H.algebra.unit));
    rep.merge(check_morphism_in_C(D, A.algebra.object, tensor_object(D, A.algebra.object, A.H.algebra.object), A.psi),
              "comod.psi_");
    return rep;
}

LinMap convolution(const LinMap &f, const LinMap &g, const Coalgebra &C, const Algebra &A) {
    if (f.cols() != C.dim || g.cols() != C.dim || f.rows() != A.object.dim || g.rows() != A.object.dim)
        throw DimensionMismatch("convolution operands must map C -> A");
    return A.mul * kron(f, g) * C.comul;
}

LinMap convolution_unit(const Coalgebra &C, const Algebra &A) { return A.unit * C.counit; }

std::optional<LinMap> try_convolution_inverse(const LinMap &f, const Coalgebra &C, const Algebra &A) {
    const Field &k = f.field();
    int nc = C.dim, na = A.object.dim;
    // the left-convolution operator g -> f * g is linear in g; assemble its
    // matrix on the basis of Hom(C, A) and solve against the unit
    LinMap op(k, na * nc, na * nc);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nc; ++j) {
            LinMap unit_ij(k, na, nc);
            unit_ij.set(i, j, Scalar::of(k, 1));
            LinMap col = convolution(f, unit_ij, C, A);
            for (int r = 0; r < na; ++r)
                for (int c = 0; c < nc; ++c)
                    op.set(r * nc + c, i * nc + j, col.at(r, c));
        }
    LinMap target(k, na * nc, 1);
    LinMap e = convolution_unit(C, A);
    for (int r = 0; r < na; ++r)
        for (int c = 0; c < nc; ++c)
            target.set(r * nc + c, 0, e.at(r, c));
    auto sol = solve(op, target);
    if (!sol)
        return std::nullopt;
    LinMap g(k, na, nc);
    for (int r = 0; r < na; ++r)
        for (int c = 0; c < nc; ++c)
            g.set(r, c, sol->at(r * nc + c, 0));
    if (convolution(f, g, C, A) != e || convolution(g, f, C, A) != e)
        return std::nullopt;
    return g;
}

LinMap convolution_inverse(const LinMap &f, const Coalgebra &C, const Algebra &A) {
    auto g = try_convolution_inverse(f, C, A);
    if (!g)
        throw NotConvInvertible("map has no two-sided convolution inverse");
    return *g;
}

} // namespace braidgal

#pragma once

#include "braidgal/ydcat.hpp"

namespace braidgal {

/// An associative unital algebra on a YD object, with multiplication and
/// unit required to be morphisms of the category.
struct Algebra {
    YDObject object;
    LinMap mul;  // A (x) A -> A
    LinMap unit; // I -> A
};

/// A braided Hopf algebra in the YD category: the bialgebra law routes the
/// middle legs through the braiding C_{H,H}.
struct HopfAlgebra {
    Algebra algebra;
    LinMap comul;    // H -> H (x) H
    LinMap counit;   // H -> I
    LinMap antipode; // H -> H

    int dim() const { return algebra.object.dim; }
};

/// A right H-comodule algebra (A, psi).
struct ComoduleAlgebra {
    Algebra algebra;
    HopfAlgebra H;
    LinMap psi; // A -> A (x) H

    int dim() const { return algebra.object.dim; }
};

/// Coalgebra data used by the convolution algebra Hom(C, A).
struct Coalgebra {
    int dim;
    LinMap comul;
    LinMap counit;
};

Coalgebra coalgebra_of(const HopfAlgebra &H);

/// The braided tensor-product coalgebra on X (x) Y:
/// comul = (X (x) C_{X,Y} (x) Y)(comul_X (x) comul_Y).
Coalgebra tensor_coalgebra(const Field &f, const Coalgebra &X, const Coalgebra &Y, const LinMap &braiding_xy);

CheckReport check_algebra(const BaseHopf &D, const Algebra &A);

/// Full braided Hopf battery. When braiding_override is given it replaces
/// C_{H,H} in the bialgebra law (used to demonstrate braiding dependence).
CheckReport check_hopf(const BaseHopf &D, const HopfAlgebra &H, const LinMap *braiding_override = nullptr);

CheckReport check_comodule_algebra(const BaseHopf &D, const ComoduleAlgebra &A);

/// Convolution product f * g = mul_A (f (x) g) comul_C in Hom(C, A).
LinMap convolution(const LinMap &f, const LinMap &g, const Coalgebra &C, const Algebra &A);

/// Unit of the convolution algebra Hom(C, A).
LinMap convolution_unit(const Coalgebra &C, const Algebra &A);

/// Two-sided convolution inverse of f, found by one linear solve and a
/// verification of both identities; throws NotConvInvertible.
LinMap convolution_inverse(const LinMap &f, const Coalgebra &C, const Algebra &A);

std::optional<LinMap> try_convolution_inverse(const LinMap &f, const Coalgebra &C, const Algebra &A);

} // namespace braidgal

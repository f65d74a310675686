#pragma once

#include "braidgal/hopf.hpp"

namespace braidgal {

/// A weak action alpha, a 2-cocycle sigma, and the crossed-product algebra
/// they generate on B (x) H. The builder does not validate the axioms; the
/// iff-tests of the algebra/axiom equivalence need invalid systems too.
/// sigma_inv is cached when the convolution inverse exists.
struct CrossedSystem {
    BaseHopf D;
    Algebra B;
    HopfAlgebra H;
    LinMap alpha; // H (x) B -> B
    LinMap sigma; // H (x) H -> B
    std::optional<LinMap> sigma_inv;
    Algebra product; // B #_sigma H on the object B (x) H
    LinMap psi;      // A -> A (x) H, equal to B (x) comul_H

    int dim_a() const { return product.object.dim; }
    const LinMap &sigma_inverse() const {
        if (!sigma_inv)
            throw NotConvInvertible("sigma has no convolution inverse");
        return *sigma_inv;
    }
    ComoduleAlgebra as_comodule_algebra() const { return ComoduleAlgebra{product, H, psi}; }
};

/// sigma = unit_B (counit (x) counit): the smash-product case.
LinMap trivial_cocycle(const Algebra &B, const HopfAlgebra &H);

/// alpha = counit_H (x) B: H acts through its counit.
LinMap trivial_action(const Algebra &B, const HopfAlgebra &H);

/// Braided tensor-product coalgebra on H (x) H; the convolution algebra of
/// cocycles lives over it.
Coalgebra cocycle_coalgebra(const BaseHopf &D, const HopfAlgebra &H);

CheckReport check_weak_action(const BaseHopf &D, const Algebra &B, const HopfAlgebra &H, const LinMap &alpha);
CheckReport check_2cocycle(const BaseHopf &D, const Algebra &B, const HopfAlgebra &H, const LinMap &alpha,
                           const LinMap &sigma);
CheckReport check_twisted_module(const BaseHopf &D, const Algebra &B, const HopfAlgebra &H, const LinMap &alpha,
                                 const LinMap &sigma);

CrossedSystem build_crossed_product(const BaseHopf &D, const Algebra &B, const HopfAlgebra &H, const LinMap &alpha,
                                    const LinMap &sigma);

/// The multiplication (mul_B (x) mul_H)(B (x) C_{H,B} (x) H) of the braided
/// tensor-product algebra; the crossed product collapses to it when both
/// twist maps are trivial.
LinMap braided_tensor_algebra_mul(const BaseHopf &D, const Algebra &B, const Algebra &Halg);

/// Both sides of the crossed-product equivalence: the built product is an
/// algebra with unit eta_B (x) eta_H iff the weak-action, cocycle and
/// twisted-module identities all hold.
struct EquivalenceReport {
    CheckReport algebra_side; // associativity + unit of the built product
    CheckReport axiom_side;   // (WA), (2-COC), (TM)
    bool algebra_holds = false;
    bool axioms_hold = false;
    bool agree = false;
};

EquivalenceReport check_lemma12(const BaseHopf &D, const Algebra &B, const HopfAlgebra &H, const LinMap &alpha,
                                const LinMap &sigma);

/// The auxiliary pairing maps of the cross-product-bialgebra presentation
/// and its relation battery (i)-(iv).
struct Bd99Maps {
    LinMap sigma_hat; // H (x) H -> B (x) H
    LinMap phi21;     // H (x) B -> B (x) H
};

Bd99Maps bd99_maps(const BaseHopf &D, const Algebra &B, const HopfAlgebra &H, const LinMap &alpha,
                   const LinMap &sigma);

CheckReport check_bd99_relations(const BaseHopf &D, const Algebra &B, const HopfAlgebra &H, const LinMap &alpha,
                                 const LinMap &sigma);

/// The rewriting identities for alpha(H (x) sigma) and alpha(H (x) sigma_inv)
/// as three-fold convolution products over the braided coalgebra H^3.
CheckReport check_star_relations(const CrossedSystem &sys);

} // namespace braidgal

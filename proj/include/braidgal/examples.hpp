#pragma once

#include <string>
#include <variant>
#include <vector>

#include "braidgal/galois.hpp"

namespace braidgal {

/// Multiplication table of a finite group on indices 0..n-1; index 0 need
/// not be the identity, it is located during validation.
using CayleyTable = std::vector<std::vector<int>>;

CayleyTable cyclic_table(int n);

/// Group algebra kG as an ordinary Hopf algebra, usable as the base D.
BaseHopf group_base_hopf(const Field &f, const CayleyTable &table);

/// Group algebra kG as a (trivially braided) Hopf algebra over the given
/// base, carried by the trivial YD structure.
HopfAlgebra group_algebra(const BaseHopf &D, const Field &f, const CayleyTable &table);

/// The 4-dimensional Hopf algebra with basis {1, g, x, gx}, g^2 = 1,
/// x^2 = 0, xg = -gx, over the trivial base. Characteristic 2 is rejected.
HopfAlgebra sweedler_h4(const BaseHopf &D, const Field &f);

/// The exterior line k{1, x} over D = kC2, with x odd: sign action, odd
/// coaction, braiding C(x (x) x) = -x (x) x. The minimal genuinely braided
/// Hopf algebra; its bialgebra law fails with the plain flip.
struct SuperLine {
    BaseHopf D;
    HopfAlgebra H;
};
SuperLine super_line_over_c2(const Field &f);

/// B = H acting on itself by the braided adjoint action with trivial
/// cocycle.
CrossedSystem adjoint_smash(const BaseHopf &D, const HopfAlgebra &H);

/// B (x) H with trivial action and trivial cocycle.
CrossedSystem tensor_smash(const BaseHopf &D, const HopfAlgebra &H);

/// B = k with the trivial action and a nontrivial normalized cocycle
/// sigma: H (x) H -> k (a twisted group algebra, or the odd deformation of
/// the exterior line).
CrossedSystem cocycle_twist(const BaseHopf &D, const HopfAlgebra &H, const LinMap &sigma);

/// A = H as an algebra with psi = A (x) eta: coinvariants are all of A and
/// the canonical map cannot be square. The stock non-Galois control.
ComoduleAlgebra trivial_coaction_comodule(const BaseHopf &D, const HopfAlgebra &H);

/// A named builtin: a Hopf algebra, a crossed system, or a comodule algebra.
struct Builtin {
    std::string name;
    BaseHopf D;
    std::variant<HopfAlgebra, CrossedSystem, ComoduleAlgebra> value;
};

std::vector<std::string> builtin_names();
Builtin make_builtin(const Field &f, const std::string &name); // throws UnknownTarget

} // namespace braidgal

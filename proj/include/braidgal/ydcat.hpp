#pragma once

#include "braidgal/linmap.hpp"
#include "braidgal/report.hpp"

namespace braidgal {

/// An ordinary Hopf algebra D over the base field; the ambient category is
/// the category of Yetter-Drinfeld modules over D. The antipode is required
/// to be invertible so the inverse braiding exists.
struct BaseHopf {
    int dim;
    LinMap mul;          // D (x) D -> D
    LinMap unit;         // I -> D
    LinMap comul;        // D -> D (x) D
    LinMap counit;       // D -> I
    LinMap antipode;     // D -> D
    LinMap antipode_inv; // D -> D
};

/// A finite-dimensional left-left Yetter-Drinfeld module: a left D-action and
/// a left D-coaction subject to the compatibility checked by
/// check_yd_object. The convention is
///   delta(h.v) = h1 v(-1) S(h3) (x) h2.v(0)
/// and the induced braiding is c(v (x) w) = v(-1).w (x) v(0).
struct YDObject {
    int dim;
    LinMap action;   // D (x) V -> V
    LinMap coaction; // V -> D (x) V
};

/// D = k: the classical degeneration; the braiding over it is the flip.
BaseHopf trivial_base(const Field &f);

/// The 1-dimensional YD object with trivial action and coaction.
YDObject trivial_object(const BaseHopf &D);

CheckReport check_base_hopf(const BaseHopf &D);
CheckReport check_yd_object(const BaseHopf &D, const YDObject &V);

/// V (x) W with the diagonal action through comul_D and codiagonal coaction
/// through mul_D. Associativity is strict because tensor indices flatten.
YDObject tensor_object(const BaseHopf &D, const YDObject &V, const YDObject &W);

/// C_{V,W}: V (x) W -> W (x) V, c(v (x) w) = v(-1).w (x) v(0).
LinMap braiding(const BaseHopf &D, const YDObject &V, const YDObject &W);

/// C^{-1}_{V,W}: W (x) V -> V (x) W, using the inverse antipode:
/// w (x) v -> v(0) (x) S^{-1}(v(-1)).w.
LinMap inverse_braiding(const BaseHopf &D, const YDObject &V, const YDObject &W);

/// f: V -> W is a morphism of the category iff it is D-linear and D-colinear.
CheckReport check_morphism_in_C(const BaseHopf &D, const YDObject &V, const YDObject &W, const LinMap &f);

} // namespace braidgal

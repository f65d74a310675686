#include "braidgal/examples.hpp"

#include <algorithm>

namespace braidgal {

namespace {

int locate_identity(const CayleyTable &t) {
    int n = static_cast<int>(t.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = t[e][x] == x && t[x][e] == x;
        if (ok)
            return e;
    }
    throw NotAGroup("table has no identity element");
}

void validate_group(const CayleyTable &t) {
    int n = static_cast<int>(t.size());
    if (n == 0)
        throw NotAGroup("empty table");
    for (const auto &row : t) {
        if (static_cast<int>(row.size()) != n)
            throw NotAGroup("table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw NotAGroup("table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]])
                    throw NotAGroup("table is not associative");
    int e = locate_identity(t);
    for (int a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < n && !has_inverse; ++b)
            has_inverse = t[a][b] == e && t[b][a] == e;
        if (!has_inverse)
            throw NotAGroup("element " + std::to_string(a) + " has no inverse");
    }
}

int group_inverse(const CayleyTable &t, int e, int a) {
    for (int b = 0; b < static_cast<int>(t.size()); ++b)
        if (t[a][b] == e)
            return b;
    throw NotAGroup("missing inverse");
}

} // namespace

CayleyTable cyclic_table(int n) {
    CayleyTable t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    return t;
}

BaseHopf group_base_hopf(const Field &f, const CayleyTable &table) {
    validate_group(table);
    int n = static_cast<int>(table.size());
    int e = locate_identity(table);
    Scalar one = Scalar::of(f, 1);

    LinMap mul(f, n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mul.set(table[i][j], i * n + j, one);
    LinMap unit(f, n, 1);
    unit.set(e, 0, one);
    LinMap comul(f, n * n, n);
    for (int i = 0; i < n; ++i)
        comul.set(i * n + i, i, one);
    LinMap counit(f, 1, n);
    for (int i = 0; i < n; ++i)
        counit.set(0, i, one);
    LinMap antipode(f, n, n);
    for (int i = 0; i < n; ++i)
        antipode.set(group_inverse(table, e, i), i, one);
    LinMap antipode_inv = antipode.transpose(); // inverse of a permutation
    return BaseHopf{n, mul, unit, comul, counit, antipode, antipode_inv};
}

HopfAlgebra group_algebra(const BaseHopf &D, const Field &f, const CayleyTable &table) {
    BaseHopf g = group_base_hopf(f, table);
    int n = g.dim;
    // trivial YD structure: D acts through its counit and coacts through its
    // unit
    LinMap action = kron(D.counit, LinMap::identity(f, n));
    LinMap coaction = kron(D.unit, LinMap::identity(f, n));
    YDObject obj{n, action, coaction};
    Algebra alg{obj, g.mul, g.unit};
    return HopfAlgebra{alg, g.comul, g.counit, g.antipode};
}

HopfAlgebra sweedler_h4(const BaseHopf &D, const Field &f) {
    if (f.characteristic() == 2)
        throw BadCharacteristic("the 4-dimensional Hopf algebra needs characteristic != 2");
    // basis 0:1, 1:g, 2:x, 3:gx with g^2 = 1, x^2 = 0, xg = -gx
    LinMap mul = LinMap::zero(f, 4, 16);
    auto set_prod = [&](int a, int b, int r, long c) { mul.set(r, a * 4 + b, Scalar::of(f, c)); };
    for (int a = 0; a < 4; ++a) {
        set_prod(0, a, a, 1);
        if (a != 0)
            set_prod(a, 0, a, 1);
    }
    set_prod(1, 1, 0, 1);  // g g = 1
    set_prod(1, 2, 3, 1);  // g x = gx
    set_prod(1, 3, 2, 1);  // g gx = x
    set_prod(2, 1, 3, -1); // x g = -gx
    set_prod(3, 1, 2, -1); // gx g = -x
    // x x = x gx = gx x = gx gx = 0

    LinMap unit(f, 4, 1);
    unit.set(0, 0, Scalar::of(f, 1));

    LinMap comul = LinMap::zero(f, 16, 4);
    auto set_comul = [&](int h, int a, int b, long c) { comul.set(a * 4 + b, h, Scalar::of(f, c)); };
    set_comul(0, 0, 0, 1);             // 1 -> 1 (x) 1
    set_comul(1, 1, 1, 1);             // g -> g (x) g
    set_comul(2, 2, 0, 1);             // x -> x (x) 1 + g (x) x
    set_comul(2, 1, 2, 1);
    set_comul(3, 3, 1, 1);             // gx -> gx (x) g + 1 (x) gx
    set_comul(3, 0, 3, 1);

    LinMap counit(f, 1, 4);
    counit.set(0, 0, Scalar::of(f, 1));
    counit.set(0, 1, Scalar::of(f, 1));

    LinMap antipode = LinMap::zero(f, 4, 4);
    antipode.set(0, 0, Scalar::of(f, 1));
    antipode.set(1, 1, Scalar::of(f, 1));
    antipode.set(3, 2, Scalar::of(f, -1)); // S(x) = -gx
    antipode.set(2, 3, Scalar::of(f, 1));  // S(gx) = x

    LinMap id4 = LinMap::identity(f, 4);
    YDObject obj{4, kron(D.counit, id4), kron(D.unit, id4)};
    Algebra alg{obj, mul, unit};
    return HopfAlgebra{alg, comul, counit, antipode};
}

SuperLine super_line_over_c2(const Field &f) {
    if (f.characteristic() == 2)
        throw BadCharacteristic("the exterior line needs characteristic != 2");
    BaseHopf D = group_base_hopf(f, cyclic_table(2));

    // basis 0:1 (even), 1:x (odd)
    LinMap action = LinMap::zero(f, 2, 4); // D (x) V -> V
    action.set(0, 0 * 2 + 0, Scalar::of(f, 1));
    action.set(1, 0 * 2 + 1, Scalar::of(f, 1));
    action.set(0, 1 * 2 + 0, Scalar::of(f, 1));
    action.set(1, 1 * 2 + 1, Scalar::of(f, -1)); // g.x = -x
    LinMap coaction = LinMap::zero(f, 4, 2);     // V -> D (x) V
    coaction.set(0 * 2 + 0, 0, Scalar::of(f, 1));
    coaction.set(1 * 2 + 1, 1, Scalar::of(f, 1)); // x -> g (x) x
    YDObject obj{2, action, coaction};

    LinMap mul = LinMap::zero(f, 2, 4);
    mul.set(0, 0, Scalar::of(f, 1)); // 1*1
    mul.set(1, 1, Scalar::of(f, 1)); // 1*x
    mul.set(1, 2, Scalar::of(f, 1)); // x*1
    // x*x = 0
    LinMap unit(f, 2, 1);
    unit.set(0, 0, Scalar::of(f, 1));
    LinMap comul = LinMap::zero(f, 4, 2);
    comul.set(0, 0, Scalar::of(f, 1));  // 1 -> 1 (x) 1
    comul.set(2, 1, Scalar::of(f, 1));  // x -> x (x) 1 + 1 (x) x
    comul.set(1, 1, Scalar::of(f, 1));
    LinMap counit(f, 1, 2);
    counit.set(0, 0, Scalar::of(f, 1));
    LinMap antipode = LinMap::zero(f, 2, 2);
    antipode.set(0, 0, Scalar::of(f, 1));
    antipode.set(1, 1, Scalar::of(f, -1)); // S(x) = -x

    Algebra alg{obj, mul, unit};
    return SuperLine{std::move(D), HopfAlgebra{alg, comul, counit, antipode}};
}

CrossedSystem adjoint_smash(const BaseHopf &D, const HopfAlgebra &H) {
    const Field &f = H.comul.field();
    int nh = H.dim();
    LinMap idH = LinMap::identity(f, nh);
    const Algebra &B = H.algebra;
    LinMap c_hb = braiding(D, H.algebra.object, B.object);

    // alpha = m (H (x) m)(H (x) C_{H,B})(H (x) S (x) B)(comul (x) B)
    LinMap alpha = kron(H.comul, idH);
    alpha = kron(idH, H.antipode, idH) * alpha;
    alpha = kron(idH, c_hb) * alpha;
    alpha = kron(idH, B.mul) * alpha;
    alpha = B.mul * alpha;

    return build_crossed_product(D, B, H, alpha, trivial_cocycle(B, H));
}

CrossedSystem tensor_smash(const BaseHopf &D, const HopfAlgebra &H) {
    const Algebra &B = H.algebra;
    return build_crossed_product(D, B, H, trivial_action(B, H), trivial_cocycle(B, H));
}

CrossedSystem cocycle_twist(const BaseHopf &D, const HopfAlgebra &H, const LinMap &sigma) {
    const Field &f = H.comul.field();
    YDObject pt = trivial_object(D);
    Algebra B{pt, LinMap::identity(f, 1), LinMap::identity(f, 1)};
    return build_crossed_product(D, B, H, trivial_action(B, H), sigma);
}

ComoduleAlgebra trivial_coaction_comodule(const BaseHopf &D, const HopfAlgebra &H) {
    (void)D;
    const Field &f = H.comul.field();
    LinMap psi = kron(LinMap::identity(f, H.dim()), H.algebra.unit);
    return ComoduleAlgebra{H.algebra, H, psi};
}

namespace {

/// Normalized 2-cocycle on the cyclic group of order n given by carry
/// counting: sigma(g^i, g^j) = omega^floor((i+j)/n).
LinMap cyclic_carry_cocycle(const Field &f, int n, const Scalar &omega) {
    LinMap sigma(f, 1, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sigma.set(0, i * n + j, (i + j) >= n ? omega : Scalar::of(f, 1));
    return sigma;
}

Scalar fourth_root_or_minus_one(const Field &f) {
    if (!f.is_rational()) {
        for (std::uint64_t w = 2; w < f.modulus(); ++w) {
            Scalar s = Scalar::mod_p(w, f.modulus());
            Scalar s2 = s * s;
            if (!s2.is_one() && (s2 * s2).is_one())
                return s;
        }
    }
    return Scalar::of(f, -1);
}

} // namespace

std::vector<std::string> builtin_names() {
    return {"c2",
            "c4",
            "h4",
            "superline",
            "adjoint-smash:c2",
            "adjoint-smash:c4",
            "adjoint-smash:h4",
            "adjoint-smash:superline",
            "tensor:c2",
            "tensor:h4",
            "tensor:superline",
            "twisted:c2",
            "twisted:c4",
            "twisted:superline",
            "trivial-coaction:h4"};
}

Builtin make_builtin(const Field &f, const std::string &name) {
    BaseHopf triv = trivial_base(f);
    auto hopf_named = [&](const std::string &h) -> std::pair<BaseHopf, HopfAlgebra> {
        if (h == "c2")
            return {triv, group_algebra(triv, f, cyclic_table(2))};
        if (h == "c4")
            return {triv, group_algebra(triv, f, cyclic_table(4))};
        if (h == "h4")
            return {triv, sweedler_h4(triv, f)};
        if (h == "superline") {
            SuperLine sl = super_line_over_c2(f);
            return {sl.D, sl.H};
        }
        throw UnknownTarget("unknown builtin Hopf algebra '" + h + "'");
    };

    auto colon = name.find(':');
    if (colon == std::string::npos) {
        auto [D, H] = hopf_named(name);
        return Builtin{name, std::move(D), std::move(H)};
    }
    std::string kind = name.substr(0, colon), arg = name.substr(colon + 1);
    auto [D, H] = hopf_named(arg);
    if (kind == "adjoint-smash")
        return Builtin{name, D, adjoint_smash(D, H)};
    if (kind == "tensor")
        return Builtin{name, D, tensor_smash(D, H)};
    if (kind == "trivial-coaction")
        return Builtin{name, D, trivial_coaction_comodule(D, H)};
    if (kind == "twisted") {
        if (arg == "c2")
            return Builtin{name, D, cocycle_twist(D, H, cyclic_carry_cocycle(f, 2, Scalar::of(f, -1)))};
        if (arg == "c4")
            return Builtin{name, D, cocycle_twist(D, H, cyclic_carry_cocycle(f, 4, fourth_root_or_minus_one(f)))};
        if (arg == "superline") {
            // deform the exterior line: sigma(x, x) = 1, normalized elsewhere
            LinMap sigma(f, 1, 4);
            sigma.set(0, 0, Scalar::of(f, 1));
            sigma.set(0, 3, Scalar::of(f, 1));
            return Builtin{name, D, cocycle_twist(D, H, sigma)};
        }
    }
    throw UnknownTarget("unknown builtin '" + name + "'");
}

} // namespace braidgal

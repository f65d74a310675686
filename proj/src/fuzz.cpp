#include "braidgal/fuzz.hpp"

#include <random>

#include "braidgal/examples.hpp"

namespace braidgal {

Lemma12FuzzResult run_lemma12_fuzz(const Field &f, std::uint64_t seed, int count) {
    BaseHopf D = trivial_base(f);
    HopfAlgebra H = group_algebra(D, f, cyclic_table(2));
    const Algebra &B = H.algebra;
    LinMap alpha0 = trivial_action(B, H);
    LinMap sigma0 = trivial_cocycle(B, H);

    long p = f.is_rational() ? 0 : static_cast<long>(f.characteristic());
    std::mt19937_64 rng(seed);
    auto nonzero_delta = [&]() -> Scalar {
        long span = p ? p - 1 : 7;
        long d = 1 + static_cast<long>(rng() % static_cast<unsigned long>(span));
        return Scalar::of(f, d);
    };
    auto bump = [&](LinMap &m) {
        int r = static_cast<int>(rng() % static_cast<unsigned>(m.rows()));
        int c = static_cast<int>(rng() % static_cast<unsigned>(m.cols()));
        m.set(r, c, m.at(r, c) + nonzero_delta());
    };

    Lemma12FuzzResult res;
    for (int trial = 0; trial < count; ++trial) {
        LinMap alpha = alpha0;
        LinMap sigma = sigma0;
        if (trial < 4) {
            // rescale sigma(g, g): every value keeps the cocycle identities
            // (zero included, which merely loses convolution invertibility)
            sigma.set(0, 3, Scalar::of(f, trial == 3 ? 0 : trial + 2));
        } else if (trial < 8) {
            // the sign automorphism g.b = (id (x) -1)(b) is an involutive
            // weak action, alone and combined with a sigma rescale
            alpha.set(1, 3, Scalar::of(f, -1));
            if (trial > 4)
                sigma.set(0, 3, Scalar::of(f, trial - 3));
        } else {
            int bumps = 1 + static_cast<int>(rng() % 2);
            for (int b = 0; b < bumps; ++b) {
                if (rng() % 2)
                    bump(alpha);
                else
                    bump(sigma);
            }
        }
        if (alpha == alpha0 && sigma == sigma0)
            continue; // only perturbed systems count

        EquivalenceReport rep = check_lemma12(D, B, H, alpha, sigma);
        ++res.trials;
        if (!rep.agree)
            ++res.disagreements;
        else if (rep.algebra_holds)
            ++res.valid_systems;
        else
            ++res.invalid_systems;
    }
    return res;
}

} // namespace braidgal

#pragma once

#include <cstdint>

#include "braidgal/crossed.hpp"

namespace braidgal {

/// Seeded perturbation harness for the crossed-product equivalence on
/// (B, H) = (kC2, kC2): bumps single structure constants of alpha and sigma
/// and checks that associativity of the built product agrees with the
/// weak-action/cocycle/twisted-module axioms on every perturbed system.
struct Lemma12FuzzResult {
    int trials = 0;
    int valid_systems = 0;   // axioms hold and the product is an algebra
    int invalid_systems = 0; // axioms fail and the product is not an algebra
    int disagreements = 0;   // equivalence violated (must stay 0)
};

Lemma12FuzzResult run_lemma12_fuzz(const Field &f, std::uint64_t seed, int count);

} // namespace braidgal

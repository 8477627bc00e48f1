#pragma once

#include <cstdint>
#include <random>

#include "eqc/seifert.hpp"

namespace eqc {

struct RandomSeifertOptions {
    int max_size = 8;
    long entry_bound = 2;
    int congruence_steps = 6;
};

// Inclusive range; plain modular reduction keeps sequences identical across
// standard libraries.
long uniform(std::mt19937_64& rng, long lo, long hi);

// X + J (X symmetric, J the standard symplectic half) under a random unimodular
// congruence, so V - V^T is unimodular.
SeifertMatrix random_seifert_matrix(std::mt19937_64& rng, const RandomSeifertOptions& opt = {});

}  // namespace eqc

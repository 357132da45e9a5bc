#pragma once

#include <random>
#include <string>
#include <vector>

#include "homquiver/liecoh.hpp"
#include "homquiver/module.hpp"

namespace homquiver::testgen {

using Rng = std::mt19937_64;

// Random quotient of a random finite sum of indecomposable projectives by a
// generated submodule of its radical; always a valid nonzero module.
Module random_module(const Algebra& a, Rng& rng, int max_copies = 2, int max_seeds = 3);

Mat random_invertible(Rng& rng, int n);

// Random rational module of dimension <= max_dim over a bundled Lie algebra,
// assembled from irreducible/character blocks and conjugated by a random
// invertible matrix. Validated before returning.
LieModule random_lie_module(const LieAlgebra& a, const std::string& preset_name, Rng& rng,
                            int max_dim = 4);

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> messages;

    bool pass() const { return failures == 0 && cases > 0; }
};

SuiteResult suite_resolution_invariants(uint64_t seed, int cases);
SuiteResult suite_ext_dual_route(uint64_t seed, int cases);
SuiteResult suite_ext_additivity(uint64_t seed, int cases);
SuiteResult suite_pd_inequalities(uint64_t seed, int cases);
SuiteResult suite_phi_low_degrees(uint64_t seed, int cases);
SuiteResult suite_report_determinism(int repeats);
SuiteResult suite_full_embedding_ext_agreement(uint64_t seed, int cases);
SuiteResult suite_lie_top_degree(uint64_t seed, int cases_per_algebra);

}  // namespace homquiver::testgen

#pragma once

#include "qwalk/kernel.hpp"

#include <string>
#include <vector>

namespace qwalk {

// Everything cmd_verify runs for one model: the functional-equation
// residual, the kernel-method identities, the closed-form oracle
// equivalences and the structural checks, each through the largest order
// the inputs support at the requested table length.
struct VerifyReport {
    std::string model;
    int order = 0;
    std::vector<IdentityResult> checks;
    bool all_pass() const;
};

VerifyReport run_verification(const ModelSpec& model, int order);

// Random symmetric polynomials in two variables for the symmetric-root
// evaluation suite: total degree <= max_degree, integer coefficients in
// [-5, 5], deterministic for a given seed.
std::vector<LaurentPoly> random_symmetric_polynomials(int count, int max_degree,
                                                      unsigned long seed);

}  // namespace qwalk

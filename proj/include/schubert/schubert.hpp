#pragma once

// Double Schubert polynomials.

#include "schubert/bpd.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

/// Sum of BPD weights, one term at a time.
Polynomial schubert_bpd(const Permutation& w);
/// Same sum split across OpenMP threads.
Polynomial schubert_bpd_parallel(const Permutation& w);

/// Prod_{i+j<=n} (x_i - y_j) for the longest element, then divided
/// differences down to w.
Polynomial schubert_oracle(const Permutation& w);

/// S_w = (x_r - y_s) S_v + sum_{u in Phi} S_u with every side from BPDs.
bool verify_transition_identity(const Permutation& w);

}  // namespace schubert

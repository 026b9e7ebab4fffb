#include "schubert/schubert.hpp"

#include <omp.h>

namespace schubert {

Polynomial schubert_bpd(const Permutation& w) {
  Polynomial s;
  for (const Bpd& p : enumerate_bpds(w)) s += weight(p);
  return s;
}

Polynomial schubert_bpd_parallel(const Permutation& w) {
  const std::vector<Bpd> bpds = enumerate_bpds(w);
  const long count = static_cast<long>(bpds.size());
  Polynomial total;
#pragma omp parallel
  {
    Polynomial local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long k = 0; k < count; ++k) local += weight(bpds[static_cast<std::size_t>(k)]);
#pragma omp critical
    total += local;
  }
  return total;
}

Polynomial schubert_oracle(const Permutation& w) {
  const int n = w.size();
  // Walk up from w to w0 along ascents, then come back down with divided
  // differences in the reverse order.
  std::vector<int> steps;
  std::vector<int> cur = w.one_line();
  while (true) {
    int i = 0;
    for (int k = 1; k < n; ++k)
      if (cur[static_cast<std::size_t>(k - 1)] < cur[static_cast<std::size_t>(k)]) {
        i = k;
        break;
      }
    if (i == 0) break;
    std::swap(cur[static_cast<std::size_t>(i - 1)], cur[static_cast<std::size_t>(i)]);
    steps.push_back(i);
  }
  Polynomial s(1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) s *= x_minus_y(i, j);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) s = divided_difference(s, *it);
  return s;
}

bool verify_transition_identity(const Permutation& w) {
  const Transition t = transition(w);
  Polynomial rhs = x_minus_y(t.r, t.s) * schubert_bpd(t.v);
  for (const Permutation& u : t.phi) rhs += schubert_bpd(u);
  return rhs == schubert_bpd(w);
}

}  // namespace schubert

#ifndef ROOKCONG_COUNTEREXAMPLE_HPP
#define ROOKCONG_COUNTEREXAMPLE_HPP

#include <optional>

#include "partial_injection.hpp"

namespace rookcong {

  // A member sigma of OR_n and a permutation s whose conjugate s^-1 sigma s
  // leaves SR_n, showing that OR_n and SR_n are not closed under conjugation
  // by S_n.
  struct ConjugationWitness {
    PartialInjection sigma;
    PartialInjection s;
    PartialInjection conjugate;  // s^-1 sigma s
    bool             sigma_in_or;
    bool             s_in_w;
    bool             conjugate_in_sr;
    // Smallest i with conjugate(theta(i)) != theta(conjugate(i)).
    std::optional<int> violated_at;
  };

  // sigma = (1 3 2)(n-2 n-1 n) and s the printed permutation fixing
  // 4..n-3. Throws std::domain_error unless n is even and 6 <= n <= 12.
  ConjugationWitness conjugation_counterexample(int n);

}  // namespace rookcong

#endif  // ROOKCONG_COUNTEREXAMPLE_HPP

#ifndef ROOKCONG_H_CLASS_HPP
#define ROOKCONG_H_CLASS_HPP

#include <optional>
#include <vector>

#include "permutation.hpp"
#include "universe.hpp"

namespace rookcong {

  // With the domain of x read in increasing order a_1 < ... < a_k and
  // b_i = x(a_i), returns the map a_i -> b_{mu(i)}. The result has the same
  // domain and image as x. Throws std::domain_error if mu has degree other
  // than rank(x).
  PartialInjection apply_mu(PartialInjection const& x, Permutation const& mu);

  // The mu with y = apply_mu(x, mu), if x and y share domain and image.
  std::optional<Permutation> mu_between(PartialInjection const& x,
                                        PartialInjection const& y);

  struct HClassGroup {
    Index              idempotent;
    int                rank;
    std::vector<Index> members;  // ascending
    // mu[i] is the position permutation carrying the idempotent to
    // members[i]; for the rank-n class it is the unit itself.
    std::vector<Permutation> mu;
    PermGroup                group;  // the image of members under mu
  };

  // The group H(e) of an idempotent e, with its bijection onto a permutation
  // group of the positions of dom(e). Throws std::domain_error if e is not
  // idempotent.
  HClassGroup h_class_group(Universe const& u, Index idempotent);

  // The unit group of the universe (W' for OR, W for SR, S_n for R) as a
  // permutation group of degree n.
  PermGroup unit_group(Universe const& u);

}  // namespace rookcong

#endif  // ROOKCONG_H_CLASS_HPP

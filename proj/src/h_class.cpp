#include "rookcong/h_class.hpp"

#include <stdexcept>
#include <string>

#include "rookcong/membership.hpp"

namespace rookcong {

  PartialInjection apply_mu(PartialInjection const& x, Permutation const& mu) {
    if (mu.degree() != x.rank()) {
      throw std::domain_error("apply_mu: permutation of degree "
                              + std::to_string(mu.degree())
                              + " applied to an element of rank "
                              + std::to_string(x.rank()));
    }
    auto const                       dom = points_of(x.domain());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(dom.size());
    for (int i = 1; i <= mu.degree(); ++i) {
      pairs.emplace_back(dom[i - 1], x[dom[mu[i] - 1]]);
    }
    return PartialInjection::from_pairs(x.degree(), pairs);
  }

  std::optional<Permutation> mu_between(PartialInjection const& x,
                                        PartialInjection const& y) {
    if (x.degree() != y.degree() || x.domain() != y.domain()
        || x.image() != y.image()) {
      return std::nullopt;
    }
    auto const       dom = points_of(x.domain());
    std::vector<int> position(x.degree() + 1, 0);
    for (std::size_t i = 0; i < dom.size(); ++i) {
      position[x[dom[i]]] = static_cast<int>(i) + 1;
    }
    std::vector<int> images;
    images.reserve(dom.size());
    for (int a : dom) {
      images.push_back(position[y[a]]);
    }
    return Permutation::from_images(images);
  }

  HClassGroup h_class_group(Universe const& u, Index idempotent) {
    auto const& e = u.at(idempotent);
    if (!is_idempotent(e)) {
      throw std::domain_error("h_class_group: " + to_two_line(e)
                              + " is not idempotent");
    }
    HClassGroup out{idempotent, e.rank(), {}, {}, PermGroup::symmetric(0)};
    std::vector<Permutation> images;
    for (Index i = 0; i < u.size(); ++i) {
      if (auto mu = mu_between(e, u.at(i))) {
        out.members.push_back(i);
        out.mu.push_back(*mu);
        images.push_back(*mu);
      }
    }
    out.group = PermGroup::from_elements(e.rank(), std::move(images));
    return out;
  }

  PermGroup unit_group(Universe const& u) {
    std::vector<Permutation> units;
    int const                n = u.degree();
    for (Index i : u.elements_of_rank(n)) {
      std::vector<int> images(n);
      for (int p = 1; p <= n; ++p) {
        images[p - 1] = u.at(i)[p];
      }
      units.push_back(Permutation::from_images(images));
    }
    return PermGroup::from_elements(n, std::move(units));
  }

}  // namespace rookcong

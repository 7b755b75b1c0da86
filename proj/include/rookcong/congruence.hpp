#ifndef ROOKCONG_CONGRUENCE_HPP
#define ROOKCONG_CONGRUENCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "universe.hpp"

namespace rookcong {

  // A related pair (a, b) whose translates by x fall in different classes.
  struct Violation {
    Index a;
    Index b;
    Index x;
    bool  left;  // true: (x*a, x*b) separated; false: (a*x, b*x)
  };

  enum class Translations {
    generators,   // translate merged pairs by the universe's generating set
    all_elements  // translate by every element
  };

  // Checks every element against its class representative, translated on
  // both sides. Translating by generators only gives the same verdict, since
  // compatibility with each generator extends to products.
  std::optional<Violation> find_violation(
      Universe const& u, Partition const& p,
      Translations how = Translations::all_elements);
  bool is_congruence(Universe const& u, Partition const& p,
                     Translations how = Translations::all_elements);

  // The least congruence containing the given pairs: union-find seeded with
  // the pairs and a worklist closing each merged pair under left and right
  // translation.
  Partition congruence_closure(Universe const&                       u,
                               std::span<std::pair<Index, Index> const> pairs,
                               Translations how = Translations::generators);

  // Least congruence containing both. Throws std::domain_error on a size
  // mismatch.
  Partition join(Universe const& u, Partition const& p, Partition const& q);

  struct LatticeOptions {
    std::size_t max_elements = 600;
    bool        force        = false;
    unsigned    threads      = 1;
  };

  // Every congruence of the universe: all principal congruences Cg(a, b),
  // closed under join, plus the identity and universal relations. Sorted by
  // decreasing class count, then by id vector. Throws resource_error if the
  // universe exceeds the budget and force is unset. The result does not
  // depend on the thread count.
  std::vector<Partition> congruence_lattice(Universe const&       u,
                                            LatticeOptions const& options = {});

  // Pairs (i, j) of lattice indices where j covers i under refinement.
  std::vector<std::pair<std::size_t, std::size_t>>
  covering_pairs(std::vector<Partition> const& lattice);

}  // namespace rookcong

#endif  // ROOKCONG_CONGRUENCE_HPP

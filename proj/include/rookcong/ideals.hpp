#ifndef ROOKCONG_IDEALS_HPP
#define ROOKCONG_IDEALS_HPP

#include <optional>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "green.hpp"
#include "universe.hpp"

namespace rookcong {

  enum class IdealKind {
    rank_bounded,    // I_k: every element of rank <= k
    type_one,        // I_m^I
    type_two,        // I_m^II
    union_of_types,  // I_m^I ∪ I_m^II, the complement of the unit group
    other
  };

  struct IdealDescriptor {
    IdealKind          kind = IdealKind::other;
    std::optional<int> k;
    ElementSet         members;
    // J-class ids covered, sorted; empty if members is not a union of
    // J-classes.
    std::vector<std::uint32_t> j_classes;
    bool                       absorbing = false;
    // On the published list of ideals (OR_n) or the rank chain (SR_n, R_n).
    bool listed = false;

    std::string label() const;
  };

  // S * members * S ⊆ members, checked with every element on each side.
  bool is_absorbing(Universe const& u, ElementSet const& members);

  // Labels an arbitrary element set; absorbing is checked.
  IdealDescriptor describe_ideal(Universe const&   u,
                                 GreenData const&  green,
                                 ElementSet const& members);

  ElementSet rank_bounded_set(Universe const& u, int k);
  // I_m^I (type I) or I_m^II (type II) of OR_n.
  ElementSet typed_ideal_set(Universe const& u, MSetType type);

  // Every down-closed union of J-classes, each verified absorbing, in order
  // of size then members. Nothing is suppressed: sets missing from the
  // published list come back with listed = false.
  std::vector<IdealDescriptor> enumerate_ideals(Universe const&  u,
                                                GreenData const& green);

}  // namespace rookcong

#endif  // ROOKCONG_IDEALS_HPP

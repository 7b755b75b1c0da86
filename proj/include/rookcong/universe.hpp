#ifndef ROOKCONG_UNIVERSE_HPP
#define ROOKCONG_UNIVERSE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "admissible.hpp"
#include "membership.hpp"
#include "partial_injection.hpp"

namespace rookcong {

  using Index = std::uint32_t;

  struct EnumerationLimits {
    int         max_degree   = 8;
    std::size_t max_elements = 20000;
    // Every product of members is checked to be a member up to this degree;
    // above it, closure_samples random pairs are checked instead.
    int         exhaustive_closure_degree = 4;
    std::size_t closure_samples           = 100000;
    // A full product table is cached when size^2 is at most this.
    std::size_t product_table_entries = std::size_t(1) << 22;
  };

  // Defaults, with max_elements overridden by RCL_BUDGET_ELEMENTS if set.
  EnumerationLimits limits_from_environment();

  // Number of members of the family at degree n, counted stratum by stratum
  // from admissible sets (no enumeration of maps).
  std::size_t universe_size(Family f, int n);

  // An enumerated finite monoid of partial injections. Index 0 is the empty
  // map, index 1 the identity; the remaining elements follow in canonical
  // order. Immutable after construction.
  class Universe {
   public:
    static constexpr Index zero     = 0;
    static constexpr Index identity = 1;

    Family      family() const noexcept { return _family; }
    int         degree() const noexcept { return _degree; }
    int         half_degree() const noexcept { return _degree / 2; }
    std::size_t size() const noexcept { return _elements.size(); }

    PartialInjection const& at(Index i) const { return _elements[i]; }
    std::span<PartialInjection const> elements() const noexcept {
      return _elements;
    }

    std::optional<Index> index_of(PartialInjection const& x) const;
    // Throws std::domain_error if x is not a member.
    Index require_index(PartialInjection const& x) const;

    int rank(Index i) const noexcept { return _rank[i]; }
    // Type of the domain for elements of rank n/2, otherwise empty.
    std::optional<MSetType> type(Index i) const noexcept;

    // at(a) * at(b), y acting first.
    Index product(Index a, Index b) const;

    bool has_product_table() const noexcept { return !_table.empty(); }

    // A generating set of the monoid, chosen greedily from the top rank
    // down; deterministic.
    std::span<Index const> generators() const noexcept { return _generators; }

    // Number of elements of each rank 0..n.
    std::vector<std::size_t> rank_strata() const;

    std::vector<Index> elements_of_rank(int k) const;

   private:
    friend Universe enumerate_universe(Family, int, EnumerationLimits const&);

    Universe() = default;
    void  build_index();
    Index lookup(std::uint64_t key) const;

    Family                        _family = Family::R;
    int                           _degree = 0;
    std::vector<PartialInjection> _elements;
    std::vector<std::uint8_t>     _rank;
    std::vector<std::int8_t>      _type;
    std::vector<std::uint64_t>    _slot_keys;
    std::vector<Index>            _slot_values;
    int                           _slot_shift = 0;
    std::vector<Index>            _table;
    std::vector<Index>            _generators;
  };

  // Throws resource_error if n or the universe size exceeds the limits,
  // std::domain_error if n is not a positive even integer (odd n is allowed
  // for R).
  Universe enumerate_universe(Family f, int n,
                              EnumerationLimits const& limits = {});

}  // namespace rookcong

#endif  // ROOKCONG_UNIVERSE_HPP

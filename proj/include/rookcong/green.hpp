#ifndef ROOKCONG_GREEN_HPP
#define ROOKCONG_GREEN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "universe.hpp"

namespace rookcong {

  enum class GreenRelation { L, R, H, J };

  struct JClassInfo {
    int                     rank;
    std::optional<MSetType> type;  // set for the rank-m classes of OR_n
    std::size_t             size;
    Index                   representative;
  };

  // Class ids per element for each relation, numbered by first appearance in
  // index order. D coincides with J on finite monoids and is not stored
  // separately.
  struct GreenData {
    std::vector<std::uint32_t> L, R, H, J;
    std::vector<JClassInfo>    j_classes;
    // j_leq[a][b] iff J-class a lies below J-class b.
    std::vector<std::vector<bool>> j_leq;

    std::vector<std::uint32_t> const& ids(GreenRelation rel) const;
    std::vector<std::uint32_t> const& D() const noexcept { return J; }
    std::size_t                       count(GreenRelation rel) const;
    // Sizes of the classes of rel, indexed by class id.
    std::vector<std::size_t> class_sizes(GreenRelation rel) const;
  };

  // Renumber arbitrary labels by first appearance.
  std::vector<std::uint32_t>
  canonical_ids(std::vector<std::uint64_t> const& labels);

  // x * S, computed by brute force.
  ElementSet principal_right(Universe const& u, Index x);
  // S * x
  ElementSet principal_left(Universe const& u, Index x);
  // S * x * S
  ElementSet principal_twosided(Universe const& u, Index x);

  // Green's relations from the domain/image/rank/type characterizations.
  GreenData green_partition(Universe const& u);

  enum class JMethod {
    two_sided_ideals,  // equal S x S; |S|^2 products per element
    d_relation         // join of L and R; valid since S is finite
  };

  // Green's relations from principal-ideal equality. j_leq is filled only
  // for JMethod::two_sided_ideals.
  GreenData green_partition_bruteforce(Universe const& u,
                                       JMethod method = JMethod::two_sided_ideals);

  // Closed-form class counts and sizes for OR_n with n = 2m.
  struct StratumFormula {
    int           rank;
    std::uint64_t l_size;  // |L(σ)| = |R(σ)|
    std::uint64_t h_size;
    // |D(σ)| as printed; at rank m the printed value covers both types.
    std::uint64_t d_size;
    std::uint64_t elements;  // number of elements of this rank
  };

  struct CountFormulas {
    int                         m;
    std::uint64_t               l_classes;
    std::uint64_t               r_classes;
    std::uint64_t               h_classes;
    std::uint64_t               j_classes;
    std::uint64_t               d_classes;
    std::uint64_t               unit_group_order;
    std::uint64_t               total_elements;
    std::vector<StratumFormula> strata;  // ranks 0..m, then n
  };

  CountFormulas class_count_formulas(int m);

  // One printed-versus-observed comparison for an OR_n universe.
  struct FormulaComparison {
    std::string             quantity;
    std::optional<int>      rank;
    std::optional<MSetType> type;
    std::uint64_t           printed;
    std::uint64_t           observed;
    std::string             note;

    bool agrees() const noexcept { return printed == observed; }
  };

  // Compares every closed form against the given Green data. Per-class
  // sizes are compared for every class of the stratum; the observed value
  // reported is the common size (or the first differing one).
  std::vector<FormulaComparison> compare_formulas(Universe const&  u,
                                                  GreenData const& green);

}  // namespace rookcong

#endif  // ROOKCONG_GREEN_HPP

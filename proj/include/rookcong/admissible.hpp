#ifndef ROOKCONG_ADMISSIBLE_HPP
#define ROOKCONG_ADMISSIBLE_HPP

#include <string_view>
#include <vector>

#include "partial_injection.hpp"

namespace rookcong {

  // A ∩ θ(A) = ∅, or A is ∅ or all of {1..n}.
  bool is_admissible(int n, PointSet s);

  class AdmissibleSet {
   public:
    // Throws std::domain_error if s is not admissible.
    AdmissibleSet(int n, PointSet s);

    int              degree() const noexcept { return _degree; }
    PointSet         mask() const noexcept { return _mask; }
    int              size() const { return popcount(_mask); }
    std::vector<int> elements() const { return points_of(_mask); }

    friend bool operator==(AdmissibleSet const&, AdmissibleSet const&)
        = default;

   private:
    int      _degree;
    PointSet _mask;
  };

  // All admissible k-subsets of {1..n} in lexicographic order of their
  // sorted tuples. Empty exactly when n/2 < k < n.
  std::vector<AdmissibleSet> admissible_subsets(int n, int k);

  enum class MSetType { I, II };

  std::string_view to_string(MSetType t);

  // Type of an admissible (n/2)-set: I iff it has an even number of
  // elements above n/2. Throws std::domain_error on wrong size or an
  // inadmissible set.
  MSetType type_of(int n, PointSet s);

  // ε_A, the identity map on A.
  PartialInjection idempotent_of(AdmissibleSet const& a);
  PartialInjection idempotent_of(int n, PointSet s);

}  // namespace rookcong

#endif  // ROOKCONG_ADMISSIBLE_HPP

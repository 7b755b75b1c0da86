#ifndef ROOKCONG_MEMBERSHIP_HPP
#define ROOKCONG_MEMBERSHIP_HPP

#include <string_view>

#include "partial_injection.hpp"

namespace rookcong {

  // R: rook monoid, SR: symplectic rook monoid, OR: orthogonal rook monoid.
  enum class Family { R, SR, OR };

  std::string_view to_string(Family f);
  // Case-insensitive "r", "sr", "or". Throws std::invalid_argument.
  Family parse_family(std::string_view text);

  // Unit group of the family: S_n for R, W for SR, W' for OR.
  bool in_unit_group(Family f, PartialInjection const& x);

  bool is_member(Family f, PartialInjection const& x);

  // x * x == x.
  bool is_idempotent(PartialInjection const& x);

  // The defining condition for rank-n symplectic maps, decided by checking
  // every admissible subset. Exponential; used to cross-check the θ-commuting
  // characterization.
  bool maps_admissible_to_admissible(PartialInjection const& x);

}  // namespace rookcong

#endif  // ROOKCONG_MEMBERSHIP_HPP

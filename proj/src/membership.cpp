#include "rookcong/membership.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "rookcong/admissible.hpp"

namespace rookcong {

  std::string_view to_string(Family f) {
    switch (f) {
      case Family::R:
        return "R";
      case Family::SR:
        return "SR";
      case Family::OR:
        return "OR";
    }
    return "?";
  }

  Family parse_family(std::string_view text) {
    std::string lower;
    for (char c : text) {
      lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (lower == "r") {
      return Family::R;
    } else if (lower == "sr") {
      return Family::SR;
    } else if (lower == "or") {
      return Family::OR;
    }
    throw std::invalid_argument("unknown family \"" + std::string(text)
                                + "\" (expected r, sr or or)");
  }

  namespace {
    bool commutes_with_theta(PartialInjection const& x) {
      int const n = x.degree();
      for (int i = 1; i <= n; ++i) {
        if (x[theta(n, i)] != theta(n, x[i])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool in_unit_group(Family f, PartialInjection const& x) {
    int const n = x.degree();
    if (x.rank() != n) {
      return false;
    }
    if (f == Family::R) {
      return true;
    }
    if (n % 2 != 0 || !commutes_with_theta(x)) {
      return false;
    }
    if (f == Family::SR) {
      return true;
    }
    // |x({1..m}) ∩ {m+1..n}| even
    int const      m     = n / 2;
    PointSet const lower = full_set(m);
    PointSet       moved = 0;
    for (int i = 1; i <= m; ++i) {
      moved |= PointSet(1) << (x[i] - 1);
    }
    return popcount(moved & ~lower) % 2 == 0;
  }

  bool is_member(Family f, PartialInjection const& x) {
    if (f == Family::R) {
      return true;
    }
    int const n = x.degree();
    if (n % 2 != 0) {
      return false;
    }
    int const m = n / 2;
    int const k = x.rank();
    if (k == n) {
      return in_unit_group(f, x);
    }
    if (!is_admissible(n, x.domain()) || !is_admissible(n, x.image())) {
      return false;
    }
    if (f == Family::OR && k == m) {
      return type_of(n, x.domain()) == type_of(n, x.image());
    }
    return true;
  }

  bool is_idempotent(PartialInjection const& x) {
    return compose(x, x) == x;
  }

  bool maps_admissible_to_admissible(PartialInjection const& x) {
    int const n = x.degree();
    if (x.rank() != n) {
      return false;
    }
    for (PointSet s = 0; s <= full_set(n); ++s) {
      if (!is_admissible(n, s)) {
        continue;
      }
      PointSet image = 0;
      for (int p : points_of(s)) {
        image |= PointSet(1) << (x[p] - 1);
      }
      if (!is_admissible(n, image)) {
        return false;
      }
    }
    return true;
  }

}  // namespace rookcong

#include "rookcong/ideals.hpp"

#include <algorithm>

namespace rookcong {

  std::string IdealDescriptor::label() const {
    std::string const k_text = k ? std::to_string(*k) : "?";
    switch (kind) {
      case IdealKind::rank_bounded:
        return "I_" + k_text;
      case IdealKind::type_one:
        return "I_" + k_text + "^I";
      case IdealKind::type_two:
        return "I_" + k_text + "^II";
      case IdealKind::union_of_types:
        return "I_" + k_text + "^I ∪ I_" + k_text + "^II";
      case IdealKind::other:
        break;
    }
    return "other";
  }

  bool is_absorbing(Universe const& u, ElementSet const& members) {
    auto const inside = members.indices();
    // With a cached table every element is tried; otherwise the generating
    // set suffices, since S x S is reached by multiplying by generators.
    std::vector<Index> multipliers;
    if (u.has_product_table()) {
      multipliers.resize(u.size());
      for (Index i = 0; i < u.size(); ++i) {
        multipliers[i] = i;
      }
    } else {
      multipliers.assign(u.generators().begin(), u.generators().end());
    }
    for (Index x : inside) {
      for (Index s : multipliers) {
        if (!members.contains(u.product(s, x))
            || !members.contains(u.product(x, s))) {
          return false;
        }
      }
    }
    return true;
  }

  ElementSet rank_bounded_set(Universe const& u, int k) {
    ElementSet out(u.size());
    for (Index i = 0; i < u.size(); ++i) {
      if (u.rank(i) <= k) {
        out.insert(i);
      }
    }
    return out;
  }

  ElementSet typed_ideal_set(Universe const& u, MSetType type) {
    int const  m = u.half_degree();
    ElementSet out(u.size());
    for (Index i = 0; i < u.size(); ++i) {
      if (u.rank(i) < m || (u.rank(i) == m && u.type(i) == type)) {
        out.insert(i);
      }
    }
    return out;
  }

  IdealDescriptor describe_ideal(Universe const&   u,
                                 GreenData const&  green,
                                 ElementSet const& members) {
    IdealDescriptor d;
    d.members   = members;
    d.absorbing = is_absorbing(u, members);

    std::size_t const classes = green.j_classes.size();
    std::vector<int>  inside(classes, -1);
    bool              union_of_classes = true;
    for (Index i = 0; i < u.size(); ++i) {
      int const here = members.contains(i) ? 1 : 0;
      auto&     seen = inside[green.J[i]];
      if (seen < 0) {
        seen = here;
      } else if (seen != here) {
        union_of_classes = false;
      }
    }
    if (union_of_classes) {
      for (std::uint32_t c = 0; c < classes; ++c) {
        if (inside[c] == 1) {
          d.j_classes.push_back(c);
        }
      }
    }

    int const n = u.degree();
    int const m = u.half_degree();
    if (u.family() == Family::OR) {
      if (members == typed_ideal_set(u, MSetType::I)) {
        d.kind   = IdealKind::type_one;
        d.k      = m;
        d.listed = true;
        return d;
      }
      if (members == typed_ideal_set(u, MSetType::II)) {
        d.kind   = IdealKind::type_two;
        d.k      = m;
        d.listed = true;
        return d;
      }
      if (members == rank_bounded_set(u, m)) {
        d.kind = IdealKind::union_of_types;
        d.k    = m;
        return d;
      }
    }
    for (int k = 0; k <= n; ++k) {
      if (u.family() == Family::OR && k >= m && k < n) {
        continue;
      }
      if (members == rank_bounded_set(u, k)) {
        d.kind   = IdealKind::rank_bounded;
        d.k      = k;
        d.listed = true;
        return d;
      }
    }
    return d;
  }

  std::vector<IdealDescriptor> enumerate_ideals(Universe const&  u,
                                                GreenData const& green) {
    std::size_t const c = green.j_classes.size();
    std::vector<IdealDescriptor> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << c); ++mask) {
      bool down_closed = true;
      for (std::size_t b = 0; b < c && down_closed; ++b) {
        if (((mask >> b) & 1) == 0) {
          continue;
        }
        for (std::size_t a = 0; a < c; ++a) {
          if (green.j_leq[a][b] && ((mask >> a) & 1) == 0) {
            down_closed = false;
            break;
          }
        }
      }
      if (!down_closed) {
        continue;
      }
      ElementSet members(u.size());
      for (Index i = 0; i < u.size(); ++i) {
        if ((mask >> green.J[i]) & 1) {
          members.insert(i);
        }
      }
      out.push_back(describe_ideal(u, green, members));
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      auto const cx = x.members.count();
      auto const cy = y.members.count();
      if (cx != cy) {
        return cx < cy;
      }
      return x.members.indices() < y.members.indices();
    });
    return out;
  }

}  // namespace rookcong

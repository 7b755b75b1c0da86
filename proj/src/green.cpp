#include "rookcong/green.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace rookcong {

  namespace {
    std::uint64_t binomial(int n, int k) {
      if (k < 0 || k > n) {
        return 0;
      }
      std::uint64_t b = 1;
      for (int i = 1; i <= k; ++i) {
        b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
      }
      return b;
    }

    std::uint64_t factorial(int k) {
      std::uint64_t f = 1;
      for (int i = 2; i <= k; ++i) {
        f *= static_cast<std::uint64_t>(i);
      }
      return f;
    }

    std::uint64_t pow_u(std::uint64_t base, int e) {
      std::uint64_t r = 1;
      while (e-- > 0) {
        r *= base;
      }
      return r;
    }

    std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

    void fill_j_classes(Universe const& u, GreenData& g) {
      std::size_t const count
          = g.J.empty() ? 0 : *std::max_element(g.J.begin(), g.J.end()) + 1;
      g.j_classes.assign(count, JClassInfo{0, std::nullopt, 0, 0});
      std::vector<bool> seen(count, false);
      for (Index i = 0; i < u.size(); ++i) {
        auto& info = g.j_classes[g.J[i]];
        if (!seen[g.J[i]]) {
          seen[g.J[i]]        = true;
          info.rank           = u.rank(i);
          info.representative = i;
          if (u.family() == Family::OR && u.rank(i) == u.half_degree()) {
            info.type = u.type(i);
          }
        }
        ++info.size;
      }
    }

    std::vector<std::uint32_t>
    ids_from_sets(std::vector<ElementSet> const& sets) {
      std::unordered_map<ElementSet, std::uint64_t> first;
      std::vector<std::uint64_t>                    labels(sets.size());
      for (std::size_t i = 0; i < sets.size(); ++i) {
        labels[i] = first.emplace(sets[i], i).first->second;
      }
      return canonical_ids(labels);
    }
  }  // namespace

  std::vector<std::uint32_t> const& GreenData::ids(GreenRelation rel) const {
    switch (rel) {
      case GreenRelation::L:
        return L;
      case GreenRelation::R:
        return R;
      case GreenRelation::H:
        return H;
      case GreenRelation::J:
        break;
    }
    return J;
  }

  std::size_t GreenData::count(GreenRelation rel) const {
    auto const& v = ids(rel);
    return v.empty() ? 0 : *std::max_element(v.begin(), v.end()) + 1;
  }

  std::vector<std::size_t> GreenData::class_sizes(GreenRelation rel) const {
    std::vector<std::size_t> sizes(count(rel), 0);
    for (auto id : ids(rel)) {
      ++sizes[id];
    }
    return sizes;
  }

  std::vector<std::uint32_t>
  canonical_ids(std::vector<std::uint64_t> const& labels) {
    std::unordered_map<std::uint64_t, std::uint32_t> id_of;
    std::vector<std::uint32_t>                       out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, fresh] = id_of.emplace(labels[i],
                                       static_cast<std::uint32_t>(id_of.size()));
      out[i] = it->second;
    }
    return out;
  }

  ElementSet principal_right(Universe const& u, Index x) {
    ElementSet out(u.size());
    for (Index t = 0; t < u.size(); ++t) {
      out.insert(u.product(x, t));
    }
    return out;
  }

  ElementSet principal_left(Universe const& u, Index x) {
    ElementSet out(u.size());
    for (Index t = 0; t < u.size(); ++t) {
      out.insert(u.product(t, x));
    }
    return out;
  }

  ElementSet principal_twosided(Universe const& u, Index x) {
    auto const right = principal_right(u, x).indices();
    ElementSet out(u.size());
    for (Index s = 0; s < u.size(); ++s) {
      for (Index r : right) {
        out.insert(u.product(s, r));
      }
    }
    return out;
  }

  GreenData green_partition(Universe const& u) {
    std::size_t const          n = u.size();
    std::vector<std::uint64_t> l(n), r(n), h(n), j(n);
    bool const                 typed = u.family() == Family::OR;
    for (Index i = 0; i < n; ++i) {
      auto const& x = u.at(i);
      l[i]          = x.domain();
      r[i]          = x.image();
      h[i]          = (std::uint64_t(x.domain()) << 32) | x.image();
      std::uint64_t type_tag = 0;
      if (typed && x.rank() == u.half_degree()) {
        type_tag = *u.type(i) == MSetType::I ? 1 : 2;
      }
      j[i] = std::uint64_t(x.rank()) * 4 + type_tag;
    }
    GreenData g;
    g.L = canonical_ids(l);
    g.R = canonical_ids(r);
    g.H = canonical_ids(h);
    g.J = canonical_ids(j);
    fill_j_classes(u, g);
    std::size_t const c = g.j_classes.size();
    g.j_leq.assign(c, std::vector<bool>(c, false));
    for (std::size_t a = 0; a < c; ++a) {
      for (std::size_t b = 0; b < c; ++b) {
        g.j_leq[a][b] = a == b || g.j_classes[a].rank < g.j_classes[b].rank;
      }
    }
    return g;
  }

  GreenData green_partition_bruteforce(Universe const& u, JMethod method) {
    std::size_t const       n = u.size();
    std::vector<ElementSet> left, right;
    left.reserve(n);
    right.reserve(n);
    for (Index i = 0; i < n; ++i) {
      left.push_back(principal_left(u, i));
    }
    GreenData g;
    g.L = ids_from_sets(left);
    left.clear();
    left.shrink_to_fit();
    for (Index i = 0; i < n; ++i) {
      right.push_back(principal_right(u, i));
    }
    g.R = ids_from_sets(right);
    right.clear();
    right.shrink_to_fit();

    std::vector<std::uint64_t> h(n);
    for (Index i = 0; i < n; ++i) {
      h[i] = (std::uint64_t(g.L[i]) << 32) | g.R[i];
    }
    g.H = canonical_ids(h);

    if (method == JMethod::two_sided_ideals) {
      std::vector<ElementSet> twosided;
      twosided.reserve(n);
      for (Index i = 0; i < n; ++i) {
        twosided.push_back(principal_twosided(u, i));
      }
      g.J = ids_from_sets(twosided);
      fill_j_classes(u, g);
      std::size_t const c = g.j_classes.size();
      g.j_leq.assign(c, std::vector<bool>(c, false));
      for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = 0; b < c; ++b) {
          g.j_leq[a][b] = twosided[g.j_classes[b].representative].contains(
              g.j_classes[a].representative);
        }
      }
    } else {
      std::vector<std::uint32_t> parent(n);
      std::iota(parent.begin(), parent.end(), std::uint32_t(0));
      std::vector<std::int64_t> first_l(n, -1), first_r(n, -1);
      for (Index i = 0; i < n; ++i) {
        for (auto [first, id] : {std::pair{&first_l, g.L[i]},
                                 std::pair{&first_r, g.R[i]}}) {
          auto& f = (*first)[id];
          if (f < 0) {
            f = i;
          } else {
            parent[find_root(parent, i)]
                = find_root(parent, static_cast<std::uint32_t>(f));
          }
        }
      }
      std::vector<std::uint64_t> j(n);
      for (Index i = 0; i < n; ++i) {
        j[i] = find_root(parent, i);
      }
      g.J = canonical_ids(j);
      fill_j_classes(u, g);
    }
    return g;
  }

  CountFormulas class_count_formulas(int m) {
    if (m < 1) {
      throw std::domain_error("class_count_formulas: m must be at least 1");
    }
    CountFormulas f{};
    f.m                = m;
    f.unit_group_order = pow_u(2, m - 1) * factorial(m);

    f.l_classes = 1;
    for (int k = 0; k <= m; ++k) {
      f.l_classes += binomial(m, k) * pow_u(2, k);
    }
    f.r_classes = f.l_classes;

    f.h_classes = 1 + pow_u(4, m) / 2;
    for (int k = 0; k <= m - 1; ++k) {
      f.h_classes += binomial(m, k) * binomial(m, k) * pow_u(4, k);
    }
    f.j_classes = static_cast<std::uint64_t>(m) + 3;
    f.d_classes = f.j_classes;

    for (int k = 0; k < m; ++k) {
      std::uint64_t const d = binomial(m, k) * binomial(m, k) * pow_u(4, k)
                              * factorial(k);
      f.strata.push_back(
          {k, binomial(m, k) * pow_u(2, k) * factorial(k), factorial(k), d, d});
    }
    std::uint64_t const rank_m = pow_u(4, m) / 2 * factorial(m);
    f.strata.push_back({m, f.unit_group_order, factorial(m), rank_m, rank_m});
    f.strata.push_back({2 * m, f.unit_group_order, f.unit_group_order,
                        f.unit_group_order, f.unit_group_order});
    f.total_elements = 0;
    for (auto const& s : f.strata) {
      f.total_elements += s.elements;
    }
    return f;
  }

  std::vector<FormulaComparison> compare_formulas(Universe const&  u,
                                                  GreenData const& green) {
    if (u.family() != Family::OR) {
      throw std::domain_error(
          "closed-form class counts are only defined for OR_n");
    }
    int const  m = u.half_degree();
    auto const f = class_count_formulas(m);
    std::vector<FormulaComparison> out;

    out.push_back({"elements", std::nullopt, std::nullopt, f.total_elements,
                   u.size(), ""});
    out.push_back({"L-classes", std::nullopt, std::nullopt, f.l_classes,
                   green.count(GreenRelation::L), ""});
    out.push_back({"R-classes", std::nullopt, std::nullopt, f.r_classes,
                   green.count(GreenRelation::R), ""});
    out.push_back({"H-classes", std::nullopt, std::nullopt, f.h_classes,
                   green.count(GreenRelation::H), ""});
    out.push_back({"J-classes", std::nullopt, std::nullopt, f.j_classes,
                   green.count(GreenRelation::J), ""});
    out.push_back({"D-classes", std::nullopt, std::nullopt, f.d_classes,
                   green.count(GreenRelation::J), ""});
    out.push_back({"unit group order", std::nullopt, std::nullopt,
                   f.unit_group_order, u.rank_strata()[u.degree()], ""});

    auto const strata = u.rank_strata();
    for (auto const& s : f.strata) {
      out.push_back({"rank stratum size", s.rank, std::nullopt, s.elements,
                     strata[s.rank], ""});
      // Observed per-class sizes, split by type on the rank-m stratum.
      std::vector<std::optional<MSetType>> types{std::nullopt};
      if (s.rank == m) {
        types = {MSetType::I, MSetType::II};
      }
      for (auto type : types) {
        auto observe = [&](GreenRelation rel) -> std::uint64_t {
          auto const&   ids   = green.ids(rel);
          auto const    sizes = green.class_sizes(rel);
          std::uint64_t value = 0;
          bool          first = true;
          for (Index i = 0; i < u.size(); ++i) {
            if (u.rank(i) != s.rank || (type && u.type(i) != type)) {
              continue;
            }
            if (first) {
              value = sizes[ids[i]];
              first = false;
            } else if (sizes[ids[i]] != value) {
              return sizes[ids[i]];
            }
          }
          return value;
        };
        out.push_back({"|L(x)|", s.rank, type, s.l_size,
                       observe(GreenRelation::L), ""});
        out.push_back({"|R(x)|", s.rank, type, s.l_size,
                       observe(GreenRelation::R), ""});
        out.push_back({"|H(x)|", s.rank, type, s.h_size,
                       observe(GreenRelation::H), ""});
        FormulaComparison d{"|D(x)|", s.rank, type, s.d_size,
                            observe(GreenRelation::J), ""};
        if (type && d.printed != d.observed
            && d.printed == 2 * d.observed) {
          d.note = "printed value equals the two rank-m classes combined";
        }
        out.push_back(d);
      }
    }
    return out;
  }

}  // namespace rookcong

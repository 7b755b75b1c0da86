// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rookcong/congruence.hpp"
#include "rookcong/counterexample.hpp"
#include "rookcong/families.hpp"
#include "rookcong/green.hpp"
#include "rookcong/h_class.hpp"
#include "rookcong/ideals.hpp"
#include "rookcong/universe.hpp"

#include "helpers.hpp"
#include "structure_checks.hpp"
#include "oracles.hpp"

using namespace rookcong;
using oracle::binomial;
using oracle::factorial;
using oracle::power;
using std::uint64_t;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  class Criteria {
   public:
    // limit in seconds; 0 means no limit.
    void run(int id, std::string const& name, double limit,
             std::function<void(Outcome&)> const& body) {
      Outcome    o;
      auto const start = std::chrono::steady_clock::now();
      try {
        body(o);
      } catch (std::exception const& e) {
        o.pass = false;
        o.detail += std::string(" exception: ") + e.what();
      }
      double const secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      if (limit > 0 && secs > limit) {
        o.pass = false;
        o.detail += " over time limit";
      }
      _failed += o.pass ? 0 : 1;
      std::printf("%s %d %s (%.2f s", o.pass ? "PASS" : "FAIL", id,
                  name.c_str(), secs);
      if (limit > 0) {
        std::printf(", limit %.0f s", limit);
      }
      std::printf(")%s\n", o.detail.c_str());
      std::fflush(stdout);
    }

    int failed() const {
      return _failed;
    }

   private:
    int _failed = 0;
  };

  void expect(Outcome& o, bool ok, std::string const& what) {
    if (!ok) {
      o.pass = false;
      o.detail += " [" + what + "]";
    }
  }

  std::string name_of(Family f, int n) {
    return std::string(to_string(f)) + "_" + std::to_string(n);
  }

  oracle::Kind kind_of(Family f) {
    return f == Family::OR   ? oracle::Kind::OR
           : f == Family::SR ? oracle::Kind::SR
                             : oracle::Kind::R;
  }

  // Closed forms for OR_n, n = 2m, per rank.
  uint64_t admissible_k_sets(int m, int k) {
    return binomial(m, k) * power(2, k);
  }

  uint64_t or_elements_of_rank(int m, int k) {
    if (k == 2 * m) {
      return power(2, m - 1) * factorial(m);
    }
    if (k == m) {
      return 2 * power(2, m - 1) * power(2, m - 1) * factorial(m);
    }
    return admissible_k_sets(m, k) * admissible_k_sets(m, k) * factorial(k);
  }

  uint64_t sr_elements_of_rank(int m, int k) {
    if (k == 2 * m) {
      return power(2, m) * factorial(m);
    }
    return admissible_k_sets(m, k) * admissible_k_sets(m, k) * factorial(k);
  }

  uint64_t formula_size(Family f, int n) {
    int const m     = n / 2;
    uint64_t  total = 0;
    for (int k = 0; k <= m; ++k) {
      total += f == Family::OR ? or_elements_of_rank(m, k)
                               : sr_elements_of_rank(m, k);
    }
    return total + (f == Family::OR ? or_elements_of_rank(m, n)
                                    : sr_elements_of_rank(m, n));
  }

  std::vector<int> points(PointSet s, int n) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
      if (s & point_set({i})) {
        out.push_back(i);
      }
    }
    return out;
  }

  bool subset(std::vector<int> const& a, std::vector<int> const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  std::set<Index> as_set(ElementSet const& s) {
    auto const v = s.indices();
    return {v.begin(), v.end()};
  }

  // 1. Universe sizes.
  void sizes(Outcome& o) {
    struct Row {
      Family   f;
      int      n;
      uint64_t expected;
    };
    for (auto const& r : {Row{Family::OR, 2, 6}, Row{Family::OR, 4, 37},
                          Row{Family::SR, 4, 57}, Row{Family::OR, 6, 541}}) {
      auto const     u      = enumerate_universe(r.f, r.n);
      uint64_t const brute  = oracle::members(kind_of(r.f), r.n).size();
      uint64_t const closed = formula_size(r.f, r.n);
      o.detail += " " + name_of(r.f, r.n) + "=" + std::to_string(u.size())
                  + " (expected " + std::to_string(r.expected) + ", oracle "
                  + std::to_string(brute) + ", strata formulas "
                  + std::to_string(closed) + ")";
      expect(o, u.size() == r.expected, name_of(r.f, r.n) + " size");
      expect(o, u.size() == brute, name_of(r.f, r.n) + " oracle");
      expect(o, u.size() == closed, name_of(r.f, r.n) + " formulas");
    }
  }

  // 2. Green class counts and class sizes from principal ideals.
  void counting(Outcome& o) {
    for (int n = 2; n <= 8; n += 2) {
      int const  m = n / 2;
      auto const u = enumerate_universe(Family::OR, n);
      auto const g = green_partition_bruteforce(u, JMethod::d_relation);

      uint64_t l_classes = 1;
      uint64_t h_classes = 1 + power(4, m) / 2;
      for (int k = 0; k <= m; ++k) {
        l_classes += admissible_k_sets(m, k);
      }
      for (int k = 0; k < m; ++k) {
        h_classes += admissible_k_sets(m, k) * admissible_k_sets(m, k);
      }
      uint64_t const j_classes = m + 3;
      std::string    tag       = "OR_" + std::to_string(n);
      expect(o, g.count(GreenRelation::L) == l_classes, tag + " L count");
      expect(o, g.count(GreenRelation::R) == l_classes, tag + " R count");
      expect(o, g.count(GreenRelation::H) == h_classes, tag + " H count");
      expect(o, g.count(GreenRelation::J) == j_classes, tag + " J count");

      auto const f = class_count_formulas(m);
      expect(o,
             f.l_classes == l_classes && f.h_classes == h_classes
                 && f.j_classes == j_classes && f.total_elements == u.size(),
             tag + " library closed forms");

      auto const l_sizes = g.class_sizes(GreenRelation::L);
      auto const r_sizes = g.class_sizes(GreenRelation::R);
      auto const h_sizes = g.class_sizes(GreenRelation::H);
      auto const j_sizes = g.class_sizes(GreenRelation::J);
      uint64_t   d_at_m  = 0;
      for (Index i = 0; i < u.size(); ++i) {
        int const k = u.rank(i);
        uint64_t  l = 0;
        uint64_t  h = 0;
        if (k == n || k == m) {
          l = power(2, m - 1) * factorial(m);
          h = k == n ? l : factorial(m);
        } else {
          l = admissible_k_sets(m, k) * factorial(k);
          h = factorial(k);
        }
        expect(o, l_sizes[g.L[i]] == l, tag + " L size at rank " + std::to_string(k));
        expect(o, r_sizes[g.R[i]] == l, tag + " R size at rank " + std::to_string(k));
        expect(o, h_sizes[g.H[i]] == h, tag + " H size at rank " + std::to_string(k));
        if (k == m) {
          d_at_m = j_sizes[g.J[i]];
        }
      }
      o.detail += " " + tag + ": L=" + std::to_string(l_classes)
                  + " H=" + std::to_string(h_classes)
                  + " J=" + std::to_string(j_classes);
      o.detail += "; rank-" + std::to_string(m) + " D class size "
                  + std::to_string(d_at_m) + " (printed 4^m m!/2 = "
                  + std::to_string(power(4, m) * factorial(m) / 2)
                  + ", reported only)";
    }
  }

  // 3. Principal one-sided and two-sided ideals against their
  // characterizations by image, domain, rank and type.
  void principal_ideals(Outcome& o) {
    std::size_t checked = 0;
    for (int n = 2; n <= 6; n += 2) {
      int const             m = n / 2;
      auto const            u = enumerate_universe(Family::OR, n);
      oracle::Members const is(oracle::Kind::OR, n);
      for (Index s = 0; s < u.size(); ++s) {
        auto const dom_s = points(u.at(s).domain(), n);
        auto const img_s = points(u.at(s).image(), n);
        auto const right = as_set(principal_right(u, s));
        auto const left  = as_set(principal_left(u, s));
        auto const both  = as_set(principal_twosided(u, s));
        std::set<Index> right_x, left_x, both_x;
        for (Index t = 0; t < u.size(); ++t) {
          auto const dom_t = points(u.at(t).domain(), n);
          auto const img_t = points(u.at(t).image(), n);
          if (subset(img_t, img_s)) {
            right_x.insert(t);
          }
          if (subset(dom_t, dom_s)) {
            left_x.insert(t);
          }
          int const rs = u.rank(s);
          int const rt = u.rank(t);
          bool      in = rt <= rs;
          if (rs == m) {
            in = rt < m || (rt == m && is.type_one(dom_t) == is.type_one(dom_s));
          }
          if (in) {
            both_x.insert(t);
          }
        }
        std::string const tag = "OR_" + std::to_string(n) + " element "
                                + std::to_string(s);
        expect(o, right == right_x, tag + " sigma S");
        expect(o, left == left_x, tag + " S sigma");
        expect(o, both == both_x, tag + " S sigma S");
        ++checked;
      }
    }
    o.detail += " " + std::to_string(checked)
                + " elements checked; OR_2 and OR_4 exhaustive, OR_6 "
                  "exhaustive over all 541 elements";
  }

  // 4. Two-sided ideals.
  void ideals(Outcome& o) {
    for (int n = 2; n <= 6; n += 2) {
      int const             m = n / 2;
      auto const            u = enumerate_universe(Family::OR, n);
      oracle::Members const is(oracle::Kind::OR, n);
      auto const            found = enumerate_ideals(u, green_partition(u));
      std::string const     tag   = "OR_" + std::to_string(n);

      std::map<std::string, std::set<Index>> expected;
      auto add = [&](std::string const& label, auto keep) {
        auto& s = expected[label];
        for (Index i = 0; i < u.size(); ++i) {
          if (keep(i)) {
            s.insert(i);
          }
        }
      };
      for (int k = 0; k < m; ++k) {
        add("I_" + std::to_string(k), [&](Index i) { return u.rank(i) <= k; });
      }
      for (bool one : {true, false}) {
        add("I_" + std::to_string(m) + (one ? "^I" : "^II"), [&](Index i) {
          return u.rank(i) < m
                 || (u.rank(i) == m
                     && is.type_one(points(u.at(i).domain(), n)) == one);
        });
      }
      add("I_" + std::to_string(n), [](Index) { return true; });

      // Absorption checked directly over all products.
      for (auto const& [label, s] : expected) {
        bool absorbing = true;
        for (Index a : s) {
          for (Index x = 0; x < u.size() && absorbing; ++x) {
            absorbing = s.count(u.product(x, a)) && s.count(u.product(a, x));
          }
        }
        expect(o, absorbing, tag + " " + label + " absorbing");
      }

      std::map<std::string, std::set<Index>> listed;
      std::vector<std::string>               unlisted;
      for (auto const& d : found) {
        expect(o, d.absorbing, tag + " " + d.label() + " absorbing");
        if (d.listed) {
          listed[d.label()] = as_set(d.members);
        } else {
          unlisted.push_back(d.label());
        }
      }
      expect(o, listed == expected, tag + " listed ideals");
      std::string const both
          = "I_" + std::to_string(m) + "^I ∪ I_" + std::to_string(m) + "^II";
      expect(o, unlisted == std::vector<std::string>{both},
             tag + " unlisted ideals");
      o.detail += " " + tag + ": " + std::to_string(listed.size()) + " listed";
      for (auto const& l : unlisted) {
        o.detail += ", also absorbing: " + l;
      }
    }
  }

  // 5. Group H-classes.
  void h_classes(Outcome& o) {
    std::size_t groups = 0;
    for (int n = 4; n <= 6; n += 2) {
      int const         m   = n / 2;
      auto const        u   = enumerate_universe(Family::OR, n);
      std::string const tag = "OR_" + std::to_string(n);
      for (Index e = 0; e < u.size(); ++e) {
        if (!is_idempotent(u.at(e)) || u.rank(e) == 0
            || (u.rank(e) > m && u.rank(e) < n)) {
          continue;
        }
        int const  k = u.rank(e);
        auto const h = h_class_group(u, e);
        std::set<Index> same;
        for (Index t = 0; t < u.size(); ++t) {
          if (u.at(t).domain() == u.at(e).domain()
              && u.at(t).image() == u.at(e).image()) {
            same.insert(t);
          }
        }
        std::string const where = tag + " rank " + std::to_string(k);
        expect(o, std::set<Index>(h.members.begin(), h.members.end()) == same,
               where + " members");
        if (k == n) {
          std::set<Index> w_prime;
          for (Index t = 0; t < u.size(); ++t) {
            if (oracle::in_w_prime(n, test_helpers::to_map(u.at(t)))) {
              w_prime.insert(t);
            }
          }
          expect(o, same == w_prime, where + " equals W'");
          expect(o, h.group == unit_group(u), where + " group");
          ++groups;
          continue;
        }
        expect(o, h.members.size() == factorial(k), where + " order");
        expect(o, h.group == PermGroup::symmetric(k), where + " is S_k");
        for (std::size_t a = 0; a < h.members.size(); ++a) {
          expect(o, apply_mu(u.at(e), h.mu[a]) == u.at(h.members[a]),
                 where + " bijection");
          for (std::size_t b = 0; b < h.members.size(); ++b) {
            Index const ab = u.product(h.members[a], h.members[b]);
            auto const  it = std::find(h.members.begin(), h.members.end(), ab);
            expect(o, it != h.members.end()
                          && h.mu[it - h.members.begin()] == h.mu[a] * h.mu[b],
                   where + " homomorphism");
          }
        }
        ++groups;
      }
    }
    o.detail += " " + std::to_string(groups) + " group H-classes checked";
  }

  // 6. Classification against the full congruence lattice.
  void classification(Outcome& o, Family f, int n, bool force) {
    auto const     u = enumerate_universe(f, n);
    LatticeOptions options;
    options.force = force;
    auto const r  = verify_classification(u, options);
    auto const tag = name_of(f, n);
    expect(o, r.predicted_not_found.empty(), tag + " predicted not found");
    expect(o, r.matched.size() + r.found_not_predicted.size() == r.lattice_size,
           tag + " accounting");
    if (u.size() <= 7) {
      auto const naive = oracle::all_congruences(test_helpers::oracle_table(u));
      std::set<std::vector<int>> mine;
      for (auto const& p : congruence_lattice(u)) {
        mine.emplace(p.ids().begin(), p.ids().end());
      }
      expect(o, mine == naive, tag + " naive filter");
    }
    o.detail += " " + tag + ": " + std::to_string(r.lattice_size)
                + " congruences, " + std::to_string(r.matched.size())
                + " matched, " + std::to_string(r.predicted_not_found.size())
                + " predicted not found, "
                + std::to_string(r.found_not_predicted.size())
                + " found not predicted";
  }

  // 7. The two extra congruences of OR_4.
  void specials(Outcome& o) {
    using test_helpers::index_of;
    auto const  u   = enumerate_universe(Family::OR, 4);
    Index const eps = Universe::identity;
    Index const d1  = index_of(u, "1 2 3 4 / 2 1 4 3");
    Index const d2  = index_of(u, "1 2 3 4 / 3 4 1 2");
    Index const d12 = u.product(d1, d2);
    auto const  one = build_eq_special(u, 1);
    auto const  two = build_eq_special(u, 2);
    expect(o, is_congruence(u, one), "first is a congruence");
    expect(o, is_congruence(u, two), "second is a congruence");

    auto units = [&](Partition const& p) {
      std::set<std::set<Index>> out;
      for (auto const& cls : p.classes()) {
        std::set<Index> part;
        for (auto i : cls) {
          if (u.rank(i) == 4) {
            part.insert(i);
          }
        }
        if (!part.empty()) {
          out.insert(part);
        }
      }
      return out;
    };
    expect(o, units(one) == std::set<std::set<Index>>{{eps, d1}, {d2, d12}},
           "first unit classes");
    expect(o, units(two) == std::set<std::set<Index>>{{eps, d2}, {d1, d12}},
           "second unit classes");
    for (auto [a, b] : {std::pair{"1 2 / 1 2", "1 2 / 2 1"},
                        std::pair{"1 2 / 3 4", "1 2 / 4 3"},
                        std::pair{"3 4 / 1 2", "3 4 / 2 1"},
                        std::pair{"3 4 / 3 4", "3 4 / 4 3"}}) {
      expect(o, one.related(index_of(u, a), index_of(u, b)),
             std::string(a) + " ~ " + b);
    }
    o.detail += " classes {e, d1} {d2, d1d2} and {e, d2} {d1, d1d2}";
  }

  // 8. Structural properties of products and congruences.
  void structure(Outcome& o) {
    std::size_t total = 0;
    for (auto f : {Family::R, Family::SR, Family::OR}) {
      auto const        u   = enumerate_universe(f, 4);
      std::size_t const bad = structure_checks::rank_of_products(u);
      total += bad;
      expect(o, bad == 0, name_of(f, 4) + " rank of products");
    }
    auto const u = enumerate_universe(Family::OR, 4);
    auto const l = congruence_lattice(u);
    for (auto [name, bad] :
         {std::pair{"related to a lower rank", structure_checks::related_down(u, l)},
          std::pair{"nontrivial class", structure_checks::nontrivial_class(u, l)},
          std::pair{"Rees chain", structure_checks::rees_chain(u, l)}}) {
      total += bad;
      expect(o, bad == 0, std::string("OR_4 ") + name);
    }
    o.detail += " " + std::to_string(total) + " violations over R_4, SR_4, "
                + "OR_4 and the " + std::to_string(l.size())
                + " congruences of OR_4";
    auto const u2 = enumerate_universe(Family::OR, 2);
    auto const l2 = congruence_lattice(u2);
    o.detail += "; OR_2 (reported only): "
                + std::to_string(structure_checks::related_down(u2, l2))
                + " unit classes reaching a lower rank without the whole "
                  "monoid";
  }

  // 9. Conjugation leaves the monoid.
  void conjugation(Outcome& o) {
    int const  n = 8;
    auto const w = conjugation_counterexample(n);
    auto const sigma = test_helpers::to_map(w.sigma);
    auto const s     = test_helpers::to_map(w.s);
    oracle::Map s_inv(n);
    for (int i = 1; i <= n; ++i) {
      s_inv[s[i - 1] - 1] = i;
    }
    auto const conj = oracle::compose(s_inv, oracle::compose(sigma, s));
    expect(o, conj == test_helpers::to_map(w.conjugate), "conjugate");
    expect(o, oracle::rank_of(s) == n, "s is a permutation");
    expect(o, oracle::Members(oracle::Kind::OR, n)(sigma), "sigma in OR_8");
    expect(o, !oracle::Members(oracle::Kind::SR, n)(conj), "conjugate not in SR_8");
    int first = 0;
    for (int i = 1; i <= n && first == 0; ++i) {
      if (conj[oracle::theta(n, i) - 1] != oracle::theta(n, conj[i - 1])) {
        first = i;
      }
    }
    expect(o, first == 1, "violation at i = 1");
    expect(o, w.violated_at == 1 && w.sigma_in_or && !w.conjugate_in_sr,
           "library witness");
    o.detail += " sigma = " + to_two_line(w.sigma) + ", s = "
                + to_two_line(w.s) + ", violated at i = "
                + std::to_string(first);
  }

}  // namespace

int main() {
  Criteria c;
  c.run(1, "universe sizes", 5, sizes);
  c.run(2, "Green class counts and sizes, n = 2..8", 120, counting);
  c.run(3, "principal ideals", 0, principal_ideals);
  c.run(4, "two-sided ideals, n = 2..6", 30, ideals);
  c.run(5, "group H-classes of OR_4 and OR_6", 0, h_classes);
  for (auto [f, n] : {std::pair{Family::OR, 2}, std::pair{Family::OR, 4},
                      std::pair{Family::SR, 2}, std::pair{Family::SR, 4}}) {
    c.run(6, "classification " + name_of(f, n), 60,
          [f = f, n = n](Outcome& o) { classification(o, f, n, false); });
  }
#ifdef ROOKCONG_STRETCH
  for (auto f : {Family::OR, Family::SR}) {
    c.run(6, "classification " + name_of(f, 6) + " (stretch)", 900,
          [f](Outcome& o) { classification(o, f, 6, true); });
  }
#endif
  c.run(7, "OR_4 extra congruences", 0, specials);
  c.run(8, "product rank and congruence structure", 0, structure);
  c.run(9, "conjugation counterexample at n = 8", 0, conjugation);
  std::printf("%d criteria failed\n", c.failed());
  return c.failed() == 0 ? 0 : 1;
}

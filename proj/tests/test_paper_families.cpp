#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"

#include "rookcong/congruence.hpp"
#include "rookcong/families.hpp"
#include "rookcong/green.hpp"
#include "rookcong/h_class.hpp"
#include "rookcong/ideals.hpp"
#include "rookcong/universe.hpp"

#include "helpers.hpp"
#include "structure_checks.hpp"

using namespace rookcong;
using test_helpers::index_of;

namespace {
  std::vector<Permutation> trivial(int k) {
    return {Permutation(k)};
  }

  std::vector<Permutation> whole(int k) {
    return PermGroup::symmetric(k).elements();
  }

  ElementSet class_of_zero(Universe const& u, Partition const& p) {
    ElementSet out(u.size());
    for (auto i : p.class_members(p.class_of(Universe::zero))) {
      out.insert(i);
    }
    return out;
  }

  bool singletons_above(Universe const& u, Partition const& p, int k) {
    auto const sizes = p.classes();
    for (Index i = 0; i < u.size(); ++i) {
      if (u.rank(i) > k && sizes[p.class_of(i)].size() != 1) {
        return false;
      }
    }
    return true;
  }

  // Classes restricted to the elements of one rank, ignoring the zero class.
  std::set<std::set<Index>> classes_at_rank(Universe const& u, Partition const& p,
                                            int k) {
    std::set<std::set<Index>> out;
    for (auto const& cls : p.classes()) {
      std::set<Index> part;
      for (auto i : cls) {
        if (u.rank(i) == k) {
          part.insert(i);
        }
      }
      if (!part.empty()) {
        out.insert(part);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("≡_N on OR_n") {
  auto const or4 = enumerate_universe(Family::OR, 4);
  auto const or6 = enumerate_universe(Family::OR, 6);
  CHECK(build_eq_n_or(or4, 1, trivial(1)) == Partition::identity(or4.size()));
  CHECK(build_eq_n_or(or6, 1, trivial(1)) == Partition::identity(or6.size()));

  auto const p = build_eq_n_or(or6, 2, whole(2));
  CHECK(is_congruence(or6, p));
  CHECK(class_of_zero(or6, p) == rank_bounded_set(or6, 1));
  auto const g = green_partition(or6);
  for (Index i = 0; i < or6.size(); ++i) {
    if (or6.rank(i) == 2) {
      for (Index j = 0; j < or6.size(); ++j) {
        CHECK(p.related(i, j) == (g.H[i] == g.H[j]));
      }
    }
  }
  CHECK(singletons_above(or6, p, 2));

  CHECK_THROWS_AS(build_eq_n_or(or4, 2, whole(2)), std::domain_error);
  CHECK_THROWS_AS(build_eq_n_or(or4, 0, trivial(0)), std::domain_error);
  std::vector<Permutation> not_normal{Permutation(3),
                                      Permutation::from_images({2, 1, 3})};
  auto const or8_like = enumerate_universe(Family::OR, 8);
  CHECK_THROWS_AS(build_eq_n_or(or8_like, 3, not_normal), std::domain_error);
  auto const sr4 = enumerate_universe(Family::SR, 4);
  CHECK_THROWS_AS(build_eq_n_or(sr4, 1, trivial(1)), std::domain_error);
}

TEST_CASE("≡_{N1,N2} on OR_n") {
  auto const or2 = enumerate_universe(Family::OR, 2);
  CHECK(build_eq_n1_n2(or2, trivial(1), trivial(1))
        == Partition::identity(or2.size()));

  auto const u = enumerate_universe(Family::OR, 4);
  auto const rees = build_eq_n1_n2(u, trivial(2), trivial(2));
  CHECK(class_of_zero(u, rees) == rank_bounded_set(u, 1));
  CHECK(singletons_above(u, rees, 1));
  CHECK(rees.class_count() == u.size() - 16);

  auto const a = build_eq_n1_n2(u, whole(2), trivial(2));
  auto const b = build_eq_n1_n2(u, trivial(2), whole(2));
  CHECK(a != b);
  auto const g = green_partition(u);
  for (Index i = 0; i < u.size(); ++i) {
    if (u.rank(i) != 2) {
      continue;
    }
    auto const size = a.class_members(a.class_of(i)).size();
    CHECK(size == (u.type(i) == MSetType::I ? 2u : 1u));
  }
  CHECK(is_congruence(u, a));
  CHECK(is_congruence(u, b));
}

TEST_CASE("≡_N^I and ≡_N^II on OR_n") {
  auto const u  = enumerate_universe(Family::OR, 4);
  auto const p1 = build_eq_type(u, MSetType::I, trivial(2));
  CHECK(class_of_zero(u, p1) == typed_ideal_set(u, MSetType::II));
  CHECK(p1.class_count() == 1 + 8 + 4);
  auto const p2 = build_eq_type(u, MSetType::I, whole(2));
  for (Index i = 0; i < u.size(); ++i) {
    if (u.rank(i) == 2 && u.type(i) == MSetType::I) {
      CHECK(p2.class_members(p2.class_of(i)).size() == 2);
    }
  }
  for (int n = 2; n <= 6; n += 2) {
    auto const v = enumerate_universe(Family::OR, n);
    for (auto const& sub : normal_subgroups(PermGroup::symmetric(n / 2)).subgroups) {
      std::vector<Permutation> group;
      for (auto i : sub) {
        group.push_back(PermGroup::symmetric(n / 2).at(i));
      }
      auto const one = build_eq_type(v, MSetType::I, group);
      auto const two = build_eq_type(v, MSetType::II, group);
      CHECK(one != two);
      CHECK(is_congruence(v, one));
      CHECK(is_congruence(v, two));
    }
  }
}

TEST_CASE("the two extra congruences of OR_4") {
  auto const  u   = enumerate_universe(Family::OR, 4);
  Index const eps = Universe::identity;
  Index const d1  = index_of(u, "1 2 3 4 / 2 1 4 3");
  Index const d2  = index_of(u, "1 2 3 4 / 3 4 1 2");
  Index const d12 = u.product(d1, d2);

  auto const one = build_eq_special(u, 1);
  auto const two = build_eq_special(u, 2);
  CHECK(is_congruence(u, one));
  CHECK(is_congruence(u, two));

  CHECK(classes_at_rank(u, one, 4)
        == std::set<std::set<Index>>{{eps, d1}, {d2, d12}});
  CHECK(classes_at_rank(u, two, 4)
        == std::set<std::set<Index>>{{eps, d2}, {d1, d12}});
  CHECK(class_of_zero(u, one) == typed_ideal_set(u, MSetType::II));
  CHECK(class_of_zero(u, two) == typed_ideal_set(u, MSetType::I));

  for (auto [a, b] : {std::pair{"1 2 / 1 2", "1 2 / 2 1"},
                      std::pair{"1 2 / 3 4", "1 2 / 4 3"},
                      std::pair{"3 4 / 1 2", "3 4 / 2 1"},
                      std::pair{"3 4 / 3 4", "3 4 / 4 3"}}) {
    CHECK(one.related(index_of(u, a), index_of(u, b)));
  }
  auto const g = green_partition(u);
  for (Index i = 0; i < u.size(); ++i) {
    if (u.rank(i) == 2 && u.type(i) == MSetType::I) {
      for (Index j = 0; j < u.size(); ++j) {
        CHECK(one.related(i, j) == (g.H[i] == g.H[j]));
      }
    }
  }

  auto const or6 = enumerate_universe(Family::OR, 6);
  CHECK_THROWS_AS(build_eq_special(or6, 1), std::domain_error);
  CHECK_THROWS_AS(build_eq_special(u, 3), std::domain_error);
}

TEST_CASE("≡_N on SR_n") {
  auto const u = enumerate_universe(Family::SR, 4);
  CHECK(build_eq_n_sr(u, 1, trivial(1)) == Partition::identity(u.size()));
  auto const w = unit_group(u);
  auto const p = build_eq_n_sr(u, 4, w.elements());
  CHECK(p.class_count() == 2);
  CHECK(class_of_zero(u, p) == rank_bounded_set(u, 2));
  auto const q = build_eq_n_sr(u, 2, whole(2));
  CHECK(class_of_zero(u, q) == rank_bounded_set(u, 1));
  auto const g = green_partition(u);
  for (Index i = 0; i < u.size(); ++i) {
    if (u.rank(i) == 2) {
      for (Index j = 0; j < u.size(); ++j) {
        CHECK(q.related(i, j) == (g.H[i] == g.H[j]));
      }
    }
  }
  CHECK(singletons_above(u, q, 2));
  CHECK_THROWS_AS(build_eq_n_sr(u, 3, trivial(3)), std::domain_error);
  CHECK_THROWS_AS(build_eq_n_sr(u, 4, whole(4)), std::domain_error);
}

TEST_CASE("predictions") {
  auto const or2 = enumerate_universe(Family::OR, 2);
  auto const p2  = predicted_congruences(or2);
  std::set<Partition> got;
  for (auto const& c : p2.congruences) {
    got.insert(c.partition);
  }
  CHECK(got.count(Partition::identity(or2.size())) == 1);
  CHECK(got.count(Partition::universal(or2.size())) == 1);

  auto const or4  = enumerate_universe(Family::OR, 4);
  auto const p4   = predicted_congruences(or4);
  bool       one  = false;
  bool       two  = false;
  for (auto const& c : p4.congruences) {
    for (auto const& s : c.specs) {
      one = one || s.tag == FamilyTag::or_eq_special_one;
      two = two || s.tag == FamilyTag::or_eq_special_two;
    }
  }
  CHECK(one);
  CHECK(two);
  CHECK(p4.congruences.size() == 12);

  auto const sr4 = enumerate_universe(Family::SR, 4);
  auto const ps  = predicted_congruences(sr4);
  std::size_t expected
      = normal_subgroups(PermGroup::symmetric(1)).subgroups.size()
        + normal_subgroups(PermGroup::symmetric(2)).subgroups.size()
        + normal_subgroups(unit_group(sr4)).subgroups.size() + 1;
  CHECK(ps.spec_count == expected);
  CHECK(ps.spec_count == 10);

  // Every parameterization is kept when several give one partition.
  std::size_t specs = 0;
  for (auto const& c : p4.congruences) {
    specs += c.specs.size();
  }
  CHECK(specs == p4.spec_count);
  CHECK_THROWS_AS(predicted_congruences(enumerate_universe(Family::R, 2)),
                  std::domain_error);
}

TEST_CASE("classification against the lattice") {
  for (auto [f, n] : {std::pair{Family::OR, 2}, std::pair{Family::OR, 4},
                      std::pair{Family::SR, 2}, std::pair{Family::SR, 4}}) {
    auto const u = enumerate_universe(f, n);
    auto const r = verify_classification(u);
    CHECK(r.predicted_not_found.empty());
    CHECK(r.matched.size() + r.found_not_predicted.size() == r.lattice_size);
  }
  auto const u = enumerate_universe(Family::OR, 4);
  auto const r = verify_classification(u);
  CHECK(r.found_not_predicted.size() == 5);
  for (auto const& extra : r.found_not_predicted) {
    CHECK(extra.zero_class.kind == IdealKind::union_of_types);
    CHECK(std::find(extra.tags.begin(), extra.tags.end(),
                    "Rees-type over OR_n ∖ W′")
          != extra.tags.end());
  }
  auto const sr = verify_classification(enumerate_universe(Family::SR, 4));
  CHECK(sr.found_not_predicted.empty());
}

TEST_CASE("classify reports a prediction missing from the lattice") {
  auto const u          = enumerate_universe(Family::OR, 4);
  auto const prediction = predicted_congruences(u);
  std::vector<Partition> partial{Partition::identity(u.size()),
                                 Partition::universal(u.size())};
  auto const r = classify(u, green_partition(u), prediction, partial);
  CHECK(r.matched.size() == 2);
  CHECK(r.found_not_predicted.empty());
  CHECK(r.predicted_not_found.size() + 2 == prediction.spec_count);
}

TEST_CASE("lattice properties on OR_4") {
  auto const u = enumerate_universe(Family::OR, 4);
  auto const l = congruence_lattice(u);
  CHECK(structure_checks::related_down(u, l) == 0);
  CHECK(structure_checks::nontrivial_class(u, l) == 0);
  CHECK(structure_checks::rees_chain(u, l) == 0);
  auto const sr = enumerate_universe(Family::SR, 4);
  CHECK(structure_checks::rank_of_products(sr) == 0);
}

TEST_CASE("on OR_2 a unit can share its class with a lower element") {
  auto const u = enumerate_universe(Family::OR, 2);
  auto const l = congruence_lattice(u);
  // {0, e1} | {e2, 1} and its mirror image relate the identity to a rank-1
  // idempotent without making the class everything.
  CHECK(structure_checks::related_down(u, l) == 2);
  CHECK(structure_checks::nontrivial_class(u, l) == 0);
}

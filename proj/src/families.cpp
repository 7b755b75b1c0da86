#include "rookcong/families.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "rookcong/errors.hpp"
#include "rookcong/h_class.hpp"

namespace rookcong {

  namespace {
    enum class Role { zero, singleton, orbit };

    // Labels: every zero-role element shares one class; orbit-role elements
    // are grouped by the orbits of the subgroup returned for them.
    Partition assemble(
        Universe const&                                             u,
        std::function<Role(Index)> const&                           role,
        std::function<std::span<Permutation const>(Index)> const& acting) {
      std::size_t const          n = u.size();
      std::uint32_t const        unset = static_cast<std::uint32_t>(-1);
      std::vector<std::uint32_t> labels(n, unset);
      std::uint32_t              next = 1;
      for (Index i = 0; i < n; ++i) {
        if (labels[i] != unset) {
          continue;
        }
        switch (role(i)) {
          case Role::zero:
            labels[i] = 0;
            break;
          case Role::singleton:
            labels[i] = next++;
            break;
          case Role::orbit: {
            std::uint32_t const id = next++;
            for (auto const& mu : acting(i)) {
              Index const j = u.require_index(apply_mu(u.at(i), mu));
              if (labels[j] != unset && labels[j] != id) {
                throw invariant_error("subgroup orbits overlap; the acting "
                                      "set is not a subgroup");
              }
              labels[j] = id;
            }
            break;
          }
        }
      }
      return Partition::from_labels(labels);
    }

    void require_family(Universe const& u, Family f, char const* what) {
      if (u.family() != f) {
        throw std::domain_error(std::string(what) + " requires an "
                                + std::string(to_string(f)) + " universe");
      }
    }

    void require_normal(PermGroup const&             parent,
                        std::span<Permutation const> n,
                        char const*                  what) {
      if (!is_normal_subgroup(parent, n)) {
        throw std::domain_error(std::string(what)
                                + ": subgroup is not normal in the parent "
                                  "group of order "
                                + std::to_string(parent.order()));
      }
    }

    std::vector<Permutation> sorted(std::vector<Permutation> v) {
      std::sort(v.begin(), v.end());
      return v;
    }

    std::string subgroup_text(std::vector<Permutation> const& g) {
      std::string out = "{";
      for (std::size_t i = 0; i < g.size(); ++i) {
        out += (i == 0 ? "" : ", ") + g[i].one_line();
      }
      return out + "}";
    }

    bool canonical_before(Partition const& x, Partition const& y) {
      if (x.class_count() != y.class_count()) {
        return x.class_count() > y.class_count();
      }
      return x < y;
    }

    // δ1 and δ2 of the unit group of OR_4.
    Permutation delta(int which) {
      return which == 1 ? Permutation::from_images({2, 1, 4, 3})
                        : Permutation::from_images({3, 4, 1, 2});
    }
  }  // namespace

  std::string_view to_string(FamilyTag tag) {
    switch (tag) {
      case FamilyTag::or_eq_n:
        return "OR_eqN";
      case FamilyTag::or_eq_n1_n2:
        return "OR_eqN1N2";
      case FamilyTag::or_eq_type_one:
        return "OR_eqI";
      case FamilyTag::or_eq_type_two:
        return "OR_eqII";
      case FamilyTag::or_eq_special_one:
        return "OR_eq1";
      case FamilyTag::or_eq_special_two:
        return "OR_eq2";
      case FamilyTag::sr_eq_n:
        return "SR_eqN";
      case FamilyTag::universal:
        return "universal";
    }
    return "?";
  }

  std::string FamilySpec::describe() const {
    std::string out(to_string(tag));
    if (k) {
      out += " k=" + std::to_string(*k);
    }
    if (!n.empty()) {
      out += " N=" + subgroup_text(n);
    }
    if (!n1.empty()) {
      out += " N1=" + subgroup_text(n1);
    }
    if (!n2.empty()) {
      out += " N2=" + subgroup_text(n2);
    }
    return out;
  }

  Partition build_eq_n_or(Universe const& u, int k,
                          std::span<Permutation const> n) {
    require_family(u, Family::OR, "≡_N");
    int const m = u.half_degree();
    if (k < 1 || k > m - 1) {
      throw std::domain_error("≡_N on OR_" + std::to_string(u.degree())
                              + " needs 1 <= k <= " + std::to_string(m - 1)
                              + ", got k=" + std::to_string(k));
    }
    require_normal(PermGroup::symmetric(k), n, "≡_N");
    return assemble(
        u,
        [&](Index i) {
          int const r = u.rank(i);
          return r < k ? Role::zero : r == k ? Role::orbit : Role::singleton;
        },
        [&](Index) { return n; });
  }

  Partition build_eq_n1_n2(Universe const& u, std::span<Permutation const> n1,
                           std::span<Permutation const> n2) {
    require_family(u, Family::OR, "≡_{N1,N2}");
    int const m         = u.half_degree();
    auto const symmetric = PermGroup::symmetric(m);
    require_normal(symmetric, n1, "≡_{N1,N2} (N1)");
    require_normal(symmetric, n2, "≡_{N1,N2} (N2)");
    return assemble(
        u,
        [&](Index i) {
          int const r = u.rank(i);
          return r < m ? Role::zero : r == m ? Role::orbit : Role::singleton;
        },
        [&](Index i) { return u.type(i) == MSetType::I ? n1 : n2; });
  }

  Partition build_eq_type(Universe const& u, MSetType variant,
                          std::span<Permutation const> n) {
    require_family(u, Family::OR, "≡_N^I/II");
    int const m = u.half_degree();
    require_normal(PermGroup::symmetric(m), n, "≡_N^I/II");
    return assemble(
        u,
        [&](Index i) {
          int const r = u.rank(i);
          if (r < m) {
            return Role::zero;
          } else if (r == m) {
            return u.type(i) == variant ? Role::orbit : Role::zero;
          }
          return Role::singleton;
        },
        [&](Index) { return n; });
  }

  Partition build_eq_special(Universe const& u, int which) {
    require_family(u, Family::OR, "≡_1/≡_2");
    if (u.degree() != 4) {
      throw std::domain_error("≡_1 and ≡_2 are defined on OR_4 only");
    }
    if (which != 1 && which != 2) {
      throw std::domain_error("special congruence index must be 1 or 2");
    }
    // ≡_1: zero class I_2^II, type-I H-classes, units by cosets of <δ1>.
    MSetType const                 merged = which == 1 ? MSetType::I : MSetType::II;
    std::vector<Permutation> const whole  = PermGroup::symmetric(2).elements();
    std::vector<Permutation> const units  = sorted({Permutation(4), delta(which)});
    return assemble(
        u,
        [&](Index i) {
          int const r = u.rank(i);
          if (r < 2) {
            return Role::zero;
          } else if (r == 2) {
            return u.type(i) == merged ? Role::orbit : Role::zero;
          }
          return Role::orbit;
        },
        [&](Index i) -> std::span<Permutation const> {
          return u.rank(i) == 2 ? whole : units;
        });
  }

  Partition build_eq_n_sr(Universe const& u, int k,
                          std::span<Permutation const> n) {
    require_family(u, Family::SR, "≡_N on SR_n");
    int const m = u.half_degree();
    if (k == u.degree()) {
      require_normal(unit_group(u), n, "≡_N on SR_n (k = n)");
    } else if (k >= 1 && k <= m) {
      require_normal(PermGroup::symmetric(k), n, "≡_N on SR_n");
    } else {
      throw std::domain_error("≡_N on SR_" + std::to_string(u.degree())
                              + " needs 1 <= k <= " + std::to_string(m)
                              + " or k = n, got k=" + std::to_string(k));
    }
    return assemble(
        u,
        [&](Index i) {
          int const r = u.rank(i);
          return r < k ? Role::zero : r == k ? Role::orbit : Role::singleton;
        },
        [&](Index) { return n; });
  }

  Partition build(Universe const& u, FamilySpec const& spec) {
    switch (spec.tag) {
      case FamilyTag::or_eq_n:
        return build_eq_n_or(u, spec.k.value(), spec.n);
      case FamilyTag::or_eq_n1_n2:
        return build_eq_n1_n2(u, spec.n1, spec.n2);
      case FamilyTag::or_eq_type_one:
        return build_eq_type(u, MSetType::I, spec.n);
      case FamilyTag::or_eq_type_two:
        return build_eq_type(u, MSetType::II, spec.n);
      case FamilyTag::or_eq_special_one:
        return build_eq_special(u, 1);
      case FamilyTag::or_eq_special_two:
        return build_eq_special(u, 2);
      case FamilyTag::sr_eq_n:
        return build_eq_n_sr(u, spec.k.value(), spec.n);
      case FamilyTag::universal:
        break;
    }
    return Partition::universal(u.size());
  }

  Prediction predicted_congruences(Universe const& u) {
    std::vector<FamilySpec> specs;
    int const               m = u.half_degree();
    auto normals_of = [](PermGroup const& g) {
      std::vector<std::vector<Permutation>> out;
      auto const list = normal_subgroups(g);
      for (std::size_t i = 0; i < list.subgroups.size(); ++i) {
        out.push_back(list.elements_of(g, i));
      }
      return out;
    };

    if (u.family() == Family::OR) {
      for (int k = 1; k <= m - 1; ++k) {
        for (auto& n : normals_of(PermGroup::symmetric(k))) {
          specs.push_back({FamilyTag::or_eq_n, k, n, {}, {}});
        }
      }
      auto const top = normals_of(PermGroup::symmetric(m));
      for (auto const& n1 : top) {
        for (auto const& n2 : top) {
          specs.push_back({FamilyTag::or_eq_n1_n2, std::nullopt, {}, n1, n2});
        }
      }
      for (auto const& n : top) {
        specs.push_back({FamilyTag::or_eq_type_one, std::nullopt, n, {}, {}});
      }
      for (auto const& n : top) {
        specs.push_back({FamilyTag::or_eq_type_two, std::nullopt, n, {}, {}});
      }
      if (u.degree() == 4) {
        specs.push_back({FamilyTag::or_eq_special_one, std::nullopt, {}, {}, {}});
        specs.push_back({FamilyTag::or_eq_special_two, std::nullopt, {}, {}, {}});
      }
    } else if (u.family() == Family::SR) {
      for (int k = 1; k <= m; ++k) {
        for (auto& n : normals_of(PermGroup::symmetric(k))) {
          specs.push_back({FamilyTag::sr_eq_n, k, n, {}, {}});
        }
      }
      for (auto& n : normals_of(unit_group(u))) {
        specs.push_back({FamilyTag::sr_eq_n, u.degree(), n, {}, {}});
      }
    } else {
      throw std::domain_error(
          "congruence families are defined for OR_n and SR_n only");
    }
    specs.push_back({FamilyTag::universal, std::nullopt, {}, {}, {}});

    Prediction                                 out;
    std::unordered_map<Partition, std::size_t> where;
    out.spec_count = specs.size();
    for (auto const& spec : specs) {
      Partition p = build(u, spec);
      auto const how = u.has_product_table() ? Translations::all_elements
                                             : Translations::generators;
      if (auto v = find_violation(u, p, how)) {
        throw invariant_error(spec.describe() + " is not a congruence: "
                              + to_two_line(u.at(v->a)) + " ~ "
                              + to_two_line(u.at(v->b)) + " separated by "
                              + to_two_line(u.at(v->x)));
      }
      auto [it, fresh] = where.emplace(p, out.congruences.size());
      if (fresh) {
        out.congruences.push_back({std::move(p), {spec}});
      } else {
        out.congruences[it->second].specs.push_back(spec);
      }
    }
    std::stable_sort(out.congruences.begin(), out.congruences.end(),
                     [](auto const& x, auto const& y) {
                       return canonical_before(x.partition, y.partition);
                     });
    return out;
  }

  ClassificationReport classify(Universe const&               u,
                                GreenData const&              green,
                                Prediction const&             prediction,
                                std::vector<Partition> const& lattice) {
    ClassificationReport report;
    report.family        = u.family();
    report.degree        = u.degree();
    report.universe_size = u.size();
    report.lattice_size  = lattice.size();
    report.spec_count    = prediction.spec_count;

    std::unordered_map<Partition, std::size_t> position;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      position.emplace(lattice[i], i);
    }
    std::vector<bool> matched(lattice.size(), false);
    for (auto const& predicted : prediction.congruences) {
      auto it = position.find(predicted.partition);
      if (it == position.end()) {
        report.predicted_not_found.insert(report.predicted_not_found.end(),
                                          predicted.specs.begin(),
                                          predicted.specs.end());
      } else {
        matched[it->second] = true;
        report.matched.push_back({it->second, predicted.specs});
      }
    }
    std::sort(report.matched.begin(), report.matched.end(),
              [](auto const& x, auto const& y) {
                return x.lattice_index < y.lattice_index;
              });

    int const         n    = u.degree();
    std::string const name = std::string(to_string(u.family())) + "_n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      auto const& p = lattice[i];
      if (p.class_count() == 1 && p != Partition::universal(u.size())) {
        report.notes.push_back("tripwire: single-class congruence other than "
                               "the universal relation at lattice index "
                               + std::to_string(i));
      }
      if (matched[i]) {
        continue;
      }
      UnmatchedCongruence entry{i, p, {}, {}, {}};
      ElementSet          zero(u.size());
      for (auto j : p.class_members(p.class_of(Universe::zero))) {
        zero.insert(j);
      }
      entry.zero_class = describe_ideal(u, green, zero);
      bool mixed       = false;
      for (auto const& cls : p.classes()) {
        std::vector<std::uint32_t> units;
        for (auto j : cls) {
          if (u.rank(j) == n) {
            units.push_back(j);
          }
        }
        if (!units.empty()) {
          mixed = mixed || units.size() != cls.size();
          entry.unit_classes.push_back(std::move(units));
        }
      }
      if (entry.zero_class.kind == IdealKind::union_of_types) {
        entry.tags.push_back("Rees-type over " + name + " ∖ W′");
      }
      if (mixed) {
        entry.tags.push_back("a unit shares its class with a non-unit");
      }
      if (!entry.zero_class.absorbing) {
        entry.tags.push_back("zero class is not an ideal");
      }
      report.found_not_predicted.push_back(std::move(entry));
    }

    if (u.family() == Family::OR) {
      report.notes.push_back(
          "≡_N^I is built as: zero class = all elements of rank < m together "
          "with the rank-m type-II elements; N-orbits on the type-I H-classes "
          "of rank m; units singletons (≡_N^II swaps the types)");
    }
    report.notes.push_back(
        "uniform congruence read as the universal relation; it is counted as "
        "predicted under the tag \"universal\"");
    return report;
  }

  ClassificationReport verify_classification(Universe const&       u,
                                             LatticeOptions const& options) {
    auto const lattice    = congruence_lattice(u, options);
    auto const prediction = predicted_congruences(u);
    return classify(u, green_partition(u), prediction, lattice);
  }

}  // namespace rookcong

#include "rookcong/universe.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "rookcong/errors.hpp"

namespace rookcong {

  namespace {
    constexpr std::uint64_t kEmptySlot = ~std::uint64_t(0);

    std::size_t factorial(int k) {
      std::size_t f = 1;
      for (int i = 2; i <= k; ++i) {
        f *= static_cast<std::size_t>(i);
      }
      return f;
    }

    std::vector<PointSet> candidate_sets(Family f, int n, int k) {
      std::vector<PointSet> out;
      if (f == Family::R) {
        for (PointSet s = 0; s <= full_set(n); ++s) {
          if (popcount(s) == k) {
            out.push_back(s);
          }
        }
      } else {
        for (auto const& a : admissible_subsets(n, k)) {
          out.push_back(a.mask());
        }
      }
      return out;
    }

    void check_degree(Family f, int n) {
      if (n < 1 || (f != Family::R && n % 2 != 0)) {
        throw std::domain_error("degree must be a positive even integer, got "
                                + std::to_string(n));
      }
    }
  }  // namespace

  EnumerationLimits limits_from_environment() {
    EnumerationLimits limits;
    if (char const* env = std::getenv("RCL_BUDGET_ELEMENTS")) {
      char*              end   = nullptr;
      unsigned long long value = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || value == 0) {
        throw std::invalid_argument(
            "RCL_BUDGET_ELEMENTS must be a positive integer");
      }
      limits.max_elements = static_cast<std::size_t>(value);
    }
    return limits;
  }

  std::size_t universe_size(Family f, int n) {
    check_degree(f, n);
    if (n > kMaxDegree) {
      throw resource_error("degree " + std::to_string(n)
                           + " exceeds the encoding limit");
    }
    std::size_t total = 0;
    int const   m     = n / 2;
    for (int k = 0; k < n; ++k) {
      auto const sets = candidate_sets(f, n, k);
      if (f == Family::OR && k == m) {
        std::size_t type_one = 0;
        for (PointSet s : sets) {
          type_one += type_of(n, s) == MSetType::I ? 1 : 0;
        }
        std::size_t const type_two = sets.size() - type_one;
        total += (type_one * type_one + type_two * type_two) * factorial(k);
      } else {
        total += sets.size() * sets.size() * factorial(k);
      }
    }
    switch (f) {
      case Family::R:
        total += factorial(n);
        break;
      case Family::SR:
        total += (std::size_t(1) << m) * factorial(m);
        break;
      case Family::OR:
        total += (std::size_t(1) << (m - 1)) * factorial(m);
        break;
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Universe
  ////////////////////////////////////////////////////////////////////////

  std::optional<MSetType> Universe::type(Index i) const noexcept {
    if (_type[i] < 0) {
      return std::nullopt;
    }
    return _type[i] == 0 ? MSetType::I : MSetType::II;
  }

  void Universe::build_index() {
    std::size_t capacity = 16;
    while (capacity < 2 * _elements.size()) {
      capacity *= 2;
    }
    _slot_shift = 64 - std::countr_zero(capacity);
    _slot_keys.assign(capacity, kEmptySlot);
    _slot_values.assign(capacity, 0);
    for (Index i = 0; i < _elements.size(); ++i) {
      std::uint64_t const key  = _elements[i].key();
      std::size_t         slot = (key * 0x9E3779B97F4A7C15ULL) >> _slot_shift;
      while (_slot_keys[slot] != kEmptySlot) {
        if (_slot_keys[slot] == key) {
          throw invariant_error("duplicate element in universe");
        }
        slot = (slot + 1) & (capacity - 1);
      }
      _slot_keys[slot]   = key;
      _slot_values[slot] = i;
    }
  }

  Index Universe::lookup(std::uint64_t key) const {
    std::size_t const mask = _slot_keys.size() - 1;
    std::size_t       slot = (key * 0x9E3779B97F4A7C15ULL) >> _slot_shift;
    while (_slot_keys[slot] != kEmptySlot) {
      if (_slot_keys[slot] == key) {
        return _slot_values[slot];
      }
      slot = (slot + 1) & mask;
    }
    return static_cast<Index>(-1);
  }

  std::optional<Index> Universe::index_of(PartialInjection const& x) const {
    if (x.degree() != _degree) {
      return std::nullopt;
    }
    Index const i = lookup(x.key());
    if (i == static_cast<Index>(-1)) {
      return std::nullopt;
    }
    return i;
  }

  Index Universe::require_index(PartialInjection const& x) const {
    auto i = index_of(x);
    if (!i) {
      throw std::domain_error(to_two_line(x) + " is not a member of "
                              + std::string(to_string(_family))
                              + std::to_string(_degree));
    }
    return *i;
  }

  Index Universe::product(Index a, Index b) const {
    if (!_table.empty()) {
      return _table[std::size_t(a) * _elements.size() + b];
    }
    Index const c = lookup(compose(_elements[a], _elements[b]).key());
    if (c == static_cast<Index>(-1)) {
      throw invariant_error("universe is not closed under composition");
    }
    return c;
  }

  std::vector<std::size_t> Universe::rank_strata() const {
    std::vector<std::size_t> out(_degree + 1, 0);
    for (auto r : _rank) {
      ++out[r];
    }
    return out;
  }

  std::vector<Index> Universe::elements_of_rank(int k) const {
    std::vector<Index> out;
    for (Index i = 0; i < _elements.size(); ++i) {
      if (_rank[i] == k) {
        out.push_back(i);
      }
    }
    return out;
  }

  Universe enumerate_universe(Family f, int n, EnumerationLimits const& limits) {
    check_degree(f, n);
    if (n > limits.max_degree || n > kMaxDegree) {
      throw resource_error("degree " + std::to_string(n)
                           + " exceeds the enumeration limit of "
                           + std::to_string(std::min(limits.max_degree,
                                                     kMaxDegree)));
    }
    std::size_t const expected = universe_size(f, n);
    if (expected > limits.max_elements) {
      throw resource_error(std::string(to_string(f)) + std::to_string(n)
                           + " has " + std::to_string(expected)
                           + " elements, over the element limit of "
                           + std::to_string(limits.max_elements));
    }

    Universe u;
    u._family = f;
    u._degree = n;
    auto& elements = u._elements;
    elements.reserve(expected);

    int const m = n / 2;
    for (int k = 0; k < n; ++k) {
      auto const sets = candidate_sets(f, n, k);
      for (PointSet dom : sets) {
        auto const dom_points = points_of(dom);
        for (PointSet img : sets) {
          if (f == Family::OR && k == m
              && type_of(n, dom) != type_of(n, img)) {
            continue;
          }
          auto img_points = points_of(img);
          do {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < k; ++i) {
              pairs.emplace_back(dom_points[i], img_points[i]);
            }
            elements.push_back(PartialInjection::from_pairs(n, pairs));
          } while (std::next_permutation(img_points.begin(), img_points.end()));
        }
      }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      auto x = PartialInjection::from_images(n, perm);
      if (in_unit_group(f, x)) {
        elements.push_back(x);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(elements.begin(), elements.end(), [](auto const& x, auto const& y) {
      return canonical_compare(x, y) < 0;
    });
    // Zero is already first; move the identity to index 1.
    auto id = std::find(elements.begin(), elements.end(),
                        PartialInjection::identity(n));
    std::rotate(elements.begin() + 1, id, id + 1);

    if (elements.size() != expected) {
      throw invariant_error("enumerated " + std::to_string(elements.size())
                            + " elements, expected "
                            + std::to_string(expected));
    }
    for (auto const& x : elements) {
      if (!is_member(f, x)) {
        throw invariant_error("enumerated non-member " + to_two_line(x));
      }
    }

    u._rank.reserve(elements.size());
    u._type.reserve(elements.size());
    for (auto const& x : elements) {
      u._rank.push_back(static_cast<std::uint8_t>(x.rank()));
      std::int8_t t = -1;
      if (n % 2 == 0 && x.rank() == m && is_admissible(n, x.domain())) {
        t = type_of(n, x.domain()) == MSetType::I ? 0 : 1;
      }
      u._type.push_back(t);
    }
    u.build_index();

    std::size_t const size = elements.size();
    auto closure_failure = [&](Index a, Index b) {
      return invariant_error("product " + to_two_line(elements[a]) + " * "
                             + to_two_line(elements[b])
                             + " leaves the universe");
    };
    if (size * size <= limits.product_table_entries) {
      u._table.resize(size * size);
      for (Index a = 0; a < size; ++a) {
        for (Index b = 0; b < size; ++b) {
          Index const c = u.lookup(compose(elements[a], elements[b]).key());
          if (c == static_cast<Index>(-1)) {
            throw closure_failure(a, b);
          }
          u._table[std::size_t(a) * size + b] = c;
        }
      }
    } else if (n <= limits.exhaustive_closure_degree) {
      for (Index a = 0; a < size; ++a) {
        for (Index b = 0; b < size; ++b) {
          if (!u.index_of(compose(elements[a], elements[b]))) {
            throw closure_failure(a, b);
          }
        }
      }
    } else {
      std::mt19937_64                      rng(0x5eed);
      std::uniform_int_distribution<Index> pick(0, static_cast<Index>(size - 1));
      for (std::size_t s = 0; s < limits.closure_samples; ++s) {
        Index const a = pick(rng);
        Index const b = pick(rng);
        if (!u.index_of(compose(elements[a], elements[b]))) {
          throw closure_failure(a, b);
        }
      }
    }

    // Greedy generating set, highest rank first.
    std::vector<Index> order(size);
    std::iota(order.begin(), order.end(), Index(0));
    std::stable_sort(order.begin(), order.end(), [&u](Index a, Index b) {
      return u._rank[a] > u._rank[b];
    });
    std::vector<bool>  reached(size, false);
    std::vector<Index> members{Universe::identity};
    reached[Universe::identity] = true;
    auto& gens                  = u._generators;
    for (Index c : order) {
      if (reached[c]) {
        continue;
      }
      gens.push_back(c);
      std::vector<Index> frontier;
      for (Index x : members) {
        Index const y = u.product(x, c);
        if (!reached[y]) {
          reached[y] = true;
          frontier.push_back(y);
        }
      }
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (Index g : gens) {
          Index const z = u.product(frontier[i], g);
          if (!reached[z]) {
            reached[z] = true;
            frontier.push_back(z);
          }
        }
      }
      members.insert(members.end(), frontier.begin(), frontier.end());
    }
    return u;
  }

}  // namespace rookcong

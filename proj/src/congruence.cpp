#include "rookcong/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "rookcong/errors.hpp"

namespace rookcong {

  namespace {
    // Union-find with a worklist of merged pairs; reusable across closures.
    class Closer {
     public:
      Closer(Universe const& u, Translations how) : _u(u) {
        if (how == Translations::all_elements) {
          _multipliers.resize(u.size());
          std::iota(_multipliers.begin(), _multipliers.end(), Index(0));
        } else {
          _multipliers.assign(u.generators().begin(), u.generators().end());
        }
        _parent.resize(u.size());
        _labels.resize(u.size());
      }

      void reset() {
        std::iota(_parent.begin(), _parent.end(), Index(0));
        _classes = _parent.size();
        _work.clear();
      }

      // Start from a partition already known to be a congruence; its pairs
      // need no translation.
      void reset_to(Partition const& p) {
        std::vector<Index> first(p.class_count(), static_cast<Index>(-1));
        for (Index i = 0; i < p.size(); ++i) {
          auto& f = first[p.class_of(i)];
          if (f == static_cast<Index>(-1)) {
            f = i;
          }
          _parent[i] = f;
        }
        _classes = p.class_count();
        _work.clear();
      }

      void unite(Index a, Index b) {
        Index ra = find(a);
        Index rb = find(b);
        if (ra == rb) {
          return;
        }
        if (ra > rb) {
          std::swap(ra, rb);
        }
        _parent[rb] = ra;
        --_classes;
        _work.emplace_back(a, b);
      }

      void run() {
        while (!_work.empty() && _classes > 1) {
          auto const [a, b] = _work.back();
          _work.pop_back();
          for (Index g : _multipliers) {
            unite(_u.product(g, a), _u.product(g, b));
            unite(_u.product(a, g), _u.product(b, g));
          }
        }
        _work.clear();
      }

      Partition result() {
        if (_classes == 1) {
          return Partition::universal(_parent.size());
        }
        for (Index i = 0; i < _parent.size(); ++i) {
          _labels[i] = find(i);
        }
        return Partition::from_labels(_labels);
      }

     private:
      Index find(Index x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      Universe const&                    _u;
      std::vector<Index>                 _multipliers;
      std::vector<Index>                 _parent;
      std::vector<std::uint32_t>         _labels;
      std::vector<std::pair<Index, Index>> _work;
      std::size_t                        _classes = 0;
    };

    bool canonical_before(Partition const& x, Partition const& y) {
      if (x.class_count() != y.class_count()) {
        return x.class_count() > y.class_count();
      }
      return x < y;
    }
  }  // namespace

  std::optional<Violation>
  find_violation(Universe const& u, Partition const& p, Translations how) {
    if (p.size() != u.size()) {
      throw std::domain_error("partition size does not match the universe");
    }
    std::vector<Index> multipliers;
    if (how == Translations::all_elements) {
      multipliers.resize(u.size());
      std::iota(multipliers.begin(), multipliers.end(), Index(0));
    } else {
      multipliers.assign(u.generators().begin(), u.generators().end());
    }
    std::vector<Index> first(p.class_count(), static_cast<Index>(-1));
    for (Index a = 0; a < u.size(); ++a) {
      auto& rep = first[p.class_of(a)];
      if (rep == static_cast<Index>(-1)) {
        rep = a;
        continue;
      }
      for (Index x : multipliers) {
        if (!p.related(u.product(x, a), u.product(x, rep))) {
          return Violation{rep, a, x, true};
        }
        if (!p.related(u.product(a, x), u.product(rep, x))) {
          return Violation{rep, a, x, false};
        }
      }
    }
    return std::nullopt;
  }

  bool is_congruence(Universe const& u, Partition const& p, Translations how) {
    return !find_violation(u, p, how).has_value();
  }

  Partition congruence_closure(Universe const&                          u,
                               std::span<std::pair<Index, Index> const> pairs,
                               Translations                             how) {
    Closer closer(u, how);
    closer.reset();
    for (auto [a, b] : pairs) {
      if (a >= u.size() || b >= u.size()) {
        throw std::domain_error("congruence_closure: index out of range");
      }
      closer.unite(a, b);
    }
    closer.run();
    return closer.result();
  }

  Partition join(Universe const& u, Partition const& p, Partition const& q) {
    if (p.size() != u.size() || q.size() != u.size()) {
      throw std::domain_error("join: partitions over different universes");
    }
    Closer closer(u, Translations::generators);
    closer.reset_to(p);
    std::vector<Index> first(q.class_count(), static_cast<Index>(-1));
    for (Index i = 0; i < q.size(); ++i) {
      auto& f = first[q.class_of(i)];
      if (f == static_cast<Index>(-1)) {
        f = i;
      } else {
        closer.unite(f, i);
      }
    }
    closer.run();
    return closer.result();
  }

  std::vector<Partition> congruence_lattice(Universe const&       u,
                                            LatticeOptions const& options) {
    std::size_t const n = u.size();
    if (n > options.max_elements && !options.force) {
      throw resource_error("universe of " + std::to_string(n)
                           + " elements exceeds the lattice budget of "
                           + std::to_string(options.max_elements));
    }
    unsigned const threads = std::max(1u, options.threads);

    // Principal congruences, seeds split by first index across workers.
    std::vector<std::unordered_set<Partition>> found(threads);
    auto worker = [&](unsigned t) {
      Closer closer(u, Translations::generators);
      for (Index a = t; a < n; a += threads) {
        for (Index b = a + 1; b < n; ++b) {
          closer.reset();
          closer.unite(a, b);
          closer.run();
          found[t].insert(closer.result());
        }
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker, t);
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    std::unordered_set<Partition> seen;
    seen.insert(Partition::identity(n));
    seen.insert(Partition::universal(n));
    for (auto& s : found) {
      seen.insert(s.begin(), s.end());
    }
    found.clear();
    std::vector<Partition> lattice(seen.begin(), seen.end());
    std::sort(lattice.begin(), lattice.end(), canonical_before);

    // Join closure over canonically ordered inputs.
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (lattice[i].refines(lattice[j]) || lattice[j].refines(lattice[i])) {
          continue;
        }
        Partition joined = join(u, lattice[i], lattice[j]);
        if (seen.insert(joined).second) {
          lattice.push_back(std::move(joined));
        }
      }
    }
    std::sort(lattice.begin(), lattice.end(), canonical_before);
    return lattice;
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  covering_pairs(std::vector<Partition> const& lattice) {
    std::size_t const              c = lattice.size();
    std::vector<std::vector<bool>> below(c, std::vector<bool>(c, false));
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        below[i][j] = i != j && lattice[i].refines(lattice[j]);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (!below[i][j]) {
          continue;
        }
        bool covers = true;
        for (std::size_t k = 0; k < c && covers; ++k) {
          covers = !(below[i][k] && below[k][j]);
        }
        if (covers) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

}  // namespace rookcong

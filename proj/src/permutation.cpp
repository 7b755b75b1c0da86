#include "rookcong/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rookcong/errors.hpp"

namespace rookcong {

  Permutation::Permutation(int k) {
    if (k < 0 || k > 16) {
      throw std::domain_error("permutation degree out of range");
    }
    _images.resize(k);
    std::iota(_images.begin(), _images.end(), std::uint8_t(0));
  }

  Permutation Permutation::from_images(std::span<int const> images) {
    int const         k = static_cast<int>(images.size());
    Permutation       p(k);
    std::vector<bool> seen(k, false);
    for (int i = 0; i < k; ++i) {
      int const j = images[i];
      if (j < 1 || j > k || seen[j - 1]) {
        throw std::domain_error("not a permutation of {1.."
                                + std::to_string(k) + "}");
      }
      seen[j - 1]   = true;
      p._images[i] = static_cast<std::uint8_t>(j - 1);
    }
    return p;
  }

  Permutation Permutation::from_images(std::initializer_list<int> images) {
    return from_images(std::span<int const>(images.begin(), images.size()));
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t Permutation::key() const noexcept {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      k |= std::uint64_t(_images[i]) << (4 * i);
    }
    return k;
  }

  std::string Permutation::one_line() const {
    if (_images.empty()) {
      return "()";
    }
    std::string out;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += std::to_string(_images[i] + 1);
    }
    return out;
  }

  Permutation operator*(Permutation const& p, Permutation const& q) {
    if (p.degree() != q.degree()) {
      throw std::domain_error("permutation degree mismatch");
    }
    std::vector<int> images(p.degree());
    for (int i = 1; i <= p.degree(); ++i) {
      images[i - 1] = p[q[i]];
    }
    return Permutation::from_images(images);
  }

  Permutation inverse(Permutation const& p) {
    std::vector<int> images(p.degree());
    for (int i = 1; i <= p.degree(); ++i) {
      images[p[i] - 1] = i;
    }
    return Permutation::from_images(images);
  }

  ////////////////////////////////////////////////////////////////////////
  // PermGroup
  ////////////////////////////////////////////////////////////////////////

  void PermGroup::build_tables() {
    std::size_t const n = _elements.size();
    _index.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (_elements[i].degree() != _degree) {
        throw std::domain_error("group elements of mixed degree");
      }
      if (!_index.emplace(_elements[i].key(), i).second) {
        throw std::domain_error("duplicate group element");
      }
    }
    if (n == 0 || !_elements[0].is_identity()) {
      throw std::domain_error("group does not contain the identity");
    }
    _table.assign(n * n, 0);
    _inverse.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto it = _index.find((_elements[a] * _elements[b]).key());
        if (it == _index.end()) {
          throw std::domain_error("set of permutations is not closed");
        }
        _table[a * n + b] = it->second;
        if (it->second == 0) {
          _inverse[a] = b;
        }
      }
    }
  }

  PermGroup PermGroup::from_elements(int degree,
                                     std::vector<Permutation> elements) {
    PermGroup g;
    g._degree   = degree;
    g._elements = std::move(elements);
    std::sort(g._elements.begin(), g._elements.end());
    g.build_tables();
    return g;
  }

  PermGroup PermGroup::generated_by(int                             degree,
                                    std::vector<Permutation> const& generators) {
    std::vector<Permutation>          elements{Permutation(degree)};
    std::unordered_map<std::uint64_t, bool> seen{{elements[0].key(), true}};
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : generators) {
        Permutation p = elements[i] * g;
        if (seen.emplace(p.key(), true).second) {
          elements.push_back(std::move(p));
        }
      }
    }
    return from_elements(degree, std::move(elements));
  }

  PermGroup PermGroup::symmetric(int k) {
    std::vector<Permutation> elements;
    std::vector<int>         images(k);
    std::iota(images.begin(), images.end(), 1);
    do {
      elements.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return from_elements(k, std::move(elements));
  }

  bool PermGroup::contains(Permutation const& p) const {
    return p.degree() == _degree && _index.contains(p.key());
  }

  std::size_t PermGroup::index_of(Permutation const& p) const {
    auto it = p.degree() == _degree ? _index.find(p.key()) : _index.end();
    if (it == _index.end()) {
      throw std::domain_error("permutation " + p.one_line()
                              + " is not in the group");
    }
    return it->second;
  }

  std::vector<std::vector<std::size_t>> PermGroup::conjugacy_classes() const {
    std::size_t const                     n = order();
    std::vector<bool>                     done(n, false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t a = 0; a < n; ++a) {
      if (done[a]) {
        continue;
      }
      std::vector<std::size_t> cls;
      for (std::size_t g = 0; g < n; ++g) {
        std::size_t const c = multiply(multiply(g, a), inverse_of(g));
        if (!done[c]) {
          done[c] = true;
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  bool is_normal_subgroup(PermGroup const&             parent,
                          std::span<Permutation const> candidate) {
    std::vector<bool> in(parent.order(), false);
    for (auto const& p : candidate) {
      if (!parent.contains(p)) {
        return false;
      }
      in[parent.index_of(p)] = true;
    }
    if (!in[0]) {
      return false;
    }
    for (std::size_t a = 0; a < parent.order(); ++a) {
      if (!in[a]) {
        continue;
      }
      for (std::size_t b = 0; b < parent.order(); ++b) {
        if (in[b] && !in[parent.multiply(a, b)]) {
          return false;
        }
      }
      for (std::size_t g = 0; g < parent.order(); ++g) {
        std::size_t const c
            = parent.multiply(parent.multiply(g, a), parent.inverse_of(g));
        if (!in[c]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Permutation>
  NormalSubgroupList::elements_of(PermGroup const& parent,
                                  std::size_t      which) const {
    std::vector<Permutation> out;
    for (std::size_t i : subgroups.at(which)) {
      out.push_back(parent.at(i));
    }
    return out;
  }

  NormalSubgroupList normal_subgroups(PermGroup const& g, std::size_t bound) {
    if (g.order() > bound) {
      throw resource_error("group of order " + std::to_string(g.order())
                           + " exceeds the normal-subgroup bound of "
                           + std::to_string(bound));
    }
    auto const classes = g.conjugacy_classes();
    // classes[0] is the identity's class.
    std::size_t const others = classes.size() - 1;
    if (others >= 30) {
      throw resource_error("too many conjugacy classes to enumerate unions");
    }
    NormalSubgroupList out;
    std::vector<bool>  in(g.order());
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << others); ++mask) {
      std::size_t size = 1;
      for (std::size_t c = 0; c < others; ++c) {
        if ((mask >> c) & 1) {
          size += classes[c + 1].size();
        }
      }
      if (g.order() % size != 0) {
        continue;
      }
      std::fill(in.begin(), in.end(), false);
      std::vector<std::size_t> members{0};
      in[0] = true;
      for (std::size_t c = 0; c < others; ++c) {
        if ((mask >> c) & 1) {
          for (std::size_t i : classes[c + 1]) {
            in[i] = true;
            members.push_back(i);
          }
        }
      }
      bool closed = true;
      for (std::size_t a : members) {
        for (std::size_t b : members) {
          if (!in[g.multiply(a, b)]) {
            closed = false;
            break;
          }
        }
        if (!closed) {
          break;
        }
      }
      if (closed) {
        std::sort(members.begin(), members.end());
        out.subgroups.push_back(std::move(members));
      }
    }
    std::sort(out.subgroups.begin(), out.subgroups.end(),
              [](auto const& x, auto const& y) {
                if (x.size() != y.size()) {
                  return x.size() < y.size();
                }
                return x < y;
              });
    return out;
  }

}  // namespace rookcong

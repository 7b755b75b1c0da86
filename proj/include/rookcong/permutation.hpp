#ifndef ROOKCONG_PERMUTATION_HPP
#define ROOKCONG_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace rookcong {

  // A permutation of {1..k}. Degree 0 is allowed (the trivial group S_0).
  class Permutation {
   public:
    Permutation() = default;
    // The identity of degree k.
    explicit Permutation(int k);
    // images[i-1] is the image of i. Throws std::domain_error unless the
    // images form a permutation of {1..k}.
    static Permutation from_images(std::span<int const> images);
    static Permutation from_images(std::initializer_list<int> images);

    int degree() const noexcept { return static_cast<int>(_images.size()); }
    int operator[](int i) const noexcept { return _images[i - 1] + 1; }

    bool is_identity() const noexcept;

    std::uint64_t key() const noexcept;

    // One-line notation, e.g. "2 1 3"; "()" for degree 0.
    std::string one_line() const;

    friend auto operator<=>(Permutation const&, Permutation const&) = default;
    friend bool operator==(Permutation const&, Permutation const&)  = default;

   private:
    std::vector<std::uint8_t> _images;
  };

  // (p * q)(i) = p(q(i)).
  Permutation operator*(Permutation const& p, Permutation const& q);
  Permutation inverse(Permutation const& p);

  // A finite permutation group with elements in lexicographic order (the
  // identity first) and a cached multiplication table.
  class PermGroup {
   public:
    // Throws std::domain_error unless the elements are duplicate-free, of one
    // degree, contain the identity, and are closed under composition.
    static PermGroup from_elements(int degree, std::vector<Permutation> elements);
    static PermGroup generated_by(int degree,
                                  std::vector<Permutation> const& generators);
    static PermGroup symmetric(int k);

    int         degree() const noexcept { return _degree; }
    std::size_t order() const noexcept { return _elements.size(); }

    std::vector<Permutation> const& elements() const noexcept {
      return _elements;
    }
    Permutation const& at(std::size_t i) const { return _elements[i]; }

    bool        contains(Permutation const& p) const;
    std::size_t index_of(Permutation const& p) const;

    std::size_t multiply(std::size_t a, std::size_t b) const {
      return _table[a * _elements.size() + b];
    }
    std::size_t inverse_of(std::size_t a) const { return _inverse[a]; }

    // Conjugacy classes as sorted index lists, ordered by smallest member.
    std::vector<std::vector<std::size_t>> conjugacy_classes() const;

    friend bool operator==(PermGroup const& g, PermGroup const& h) {
      return g._degree == h._degree && g._elements == h._elements;
    }

   private:
    PermGroup() = default;
    void build_tables();

    int                                          _degree = 0;
    std::vector<Permutation>                     _elements;
    std::unordered_map<std::uint64_t, std::size_t> _index;
    std::vector<std::size_t>                     _table;
    std::vector<std::size_t>                     _inverse;
  };

  // True iff the candidate is a subgroup of the parent that is invariant
  // under conjugation by every parent element.
  bool is_normal_subgroup(PermGroup const& parent,
                          std::span<Permutation const> candidate);

  struct NormalSubgroupList {
    // Each subgroup as a sorted list of parent indices. Ordered by size,
    // then lexicographically.
    std::vector<std::vector<std::size_t>> subgroups;

    std::vector<Permutation> elements_of(PermGroup const& parent,
                                         std::size_t      which) const;
  };

  // All normal subgroups of g, found as unions of conjugacy classes that
  // contain the identity and are closed under composition. Throws
  // resource_error if |g| exceeds the bound.
  NormalSubgroupList normal_subgroups(PermGroup const& g,
                                      std::size_t      bound = 10000);

}  // namespace rookcong

#endif  // ROOKCONG_PERMUTATION_HPP

#ifndef ROOKCONG_PARTIAL_INJECTION_HPP
#define ROOKCONG_PARTIAL_INJECTION_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rookcong {

  // Points are 1-based throughout, as in the two-line notation.
  inline constexpr int kMaxDegree = 12;

  // Bit i-1 is set iff point i belongs to the set.
  using PointSet = std::uint32_t;

  int      popcount(PointSet s);
  PointSet full_set(int n);
  PointSet point_set(std::span<int const> points);
  PointSet point_set(std::initializer_list<int> points);
  std::vector<int> points_of(PointSet s);

  // The involution i -> n+1-i. Throws std::domain_error on an out-of-range
  // point.
  int      theta(int n, int i);
  PointSet theta(int n, PointSet s);

  class PartialInjection {
   public:
    PartialInjection() = default;

    // The empty map of degree n.
    explicit PartialInjection(int n);

    static PartialInjection identity(int n);
    static PartialInjection empty(int n) { return PartialInjection(n); }
    // Identity restricted to the given set.
    static PartialInjection identity_on(int n, PointSet s);
    // Throws std::domain_error unless the pairs describe an injective
    // partial map of {1..n}.
    static PartialInjection
    from_pairs(int n, std::span<std::pair<int, int> const> pairs);
    static PartialInjection
    from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs);
    // images[i-1] is the image of i, or 0 where undefined.
    static PartialInjection from_images(int n, std::span<int const> images);

    int degree() const noexcept { return _degree; }
    int rank() const noexcept { return _rank; }

    // Image of i, or 0 if i is outside the domain.
    int operator[](int i) const noexcept { return _images[i - 1]; }
    bool defined_at(int i) const noexcept { return _images[i - 1] != 0; }

    PointSet domain() const noexcept { return _domain; }
    PointSet image() const noexcept { return _image; }

    std::vector<std::pair<int, int>> pairs() const;

    // Injective 64-bit encoding, 4 bits per point.
    std::uint64_t key() const noexcept;

    friend bool operator==(PartialInjection const& x,
                           PartialInjection const& y) noexcept {
      return x._degree == y._degree && x._images == y._images;
    }

   private:
    void assign(int i, int j);
    friend PartialInjection invert(PartialInjection const& x);

    std::array<std::uint8_t, kMaxDegree> _images{};
    std::uint8_t                         _degree = 0;
    std::uint8_t                         _rank   = 0;
    PointSet                             _domain = 0;
    PointSet                             _image  = 0;
  };

  // (x * y)(i) = x(y(i)): y acts first.
  PartialInjection compose(PartialInjection const& x, PartialInjection const& y);
  PartialInjection invert(PartialInjection const& x);

  // Canonical order: rank, then the sorted domain tuple, then the image
  // tuple read in domain order.
  std::strong_ordering canonical_compare(PartialInjection const& x,
                                         PartialInjection const& y);

  // Two-line notation "1 2 / 3 1" (domain row over image row); the empty
  // map is "/".
  std::string      to_two_line(PartialInjection const& x);
  PartialInjection parse_two_line(int n, std::string_view text);

  std::ostream& operator<<(std::ostream& os, PartialInjection const& x);

}  // namespace rookcong

template <>
struct std::hash<rookcong::PartialInjection> {
  std::size_t operator()(rookcong::PartialInjection const& x) const noexcept {
    return std::hash<std::uint64_t>()(x.key());
  }
};

#endif  // ROOKCONG_PARTIAL_INJECTION_HPP

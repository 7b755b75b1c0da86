#include "rookcong/partial_injection.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rookcong {

  int popcount(PointSet s) {
    return std::popcount(s);
  }

  PointSet full_set(int n) {
    return n >= 32 ? ~PointSet(0) : (PointSet(1) << n) - 1;
  }

  PointSet point_set(std::span<int const> points) {
    PointSet s = 0;
    for (int p : points) {
      if (p < 1 || p > kMaxDegree) {
        throw std::domain_error("point " + std::to_string(p)
                                + " out of range");
      }
      s |= PointSet(1) << (p - 1);
    }
    return s;
  }

  PointSet point_set(std::initializer_list<int> points) {
    return point_set(std::span<int const>(points.begin(), points.size()));
  }

  std::vector<int> points_of(PointSet s) {
    std::vector<int> out;
    out.reserve(std::popcount(s));
    while (s != 0) {
      out.push_back(std::countr_zero(s) + 1);
      s &= s - 1;
    }
    return out;
  }

  int theta(int n, int i) {
    if (i < 1 || i > n) {
      throw std::domain_error("theta: point " + std::to_string(i)
                              + " outside {1.." + std::to_string(n) + "}");
    }
    return n + 1 - i;
  }

  PointSet theta(int n, PointSet s) {
    if ((s & ~full_set(n)) != 0) {
      throw std::domain_error("theta: set not contained in {1..n}");
    }
    PointSet out = 0;
    while (s != 0) {
      int i = std::countr_zero(s) + 1;
      out |= PointSet(1) << (n - i);
      s &= s - 1;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PartialInjection
  ////////////////////////////////////////////////////////////////////////

  PartialInjection::PartialInjection(int n) {
    if (n < 1 || n > kMaxDegree) {
      throw std::domain_error("degree " + std::to_string(n)
                              + " outside [1, "
                              + std::to_string(kMaxDegree) + "]");
    }
    _degree = static_cast<std::uint8_t>(n);
  }

  void PartialInjection::assign(int i, int j) {
    if (i < 1 || i > _degree || j < 1 || j > _degree) {
      throw std::domain_error("pair (" + std::to_string(i) + ", "
                              + std::to_string(j)
                              + ") outside {1.." + std::to_string(_degree)
                              + "}");
    }
    PointSet const si = PointSet(1) << (i - 1);
    PointSet const sj = PointSet(1) << (j - 1);
    if ((_domain & si) != 0 || (_image & sj) != 0) {
      throw std::domain_error("not injective: repeated source or target in ("
                              + std::to_string(i) + ", " + std::to_string(j)
                              + ")");
    }
    _images[i - 1] = static_cast<std::uint8_t>(j);
    _domain |= si;
    _image |= sj;
    ++_rank;
  }

  PartialInjection PartialInjection::identity(int n) {
    return identity_on(n, full_set(n));
  }

  PartialInjection PartialInjection::identity_on(int n, PointSet s) {
    PartialInjection x(n);
    if ((s & ~full_set(n)) != 0) {
      throw std::domain_error("identity_on: set not contained in {1..n}");
    }
    for (int p : points_of(s)) {
      x.assign(p, p);
    }
    return x;
  }

  PartialInjection
  PartialInjection::from_pairs(int n,
                               std::span<std::pair<int, int> const> pairs) {
    PartialInjection x(n);
    for (auto [i, j] : pairs) {
      x.assign(i, j);
    }
    return x;
  }

  PartialInjection PartialInjection::from_pairs(
      int                                       n,
      std::initializer_list<std::pair<int, int>> pairs) {
    return from_pairs(
        n, std::span<std::pair<int, int> const>(pairs.begin(), pairs.size()));
  }

  PartialInjection PartialInjection::from_images(int                   n,
                                                 std::span<int const> images) {
    if (static_cast<int>(images.size()) != n) {
      throw std::domain_error("from_images: expected " + std::to_string(n)
                              + " entries, got "
                              + std::to_string(images.size()));
    }
    PartialInjection x(n);
    for (int i = 1; i <= n; ++i) {
      if (images[i - 1] != 0) {
        x.assign(i, images[i - 1]);
      }
    }
    return x;
  }

  std::vector<std::pair<int, int>> PartialInjection::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(_rank);
    for (int i = 1; i <= _degree; ++i) {
      if (_images[i - 1] != 0) {
        out.emplace_back(i, _images[i - 1]);
      }
    }
    return out;
  }

  std::uint64_t PartialInjection::key() const noexcept {
    std::uint64_t k = 0;
    for (int i = 0; i < _degree; ++i) {
      k |= std::uint64_t(_images[i]) << (4 * i);
    }
    return k;
  }

  PartialInjection compose(PartialInjection const& x,
                           PartialInjection const& y) {
    if (x.degree() != y.degree()) {
      throw std::domain_error("compose: degree mismatch ("
                              + std::to_string(x.degree()) + " vs "
                              + std::to_string(y.degree()) + ")");
    }
    int const        n = x.degree();
    std::array<int, kMaxDegree> images{};
    for (int i = 1; i <= n; ++i) {
      int const j = y[i];
      images[i - 1] = j == 0 ? 0 : x[j];
    }
    return PartialInjection::from_images(
        n, std::span<int const>(images.data(), n));
  }

  PartialInjection invert(PartialInjection const& x) {
    PartialInjection out(x.degree());
    for (auto [i, j] : x.pairs()) {
      out.assign(j, i);
    }
    return out;
  }

  std::strong_ordering canonical_compare(PartialInjection const& x,
                                         PartialInjection const& y) {
    if (auto c = x.degree() <=> y.degree(); c != 0) {
      return c;
    }
    if (auto c = x.rank() <=> y.rank(); c != 0) {
      return c;
    }
    // Equal rank: sorted domains of the same length compare element-wise.
    auto const dx = points_of(x.domain());
    auto const dy = points_of(y.domain());
    if (auto c = std::lexicographical_compare_three_way(
            dx.begin(), dx.end(), dy.begin(), dy.end());
        c != 0) {
      return c;
    }
    for (int p : dx) {
      if (auto c = x[p] <=> y[p]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string to_two_line(PartialInjection const& x) {
    std::string top, bottom;
    for (auto [i, j] : x.pairs()) {
      if (!top.empty()) {
        top += ' ';
        bottom += ' ';
      }
      top += std::to_string(i);
      bottom += std::to_string(j);
    }
    if (top.empty()) {
      return "/";
    }
    return top + " / " + bottom;
  }

  namespace {
    std::vector<int> parse_row(std::string_view row) {
      std::vector<int> out;
      std::size_t      pos = 0;
      while (pos < row.size()) {
        while (pos < row.size() && (row[pos] == ' ' || row[pos] == '\t')) {
          ++pos;
        }
        if (pos == row.size()) {
          break;
        }
        int  value = 0;
        auto res   = std::from_chars(row.data() + pos, row.data() + row.size(),
                                   value);
        if (res.ec != std::errc()) {
          throw std::domain_error("two-line notation: bad token in \""
                                  + std::string(row) + "\"");
        }
        out.push_back(value);
        pos = static_cast<std::size_t>(res.ptr - row.data());
      }
      return out;
    }
  }  // namespace

  PartialInjection parse_two_line(int n, std::string_view text) {
    auto const slash = text.find('/');
    if (slash == std::string_view::npos
        || text.find('/', slash + 1) != std::string_view::npos) {
      throw std::domain_error(
          "two-line notation needs exactly one '/' separator");
    }
    auto const top    = parse_row(text.substr(0, slash));
    auto const bottom = parse_row(text.substr(slash + 1));
    if (top.size() != bottom.size()) {
      throw std::domain_error("two-line notation: rows differ in length");
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < top.size(); ++i) {
      pairs.emplace_back(top[i], bottom[i]);
    }
    return PartialInjection::from_pairs(n, pairs);
  }

  std::ostream& operator<<(std::ostream& os, PartialInjection const& x) {
    return os << '(' << to_two_line(x) << ')';
  }

}  // namespace rookcong

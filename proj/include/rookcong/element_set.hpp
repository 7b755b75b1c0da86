#ifndef ROOKCONG_ELEMENT_SET_HPP
#define ROOKCONG_ELEMENT_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace rookcong {

  // Fixed-universe set of element indices, packed 64 per word.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe_size)
        : _size(universe_size), _words((universe_size + 63) / 64, 0) {}

    std::size_t universe_size() const noexcept { return _size; }

    void insert(std::size_t i) noexcept {
      _words[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void erase(std::size_t i) noexcept {
      _words[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    bool contains(std::size_t i) const noexcept {
      return (_words[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : _words) {
        c += std::popcount(w);
      }
      return c;
    }

    bool empty() const noexcept { return count() == 0; }

    bool is_subset_of(ElementSet const& other) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if ((_words[i] & ~other._words[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    ElementSet& operator|=(ElementSet const& other) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] |= other._words[i];
      }
      return *this;
    }

    std::vector<std::uint32_t> indices() const {
      std::vector<std::uint32_t> out;
      for (std::size_t w = 0; w < _words.size(); ++w) {
        std::uint64_t bits = _words[w];
        while (bits != 0) {
          out.push_back(static_cast<std::uint32_t>(w * 64
                                                   + std::countr_zero(bits)));
          bits &= bits - 1;
        }
      }
      return out;
    }

    std::size_t hash() const noexcept {
      std::size_t h = _size;
      for (auto w : _words) {
        h ^= std::hash<std::uint64_t>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

   private:
    std::size_t                _size = 0;
    std::vector<std::uint64_t> _words;
  };

}  // namespace rookcong

template <>
struct std::hash<rookcong::ElementSet> {
  std::size_t operator()(rookcong::ElementSet const& s) const noexcept {
    return s.hash();
  }
};

#endif  // ROOKCONG_ELEMENT_SET_HPP

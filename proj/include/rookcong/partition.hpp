#ifndef ROOKCONG_PARTITION_HPP
#define ROOKCONG_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rookcong {

  // A set-partition of {0..size-1} as a class-id vector. Ids are numbered
  // in order of each class's smallest member, so two partitions are equal
  // iff their id vectors are equal.
  class Partition {
   public:
    Partition() = default;

    static Partition identity(std::size_t size);
    static Partition universal(std::size_t size);
    // Any labels; renumbered canonically.
    static Partition from_labels(std::span<std::uint32_t const> labels);
    // Throws std::domain_error unless the classes cover {0..size-1} exactly
    // once.
    static Partition
    from_classes(std::size_t                                   size,
                 std::vector<std::vector<std::uint32_t>> const& classes);

    std::size_t   size() const noexcept { return _ids.size(); }
    std::size_t   class_count() const noexcept { return _class_count; }
    std::uint32_t class_of(std::size_t i) const { return _ids[i]; }
    bool related(std::size_t a, std::size_t b) const { return _ids[a] == _ids[b]; }

    std::vector<std::uint32_t> const& ids() const noexcept { return _ids; }
    // Classes in id order, members ascending.
    std::vector<std::vector<std::uint32_t>> classes() const;
    std::vector<std::uint32_t>              class_members(std::uint32_t id) const;

    // Every class of *this lies inside a class of coarser.
    bool refines(Partition const& coarser) const;

    std::size_t hash() const noexcept;

    friend bool operator==(Partition const& x, Partition const& y) {
      return x._ids == y._ids;
    }
    friend std::strong_ordering operator<=>(Partition const& x,
                                            Partition const& y) {
      return x._ids <=> y._ids;
    }

   private:
    std::vector<std::uint32_t> _ids;
    std::size_t                _class_count = 0;
  };

}  // namespace rookcong

template <>
struct std::hash<rookcong::Partition> {
  std::size_t operator()(rookcong::Partition const& p) const noexcept {
    return p.hash();
  }
};

#endif  // ROOKCONG_PARTITION_HPP

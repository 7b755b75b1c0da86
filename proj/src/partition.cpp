#include "rookcong/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace rookcong {

  Partition Partition::identity(std::size_t size) {
    Partition p;
    p._ids.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
      p._ids[i] = static_cast<std::uint32_t>(i);
    }
    p._class_count = size;
    return p;
  }

  Partition Partition::universal(std::size_t size) {
    Partition p;
    p._ids.assign(size, 0);
    p._class_count = size == 0 ? 0 : 1;
    return p;
  }

  Partition Partition::from_labels(std::span<std::uint32_t const> labels) {
    Partition p;
    p._ids.resize(labels.size());
    std::uint32_t const bound
        = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
    if (bound < 4 * labels.size() + 64) {
      std::vector<std::uint32_t> id_of(std::size_t(bound) + 1,
                                       static_cast<std::uint32_t>(-1));
      std::uint32_t next = 0;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto& id = id_of[labels[i]];
        if (id == static_cast<std::uint32_t>(-1)) {
          id = next++;
        }
        p._ids[i] = id;
      }
      p._class_count = next;
      return p;
    }
    std::unordered_map<std::uint32_t, std::uint32_t> id_of;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, fresh] = id_of.emplace(labels[i],
                                       static_cast<std::uint32_t>(id_of.size()));
      p._ids[i] = it->second;
    }
    p._class_count = id_of.size();
    return p;
  }

  Partition Partition::from_classes(
      std::size_t                                   size,
      std::vector<std::vector<std::uint32_t>> const& classes) {
    std::vector<std::uint32_t> labels(size, static_cast<std::uint32_t>(-1));
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].empty()) {
        throw std::domain_error("partition has an empty class");
      }
      for (auto i : classes[c]) {
        if (i >= size || labels[i] != static_cast<std::uint32_t>(-1)) {
          throw std::domain_error("partition classes overlap or are out of "
                                  "range at element "
                                  + std::to_string(i));
        }
        labels[i] = static_cast<std::uint32_t>(c);
      }
    }
    for (std::size_t i = 0; i < size; ++i) {
      if (labels[i] == static_cast<std::uint32_t>(-1)) {
        throw std::domain_error("partition misses element "
                                + std::to_string(i));
      }
    }
    return from_labels(labels);
  }

  std::vector<std::vector<std::uint32_t>> Partition::classes() const {
    std::vector<std::vector<std::uint32_t>> out(_class_count);
    for (std::size_t i = 0; i < _ids.size(); ++i) {
      out[_ids[i]].push_back(static_cast<std::uint32_t>(i));
    }
    return out;
  }

  std::vector<std::uint32_t> Partition::class_members(std::uint32_t id) const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < _ids.size(); ++i) {
      if (_ids[i] == id) {
        out.push_back(static_cast<std::uint32_t>(i));
      }
    }
    return out;
  }

  bool Partition::refines(Partition const& coarser) const {
    if (coarser.size() != size()) {
      throw std::domain_error("refines: partitions of different sizes");
    }
    std::vector<std::uint32_t> image(_class_count,
                                     static_cast<std::uint32_t>(-1));
    for (std::size_t i = 0; i < _ids.size(); ++i) {
      auto& target = image[_ids[i]];
      if (target == static_cast<std::uint32_t>(-1)) {
        target = coarser._ids[i];
      } else if (target != coarser._ids[i]) {
        return false;
      }
    }
    return true;
  }

  std::size_t Partition::hash() const noexcept {
    std::size_t h = _ids.size();
    for (auto id : _ids) {
      h = h * 1000003u ^ id;
    }
    return h;
  }

}  // namespace rookcong

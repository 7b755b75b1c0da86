#ifndef ROOKCONG_TESTS_HELPERS_HPP
#define ROOKCONG_TESTS_HELPERS_HPP

#include <vector>

#include "rookcong/partial_injection.hpp"
#include "rookcong/universe.hpp"

#include "oracles.hpp"

namespace test_helpers {

  inline oracle::Map to_map(rookcong::PartialInjection const& x) {
    oracle::Map out(x.degree());
    for (int i = 1; i <= x.degree(); ++i) {
      out[i - 1] = x[i];
    }
    return out;
  }

  inline rookcong::PartialInjection from_map(oracle::Map const& m) {
    return rookcong::PartialInjection::from_images(static_cast<int>(m.size()),
                                                   m);
  }

  // The product table recomputed with the oracle's composition.
  inline std::vector<std::vector<int>>
  oracle_table(rookcong::Universe const& u) {
    std::vector<std::vector<int>> table(u.size(), std::vector<int>(u.size()));
    for (rookcong::Index a = 0; a < u.size(); ++a) {
      for (rookcong::Index b = 0; b < u.size(); ++b) {
        auto const xy = oracle::compose(to_map(u.at(a)), to_map(u.at(b)));
        table[a][b]   = static_cast<int>(u.require_index(from_map(xy)));
      }
    }
    return table;
  }

  inline rookcong::Index index_of(rookcong::Universe const& u, char const* text) {
    return u.require_index(rookcong::parse_two_line(u.degree(), text));
  }

}  // namespace test_helpers

#endif  // ROOKCONG_TESTS_HELPERS_HPP

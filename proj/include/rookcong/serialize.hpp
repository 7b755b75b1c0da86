#ifndef ROOKCONG_SERIALIZE_HPP
#define ROOKCONG_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "congruence.hpp"
#include "families.hpp"
#include "green.hpp"
#include "ideals.hpp"
#include "partition.hpp"
#include "universe.hpp"

namespace rookcong {

  // {"n": 4, "map": [[1,3],[2,1]]}, pairs sorted by source.
  nlohmann::json to_json(PartialInjection const& x);
  // Throws std::domain_error on a malformed object.
  PartialInjection element_from_json(nlohmann::json const& j);

  // {"family": "OR", "n": 4, "elements": [...]} in index order.
  nlohmann::json to_json(Universe const& u);

  // {"universe": {"family", "n"}, "classes": [[...], ...]}, classes sorted
  // by smallest member.
  nlohmann::json to_json(Universe const& u, Partition const& p);
  // Throws std::domain_error if the universe tag does not match u.
  Partition partition_from_json(Universe const& u, nlohmann::json const& j);

  nlohmann::json green_report(Universe const& u, GreenData const& green);
  nlohmann::json ideals_report(Universe const&                     u,
                               std::vector<IdealDescriptor> const& ideals);
  nlohmann::json prediction_report(Universe const& u, Prediction const& p);
  nlohmann::json lattice_report(Universe const&               u,
                                std::vector<Partition> const& lattice);
  nlohmann::json classification_report(Universe const&             u,
                                       ClassificationReport const& r);

  // Hasse diagram of the J-order; nodes carry rank, type and class size.
  std::string j_order_dot(Universe const& u, GreenData const& green);
  // Nodes are lattice indices labelled by class count; edges are covers.
  std::string lattice_dot(std::vector<Partition> const& lattice);

}  // namespace rookcong

#endif  // ROOKCONG_SERIALIZE_HPP

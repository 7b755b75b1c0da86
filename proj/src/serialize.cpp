#include "rookcong/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rookcong {

  using nlohmann::json;

  namespace {
    json universe_tag(Universe const& u) {
      return {{"family", std::string(to_string(u.family()))},
              {"n", u.degree()}};
    }

    json classes_of(std::vector<std::uint32_t> const& ids) {
      std::uint32_t count = 0;
      for (auto id : ids) {
        count = std::max(count, id + 1);
      }
      std::vector<std::vector<std::uint32_t>> classes(count);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        classes[ids[i]].push_back(static_cast<std::uint32_t>(i));
      }
      return classes;
    }

    std::string type_text(std::optional<MSetType> t) {
      return t ? std::string(to_string(*t)) : std::string();
    }
  }  // namespace

  json to_json(PartialInjection const& x) {
    json map = json::array();
    for (auto [a, b] : x.pairs()) {
      map.push_back({a, b});
    }
    return {{"n", x.degree()}, {"map", map}};
  }

  PartialInjection element_from_json(json const& j) {
    try {
      int const                        n = j.at("n").get<int>();
      std::vector<std::pair<int, int>> pairs;
      for (auto const& p : j.at("map")) {
        if (!p.is_array() || p.size() != 2) {
          throw std::domain_error("element map entries must be pairs");
        }
        pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
      }
      return PartialInjection::from_pairs(n, pairs);
    } catch (json::exception const& e) {
      throw std::domain_error(std::string("malformed element: ") + e.what());
    }
  }

  json to_json(Universe const& u) {
    json out       = universe_tag(u);
    json& elements = out["elements"] = json::array();
    for (auto const& x : u.elements()) {
      elements.push_back(to_json(x));
    }
    return out;
  }

  json to_json(Universe const& u, Partition const& p) {
    return {{"universe", universe_tag(u)}, {"classes", p.classes()}};
  }

  Partition partition_from_json(Universe const& u, json const& j) {
    try {
      if (j.at("universe") != universe_tag(u)) {
        throw std::domain_error("partition belongs to a different universe");
      }
      return Partition::from_classes(
          u.size(),
          j.at("classes").get<std::vector<std::vector<std::uint32_t>>>());
    } catch (json::exception const& e) {
      throw std::domain_error(std::string("malformed partition: ") + e.what());
    }
  }

  json green_report(Universe const& u, GreenData const& green) {
    json out = universe_tag(u);
    out["classes"] = {{"L", classes_of(green.L)},
                      {"R", classes_of(green.R)},
                      {"H", classes_of(green.H)},
                      {"J", classes_of(green.J)}};
    out["counts"]  = {{"L", green.count(GreenRelation::L)},
                      {"R", green.count(GreenRelation::R)},
                      {"H", green.count(GreenRelation::H)},
                      {"J", green.count(GreenRelation::J)},
                      {"D", green.count(GreenRelation::J)}};
    json j_classes = json::array();
    for (auto const& c : green.j_classes) {
      json entry = {{"rank", c.rank},
                    {"size", c.size},
                    {"representative", to_two_line(u.at(c.representative))}};
      if (c.type) {
        entry["type"] = type_text(c.type);
      }
      j_classes.push_back(entry);
    }
    out["j_classes"]      = j_classes;
    json& formulas        = out["formulas"] = json::array();
    json& discrepancies   = out["discrepancies"] = json::array();
    if (u.family() == Family::OR) {
      for (auto const& c : compare_formulas(u, green)) {
        json entry = {{"quantity", c.quantity},
                      {"printed", c.printed},
                      {"observed", c.observed},
                      {"agrees", c.agrees()}};
        if (c.rank) {
          entry["rank"] = *c.rank;
        }
        if (c.type) {
          entry["type"] = type_text(c.type);
        }
        if (!c.note.empty()) {
          entry["note"] = c.note;
        }
        formulas.push_back(entry);
        if (!c.agrees()) {
          discrepancies.push_back(entry);
        }
      }
    }
    return out;
  }

  json ideals_report(Universe const&                     u,
                     std::vector<IdealDescriptor> const& ideals) {
    json out          = universe_tag(u);
    json& listed      = out["listed"] = json::array();
    json& unlisted    = out["unlisted"] = json::array();
    for (auto const& d : ideals) {
      json entry = {{"label", d.label()},
                    {"size", d.members.count()},
                    {"absorbing", d.absorbing},
                    {"j_classes", d.j_classes}};
      (d.listed ? listed : unlisted).push_back(entry);
    }
    return out;
  }

  json prediction_report(Universe const& u, Prediction const& p) {
    json out           = universe_tag(u);
    out["spec_count"]  = p.spec_count;
    json& congruences  = out["congruences"] = json::array();
    for (auto const& c : p.congruences) {
      json specs = json::array();
      for (auto const& s : c.specs) {
        specs.push_back(s.describe());
      }
      congruences.push_back({{"specs", specs},
                             {"class_count", c.partition.class_count()},
                             {"classes", c.partition.classes()}});
    }
    return out;
  }

  json lattice_report(Universe const& u, std::vector<Partition> const& lattice) {
    json out        = universe_tag(u);
    out["size"]     = lattice.size();
    json& members   = out["congruences"] = json::array();
    for (auto const& p : lattice) {
      members.push_back(
          {{"class_count", p.class_count()}, {"classes", p.classes()}});
    }
    json& covers = out["covers"] = json::array();
    for (auto [i, j] : covering_pairs(lattice)) {
      covers.push_back({i, j});
    }
    return out;
  }

  json classification_report(Universe const& u, ClassificationReport const& r) {
    json out            = universe_tag(u);
    out["universe_size"] = r.universe_size;
    out["lattice_size"]  = r.lattice_size;
    out["spec_count"]    = r.spec_count;
    json& matched        = out["matched"] = json::array();
    for (auto const& m : r.matched) {
      json specs = json::array();
      for (auto const& s : m.specs) {
        specs.push_back(s.describe());
      }
      matched.push_back({{"lattice_index", m.lattice_index}, {"specs", specs}});
    }
    json& missing = out["predicted_not_found"] = json::array();
    for (auto const& s : r.predicted_not_found) {
      missing.push_back(s.describe());
    }
    json& extra = out["found_not_predicted"] = json::array();
    for (auto const& f : r.found_not_predicted) {
      extra.push_back({{"lattice_index", f.lattice_index},
                       {"classes", f.partition.classes()},
                       {"zero_class_kind", f.zero_class.label()},
                       {"zero_class_absorbing", f.zero_class.absorbing},
                       {"unit_classes", f.unit_classes},
                       {"tags", f.tags}});
    }
    out["notes"] = r.notes;
    return out;
  }

  std::string j_order_dot(Universe const&, GreenData const& green) {
    std::size_t const  c = green.j_classes.size();
    std::ostringstream out;
    out << "digraph j_order {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < c; ++i) {
      auto const& info = green.j_classes[i];
      out << "  j" << i << " [label=\"rank " << info.rank;
      if (info.type) {
        out << " type " << to_string(*info.type);
      }
      out << "\\n" << info.size << " elements\"];\n";
    }
    if (!green.j_leq.empty()) {
      for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = 0; b < c; ++b) {
          if (a == b || !green.j_leq[a][b]) {
            continue;
          }
          bool cover = true;
          for (std::size_t k = 0; k < c && cover; ++k) {
            cover = k == a || k == b || !(green.j_leq[a][k] && green.j_leq[k][b]);
          }
          if (cover) {
            out << "  j" << a << " -> j" << b << ";\n";
          }
        }
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string lattice_dot(std::vector<Partition> const& lattice) {
    std::ostringstream out;
    out << "digraph congruences {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      out << "  c" << i << " [label=\"" << lattice[i].class_count() << "\"];\n";
    }
    for (auto [i, j] : covering_pairs(lattice)) {
      out << "  c" << i << " -> c" << j << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace rookcong

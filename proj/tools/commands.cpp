#include "commands.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rookcong/congruence.hpp"
#include "rookcong/counterexample.hpp"
#include "rookcong/errors.hpp"
#include "rookcong/families.hpp"
#include "rookcong/green.hpp"
#include "rookcong/ideals.hpp"
#include "rookcong/serialize.hpp"
#include "rookcong/universe.hpp"

namespace rookcong::cli {

  namespace {
    std::string name_of(RunConfig const& c) {
      return std::string(to_string(c.family)) + "_" + std::to_string(c.n);
    }

    Universe load(RunConfig const& c) {
      EnumerationLimits limits = limits_from_environment();
      if (c.element_limit) {
        limits.max_elements = *c.element_limit;
      }
      if (c.force_budget) {
        limits.max_elements = std::max(limits.max_elements,
                                       universe_size(c.family, c.n));
        limits.max_degree = std::max(limits.max_degree, c.n);
      }
      return enumerate_universe(c.family, c.n, limits);
    }

    LatticeOptions lattice_options(RunConfig const& c) {
      LatticeOptions o;
      o.max_elements = c.lattice_limit;
      o.force        = c.force_budget;
      o.threads      = c.threads;
      return o;
    }

    void emit(std::ostream& out, nlohmann::json const& j) {
      out << j.dump(2) << '\n';
    }

    void no_dot(RunConfig const& c, char const* command) {
      if (c.format == Format::dot) {
        throw std::invalid_argument(std::string(command)
                                    + " has no DOT output");
      }
    }

    std::string class_text(Universe const&                   u,
                           std::vector<std::uint32_t> const& members) {
      std::string out = "{";
      for (std::size_t i = 0; i < members.size(); ++i) {
        out += (i == 0 ? "" : ", ") + to_two_line(u.at(members[i]));
      }
      return out + "}";
    }

    void stratum_summary(Universe const& u, std::ostream& log) {
      log << to_string(u.family()) << "_" << u.degree() << ": " << u.size()
          << " elements\n";
      auto const strata = u.rank_strata();
      for (std::size_t k = 0; k < strata.size(); ++k) {
        if (strata[k] != 0) {
          log << "  rank " << k << ": " << strata[k] << '\n';
        }
      }
    }
  }  // namespace

  int cmd_elements(RunConfig const& c, std::ostream& out, std::ostream& log) {
    no_dot(c, "elements");
    auto const u = load(c);
    if (c.format == Format::json) {
      emit(out, to_json(u));
      stratum_summary(u, log);
    } else {
      stratum_summary(u, out);
      for (Index i = 0; i < u.size(); ++i) {
        out << i << ": " << to_two_line(u.at(i)) << '\n';
      }
    }
    return kOk;
  }

  int cmd_green(RunConfig const& c, std::ostream& out, std::ostream& log) {
    auto const u     = load(c);
    auto const green = green_partition(u);
    if (c.format == Format::dot) {
      out << j_order_dot(u, green);
      return kOk;
    }
    auto const report = green_report(u, green);
    if (c.format == Format::json) {
      emit(out, report);
    } else {
      out << name_of(c) << " Green's relations\n";
      for (char const* r : {"L", "R", "H", "J", "D"}) {
        out << "  " << r << "-classes: " << report["counts"][r].get<int>()
            << '\n';
      }
      for (auto const& f : report["formulas"]) {
        out << "  " << f["quantity"].get<std::string>();
        if (f.contains("rank")) {
          out << " rank " << f["rank"].get<int>();
        }
        if (f.contains("type")) {
          out << " type " << f["type"].get<std::string>();
        }
        out << ": printed " << f["printed"].get<std::uint64_t>()
            << ", observed " << f["observed"].get<std::uint64_t>()
            << (f["agrees"].get<bool>() ? "" : "  [differs]");
        if (f.contains("note")) {
          out << " (" << f["note"].get<std::string>() << ")";
        }
        out << '\n';
      }
    }
    log << name_of(c) << ": " << report["discrepancies"].size()
        << " formula discrepancies\n";
    return kOk;
  }

  int cmd_ideals(RunConfig const& c, std::ostream& out, std::ostream& log) {
    no_dot(c, "ideals");
    auto const u      = load(c);
    auto const green  = green_partition(u);
    auto const ideals = enumerate_ideals(u, green);
    auto const report = ideals_report(u, ideals);
    if (c.format == Format::json) {
      emit(out, report);
    } else {
      out << name_of(c) << " ideals (down-closed unions of J-classes)\n";
      for (auto const& d : ideals) {
        out << "  " << d.label() << ": " << d.members.count() << " elements"
            << (d.absorbing ? "" : ", NOT absorbing")
            << (d.listed ? "" : ", not on the published list") << '\n';
      }
    }
    log << name_of(c) << ": " << report["listed"].size() << " listed, "
        << report["unlisted"].size() << " unlisted ideals\n";
    return kOk;
  }

  int cmd_predict(RunConfig const& c, std::ostream& out, std::ostream& log) {
    no_dot(c, "congruences predict");
    auto const u          = load(c);
    auto const prediction = predicted_congruences(u);
    if (c.format == Format::json) {
      emit(out, prediction_report(u, prediction));
    } else {
      out << name_of(c) << ": " << prediction.spec_count
          << " family members, " << prediction.congruences.size()
          << " distinct congruences\n";
      for (auto const& p : prediction.congruences) {
        out << "  " << p.partition.class_count() << " classes:";
        for (auto const& s : p.specs) {
          out << "  [" << s.describe() << "]";
        }
        out << '\n';
      }
    }
    log << name_of(c) << ": " << prediction.congruences.size()
        << " predicted congruences\n";
    return kOk;
  }

  int cmd_enumerate(RunConfig const& c, std::ostream& out, std::ostream& log) {
    auto const u       = load(c);
    auto const lattice = congruence_lattice(u, lattice_options(c));
    if (c.format == Format::dot) {
      out << lattice_dot(lattice);
    } else if (c.format == Format::json) {
      emit(out, lattice_report(u, lattice));
    } else {
      out << name_of(c) << ": " << lattice.size() << " congruences\n";
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        out << "  [" << i << "] " << lattice[i].class_count() << " classes\n";
        for (auto const& cls : lattice[i].classes()) {
          if (cls.size() > 1) {
            out << "      " << class_text(u, cls) << '\n';
          }
        }
      }
    }
    log << name_of(c) << ": " << lattice.size() << " congruences\n";
    return kOk;
  }

  int cmd_verify(RunConfig const& c, std::ostream& out, std::ostream& log) {
    no_dot(c, "congruences verify");
    auto const u      = load(c);
    auto const report = verify_classification(u, lattice_options(c));
    if (c.format == Format::json) {
      emit(out, classification_report(u, report));
    } else {
      out << name_of(c) << ": " << report.universe_size << " elements, "
          << report.lattice_size << " congruences, " << report.spec_count
          << " family members\n";
      out << "matched:\n";
      for (auto const& m : report.matched) {
        out << "  [" << m.lattice_index << "]";
        for (auto const& s : m.specs) {
          out << "  " << s.describe();
        }
        out << '\n';
      }
      out << "predicted but not found:\n";
      for (auto const& s : report.predicted_not_found) {
        out << "  " << s.describe() << '\n';
      }
      out << "found but not predicted:\n";
      for (auto const& f : report.found_not_predicted) {
        out << "  [" << f.lattice_index << "] " << f.partition.class_count()
            << " classes, zero class " << f.zero_class.label();
        for (auto const& t : f.tags) {
          out << "; " << t;
        }
        out << '\n';
        for (auto const& cls : f.unit_classes) {
          out << "      units " << class_text(u, cls) << '\n';
        }
      }
      out << "notes:\n";
      for (auto const& note : report.notes) {
        out << "  " << note << '\n';
      }
    }
    log << name_of(c) << ": " << report.matched.size() << " matched, "
        << report.predicted_not_found.size() << " predicted not found, "
        << report.found_not_predicted.size() << " found not predicted\n";
    return report.predicted_not_found.empty() ? kOk : kMissing;
  }

  int cmd_counterexample(RunConfig const& c, std::ostream& out,
                         std::ostream& log) {
    no_dot(c, "counterexample");
    int const  n = c.n < 6 ? 8 : c.n;
    auto const w = conjugation_counterexample(n);
    if (c.format == Format::json) {
      nlohmann::json j = {{"n", n},
                          {"sigma", to_json(w.sigma)},
                          {"s", to_json(w.s)},
                          {"conjugate", to_json(w.conjugate)},
                          {"sigma_in_OR", w.sigma_in_or},
                          {"s_in_W", w.s_in_w},
                          {"conjugate_in_SR", w.conjugate_in_sr}};
      if (w.violated_at) {
        j["violated_at"] = *w.violated_at;
      }
      emit(out, j);
    } else {
      out << "sigma        = " << to_two_line(w.sigma) << '\n'
          << "s            = " << to_two_line(w.s) << '\n'
          << "s^-1 sigma s = " << to_two_line(w.conjugate) << '\n'
          << "sigma in OR_" << n << ": " << std::boolalpha << w.sigma_in_or
          << '\n'
          << "s in W: " << w.s_in_w << '\n'
          << "s^-1 sigma s in SR_" << n << ": " << w.conjugate_in_sr << '\n';
    }
    std::ostream& verdict = c.format == Format::text ? out : log;
    if (w.violated_at) {
      int const i = *w.violated_at;
      verdict << "membership violated at i = " << i << ": s^-1 sigma s(theta("
          << i << ")) = " << w.conjugate[theta(n, i)]
          << " but theta(s^-1 sigma s(" << i << ")) = "
          << theta(n, w.conjugate[i]) << '\n';
    } else {
      verdict << "no violation found\n";
    }
    return kOk;
  }

  int cmd_erratum(RunConfig const& c, std::ostream& out, std::ostream& log) {
    no_dot(c, "erratum");
    if (c.family != Family::OR) {
      throw std::invalid_argument("erratum covers OR_n only");
    }
    auto const     u     = load(c);
    auto const     green = green_partition(u);
    nlohmann::json j     = green_report(u, green);
    nlohmann::json entries = nlohmann::json::array();
    for (auto const& d : j["discrepancies"]) {
      entries.push_back(d);
    }
    for (auto const& d : enumerate_ideals(u, green)) {
      if (!d.listed) {
        entries.push_back({{"quantity", "ideal missing from the list"},
                           {"label", d.label()},
                           {"size", d.members.count()},
                           {"absorbing", d.absorbing}});
      }
    }
    if (c.format == Format::json) {
      emit(out, {{"family", "OR"}, {"n", c.n}, {"discrepancies", entries}});
    } else {
      out << name_of(c) << " discrepancies\n";
      for (auto const& e : entries) {
        out << "  " << e.dump() << '\n';
      }
    }
    log << name_of(c) << ": " << entries.size() << " discrepancies\n";
    return kOk;
  }

  int run(int argc, char const* const* argv, std::ostream& out,
          std::ostream& log) {
    CLI::App app{"Orthogonal and symplectic rook monoids: enumeration, "
                 "Green's relations, ideals and congruences"};
    app.require_subcommand(1);

    RunConfig   c;
    std::string family = "or";
    std::string format = "json";
    std::size_t element_limit = 0;

    auto common = [&](CLI::App* sub) {
      sub->add_option("--family", family, "r, sr or or")
          ->check(CLI::IsMember({"r", "sr", "or"}, CLI::ignore_case));
      sub->add_option("--n", c.n, "degree (even, at least 2)");
      sub->add_option("--format", format, "json, dot or text")
          ->check(CLI::IsMember({"json", "dot", "text"}, CLI::ignore_case));
      sub->add_option("--out", c.out, "output path (default stdout)");
      sub->add_option("--threads", c.threads, "worker threads")
          ->check(CLI::PositiveNumber);
      sub->add_flag("--force-budget", c.force_budget,
                    "run even when over the element or lattice budget");
      sub->add_option("--element-limit", element_limit,
                      "largest universe to enumerate")
          ->check(CLI::PositiveNumber);
      sub->add_option("--lattice-limit", c.lattice_limit,
                      "largest universe for lattice enumeration")
          ->check(CLI::PositiveNumber);
    };

    using Command = int (*)(RunConfig const&, std::ostream&, std::ostream&);
    Command chosen = nullptr;
    auto    leaf   = [&](CLI::App* parent, char const* name, char const* help,
                    Command cmd) {
      auto* sub = parent->add_subcommand(name, help);
      common(sub);
      sub->callback([&chosen, cmd] { chosen = cmd; });
    };

    leaf(&app, "elements", "enumerate the universe", cmd_elements);
    leaf(&app, "green", "Green's relations and counting formulas", cmd_green);
    leaf(&app, "ideals", "two-sided ideals", cmd_ideals);
    auto* congruences = app.add_subcommand("congruences", "congruence tools");
    congruences->require_subcommand(1);
    leaf(congruences, "predict", "instantiate the congruence families",
         cmd_predict);
    leaf(congruences, "enumerate", "compute the congruence lattice",
         cmd_enumerate);
    leaf(congruences, "verify", "compare families against the lattice",
         cmd_verify);
    leaf(&app, "verify", "same as congruences verify", cmd_verify);
    leaf(&app, "counterexample", "the conjugation witness", cmd_counterexample);
    leaf(&app, "erratum", "printed claims that differ from computation",
         cmd_erratum);

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const status = app.exit(e, out, log);
      return status == 0 ? kOk : kUsage;
    }

    try {
      c.family = parse_family(family);
      for (auto& ch : format) {
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      }
      c.format = format == "dot"    ? Format::dot
                 : format == "text" ? Format::text
                                    : Format::json;
      if (element_limit != 0) {
        c.element_limit = element_limit;
      }
      if (c.n < 2 || c.n % 2 != 0) {
        throw std::invalid_argument("--n must be an even integer >= 2");
      }
      if (c.out.empty()) {
        return chosen(c, out, log);
      }
      std::ofstream file(c.out);
      if (!file) {
        throw std::invalid_argument("cannot open " + c.out);
      }
      return chosen(c, file, log);
    } catch (resource_error const& e) {
      log << "budget exceeded: " << e.what() << '\n';
      return kBudget;
    } catch (invariant_error const& e) {
      log << "invariant violated: " << e.what() << '\n';
      return kInvariant;
    } catch (std::exception const& e) {
      log << "error: " << e.what() << '\n';
      return kUsage;
    }
  }

}  // namespace rookcong::cli

// Command-line front end: parses job descriptions (color-count set, space,
// truncation bound), runs the requested series computation and emits JSON or
// an aligned text table.
//
// Exit codes: 0 success / oracle pass, 1 oracle mismatch, 2 malformed input
// (JSON, polynomial text, unreadable @file), 3 semantic validation failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uconf/exotic.hpp"
#include "uconf/json_io.hpp"
#include "uconf/oracle.hpp"
#include "uconf/power.hpp"
#include "uconf/spaces.hpp"

namespace {

using uconf::BigInt;
using uconf::ColorCountSet;
using uconf::DegreeBound;
using uconf::IntSeries;
using uconf::MultiIndex;
using uconf::PolySeries;
using uconf::SpaceDescriptor;

// Spec arguments are inline JSON or @file.json.
std::string load_spec(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw uconf::ParseError("cannot read file: " + arg.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "8" or "4,4"; a single value is applied to every variable.
DegreeBound parse_bound_arg(const std::string& text, int vars) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw uconf::ParseError("--bound: expected comma-separated integers");
    }
  }
  if (parts.empty()) throw uconf::ParseError("--bound: empty");
  if (parts.size() == 1 && vars > 1) parts.assign(static_cast<std::size_t>(vars), parts[0]);
  if (static_cast<int>(parts.size()) != vars) {
    throw std::invalid_argument("--bound: arity disagrees with the color set");
  }
  for (int v : parts) {
    if (v < 0) throw std::invalid_argument("--bound: components must be >= 0");
  }
  return DegreeBound(MultiIndex(parts));
}

std::string index_str(const MultiIndex& k) { return k.to_string(); }

void print_table(const std::vector<std::pair<std::string, std::string>>& rows,
                 const std::string& key_header, const std::string& value_header) {
  std::size_t width = key_header.size();
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::cout << key_header << std::string(width - key_header.size() + 2, ' ') << value_header
            << "\n";
  for (const auto& [k, v] : rows) {
    std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  }
}

template <typename Coeff, typename CoeffStr>
void emit_series(const uconf::TruncatedSeries<Coeff>& f, const std::string& format,
                 CoeffStr&& coeff_str) {
  if (format == "json") {
    std::cout << uconf::to_json(f) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (const MultiIndex& k : f.bound().indices_grlex()) {
    if (!uconf::is_zero(f.at(k))) rows.emplace_back(index_str(k), coeff_str(f.at(k)));
  }
  print_table(rows, "k", "coefficient");
}

struct CheckOptions {
  int max_points = 4;
  int bound = 3;
  int m = 3;
  std::string format = "json";
};

int run_check(const CheckOptions& opt) {
  struct NamedSet {
    std::string name;
    ColorCountSet set;
  };
  const std::vector<NamedSet> sets = {
      {"simple", uconf::simple_set()},
      {"symmetric", uconf::symmetric_set()},
      {"no_m_equal(" + std::to_string(opt.m) + ")", uconf::no_m_equal_set(opt.m)},
      {"apartheid(2)", uconf::apartheid_set(2)},
      {"nested(2)", uconf::nested_set(2)},
  };

  nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
  for (const auto& [name, set] : sets) {
    const DegreeBound bound = DegreeBound::uniform(set.vars(), opt.bound);
    const IntSeries c = uconf::color_count_series(set, bound);
    for (int n = 0; n <= opt.max_points; ++n) {
      const IntSeries predicted = uconf::pow(c, BigInt(n));
      const uconf::CollectionCensus census = uconf::enumerate_collections(n, set, bound);
      for (const MultiIndex& k : uconf::census_mismatches(census, predicted)) {
        nlohmann::ordered_json entry;
        entry["set"] = name;
        entry["n"] = n;
        entry["k"] = k.entries();
        entry["census"] = census.counts.at(k).str();
        entry["series"] = predicted.at(k).str();
        mismatches.push_back(std::move(entry));
      }
    }
  }

  const bool passed = mismatches.empty();
  if (opt.format == "json") {
    nlohmann::ordered_json report;
    report["max_points"] = opt.max_points;
    report["bound"] = opt.bound;
    report["mismatches"] = std::move(mismatches);
    report["passed"] = passed;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << (passed ? "oracle check passed" : "oracle check FAILED") << "\n";
    for (const auto& entry : mismatches) {
      std::cout << "  " << entry["set"].get<std::string>() << " n=" << entry["n"]
                << " k=" << entry["k"].dump() << " census=" << entry["census"].get<std::string>()
                << " series=" << entry["series"].get<std::string>() << "\n";
    }
  }
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generating series of additive invariants of colored configuration spaces"};
  app.require_subcommand(1);

  std::string set_spec, space_spec, bound_arg, format = "json";

  auto add_common = [&](CLI::App* cmd, bool with_space) {
    cmd->add_option("--set", set_spec, "color-count set spec (inline JSON or @file)")->required();
    if (with_space) {
      cmd->add_option("--space", space_spec, "space spec (inline JSON or @file)")->required();
    }
    cmd->add_option("--bound", bound_arg, "truncation bound, e.g. 8 or 4,4")->required();
    cmd->add_option("--output", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* series_cmd =
      app.add_subcommand("series", "Euler-characteristic series of the configuration spaces");
  add_common(series_cmd, true);

  CLI::App* hd_cmd =
      app.add_subcommand("hd-series", "Hodge-Deligne series of the configuration spaces");
  add_common(hd_cmd, true);

  CLI::App* fact_cmd =
      app.add_subcommand("factorize", "product representation of the color-count series");
  add_common(fact_cmd, false);

  CheckOptions check_opt;
  CLI::App* check_cmd =
      app.add_subcommand("check", "verify the series against brute-force enumeration");
  check_cmd->add_option("--max-points", check_opt.max_points, "largest point count to enumerate")
      ->check(CLI::Range(0, 8));
  check_cmd->add_option("--bound", check_opt.bound, "truncation bound, applied per set")
      ->check(CLI::Range(0, 16));
  check_cmd->add_option("--m", check_opt.m, "cap for the no-m-equal set")->check(CLI::Range(2, 16));
  check_cmd->add_option("--output", check_opt.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check_cmd->parsed()) {
      check_opt.format = check_opt.format.empty() ? "json" : check_opt.format;
      return run_check(check_opt);
    }

    const ColorCountSet set = uconf::parse_color_set(load_spec(set_spec));
    const DegreeBound bound = parse_bound_arg(bound_arg, set.vars());

    if (series_cmd->parsed()) {
      const SpaceDescriptor space = uconf::parse_space(load_spec(space_spec));
      emit_series(uconf::euler_series(set, space, bound), format,
                  [](const BigInt& c) { return c.str(); });
    } else if (hd_cmd->parsed()) {
      const SpaceDescriptor space = uconf::parse_space(load_spec(space_spec));
      if (!space.has_hodge_deligne()) {
        throw std::invalid_argument(
            "hd-series: the space spec must determine a Hodge-Deligne polynomial "
            "(kind \"hd\" or \"points\")");
      }
      emit_series(uconf::hodge_deligne_series(set, space.hodge_deligne(), bound), format,
                  [](const uconf::BivarPoly& c) { return uconf::to_string(c); });
    } else if (fact_cmd->parsed()) {
      const uconf::Factorization fac = uconf::factorize(uconf::color_count_series(set, bound));
      if (format == "json") {
        std::cout << uconf::to_json(fac) << "\n";
      } else {
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& [m, s] : fac.exponents) rows.emplace_back(index_str(m), s.str());
        print_table(rows, "m", "s");
      }
    }
    return 0;
  } catch (const uconf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const uconf::PolyParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

// Command-line front end: reproduces the census tables, classifies
// points/lines/webs, profiles webs, and dumps the group-orbit oracle.
// Exit code 0 iff every requested check passes.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "verocensus/census.hpp"
#include "verocensus/groupaction.hpp"
#include "verocensus/systems.hpp"

using namespace vrc;

namespace {

// Factor a prime-power order q = p^h.
std::pair<int, int> factor_order(int q) {
  if (q < 2) throw CLI::ValidationError("--q", "q must be a prime power >= 2");
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {q, 1};  // q prime
  int h = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++h;
  }
  if (rest != 1)
    throw CLI::ValidationError("--q",
                               std::to_string(q) + " is not a prime power");
  return {p, h};
}

FieldCtx make_field_from_order(int q, int bound) {
  const auto [p, h] = factor_order(q);
  return FieldCtx(p, h, bound);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (const char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Subspace parse_line(const std::string& text, const FieldCtx& f) {
  const auto parts = split(text, ';');
  if (parts.size() != 2)
    throw CLI::ValidationError("--coords",
                               "a line needs two points separated by ';'");
  const Vec a = parse_vec(parts[0], f), b = parse_vec(parts[1], f);
  if (a.size() != 6 || b.size() != 6)
    throw CLI::ValidationError("--coords", "each point needs 6 coordinates");
  return subspace_from_rows({a, b}, f, /*require_independent=*/true);
}

std::array<TernaryForm, 4> parse_web(const std::string& text,
                                     const FieldCtx& f) {
  const auto parts = split(text, ';');
  if (parts.size() != 4)
    throw CLI::ValidationError("--forms",
                               "a web needs four forms separated by ';'");
  std::array<TernaryForm, 4> gens;
  for (int i = 0; i < 4; ++i) gens[i] = parse_form(parts[i], f);
  return gens;
}

void print_report(const TableReport& r, const std::string& format) {
  if (format == "json")
    std::cout << report_to_json(r) << "\n";
  else if (format == "csv")
    std::cout << report_to_csv(r);
  else
    std::cout << report_to_markdown(r) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit census of conic systems under the Veronese group"};
  app.require_subcommand(1);

  int q = 0;
  std::string format = "markdown";
  std::string config_path;

  auto* tables = app.add_subcommand(
      "tables", "Recompute census tables and compare with the stored values");
  std::string table_id = "all";
  tables->add_option("--q", q, "field order (prime power)")->required();
  tables
      ->add_option("--id", table_id,
                   "T1..T6, OD2H_odd, OD2H_even, T7check, corollaries, or all")
      ->capture_default_str();
  tables->add_option("--format", format, "json|csv|markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  tables->add_option("--config", config_path, "JSON file with census bounds");

  auto* classify =
      app.add_subcommand("classify", "Classify a point, line, or web");
  classify->require_subcommand(1);
  std::string coords;
  bool want_od4 = false;

  auto* cpoint = classify->add_subcommand("point", "6 coordinates");
  cpoint->add_option("--q", q)->required();
  cpoint->add_option("--coords", coords, "y0,y1,y2,y3,y4,y5")->required();
  cpoint->add_flag("--od4", want_od4, "also print the conic-type census");

  auto* cline = classify->add_subcommand("line", "two points");
  cline->add_option("--q", q)->required();
  cline->add_option("--coords", coords, "y0,..,y5;z0,..,z5")->required();
  cline->add_flag("--od4", want_od4, "also print the conic-type census");

  auto* cweb = classify->add_subcommand("web", "four forms");
  cweb->add_option("--q", q)->required();
  cweb->add_option("--coords,--forms", coords, "f1;f2;f3;f4")->required();

  auto* pweb = app.add_subcommand("profile-web", "Full profile of a web");
  std::string forms;
  bool want_cubic = false;
  pweb->add_option("--q", q)->required();
  pweb->add_option("--forms", forms, "f1;f2;f3;f4")->required();
  pweb->add_flag("--cubic", want_cubic,
                 "also print the 20 cubic-surface coefficients");

  auto* oracle = app.add_subcommand("oracle", "Brute-force group-orbit oracle");
  auto* olines = oracle->add_subcommand("lines", "orbit partition of lines");
  olines->add_option("--q", q)->required();
  olines->add_option("--config", config_path, "JSON file with census bounds");

  CLI11_PARSE(app, argc, argv);

  try {
    CensusConfig cfg;
    if (!config_path.empty()) cfg = CensusConfig::from_file(config_path);

    if (*tables) {
      const FieldCtx f = make_field_from_order(q, cfg.max_q);
      std::vector<std::string> ids;
      if (table_id == "all")
        ids = census_ids(f.even());
      else
        ids = {table_id};
      bool all_pass = true;
      for (const std::string& id : ids) {
        const TableReport r = reproduce_table(id, f, cfg);
        print_report(r, format);
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 1;
    }

    if (*cpoint) {
      const FieldCtx f = make_field_from_order(q, cfg.max_q);
      const Vec y = parse_vec(coords, f);
      if (y.size() != 6)
        throw CLI::ValidationError("--coords", "a point needs 6 coordinates");
      nlohmann::json j{{"q", q},
                       {"parity", f.even() ? "even" : "odd"},
                       {"object", "point"},
                       {"label", to_string(classify_point(y, f))},
                       {"rank", point_rank(y, f)}};
      if (want_od4) j["od4"] = od4_of_point(y, f);
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*cline) {
      const FieldCtx f = make_field_from_order(q, cfg.max_q);
      const Subspace l = parse_line(coords, f);
      nlohmann::json j{{"q", q},
                       {"parity", f.even() ? "even" : "odd"},
                       {"object", "line"},
                       {"label", to_string(classify_line(l, f))},
                       {"od0", point_od(l, f)}};
      if (want_od4) j["od4"] = od4_of_line(l, f);
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*cweb) {
      const FieldCtx f = make_field_from_order(q, cfg.max_q);
      const WebProfile w = web_profile(parse_web(coords, f), f);
      nlohmann::json j{{"q", q},
                       {"parity", f.even() ? "even" : "odd"},
                       {"object", "web"},
                       {"label", to_string(w.label)}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*pweb) {
      const FieldCtx f = make_field_from_order(q, cfg.max_q);
      const auto gens = parse_web(forms, f);
      const WebProfile w = web_profile(gens, f);
      std::cout << web_profile_to_json(w, f) << "\n";
      if (want_cubic)
        std::cout << cubic_to_json(discriminant_cubic(gens, f)) << "\n";
      return w.all_checks_pass() ? 0 : 1;
    }

    if (*olines) {
      const FieldCtx f = make_field_from_order(q, cfg.max_q);
      const OrbitPartition part = orbit_partition_lines(f, cfg.oracle_max_q);
      std::cout << orbit_partition_to_json(part, f) << "\n";
      return part.num_orbits() == 15 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

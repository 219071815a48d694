// rgsurf command-line front end. JSON reports go to stdout, diagnostics to
// stderr. Exit status: 0 ok, 1 bad input, 2 theorem violation, 3 selftest
// criteria failed.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rgsurf/rgsurf.h"

using Json = nlohmann::json;

namespace {

int exit_code(rgs_status s) {
  switch (s) {
  case RGS_OK:
    return 0;
  case RGS_THEOREM_VIOLATION:
  case RGS_INTERNAL_ERROR:
    return 2;
  default:
    return 1;
  }
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw InputError(path + " is not valid JSON");
  return j;
}

// "[3,-1,\"1/2\"]" or "3,-1,1/2"
Json parse_class(const std::string &text) {
  if (!text.empty() && text.front() == '[') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw InputError("class is not a JSON array");
    return j;
  }
  Json a = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find('/') == std::string::npos) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(item, &used);
        if (used == item.size()) {
          a.push_back(v);
          continue;
        }
      } catch (const std::exception &) {
      }
    }
    a.push_back(item);
  }
  return a;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact lattice computations for rational surfaces with finite group actions", "rgsurf"};
  app.require_subcommand(1);
  int threads = 1;
  bool timing = false;
  app.add_option("--threads", threads, "worker threads for closures")->check(CLI::Range(1, 256));
  app.add_flag("--timing", timing, "add timing_seconds to the report");
  app.set_version_flag("--version", std::string(rgs_version()));

  Json inputs = Json::object();

  auto *exc = app.add_subcommand("exc", "enumerate exceptional classes");
  int exc_n = 0;
  std::optional<long long> exc_deg;
  bool exc_reduce = false;
  exc->add_option("--n", exc_n, "number of blow-ups")->required();
  exc->add_option("--max-degree", exc_deg, "degree bound (required for N >= 9)");
  exc->add_flag("--reduce", exc_reduce, "also reduce every class to some E_l");

  auto *red = app.add_subcommand("reduce", "reduce an exceptional or symplectic class");
  std::string red_class, red_mode = "auto";
  int red_iters = 10000;
  red->add_option("--class", red_class, "raw coordinates (c0,c1,...,cN), integers or p/q")->required();
  red->add_option("--mode", red_mode, "auto, exceptional or symplectic")
      ->check(CLI::IsMember({"auto", "exceptional", "symplectic"}));
  red->add_option("--max-iters", red_iters, "Cremona step cap");

  auto *weyl = app.add_subcommand("weyl", "root system and Weyl group order");
  int weyl_n = 0;
  std::string weyl_method = "auto";
  weyl->add_option("--n", weyl_n, "3 <= N <= 8")->required();
  weyl->add_option("--method", weyl_method, "auto, closure or chain")
      ->check(CLI::IsMember({"auto", "closure", "chain"}));

  auto *inv = app.add_subcommand("invariants", "invariant lattice of a group");
  auto *conic = app.add_subcommand("conic", "conic bundle decomposition of a group");
  std::string group_path, model_text;
  std::optional<int> group_n;
  std::optional<long long> group_limit;
  int g0 = 1;
  for (auto *sc : {inv, conic}) {
    sc->add_option("--group", group_path, "JSON array of (N+1)x(N+1) matrices")->required();
    sc->add_option("--n", group_n, "expected N (checked against the matrices)");
    sc->add_option("--limit", group_limit, "closure size limit");
  }
  conic->add_option("--g0-order,--m", g0, "order of the subgroup acting trivially on H^2")->check(CLI::PositiveNumber);
  conic->add_option("--model", model_text, "relabelling [[k,swapped],...] for fibers 2..N");

  auto *cone = app.add_subcommand("cone", "fiber pairs, blow-down obstruction, cone membership");
  int cone_n = 0;
  long long a_min = -10000, degree_bound = 5;
  std::string cone_class, scan_lo = "-2", scan_hi = "3";
  bool scan = false;
  int scan_points = 50;
  cone->add_option("--n", cone_n, "number of blow-ups")->required();
  cone->add_option("--a-min", a_min, "lower end of the obstruction search");
  cone->add_option("--class", cone_class, "symplectic class to test (raw coordinates)");
  cone->add_option("--degree-bound", degree_bound, "exceptional degree bound for N >= 9");
  cone->add_flag("--scan", scan, "scan -K + delta F over a grid");
  cone->add_option("--scan-lo", scan_lo, "first delta");
  cone->add_option("--scan-hi", scan_hi, "last delta");
  cone->add_option("--scan-points", scan_points, "grid size")->check(CLI::Range(2, 100000));

  auto *hex = app.add_subcommand("hexagon", "imprimitive monomial groups");
  std::string kind = "Gn";
  long long hex_n = 0, hex_k = 1, hex_s = 0;
  bool verify = false;
  hex->add_option("--kind", kind, "Gn, GnTilde, Gnks or Gn32Tilde")
      ->check(CLI::IsMember({"Gn", "GnTilde", "Gnks", "Gn32Tilde"}));
  hex->add_option("--n", hex_n, "root of unity order")->required();
  hex->add_option("--k", hex_k, "divisor of n (Gnks)");
  hex->add_option("--s", hex_s, "twist with s^2 - s + 1 = 0 mod k (Gnks)");
  hex->add_flag("--verify", verify, "check the presentation relations");

  auto *self = app.add_subcommand("selftest", "run the acceptance criteria");
  std::vector<int> only;
  self->add_option("--only", only, "criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "rgsurf: " << e.what() << "\n";
    return 1;
  }

  std::string command;
  try {
    if (exc->parsed()) {
      command = "exc";
      inputs = {{"n", exc_n}, {"max_degree", exc_deg ? Json(*exc_deg) : Json(nullptr)}, {"reduce", exc_reduce}};
    } else if (red->parsed()) {
      command = "reduce";
      inputs = {{"class", parse_class(red_class)}, {"mode", red_mode}, {"max_iters", red_iters}};
    } else if (weyl->parsed()) {
      command = "weyl";
      inputs = {{"n", weyl_n}, {"method", weyl_method}};
    } else if (inv->parsed() || conic->parsed()) {
      command = inv->parsed() ? "invariants" : "conic";
      inputs = {{"matrices", read_json_file(group_path)}, {"n", group_n ? Json(*group_n) : Json(nullptr)}};
      if (group_limit)
        inputs["limit"] = *group_limit;
      if (conic->parsed()) {
        inputs["g0_order"] = g0;
        inputs["model"] = nullptr;
        if (!model_text.empty()) {
          inputs["model"] = Json::parse(model_text, nullptr, false);
          if (inputs["model"].is_discarded())
            throw InputError("--model is not valid JSON");
        }
      }
    } else if (cone->parsed()) {
      command = "cone";
      inputs = {{"n", cone_n},
                {"a_min", a_min},
                {"degree_bound", degree_bound},
                {"class", cone_class.empty() ? Json(nullptr) : parse_class(cone_class)},
                {"scan", nullptr}};
      if (scan)
        inputs["scan"] = {{"lo", scan_lo}, {"hi", scan_hi}, {"points", scan_points}};
    } else if (hex->parsed()) {
      command = "hexagon";
      inputs = {{"kind", kind}, {"n", hex_n}, {"k", hex_k}, {"s", hex_s}, {"verify", verify}};
    } else if (self->parsed()) {
      command = "selftest";
      inputs = {{"only", only}};
    }
  } catch (const InputError &e) {
    std::cerr << "rgsurf: " << e.what() << "\n";
    return 1;
  }

  rgs_report *report = nullptr;
  const rgs_status st =
      rgs_run(command.c_str(), inputs.dump().c_str(), threads, timing ? RGS_FLAG_TIMING : 0, &report);
  if (st != RGS_OK) {
    std::cerr << "rgsurf: " << rgs_status_name(st) << ": " << rgs_last_error() << "\n";
    return exit_code(st);
  }
  std::cout << rgs_report_json(report);
  int code = 0;
  if (command == "selftest") {
    const Json res = Json::parse(rgs_report_results_json(report));
    for (const auto &c : res["criteria"])
      std::cerr << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["id"].get<int>() << " "
                << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
    if (!res["all_pass"].get<bool>())
      code = 3;
  }
  rgs_report_free(report);
  return code;
}

#include "rgsurf/rgsurf.h"

#include <chrono>
#include <new>
#include <string>

#include "rgsurf/report.hpp"

struct rgs_report {
  std::string json;
  std::string results;
};

struct rgs_group {
  rgs::Json matrices;
  int n = 0;
  std::size_t count = 0;
};

namespace {

thread_local std::string last_error;

rgs_status fail(rgs_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F> rgs_status guarded(F &&f) {
  try {
    last_error.clear();
    return f();
  } catch (const rgs::LimitExceeded &e) {
    return fail(RGS_LIMIT_EXCEEDED, e.what());
  } catch (const rgs::DomainError &e) {
    return fail(RGS_DOMAIN_ERROR, e.what());
  } catch (const rgs::TheoremViolation &e) {
    return fail(RGS_THEOREM_VIOLATION, e.what());
  } catch (const nlohmann::json::exception &e) {
    return fail(RGS_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc &) {
    return fail(RGS_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception &e) {
    return fail(RGS_INTERNAL_ERROR, e.what());
  }
}

rgs_status run(const std::string &command, const rgs::Json &inputs, int threads, int flags, rgs_report **out) {
  if (!out)
    return fail(RGS_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    const auto t0 = std::chrono::steady_clock::now();
    rgs::RunOptions opt;
    opt.threads = threads < 1 ? 1 : threads;
    const rgs::Json results = rgs::run_command(command, inputs, opt);
    std::optional<double> secs;
    if (flags & RGS_FLAG_TIMING)
      secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto *r = new rgs_report;
    r->json = rgs::render_report(command, inputs, results, secs);
    r->results = results.dump();
    *out = r;
    return RGS_OK;
  });
}

} // namespace

extern "C" {

const char *rgs_version(void) { return RGSURF_VERSION; }

const char *rgs_status_name(rgs_status s) {
  switch (s) {
  case RGS_OK:
    return "ok";
  case RGS_DOMAIN_ERROR:
    return "domain_error";
  case RGS_THEOREM_VIOLATION:
    return "theorem_violation";
  case RGS_INVALID_ARGUMENT:
    return "invalid_argument";
  case RGS_LIMIT_EXCEEDED:
    return "limit_exceeded";
  case RGS_INTERNAL_ERROR:
    return "internal_error";
  }
  return "unknown";
}

const char *rgs_last_error(void) { return last_error.c_str(); }

rgs_status rgs_run(const char *command, const char *inputs_json, int threads, int flags, rgs_report **out) {
  if (!command)
    return fail(RGS_INVALID_ARGUMENT, "null command");
  rgs::Json inputs = rgs::Json::object();
  if (inputs_json && *inputs_json) {
    inputs = rgs::Json::parse(inputs_json, nullptr, false);
    if (inputs.is_discarded())
      return fail(RGS_INVALID_ARGUMENT, "inputs are not valid JSON");
  }
  return run(command, inputs, threads, flags, out);
}

rgs_status rgs_run_exc(int n, long long max_degree, rgs_report **out) {
  rgs::Json in{{"n", n}, {"max_degree", nullptr}};
  if (max_degree >= 0)
    in["max_degree"] = max_degree;
  return run("exc", in, 1, 0, out);
}

rgs_status rgs_run_reduce(const char *class_json, rgs_report **out) {
  if (!class_json)
    return fail(RGS_INVALID_ARGUMENT, "null class");
  auto c = rgs::Json::parse(class_json, nullptr, false);
  if (c.is_discarded())
    return fail(RGS_INVALID_ARGUMENT, "class is not valid JSON");
  return run("reduce", rgs::Json{{"class", c}}, 1, 0, out);
}

rgs_status rgs_run_weyl(int n, const char *method, int threads, rgs_report **out) {
  return run("weyl", rgs::Json{{"n", n}, {"method", method ? method : "auto"}}, threads, 0, out);
}

rgs_status rgs_run_cone(int n, long long a_min, rgs_report **out) {
  return run("cone", rgs::Json{{"n", n}, {"a_min", a_min}}, 1, 0, out);
}

rgs_status rgs_run_hexagon(const char *kind, long long n, long long k, long long s, int verify, rgs_report **out) {
  if (!kind)
    return fail(RGS_INVALID_ARGUMENT, "null kind");
  return run("hexagon", rgs::Json{{"kind", kind}, {"n", n}, {"k", k}, {"s", s}, {"verify", verify != 0}}, 1, 0,
             out);
}

rgs_status rgs_run_selftest(int threads, rgs_report **out) {
  return run("selftest", rgs::Json::object(), threads, 0, out);
}

rgs_status rgs_group_from_json(const char *matrices_json, int n, rgs_group **out) {
  if (!matrices_json || !out)
    return fail(RGS_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  auto m = rgs::Json::parse(matrices_json, nullptr, false);
  if (m.is_discarded())
    return fail(RGS_INVALID_ARGUMENT, "group file is not valid JSON");
  return guarded([&] {
    const auto gens = rgs::parse_group_json(m, n > 0 ? std::optional<int>(n) : std::nullopt);
    *out = new rgs_group{std::move(m), gens.front().n(), gens.size()};
    return RGS_OK;
  });
}

int rgs_group_n(const rgs_group *g) { return g ? g->n : -1; }

size_t rgs_group_generator_count(const rgs_group *g) { return g ? g->count : 0; }

void rgs_group_free(rgs_group *g) { delete g; }

rgs_status rgs_run_invariants(const rgs_group *g, int threads, rgs_report **out) {
  if (!g)
    return fail(RGS_INVALID_ARGUMENT, "null group");
  return run("invariants", rgs::Json{{"n", g->n}, {"matrices", g->matrices}}, threads, 0, out);
}

rgs_status rgs_run_conic(const rgs_group *g, int g0_order, int threads, rgs_report **out) {
  if (!g)
    return fail(RGS_INVALID_ARGUMENT, "null group");
  return run("conic", rgs::Json{{"n", g->n}, {"matrices", g->matrices}, {"g0_order", g0_order}}, threads, 0, out);
}

const char *rgs_report_json(const rgs_report *r) { return r ? r->json.c_str() : ""; }

const char *rgs_report_results_json(const rgs_report *r) { return r ? r->results.c_str() : ""; }

void rgs_report_free(rgs_report *r) { delete r; }

} // extern "C"

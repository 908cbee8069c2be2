#include "polarclust.h"

#include <cstring>
#include <exception>
#include <string>

#include "polarclust/canyons.hpp"
#include "polarclust/clusters.hpp"
#include "polarclust/invariants.hpp"
#include "polarclust/parser.hpp"
#include "polarclust/report.hpp"

using namespace polarclust;

struct pc_germ {
  GermAnalysis g;
};

namespace {

thread_local std::string last_error;

pc_status fail(pc_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
pc_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(PC_ERR_PARSE, e.what());
  } catch (const InvalidInput& e) {
    return fail(PC_ERR_INVALID, e.what());
  } catch (const Unresolved& e) {
    return fail(PC_ERR_UNRESOLVED, e.what());
  } catch (const InvariantViolation& e) {
    return fail(PC_ERR_INVARIANT, e.what());
  } catch (const NonIsolated& e) {
    return fail(PC_ERR_NON_ISOLATED, e.what());
  } catch (const AlgebraError& e) {
    return fail(PC_ERR_ALGEBRA, e.what());
  } catch (const std::exception& e) {
    return fail(PC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PC_ERR_INTERNAL, "unknown error");
  }
}

pc_status to_options(const pc_options* in, AnalysisOptions& out) {
  if (!in) return PC_OK;
  if (in->margin_den <= 0 || in->margin_num <= 0) return fail(PC_ERR_ARGUMENT, "margin must be positive");
  out.margin = Exponent(in->margin_num, in->margin_den);
  if (in->has_shear) out.shear = in->shear;
  out.verify_gradient_degree = in->verify_gradient_degree != 0;
  return PC_OK;
}

}  // namespace

extern "C" {

void pc_options_default(pc_options* opt) {
  if (!opt) return;
  opt->margin_num = 1;
  opt->margin_den = 1;
  opt->has_shear = 0;
  opt->shear = 0;
  opt->verify_gradient_degree = 1;
}

const char* pc_last_error(void) { return last_error.c_str(); }

pc_status pc_analyze(const char* expr, const pc_options* opt, pc_germ** out) {
  return pc_analyze_over(nullptr, expr, opt, out);
}

pc_status pc_analyze_over(const pc_germ* base, const char* expr, const pc_options* opt, pc_germ** out) {
  return guarded([&]() -> pc_status {
    if (!expr || !out) return fail(PC_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    AnalysisOptions o;
    if (pc_status s = to_options(opt, o); s != PC_OK) return s;
    if (base) {
      o.base_tower = &base->g.tower;
      o.context = base->g.context;
    }
    auto* h = new pc_germ{analyze(parse_polynomial(expr), o)};
    *out = h;
    return PC_OK;
  });
}

void pc_germ_free(pc_germ* g) { delete g; }

pc_status pc_report(const pc_germ* g, pc_format format, int max_terms, char** out) {
  return guarded([&]() -> pc_status {
    if (!g || !out) return fail(PC_ERR_ARGUMENT, "null argument");
    ReportOptions ro;
    ro.max_terms = max_terms;
    std::string s;
    switch (format) {
      case PC_FORMAT_TEXT: s = report_text(g->g, ro); break;
      case PC_FORMAT_STRUCTURED: s = report_structured(g->g, ro); break;
      case PC_FORMAT_DOT: s = tree_dot(g->g); break;
      case PC_FORMAT_ASCII: s = tree_ascii(g->g); break;
      default: return fail(PC_ERR_ARGUMENT, "unknown format");
    }
    *out = dup(s);
    return PC_OK;
  });
}

pc_status pc_signature(const pc_germ* g, pc_level level, char** out) {
  return guarded([&]() -> pc_status {
    if (!g || !out) return fail(PC_ERR_ARGUMENT, "null argument");
    *out = dup(level == PC_LEVEL_TOPO ? topo_signature(g->g).str() : lipschitz_signature(g->g).str());
    return PC_OK;
  });
}

int pc_checks_passed(const pc_germ* g) { return g && g->g.all_checks_passed() ? 1 : 0; }

int pc_multiplicity(const pc_germ* g) { return g ? g->g.m : -1; }

int pc_polar_count(const pc_germ* g) { return g ? static_cast<int>(g->g.polars.size()) : -1; }

pc_status pc_milnor(const pc_germ* g, char** out) {
  return guarded([&]() -> pc_status {
    if (!g || !out) return fail(PC_ERR_ARGUMENT, "null argument");
    *out = dup(g->g.milnor.str());
    return PC_OK;
  });
}

pc_status pc_compare(const pc_germ* f, const pc_germ* g, pc_level level, int* compatible, char** witness) {
  return guarded([&]() -> pc_status {
    if (!f || !g || !compatible) return fail(PC_ERR_ARGUMENT, "null argument");
    Verdict v = level == PC_LEVEL_TOPO ? compare_topo(f->g, g->g) : compare_lipschitz(f->g, g->g);
    *compatible = v.compatible ? 1 : 0;
    if (witness) *witness = dup(v.witness);
    return PC_OK;
  });
}

pc_status pc_verify_shear(const char* expr, const pc_options* opt, uint64_t seed, int* passed, char** report) {
  return guarded([&]() -> pc_status {
    if (!expr || !passed) return fail(PC_ERR_ARGUMENT, "null argument");
    AnalysisOptions o;
    if (pc_status s = to_options(opt, o); s != PC_OK) return s;
    ShearVerification v = verify_by_shear(parse_polynomial(expr), seed, o);
    *passed = v.passed() ? 1 : 0;
    if (report) {
      std::string s = "extra shear: y -> y + " + exponent_str(v.lambda) + "*x (seed " + std::to_string(seed) + ")\n";
      s += "== original ==\n" + report_text(v.original);
      s += "== sheared ==\n" + report_text(v.sheared);
      s += "topological signature: " + std::string(v.topo_equal ? "equal" : "DIFFERENT") + "\n";
      s += "lipschitz signature: " + std::string(v.lipschitz_equal ? "equal" : "DIFFERENT") + "\n";
      *report = dup(s);
    }
    return PC_OK;
  });
}

pc_status pc_oracle_milnor(const char* expr, int64_t* out) {
  return guarded([&]() -> pc_status {
    if (!expr || !out) return fail(PC_ERR_ARGUMENT, "null argument");
    *out = oracle_milnor(parse_polynomial(expr));
    return PC_OK;
  });
}

void pc_string_free(char* s) { std::free(s); }

}  // extern "C"

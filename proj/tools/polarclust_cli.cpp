// polarclust command line: analyze, tree, compare, verify.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polarclust.h"

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kDistinct = 1;
constexpr int kBadInput = 2;
constexpr int kInvariant = 3;
constexpr int kUnresolved = 4;
constexpr int kInternal = 5;

int exit_for(pc_status s) {
  switch (s) {
    case PC_OK: return kOk;
    case PC_ERR_PARSE:
    case PC_ERR_INVALID:
    case PC_ERR_ARGUMENT: return kBadInput;
    case PC_ERR_INVARIANT: return kInvariant;
    case PC_ERR_UNRESOLVED: return kUnresolved;
    default: return kInternal;
  }
}

int report_error(pc_status s) {
  std::cerr << "error: " << pc_last_error() << "\n";
  return exit_for(s);
}

// "@file" reads the expression from a file
bool load(const std::string& arg, std::string& expr) {
  if (arg.empty() || arg[0] != '@') {
    expr = arg;
    return true;
  }
  std::ifstream in(arg.substr(1));
  if (!in) {
    std::cerr << "error: cannot read " << arg.substr(1) << "\n";
    return false;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  expr = ss.str();
  while (!expr.empty() && (expr.back() == '\n' || expr.back() == '\r' || expr.back() == ' ')) expr.pop_back();
  return true;
}

bool parse_margin(const std::string& s, pc_options& o) {
  try {
    std::size_t slash = s.find('/');
    std::size_t used = 0;
    o.margin_num = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) return false;
    o.margin_den = 1;
    if (slash != std::string::npos) {
      std::string d = s.substr(slash + 1);
      o.margin_den = std::stoll(d, &used);
      if (used != d.size()) return false;
    }
  } catch (const std::exception&) {
    return false;
  }
  return o.margin_num > 0 && o.margin_den > 0;
}

struct Common {
  std::string margin = "1";
  long shear = 0;
  bool has_shear = false;
  bool no_formal = false;
  int max_terms = 6;
};

bool options_from(const Common& c, pc_options& o) {
  pc_options_default(&o);
  if (!parse_margin(c.margin, o)) {
    std::cerr << "error: --margin expects a positive rational p or p/q\n";
    return false;
  }
  o.has_shear = c.has_shear ? 1 : 0;
  o.shear = c.shear;
  o.verify_gradient_degree = c.no_formal ? 0 : 1;
  return true;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--margin", c.margin, "truncation margin beyond the needed order (p or p/q)");
  cmd->add_option_function<long>(
      "--shear", [&c](const long& v) { c.shear = v, c.has_shear = true; }, "explicit shear y -> y + s*x");
  cmd->add_option("--max-terms", c.max_terms, "series terms shown per arc (display only)");
  cmd->add_flag("--no-formal-check", c.no_formal, "skip the formal substitution check of gradient degrees");
}

int print_and_free(char* s) {
  std::fputs(s, stdout);
  pc_string_free(s);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polar clusters, Kuo-Lu trees and gradient canyons of plane curve germs"};
  app.require_subcommand(1);

  Common common;
  std::string germ, other, format = "text", level = "topo";
  std::uint64_t seed = 1;

  auto* analyze = app.add_subcommand("analyze", "full report of a germ");
  analyze->add_option("germ", germ, "expression in x, y (or @file)")->required();
  analyze->add_option("--format", format, "text, structured or dot")
      ->check(CLI::IsMember({"text", "structured", "dot"}));
  add_common(analyze, common);

  auto* tree = app.add_subcommand("tree", "decorated Kuo-Lu tree");
  tree->add_option("germ", germ, "expression in x, y (or @file)")->required();
  tree->add_option("--format", format, "dot or ascii")->check(CLI::IsMember({"dot", "ascii", "text"}));
  add_common(tree, common);

  auto* compare = app.add_subcommand("compare", "necessary conditions for equivalence of two germs");
  compare->add_option("f", germ, "first germ (or @file)")->required();
  compare->add_option("g", other, "second germ (or @file)")->required();
  compare->add_option("--level", level, "topo or lipschitz")->check(CLI::IsMember({"topo", "lipschitz"}));
  add_common(compare, common);

  auto* verify = app.add_subcommand("verify", "recompute after a seeded random shear and compare");
  verify->add_option("germ", germ, "expression in x, y (or @file)")->required();
  verify->add_option("--seed", seed, "seed of the extra shear");
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  pc_options opt;
  if (!options_from(common, opt)) return kBadInput;
  std::string expr;
  if (!load(germ, expr)) return kBadInput;

  if (verify->parsed()) {
    int passed = 0;
    char* text = nullptr;
    pc_status s = pc_verify_shear(expr.c_str(), &opt, seed, &passed, &text);
    if (s != PC_OK) return report_error(s);
    print_and_free(text);
    return passed ? kOk : kInvariant;
  }

  pc_germ* f = nullptr;
  pc_status s = pc_analyze(expr.c_str(), &opt, &f);
  if (s != PC_OK) return report_error(s);

  int code = kOk;
  if (compare->parsed()) {
    std::string expr_g;
    if (!load(other, expr_g)) {
      pc_germ_free(f);
      return kBadInput;
    }
    pc_germ* g = nullptr;
    s = pc_analyze_over(f, expr_g.c_str(), &opt, &g);
    if (s != PC_OK) {
      pc_germ_free(f);
      return report_error(s);
    }
    int compatible = 0;
    char* witness = nullptr;
    s = pc_compare(f, g, level == "topo" ? PC_LEVEL_TOPO : PC_LEVEL_LIPSCHITZ, &compatible, &witness);
    if (s != PC_OK) {
      code = report_error(s);
    } else {
      if (compatible)
        std::printf("Compatible\n");
      else
        std::printf("Distinct: %s\n", witness);
      pc_string_free(witness);
      code = compatible ? kOk : kDistinct;
    }
    pc_germ_free(g);
    pc_germ_free(f);
    return code;
  }

  pc_format fmt = PC_FORMAT_TEXT;
  if (tree->parsed())
    fmt = format == "dot" ? PC_FORMAT_DOT : PC_FORMAT_ASCII;
  else if (format == "structured")
    fmt = PC_FORMAT_STRUCTURED;
  else if (format == "dot")
    fmt = PC_FORMAT_DOT;
  char* text = nullptr;
  s = pc_report(f, fmt, common.max_terms, &text);
  if (s != PC_OK) {
    code = report_error(s);
  } else {
    print_and_free(text);
    if (!pc_checks_passed(f)) {
      std::cerr << "error: internal consistency check failed\n";
      code = kInvariant;
    }
  }
  pc_germ_free(f);
  return code;
}

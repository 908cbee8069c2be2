#include "polarclust/report.hpp"

#include <cstdio>
#include <random>
#include <sstream>

#include "polarclust/canyons.hpp"
#include "polarclust/clusters.hpp"
#include "polarclust/invariants.hpp"

namespace polarclust {

using nlohmann::json;

namespace {

std::string decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

std::string complex_str(std::complex<double> z) {
  const double eps = 1e-12;
  bool re0 = std::abs(z.real()) < eps, im0 = std::abs(z.imag()) < eps;
  if (im0) return decimal(re0 ? 0.0 : z.real());
  std::string im = decimal(z.imag()) + "i";
  if (re0) return im;
  return decimal(z.real()) + (z.imag() < 0 ? "" : "+") + im;
}

std::string ext_str(const ExtRational& e) { return e.str(); }

std::string opt_exp(const std::optional<Exponent>& e) { return e ? exponent_str(*e) : "none"; }

json tree_json(const KuoLuTree& t, int bar) {
  const Bar& b = t.bar(bar);
  json j;
  j["id"] = b.id;
  j["height"] = exponent_str(b.height);
  j["roots"] = b.child_leaves;
  json kids = json::array();
  for (int c : b.child_bars) kids.push_back(tree_json(t, c));
  j["bars"] = kids;
  return j;
}

std::string line_name(int line) { return line < 0 ? "none" : "L" + std::to_string(line); }

std::string bar_name(int bar) { return bar < 0 ? "none" : "B" + std::to_string(bar); }

}  // namespace

json element_json(const TowerElement& e) {
  return json{{"exact", e.str()}, {"approx", complex_str(e.approx())}};
}

json report_json(const GermAnalysis& g, const ReportOptions& opt) {
  json r;
  r["schema"] = "polarclust-report/1";
  r["input"] = g.input.str();
  r["germ"] = g.f.str();
  r["shear"] = g.shear;
  r["truncation"] = {{"precision", exponent_str(g.precision)},
                     {"horizon", exponent_str(g.horizon)},
                     {"margin", exponent_str(g.margin)}};
  json tower = json::array();
  for (const auto& lv : g.tower.levels()) {
    std::vector<TowerElement> mod = lv->modulus;
    std::string poly;
    for (std::size_t k = mod.size(); k-- > 0;) {
      if (mod[k].is_structurally_zero()) continue;
      std::string c = mod[k].str();
      std::string mono = k == 0 ? "" : (k == 1 ? lv->name : lv->name + "^" + std::to_string(k));
      std::string term = mono.empty() ? "(" + c + ")" : (mod[k].is_structurally_one() ? mono : "(" + c + ")*" + mono);
      poly += (poly.empty() ? "" : " + ") + term;
    }
    tower.push_back({{"name", lv->name}, {"modulus", poly}, {"approx", complex_str(lv->approx_root)}});
  }
  r["field"] = {{"description", g.tower.describe()}, {"generators", tower}};
  r["m"] = g.m;

  json lines = json::array();
  for (std::size_t k = 0; k < g.lines.size(); ++k)
    lines.push_back({{"name", line_name(static_cast<int>(k))},
                     {"slope", element_json(g.lines[k].slope)},
                     {"multiplicity", g.lines[k].multiplicity}});
  r["tangent_cone"] = lines;

  json roots = json::array();
  for (std::size_t i = 0; i < g.roots.size(); ++i) {
    const auto& a = g.roots[i];
    roots.push_back({{"index", i},
                     {"series", a.series.str(opt.max_terms)},
                     {"multiplicity", a.multiplicity},
                     {"ramification", a.ramification},
                     {"branch", a.branch},
                     {"line", line_name(a.line)}});
  }
  r["roots"] = roots;
  if (g.tree.root() >= 0) r["kuo_lu_tree"] = tree_json(g.tree, g.tree.root());

  json polars = json::array();
  for (std::size_t i = 0; i < g.polars.size(); ++i) {
    const auto& p = g.polars[i];
    json a{{"index", i},
           {"series", p.series.str(opt.max_terms)},
           {"on_zero_locus", p.on_zero_locus},
           {"delta", ext_str(p.delta)},
           {"h", ext_str(p.h)},
           {"q", ext_str(p.h)},
           {"line", line_name(p.line)},
           {"bar", bar_name(p.bar)},
           {"multiplicity", p.multiplicity},
           {"ramification", p.ramification},
           {"m_j", p.multiplicity * p.ramification},
           {"branch", p.branch},
           {"ord_fy", ext_str(p.ord_fy)},
           {"gradient_degree", ext_str(p.d_gr)}};
    a["a_h"] = p.a_h ? element_json(*p.a_h) : json(nullptr);
    polars.push_back(a);
  }
  r["polar_arcs"] = polars;

  json q = json::array();
  for (const auto& [h, mult] : g.quotients) q.push_back({{"q", exponent_str(h)}, {"multiplicity", mult}});
  r["polar_quotients"] = q;
  r["non_isolated"] = g.non_isolated;
  r["milnor"] = ext_str(g.milnor);
  r["milnor_finite_part"] = exponent_str(g.milnor_finite_part);
  r["l0"] = opt_exp(g.l0);
  r["rho0"] = opt_exp(g.rho0);
  if (g.non_isolated)
    r["notes"] = json::array({"polar arcs on the zero locus of a repeated factor are excluded from Q(f); mu is infinite"});

  json per_line = json::array();
  for (std::size_t k = 0; k < g.per_line.size(); ++k) {
    const auto& L = g.per_line[k];
    json qs = json::array();
    for (const auto& e : L.q) qs.push_back(exponent_str(e));
    json partial = json::array();
    for (const auto& [d, rho] : L.partial) partial.push_back({{"delta", exponent_str(d)}, {"rho", exponent_str(rho)}});
    per_line.push_back({{"line", line_name(static_cast<int>(k))},
                        {"q", qs},
                        {"rho0", opt_exp(L.rho0)},
                        {"milnor", exponent_str(L.milnor)},
                        {"partial", partial}});
  }
  r["per_line"] = per_line;

  json clusters = json::array();
  for (const auto& c : g.clusters)
    clusters.push_back({{"key", cluster_key_str(g, c)},
                        {"line", line_name(c.line)},
                        {"delta", exponent_str(c.delta)},
                        {"h", exponent_str(c.h)},
                        {"bar", bar_name(c.bar)},
                        {"members", c.members}});
  r["polar_clusters"] = clusters;
  r["nontangential"] = {{"members", g.nontangential}, {"count", nontangential_count(g)}};

  json canyons = json::array();
  for (std::size_t i = 0; i < g.canyons.size(); ++i) {
    const auto& c = g.canyons[i];
    json j{{"index", i},
           {"generator", c.generator},
           {"representative", c.representative.str(opt.max_terms)},
           {"degree", ext_str(c.degree)},
           {"h", ext_str(c.h)},
           {"line", line_name(c.line)},
           {"bar", bar_name(c.bar)},
           {"members", c.members}};
    j["a_h"] = c.a_h ? element_json(*c.a_h) : json(nullptr);
    canyons.push_back(j);
  }
  r["canyons"] = canyons;

  json cc = json::array();
  for (const auto& c : g.canyon_clusters) {
    json omega = json::array();
    for (const auto& w : c.omega) {
      json ws = json::array();
      for (const auto& e : w) ws.push_back(exponent_str(e));
      omega.push_back(ws);
    }
    cc.push_back({{"line", line_name(c.line)},
                  {"degree", exponent_str(c.degree)},
                  {"bar", bar_name(c.bar)},
                  {"canyons", c.canyons},
                  {"omega", omega},
                  {"omega_classes", c.omega_classes}});
  }
  r["canyon_clusters"] = cc;

  json hp = json::array();
  for (const auto& p : hp_invariants(g))
    hp.push_back({{"degree", ext_str(p.degree)}, {"h", ext_str(p.h)}, {"a_h", p.a_h ? element_json(*p.a_h) : json(nullptr)}});
  r["hp_pairs"] = hp;

  r["topo_signature"] = topo_signature(g).str();
  r["lipschitz_signature"] = lipschitz_signature(g).str();

  json checks = json::array();
  for (const auto& c : g.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  r["verification"] = {{"all_passed", g.all_checks_passed()}, {"checks", checks}};
  return r;
}

std::string report_structured(const GermAnalysis& g, const ReportOptions& opt) {
  return report_json(g, opt).dump(2) + "\n";
}

std::string report_text(const GermAnalysis& g, const ReportOptions& opt) {
  std::ostringstream o;
  o << "input: " << g.input.str() << "\n";
  o << "shear: y -> y + " << g.shear << "*x\n";
  o << "germ: " << g.f.str() << "\n";
  o << "field: " << g.tower.describe() << "\n";
  o << "truncation: T = " << exponent_str(g.precision) << ", horizon " << exponent_str(g.horizon) << ", margin "
    << exponent_str(g.margin) << "\n";
  o << "m = " << g.m << "\n";
  o << "tangent cone:\n";
  for (std::size_t k = 0; k < g.lines.size(); ++k)
    o << "  L" << k << ": x = (" << g.lines[k].slope.str() << ")*y  mult " << g.lines[k].multiplicity << "  ~ "
      << complex_str(g.lines[k].slope.approx()) << "\n";
  o << "roots:\n";
  for (std::size_t i = 0; i < g.roots.size(); ++i) {
    const auto& a = g.roots[i];
    o << "  z" << i << ": " << a.series.str(opt.max_terms) << "  mult " << a.multiplicity << " N " << a.ramification
      << " " << line_name(a.line) << "\n";
  }
  o << "kuo-lu tree:\n" << tree_ascii(g);
  o << "polar arcs:\n";
  for (std::size_t i = 0; i < g.polars.size(); ++i) {
    const auto& p = g.polars[i];
    o << "  g" << i << ": " << p.series.str(opt.max_terms) << "\n";
    o << "      delta " << p.delta.str() << "  h " << p.h.str() << "  " << line_name(p.line) << "  " << bar_name(p.bar)
      << "  m_j " << p.multiplicity * p.ramification << "  d_gr " << p.d_gr.str();
    if (p.a_h) o << "  a_h " << p.a_h->str();
    if (p.on_zero_locus) o << "  [zero locus]";
    o << "\n";
  }
  o << "Q(f):";
  for (const auto& [h, mult] : g.quotients) o << " " << exponent_str(h) << (mult > 1 ? "(x" + std::to_string(mult) + ")" : "");
  o << "\n";
  o << "mu = " << g.milnor.str();
  if (g.non_isolated) o << "  (non-isolated; finite part " << exponent_str(g.milnor_finite_part) << ")";
  o << "\n";
  o << "l0 = " << opt_exp(g.l0) << "\nrho0 = " << opt_exp(g.rho0) << "\n";
  for (std::size_t k = 0; k < g.per_line.size(); ++k) {
    const auto& L = g.per_line[k];
    o << "line L" << k << ": Q_k {";
    bool first = true;
    for (const auto& e : L.q) o << (first ? "" : ", ") << exponent_str(e), first = false;
    o << "}  rho0_k " << opt_exp(L.rho0) << "  mu_k " << exponent_str(L.milnor) << "\n";
    for (const auto& [d, rho] : L.partial) o << "    rho(delta=" << exponent_str(d) << ") = " << exponent_str(rho) << "\n";
  }
  o << "polar clusters:\n";
  for (const auto& c : g.clusters) {
    o << "  " << cluster_key_str(g, c) << ":";
    for (auto i : c.members) o << " g" << i;
    o << "\n";
  }
  o << "  non-tangential (" << nontangential_count(g) << "):";
  for (auto i : g.nontangential) o << " g" << i;
  o << "\n";
  o << "canyons:\n";
  for (std::size_t i = 0; i < g.canyons.size(); ++i) {
    const auto& c = g.canyons[i];
    o << "  c" << i << ": d " << c.degree.str() << "  h " << c.h.str() << "  " << line_name(c.line) << "  "
      << bar_name(c.bar) << "  a_h " << (c.a_h ? c.a_h->str() : std::string("-")) << "  members";
    for (auto m : c.members) o << " g" << m;
    o << "\n";
  }
  o << "canyon clusters:\n";
  for (const auto& c : g.canyon_clusters) {
    o << "  (" << line_name(c.line) << ", " << exponent_str(c.degree) << ", " << bar_name(c.bar) << "):";
    for (std::size_t k = 0; k < c.canyons.size(); ++k) {
      o << " c" << c.canyons[k] << "{";
      for (std::size_t t = 0; t < c.omega[k].size(); ++t) o << (t ? "," : "") << exponent_str(c.omega[k][t]);
      o << "}";
    }
    o << "\n";
  }
  o << "checks:\n";
  for (const auto& c : g.checks)
    o << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  return o.str();
}

std::string tree_dot(const GermAnalysis& g) {
  std::ostringstream o;
  o << "digraph kuolu {\n  node [fontname=\"monospace\"];\n";
  const auto& t = g.tree;
  for (const auto& b : t.bars()) {
    o << "  B" << b.id << " [shape=box,label=\"B" << b.id << " h=" << exponent_str(b.height) << "\"];\n";
    if (b.parent >= 0) o << "  B" << b.parent << " -> B" << b.id << ";\n";
    for (auto leaf : b.child_leaves) {
      o << "  z" << leaf << " [shape=point,xlabel=\"z" << leaf << "\"];\n";
      o << "  B" << b.id << " -> z" << leaf << ";\n";
    }
  }
  for (std::size_t i = 0; i < g.polars.size(); ++i) {
    const auto& p = g.polars[i];
    if (p.bar < 0) continue;
    o << "  g" << i << " [shape=diamond,label=\"g" << i << " (" << p.delta.str() << "," << p.h.str() << ")\"];\n";
    o << "  B" << p.bar << " -> g" << i << " [style=dashed];\n";
  }
  o << "}\n";
  return o.str();
}

namespace {

void ascii_rec(const GermAnalysis& g, int bar, const std::string& indent, std::ostringstream& o) {
  const auto& t = g.tree;
  const Bar& b = t.bar(bar);
  o << indent << "B" << b.id << " h=" << exponent_str(b.height);
  bool first = true;
  for (std::size_t i = 0; i < g.polars.size(); ++i)
    if (g.polars[i].bar == bar) {
      o << (first ? "  polars:" : "") << " g" << i << "(" << g.polars[i].delta.str() << "," << g.polars[i].h.str()
        << ")";
      first = false;
    }
  o << "\n";
  for (int c : b.child_bars) ascii_rec(g, c, indent + "  ", o);
  for (auto leaf : b.child_leaves) o << indent << "  z" << leaf << "\n";
}

}  // namespace

std::string tree_ascii(const GermAnalysis& g) {
  std::ostringstream o;
  if (g.tree.root() < 0) {
    o << "  (no bars)\n";
    for (std::size_t i = 0; i < g.tree.leaf_count(); ++i) o << "  z" << i << "\n";
    return o.str();
  }
  ascii_rec(g, g.tree.root(), "  ", o);
  return o.str();
}

Exponent shear_parameter(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 9), den(1, 4), sign(0, 1);
  int p = num(rng), q = den(rng);
  return Exponent(sign(rng) ? -p : p, q);
}

ShearVerification verify_by_shear(const BivarPoly& f, std::uint64_t seed, const AnalysisOptions& options) {
  ShearVerification v;
  v.lambda = shear_parameter(seed);
  v.original = analyze(f, options);
  AnalysisOptions o2 = options;
  o2.base_tower = nullptr;
  o2.context = nullptr;
  o2.shear.reset();
  GaussianRational lam(mpq_class(mpz_class(v.lambda.numerator()), mpz_class(v.lambda.denominator())));
  v.sheared = analyze(shear(f, lam), o2);
  v.topo_equal = topo_signature(v.original) == topo_signature(v.sheared);
  v.lipschitz_equal = lipschitz_signature(v.original) == lipschitz_signature(v.sheared);
  return v;
}

}  // namespace polarclust

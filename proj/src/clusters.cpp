#include "polarclust/clusters.hpp"

#include <algorithm>
#include <tuple>

namespace polarclust {

namespace {

std::string set_str(const std::set<Exponent>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : s) {
    out += (first ? "" : ", ") + exponent_str(e);
    first = false;
  }
  return out + "}";
}

std::string key_code(const GermAnalysis& g, const PolarCluster& c) {
  return "(" + exponent_str(c.delta) + "," + exponent_str(c.h) + "," + (c.bar >= 0 ? g.tree.bar_code(c.bar) : "-") + ")";
}

std::vector<std::set<std::string>> line_keys(const GermAnalysis& g) {
  std::vector<std::set<std::string>> keys(g.lines.size());
  for (const auto& c : g.clusters) keys[static_cast<std::size_t>(c.line)].insert(key_code(g, c));
  return keys;
}

}  // namespace

std::vector<PolarCluster> cluster_partition(const GermAnalysis& g) {
  using Key = std::tuple<int, Exponent, Exponent, int>;
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < g.polars.size(); ++k) {
    const auto& p = g.polars[k];
    if (!p.tangential()) continue;
    groups[{p.line, p.delta.value(), p.h.value(), p.bar}].push_back(k);
  }
  std::vector<PolarCluster> out;
  for (auto& [key, members] : groups)
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), std::move(members)});
  return out;
}

std::map<Exponent, std::vector<std::size_t>> clusters_by_delta(const GermAnalysis& g, int line) {
  std::map<Exponent, std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < g.polars.size(); ++k) {
    const auto& p = g.polars[k];
    if (p.tangential() && (line < 0 || p.line == line)) out[p.delta.value()].push_back(k);
  }
  return out;
}

std::map<Exponent, std::vector<std::size_t>> clusters_by_h(const GermAnalysis& g, int line) {
  std::map<Exponent, std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < g.polars.size(); ++k) {
    const auto& p = g.polars[k];
    if (p.tangential() && (line < 0 || p.line == line)) out[p.h.value()].push_back(k);
  }
  return out;
}

std::int64_t nontangential_count(const GermAnalysis& g) {
  std::int64_t n = 0;
  for (const auto& p : g.polars)
    if (!p.on_zero_locus && p.line < 0) n += p.multiplicity;
  return n;
}

Exponent partial_rho(const GermAnalysis& g, int line, const Exponent& delta) {
  std::optional<Exponent> hmax;
  for (const auto& p : g.polars)
    if (p.tangential() && p.line == line && p.delta == ExtRational(delta))
      hmax = hmax ? std::max(*hmax, p.h.value()) : p.h.value();
  if (!hmax) throw EmptyCluster("no polar arc with this tangent line and delta");
  return (*hmax - Exponent(1)) / *hmax;
}

std::string cluster_key_str(const GermAnalysis& /*g*/, const PolarCluster& c) {
  return "(L" + std::to_string(c.line) + ", " + exponent_str(c.delta) + ", " + exponent_str(c.h) + ", B" +
         std::to_string(c.bar) + ")";
}

std::string TopoSignature::str() const {
  std::string s = "m=" + std::to_string(m) + ";Q=" + set_str(q) + ";PC1m=" + std::to_string(nontangential) + ";tree=" + tree +
                  ";lines=[";
  for (std::size_t k = 0; k < lines.size(); ++k) s += (k ? ";" : "") + lines[k];
  return s + "]";
}

TopoSignature topo_signature(const GermAnalysis& g) {
  TopoSignature s;
  s.m = g.m;
  for (const auto& [q, mult] : g.quotients) s.q.insert(q);
  s.nontangential = nontangential_count(g);
  s.tree = g.tree.canonical_encoding();
  auto keys = line_keys(g);
  for (std::size_t k = 0; k < g.lines.size(); ++k) {
    std::string d = "r=" + std::to_string(g.lines[k].multiplicity) + "{";
    bool first = true;
    for (const auto& key : keys[k]) {
      d += (first ? "" : ";") + key;
      first = false;
    }
    s.lines.push_back(d + "}");
  }
  std::sort(s.lines.begin(), s.lines.end());
  return s;
}

Verdict compare_topo(const GermAnalysis& f, const GermAnalysis& g) {
  Verdict v;
  auto distinct = [&](std::string w) {
    v.compatible = false;
    v.witness = std::move(w);
    return v;
  };
  TopoSignature sf = topo_signature(f), sg = topo_signature(g);
  if (sf.m != sg.m) return distinct("multiplicity m differs: " + std::to_string(sf.m) + " vs " + std::to_string(sg.m));
  if (sf.q != sg.q) return distinct("Q(f) = " + set_str(sf.q) + " vs Q(g) = " + set_str(sg.q));
  if (sf.nontangential != sg.nontangential)
    return distinct("|PC_{1,m}| differs: " + std::to_string(sf.nontangential) + " vs " + std::to_string(sg.nontangential));
  if (sf.tree != sg.tree) return distinct("Kuo-Lu trees are not isomorphic: " + sf.tree + " vs " + sg.tree);

  // Line descriptors are complete, so a compatible line bijection exists iff
  // the sorted descriptor lists agree.
  if (sf.lines != sg.lines) {
    auto kf = line_keys(f), kg = line_keys(g);
    auto report_missing = [&](const GermAnalysis& a, const std::vector<std::set<std::string>>& ka,
                              const GermAnalysis& b, const std::vector<std::set<std::string>>& kb,
                              const char* na, const char* nb) -> std::optional<std::string> {
      for (std::size_t i = 0; i < ka.size(); ++i) {
        for (const auto& key : ka[i]) {
          bool somewhere = false;
          for (std::size_t j = 0; j < kb.size(); ++j)
            if (b.lines[j].multiplicity == a.lines[i].multiplicity && kb[j].count(key)) somewhere = true;
          if (!somewhere)
            return "key " + key + " occupied in " + na + ", absent in " + nb + " under every line matching";
        }
      }
      return std::nullopt;
    };
    if (auto w = report_missing(f, kf, g, kg, "f", "g")) return distinct(*w);
    if (auto w = report_missing(g, kg, f, kf, "g", "f")) return distinct(*w);
    return distinct("no bijection of tangent lines matches multiplicities and occupied keys");
  }
  v.notes.push_back("necessary conditions of topological equivalence hold");
  return v;
}

}  // namespace polarclust

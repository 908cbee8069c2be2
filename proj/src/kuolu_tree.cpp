#include "polarclust/kuolu_tree.hpp"

#include <algorithm>

namespace polarclust {

KuoLuTree KuoLuTree::build(std::vector<TreeLeafInfo> leaves,
                           const std::function<Exponent(std::size_t, std::size_t)>& contact) {
  KuoLuTree t;
  t.leaves_ = std::move(leaves);
  t.leaf_parent_.assign(t.leaves_.size(), -1);
  if (t.leaves_.size() < 2) return t;
  std::vector<std::size_t> all(t.leaves_.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  t.build_rec(all, -1, contact);
  return t;
}

int KuoLuTree::build_rec(const std::vector<std::size_t>& members, int parent,
                         const std::function<Exponent(std::size_t, std::size_t)>& contact) {
  Exponent h = contact(members[0], members[1]);
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) h = std::min(h, contact(members[a], members[b]));

  const int id = static_cast<int>(bars_.size());
  bars_.push_back({});
  bars_.back().id = id;
  bars_.back().height = h;
  bars_.back().parent = parent;
  bars_.back().leaves_below = members;
  std::sort(bars_.back().leaves_below.begin(), bars_.back().leaves_below.end());

  // Groups: classes of the relation contact > h.
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t m : members) {
    bool placed = false;
    for (auto& g : groups) {
      if (contact(g.front(), m) > h) {
        g.push_back(m);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({m});
  }
  for (const auto& g : groups) {
    if (g.size() == 1) {
      bars_[static_cast<std::size_t>(id)].child_leaves.push_back(g.front());
      leaf_parent_[g.front()] = id;
    } else {
      int child = build_rec(g, id, contact);
      bars_[static_cast<std::size_t>(id)].child_bars.push_back(child);
    }
  }
  return id;
}

std::vector<int> KuoLuTree::path_to(int bar) const {
  std::vector<int> path;
  for (int b = bar; b >= 0; b = bars_[static_cast<std::size_t>(b)].parent) path.push_back(b);
  std::reverse(path.begin(), path.end());
  return path;
}

int KuoLuTree::lowest_common_bar(std::size_t a, std::size_t b) const {
  if (a == b) return -1;
  auto pa = path_to(leaf_parent_.at(a));
  auto pb = path_to(leaf_parent_.at(b));
  int common = -1;
  for (std::size_t k = 0; k < std::min(pa.size(), pb.size()) && pa[k] == pb[k]; ++k) common = pa[k];
  return common;
}

int KuoLuTree::bar_of(const std::vector<std::size_t>& max_leaves, const Exponent& delta) const {
  if (bars_.empty() || max_leaves.empty()) throw NoSuchBar("tree has no bars");
  auto contains_all = [&](const Bar& b) {
    return std::all_of(max_leaves.begin(), max_leaves.end(), [&](std::size_t l) {
      return std::binary_search(b.leaves_below.begin(), b.leaves_below.end(), l);
    });
  };
  int cur = 0;
  for (;;) {
    const Bar& b = bars_[static_cast<std::size_t>(cur)];
    if (!contains_all(b)) break;
    if (b.height == delta) return cur;
    if (delta < b.height) break;
    int next = -1;
    for (int c : b.child_bars)
      if (contains_all(bars_[static_cast<std::size_t>(c)])) next = c;
    if (next < 0) break;
    cur = next;
  }
  throw NoSuchBar("no bar of height " + exponent_str(delta) + " carries the arc");
}

std::string KuoLuTree::subtree_encoding(int bar, const std::map<int, std::string>& decorations) const {
  const Bar& b = bars_.at(static_cast<std::size_t>(bar));
  std::vector<std::string> parts;
  for (std::size_t l : b.child_leaves) {
    const auto& info = leaves_[l];
    parts.push_back("L(N=" + std::to_string(info.ramification) + ",m=" + std::to_string(info.multiplicity) + ")");
  }
  for (int c : b.child_bars) parts.push_back(subtree_encoding(c, decorations));
  std::sort(parts.begin(), parts.end());
  std::string s = "B(" + exponent_str(b.height);
  auto it = decorations.find(bar);
  if (it != decorations.end() && !it->second.empty()) s += "|" + it->second;
  s += ":";
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + parts[k];
  return s + ")";
}

std::string KuoLuTree::canonical_encoding(const std::map<int, std::string>& decorations) const {
  if (bars_.empty()) {
    if (leaves_.empty()) return "()";
    const auto& info = leaves_.front();
    return "L(N=" + std::to_string(info.ramification) + ",m=" + std::to_string(info.multiplicity) + ")";
  }
  return subtree_encoding(0, decorations);
}

std::string KuoLuTree::bar_code(int bar) const {
  std::string chain;
  for (int b : path_to(bar)) chain += (chain.empty() ? "" : "/") + exponent_str(bars_[static_cast<std::size_t>(b)].height);
  return chain + "#" + subtree_encoding(bar);
}

}  // namespace polarclust

#pragma once

// Contact dendrogram (Kuo-Lu tree) of the Puiseux roots of a germ.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarclust/puiseux.hpp"

namespace polarclust {

class NoSuchBar : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bar {
  int id = 0;
  Exponent height;
  int parent = -1;
  std::vector<int> child_bars;
  std::vector<std::size_t> child_leaves;   // leaves attached directly to this bar
  std::vector<std::size_t> leaves_below;   // sorted
};

struct TreeLeafInfo {
  int multiplicity = 1;
  std::int64_t ramification = 1;
};

class KuoLuTree {
 public:
  KuoLuTree() = default;

  /// contact(a, b) must be finite for a != b and ultrametric.
  static KuoLuTree build(std::vector<TreeLeafInfo> leaves,
                         const std::function<Exponent(std::size_t, std::size_t)>& contact);

  const std::vector<Bar>& bars() const { return bars_; }
  const Bar& bar(int id) const { return bars_.at(static_cast<std::size_t>(id)); }
  int root() const { return bars_.empty() ? -1 : 0; }
  std::size_t leaf_count() const { return leaves_.size(); }
  const std::vector<TreeLeafInfo>& leaves() const { return leaves_; }

  /// Lowest bar containing both leaves (-1 if a == b).
  int lowest_common_bar(std::size_t a, std::size_t b) const;

  /// The bar of height delta containing every leaf in `max_leaves`.
  int bar_of(const std::vector<std::size_t>& max_leaves, const Exponent& delta) const;

  /// Canonical text of the (sub)tree; children sorted, so isomorphic
  /// decorated trees give equal strings.
  std::string canonical_encoding(const std::map<int, std::string>& decorations = {}) const;
  std::string subtree_encoding(int bar, const std::map<int, std::string>& decorations = {}) const;

  /// Transportable bar name: subtree encoding plus the heights on the path
  /// from the root.
  std::string bar_code(int bar) const;

  /// Bars from the root down to `bar`.
  std::vector<int> path_to(int bar) const;

 private:
  int build_rec(const std::vector<std::size_t>& members, int parent,
                const std::function<Exponent(std::size_t, std::size_t)>& contact);

  std::vector<Bar> bars_;
  std::vector<TreeLeafInfo> leaves_;
  std::vector<int> leaf_parent_;
};

}  // namespace polarclust

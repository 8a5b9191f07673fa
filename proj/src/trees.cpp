#include "conc2/trees.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace conc2 {

namespace {

void require_c2_bar(const NumericalSemigroup& s) {
  if (s.concentration() > 2) throw ConcentrationTooHighError(s.concentration());
}

}  // namespace

std::vector<TreeNode> children_multiplicity_tree(const NumericalSemigroup& s,
                                                 int parent_depth) {
  require_c2_bar(s);
  std::vector<TreeNode> out;
  for (int x : s.minimal_generators()) {
    if (x >= s.frobenius() + 2) {
      out.push_back({s.remove_element(x), x, parent_depth + 1, std::nullopt});
    }
  }
  return out;
}

std::vector<TreeNode> children_elementary_tree(const NumericalSemigroup& s,
                                               int parent_depth) {
  if (!s.is_elementary()) throw NotElementaryError();
  require_c2_bar(s);
  const int hi = 2 * s.multiplicity() - 1;
  std::vector<TreeNode> out;
  for (int x : s.minimal_generators()) {
    if (x >= s.frobenius() + 2 && x <= hi) {
      out.push_back({s.remove_element(x), x, parent_depth + 1, std::nullopt});
    }
  }
  return out;
}

std::vector<NumericalSemigroup> enumerate_by_genus(int m, int g) {
  if (m < 2 || g < m - 1) {
    throw InvalidGenusRangeError("need 1 <= m-1 <= g, got m=" +
                                 std::to_string(m) + " g=" + std::to_string(g));
  }
  std::vector<NumericalSemigroup> level{NumericalSemigroup::ordinary(m)};
  for (int i = m - 1; i < g; ++i) {
    std::vector<NumericalSemigroup> next;
    for (const auto& s : level) {
      for (auto& child : children_multiplicity_tree(s)) {
        next.push_back(std::move(child.semigroup));
      }
    }
    if (next.empty()) return {};
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<TreeNode> walk_tree(const EnumerationRequest& request) {
  const int m = request.multiplicity;
  if (m < 2) throw SemigroupError("multiplicity must be >= 2");
  const bool elementary = request.mode == EnumerationMode::elementary_tree;
  if (!elementary && m % 2 == 0 && !request.max_genus) {
    throw EvenMultiplicityInfiniteError(m);
  }

  // processing in index order while appending children at the tail is a
  // breadth-first walk; parent indices always precede their children
  std::vector<TreeNode> out;
  out.push_back({NumericalSemigroup::ordinary(m), std::nullopt, 0, std::nullopt});
  for (std::size_t i = 0; i < out.size(); ++i) {
    // copy: out may reallocate while we append children
    const TreeNode node = out[i];
    if (request.max_genus && node.semigroup.genus() >= *request.max_genus) {
      continue;
    }
    auto kids = elementary ? children_elementary_tree(node.semigroup, node.depth)
                           : children_multiplicity_tree(node.semigroup, node.depth);
    for (auto& child : kids) {
      child.parent = i;
      out.push_back(std::move(child));
    }
  }
  return out;
}

namespace {

struct SubtreeStats {
  long long nodes = 0;
  int height = 0;
};

SubtreeStats explore_subtree(const NumericalSemigroup& root, int depth,
                             TreeVariant variant,
                             std::optional<int> max_genus) {
  SubtreeStats stats;
  std::vector<std::pair<NumericalSemigroup, int>> stack{{root, depth}};
  while (!stack.empty()) {
    auto [s, d] = std::move(stack.back());
    stack.pop_back();
    ++stats.nodes;
    stats.height = std::max(stats.height, d);
    if (max_genus && s.genus() >= *max_genus) continue;
    auto kids = variant == TreeVariant::elementary
                    ? children_elementary_tree(s, d)
                    : children_multiplicity_tree(s, d);
    for (auto& child : kids) {
      stack.emplace_back(std::move(child.semigroup), child.depth);
    }
  }
  return stats;
}

SubtreeStats explore_tree(int m, TreeVariant variant, int threads) {
  const NumericalSemigroup root = NumericalSemigroup::ordinary(m);
  auto top = variant == TreeVariant::elementary
                 ? children_elementary_tree(root, 0)
                 : children_multiplicity_tree(root, 0);
  SubtreeStats total;
  total.nodes = 1;
  if (threads <= 1 || top.size() <= 1) {
    for (const auto& child : top) {
      SubtreeStats sub = explore_subtree(child.semigroup, 1, variant, std::nullopt);
      total.nodes += sub.nodes;
      total.height = std::max(total.height, sub.height);
    }
    return total;
  }
  std::vector<std::future<SubtreeStats>> jobs;
  for (const auto& child : top) {
    jobs.push_back(std::async(std::launch::async, explore_subtree,
                              child.semigroup, 1, variant,
                              std::optional<int>{}));
  }
  for (auto& job : jobs) {
    SubtreeStats sub = job.get();
    total.nodes += sub.nodes;
    total.height = std::max(total.height, sub.height);
  }
  return total;
}

}  // namespace

long long count_c2(int m, int threads) {
  if (m < 2) throw SemigroupError("multiplicity must be >= 2");
  if (m % 2 == 0) throw EvenMultiplicityInfiniteError(m);
  return explore_tree(m, TreeVariant::multiplicity, threads).nodes - 1;
}

int tree_height(int m, TreeVariant variant, int threads) {
  if (m < 2) throw SemigroupError("multiplicity must be >= 2");
  if (variant == TreeVariant::multiplicity && m % 2 == 0) {
    throw EvenMultiplicityInfiniteError(m);
  }
  return explore_tree(m, variant, threads).height;
}

}  // namespace conc2

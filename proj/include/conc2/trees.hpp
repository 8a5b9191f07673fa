// Rooted enumeration trees over concentration-<=2 semigroups of fixed
// multiplicity: the full tree, its elementary subtree, genus level sets,
// node counts and heights.
//
// Both trees are rooted at the half-line {0, m, ->}; a child is obtained
// by deleting one admissible minimal generator, which becomes the child's
// Frobenius number.  The full tree is finite iff m is odd.

#ifndef CONC2_TREES_HPP_
#define CONC2_TREES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "conc2/semigroup.hpp"

namespace conc2 {

struct ConcentrationTooHighError : SemigroupError {
  explicit ConcentrationTooHighError(int c)
      : SemigroupError("concentration " + std::to_string(c) + " exceeds 2") {}
};

struct NotElementaryError : SemigroupError {
  NotElementaryError() : SemigroupError("semigroup is not elementary") {}
};

struct InvalidGenusRangeError : SemigroupError {
  using SemigroupError::SemigroupError;
};

struct EvenMultiplicityInfiniteError : SemigroupError {
  explicit EvenMultiplicityInfiniteError(int m)
      : SemigroupError("the family for even multiplicity " + std::to_string(m) +
                       " is infinite; a genus bound is required") {}
};

struct UnboundedEnumerationError : SemigroupError {
  using SemigroupError::SemigroupError;
};

struct TreeNode {
  NumericalSemigroup semigroup;
  std::optional<int> removed;  // edge label; equals this node's Frobenius number
  int depth = 0;
  std::optional<std::size_t> parent;  // index into the emitting walk
};

enum class TreeVariant { multiplicity, elementary };

enum class EnumerationMode {
  multiplicity_tree,
  elementary_tree,
  genus_level,
  frobenius_set,
  count,
  height,
};

struct EnumerationRequest {
  EnumerationMode mode = EnumerationMode::multiplicity_tree;
  int multiplicity = 0;
  std::optional<int> genus;      // genus_level only
  std::optional<int> max_genus;  // required for even m in unbounded modes
  std::optional<int> frobenius;  // frobenius_set only
};

// Sons {S \ {x} | x in msg(S), x >= F(S)+2}, ascending in x.
std::vector<TreeNode> children_multiplicity_tree(const NumericalSemigroup& s,
                                                 int parent_depth = 0);

// Sons {S \ {x} | x in msg(S), F(S)+2 <= x <= 2m-1}, ascending in x.
std::vector<TreeNode> children_elementary_tree(const NumericalSemigroup& s,
                                               int parent_depth = 0);

// Level set of the full tree: all S with C(S) <= 2, m(S) = m, g(S) = g.
// Canonically sorted.
std::vector<NumericalSemigroup> enumerate_by_genus(int m, int g);

// Breadth-first walk of the requested tree, parents before children,
// children ascending by removed element.
std::vector<TreeNode> walk_tree(const EnumerationRequest& request);

// |C2[m]| for odd m (tree size minus the root).
long long count_c2(int m, int threads = 1);

// Height of the full (odd m) or elementary (any m >= 2) tree.
int tree_height(int m, TreeVariant variant, int threads = 1);

}  // namespace conc2

#endif  // CONC2_TREES_HPP_

// Irreducibility, the ascent map V(S), and the class trees partitioning
// the concentration-2 semigroups with a fixed Frobenius number.
//
// A semigroup with Frobenius number F is irreducible exactly when the set
// {x gap | F-x also a gap, x != F/2} is empty; alpha(S) is the maximum of
// that set otherwise, and adjoining it preserves F and concentration 2.

#ifndef CONC2_FROBENIUS_HPP_
#define CONC2_FROBENIUS_HPP_

#include <vector>

#include "conc2/semigroup.hpp"
#include "conc2/trees.hpp"

namespace conc2 {

struct IrreducibleError : SemigroupError {
  IrreducibleError() : SemigroupError("semigroup is irreducible; alpha is undefined") {}
};

struct NotIrreducibleError : SemigroupError {
  NotIrreducibleError() : SemigroupError("class root must be irreducible") {}
};

struct ConcentrationNotTwoError : SemigroupError {
  explicit ConcentrationNotTwoError(int c)
      : SemigroupError("expected concentration 2, got " + std::to_string(c)) {}
};

struct FrobeniusClass {
  NumericalSemigroup root;                  // irreducible representative
  std::vector<NumericalSemigroup> members;  // canonically sorted, includes root
};

bool is_irreducible(const NumericalSemigroup& s);

// max{x gap | F-x gap, x != F/2}; throws IrreducibleError when empty.
int alpha(const NumericalSemigroup& s);

// Repeatedly adjoin alpha until irreducible; preserves F and concentration 2.
NumericalSemigroup ascend(const NumericalSemigroup& s);

// All irreducible semigroups with Frobenius number exactly F, canonically
// sorted.  Works by choosing membership on the open upper half (F/2, F);
// the lower half is forced by the complement symmetry x in S <=> F-x not in S.
std::vector<NumericalSemigroup> irreducibles_with_frobenius(int frob);

// The concentration-2 members of the above.
std::vector<NumericalSemigroup> irreducible_c2(int frob);

// Sons of T in its class tree: T \ {x} for x in msg(T) with F/2 < x < F,
// alpha(T) < x (vacuous at the root), and ({x-1, x+1} in T or x = m(T)).
// Each child is re-validated to lie in C2(F) with alpha(child) = x.
std::vector<NumericalSemigroup> class_children(const NumericalSemigroup& t,
                                               bool is_root);

// Exhaustive walk of the class tree rooted at an irreducible semigroup.
FrobeniusClass class_members(const NumericalSemigroup& root);

// Class-tree nodes in breadth-first order with parent links (for DOT export).
std::vector<TreeNode> walk_class_tree(const NumericalSemigroup& root);

// The full partition of C2(F): one class per element of irreducible_c2(F).
std::vector<FrobeniusClass> enumerate_c2_frobenius(int frob);

}  // namespace conc2

#endif  // CONC2_FROBENIUS_HPP_

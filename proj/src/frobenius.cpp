#include "conc2/frobenius.hpp"

#include <algorithm>
#include <cstdint>

namespace conc2 {

bool is_irreducible(const NumericalSemigroup& s) {
  if (s.gaps().empty()) throw NoFrobeniusError();
  const int f = s.frobenius();
  for (int x : s.gaps()) {
    if (2 * x != f && !s.contains(f - x)) return false;
  }
  return true;
}

int alpha(const NumericalSemigroup& s) {
  if (s.gaps().empty()) throw NoFrobeniusError();
  const int f = s.frobenius();
  const auto& gaps = s.gaps();
  for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) {
    if (2 * *it != f && !s.contains(f - *it)) return *it;
  }
  throw IrreducibleError();
}

NumericalSemigroup ascend(const NumericalSemigroup& s) {
  if (s.concentration() != 2) throw ConcentrationNotTwoError(s.concentration());
  NumericalSemigroup t = s;
  while (!is_irreducible(t)) {
    t = t.add_element(alpha(t));
  }
  return t;
}

std::vector<NumericalSemigroup> irreducibles_with_frobenius(int frob) {
  if (frob < 1) throw SemigroupError("Frobenius number must be >= 1");
  if (frob > 62) throw SemigroupError("Frobenius number too large for this search");

  const std::uint64_t full = (frob + 1 >= 64) ? ~0ULL
                                              : ((1ULL << (frob + 1)) - 1);
  std::vector<int> upper;  // free membership choices, all > F/2 and < F
  for (int x = frob / 2 + 1; x <= frob - 1; ++x) upper.push_back(x);

  std::vector<NumericalSemigroup> out;
  const std::uint64_t patterns = 1ULL << upper.size();
  for (std::uint64_t p = 0; p < patterns; ++p) {
    std::uint64_t members = 1;  // 0 is always a member
    for (std::size_t i = 0; i < upper.size(); ++i) {
      if (p >> i & 1) members |= 1ULL << upper[i];
    }
    // lower half forced by the symmetry x in S <=> F-x not in S
    for (int x = 1; 2 * x < frob; ++x) {
      if (!(members >> (frob - x) & 1)) members |= 1ULL << x;
    }
    // additive closure within [0, F]; sums beyond F are members anyway
    bool closed = true;
    for (int a = 1; a <= frob && closed; ++a) {
      if (!(members >> a & 1)) continue;
      if (((members << a) & full & ~members) != 0) closed = false;
    }
    if (!closed) continue;
    std::vector<int> gaps;
    for (int x = 1; x <= frob; ++x) {
      if (!(members >> x & 1)) gaps.push_back(x);
    }
    out.push_back(NumericalSemigroup::from_gaps(std::move(gaps)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NumericalSemigroup> irreducible_c2(int frob) {
  std::vector<NumericalSemigroup> out;
  for (auto& s : irreducibles_with_frobenius(frob)) {
    if (s.is_concentration_two()) out.push_back(std::move(s));
  }
  return out;
}

std::vector<NumericalSemigroup> class_children(const NumericalSemigroup& t,
                                               bool is_root) {
  if (t.concentration() != 2) throw ConcentrationNotTwoError(t.concentration());
  const int f = t.frobenius();
  const int floor_constraint = is_root ? -1 : alpha(t);
  std::vector<NumericalSemigroup> out;
  for (int x : t.minimal_generators()) {
    if (!(2 * x > f && x < f)) continue;
    if (x <= floor_constraint) continue;
    if (x != t.multiplicity() && !(t.contains(x - 1) && t.contains(x + 1))) {
      continue;
    }
    NumericalSemigroup child = t.remove_element(x);
    // deleting the multiplicity can collapse the child to a half-line,
    // which is not a class member; skip it
    if (child.concentration() != 2) continue;
    // within C2(F) the son conditions promise Frobenius F and
    // alpha(child) = x; verify rather than trust
    if (child.frobenius() != f || alpha(child) != x) {
      throw SemigroupError("class-tree son condition produced an invalid child " +
                           child.label() + " from " + t.label() + " removing " +
                           std::to_string(x));
    }
    out.push_back(std::move(child));
  }
  return out;
}

std::vector<TreeNode> walk_class_tree(const NumericalSemigroup& root) {
  if (!is_irreducible(root)) throw NotIrreducibleError();
  if (root.concentration() != 2) throw ConcentrationNotTwoError(root.concentration());
  std::vector<TreeNode> out;
  out.push_back({root, std::nullopt, 0, std::nullopt});
  for (std::size_t i = 0; i < out.size(); ++i) {
    const TreeNode node = out[i];
    for (auto& child : class_children(node.semigroup, i == 0)) {
      const int removed = alpha(child);  // validated equal to the deleted x
      out.push_back({std::move(child), removed, node.depth + 1, i});
    }
  }
  return out;
}

FrobeniusClass class_members(const NumericalSemigroup& root) {
  FrobeniusClass cls{root, {}};
  for (auto& node : walk_class_tree(root)) {
    cls.members.push_back(std::move(node.semigroup));
  }
  std::sort(cls.members.begin(), cls.members.end());
  return cls;
}

std::vector<FrobeniusClass> enumerate_c2_frobenius(int frob) {
  std::vector<FrobeniusClass> out;
  for (const auto& root : irreducible_c2(frob)) {
    out.push_back(class_members(root));
  }
  return out;
}

}  // namespace conc2

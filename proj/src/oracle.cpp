#include "conc2/oracle.hpp"

#include <algorithm>

namespace conc2 {

long long OracleUniverse::count_with_genus(int g) const {
  return std::count_if(semigroups.begin(), semigroups.end(),
                       [g](const NumericalSemigroup& s) { return s.genus() == g; });
}

OracleUniverse all_semigroups_by_genus(int gmax, int ceiling) {
  if (gmax < 0) throw SemigroupError("genus bound must be nonnegative");
  if (gmax > ceiling) throw BoundTooLargeError(gmax, ceiling);

  OracleUniverse universe;
  universe.genus_bound = gmax;
  auto& all = universe.semigroups;
  all.push_back(NumericalSemigroup::natural());
  // genus tree: each semigroup other than ℕ arises exactly once by deleting
  // a minimal generator greater than the parent's Frobenius number
  for (std::size_t i = 0; i < all.size(); ++i) {
    const NumericalSemigroup s = all[i];
    if (s.genus() >= gmax) continue;
    for (int x : s.minimal_generators()) {
      if (x > s.frobenius()) all.push_back(s.remove_element(x));
    }
  }
  std::sort(all.begin(), all.end());
  return universe;
}

}  // namespace conc2

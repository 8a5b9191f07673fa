// Brute-force reference enumeration of ALL numerical semigroups up to a
// genus bound, via the classical genus tree (children delete minimal
// generators beyond the Frobenius number).  Test fixture only; the
// production enumerators must agree with filters over this universe.

#ifndef CONC2_ORACLE_HPP_
#define CONC2_ORACLE_HPP_

#include <vector>

#include "conc2/semigroup.hpp"

namespace conc2 {

struct BoundTooLargeError : SemigroupError {
  explicit BoundTooLargeError(int g, int ceiling)
      : SemigroupError("genus bound " + std::to_string(g) +
                       " exceeds the oracle ceiling " + std::to_string(ceiling)) {}
};

struct OracleUniverse {
  int genus_bound = 0;
  std::vector<NumericalSemigroup> semigroups;  // canonically sorted

  // Number of semigroups with the given genus.
  long long count_with_genus(int g) const;
};

// Every numerical semigroup of genus <= gmax, exactly once.
OracleUniverse all_semigroups_by_genus(int gmax, int ceiling = 16);

template <typename Pred>
std::vector<NumericalSemigroup> oracle_filter(const OracleUniverse& universe,
                                              Pred&& keep) {
  std::vector<NumericalSemigroup> out;
  for (const auto& s : universe.semigroups) {
    if (keep(s)) out.push_back(s);
  }
  return out;
}

}  // namespace conc2

#endif  // CONC2_ORACLE_HPP_

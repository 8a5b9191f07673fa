// Wilf-conjecture verification over enumerated families: per-semigroup
// records g(S) <= (e(S)-1) n(S) together with the auxiliary lower bound
// n(S) >= m/2 + 2 that applies when F(S) > 2 m(S).

#ifndef CONC2_WILF_HPP_
#define CONC2_WILF_HPP_

#include <optional>
#include <vector>

#include "conc2/semigroup.hpp"
#include "conc2/trees.hpp"

namespace conc2 {

struct WilfRecord {
  NumericalSemigroup semigroup;
  int genus = 0;
  int embedding = 0;
  int n_count = 0;
  long long slack = 0;  // (e-1)*n - g; the conjecture holds iff >= 0
  bool elementary = false;
  std::optional<bool> lemma_n_bound_ok;  // n >= m/2+2, only when F > 2m
};

struct WilfSummary {
  long long checked = 0;
  long long violations = 0;
  long long min_slack = 0;
  long long n_bound_checked = 0;
  long long n_bound_failures = 0;
  std::vector<WilfRecord> violating;  // full records for reproduction
};

WilfRecord wilf_check(const NumericalSemigroup& s);

// Runs wilf_check over every concentration-2 member of the requested
// family (multiplicity tree, elementary tree, genus level, or fixed
// Frobenius number).  Never throws on a violation; inspect the summary.
WilfSummary verify_family(const EnumerationRequest& request);

// Fold a single record into a running summary.
void accumulate(WilfSummary& summary, WilfRecord record);

}  // namespace conc2

#endif  // CONC2_WILF_HPP_

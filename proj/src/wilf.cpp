#include "conc2/wilf.hpp"

#include <algorithm>
#include <climits>

#include "conc2/frobenius.hpp"

namespace conc2 {

WilfRecord wilf_check(const NumericalSemigroup& s) {
  WilfRecord rec{s};
  rec.genus = s.genus();
  rec.embedding = s.embedding_dimension();
  rec.n_count = s.n_count();
  rec.slack = static_cast<long long>(rec.embedding - 1) * rec.n_count - rec.genus;
  rec.elementary = s.is_elementary();
  if (s.frobenius() > 2 * s.multiplicity()) {
    // n >= m/2 + 2, i.e. 2n >= m + 4
    rec.lemma_n_bound_ok = 2 * rec.n_count >= s.multiplicity() + 4;
  }
  return rec;
}

void accumulate(WilfSummary& summary, WilfRecord record) {
  if (summary.checked == 0) {
    summary.min_slack = record.slack;
  } else {
    summary.min_slack = std::min(summary.min_slack, record.slack);
  }
  ++summary.checked;
  if (record.lemma_n_bound_ok.has_value()) {
    ++summary.n_bound_checked;
    if (!*record.lemma_n_bound_ok) ++summary.n_bound_failures;
  }
  if (record.slack < 0) {
    ++summary.violations;
    summary.violating.push_back(std::move(record));
  }
}

WilfSummary verify_family(const EnumerationRequest& request) {
  WilfSummary summary;
  auto take = [&](const NumericalSemigroup& s) {
    if (s.concentration() != 2) return;  // the root half-line is out of scope
    accumulate(summary, wilf_check(s));
  };

  switch (request.mode) {
    case EnumerationMode::genus_level:
      if (!request.genus) {
        throw InvalidGenusRangeError("genus-level verification needs a genus");
      }
      for (const auto& s : enumerate_by_genus(request.multiplicity, *request.genus)) {
        take(s);
      }
      break;
    case EnumerationMode::frobenius_set:
      if (!request.frobenius) {
        throw SemigroupError("frobenius verification needs a Frobenius number");
      }
      for (const auto& cls : enumerate_c2_frobenius(*request.frobenius)) {
        for (const auto& s : cls.members) take(s);
      }
      break;
    default:
      for (const auto& node : walk_tree(request)) {
        take(node.semigroup);
      }
      break;
  }
  return summary;
}

}  // namespace conc2

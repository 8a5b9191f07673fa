// Output formatting shared by the CLI and the golden-file tests: canonical
// JSON for a single semigroup, JSON lines and DOT for trees, and the
// angle-bracket generator notation.

#ifndef CONC2_FORMAT_HPP_
#define CONC2_FORMAT_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conc2/frobenius.hpp"
#include "conc2/semigroup.hpp"
#include "conc2/trees.hpp"
#include "conc2/wilf.hpp"

namespace conc2 {

using ordered_json = nlohmann::ordered_json;

// {"msg":[...],"gaps":[...],"multiplicity":m,"frobenius":F,"genus":g,
//  "embedding_dimension":e,"concentration":c}
ordered_json to_canonical_json(const NumericalSemigroup& s);

ordered_json to_json(const WilfRecord& record);
ordered_json to_json(const WilfSummary& summary);
ordered_json to_json(const FrobeniusClass& cls);

// One canonical-JSON object per line, augmented with "depth" and "removed"
// (null at the root).
std::string nodes_to_jsonl(const std::vector<TreeNode>& nodes);

// Directed edges child -> parent labeled with the removed element.
std::string nodes_to_dot(const std::vector<TreeNode>& nodes);

// Parse "5,7,9" or "⟨5,7,9⟩" into a generator list.
std::vector<int> parse_generators(const std::string& text);

}  // namespace conc2

#endif  // CONC2_FORMAT_HPP_

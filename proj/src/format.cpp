#include "conc2/format.hpp"

#include <sstream>

namespace conc2 {

ordered_json to_canonical_json(const NumericalSemigroup& s) {
  return ordered_json{{"msg", s.minimal_generators()},
                      {"gaps", s.gaps()},
                      {"multiplicity", s.multiplicity()},
                      {"frobenius", s.frobenius()},
                      {"genus", s.genus()},
                      {"embedding_dimension", s.embedding_dimension()},
                      {"concentration", s.concentration()}};
}

ordered_json to_json(const WilfRecord& record) {
  ordered_json j{{"msg", record.semigroup.minimal_generators()},
                 {"genus", record.genus},
                 {"embedding", record.embedding},
                 {"n_count", record.n_count},
                 {"slack", record.slack},
                 {"elementary", record.elementary}};
  if (record.lemma_n_bound_ok.has_value()) {
    j["n_bound_ok"] = *record.lemma_n_bound_ok;
  }
  return j;
}

ordered_json to_json(const WilfSummary& summary) {
  ordered_json j{{"checked", summary.checked},
                 {"violations", summary.violations},
                 {"min_slack", summary.min_slack},
                 {"n_bound_checked", summary.n_bound_checked},
                 {"n_bound_failures", summary.n_bound_failures}};
  if (!summary.violating.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& rec : summary.violating) {
      ordered_json full = to_json(rec);
      full["gaps"] = rec.semigroup.gaps();  // full reproduction data
      arr.push_back(std::move(full));
    }
    j["violating"] = std::move(arr);
  }
  return j;
}

ordered_json to_json(const FrobeniusClass& cls) {
  ordered_json members = ordered_json::array();
  for (const auto& s : cls.members) members.push_back(to_canonical_json(s));
  return ordered_json{{"root", to_canonical_json(cls.root)},
                      {"members", std::move(members)}};
}

std::string nodes_to_jsonl(const std::vector<TreeNode>& nodes) {
  std::ostringstream os;
  for (const auto& node : nodes) {
    ordered_json j = to_canonical_json(node.semigroup);
    j["depth"] = node.depth;
    if (node.removed) {
      j["removed"] = *node.removed;
    } else {
      j["removed"] = nullptr;
    }
    os << j.dump() << "\n";
  }
  return os.str();
}

std::string nodes_to_dot(const std::vector<TreeNode>& nodes) {
  std::ostringstream os;
  os << "digraph tree {\n";
  for (const auto& node : nodes) {
    os << "  \"" << node.semigroup.label() << "\";\n";
  }
  for (const auto& node : nodes) {
    if (!node.parent) continue;
    os << "  \"" << node.semigroup.label() << "\" -> \""
       << nodes[*node.parent].semigroup.label() << "\" [label=\""
       << *node.removed << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<int> parse_generators(const std::string& text) {
  std::string cleaned;
  for (std::size_t i = 0; i < text.size();) {
    // strip the UTF-8 angle brackets and ASCII <> if present
    if (text.compare(i, 3, "⟨") == 0 || text.compare(i, 3, "⟩") == 0) {
      i += 3;
    } else if (text[i] == '<' || text[i] == '>' || text[i] == ' ') {
      ++i;
    } else {
      cleaned.push_back(text[i++]);
    }
  }
  std::vector<int> gens;
  std::istringstream is(cleaned);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int value = std::stoi(tok, &pos);
    if (pos != tok.size()) {
      throw SemigroupError("cannot parse generator '" + tok + "'");
    }
    gens.push_back(value);
  }
  if (gens.empty()) throw EmptyInputError();
  return gens;
}

}  // namespace conc2

// Command-line front end: semigroup invariants, tree enumeration, Wilf
// verification and counting experiments, with table/json/jsonl/dot output.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conc2/format.hpp"
#include "conc2/frobenius.hpp"
#include "conc2/oracle.hpp"
#include "conc2/semigroup.hpp"
#include "conc2/trees.hpp"
#include "conc2/wilf.hpp"

namespace {

using namespace conc2;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw SemigroupError("cannot open output file " + path);
  out << text;
}

std::string info_table(const NumericalSemigroup& s) {
  std::ostringstream os;
  os << "semigroup           " << s.label() << "\n"
     << "multiplicity        " << s.multiplicity() << "\n"
     << "frobenius           " << s.frobenius() << "\n"
     << "genus               " << s.genus() << "\n"
     << "embedding_dimension " << s.embedding_dimension() << "\n"
     << "concentration       " << s.concentration() << "\n"
     << "n_count             " << s.n_count() << "\n"
     << "elementary          " << (s.is_elementary() ? "yes" : "no") << "\n"
     << "gaps                ";
  for (std::size_t i = 0; i < s.gaps().size(); ++i) {
    if (i) os << ",";
    os << s.gaps()[i];
  }
  os << "\n";
  return os.str();
}

std::string list_as(const std::vector<NumericalSemigroup>& family,
                    const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& s : family) arr.push_back(to_canonical_json(s));
    os << arr.dump(2) << "\n";
  } else if (format == "jsonl") {
    for (const auto& s : family) os << to_canonical_json(s).dump() << "\n";
  } else {
    for (const auto& s : family) os << s.label() << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration of numerical semigroups with concentration 2"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string output_path;
  int threads = 1;
  app.add_option("-o,--output", output_path, "write output to a file instead of stdout");
  app.add_option("--threads", threads, "worker threads for counting runs")
      ->default_val(1);

  int oracle_genus = -1;
  app.add_option("--oracle", oracle_genus,
                 "dump the brute-force universe up to this genus (debug)")
      ->group("");  // hidden

  // info
  auto* info = app.add_subcommand("info", "invariants of one semigroup");
  std::string info_gens, info_format = "table";
  info->add_option("--gens", info_gens, "generators, e.g. 5,7,9")->required();
  info->add_option("--format", info_format)->check(CLI::IsMember({"table", "json"}));

  // enum
  auto* enum_cmd = app.add_subcommand("enum", "list a family of semigroups");
  int enum_m = 0, enum_f = 0;
  std::optional<int> enum_genus, enum_max_genus;
  bool enum_elementary = false, enum_irred_only = false;
  std::string enum_format = "table";
  enum_cmd->add_option("-m,--multiplicity", enum_m);
  enum_cmd->add_option("-F,--frobenius", enum_f);
  enum_cmd->add_option("--genus", enum_genus, "single genus level");
  enum_cmd->add_option("--max-genus", enum_max_genus);
  enum_cmd->add_flag("--elementary", enum_elementary);
  enum_cmd->add_flag("--irreducible-only", enum_irred_only);
  enum_cmd->add_option("--format", enum_format)
      ->check(CLI::IsMember({"table", "json", "jsonl"}));

  // tree
  auto* tree_cmd = app.add_subcommand("tree", "emit an enumeration tree");
  std::string tree_variant, tree_gens, tree_format = "dot";
  int tree_m = 0;
  std::optional<int> tree_max_genus;
  tree_cmd->add_option("variant", tree_variant, "multiplicity | elementary | class")
      ->required()
      ->check(CLI::IsMember({"multiplicity", "elementary", "class"}));
  tree_cmd->add_option("-m,--multiplicity", tree_m);
  tree_cmd->add_option("--gens", tree_gens, "class-tree root generators");
  tree_cmd->add_option("--max-genus", tree_max_genus);
  tree_cmd->add_option("--format", tree_format)
      ->check(CLI::IsMember({"dot", "jsonl"}));

  // wilf
  auto* wilf_cmd = app.add_subcommand("wilf", "verify Wilf's conjecture on a family");
  int wilf_m = 0, wilf_f = 0;
  std::optional<int> wilf_max_genus;
  bool wilf_elementary = false;
  std::string wilf_format = "table";
  wilf_cmd->add_option("-m,--multiplicity", wilf_m);
  wilf_cmd->add_option("-F,--frobenius", wilf_f);
  wilf_cmd->add_option("--max-genus", wilf_max_genus);
  wilf_cmd->add_flag("--elementary", wilf_elementary);
  wilf_cmd->add_option("--format", wilf_format)
      ->check(CLI::IsMember({"table", "json"}));

  // count / height
  auto* count_cmd = app.add_subcommand("count", "cardinality of C2[m], odd m");
  int count_m = 0;
  count_cmd->add_option("-m,--multiplicity", count_m)->required();

  auto* height_cmd = app.add_subcommand("height", "height of the enumeration tree");
  int height_m = 0;
  bool height_elementary = false;
  height_cmd->add_option("-m,--multiplicity", height_m)->required();
  height_cmd->add_flag("--elementary", height_elementary);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (oracle_genus >= 0) {
      OracleUniverse universe = all_semigroups_by_genus(oracle_genus, oracle_genus);
      std::ostringstream os;
      for (const auto& s : universe.semigroups) {
        os << to_canonical_json(s).dump() << "\n";
      }
      write_output(output_path, os.str());
      return 0;
    }

    if (*info) {
      auto s = NumericalSemigroup::from_generators(parse_generators(info_gens));
      write_output(output_path, info_format == "json"
                                    ? to_canonical_json(s).dump(2) + "\n"
                                    : info_table(s));
      return 0;
    }

    if (*enum_cmd) {
      std::ostringstream os;
      if (enum_cmd->count("-F")) {
        if (enum_irred_only) {
          os << list_as(irreducible_c2(enum_f), enum_format);
        } else {
          auto classes = enumerate_c2_frobenius(enum_f);
          if (enum_format == "json") {
            ordered_json arr = ordered_json::array();
            for (const auto& cls : classes) arr.push_back(to_json(cls));
            os << arr.dump(2) << "\n";
          } else {
            std::vector<NumericalSemigroup> flat;
            for (const auto& cls : classes) {
              flat.insert(flat.end(), cls.members.begin(), cls.members.end());
            }
            std::sort(flat.begin(), flat.end());
            os << list_as(flat, enum_format);
          }
        }
      } else if (enum_m > 0 && enum_genus) {
        os << list_as(enumerate_by_genus(enum_m, *enum_genus), enum_format);
      } else if (enum_m > 0) {
        EnumerationRequest request;
        request.mode = enum_elementary ? EnumerationMode::elementary_tree
                                       : EnumerationMode::multiplicity_tree;
        request.multiplicity = enum_m;
        request.max_genus = enum_max_genus;
        std::vector<NumericalSemigroup> family;
        for (auto& node : walk_tree(request)) {
          if (node.depth > 0) family.push_back(std::move(node.semigroup));
        }
        os << list_as(family, enum_format);
      } else {
        std::cerr << "enum: need -m or -F\n";
        return 2;
      }
      write_output(output_path, os.str());
      return 0;
    }

    if (*tree_cmd) {
      std::vector<TreeNode> nodes;
      if (tree_variant == "class") {
        if (tree_gens.empty()) {
          std::cerr << "tree class: need --gens for the irreducible root\n";
          return 2;
        }
        auto root = NumericalSemigroup::from_generators(parse_generators(tree_gens));
        nodes = walk_class_tree(root);
      } else {
        if (tree_m < 2) {
          std::cerr << "tree: need -m >= 2\n";
          return 2;
        }
        EnumerationRequest request;
        request.mode = tree_variant == "elementary"
                           ? EnumerationMode::elementary_tree
                           : EnumerationMode::multiplicity_tree;
        request.multiplicity = tree_m;
        request.max_genus = tree_max_genus;
        nodes = walk_tree(request);
      }
      write_output(output_path, tree_format == "jsonl" ? nodes_to_jsonl(nodes)
                                                       : nodes_to_dot(nodes));
      return 0;
    }

    if (*wilf_cmd) {
      EnumerationRequest request;
      if (wilf_cmd->count("-F")) {
        request.mode = EnumerationMode::frobenius_set;
        request.frobenius = wilf_f;
      } else if (wilf_m > 0) {
        request.mode = wilf_elementary ? EnumerationMode::elementary_tree
                                       : EnumerationMode::multiplicity_tree;
        request.multiplicity = wilf_m;
        request.max_genus = wilf_max_genus;
      } else {
        std::cerr << "wilf: need -m or -F\n";
        return 2;
      }
      WilfSummary summary = verify_family(request);
      std::ostringstream os;
      if (wilf_format == "json") {
        os << to_json(summary).dump(2) << "\n";
      } else {
        os << summary.checked << " checked, " << summary.violations
           << " violations, min slack " << summary.min_slack << "\n";
        if (summary.n_bound_checked > 0) {
          os << "n-bound (n >= m/2+2): " << summary.n_bound_checked
             << " checked, " << summary.n_bound_failures << " failures\n";
        }
        for (const auto& rec : summary.violating) {
          os << "VIOLATION " << rec.semigroup.label() << " gaps ";
          for (int g : rec.semigroup.gaps()) os << g << " ";
          os << "\n";
        }
      }
      write_output(output_path, os.str());
      return summary.violations > 0 ? 1 : 0;
    }

    if (*count_cmd) {
      std::ostringstream os;
      os << count_c2(count_m, threads) << "\n";
      write_output(output_path, os.str());
      return 0;
    }

    if (*height_cmd) {
      std::ostringstream os;
      os << tree_height(height_m,
                        height_elementary ? TreeVariant::elementary
                                          : TreeVariant::multiplicity,
                        threads)
         << "\n";
      write_output(output_path, os.str());
      return 0;
    }

    std::cerr << app.help();
    return 2;
  } catch (const SemigroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

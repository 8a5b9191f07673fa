// Python bindings for the enumeration library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conc2/frobenius.hpp"
#include "conc2/oracle.hpp"
#include "conc2/semigroup.hpp"
#include "conc2/trees.hpp"
#include "conc2/wilf.hpp"

namespace py = pybind11;
using namespace conc2;

namespace {

EnumerationRequest make_request(const std::string& mode, int multiplicity,
                                std::optional<int> genus,
                                std::optional<int> max_genus,
                                std::optional<int> frobenius) {
  EnumerationRequest request;
  if (mode == "multiplicity-tree") {
    request.mode = EnumerationMode::multiplicity_tree;
  } else if (mode == "elementary-tree") {
    request.mode = EnumerationMode::elementary_tree;
  } else if (mode == "genus-level") {
    request.mode = EnumerationMode::genus_level;
  } else if (mode == "frobenius") {
    request.mode = EnumerationMode::frobenius_set;
  } else {
    throw SemigroupError("unknown enumeration mode '" + mode + "'");
  }
  request.multiplicity = multiplicity;
  request.genus = genus;
  request.max_genus = max_genus;
  request.frobenius = frobenius;
  return request;
}

}  // namespace

PYBIND11_MODULE(conc2, m) {
  m.doc() = "exact enumeration of numerical semigroups with concentration 2";

  py::register_exception<SemigroupError>(m, "SemigroupError");

  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def_static("natural", &NumericalSemigroup::natural)
      .def_static("ordinary", &NumericalSemigroup::ordinary, py::arg("m"))
      .def_static("from_generators", &NumericalSemigroup::from_generators,
                  py::arg("gens"))
      .def_static("from_gaps", &NumericalSemigroup::from_gaps, py::arg("gaps"))
      .def_static("elementary_with_upper_set",
                  &NumericalSemigroup::elementary_with_upper_set, py::arg("m"),
                  py::arg("upper"))
      .def("contains", &NumericalSemigroup::contains, py::arg("x"))
      .def("__contains__", &NumericalSemigroup::contains)
      .def("next_element", &NumericalSemigroup::next_element, py::arg("s"))
      .def_property_readonly("gaps", &NumericalSemigroup::gaps)
      .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
      .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
      .def_property_readonly("genus", &NumericalSemigroup::genus)
      .def_property_readonly("minimal_generators",
                             &NumericalSemigroup::minimal_generators)
      .def_property_readonly("embedding_dimension",
                             &NumericalSemigroup::embedding_dimension)
      .def_property_readonly("concentration", &NumericalSemigroup::concentration)
      .def_property_readonly("n_count", &NumericalSemigroup::n_count)
      .def("is_half_line", &NumericalSemigroup::is_half_line)
      .def("is_elementary", &NumericalSemigroup::is_elementary)
      .def("is_concentration_two", &NumericalSemigroup::is_concentration_two)
      .def("remove_element", &NumericalSemigroup::remove_element, py::arg("x"))
      .def("add_frobenius", &NumericalSemigroup::add_frobenius)
      .def("elements_up_to", &NumericalSemigroup::elements_up_to, py::arg("bound"))
      .def("label", &NumericalSemigroup::label)
      .def("__eq__", [](const NumericalSemigroup& a,
                        const NumericalSemigroup& b) { return a == b; })
      .def("__lt__", [](const NumericalSemigroup& a,
                        const NumericalSemigroup& b) { return a < b; })
      .def("__hash__",
           [](const NumericalSemigroup& s) {
             std::size_t h = 1469598103934665603ULL;
             for (int g : s.gaps()) h = (h ^ static_cast<std::size_t>(g)) * 1099511628211ULL;
             return h;
           })
      .def("__repr__", [](const NumericalSemigroup& s) { return s.label(); });

  py::class_<TreeNode>(m, "TreeNode")
      .def_readonly("semigroup", &TreeNode::semigroup)
      .def_readonly("removed", &TreeNode::removed)
      .def_readonly("depth", &TreeNode::depth)
      .def_readonly("parent", &TreeNode::parent);

  py::class_<FrobeniusClass>(m, "FrobeniusClass")
      .def_readonly("root", &FrobeniusClass::root)
      .def_readonly("members", &FrobeniusClass::members);

  py::class_<WilfRecord>(m, "WilfRecord")
      .def_readonly("semigroup", &WilfRecord::semigroup)
      .def_readonly("genus", &WilfRecord::genus)
      .def_readonly("embedding", &WilfRecord::embedding)
      .def_readonly("n_count", &WilfRecord::n_count)
      .def_readonly("slack", &WilfRecord::slack)
      .def_readonly("elementary", &WilfRecord::elementary)
      .def_readonly("n_bound_ok", &WilfRecord::lemma_n_bound_ok);

  py::class_<WilfSummary>(m, "WilfSummary")
      .def_readonly("checked", &WilfSummary::checked)
      .def_readonly("violations", &WilfSummary::violations)
      .def_readonly("min_slack", &WilfSummary::min_slack)
      .def_readonly("n_bound_checked", &WilfSummary::n_bound_checked)
      .def_readonly("n_bound_failures", &WilfSummary::n_bound_failures)
      .def_readonly("violating", &WilfSummary::violating);

  m.def("children_multiplicity_tree", &children_multiplicity_tree, py::arg("s"),
        py::arg("parent_depth") = 0);
  m.def("children_elementary_tree", &children_elementary_tree, py::arg("s"),
        py::arg("parent_depth") = 0);
  m.def("enumerate_by_genus", &enumerate_by_genus, py::arg("m"), py::arg("g"));
  m.def(
      "walk_tree",
      [](const std::string& mode, int multiplicity, std::optional<int> max_genus) {
        return walk_tree(make_request(mode, multiplicity, std::nullopt,
                                      max_genus, std::nullopt));
      },
      py::arg("mode"), py::arg("multiplicity"), py::arg("max_genus") = std::nullopt);
  m.def("count_c2", &count_c2, py::arg("m"), py::arg("threads") = 1);
  m.def(
      "tree_height",
      [](int multiplicity, const std::string& variant, int threads) {
        return tree_height(multiplicity,
                           variant == "elementary" ? TreeVariant::elementary
                                                   : TreeVariant::multiplicity,
                           threads);
      },
      py::arg("m"), py::arg("variant") = "full", py::arg("threads") = 1);

  m.def("is_irreducible", &is_irreducible, py::arg("s"));
  m.def("alpha", &alpha, py::arg("s"));
  m.def("ascend", &ascend, py::arg("s"));
  m.def("irreducibles_with_frobenius", &irreducibles_with_frobenius, py::arg("f"));
  m.def("irreducible_c2", &irreducible_c2, py::arg("f"));
  m.def("class_children", &class_children, py::arg("t"), py::arg("is_root"));
  m.def("class_members", &class_members, py::arg("root"));
  m.def("enumerate_c2_frobenius", &enumerate_c2_frobenius, py::arg("f"));

  m.def("wilf_check", &wilf_check, py::arg("s"));
  m.def(
      "verify_family",
      [](const std::string& mode, int multiplicity, std::optional<int> genus,
         std::optional<int> max_genus, std::optional<int> frobenius) {
        return verify_family(
            make_request(mode, multiplicity, genus, max_genus, frobenius));
      },
      py::arg("mode"), py::arg("multiplicity") = 0,
      py::arg("genus") = std::nullopt, py::arg("max_genus") = std::nullopt,
      py::arg("frobenius") = std::nullopt);

  m.def(
      "all_semigroups_by_genus",
      [](int gmax, int ceiling) {
        return all_semigroups_by_genus(gmax, ceiling).semigroups;
      },
      py::arg("gmax"), py::arg("ceiling") = 16);
}

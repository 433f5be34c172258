#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "gpsort/engine.hpp"
#include "gpsort/harness.hpp"
#include "gpsort/oracle.hpp"

namespace py = pybind11;
using namespace gpsort;

namespace {

std::pair<std::int64_t, std::int64_t> as_pair(const Rational& r) {
  return {r.num(), r.den()};
}

MeasureKind measure_arg(const std::string& s) {
  MeasureKind m;
  if (!parse_measure(s, m)) throw py::value_error("unknown measure: " + s);
  return m;
}

Variant variant_arg(const std::string& s) {
  Variant v;
  if (!parse_variant(s, v)) throw py::value_error("unknown variant: " + s);
  return v;
}

InitMode init_arg(const std::string& s) {
  InitMode m;
  if (!parse_init_mode(s, m)) throw py::value_error("unknown init mode: " + s);
  return m;
}

}  // namespace

PYBIND11_MODULE(_gpsort, mod) {
  mod.doc() = "join-tree evolution of sorting permutations: core operations";

  py::class_<Tree>(mod, "Tree")
      .def_property_readonly("leaf_count", &Tree::leaf_count)
      .def_property_readonly("node_count", &Tree::node_count)
      .def("leaves", &Tree::in_order_leaves)
      .def("valid", &Tree::valid, py::arg("n"))
      .def("__str__", &Tree::to_text)
      .def("__repr__", [](const Tree& t) { return "Tree(" + t.to_text() + ")"; });

  py::class_<RandomStream>(mod, "RandomStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next_u64", &RandomStream::next_u64)
      .def("below", &RandomStream::below, py::arg("bound"))
      .def("uniform01", &RandomStream::uniform01)
      .def("poisson1", &RandomStream::poisson1);

  py::class_<MutationInstance>(mod, "MutationInstance")
      .def_readonly("target", &MutationInstance::target)
      .def_readonly("new_label", &MutationInstance::new_label)
      .def_readonly("insert_left", &MutationInstance::insert_left)
      .def_property_readonly(
          "kind", [](const MutationInstance& mi) { return std::string(to_string(mi.kind)); })
      .def("__repr__", [](const MutationInstance& mi) {
        return "MutationInstance(kind=" + std::string(to_string(mi.kind)) +
               ", target=" + std::to_string(mi.target) +
               ", new_label=" + std::to_string(mi.new_label) +
               ", insert_left=" + (mi.insert_left ? std::string("True") : std::string("False")) +
               ")";
      });

  py::class_<Improvement>(mod, "Improvement")
      .def_readonly("evaluation", &Improvement::evaluation)
      .def_readonly("fitness", &Improvement::fitness)
      .def_readonly("leaf_count", &Improvement::leaf_count);

  py::class_<RunRecord>(mod, "RunRecord")
      .def_readonly("evaluations_used", &RunRecord::evaluations_used)
      .def_readonly("hit_optimum", &RunRecord::hit_optimum)
      .def_readonly("improvements", &RunRecord::improvements)
      .def_readonly("max_tree_size", &RunRecord::max_tree_size)
      .def_readonly("seed", &RunRecord::seed)
      .def_property_readonly(
          "final_fitness", [](const RunRecord& r) { return r.final_fitness.value; });

  mod.def("make_leaf", &make_leaf, py::arg("label"), py::arg("n"));
  mod.def("comb_from_leaf_list", &comb_from_leaf_list, py::arg("labels"), py::arg("n"));
  mod.def("worst_case_w1", &worst_case_w1, py::arg("n"));
  mod.def("worst_case_w2", &worst_case_w2, py::arg("n"));
  mod.def(
      "random_tree",
      [](int n, const std::string& init, std::uint64_t seed, double p_join, int depth_cap) {
        InitConfig cfg;
        cfg.n = n;
        cfg.mode = init_arg(init);
        cfg.p_join = p_join;
        cfg.depth_cap = depth_cap;
        cfg.validate();
        RandomStream rng(seed);
        return random_init(cfg, rng);
      },
      py::arg("n"), py::arg("init"), py::arg("seed"), py::arg("p_join") = 0.5,
      py::arg("depth_cap") = 0);

  mod.def(
      "express",
      [](const LabelList& labels, int n) { return express(labels, n).elements(); },
      py::arg("labels"), py::arg("n"),
      "first-occurrence projection of a leaf list onto a (possibly partial) permutation");
  mod.def(
      "evaluate",
      [](const Tree& t, const std::string& measure, int n) {
        return evaluate(t, measure_arg(measure), n).value;
      },
      py::arg("tree"), py::arg("measure"), py::arg("n"));
  mod.def(
      "optimal_value",
      [](const std::string& measure, int n) { return optimal_value(measure_arg(measure), n); },
      py::arg("measure"), py::arg("n"));
  mod.def("is_optimal", &is_optimal, py::arg("tree"), py::arg("n"));

  mod.def(
      "hvl_mutate",
      [](const Tree& t, int k, int n, std::uint64_t seed) {
        RandomStream rng(seed);
        return hvl_mutate(t, k, n, rng);
      },
      py::arg("tree"), py::arg("k"), py::arg("n"), py::arg("seed"));
  mod.def(
      "sample_k",
      [](const std::string& variant, std::uint64_t seed) {
        RandomStream rng(seed);
        return sample_k(variant_arg(variant), rng);
      },
      py::arg("variant"), py::arg("seed"));

  mod.def(
      "run",
      [](int n, const std::string& measure, const std::string& variant, const std::string& init,
         std::uint64_t budget, std::uint64_t seed) {
        RunConfig cfg;
        cfg.n = n;
        cfg.measure = measure_arg(measure);
        cfg.variant = variant_arg(variant);
        cfg.init.mode = init_arg(init);
        cfg.budget = budget;
        cfg.seed = seed;
        cfg.validate();
        return run(cfg);
      },
      py::arg("n"), py::arg("measure"), py::arg("variant"), py::arg("init"), py::arg("budget"),
      py::arg("seed"));

  mod.def(
      "exact_success_probability",
      [](const Tree& t, int n) { return as_pair(exact_success_probability(t, n)); },
      py::arg("tree"), py::arg("n"),
      "exact probability, as (numerator, denominator), that one sub-operation reaches the optimum");
  mod.def(
      "exact_improvement_probability",
      [](const Tree& t, int n, const std::string& measure) {
        return as_pair(exact_improvement_probability(t, n, measure_arg(measure)));
      },
      py::arg("tree"), py::arg("n"), py::arg("measure"));
  mod.def("neighborhood_size", &neighborhood_size, py::arg("tree"), py::arg("n"));
  mod.def("brute_force_exc", &brute_force_exc, py::arg("perm"));

  mod.def("missing_first_tree", &missing_first_tree, py::arg("n"));
  mod.def("missing_interior_tree", &missing_interior_tree, py::arg("n"));
  mod.def("missing_last_tree", &missing_last_tree, py::arg("n"));
  mod.def("misplaced_front_tree", &misplaced_front_tree, py::arg("n"));
  mod.def("misplaced_interior_tree", &misplaced_interior_tree, py::arg("n"));
  mod.def("substitution_blind_tree", &substitution_blind_tree, py::arg("n"));
  mod.def(
      "verify_fix_kinds",
      [](int n) {
        FixKindReport rep = verify_fix_kinds(n);
        return std::make_pair(rep.all_pass, rep.to_text());
      },
      py::arg("n"), "returns (all_pass, report_text)");

  mod.def(
      "fit_loglog",
      [](const std::vector<std::pair<double, double>>& points) {
        FitResult f = fit_loglog(points);
        return std::make_tuple(f.slope, f.intercept, f.r_squared);
      },
      py::arg("points"), "ordinary least squares on logs: (slope, intercept, r_squared)");
  mod.def("trial_seed", &trial_seed, py::arg("base_seed"), py::arg("row_index"));
}

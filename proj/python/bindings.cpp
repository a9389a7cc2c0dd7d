// Python bindings for the core operations: generation, validation oracles,
// depth statistics and the timing harness.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "randtree/bench.hpp"
#include "randtree/oracle.hpp"
#include "randtree/prng.hpp"
#include "randtree/stats.hpp"
#include "randtree/tree.hpp"

namespace py = pybind11;
using namespace randtree;

namespace {

ShapeSequence shape_from_bytes(const py::bytes& data) {
    ShapeSequence seq;
    const std::string_view view(data);
    seq.tags.assign(view.begin(), view.end());
    return seq;
}

py::bytes shape_to_bytes(const ShapeSequence& seq) {
    return py::bytes(reinterpret_cast<const char*>(seq.tags.data()),
                     seq.tags.size());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "uniform random binary trees: linear-time generation, "
              "uniformity oracles, depth statistics";

    py::register_exception<Error>(m, "Error");

    py::class_<ParkMiller>(m, "ParkMiller")
        .def(py::init<std::uint32_t>(), py::arg("seed"))
        .def("next", &ParkMiller::next)
        .def("uniform_below", &ParkMiller::uniform_below, py::arg("bound"))
        .def_property_readonly("state", &ParkMiller::state);

    m.def("derive_trial_seed", &derive_trial_seed, py::arg("base"),
          py::arg("index"));

    py::class_<PrimitiveSet>(m, "PrimitiveSet")
        .def(py::init<std::vector<std::string>, std::vector<std::string>>(),
             py::arg("terminals"), py::arg("functions"))
        .def_static("parse", &PrimitiveSet::parse, py::arg("text"))
        .def_static("load", &PrimitiveSet::load, py::arg("path"))
        .def_property_readonly("terminal_count", &PrimitiveSet::terminal_count)
        .def_property_readonly("function_count", &PrimitiveSet::function_count)
        .def_property_readonly("total", &PrimitiveSet::total)
        .def("name", &PrimitiveSet::name, py::arg("opcode"))
        .def("arity", &PrimitiveSet::arity, py::arg("opcode"))
        .def("__eq__", [](const PrimitiveSet& a, const PrimitiveSet& b) {
            return a == b;
        });

    py::class_<Tree>(m, "Tree")
        .def_property_readonly("size", &Tree::size)
        .def_property_readonly("depth", &Tree::depth)
        .def_property_readonly("seed", &Tree::seed)
        .def_property_readonly("primitives", &Tree::primitives)
        .def_property_readonly("opcodes",
                               [](const Tree& t) {
                                   const auto ops = t.opcodes();
                                   return py::bytes(
                                       reinterpret_cast<const char*>(ops.data()),
                                       ops.size());
                               })
        .def("sexpr", &to_sexpr)
        .def("dot", &to_dot, py::arg("node_limit") = 10000)
        .def("save", &write_opcode_file, py::arg("path"))
        .def("__repr__", [](const Tree& t) {
            return "<Tree size=" + std::to_string(t.size()) +
                   " depth=" + std::to_string(t.depth()) +
                   " seed=" + std::to_string(t.seed()) + ">";
        });

    m.def("random_tree", &random_tree, py::arg("size"), py::arg("primitives"),
          py::arg("seed"), py::arg("verify") = true);
    m.def("load_tree", &read_opcode_file, py::arg("path"),
          py::arg("expected_primitives"));
    m.def("wellformed", &wellformed, py::arg("tree"));
    m.def("depth_recursive_oracle", &depth_recursive_oracle, py::arg("tree"),
          py::arg("call_depth_limit") = 1000000);

    m.def(
        "random_shape",
        [](std::uint64_t internal_nodes, std::uint32_t seed) {
            ParkMiller rng(seed);
            return shape_to_bytes(random_shape(internal_nodes, rng));
        },
        py::arg("internal_nodes"), py::arg("seed"),
        "preorder tag bytes (0 = leaf, 1 = binary function)");
    m.def(
        "is_valid_preorder",
        [](const py::bytes& tags) {
            return is_valid_preorder(shape_from_bytes(tags));
        },
        py::arg("tags"));
    m.def(
        "depth_from_lattice",
        [](const py::bytes& tags) {
            return depth_from_lattice(shape_from_bytes(tags));
        },
        py::arg("tags"));

    m.def("catalan_exact", &catalan_exact, py::arg("n"));
    m.def(
        "enumerate_shapes",
        [](std::uint64_t n) {
            std::vector<std::string> out;
            for (const auto& shape : enumerate_shapes(n))
                out.push_back(shape_string(shape));
            return out;
        },
        py::arg("n"), "shapes as 'FFLLL'-style strings, lexicographic");

    py::class_<CycleLemmaReport>(m, "CycleLemmaReport")
        .def_readonly("arrangements", &CycleLemmaReport::arrangements)
        .def_readonly("shapes", &CycleLemmaReport::shapes)
        .def_readonly("fiber_size", &CycleLemmaReport::fiber_size)
        .def_readonly("passed", &CycleLemmaReport::pass)
        .def_readonly("diagnostic", &CycleLemmaReport::diagnostic)
        .def("__repr__", [](const CycleLemmaReport& r) {
            return "<CycleLemmaReport arrangements=" +
                   std::to_string(r.arrangements) +
                   " shapes=" + std::to_string(r.shapes) +
                   " fiber=" + std::to_string(r.fiber_size) +
                   (r.pass ? " pass>" : " FAIL>");
        });
    m.def("verify_cycle_lemma", &verify_cycle_lemma, py::arg("n"));

    py::class_<DepthSummary>(m, "DepthSummary")
        .def_readonly("size", &DepthSummary::size)
        .def_readonly("trials", &DepthSummary::trials)
        .def_readonly("mean", &DepthSummary::mean)
        .def_readonly("std_dev", &DepthSummary::std_dev)
        .def_readonly("min_depth", &DepthSummary::min_depth)
        .def_readonly("max_depth", &DepthSummary::max_depth)
        .def_readonly("predicted", &DepthSummary::predicted)
        .def_readonly("rel_error", &DepthSummary::rel_error);
    m.def(
        "sample_depths",
        [](std::uint64_t size, std::uint64_t trials, std::uint32_t base_seed) {
            return sample_depths(size, trials, base_seed);
        },
        py::arg("size"), py::arg("trials"), py::arg("base_seed"));

    py::class_<UniformityResult>(m, "UniformityResult")
        .def_readonly("statistic", &UniformityResult::statistic)
        .def_readonly("dof", &UniformityResult::dof)
        .def_readonly("critical", &UniformityResult::critical)
        .def_readonly("passed", &UniformityResult::pass);
    m.def(
        "chi_square_uniform",
        [](std::uint64_t n, std::uint64_t trials, std::uint32_t base_seed) {
            return chi_square_uniform(n, trials, base_seed);
        },
        py::arg("n"), py::arg("trials"), py::arg("base_seed"));
    m.def("chi_square_critical", &chi_square_critical, py::arg("dof"),
          py::arg("alpha"));

    m.def("flajolet_depth_limit", &flajolet_depth_limit, py::arg("size"));
    m.def("expected_height_internal", &expected_height_internal, py::arg("n"));

    py::class_<BenchRecord>(m, "BenchRecord")
        .def_readonly("size", &BenchRecord::size)
        .def_readonly("repetitions", &BenchRecord::repetitions)
        .def_readonly("seconds", &BenchRecord::seconds)
        .def_readonly("nodes_per_second", &BenchRecord::nodes_per_second);
    m.def(
        "time_generation",
        [](const std::vector<std::uint64_t>& sizes, std::uint64_t reps,
           const PrimitiveSet& prims, std::uint32_t base_seed) {
            return time_generation(sizes, reps, prims, base_seed);
        },
        py::arg("sizes"), py::arg("reps"), py::arg("primitives"),
        py::arg("base_seed"));
    m.def(
        "loglog_slope",
        [](const std::vector<BenchRecord>& records) {
            return loglog_slope(records);
        },
        py::arg("records"));
}

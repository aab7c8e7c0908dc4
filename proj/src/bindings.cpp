#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "swapmc/connectivity.hpp"
#include "swapmc/enumerate.hpp"
#include "swapmc/gog.hpp"
#include "swapmc/graph.hpp"
#include "swapmc/mcmc.hpp"

namespace py = pybind11;
using namespace swapmc;

namespace {

EnumFilter make_filter(const std::optional<long>& triangle_count,
                       const std::optional<TriangleSequence>& triangle_seq,
                       const py::object& predicate) {
    EnumFilter filter;
    filter.triangle_count = triangle_count;
    filter.triangle_seq = triangle_seq;
    if (!predicate.is_none())
        filter.custom = [predicate](const Graph& g) { return predicate(g).cast<bool>(); };
    return filter;
}

std::string graph_repr(const Graph& g) {
    std::ostringstream out;
    out << "Graph(n=" << g.vertex_count() << ", edges=[";
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i) out << ", ";
        out << '(' << g.edges()[i].first << ", " << g.edges()[i].second << ')';
    }
    out << "])";
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Double edge-swap Markov chains, censuses and graph-of-graphs "
              "connectivity for degree-constrained graph spaces";

    const auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", base);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<NonSimpleGraph>(m, "NonSimpleGraph", base);
    py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base);
    py::register_exception<BadArity>(m, "BadArity", base);
    py::register_exception<InvalidDegreeSequence>(m, "InvalidDegreeSequence", base);
    py::register_exception<InvalidTriangleSequence>(m, "InvalidTriangleSequence", base);
    py::register_exception<NoDisjointEdge>(m, "NoDisjointEdge", base);
    py::register_exception<CriterionUnsatisfied>(m, "CriterionUnsatisfied", base);
    py::register_exception<FilterInapplicable>(m, "FilterInapplicable", base);
    py::register_exception<CensusTooLarge>(m, "CensusTooLarge", base);
    py::register_exception<SampleOutsideCensus>(m, "SampleOutsideCensus", base);
    py::register_exception<ClassMismatch>(m, "ClassMismatch", base);

    py::enum_<LoopPolicy>(m, "LoopPolicy")
        .value("Forbidden", LoopPolicy::Forbidden)
        .value("SingleOnly", LoopPolicy::SingleOnly)
        .value("Unlimited", LoopPolicy::Unlimited);
    py::enum_<MultiedgePolicy>(m, "MultiedgePolicy")
        .value("SingleOnly", MultiedgePolicy::SingleOnly)
        .value("Unlimited", MultiedgePolicy::Unlimited);

    py::class_<GraphSpace>(m, "GraphSpace")
        .def(py::init<LoopPolicy, MultiedgePolicy>(), py::arg("loops"), py::arg("multiedges"))
        .def_static("from_name", &GraphSpace::from_name, py::arg("name"))
        .def_readonly("loops", &GraphSpace::loops)
        .def_readonly("multiedges", &GraphSpace::multiedges)
        .def("name", &GraphSpace::name)
        .def("__eq__", [](const GraphSpace& a, const GraphSpace& b) { return a == b; })
        .def("__hash__", [](const GraphSpace& s) { return std::hash<std::string>{}(s.name()); })
        .def("__repr__", [](const GraphSpace& s) { return "GraphSpace('" + s.name() + "')"; });
    m.attr("SPACES") = [] {
        py::list names;
        for (const GraphSpace& s : GraphSpace::all()) names.append(s.name());
        return names;
    }();

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
        .def("edge_count", &Graph::edge_count)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__lt__", [](const Graph& a, const Graph& b) { return a < b; })
        .def("__hash__", &Graph::hash)
        .def("__repr__", &graph_repr)
        .def("to_text", [](const Graph& g) { return serialize(g); })
        .def_static("from_text", [](const std::string& text) { return parse_graph(text); })
        .def(py::pickle([](const Graph& g) { return py::make_tuple(g.vertex_count(), g.edges()); },
                        [](const py::tuple& t) {
                            return Graph(t[0].cast<int>(), t[1].cast<std::vector<Edge>>());
                        }));

    m.def("degree_sequence", &degree_sequence, py::arg("g"));
    m.def("is_valid_in_space", &is_valid_in_space, py::arg("g"), py::arg("space"));
    m.def("triangle_count", &triangle_count, py::arg("g"));
    m.def("triangle_sequence", &triangle_sequence, py::arg("g"));

    py::enum_<Pairing>(m, "Pairing").value("CrossA", Pairing::CrossA).value("CrossB", Pairing::CrossB);
    py::class_<SwapMove>(m, "SwapMove")
        .def(py::init([](int i, int j, Pairing p) { return SwapMove{i, j, p}; }), py::arg("i"),
             py::arg("j"), py::arg("pairing") = Pairing::CrossA)
        .def_readwrite("i", &SwapMove::i)
        .def_readwrite("j", &SwapMove::j)
        .def_readwrite("pairing", &SwapMove::pairing);
    py::class_<KSwapMove>(m, "KSwapMove")
        .def(py::init([](std::vector<int> indices, std::vector<bool> mobile_second, bool forward) {
                 return KSwapMove{std::move(indices), std::move(mobile_second), forward};
             }),
             py::arg("indices"), py::arg("mobile_second"), py::arg("forward") = true)
        .def_readwrite("indices", &KSwapMove::indices)
        .def_readwrite("mobile_second", &KSwapMove::mobile_second)
        .def_readwrite("forward", &KSwapMove::forward);

    m.def("apply_double_swap", &apply_double_swap, py::arg("g"), py::arg("move"));
    m.def("double_swap_neighbors", &double_swap_neighbors, py::arg("g"), py::arg("space"));
    m.def("apply_k_swap", &apply_k_swap, py::arg("g"), py::arg("move"));
    m.def("inverse_k_swap", &inverse_k_swap, py::arg("g"), py::arg("move"));
    m.def(
        "k_swap_neighbors",
        [](const Graph& g, const GraphSpace& s, int k, const py::object& keep) {
            GraphPredicate pred;
            if (!keep.is_none()) pred = [keep](const Graph& h) { return keep(h).cast<bool>(); };
            return k_swap_neighbors(g, s, k, pred);
        },
        py::arg("g"), py::arg("space"), py::arg("k"), py::arg("keep") = py::none());

    py::enum_<ConnectivityStatus>(m, "ConnectivityStatus")
        .value("AlwaysConnected", ConnectivityStatus::AlwaysConnected)
        .value("ConnectedByCriterion", ConnectivityStatus::ConnectedByCriterion)
        .value("DisconnectedByCriterion", ConnectivityStatus::DisconnectedByCriterion)
        .value("ExternallyCharacterized", ConnectivityStatus::ExternallyCharacterized);
    py::class_<ConnectivityVerdict>(m, "ConnectivityVerdict")
        .def_readonly("status", &ConnectivityVerdict::status)
        .def_readonly("witness", &ConnectivityVerdict::witness)
        .def("__repr__", [](const ConnectivityVerdict& v) {
            std::string out = to_string(v.status);
            if (!v.witness.empty()) out += ": " + v.witness;
            return out;
        });

    m.def("multiloop_criterion", &multiloop_criterion, py::arg("degrees"));
    m.def("space_connectivity", &space_connectivity, py::arg("space"), py::arg("degrees"));
    m.def("reduce_loops_loopy_multigraph", &reduce_loops_loopy_multigraph, py::arg("g"));
    m.def("eliminate_last_loop", &eliminate_last_loop, py::arg("g"));
    m.def("saturate_loops_multiloop", &saturate_loops_multiloop, py::arg("g"));

    m.def(
        "enumerate_graphs",
        [](const GraphSpace& s, const DegreeSequence& d, const std::optional<long>& triangle_count,
           const std::optional<TriangleSequence>& triangle_seq, const py::object& predicate,
           std::size_t max_results, unsigned jobs) {
            const EnumFilter filter = make_filter(triangle_count, triangle_seq, predicate);
            if (filter.custom) jobs = 1;  // python predicates stay on this thread
            return enumerate_graphs(s, d, filter, max_results, jobs);
        },
        py::arg("space"), py::arg("degrees"), py::kw_only(), py::arg("triangle_count") = py::none(),
        py::arg("triangle_seq") = py::none(), py::arg("predicate") = py::none(),
        py::arg("max_results") = kDefaultCensusCap, py::arg("jobs") = 1);

    py::class_<CanonicalForm>(m, "CanonicalForm")
        .def_readonly("graph", &CanonicalForm::graph)
        .def_readonly("relabeling", &CanonicalForm::relabeling);
    m.def("canonical_form", &canonical_form, py::arg("g"));

    py::class_<IsoClass>(m, "IsoClass")
        .def_readonly("representative", &IsoClass::representative)
        .def_readonly("size", &IsoClass::size);
    py::class_<IsoClasses>(m, "IsoClasses")
        .def_readonly("classes", &IsoClasses::classes)
        .def_readonly("total", &IsoClasses::total);
    m.def("isomorphism_classes", &isomorphism_classes, py::arg("graphs"));

    py::class_<GogReport>(m, "GogReport")
        .def_readonly("census", &GogReport::census)
        .def_readonly("component_id", &GogReport::component_id)
        .def_readonly("component_sizes", &GogReport::component_sizes)
        .def_readonly("vertex_count", &GogReport::vertex_count)
        .def_readonly("frozen_count", &GogReport::frozen_count)
        .def("component_of", &GogReport::component_of, py::arg("g"))
        .def("connected", &GogReport::connected);
    m.def(
        "build_gog",
        [](const GraphSpace& space, const DegreeSequence& degseq, int k,
           const std::optional<long>& triangle_count, const std::optional<TriangleSequence>& triangle_seq,
           const py::object& predicate, const std::optional<std::vector<Graph>>& census,
           std::size_t max_census, unsigned jobs) {
            GogSpec spec;
            spec.space = space;
            spec.degseq = degseq;
            spec.swap_arity = k;
            spec.keep = make_filter(triangle_count, triangle_seq, predicate);
            spec.census = census;
            spec.max_census = max_census;
            spec.jobs = spec.keep.custom ? 1 : jobs;
            return build_gog(spec);
        },
        py::arg("space"), py::arg("degseq"), py::kw_only(), py::arg("k") = 2,
        py::arg("triangle_count") = py::none(), py::arg("triangle_seq") = py::none(),
        py::arg("predicate") = py::none(), py::arg("census") = py::none(),
        py::arg("max_census") = kDefaultCensusCap, py::arg("jobs") = 1);
    m.def("components_intersect_classes", &components_intersect_classes, py::arg("report"),
          py::arg("classes"));

    py::class_<Chain>(m, "Chain")
        .def(py::init<Graph, const GraphSpace&, std::uint64_t>(), py::arg("start"), py::arg("space"),
             py::arg("seed"))
        .def("step", &Chain::step)
        .def("run", &Chain::run, py::arg("steps"))
        .def_property_readonly("current", &Chain::current)
        .def_property_readonly("steps_taken", &Chain::steps_taken)
        .def_property_readonly("accepted", &Chain::accepted);
    m.def("proposal_degeneracy", &proposal_degeneracy, py::arg("g"), py::arg("h"));
    m.def("default_burn_in", &default_burn_in, py::arg("edge_count"));
    m.def(
        "sample",
        [](const Graph& g0, const GraphSpace& space, long count, std::uint64_t seed, long burn_in,
           long thin) {
            ChainConfig cfg;
            cfg.space = space;
            cfg.sample_count = count;
            cfg.seed = seed;
            cfg.burn_in = burn_in >= 0 ? burn_in : default_burn_in(g0.edge_count());
            cfg.thin = thin >= 1 ? thin : std::max(1, g0.edge_count());
            return sample(g0, cfg);
        },
        py::arg("g0"), py::arg("space"), py::arg("count"), py::kw_only(), py::arg("seed") = 0,
        py::arg("burn_in") = -1, py::arg("thin") = -1);

    py::class_<UniformityReport>(m, "UniformityReport")
        .def_readonly("statistic", &UniformityReport::statistic)
        .def_readonly("p_value", &UniformityReport::p_value)
        .def_readonly("census_size", &UniformityReport::census_size)
        .def_readonly("sample_count", &UniformityReport::sample_count);
    m.def("uniformity_report", &uniformity_report, py::arg("samples"), py::arg("census"));
}

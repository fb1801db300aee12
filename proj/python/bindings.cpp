#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chow/bounds.hpp"
#include "chow/io.hpp"

namespace py = pybind11;
using namespace chow;

namespace {

Deadline deadline_from(double secs) {
    Deadline dl;
    dl.wall_budget = std::chrono::milliseconds(static_cast<long>(secs * 1000));
    return dl;
}

py::int_ to_py_int(const Integer& v) { return py::int_(py::str(v.get_str())); }

py::dict big_to_dict(const BigNumber& b) {
    py::dict d;
    d["exact"] = b.is_exact() ? py::object(to_py_int(b.value())) : py::object(py::none());
    d["digits"] = to_py_int(b.digit_count());
    d["leading"] = b.leading_digits();
    return d;
}

Integer integer_from(const py::handle& v) { return Integer(py::str(v).cast<std::string>()); }

Rational rational_from(const py::handle& v) { return parse_rational(py::str(v).cast<std::string>()); }

InputFile parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_input_text(in);
}

GeometryInputs geometry_from_kwargs(long n, long rn, const py::object& volK, const py::object& volRK,
                                    const py::object& eps, const py::object& volHrK,
                                    const py::object& N, const py::object& dprime,
                                    const py::object& inters) {
    GeometryInputs g;
    g.n = n;
    g.r_n = rn;
    if (!volK.is_none()) g.vol_K = rational_from(volK);
    if (!volRK.is_none()) g.vol_rK = rational_from(volRK);
    if (!eps.is_none()) g.eps = rational_from(eps);
    if (!volHrK.is_none()) g.vol_H_rnK = rational_from(volHrK);
    if (!N.is_none()) g.N = N.cast<long>();
    if (!dprime.is_none()) g.d_prime = integer_from(dprime);
    if (!inters.is_none()) {
        std::vector<Rational> table;
        for (const auto& item : inters.cast<py::sequence>()) table.push_back(rational_from(item));
        g.intersection_numbers = std::move(table);
    }
    return g;
}

struct SpaceHandle {
    SpacePtr ptr;
};

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Chow forms, graph pushforwards and effective finiteness bounds";

    py::register_exception<Error>(m, "ChowError");

    py::class_<SpaceHandle>(m, "VariableSpace")
        .def(py::init([](const std::vector<std::pair<std::string, int>>& blocks) {
                 std::vector<Block> bs;
                 for (const auto& [name, size] : blocks) bs.push_back({name, size});
                 return SpaceHandle{VariableSpace::make(std::move(bs))};
             }),
             py::arg("blocks"))
        .def_property_readonly("blocks",
                               [](const SpaceHandle& s) {
                                   std::vector<std::pair<std::string, int>> out;
                                   for (const auto& b : s.ptr->blocks()) out.emplace_back(b.name, b.size);
                                   return out;
                               })
        .def("__eq__", [](const SpaceHandle& a, const SpaceHandle& b) { return *a.ptr == *b.ptr; })
        .def("__repr__", [](const SpaceHandle& s) {
            std::string r = "VariableSpace([";
            for (int b = 0; b < s.ptr->block_count(); ++b) {
                if (b) r += ", ";
                r += "(\"" + s.ptr->block(b).name + "\", " + std::to_string(s.ptr->block(b).size) + ")";
            }
            return r + "])";
        });

    py::class_<Poly>(m, "Poly")
        .def("__str__", &Poly::to_string)
        .def("__repr__", [](const Poly& p) { return "Poly(\"" + p.to_string() + "\")"; })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__pow__", [](const Poly& a, int e) { return a.pow(e); })
        .def("__neg__", [](const Poly& a) { return -a; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def_property_readonly("space", [](const Poly& p) { return SpaceHandle{p.space()}; })
        .def("is_zero", &Poly::is_zero)
        .def("term_count", &Poly::term_count)
        .def("total_degree", &Poly::total_degree)
        .def("multidegree", &Poly::multidegree)
        .def("normalized", [](const Poly& p) {
            return p.normalized_primitive(MonomialOrder::lex(p.space()));
        });

    m.def(
        "parse_poly",
        [](const std::string& text, const SpaceHandle& space) { return parse_poly(text, space.ptr); },
        py::arg("text"), py::arg("space"));

    py::class_<ChowForm>(m, "ChowForm")
        .def_readonly("n", &ChowForm::n)
        .def_readonly("k", &ChowForm::k)
        .def_readonly("r", &ChowForm::r)
        .def_readonly("form", &ChowForm::form)
        .def("__repr__", [](const ChowForm& f) {
            return "ChowForm(n=" + std::to_string(f.n) + ", k=" + std::to_string(f.k) +
                   ", r=" + std::to_string(f.r) + ", \"" + f.form.to_string() + "\")";
        });

    py::class_<PushforwardResult>(m, "PushforwardResult")
        .def_readonly("k", &PushforwardResult::k)
        .def_readonly("d", &PushforwardResult::d)
        .def_readonly("chow", &PushforwardResult::chow)
        .def_readonly("root", &PushforwardResult::root)
        .def_readonly("note", &PushforwardResult::note);

    m.def(
        "chow_form",
        [](const std::string& cycle_text, double deadline_secs) {
            return chow_form_cycle(to_cycle(parse_text(cycle_text)), deadline_from(deadline_secs));
        },
        py::arg("cycle_text"), py::arg("deadline_secs") = 60.0,
        "Chow form of a cycle given in the structured text format");

    m.def(
        "meets",
        [](const ChowForm& f, const std::vector<std::vector<py::object>>& flags) {
            std::vector<std::vector<Rational>> converted;
            for (const auto& row : flags) {
                std::vector<Rational> v;
                for (const auto& c : row) v.push_back(rational_from(c));
                converted.push_back(std::move(v));
            }
            return meets(f, converted);
        },
        py::arg("form"), py::arg("flags"));

    m.def(
        "phi", [](long n, const py::object& k, long r) { return to_py_int(phi(n, integer_from(k), r)); },
        py::arg("n"), py::arg("k"), py::arg("r"));

    m.def(
        "chow_membership_equations",
        [](int n, int k, int r, const std::string& ideal_text, double deadline_secs) {
            IdealGens S = to_ideal(parse_text(ideal_text));
            return chow_membership_equations(n, k, r, S, deadline_from(deadline_secs));
        },
        py::arg("n"), py::arg("k"), py::arg("r"), py::arg("ideal_text"),
        py::arg("deadline_secs") = 60.0);

    m.def(
        "second_degree",
        [](const std::string& graph_text, double deadline_secs, uint64_t seed) {
            return second_degree(to_graph(parse_text(graph_text)), deadline_from(deadline_secs), seed);
        },
        py::arg("graph_text"), py::arg("deadline_secs") = 60.0, py::arg("seed") = kDefaultSeed);

    m.def(
        "pushforward",
        [](const std::string& graph_text, double deadline_secs, uint64_t seed) {
            return pushforward_chow(to_graph(parse_text(graph_text)), deadline_from(deadline_secs),
                                    seed);
        },
        py::arg("graph_text"), py::arg("deadline_secs") = 60.0, py::arg("seed") = kDefaultSeed);

    m.def(
        "dth_root",
        [](const Poly& g, int d) -> py::object {
            auto root = dth_root(g, d, MonomialOrder::lex(g.space()));
            if (!root) return py::none();
            return py::cast(*root);
        },
        py::arg("poly"), py::arg("d"));

    m.def(
        "compose",
        [](const std::string& h_text, const std::string& g_text, double deadline_secs) {
            IdealGens out = compose(to_graph(parse_text(h_text)), to_graph(parse_text(g_text)),
                                    deadline_from(deadline_secs));
            return out.gens;
        },
        py::arg("h_graph_text"), py::arg("g_graph_text"), py::arg("deadline_secs") = 60.0);

    m.def(
        "eliminate",
        [](const std::string& ideal_text, const std::vector<std::string>& drop, bool saturated,
           double deadline_secs) {
            IdealGens I = to_ideal(parse_text(ideal_text));
            IdealGens out = saturated ? eliminate_saturated(I, drop, deadline_from(deadline_secs))
                                      : eliminate(I, drop, deadline_from(deadline_secs));
            return out.gens;
        },
        py::arg("ideal_text"), py::arg("drop"), py::arg("saturated") = false,
        py::arg("deadline_secs") = 60.0);

    m.def(
        "groebner_basis",
        [](const std::string& ideal_text, double deadline_secs) {
            IdealGens I = to_ideal(parse_text(ideal_text));
            return buchberger(I, MonomialOrder::grevlex(I.space), deadline_from(deadline_secs)).basis;
        },
        py::arg("ideal_text"), py::arg("deadline_secs") = 60.0);

    // bound calculators
    m.def(
        "delta", [](long r, const py::object& d) { return big_to_dict(delta(r, integer_from(d))); },
        py::arg("r"), py::arg("d"));
    m.def(
        "delta_prime",
        [](long r, const py::object& d) { return big_to_dict(delta_prime(r, integer_from(d))); },
        py::arg("r"), py::arg("d"));
    m.def(
        "delta_iter",
        [](long k, long r, const py::object& d) {
            return big_to_dict(delta_iter(k, r, integer_from(d)));
        },
        py::arg("k"), py::arg("r"), py::arg("d"));
    m.def(
        "Delta",
        [](long n, long k, long r, const py::object& dprime) {
            return big_to_dict(Delta(n, k, r, integer_from(dprime)));
        },
        py::arg("n"), py::arg("k"), py::arg("r"), py::arg("d_prime"));

    m.def(
        "total_bound",
        [](long n, long rn, const py::object& volK, const py::object& volRK, const py::object& eps,
           const py::object& volHrK, const py::object& N, const py::object& dprime,
           const py::object& inters, const py::object& M, const py::object& gamma, long digit_cap) {
            GeometryInputs g =
                geometry_from_kwargs(n, rn, volK, volRK, eps, volHrK, N, dprime, inters);
            BigCfg cfg;
            cfg.digit_cap = static_cast<size_t>(digit_cap);
            std::optional<Integer> Mv, Gv;
            if (!M.is_none()) Mv = integer_from(M);
            if (!gamma.is_none()) Gv = integer_from(gamma);
            BoundReport rep = total_bound(g, Mv, Gv, cfg);
            py::dict out;
            out["d_V"] = to_py_int(rep.d_V);
            out["M_V"] = to_py_int(rep.M_V);
            out["gamma_X"] = to_py_int(rep.gamma_X);
            out["M_bar"] = to_py_int(rep.M_bar);
            out["C"] = to_py_int(rep.C);
            out["D"] = big_to_dict(rep.D);
            out["B"] = big_to_dict(rep.B);
            py::dict prov;
            for (const auto& [k2, v2] : rep.provenance) prov[py::str(k2)] = v2;
            out["formulas"] = prov;
            return out;
        },
        py::arg("n"), py::arg("rn"), py::arg("volK") = py::none(), py::arg("volRK") = py::none(),
        py::arg("eps") = py::none(), py::arg("volHrK") = py::none(), py::arg("N") = py::none(),
        py::arg("dprime") = py::none(), py::arg("inters") = py::none(), py::arg("M") = py::none(),
        py::arg("gamma") = py::none(), py::arg("digit_cap") = 1000000);

    m.def(
        "embedding_bounds",
        [](long n, long rn, const py::object& volK, const py::object& volRK) {
            GeometryInputs g = geometry_from_kwargs(n, rn, volK, volRK, py::none(), py::none(),
                                                    py::none(), py::none(), py::none());
            auto [d_V, M_V] = embedding_bounds(g);
            return py::make_tuple(to_py_int(d_V), to_py_int(M_V));
        },
        py::arg("n"), py::arg("rn"), py::arg("volK") = py::none(), py::arg("volRK") = py::none());

    m.def(
        "graph_degree_bound",
        [](long n, long rn, const std::string& which, const py::object& volK,
           const py::object& volHrK, const py::object& inters) {
            GeometryInputs g = geometry_from_kwargs(n, rn, volK, py::none(), py::none(), volHrK,
                                                    py::none(), py::none(), inters);
            GraphBoundCase c;
            if (which == "general") c = GraphBoundCase::general;
            else if (which == "nef") c = GraphBoundCase::nef;
            else if (which == "pluricanonical") c = GraphBoundCase::pluricanonical;
            else fail(Errc::invalid_argument, "unknown case '" + which + "'");
            return to_py_int(graph_degree_bound(g, c));
        },
        py::arg("n"), py::arg("rn"), py::arg("case") = "pluricanonical",
        py::arg("volK") = py::none(), py::arg("volHrK") = py::none(),
        py::arg("inters") = py::none());

    m.attr("DEFAULT_SEED") = kDefaultSeed;
}

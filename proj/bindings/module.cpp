#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wordmeas/characters.hpp"
#include "wordmeas/complex.hpp"
#include "wordmeas/divisibility.hpp"
#include "wordmeas/group.hpp"
#include "wordmeas/measure.hpp"
#include "wordmeas/so3.hpp"
#include "wordmeas/word.hpp"
#include "wordmeas/zeta.hpp"

namespace py = pybind11;
namespace wm = wordmeas;

namespace {

py::object int_from_string(const std::string& s) {
    return py::module_::import("builtins").attr("int")(s);
}

py::list counts_to_python(const wm::WordDistribution& d) {
    py::list out;
    for (wm::Count c : d.counts) out.append(int_from_string(wm::count_to_string(c)));
    return out;
}

py::object mpq_to_fraction(const mpq_class& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(int_from_string(q.get_num().get_str()), int_from_string(q.get_den().get_str()));
}

}  // namespace

PYBIND11_MODULE(_wordmeas, m) {
    m.doc() = "Word-induced measures on finite groups and SO(3)";

    py::class_<wm::Word>(m, "Word")
        .def(py::init([](const std::string& text) { return wm::parse_word(text); }), py::arg("text"))
        .def_property_readonly("arity", &wm::Word::arity)
        .def("__len__", &wm::Word::size)
        .def("__str__", &wm::format_word)
        .def("__repr__",
             [](const wm::Word& w) { return "Word('" + wm::format_word(w) + "')"; })
        .def("__eq__", [](const wm::Word& a, const wm::Word& b) { return a == b; })
        .def("with_arity", &wm::Word::with_arity)
        .def("inverse", &wm::Word::inverse)
        .def("free_reduce", [](const wm::Word& w) { return wm::free_reduce(w); })
        .def("cyclic_reduce", [](const wm::Word& w) { return wm::cyclic_reduce(w); })
        .def("connected_sum",
             [](const wm::Word& a, const wm::Word& b) { return wm::connected_sum(a, b); });

    m.def("parse_word", &wm::parse_word, py::arg("text"));
    m.def("format_word", &wm::format_word);

    py::class_<wm::SurfaceClass>(m, "SurfaceClass")
        .def(py::init([](bool orientable, int genus_or_crosscaps) {
                 wm::SurfaceClass s;
                 s.orientable = orientable;
                 s.genus_or_crosscaps = genus_or_crosscaps;
                 s.euler_characteristic =
                     orientable ? 2 - 2 * genus_or_crosscaps : 2 - genus_or_crosscaps;
                 return s;
             }),
             py::arg("orientable"), py::arg("genus_or_crosscaps"))
        .def_readonly("orientable", &wm::SurfaceClass::orientable)
        .def_readonly("euler_characteristic", &wm::SurfaceClass::euler_characteristic)
        .def_readonly("genus_or_crosscaps", &wm::SurfaceClass::genus_or_crosscaps);

    m.def("is_closed_surface", &wm::is_closed_surface);
    m.def("classify_surface", &wm::classify_surface);
    m.def("same_surface_class", &wm::same_surface_class);
    m.def("canonical_surface_word", &wm::canonical_surface_word);
    m.def("complex_cells", [](const wm::Word& w) {
        wm::WordComplex c = wm::build_complex(w);
        return py::make_tuple(c.vertex_count, c.edge_count, wm::WordComplex::face_count);
    });

    py::class_<wm::FiniteGroup>(m, "FiniteGroup")
        .def_property_readonly("order", &wm::FiniteGroup::order)
        .def_property_readonly("name", &wm::FiniteGroup::name)
        .def("mul", &wm::FiniteGroup::mul)
        .def("inv", &wm::FiniteGroup::inv);

    m.def("preset", &wm::preset, py::arg("name"));
    m.def("preset_names", &wm::preset_names);
    m.def("load_group", &wm::load_group);
    m.def("from_multiplication_table",
          [](const std::vector<std::vector<int>>& rows, const std::string& name) {
              return wm::from_multiplication_table(rows, name);
          },
          py::arg("rows"), py::arg("name") = "G");
    m.def("from_permutation_generators",
          [](const std::vector<std::vector<int>>& gens, const std::string& name) {
              return wm::from_permutation_generators(gens, name);
          },
          py::arg("generators"), py::arg("name") = "G");
    m.def("evaluate", &wm::evaluate, py::arg("word"), py::arg("group"), py::arg("tuple"));

    py::class_<wm::CharacterTable>(m, "CharacterTable")
        .def_readonly("degrees", &wm::CharacterTable::degrees)
        .def_readonly("values", &wm::CharacterTable::values)
        .def_property_readonly("class_sizes",
                               [](const wm::CharacterTable& T) { return T.classes.sizes; });

    m.def("compute_character_table", &wm::compute_character_table);
    m.def("fs_indicator", &wm::fs_indicator);
    m.def("load_chartab", [](const std::string& path, const wm::FiniteGroup& G) {
        wm::CharacterTable T = wm::load_chartab(path);
        wm::attach_group(T, G);
        return T;
    });
    m.def("save_chartab", &wm::save_chartab);

    m.def("distribution",
          [](const wm::FiniteGroup& G, const wm::Word& w, double budget) {
              return counts_to_python(wm::brute_force_distribution(G, w, budget));
          },
          py::arg("group"), py::arg("word"), py::arg("budget") = 1e8);
    m.def("count_solutions",
          [](const wm::FiniteGroup& G, const wm::Word& w, double budget) {
              return int_from_string(wm::count_to_string(wm::count_solutions(G, w, budget)));
          },
          py::arg("group"), py::arg("word"), py::arg("budget") = 1e8);
    m.def("count_via_zeta",
          [](const wm::FiniteGroup& G, const wm::CharacterTable& T, const wm::Word& w) {
              return int_from_string(wm::count_via_zeta(G, T, w).get_str());
          });
    m.def("word_indicator", &wm::word_indicator_bruteforce, py::arg("group"), py::arg("table"),
          py::arg("word"), py::arg("irreducible"), py::arg("budget") = 1e8);
    m.def("surface_indicator",
          [](const wm::CharacterTable& T, int i, const wm::SurfaceClass& s,
             const wm::FiniteGroup& G) { return mpq_to_fraction(wm::surface_indicator(T, i, s, G)); });
    m.def("commuting_probability",
          [](const wm::FiniteGroup& G) { return mpq_to_fraction(wm::commuting_probability(G)); });

    m.def("zeta_finite", [](const std::vector<int>& degrees, long s) {
        return mpq_to_fraction(wm::zeta_finite(degrees, s));
    });
    m.def("zeta_finite_real", &wm::zeta_finite_real);
    m.def("riemann_zeta", &wm::riemann_zeta);
    m.def("so3_zeta", &wm::so3_zeta);
    m.def("group_stats", [](const std::vector<int>& degrees, long order) {
        wm::GroupStats st = wm::group_stats(degrees, order);
        py::dict out;
        out["derived_index"] = st.derived_index;
        out["avg_class_size"] = mpq_to_fraction(st.avg_class_size);
        out["max_dim"] = st.max_dim;
        out["max_dim_count"] = st.max_dim_count;
        out["num_classes"] = st.num_classes;
        return out;
    });

    m.def("so3_density_at_identity",
          [](const wm::Word& w, std::uint64_t seed, std::uint64_t n, double eps) {
              wm::DensityEstimate est = wm::density_at_identity(w, {n, eps, seed});
              py::dict out;
              out["estimate"] = est.estimate;
              out["std_error"] = est.std_error;
              out["hits"] = est.hits;
              return out;
          },
          py::arg("word"), py::arg("seed"), py::arg("n") = 1000000, py::arg("eps") = 0.2);

    m.def("power_sums_integral", [](const std::vector<std::pair<long, long>>& fractions, long k_max) {
        std::vector<mpq_class> values;
        for (auto [num, den] : fractions) values.emplace_back(num, den);
        wm::PowerSumResult r = wm::power_sums_integral(values, k_max);
        return py::make_tuple(r.all_integral,
                              r.first_failing_k ? py::cast(*r.first_failing_k) : py::none());
    });
    m.def("verify_dim_divides_order", &wm::verify_dim_divides_order);
}

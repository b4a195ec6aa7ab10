#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tworat/classify.hpp"
#include "tworat/quadforms.hpp"
#include "tworat/rayclass.hpp"
#include "tworat/serialize.hpp"
#include "tworat/tower.hpp"
#include "tworat/towerdec.hpp"

namespace py = pybind11;
using namespace tworat;

namespace {

py::int_ to_pyint(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    py::int_ hi(static_cast<unsigned long long>(u >> 64));
    py::int_ lo(static_cast<unsigned long long>(u));
    py::object r = (hi.attr("__lshift__")(64)).attr("__or__")(lo);
    if (neg) r = r.attr("__neg__")();
    return r;
}

py::object json_to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

StepChoice choice_of(const std::string& c) {
    const auto word = parse_choices(c);
    if (word.size() != 1) throw InvalidArgument("choice must be 'P' or 'Q'");
    return word.front();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Classification of 2-rational and 2-birational multiquadratic number fields";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
    py::register_exception<EffortBoundExceeded>(m, "EffortBoundExceeded", base.ptr());
    py::register_exception<HypothesisViolation>(m, "HypothesisViolation", base.ptr());
    py::register_exception<TheoremViolation>(m, "TheoremViolation", base.ptr());

    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("jacobi", &jacobi, py::arg("a"), py::arg("n"));
    m.def("kronecker", &kronecker, py::arg("D"), py::arg("m"));
    m.def("v2", &v2, py::arg("n"));
    m.def("squarefree_part", [](i64 n) {
        auto [s, f] = squarefree_decompose(n);
        return py::make_tuple(s.value(), f);
    }, py::arg("n"));

    m.def("primitivity", [](i64 q) { return primitivity_over_Q(OddPrime(q)).name(); }, py::arg("q"));
    m.def("decomposition_profile", [](i64 q, int depth) {
        std::vector<std::tuple<int, i64, i64>> out;
        for (const auto& l : decomposition_profile(OddPrime(q), depth).levels) out.emplace_back(l.n, l.f, l.g);
        return out;
    }, py::arg("q"), py::arg("depth") = kDefaultTowerDepth);
    m.def("place_primitivity_in_quadratic", [](i64 mm, i64 q, int depth) {
        const auto info = place_primitivity_in_quadratic(mm, OddPrime(q), depth);
        return py::make_tuple(to_string(info.splitting),
                              info.place_class ? py::object(py::str(info.place_class->name())) : py::object(py::none()));
    }, py::arg("m"), py::arg("q"), py::arg("depth") = kDefaultTowerDepth);

    py::class_<MultiquadField>(m, "Field")
        .def(py::init([](const std::vector<i64>& gens) { return make_field(gens); }), py::arg("gens"))
        .def_static("parse", [](const std::string& s) { return parse_field(s); })
        .def_property_readonly("basis", &MultiquadField::basis_values)
        .def_property_readonly("degree", &MultiquadField::degree)
        .def_property_readonly("is_imaginary", &MultiquadField::is_imaginary)
        .def_property_readonly("odd_primes", &MultiquadField::odd_primes)
        .def("real_subfield", &MultiquadField::real_subfield)
        .def("adjoin_sqrt2", [](const MultiquadField& F) { return adjoin_sqrt2(F); })
        .def("quadratic_subfields", [](const MultiquadField& F) {
            std::vector<i64> out;
            for (const auto& s : quadratic_subfields(F)) out.push_back(s.value());
            return out;
        })
        .def("contains", py::overload_cast<i64>(&MultiquadField::contains, py::const_))
        .def("__eq__", [](const MultiquadField& a, const MultiquadField& b) { return a == b; })
        .def("__hash__", [](const MultiquadField& F) { return std::hash<MultiquadField>{}(F); })
        .def("__str__", &MultiquadField::to_string)
        .def("__repr__", [](const MultiquadField& F) { return "Field(<" + F.to_string() + ">)"; });

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("positive", &Verdict::positive)
        .def_property_readonly("tag", [](const Verdict& v) { return to_string(v.tag); })
        .def_property_readonly("reason", [](const Verdict& v) {
            return v.reason.empty() ? py::object(py::none()) : py::object(py::str(v.reason));
        })
        .def_property_readonly("evidence", [](const Verdict& v) { return json_to_py(to_json(v)["evidence"]); })
        .def("__bool__", [](const Verdict& v) { return v.positive; })
        .def("__repr__", [](const Verdict& v) {
            return std::string("Verdict(") + (v.positive ? "True" : "False") + ", " + to_string(v.tag) + ")";
        });

    m.def("is_2rational_multiquadratic", &is_2rational_multiquadratic, py::arg("field"));
    m.def("is_2birational_quadratic", &is_2birational_quadratic, py::arg("d"));
    m.def("is_2birational_multiquadratic", &is_2birational_multiquadratic, py::arg("field"));

    py::class_<ClassGroup>(m, "ClassGroup")
        .def_property_readonly("discriminant", &ClassGroup::discriminant)
        .def("__len__", &ClassGroup::size)
        .def_property_readonly("forms", [](const ClassGroup& G) {
            std::vector<std::tuple<i64, i64, i64>> out;
            for (const auto& f : G.elements()) out.emplace_back(f.a, f.b, f.c);
            return out;
        })
        .def_property_readonly("invariant_factors", [](const ClassGroup& G) { return G.structure().invariant_factors; })
        .def_property_readonly("two_rank", [](const ClassGroup& G) { return G.structure().rank_at(2); })
        .def_property_readonly("dyadic_class_orders", &ClassGroup::dyadic_class_orders)
        .def("compose", &ClassGroup::compose)
        .def("inverse", &ClassGroup::inverse)
        .def("order", &ClassGroup::order)
        .def("wide_class_count", &ClassGroup::wide_class_count);

    m.def("narrow_class_group", [](i64 D) { return narrow_class_group(D); }, py::arg("D"));
    m.def("fundamental_unit", [](i64 mm) {
        const auto u = fundamental_unit(mm);
        return py::make_tuple(to_pyint(u.x), to_pyint(u.y), u.norm_sign);
    }, py::arg("m"));
    m.def("genus_2rank", &genus_2rank, py::arg("D"));
    m.def("verify_2rational_quadratic", [](i64 mm) { return verify_2rational_quadratic(mm); }, py::arg("m"));
    m.def("verify_2birational_quadratic_oracle", [](i64 d) {
        const auto r = verify_2birational_quadratic_oracle(d);
        return py::make_tuple(r.two_dyadic, r.class_condition ? py::object(py::bool_(*r.class_condition)) : py::object(py::none()));
    }, py::arg("d"));

    m.def("units_mod", [](i64 M) {
        std::vector<std::pair<i64, i64>> out;
        for (const auto& g : units_mod(M).generators) out.emplace_back(g.residue, g.order);
        return out;
    }, py::arg("M"));
    m.def("gal_N", [](i64 p, i64 q, int k_max) { return json_to_py(to_json(gal_N(OddPrime(p), OddPrime(q), k_max))); },
          py::arg("p"), py::arg("q"), py::arg("k_max") = 12);
    m.def("find_K_prime", [](i64 p, i64 q) { return find_K_prime(OddPrime(p), OddPrime(q)).value(); }, py::arg("p"), py::arg("q"));
    m.def("verify_mirror", [](i64 q, i64 p) { return verify_mirror(OddPrime(q), OddPrime(p)); }, py::arg("q"), py::arg("p"));
    m.def("reflection_identity", [](i64 p, i64 q) {
        const auto r = reflection_identity(OddPrime(p), OddPrime(q));
        return py::make_tuple(r.rank_T_S, r.rank_mirror);
    }, py::arg("p"), py::arg("q"));

    m.def("plan_tower", [](i64 p, i64 q, const std::string& choices, bool realize) {
        return json_to_py(to_json(plan_tower(OddPrime(p), OddPrime(q), choices, realize)));
    }, py::arg("p"), py::arg("q"), py::arg("choices"), py::arg("realize") = false);
    m.def("realize_step1", [](i64 p, i64 q, const std::string& choice) {
        const auto r = realize_step1(OddPrime(p), OddPrime(q), choice_of(choice));
        return py::make_tuple(r.Kprime.value(), r.Lprime, r.verdict);
    }, py::arg("p"), py::arg("q"), py::arg("choice"));
}

#include "weilrep/serialize.hpp"
#include "weilrep/suites.hpp"
#include "weilrep/weil_odd.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace weilrep;

namespace {

const GaloisField* field_of(int q) {
    for (int p = 2; p <= q; ++p) {
        bool prime = true;
        for (int t = 2; t * t <= p; ++t)
            if (p % t == 0) prime = false;
        if (!prime) continue;
        int qq = p, d = 1;
        while (qq < q) {
            qq *= p;
            ++d;
        }
        if (qq == q) return GaloisField::get(p, d);
    }
    throw std::invalid_argument("q is not a prime power");
}

Cyclotomic gauss_sum(int q, int twist) {
    if (q % 2 == 0) throw std::invalid_argument("the Gauss sum needs odd q");
    const auto* F = field_of(q);
    SymplecticSpace sp(F, 1);
    auto ms = std::make_shared<MultiplicativeStructure>(F);
    return SchrodingerModel(sp, ms, twist).gauss_sum();
}

py::dict check_to_dict(const CheckResult& c) {
    py::dict d;
    d["name"] = c.name;
    d["pass"] = c.pass;
    d["skipped"] = c.skipped;
    d["witness"] = c.witness;
    d["millis"] = c.millis;
    return d;
}

py::dict verify(const std::string& parameter_case, const std::vector<std::string>& suites, int q, int m, int d,
                bool exhaustive, long long budget) {
    SuiteOptions opts;
    opts.q = q;
    opts.m = m;
    opts.d = d;
    opts.exhaustive = exhaustive;
    if (budget > 0) opts.char_budget = budget;
    const SuiteReport report = run_suites(parameter_case, suites, opts);
    py::list checks;
    for (const auto& c : report.checks) checks.append(check_to_dict(c));
    py::dict out;
    out["scenario"] = report.scenario;
    out["checks"] = checks;
    out["pass"] = report.all_pass();
    return out;
}

std::string dump_object(const std::string& object, int q, int m, int d) {
    if (object == "gauss-sum")
        return dump_deterministic(artifact("gauss-sum", Json{{"q", q}}, cyclotomic_to_json(gauss_sum(q, 1))));
    if (object == "odd-generators") {
        const auto* F = field_of(q);
        OddScenario s(F, m);
        auto mod = s.model();
        FMatrix b(F, m), a(F, m);
        for (int i = 0; i < m; ++i) {
            b.at(i, i) = 1;
            a.at(i, i) = s.ms().generator();
        }
        Json data;
        data["U"] = matrix_to_json(mod->op_token({GenToken::U, b.a}));
        data["D"] = matrix_to_json(mod->op_token({GenToken::D, a.a}));
        data["Omega"] = matrix_to_json(mod->op_token({GenToken::Omega, {}}));
        return dump_deterministic(artifact("odd-generators", Json{{"q", q}, {"m", m}}, std::move(data)));
    }
    (void)d;
    throw std::invalid_argument("unknown object '" + object + "' (gauss-sum | odd-generators)");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact Weil representations of finite symplectic groups: cyclotomic scalars and verification suites";

    py::class_<Cyclotomic>(mod, "Cyclotomic")
        .def(py::init<long long>(), py::arg("n") = 0)
        .def_static("root_of_unity", &Cyclotomic::root_of_unity, py::arg("n"), py::arg("k") = 1)
        .def_static("rational", [](const std::string& num, const std::string& den) {
            return Cyclotomic(Rat(BigInt(num), BigInt(den)));
        })
        .def("conductor", &Cyclotomic::conductor)
        .def("coeffs",
             [](const Cyclotomic& c) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const Rat& r : c.coeffs()) out.emplace_back(rat_num(r).str(), rat_den(r).str());
                 return out;
             })
        .def("conj", &Cyclotomic::conj)
        .def("inverse", &Cyclotomic::inverse)
        .def("pow", &Cyclotomic::pow)
        .def("is_zero", &Cyclotomic::is_zero)
        .def("is_rational", &Cyclotomic::is_rational)
        .def("as_root_of_unity",
             [](const Cyclotomic& c) -> py::object {
                 const auto r = c.as_root_of_unity();
                 if (!r) return py::none();
                 return py::make_tuple(r->first, r->second);
             })
        .def("__add__", [](const Cyclotomic& a, const Cyclotomic& b) { return a + b; })
        .def("__sub__", [](const Cyclotomic& a, const Cyclotomic& b) { return a - b; })
        .def("__mul__", [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; })
        .def("__truediv__", [](const Cyclotomic& a, const Cyclotomic& b) { return a / b; })
        .def("__neg__", [](const Cyclotomic& a) { return -a; })
        .def("__eq__", [](const Cyclotomic& a, const Cyclotomic& b) { return a == b; })
        .def("__repr__", [](const Cyclotomic& a) { return "Cyclotomic(" + a.str() + ")"; })
        .def("__str__", &Cyclotomic::str);

    mod.def("gauss_sum", &gauss_sum, py::arg("q"), py::arg("twist") = 1,
            "the quadratic Gauss sum normalizing the Fourier operator");
    mod.def("verify", &verify, py::arg("parameter_case"), py::arg("suites"), py::arg("q") = 3, py::arg("m") = 1,
            py::arg("d") = 1, py::arg("exhaustive") = false, py::arg("budget") = 0,
            "run verification suites and return the report");
    mod.def("list_suites", [] {
        py::list out;
        for (const auto& info : list_suites()) {
            py::dict d;
            d["name"] = info.name;
            d["case"] = info.parameter_case;
            d["description"] = info.description;
            out.append(d);
        }
        return out;
    });
    mod.def("dump_json", &dump_object, py::arg("object"), py::arg("q") = 3, py::arg("m") = 1, py::arg("d") = 1,
            "serialize an object to the versioned JSON schema");
}

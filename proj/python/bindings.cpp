#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>

#include "zbrace/brace.hpp"
#include "zbrace/classification.hpp"
#include "zbrace/errors.hpp"
#include "zbrace/gl2z.hpp"
#include "zbrace/json_io.hpp"
#include "zbrace/ybe.hpp"

namespace py = pybind11;
using namespace zbrace;

namespace {

using PyMat = std::array<std::array<std::int64_t, 2>, 2>;
using PyVec = std::array<std::int64_t, 2>;

Mat2 to_mat(const PyMat& m) { return {m[0][0], m[0][1], m[1][0], m[1][1]}; }
PyMat from_mat(const Mat2& m) { return {{{m.a11, m.a12}, {m.a21, m.a22}}}; }
Vec2 to_vec(const PyVec& v) { return {v[0], v[1]}; }
PyVec from_vec(const Vec2& v) { return {v.x1, v.x2}; }

py::object to_py(const json::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::optional<int> order_value(const MatOrder& o) {
    if (!o.is_finite()) return std::nullopt;
    return o.value();
}

}  // namespace

PYBIND11_MODULE(zbrace, m) {
    m.doc() = "Exact engine for lambda-homomorphic braces on Z^2";

    static py::exception<Error> base(m, "Error");
    py::register_exception<OverflowError>(m, "IntegerOverflow", base.ptr());
    py::register_exception<NotUnimodular>(m, "NotUnimodular", base.ptr());
    py::register_exception<UnsupportedOrder>(m, "UnsupportedOrder", base.ptr());
    py::register_exception<InvalidSpec>(m, "InvalidSpec", base.ptr());
    py::register_exception<IntegralityError>(m, "IntegralityError", base.ptr());
    py::register_exception<GcdError>(m, "GcdError", base.ptr());
    py::register_exception<BadParams>(m, "BadParams", base.ptr());

    m.def("mat_mul", [](const PyMat& a, const PyMat& b) { return from_mat(mat_mul(to_mat(a), to_mat(b))); });
    m.def("mat_inv", [](const PyMat& a) { return from_mat(mat_inv(to_mat(a))); });
    m.def("mat_pow", [](const PyMat& a, std::int64_t k) { return from_mat(mat_pow(to_mat(a), k)); });
    m.def("mat_det", [](const PyMat& a) { return mat_det(to_mat(a)); });
    m.def("mat_trace", [](const PyMat& a) { return mat_trace(to_mat(a)); });
    m.def("order_by_predicate", [](const PyMat& a) { return order_value(order_by_predicate(to_mat(a))); },
          "Order of a GL2(Z) matrix; None when infinite.");
    m.def("order_by_iteration",
          [](const PyMat& a, int cutoff) { return order_value(order_by_iteration(to_mat(a), cutoff)); },
          py::arg("a"), py::arg("cutoff") = 12);
    m.def("centralizer_finite", [](const PyMat& a) {
        std::vector<PyMat> out;
        for (const Mat2& c : centralizer_finite(to_mat(a))) out.push_back(from_mat(c));
        return out;
    });

    m.def("check_pair", [](const PyMat& phi, const PyMat& psi) {
        return to_py(json::to_json(check_pair(BraceSpec{to_mat(phi), to_mat(psi)})));
    });
    m.def("lambda_of", [](const PyMat& phi, const PyMat& psi, const PyVec& a) {
        return from_mat(lambda_of(BraceSpec{to_mat(phi), to_mat(psi)}, to_vec(a)));
    });
    m.def("odot", [](const PyMat& phi, const PyMat& psi, const PyVec& a, const PyVec& b) {
        return from_vec(odot(BraceSpec{to_mat(phi), to_mat(psi)}, to_vec(a), to_vec(b)));
    });
    m.def("odot_inverse", [](const PyMat& phi, const PyMat& psi, const PyVec& a) {
        return from_vec(odot_inverse(BraceSpec{to_mat(phi), to_mat(psi)}, to_vec(a)));
    });
    m.def("r_map", [](const PyMat& phi, const PyMat& psi, const PyVec& x, const PyVec& y) {
        const ValidBrace brace{BraceSpec{to_mat(phi), to_mat(psi)}};
        const PairZ2 r = r_map(brace, to_vec(x), to_vec(y));
        return std::make_pair(from_vec(r.first), from_vec(r.second));
    });

    m.def("row_membership", [](const PyMat& phi, const PyMat& psi) {
        std::vector<std::string> out;
        for (RowLabel r : row_membership(BraceSpec{to_mat(phi), to_mat(psi)})) out.emplace_back(row_name(r));
        return out;
    });
    m.def(
        "generate_row",
        [](const std::string& row, std::optional<std::int64_t> mm, std::optional<std::int64_t> p,
           std::optional<std::int64_t> q, std::optional<std::int64_t> n, std::optional<int> sign1,
           std::optional<int> sign2) {
            const auto label = parse_row(row);
            if (!label) throw BadParams("unknown row '" + row + "'");
            const BraceSpec spec = generate_row(*label, RowParams{mm, p, q, n, sign1, sign2});
            return std::make_pair(from_mat(spec.phi()), from_mat(spec.psi()));
        },
        py::arg("row"), py::kw_only(), py::arg("m") = py::none(), py::arg("p") = py::none(),
        py::arg("q") = py::none(), py::arg("n") = py::none(), py::arg("sign1") = py::none(),
        py::arg("sign2") = py::none());

    m.def(
        "exhaustive_search",
        [](std::int64_t bound, unsigned threads) {
            SearchReport report;
            {
                py::gil_scoped_release release;
                report = exhaustive_search(bound, threads);
            }
            return to_py(json::to_json(report));
        },
        py::arg("bound"), py::arg("threads") = 1);
    m.def("orders_crosscheck", [](std::int64_t bound) { return to_py(json::to_json(orders_crosscheck(bound))); });
    m.def(
        "ybe_suite",
        [](const PyMat& phi, const PyMat& psi, std::size_t samples, std::uint64_t seed, std::int64_t box) {
            const ValidBrace brace{BraceSpec{to_mat(phi), to_mat(psi)}};
            return to_py(json::to_json(run_ybe_suite(brace, samples, seed, box)));
        },
        py::arg("phi"), py::arg("psi"), py::arg("samples") = 1000, py::arg("seed") = 1, py::arg("box") = 4);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aqrook/identities.hpp"
#include "aqrook/suite.hpp"

namespace py = pybind11;
using namespace aqrook;

namespace {

py::dict report_to_dict(const VerificationReport& report) {
    py::dict params;
    for (const auto& [k, v] : report.params) params[py::str(k)] = v;
    py::dict out;
    out["identity"] = report.identity;
    out["params"] = params;
    out["holds"] = report.holds;
    out["elapsed_ms"] = report.elapsed_ms;
    if (report.witness)
        out["witness"] = py::make_tuple(report.witness->first, report.witness->second);
    else
        out["witness"] = py::none();
    return out;
}

Monomial tuple_to_monomial(const std::tuple<int, int, int>& t) {
    return Monomial{std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

}  // namespace

PYBIND11_MODULE(_aqrook, m) {
    m.doc() = "exact (a;q)-rook numbers and hypergeometric identity checks";

    // Later registrations are matched first, so the derived class follows
    // the base.
    py::register_exception<Error>(m, "AqrookError", PyExc_ValueError);
    py::register_exception<DivisionByZero>(m, "DivisionByZeroError", PyExc_ZeroDivisionError);

    py::class_<RatExpr>(m, "RatExpr")
        .def(py::init([](const std::string& text) { return RatExpr::parse(text); }),
             py::arg("text"), "Parse the canonical text form.")
        .def(py::init([](long value) { return RatExpr(value); }), py::arg("value"))
        .def("__str__", &RatExpr::to_string)
        .def("__repr__", [](const RatExpr& x) { return "RatExpr('" + x.to_string() + "')"; })
        .def("__eq__", [](const RatExpr& x, const RatExpr& y) { return ratexpr_equal(x, y); },
             py::is_operator())
        .def("__add__", [](const RatExpr& x, const RatExpr& y) { return x + y; })
        .def("__sub__", [](const RatExpr& x, const RatExpr& y) { return x - y; })
        .def("__mul__", [](const RatExpr& x, const RatExpr& y) { return x * y; })
        .def("__truediv__", [](const RatExpr& x, const RatExpr& y) { return x / y; })
        .def("__neg__", [](const RatExpr& x) { return -x; })
        .def("is_zero", &RatExpr::is_zero)
        .def(
            "eval",
            [](const RatExpr& x, const std::string& s, const std::string& b,
               const std::string& Z) {
                return x.eval(parse_rational(s), parse_rational(b), parse_rational(Z))
                    .get_str();
            },
            py::arg("s"), py::arg("b"), py::arg("Z"),
            "Exact evaluation at a rational point; arguments and result are "
            "strings like '-2/3'.");

    py::class_<FerrersBoard>(m, "FerrersBoard")
        .def_property_readonly("heights", &FerrersBoard::heights)
        .def_property_readonly("columns", &FerrersBoard::columns)
        .def("cell_count", &FerrersBoard::cell_count)
        .def("__repr__",
             [](const FerrersBoard& b) { return "FerrersBoard('" + b.spec_string() + "')"; })
        .def("__eq__", [](const FerrersBoard& x, const FerrersBoard& y) { return x == y; },
             py::is_operator())
        .def("__str__", &FerrersBoard::spec_string);

    py::class_<ShiftedBoard>(m, "ShiftedBoard")
        .def_property_readonly("arms", &ShiftedBoard::arms)
        .def_property_readonly("n", &ShiftedBoard::n)
        .def("cell_count", &ShiftedBoard::cell_count)
        .def("__repr__",
             [](const ShiftedBoard& b) { return "ShiftedBoard('" + b.spec_string() + "')"; })
        .def("__eq__", [](const ShiftedBoard& x, const ShiftedBoard& y) { return x == y; },
             py::is_operator())
        .def("__str__", &ShiftedBoard::spec_string);

    m.def("ferrers", &ferrers, py::arg("heights"));
    m.def("rectangle", &rectangle, py::arg("l"), py::arg("m"));
    m.def("staircase", &staircase, py::arg("n"));
    m.def("lah_board", &lah_board, py::arg("n"), py::arg("r"));
    m.def("shifted", &shifted, py::arg("arms"), py::arg("n"));
    m.def("matching_full", &matching_full, py::arg("n"));
    m.def("enumerate_ferrers", &enumerate_ferrers, py::arg("max_cols"), py::arg("max_height"));
    m.def("enumerate_shifted", &enumerate_shifted, py::arg("n_max"));

    m.def("small_weight", &small_weight, py::arg("k"), py::arg("a_shift") = 0);
    m.def("big_weight", &big_weight, py::arg("k"), py::arg("a_shift") = 0);
    m.def(
        "aq_number",
        [](int z_coeff, int offset, int a_shift) {
            return aq_number({z_coeff, offset}, a_shift);
        },
        py::arg("z_coeff"), py::arg("offset"), py::arg("a_shift") = 0,
        "[z_coeff*z + offset] with the a-shift a -> a q^{a_shift}.");
    m.def("aq_factorial", &aq_factorial, py::arg("n"));
    m.def("aq_binomial", &aq_binomial, py::arg("n"), py::arg("k"));
    m.def("q_number", &q_number, py::arg("z"));
    m.def("q_factorial", &q_factorial, py::arg("n"));
    m.def("q_binomial", &q_binomial, py::arg("n"), py::arg("k"));
    m.def(
        "pochhammer",
        [](const RatExpr& u, const std::tuple<int, int, int>& step, int n) {
            return pochhammer(u, tuple_to_monomial(step), n);
        },
        py::arg("u"), py::arg("step"), py::arg("n"),
        "(u; step)_n where step is the (es, eb, ez) exponent triple; q is (2, 0, 0).");
    m.def("substitute_a", &substitute_a, py::arg("x"), py::arg("e"));
    m.def("limit_a_infinity", &limit_a_infinity, py::arg("x"));

    m.def("rook_standard", &rook_standard, py::arg("board"), py::arg("k"));
    m.def("rook_alpha", &rook_alpha, py::arg("board"), py::arg("k"), py::arg("alpha"));
    m.def("rook_matching", &rook_matching, py::arg("board"), py::arg("k"));
    m.def("closed_rect", &closed_rect, py::arg("l"), py::arg("m"), py::arg("k"));
    m.def("closed_lah", &closed_lah, py::arg("n"), py::arg("r"), py::arg("k"));
    m.def("closed_staircase2", &closed_staircase2, py::arg("n"), py::arg("k"));
    m.def("closed_matching", &closed_matching, py::arg("n"), py::arg("k"));
    m.def("lah_number", &lah_number, py::arg("n"), py::arg("r"), py::arg("k"));
    m.def("recur_standard_check", &recur_standard_check, py::arg("board"), py::arg("m"));
    m.def("recur_lah_check", &recur_lah_check, py::arg("n"), py::arg("r"));
    m.def("recur_matching_check", &recur_matching_check, py::arg("N"));
    m.def("q_rook_limit_check", &q_rook_limit_check, py::arg("board"), py::arg("k"));
    m.def(
        "max_rooks",
        [](const FerrersBoard& b, const std::string& model) {
            return max_rooks(b, model == "file" ? Model::file : Model::nonattacking);
        },
        py::arg("board"), py::arg("model") = "nonattacking");

    m.def("count_nonattacking",
          [](const FerrersBoard& b, int k) { return nonattacking(b, k).size(); });
    m.def("count_file", [](const FerrersBoard& b, int k) { return file_placements(b, k).size(); });
    m.def("count_matchings", [](const ShiftedBoard& b, int k) { return matchings(b, k).size(); });

    m.def("verify_product_standard",
          [](const FerrersBoard& b) { return report_to_dict(verify_product_standard(b)); });
    m.def("verify_product_alpha", [](const FerrersBoard& b, int alpha) {
        return report_to_dict(verify_product_alpha(b, alpha));
    });
    m.def("verify_product_matching",
          [](const ShiftedBoard& b) { return report_to_dict(verify_product_matching(b)); });
    m.def("verify_lah_product",
          [](int n, int r) { return report_to_dict(verify_lah_product(n, r)); });
    m.def("verify_qpfaff", [](int n, int r) { return report_to_dict(verify_qpfaff(n, r)); });
    m.def("verify_pfaff_standard_form",
          [](int n, int r) { return report_to_dict(verify_pfaff_standard_form(n, r)); });
    m.def("verify_jain", [](int n) { return report_to_dict(verify_jain(n)); });
    m.def("verify_whipple_special",
          [](int n) { return report_to_dict(verify_whipple_special(n)); });
    m.def("verify_matching_saalschutz",
          [](int n) { return report_to_dict(verify_matching_saalschutz(n)); });
    m.def("verify_reversal", [](int n) { return report_to_dict(verify_reversal(n)); });
    m.def("verify_binomial_recursions",
          [](int n_max) { return report_to_dict(verify_binomial_recursions(n_max)); });

    m.def(
        "run_suite",
        [](int max_n, int workers) {
            SuiteBounds bounds;
            if (max_n > 0) bounds.clamp_to(max_n);
            py::list out;
            for (const auto& r : run_suite(bounds, workers)) {
                py::dict d;
                d["criterion"] = r.index;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["checks"] = r.checks;
                d["elapsed_ms"] = r.elapsed_ms;
                d["failures"] = r.failures;
                out.append(d);
            }
            return out;
        },
        py::arg("max_n") = 0, py::arg("workers") = 1,
        "Run the verification sweep; max_n = 0 keeps the full default grid.");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "residue_spectra/char_sums.hpp"
#include "residue_spectra/eta_series.hpp"
#include "residue_spectra/harness.hpp"
#include "residue_spectra/primes.hpp"
#include "residue_spectra/representations.hpp"
#include "residue_spectra/residue_counts.hpp"

namespace py = pybind11;
namespace rs = residue_spectra;

namespace {

rs::LaurentPoly make_laurent(const std::vector<rs::i64>& coeffs, rs::i64 c,
                             const rs::PrimeField& fld) {
    return rs::LaurentPoly::make(coeffs, c, fld);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "residue counts mod p, elliptic-curve point counts, eta-product "
              "coefficients, quadratic-form representation numbers and the "
              "verification harness tying them together";

    py::register_exception<rs::Error>(m, "Error", PyExc_ValueError);

    m.def("is_prime", &rs::is_prime, py::arg("n"));
    m.def("primes_in_range", &rs::primes_in_range, py::arg("lo"), py::arg("hi"));

    m.def(
        "legendre",
        [](rs::i64 a, rs::u64 p) { return rs::PrimeField(p).legendre(a); },
        py::arg("a"), py::arg("p"), "Legendre symbol (a/p)");
    m.def(
        "legendre_rational",
        [](rs::i64 num, rs::i64 den, rs::u64 p) {
            return rs::PrimeField(p).legendre_rational(num, den);
        },
        py::arg("num"), py::arg("den"), py::arg("p"));

    m.def(
        "count_roots",
        [](const std::vector<rs::i64>& coeffs, rs::u64 p) {
            const rs::PrimeField fld(p);
            return rs::count_roots(rs::PolyZp::from_coeffs(coeffs, fld), fld);
        },
        py::arg("coeffs"), py::arg("p"),
        "number of roots of the polynomial (coefficients lowest degree first) mod p");

    m.def(
        "residue_count",
        [](const std::vector<rs::i64>& coeffs, rs::i64 laurent_c, rs::u64 p) {
            const rs::PrimeField fld(p);
            return rs::residue_count(make_laurent(coeffs, laurent_c, fld), fld);
        },
        py::arg("coeffs"), py::arg("laurent_c"), py::arg("p"),
        "V_p of poly(x) + laurent_c/x (laurent_c = 0 for a pure polynomial)");

    m.def(
        "residue_profile",
        [](const std::vector<rs::i64>& coeffs, rs::i64 laurent_c, rs::u64 p) {
            const rs::PrimeField fld(p);
            std::map<rs::u64, rs::u64> out =
                rs::residue_profile(make_laurent(coeffs, laurent_c, fld), fld);
            return out;
        },
        py::arg("coeffs"), py::arg("laurent_c"), py::arg("p"));

    m.def(
        "curve_point_count",
        [](rs::i64 m, rs::i64 n, rs::u64 p) {
            const rs::PrimeField fld(p);
            const auto cc = rs::curve_point_count(fld.reduce(m), fld.reduce(n), fld);
            return py::make_tuple(cc.count, cc.singular);
        },
        py::arg("m"), py::arg("n"), py::arg("p"),
        "(#E_p, singular) for y^2 = x^3 + mx + n");

    m.def(
        "jacobsthal_cubic_sum",
        [](rs::i64 m, rs::u64 p) {
            const rs::PrimeField fld(p);
            return rs::jacobsthal_cubic_sum(fld.reduce(m), fld);
        },
        py::arg("m"), py::arg("p"));

    m.def(
        "epsilon_p",
        [](rs::i64 t, rs::u64 p) {
            const rs::PrimeField fld(p);
            return rs::epsilon_p(fld.reduce(t), fld);
        },
        py::arg("t"), py::arg("p"));
    m.def(
        "delta_k",
        [](rs::i64 k, rs::u64 p) {
            const rs::PrimeField fld(p);
            return rs::delta_k(fld.reduce(k), fld);
        },
        py::arg("k"), py::arg("p"));
    m.def(
        "delta_mod40", [](rs::u64 p) { return rs::delta_mod40(rs::PrimeField(p)); },
        py::arg("p"));

    m.def(
        "decompose",
        [](rs::u64 p) {
            const auto d = rs::decompose(rs::PrimeField(p));
            return py::make_tuple(d.A, d.B, d.L, d.M);
        },
        py::arg("p"), "(A, B, L, M) with p = A^2 + 3B^2, 4p = L^2 + 27M^2");

    m.def(
        "jacobi_check",
        [](rs::u64 p) {
            const rs::PrimeField fld(p);
            return rs::jacobi_check(fld, rs::decompose(fld));
        },
        py::arg("p"));

    m.def("quaternary_count", &rs::quaternary_count, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("d"), py::arg("n"));
    m.def("triangular_count", &rs::triangular_count, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("d"), py::arg("n"));

    m.def(
        "eta_coefficients",
        [](int level, rs::u64 nmax) {
            return rs::eta_product(rs::EtaSpec::level(level), nmax).coeffs;
        },
        py::arg("level"), py::arg("nmax"),
        "a_N(0..nmax) for N in {14, 15, 20, 24}");

    m.def(
        "run_suite",
        [](rs::u64 pmin, rs::u64 pmax, unsigned threads,
           const std::vector<std::string>& statements) {
            rs::SuiteOptions options;
            options.p_min = pmin;
            options.p_max = pmax;
            options.threads = threads;
            if (!statements.empty()) {
                options.statements.clear();
                for (const auto& name : statements) {
                    const auto st = rs::statement_from_name(name);
                    if (!st) throw rs::Error("unknown statement '" + name + "'");
                    options.statements.push_back(*st);
                }
            }
            return rs::run_suite(options).to_json();
        },
        py::arg("pmin"), py::arg("pmax"), py::arg("threads") = 0,
        py::arg("statements") = std::vector<std::string>{},
        "verification suite report as a JSON string");

    m.def("statement_names", [] {
        std::vector<std::string> names;
        for (rs::Statement s : rs::kAllStatements) names.emplace_back(rs::statement_name(s));
        return names;
    });
}

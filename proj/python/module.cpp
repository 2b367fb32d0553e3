#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eulerkind/errata.hpp"
#include "eulerkind/euler.hpp"
#include "eulerkind/families.hpp"
#include "eulerkind/identities.hpp"
#include "eulerkind/rooks.hpp"
#include "eulerkind/table.hpp"
#include "eulerkind/wfamily.hpp"

namespace py = pybind11;

using eulerkind::Rational;

namespace {

Rational rat(const std::string& s) { return Rational::from_string(s); }
std::string str(const Rational& r) { return r.to_string(); }

} // namespace

PYBIND11_MODULE(eulerkind, m) {
    m.doc() = "Exact Euler-type number families; rationals cross the boundary as 'p/q' strings";

    m.def("y1", [](unsigned n, unsigned k, const std::string& lam) {
        return str(eulerkind::y1(n, k, rat(lam)));
    }, py::arg("n"), py::arg("k"), py::arg("lam") = "1");
    m.def("y2", [](unsigned n, unsigned k, const std::string& lam) {
        return str(eulerkind::y2(n, k, rat(lam)));
    }, py::arg("n"), py::arg("k"), py::arg("lam") = "1");
    m.def("y3", [](unsigned n, unsigned k, const std::string& lam, const std::string& a,
                   const std::string& b) {
        return str(eulerkind::y3(n, k, rat(lam), rat(a), rat(b)));
    }, py::arg("n"), py::arg("k"), py::arg("lam") = "1", py::arg("a") = "1", py::arg("b") = "0");
    m.def("big_B", [](unsigned n, unsigned k) { return str(eulerkind::big_B(n, k)); });
    m.def("stirling2", [](unsigned n, long long k) { return str(eulerkind::stirling2(n, k)); });
    m.def("lambda_stirling2", [](unsigned n, unsigned v, const std::string& lam) {
        return str(eulerkind::lambda_stirling2(n, v, rat(lam)));
    }, py::arg("n"), py::arg("v"), py::arg("lam") = "1");
    m.def("array_poly", [](unsigned n, unsigned k, const std::string& x, const std::string& lam) {
        return str(eulerkind::array_poly(n, k, rat(x), rat(lam)));
    }, py::arg("n"), py::arg("k"), py::arg("x") = "0", py::arg("lam") = "1");
    m.def("central_T", [](unsigned n, unsigned k) { return str(eulerkind::central_T(n, k)); });
    m.def("bernstein", [](unsigned mm, unsigned n, const std::string& x) {
        return str(eulerkind::bernstein(mm, n, rat(x)));
    });

    m.def("euler1_neg", [](unsigned n, unsigned k, const std::string& lam) {
        return str(eulerkind::euler1_neg(n, k, rat(lam)));
    }, py::arg("n"), py::arg("k"), py::arg("lam") = "1");
    m.def("euler2_neg_num", [](unsigned n, unsigned k, const std::string& lam) {
        return str(eulerkind::euler2_neg_num(n, k, rat(lam)));
    }, py::arg("n"), py::arg("k"), py::arg("lam") = "1");
    m.def("euler2_neg_poly", [](unsigned n, unsigned k, const std::string& x, const std::string& lam) {
        return str(eulerkind::euler2_neg_poly(n, k, rat(x), rat(lam)));
    }, py::arg("n"), py::arg("k"), py::arg("x") = "0", py::arg("lam") = "1");
    m.def("euler1_pos_poly", [](unsigned n, unsigned k, const std::string& x, const std::string& lam) {
        return str(eulerkind::euler1_pos_poly(n, k, rat(x), rat(lam)));
    }, py::arg("n"), py::arg("k"), py::arg("x") = "0", py::arg("lam") = "1");
    m.def("euler2_pos_poly", [](unsigned n, unsigned k, const std::string& x, const std::string& lam) {
        return str(eulerkind::euler2_pos_poly(n, k, rat(x), rat(lam)));
    }, py::arg("n"), py::arg("k"), py::arg("x") = "0", py::arg("lam") = "1");

    m.def("w", [](unsigned n, const std::string& lam) { return str(eulerkind::w_n(n, rat(lam))); },
          py::arg("n"), py::arg("lam") = "1");
    m.def("w_order_k", [](unsigned n, unsigned k, const std::string& lam) {
        return str(eulerkind::w_order_k(n, k, rat(lam)));
    }, py::arg("n"), py::arg("k"), py::arg("lam") = "1");
    m.def("w_neg_k", [](unsigned n, unsigned k, const std::string& lam) {
        return str(eulerkind::w_neg_k(n, k, rat(lam)));
    }, py::arg("n"), py::arg("k"), py::arg("lam") = "1");
    m.def("w_poly", [](unsigned n, unsigned k, const std::string& x, const std::string& lam) {
        return str(eulerkind::w_poly(n, k, rat(x), rat(lam)));
    }, py::arg("n"), py::arg("k"), py::arg("x") = "0", py::arg("lam") = "1");

    m.def("rooks_2d", [](unsigned n, unsigned k) {
        return py::int_(py::str(eulerkind::rooks_2d(n, k).get_str()));
    });
    m.def("rooks_3d_triangle", [](unsigned mm, unsigned k) {
        return py::int_(py::str(eulerkind::rooks_3d_triangle(mm, k).get_str()));
    });

    m.def("conjecture_fit", [](unsigned d, unsigned k_verify) {
        const auto fit = eulerkind::conjecture_fit(d, k_verify);
        py::dict out;
        py::list coeffs;
        for (const auto& c : fit.coefficients) coeffs.append(str(c));
        out["d"] = fit.d;
        out["coefficients"] = coeffs;
        out["verified_up_to"] = fit.verified_up_to;
        out["formula_verified"] = fit.formula_verified;
        out["all_integer"] = fit.all_integer;
        out["singular"] = fit.singular;
        return out;
    }, py::arg("d"), py::arg("k_verify") = 30);

    m.def("verify_all", [](std::size_t order) {
        py::list out;
        for (const auto& r : eulerkind::verify_all(eulerkind::IdentityGrid::defaults(order))) {
            py::dict d;
            d["id"] = r.id;
            d["literal"] = r.literal == eulerkind::CheckStatus::Verified ? "verified" : "failed";
            if (r.corrected)
                d["corrected"] =
                    *r.corrected == eulerkind::CheckStatus::Verified ? "verified" : "failed";
            d["as_expected"] = r.as_expected();
            out.append(std::move(d));
        }
        return out;
    }, py::arg("order") = 12);

    m.def("table_csv", [](const std::string& family, unsigned nmax, unsigned kmax,
                          const std::string& lam) {
        eulerkind::EulerTableSpec spec;
        if (family == "E1neg")
            spec.kind = eulerkind::EulerTableSpec::Kind::First;
        else if (family == "E2neg")
            spec.kind = eulerkind::EulerTableSpec::Kind::Second;
        else
            throw std::invalid_argument("table_csv supports E1neg and E2neg");
        spec.n_max = static_cast<long>(nmax);
        spec.k_max = static_cast<long>(kmax);
        spec.lambda = rat(lam);
        return eulerkind::euler_table(spec).to_csv();
    }, py::arg("family"), py::arg("nmax"), py::arg("kmax"), py::arg("lam") = "1");
}

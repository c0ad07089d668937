#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracpart/certificate.hpp"
#include "fracpart/congruence.hpp"
#include "fracpart/expr.hpp"
#include "fracpart/forms.hpp"
#include "fracpart/qseries.hpp"

namespace py = pybind11;
using namespace fracpart;

namespace {

// Big numbers cross the boundary as decimal strings; the Python side turns
// them into int / Fraction.
std::vector<std::string> strings(const std::vector<BigInt>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::vector<std::string> coefficients(const std::string& alpha, std::size_t n) {
  const auto s = frac_partition_series(parse_rational(alpha), n + 1);
  std::vector<std::string> out;
  for (const auto& c : s.coeffs()) out.push_back(to_string(c));
  return out;
}

std::vector<std::string> eta_coefficients(long d, std::size_t n) {
  const auto s = eta_power(d, n + 1);
  std::vector<std::string> out;
  for (const auto& c : s.coeffs()) out.push_back(to_string(BigInt(c.get_num())));
  return out;
}

std::optional<long> ord(const std::string& x, std::uint64_t ell) {
  const auto v = padic_ord(parse_rational(x), ell);
  if (v.is_infinite()) return std::nullopt;
  return static_cast<long>(v.value());
}

std::string certificate(const std::string& family, const std::string& alpha, long d, std::uint64_t ell,
                        const std::string& r, unsigned v, std::optional<std::uint64_t> n_max, unsigned threads) {
  const BigRational a = evaluate_rational(alpha);
  const BigInt res = evaluate_integer(r);
  CongruenceClaim claim = [&] {
    switch (parse_family(family)) {
      case Family::CW: return build_cw_claim(a, d, ell, res);
      case Family::T1: return build_t1_claim(a, d, ell, res);
      case Family::T2: return build_t2_claim(a, ell, res);
      case Family::T3: return build_t3_claim(a, ell, v, res);
      case Family::Remark: return build_remark_claim(a, d, ell, res);
    }
    throw InvariantViolation("unhandled family");
  }();
  if (!n_max) n_max = default_n_max(claim);
  if (!n_max) throw PreconditionError("progression starts beyond the default precision; pass n_max");
  VerifyOptions opts;
  opts.threads = threads;
  VerificationReport report;
  {
    py::gil_scoped_release release;
    report = verify_claim(claim, *n_max, opts);
  }
  return certificate_line(report);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "fracpart native core";
  m.attr("__version__") = kArtifactVersion;

  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NotLIntegral>(m, "NotLIntegral", PyExc_ArithmeticError);
  (void)precondition;

  m.def("coefficients", &coefficients, py::arg("alpha"), py::arg("n"));
  m.def("eta_power", &eta_coefficients, py::arg("d"), py::arg("n"));
  m.def("padic_ord", &ord, py::arg("x"), py::arg("ell"));
  m.def("is_d_satisfactory", &is_d_satisfactory, py::arg("d"), py::arg("ell"));
  m.def("find_w", &find_w, py::arg("ell"), py::arg("v"));
  m.def(
      "find_residues",
      [](long d, std::uint64_t ell, unsigned target_ord, std::size_t count) {
        return strings(find_residues(d, ell, target_ord, count));
      },
      py::arg("d"), py::arg("ell"), py::arg("target_ord"), py::arg("count"));
  m.def(
      "a2_prime_power_sequence",
      [](std::uint64_t ell, unsigned v, std::size_t i_max) { return strings(a2_prime_power_sequence(ell, v, i_max)); },
      py::arg("ell"), py::arg("v"), py::arg("i_max"));
  m.def("certificate", &certificate, py::arg("family"), py::arg("alpha"), py::arg("d"), py::arg("ell"),
        py::arg("r"), py::arg("v"), py::arg("n_max"), py::arg("threads"));
}

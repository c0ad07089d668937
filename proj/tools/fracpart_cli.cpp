// fracpart: command-line front end for fractional partition coefficients,
// eta powers and congruence checks.
//
// Exit codes: 0 ok / verified / witness found, 1 counterexample or
// inconclusive, 2 bad input or failed hypothesis, 3 internal error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracpart/certificate.hpp"
#include "fracpart/congruence.hpp"
#include "fracpart/expr.hpp"
#include "fracpart/forms.hpp"
#include "fracpart/qseries.hpp"

using namespace fracpart;

namespace {

struct Globals {
  unsigned threads = 0;  // 0: take the environment or 1
  std::string format = "table";
  std::string out_path;
  std::size_t max_prec = 20000;
};

struct ClaimArgs {
  std::string family;
  std::string alpha;
  long d = 0;
  std::uint64_t ell = 0;
  std::string r;
  unsigned v = 1;
  std::optional<std::uint64_t> nmax;
};

unsigned effective_threads(const Globals& g) {
  unsigned want = g.threads;
  unsigned cap = 0;
  if (const char* env = std::getenv("CONGRUENCE_WORKBENCH_THREADS")) {
    try {
      cap = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw PreconditionError("CONGRUENCE_WORKBENCH_THREADS must be a positive integer");
    }
  }
  if (want == 0) want = cap > 0 ? cap : 1;
  if (cap > 0) want = std::min(want, cap);
  return std::max(want, 1U);
}

VerifyOptions verify_options(const Globals& g) {
  VerifyOptions o;
  o.max_prec = g.max_prec;
  o.threads = effective_threads(g);
  return o;
}

// "L^K" or "L".
std::pair<std::uint64_t, unsigned> parse_mod(const std::string& text) {
  const auto caret = text.find('^');
  const BigInt ell = parse_integer(text.substr(0, caret));
  BigInt k = 1;
  if (caret != std::string::npos) k = parse_integer(text.substr(caret + 1));
  if (ell < 2 || !ell.fits_ulong_p()) throw PreconditionError("--mod: bad prime '" + text + "'");
  if (k < 1 || k > 10000) throw PreconditionError("--mod: exponent must be in [1, 10000]");
  require_prime(ell.get_ui(), "--mod prime");
  return {ell.get_ui(), static_cast<unsigned>(k.get_ui())};
}

CongruenceClaim build_claim(const ClaimArgs& a) {
  const Family family = parse_family(a.family);
  if (a.alpha.empty()) throw PreconditionError("--alpha is required");
  if (a.ell == 0) throw PreconditionError("--ell is required");
  if (a.r.empty()) throw PreconditionError("--r is required");
  const BigRational alpha = evaluate_rational(a.alpha);
  const BigInt r = evaluate_integer(a.r);
  switch (family) {
    case Family::CW: return build_cw_claim(alpha, a.d, a.ell, r);
    case Family::T1: return build_t1_claim(alpha, a.d, a.ell, r);
    case Family::T2: return build_t2_claim(alpha, a.ell, r);
    case Family::T3: return build_t3_claim(alpha, a.ell, a.v, r);
    case Family::Remark: return build_remark_claim(alpha, a.d, a.ell, r);
  }
  throw InvariantViolation("unhandled family");
}

std::uint64_t resolve_nmax(const ClaimArgs& a, const CongruenceClaim& claim) {
  if (a.nmax) return *a.nmax;
  const auto n = default_n_max(claim);
  if (!n) throw PreconditionError("progression starts beyond precision 3000; pass --nmax and --max-prec explicitly");
  return *n;
}

void emit_certificate(const Globals& g, const std::string& line) {
  if (!g.out_path.empty()) {
    std::ofstream f(g.out_path, std::ios::app);
    if (!f) throw PreconditionError("cannot open " + g.out_path);
    f << line << '\n';
  }
}

int cmd_coeffs(const std::string& alpha_text, std::size_t n, const std::string& mod,
               bool series_format) {
  const BigRational alpha = evaluate_rational(alpha_text);
  const auto series = frac_partition_series(alpha, n + 1);
  if (series_format) {
    write_series(std::cout, series);
    return 0;
  }
  if (!mod.empty()) {
    const auto [ell, k] = parse_mod(mod);
    const auto residues = series_reduce_mod(series, ell, k);
    for (std::size_t i = 0; i <= n; ++i) std::cout << i << '\t' << to_string(residues[i]) << '\n';
    return 0;
  }
  for (std::size_t i = 0; i <= n; ++i) std::cout << i << '\t' << to_string(series[i]) << '\n';
  return 0;
}

int cmd_eta(long d, std::size_t n) {
  const auto a = eta_power(d, n + 1);
  for (std::size_t i : a.support()) std::cout << i << '\t' << to_string(a[i]) << '\n';
  return 0;
}

int cmd_verify(const Globals& g, const ClaimArgs& a) {
  const auto claim = build_claim(a);
  const auto n_max = resolve_nmax(a, claim);
  const auto report = verify_claim(claim, n_max, verify_options(g));
  const std::string line = certificate_line(report);
  emit_certificate(g, line);
  if (g.format == "jsonl") {
    std::cout << line << '\n';
  } else {
    std::cout << to_string(report.status) << '\t' << claim.describe() << "\tfor 0 <= n <= " << n_max << '\n';
    if (report.counterexample) {
      const auto& ce = *report.counterexample;
      std::cout << "counterexample\tn=" << ce.n << "\tvalue=" << to_string(ce.value) << "\tord=" << to_string(ce.ord)
                << '\n';
    }
    if (!report.message.empty()) std::cerr << "error: " << report.message << '\n';
  }
  switch (report.status) {
    case Status::VerifiedInRange: return 0;
    case Status::Counterexample: return 1;
    case Status::PreconditionFailed: return 2;
  }
  return 3;
}

int cmd_sharpness(const Globals& g, const ClaimArgs& a) {
  const auto claim = build_claim(a);
  const auto n_max = resolve_nmax(a, claim);
  const auto witness = sharpness_probe(claim, n_max, verify_options(g));
  if (g.format == "jsonl") {
    nlohmann::ordered_json j;
    j["family"] = std::string(to_string(claim.family));
    j["alpha"] = to_string(claim.alpha);
    j["ell"] = claim.ell;
    j["e"] = claim.e;
    j["r"] = to_string(claim.r);
    j["modulus_power"] = claim.modulus_power;
    j["n_max"] = n_max;
    if (witness) {
      j["witness"] = {{"n", witness->n}, {"value", to_string(witness->value)}};
    } else {
      j["witness"] = nullptr;
    }
    j["artifact_version"] = kArtifactVersion;
    std::cout << j.dump() << '\n';
  } else if (witness) {
    std::cout << "witness\tn=" << witness->n << "\tvalue=" << to_string(witness->value) << '\n';
  } else {
    std::cout << "inconclusive\tno n <= " << n_max << " with ord exactly " << claim.modulus_power << '\n';
  }
  return witness ? 0 : 1;
}

// Recomputes the worked values the library is tested against.
int cmd_seed_examples(const Globals& g) {
  const auto opts = verify_options(g);
  std::cout << "p_{-1/8}(5)\t" << to_string(frac_partition_series(make_rational(-1, 8), 6)[5]) << '\n';
  std::cout << "p_{1/13}(7)\t" << to_string(frac_partition_series(make_rational(1, 13), 8)[7]) << '\n';
  const auto a2 = eta_power(2, 14);
  std::cout << "a_2(1)\t" << to_string(a2[1]) << '\n';
  std::cout << "a_2(13)\t" << to_string(a2[13]) << '\n';
  std::cout << "find_w(13, 1)\t" << find_w(13, 1) << '\n';
  std::cout << "residue d=6 ell=7\t" << to_string(find_residues(6, 7, 1, 1).front()) << '\n';
  std::cout << "residue d=2 ell=13 ord=12\t" << to_string(find_residues(2, 13, 12, 1).front()) << '\n';
  const CongruenceClaim claims[] = {
      build_cw_claim(BigRational(-1), 4, 5, 4),
      build_t1_claim(make_rational(-1, 8), 6, 7, 5),
      build_t2_claim(make_rational(1, 13), 5, 7),
  };
  const std::uint64_t ranges[] = {100, 20, 40};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto report = verify_claim(claims[i], ranges[i], opts);
    const std::string line = certificate_line(report);
    emit_certificate(g, line);
    std::cout << line << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional partition coefficients, eta powers and congruence checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "worker threads (capped by CONGRUENCE_WORKBENCH_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "table or jsonl")->check(CLI::IsMember({"table", "jsonl"}));
  app.add_option("--out", g.out_path, "append certificate lines to FILE");
  app.add_option("--max-prec", g.max_prec, "largest series precision a check may use")
      ->check(CLI::PositiveNumber);

  std::string alpha_text;
  std::size_t n = 0;
  std::string mod;
  bool series_format = false;
  auto* coeffs = app.add_subcommand("coeffs", "print p_alpha(0..N)");
  coeffs->add_option("--alpha", alpha_text, "exponent, e.g. -1/8")->required();
  coeffs->add_option("--n", n, "last index")->required();
  coeffs->add_option("--mod", mod, "reduce modulo L^K");
  coeffs->add_flag("--series", series_format, "emit the '# prec=' series text format");

  long eta_d = 0;
  auto* eta = app.add_subcommand("eta", "print nonzero coefficients of eta(M tau)^d");
  eta->add_option("--d", eta_d, "power")->required();
  eta->add_option("--n", n, "last index")->required();

  ClaimArgs claim_args;
  auto add_claim_flags = [&](CLI::App* sub) {
    sub->add_option("--family", claim_args.family, "cw, t1, t2, t3 or remark")->required();
    sub->add_option("--alpha", claim_args.alpha, "exponent (expression)");
    sub->add_option("--d", claim_args.d, "eta power d");
    sub->add_option("--ell", claim_args.ell, "prime");
    sub->add_option("--r", claim_args.r, "residue (integer expression)");
    sub->add_option("--v", claim_args.v, "modulus power for t3");
    sub->add_option("--nmax", claim_args.nmax, "check 0 <= n <= NMAX");
  };
  auto* verify = app.add_subcommand("verify", "build a claim and check it on a range");
  add_claim_flags(verify);
  auto* sharp = app.add_subcommand("sharpness", "search for n where the modulus power is attained");
  add_claim_flags(sharp);

  std::uint64_t w_ell = 0;
  unsigned w_v = 1;
  auto* fw = app.add_subcommand("find-w", "smallest w with a_2(ell^w) = 0 mod ell^v");
  fw->add_option("--ell", w_ell, "prime")->required();
  fw->add_option("--v", w_v, "power")->required();

  long res_d = 0;
  std::uint64_t res_ell = 0;
  unsigned res_ord = 1;
  std::size_t res_count = 1;
  auto* res = app.add_subcommand("residues", "smallest r with ord_ell((24/g) r + d/g) = T");
  res->add_option("--d", res_d, "eta power d")->required();
  res->add_option("--ell", res_ell, "prime")->required();
  res->add_option("--ord", res_ord, "target order")->required();
  res->add_option("--count", res_count, "how many");

  auto* seed = app.add_subcommand("seed-examples", "");
  seed->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*coeffs) return cmd_coeffs(alpha_text, n, mod, series_format);
    if (*eta) return cmd_eta(eta_d, n);
    if (*verify) return cmd_verify(g, claim_args);
    if (*sharp) return cmd_sharpness(g, claim_args);
    if (*fw) {
      std::cout << find_w(w_ell, w_v) << '\n';
      return 0;
    }
    if (*res) {
      for (const auto& r : find_residues(res_d, res_ell, res_ord, res_count)) std::cout << to_string(r) << '\n';
      return 0;
    }
    if (*seed) return cmd_seed_examples(g);
  } catch (const NotLIntegral& e) {
    std::cerr << "error: NotLIntegral: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

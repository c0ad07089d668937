#include "fracpart/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>
#include <utility>

#include "fracpart/forms.hpp"

namespace fracpart {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::CW: return "cw";
    case Family::T1: return "t1";
    case Family::T2: return "t2";
    case Family::T3: return "t3";
    case Family::Remark: return "remark";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::CW, Family::T1, Family::T2, Family::T3, Family::Remark})
    if (to_string(f) == text) return f;
  throw PreconditionError("unknown family '" + std::string(text) + "'");
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::VerifiedInRange: return "VERIFIED_IN_RANGE";
    case Status::Counterexample: return "COUNTEREXAMPLE";
    case Status::PreconditionFailed: return "PRECONDITION_FAILED";
  }
  return "?";
}

std::string CongruenceClaim::describe() const {
  return "p_{" + to_string(alpha) + "}(" + std::to_string(ell) + "^" + std::to_string(e) + " n + " +
         to_string(r) + ") = 0 (mod " + std::to_string(ell) + "^" + std::to_string(modulus_power) + ")";
}

namespace {

bool divides(std::uint64_t ell, const BigInt& x) { return x % static_cast<unsigned long>(ell) == 0; }

BigInt canonical_residue(const BigInt& r, const BigInt& step) {
  BigInt out = r % step;
  if (out < 0) out += step;
  return out;
}

// (24/g) r + d/g with g = gcd(d, 24).
BigInt progression_value(long d, const BigInt& r) {
  const long g = std::gcd(d, 24L);
  return (24 / g) * r + d / g;
}

void require_claim_prime(std::uint64_t ell) {
  if (!is_prime(ell)) throw HypothesisError("ell prime", std::to_string(ell) + " is not prime");
}

void require_l_integral(const BigRational& alpha, std::uint64_t ell) {
  if (divides(ell, alpha.get_den()))
    throw HypothesisError("ell does not divide b",
                          std::to_string(ell) + " divides the denominator of " + to_string(alpha));
}

void require_exact_ord(const BigInt& value, std::uint64_t ell, std::int64_t want, const std::string& name) {
  const auto ord = padic_ord(value, ell);
  if (!(ord == want))
    throw HypothesisError(name, "ord_" + std::to_string(ell) + "(" + to_string(value) + ") = " +
                                    to_string(ord) + ", need " + std::to_string(want));
}

std::int64_t finite_ord_of_difference(const BigRational& alpha, long d, std::uint64_t ell) {
  const auto ord = padic_ord(BigRational(alpha - d), ell);
  if (ord.is_infinite())
    throw HypothesisError("alpha != d", "alpha equals " + std::to_string(d) + "; the modulus is unbounded");
  return ord.value();
}

bool in_list(long d, std::initializer_list<long> list) {
  return std::find(list.begin(), list.end(), d) != list.end();
}

}  // namespace

bool is_d_satisfactory(long d, std::uint64_t ell) {
  require_prime(ell);
  switch (d) {
    case 2: return ell % 12 != 1;
    case 4:
    case 8: return ell % 6 == 5;
    case 14: return ell % 6 == 5 && ell != 5;
    case 6:
    case 10: return ell >= 7 && ell % 4 == 3;
    case 26: return ell % 12 == 11 && ell != 11;
    default: throw PreconditionError("is_d_satisfactory: d must be one of 2, 4, 6, 8, 10, 14, 26");
  }
}

bool chan_wang_condition(long d, std::uint64_t ell, const BigInt& r) {
  require_prime(ell);
  const BigInt shifted = 24 * r + d;
  switch (d) {
    case 1: return ell != 2 && legendre_symbol(shifted, ell) == -1;
    case 3: return ell != 2 && legendre_symbol(8 * r + 1, ell) != 1;
    case 4:
    case 8:
    case 14: return ell % 6 == 5 && divides(ell, shifted);
    case 6:
    case 10: return ell >= 7 && ell % 4 == 3 && divides(ell, shifted);
    case 26: return ell % 12 == 11 && divides(ell, shifted);
    default: throw PreconditionError("chan_wang_condition: d must be one of 1, 3, 4, 6, 8, 10, 14, 26");
  }
}

CongruenceClaim build_cw_claim(const BigRational& alpha, long d, std::uint64_t ell, const BigInt& r) {
  if (!in_list(d, {1, 3, 4, 6, 8, 10, 14, 26}))
    throw HypothesisError("d in {1,3,4,6,8,10,14,26}", "got d = " + std::to_string(d));
  require_claim_prime(ell);
  require_l_integral(alpha, ell);
  const BigInt r0 = canonical_residue(r, BigInt(static_cast<unsigned long>(ell)));
  const BigInt a_minus_db = alpha.get_num() - d * alpha.get_den();
  if (!divides(ell, a_minus_db))
    throw HypothesisError("ell | a - d b", std::to_string(ell) + " does not divide " + to_string(a_minus_db));
  if (!chan_wang_condition(d, ell, r0))
    throw HypothesisError("Chan-Wang condition",
                          "fails for d = " + std::to_string(d) + ", ell = " + std::to_string(ell) +
                              ", r = " + to_string(r0));
  return {Family::CW, alpha, d, ell, 1, r0, 1};
}

CongruenceClaim build_t1_claim(const BigRational& alpha, long d, std::uint64_t ell, const BigInt& r) {
  if (!in_list(d, {4, 6, 8, 10, 14, 26}))
    throw HypothesisError("d in {4,6,8,10,14,26}", "got d = " + std::to_string(d));
  require_claim_prime(ell);
  if (!is_d_satisfactory(d, ell))
    throw HypothesisError("d-satisfactory", std::to_string(ell) + " is not " + std::to_string(d) + "-satisfactory");
  require_l_integral(alpha, ell);
  const BigInt r0 = canonical_residue(r, ipow(ell, 2));
  require_exact_ord(progression_value(d, r0), ell, 1, "ord((24/g) r + d/g) = 1");
  const auto ord = finite_ord_of_difference(alpha, d, ell);
  if (ord < 1) throw HypothesisError("ord(alpha - d) >= 1", "ord is " + std::to_string(ord));
  return {Family::T1, alpha, d, ell, 2, r0, static_cast<unsigned>(ord)};
}

CongruenceClaim build_t2_claim(const BigRational& alpha, std::uint64_t ell, const BigInt& r) {
  require_claim_prime(ell);
  if (!is_d_satisfactory(2, ell))
    throw HypothesisError("2-satisfactory", std::to_string(ell) + " = 1 (mod 12)");
  require_l_integral(alpha, ell);
  const BigInt r0 = canonical_residue(r, ipow(ell, 2));
  require_exact_ord(12 * r0 + 1, ell, 1, "ord(12 r + 1) = 1");
  const auto ord = finite_ord_of_difference(alpha, 2, ell);
  if (ord < 2) throw HypothesisError("ord(alpha - 2) >= 2", "ord is " + std::to_string(ord));
  return {Family::T2, alpha, 2, ell, 2, r0, static_cast<unsigned>(ord - 1)};
}

CongruenceClaim build_t3_claim(const BigRational& alpha, std::uint64_t ell, unsigned v, const BigInt& r) {
  require_claim_prime(ell);
  if (v == 0) throw HypothesisError("v >= 1", "v must be positive");
  require_l_integral(alpha, ell);
  const std::size_t w = find_w(ell, v);
  const BigInt r0 = canonical_residue(r, ipow(ell, w + 1));
  const auto ord = finite_ord_of_difference(alpha, 2, ell);
  if (ord != static_cast<std::int64_t>(v + w))
    throw HypothesisError("ord(alpha - 2) = v + w", "ord is " + std::to_string(ord) + ", v + w = " +
                                                        std::to_string(v) + " + " + std::to_string(w));
  require_exact_ord(12 * r0 + 1, ell, static_cast<std::int64_t>(w), "ord(12 r + 1) = w");
  return {Family::T3, alpha, 2, ell, static_cast<unsigned>(w + 1), r0, v};
}

CongruenceClaim build_remark_claim(const BigRational& alpha, long d, std::uint64_t ell, const BigInt& r) {
  long drop;
  if (d == 14 && ell == 5) {
    drop = 1;
  } else if (d == 26 && ell == 11) {
    drop = 2;
  } else {
    throw HypothesisError("(d, ell) in {(14, 5), (26, 11)}",
                          "got (" + std::to_string(d) + ", " + std::to_string(ell) + ")");
  }
  require_l_integral(alpha, ell);
  const BigInt r0 = canonical_residue(r, ipow(ell, 2));
  require_exact_ord(progression_value(d, r0), ell, 1, "ord((24/g) r + d/g) = 1");
  const auto power = finite_ord_of_difference(alpha, d, ell) - drop;
  if (power < 1)
    throw HypothesisError("modulus power >= 1", "ord(alpha - d) - " + std::to_string(drop) + " = " +
                                                    std::to_string(power));
  return {Family::Remark, alpha, d, ell, 2, r0, static_cast<unsigned>(power)};
}

std::size_t find_w(std::uint64_t ell, unsigned v) {
  A2PowerRecurrence rec(ell, v);
  const BigInt bound = ipow(ell, 2UL * v);
  while (true) {
    rec.advance();
    if (rec.index() >= bound)
      throw InvariantViolation("find_w: no zero of a_2(ell^w) mod ell^v below ell^(2v)");
    if (sgn(rec.value()) == 0) return rec.index();
  }
}

A2Period a2_period(std::uint64_t ell, unsigned v) {
  A2PowerRecurrence rec(ell, v);
  const BigInt bound = ipow(ell, 2UL * v) + 1;
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  while (rec.index() <= bound) {
    auto [it, inserted] = seen.emplace(std::make_pair(rec.value(), rec.next_value()), rec.index());
    if (!inserted) return {it->second, rec.index() - it->second};
    rec.advance();
  }
  throw InvariantViolation("a2_period: no repeat within ell^(2v) + 1 states");
}

std::vector<BigInt> find_residues(long d, std::uint64_t ell, unsigned target_ord, std::size_t count) {
  require_prime(ell);
  if (d <= 0) throw PreconditionError("find_residues: d must be positive");
  if (target_ord == 0) throw PreconditionError("find_residues: target_ord must be positive");
  const long g = std::gcd(d, 24L);
  const BigInt slope = 24 / g;
  const BigInt offset = d / g;
  if (divides(ell, slope))
    throw PreconditionError("find_residues: ell divides 24/gcd(d,24)");
  const BigInt modulus = ipow(ell, target_ord);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), slope.get_mpz_t(), modulus.get_mpz_t());
  const BigInt first = canonical_residue(-offset * inv, modulus);
  const BigInt next_power = modulus * static_cast<unsigned long>(ell);
  std::vector<BigInt> out;
  for (BigInt r = first; out.size() < count; r += modulus) {
    if ((slope * r + offset) % next_power != 0) out.push_back(r);
  }
  return out;
}

BigInt required_precision(const CongruenceClaim& claim, std::uint64_t n_max) {
  return claim.step() * static_cast<unsigned long>(n_max) + claim.r + 1;
}

std::optional<std::uint64_t> default_n_max(const CongruenceClaim& claim, std::size_t prec_budget) {
  const BigInt room = BigInt(static_cast<unsigned long>(prec_budget)) - 1 - claim.r;
  if (room < 0) return std::nullopt;
  const BigInt n = room / claim.step();
  return n.get_ui();
}

namespace {

// p_alpha(ell^e n + r) for n = 0..n_max.
std::vector<BigRational> progression_values(const CongruenceClaim& claim, std::uint64_t n_max,
                                            const VerifyOptions& options) {
  const BigInt prec = required_precision(claim, n_max);
  if (prec > static_cast<unsigned long>(options.max_prec))
    throw PreconditionError("required precision " + to_string(prec) + " exceeds cap " +
                            std::to_string(options.max_prec));
  const auto series = frac_partition_series(claim.alpha, prec.get_ui());
  const auto slice = extract_progression(series, claim.step().get_ui(), claim.r.get_ui());
  std::vector<BigRational> out(slice.coeffs().begin(), slice.coeffs().begin() + static_cast<std::ptrdiff_t>(n_max + 1));
  return out;
}

void validate_claim(const CongruenceClaim& claim) {
  require_prime(claim.ell);
  if (claim.e == 0 || claim.modulus_power == 0)
    throw PreconditionError("claim needs positive progression exponent and modulus power");
  if (claim.r < 0 || claim.r >= claim.step())
    throw PreconditionError("claim residue must lie in [0, ell^e)");
  if (divides(claim.ell, claim.alpha.get_den()))
    throw NotLIntegral(std::to_string(claim.ell) + " divides the denominator of alpha = " + to_string(claim.alpha));
}

// Smallest index in [0, size) where pred holds, scanning in parallel chunks.
template <class Pred>
std::optional<std::size_t> first_match(std::size_t size, unsigned threads, Pred pred) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(size, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < size; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::vector<std::optional<std::size_t>> found(threads);
  std::vector<std::thread> workers;
  const std::size_t chunk = (size + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(size, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        if (pred(i)) {
          found[t] = i;
          return;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace

VerificationReport verify_claim(const CongruenceClaim& claim, std::uint64_t n_max, const VerifyOptions& options) {
  VerificationReport report{claim, n_max, Status::PreconditionFailed, std::nullopt, {}};
  std::vector<BigRational> values;
  try {
    validate_claim(claim);
    values = progression_values(claim, n_max, options);
  } catch (const NotLIntegral& e) {
    report.message = e.what();
    return report;
  } catch (const PreconditionError& e) {
    report.message = e.what();
    return report;
  }
  const auto need = static_cast<std::int64_t>(claim.modulus_power);
  const auto bad = first_match(values.size(), options.threads,
                               [&](std::size_t i) { return padic_ord(values[i], claim.ell) < need; });
  if (bad) {
    report.status = Status::Counterexample;
    report.counterexample = Counterexample{*bad, values[*bad], padic_ord(values[*bad], claim.ell)};
  } else {
    report.status = Status::VerifiedInRange;
  }
  return report;
}

std::optional<SharpnessWitness> sharpness_probe(const CongruenceClaim& claim, std::uint64_t n_max,
                                                const VerifyOptions& options) {
  try {
    validate_claim(claim);
  } catch (const NotLIntegral& e) {
    throw PreconditionError(e.what());
  }
  const auto values = progression_values(claim, n_max, options);
  const auto want = static_cast<std::int64_t>(claim.modulus_power);
  const auto hit = first_match(values.size(), options.threads,
                               [&](std::size_t i) { return padic_ord(values[i], claim.ell) == want; });
  if (!hit) return std::nullopt;
  return SharpnessWitness{*hit, values[*hit]};
}

}  // namespace fracpart

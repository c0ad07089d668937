#pragma once

// Congruence claims p_alpha(ell^e n + r) = 0 (mod ell^m) for the five
// families (Chan-Wang, the three lacunarity/eigenform theorems and the
// d in {14, 26} variants), their hypothesis checks, and finite-range
// verification. Nothing here proves a congruence; reports only ever say
// "verified in range".

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracpart/arith.hpp"
#include "fracpart/qseries.hpp"

namespace fracpart {

enum class Family { CW, T1, T2, T3, Remark };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

struct CongruenceClaim {
  Family family;
  BigRational alpha;
  long d;
  std::uint64_t ell;
  unsigned e;  // progression step ell^e
  BigInt r;    // in [0, ell^e)
  unsigned modulus_power;

  BigInt step() const { return ipow(ell, e); }
  BigInt modulus() const { return ipow(ell, modulus_power); }
  std::string describe() const;
};

// A builder rejected its input; hypothesis() names the failed condition.
class HypothesisError : public PreconditionError {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : PreconditionError(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

bool is_d_satisfactory(long d, std::uint64_t ell);
bool chan_wang_condition(long d, std::uint64_t ell, const BigInt& r);

// r outside [0, ell^e) is reduced; the quotient shifts n, so the verified
// progression is the same set of indices (or a superset for negative r).
CongruenceClaim build_cw_claim(const BigRational& alpha, long d, std::uint64_t ell, const BigInt& r);
CongruenceClaim build_t1_claim(const BigRational& alpha, long d, std::uint64_t ell, const BigInt& r);
CongruenceClaim build_t2_claim(const BigRational& alpha, std::uint64_t ell, const BigInt& r);
CongruenceClaim build_t3_claim(const BigRational& alpha, std::uint64_t ell, unsigned v, const BigInt& r);
CongruenceClaim build_remark_claim(const BigRational& alpha, long d, std::uint64_t ell, const BigInt& r);

// Smallest w >= 1 with a_2(ell^w) = 0 (mod ell^v). Throws InvariantViolation
// if none turns up before ell^(2v) steps.
std::size_t find_w(std::uint64_t ell, unsigned v);

struct A2Period {
  std::size_t preperiod;
  std::size_t period;
};
// Period of i -> a_2(ell^i) mod ell^v, detected on consecutive pairs.
A2Period a2_period(std::uint64_t ell, unsigned v);

// The count smallest r >= 0 with ord_ell((24/g) r + d/g) == target_ord, g = gcd(d, 24).
std::vector<BigInt> find_residues(long d, std::uint64_t ell, unsigned target_ord, std::size_t count);

enum class Status { VerifiedInRange, Counterexample, PreconditionFailed };
std::string_view to_string(Status s);

struct Counterexample {
  std::uint64_t n;
  BigRational value;
  ExtendedValuation ord;
};

struct VerificationReport {
  CongruenceClaim claim;
  std::uint64_t n_max;
  Status status;
  std::optional<Counterexample> counterexample;
  std::string message;
};

struct VerifyOptions {
  std::size_t max_prec = 20000;
  unsigned threads = 1;
};

// Precision needed to see p_alpha(ell^e n_max + r).
BigInt required_precision(const CongruenceClaim& claim, std::uint64_t n_max);

// Largest n_max keeping the required precision at or below prec_budget;
// nullopt when even n = 0 does not fit.
std::optional<std::uint64_t> default_n_max(const CongruenceClaim& claim, std::size_t prec_budget = 3000);

VerificationReport verify_claim(const CongruenceClaim& claim, std::uint64_t n_max,
                                const VerifyOptions& options = {});

struct SharpnessWitness {
  std::uint64_t n;
  BigRational value;
};

// First n <= n_max with ord_ell(p_alpha(ell^e n + r)) == modulus_power;
// nullopt is inconclusive, not a proof of non-sharpness.
std::optional<SharpnessWitness> sharpness_probe(const CongruenceClaim& claim, std::uint64_t n_max,
                                                const VerifyOptions& options = {});

}  // namespace fracpart

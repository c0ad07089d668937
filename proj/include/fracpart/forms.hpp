#pragma once

// q-expansions of modular forms: eta powers, Eisenstein series, Hecke
// operators and eigenform checks, and the Serre decompositions of the
// lacunary eta powers eta(12 tau)^d, d in {10, 14, 26}.
//
// Forms are plain Series with weight/level/character metadata attached; the
// level is used only to zero the character on primes dividing it.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "fracpart/arith.hpp"
#include "fracpart/qseries.hpp"

namespace fracpart {

// Nebentypus as a Kronecker symbol (a / .) restricted to integers coprime to
// the level; nullopt numerator means the trivial character.
struct Character {
  std::optional<long> numerator;

  static Character trivial() { return {}; }
  static Character kronecker(long a) { return {a}; }

  int operator()(std::uint64_t m, std::uint64_t level) const {
    if (std::gcd(m, level) != 1) return 0;
    if (!numerator) return 1;
    return kronecker_symbol(BigInt(*numerator), BigInt(static_cast<unsigned long>(m)));
  }
};

class NotNormalized : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

template <class Ring>
struct FormExpansion {
  Series<Ring> series;
  BigRational weight;
  std::uint64_t level = 1;
  Character character;
};

// eta(M tau)^d = q^t (q^M; q^M)^d with M = 24/gcd(d,24), t = d/gcd(d,24).
struct EtaPowerSpec {
  long d;
  std::uint64_t m;
  std::uint64_t t;

  // Positive d only: negative powers start at q^t with t < 0.
  static EtaPowerSpec of(long d);
};

BigInt divisor_sigma(unsigned j, std::uint64_t n);

// k in {4, 6, 8}; E8 is E4^2.
Series<BigRational> eisenstein_series(int k, std::size_t prec);

// Coefficients a_d(n) of eta(24/gcd(d,24) tau)^d.
Series<BigRational> eta_power(long d, std::size_t prec);

// eta_power(d) with weight d/2, level M^2 and the eta character of d.
FormExpansion<BigRational> eta_power_form(long d, std::size_t prec);

// E_k(m tau) to the given precision.
Series<BigRational> eisenstein_at(int k, std::size_t m, std::size_t prec);

// Result coefficient n is sum_{delta | (m, n)} chi(delta) delta^(k-1) a(m n / delta^2),
// for n < floor(prec / m).
template <class Ring>
Series<Ring> hecke_apply(const FormExpansion<Ring>& f, std::uint64_t m) {
  if (m == 0) throw PreconditionError("hecke_apply: m must be positive");
  if (f.weight.get_den() != 1 || f.weight <= 0)
    throw PreconditionError("hecke_apply: weight must be a positive integer");
  const unsigned long km1 = f.weight.get_num().get_ui() - 1;
  const std::size_t prec = f.series.prec() / m;
  if (prec == 0) throw PreconditionError("hecke_apply: precision too small for T_m");
  std::vector<Ring> out(prec, Ring(0));
  for (std::size_t n = 0; n < prec; ++n) {
    const std::uint64_t g = std::gcd(m, static_cast<std::uint64_t>(n));
    Ring acc(0);
    for (std::uint64_t delta = 1; delta <= g; ++delta) {
      if (g % delta != 0) continue;
      const int chi = f.character(delta, f.level);
      if (chi == 0) continue;
      const std::size_t idx = m * n / (delta * delta);
      if (is_zero(f.series[idx])) continue;
      BigRational factor(ipow(static_cast<std::uint64_t>(delta), km1) * chi);
      acc += f.series[idx] * factor;
    }
    out[n] = std::move(acc);
  }
  return Series<Ring>(std::move(out));
}

// Pairs (n, ell), ell prime and n ell < prec, where
//   a(n) a(ell) != a(n ell) + chi(ell) ell^(k-1) a(n / ell).
template <class Ring>
std::vector<std::pair<std::size_t, std::uint64_t>> eigenform_violations(const FormExpansion<Ring>& f,
                                                                        std::size_t prec) {
  if (prec > f.series.prec()) throw PreconditionError("eigenform_violations: prec beyond series");
  if (f.series.prec() < 2 || !(f.series[1] == Ring(1)))
    throw NotNormalized("eigenform_violations: a(1) != 1");
  if (f.weight.get_den() != 1 || f.weight <= 0)
    throw PreconditionError("eigenform_violations: weight must be a positive integer");
  const unsigned long km1 = f.weight.get_num().get_ui() - 1;
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  for (std::uint64_t ell : primes_below(prec)) {
    const Ring& a_ell = f.series[ell];
    const BigRational twist(ipow(ell, km1) * f.character(ell, f.level));
    for (std::size_t n = 1; n * ell < prec; ++n) {
      Ring rhs = f.series[n * ell];
      if (n % ell == 0 && sgn(twist) != 0) rhs += f.series[n / ell] * twist;
      if (!(f.series[n] * a_ell == rhs)) out.emplace_back(n, ell);
    }
  }
  return out;
}

// Pairs (m, n), 2 <= m < n, gcd(m, n) = 1, m n < limit, with a(mn) != a(m) a(n).
template <class Ring>
std::vector<std::pair<std::size_t, std::size_t>> multiplicativity_violations(const Series<Ring>& f,
                                                                             std::size_t limit) {
  if (limit > f.prec()) throw PreconditionError("multiplicativity_violations: limit beyond series");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t m = 2; m * (m + 1) < limit; ++m) {
    for (std::size_t n = m + 1; m * n < limit; ++n) {
      if (std::gcd(m, n) != 1) continue;
      if (!(f[m] * f[n] == f[m * n])) out.emplace_back(m, n);
    }
  }
  return out;
}

// Divides by the coefficient at the lowest nonzero exponent.
template <class Ring>
Series<Ring> normalize(const Series<Ring>& f) {
  const auto s = f.support();
  if (s.empty()) throw PreconditionError("normalize: zero series");
  const Ring c = inverse(f[s.front()]);
  return scale(f, c);
}

// eta(12 tau)^d as sum_i coefficients[i] * components[i], each component being
// one of the displayed eigenform combinations (unnormalized).
struct SerreDecomposition {
  long d;
  BigRational weight;
  std::vector<Series<QuadRational>> components;
  std::vector<QuadRational> coefficients;

  Series<QuadRational> reconstruct() const;
};

// d in {10, 14, 26}. The d = 10 components have rational coefficients (im = 0).
SerreDecomposition serre_components(long d, std::size_t prec);

// Two-tier eigenform report for forms whose Nebentypus is not pinned down:
// coprime multiplicativity (character-free) and the prime recursion under a
// candidate character.
struct EigenformReport {
  std::vector<std::pair<std::size_t, std::size_t>> multiplicativity;
  std::vector<std::pair<std::size_t, std::uint64_t>> recursion;

  bool multiplicative() const { return multiplicativity.empty(); }
  bool consistent() const { return recursion.empty(); }
};

// Tier 2 uses the d = 2 eta character (-1/.) at level 144.
EigenformReport check_serre_component(const SerreDecomposition& dec, std::size_t index,
                                      std::size_t prec);

// Steps through a_2(ell^i) mod ell^v, starting at i = 0.
class A2PowerRecurrence {
 public:
  A2PowerRecurrence(std::uint64_t ell, unsigned v);

  std::size_t index() const { return index_; }
  const BigInt& value() const { return current_; }
  const BigInt& next_value() const { return next_; }
  const BigInt& modulus() const { return modulus_; }
  void advance();

 private:
  BigInt modulus_;
  BigInt a_ell_;
  int chi_ = 0;
  std::size_t index_ = 0;
  BigInt current_;
  BigInt next_;
};

// a_2(ell^i) mod ell^v for i = 0..i_max via
//   a_2(ell^(i+1)) = a_2(ell^i) a_2(ell) - chi(ell) a_2(ell^(i-1)),
// chi = (-1/.) at level 144. For ell = 1 mod 12 chi(ell) = 1.
std::vector<BigInt> a2_prime_power_sequence(std::uint64_t ell, unsigned v, std::size_t i_max);

}  // namespace fracpart

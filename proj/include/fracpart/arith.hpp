#pragma once

// Exact scalar arithmetic: GMP-backed integers and rationals, the quadratic
// extension Q(sqrt(-3)), l-adic valuations and residue symbols.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fracpart {

using BigInt = mpz_class;
// mpq_class keeps values canonical (lowest terms, positive denominator) as
// long as every construction from a raw num/den pair goes through
// make_rational().
using BigRational = mpq_class;

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value whose denominator is divisible by the prime was asked for a residue.
class NotLIntegral : public std::domain_error {
 public:
  explicit NotLIntegral(const std::string& what,
                        std::optional<std::size_t> index = std::nullopt)
      : std::domain_error(what), index_(index) {}

  // Coefficient index that triggered the failure, when raised on a series.
  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigRational make_rational(const BigInt& num, const BigInt& den);

// Accepts "A/B" or "A" with an optional sign; the result is canonical.
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

// "<num>/<den>", always in lowest terms, e.g. "-3395395/62748517" or "7/1".
std::string to_string(const BigRational& x);
std::string to_string(const BigInt& x);

BigInt ipow(const BigInt& base, unsigned long exp);
BigInt ipow(std::uint64_t base, unsigned long exp);

// Primality uses GMP's Baillie-PSW plus Miller-Rabin rounds
// (mpz_probab_prime_p, 40 reps). Inputs here are small primes typed by a user,
// so a probabilistic answer is accepted.
bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);
void require_prime(std::uint64_t ell, std::string_view what = "ell");
std::vector<std::uint64_t> primes_below(std::uint64_t bound);

class ExtendedValuation {
 public:
  constexpr explicit ExtendedValuation(std::int64_t v) : value_(v) {}
  static constexpr ExtendedValuation infinity() {
    ExtendedValuation inf(0);
    inf.infinite_ = true;
    return inf;
  }

  constexpr bool is_infinite() const { return infinite_; }
  // Throws InvariantViolation for INFINITY.
  std::int64_t value() const;

  friend constexpr bool operator==(const ExtendedValuation& a,
                                   const ExtendedValuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedValuation& a,
                                                    const ExtendedValuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const ExtendedValuation& a, std::int64_t b) {
    return !a.infinite_ && a.value_ == b;
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedValuation& a,
                                                    std::int64_t b) {
    if (a.infinite_) return std::strong_ordering::greater;
    return a.value_ <=> b;
  }
  friend constexpr ExtendedValuation operator+(const ExtendedValuation& a,
                                               const ExtendedValuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedValuation(a.value_ + b.value_);
  }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

std::string to_string(const ExtendedValuation& v);

ExtendedValuation padic_ord(const BigInt& x, std::uint64_t ell);
ExtendedValuation padic_ord(const BigRational& x, std::uint64_t ell);

// Requires an odd prime ell.
int legendre_symbol(const BigInt& a, std::uint64_t ell);
// Kronecker extension of the Jacobi symbol; m != 0.
int kronecker_symbol(const BigInt& a, const BigInt& m);

// Numerator of the Kronecker symbol attached to eta(tau)^d:
// (-1)^(d/2) for even d, 12 when gcd(d, 6) = 1, -4 for odd multiples of 3.
long eta_character_numerator(long d);
int chi_eta(long d, const BigInt& m);

// numerator * denominator^{-1} mod ell^k, canonical in [0, ell^k).
BigInt reduce_mod_prime_power(const BigRational& x, std::uint64_t ell, unsigned k);

// a + b*sqrt(-3) with rational a, b.
class QuadRational {
 public:
  QuadRational() = default;
  QuadRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  QuadRational(BigRational re) : re_(std::move(re)) {}  // NOLINT
  QuadRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

  static QuadRational sqrt_minus3() { return {BigRational(0), BigRational(1)}; }

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_rational() const { return sgn(im_) == 0; }

  BigRational norm() const { return BigRational(re_ * re_ + 3 * im_ * im_); }
  QuadRational conj() const { return {re_, BigRational(-im_)}; }
  QuadRational inverse() const;

  QuadRational& operator+=(const QuadRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  QuadRational& operator-=(const QuadRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  QuadRational& operator*=(const QuadRational& o);
  QuadRational& operator*=(const BigRational& s) {
    re_ *= s;
    im_ *= s;
    return *this;
  }
  QuadRational& operator/=(const QuadRational& o) { return *this *= o.inverse(); }

  friend QuadRational operator+(QuadRational a, const QuadRational& b) { return a += b; }
  friend QuadRational operator-(QuadRational a, const QuadRational& b) { return a -= b; }
  friend QuadRational operator*(QuadRational a, const QuadRational& b) { return a *= b; }
  friend QuadRational operator*(QuadRational a, const BigRational& s) { return a *= s; }
  friend QuadRational operator/(QuadRational a, const QuadRational& b) { return a /= b; }
  friend QuadRational operator-(const QuadRational& a) {
    return {BigRational(-a.re_), BigRational(-a.im_)};
  }
  friend bool operator==(const QuadRational& a, const QuadRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  BigRational re_{0};
  BigRational im_{0};
};

// "<re>+<im>*sqrt(-3)"
std::string to_string(const QuadRational& x);

// Ring helpers shared by the generic series code.
inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }
inline bool is_zero(const QuadRational& x) { return x.is_zero(); }
BigRational inverse(const BigRational& x);
inline QuadRational inverse(const QuadRational& x) { return x.inverse(); }

}  // namespace fracpart

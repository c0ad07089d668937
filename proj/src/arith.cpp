#include "fracpart/arith.hpp"

#include <cctype>

namespace fracpart {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw PreconditionError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) throw PreconditionError("not an integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw PreconditionError("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den < 0) throw PreconditionError("denominator must be unsigned: '" + std::string(text) + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const BigRational& x) {
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

BigInt ipow(std::uint64_t base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::uint64_t n) { return is_prime(BigInt(static_cast<unsigned long>(n))); }

void require_prime(std::uint64_t ell, std::string_view what) {
  if (!is_prime(ell))
    throw PreconditionError(std::string(what) + " = " + std::to_string(ell) + " is not prime");
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 3) return out;
  std::vector<bool> composite(bound, false);
  for (std::uint64_t p = 2; p < bound; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = p * p; q < bound; q += p) composite[q] = true;
  }
  return out;
}

std::int64_t ExtendedValuation::value() const {
  if (infinite_) throw InvariantViolation("valuation is INFINITY");
  return value_;
}

std::string to_string(const ExtendedValuation& v) {
  return v.is_infinite() ? std::string("INFINITY") : std::to_string(v.value());
}

ExtendedValuation padic_ord(const BigInt& x, std::uint64_t ell) {
  require_prime(ell);
  if (sgn(x) == 0) return ExtendedValuation::infinity();
  const BigInt p(static_cast<unsigned long>(ell));
  BigInt rest(x);
  // mpz_remove strips every factor of p and returns how many it removed.
  const auto removed = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return ExtendedValuation(static_cast<std::int64_t>(removed));
}

ExtendedValuation padic_ord(const BigRational& x, std::uint64_t ell) {
  if (sgn(x) == 0) {
    require_prime(ell);
    return ExtendedValuation::infinity();
  }
  return ExtendedValuation(padic_ord(x.get_num(), ell).value() -
                           padic_ord(x.get_den(), ell).value());
}

int legendre_symbol(const BigInt& a, std::uint64_t ell) {
  if (ell == 2 || !is_prime(ell))
    throw PreconditionError("legendre_symbol needs an odd prime, got " + std::to_string(ell));
  const BigInt p(static_cast<unsigned long>(ell));
  BigInt r = a % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

int kronecker_symbol(const BigInt& a, const BigInt& m) {
  if (sgn(m) == 0) throw PreconditionError("kronecker_symbol: m = 0");
  return mpz_kronecker(a.get_mpz_t(), m.get_mpz_t());
}

long eta_character_numerator(long d) {
  if (d % 2 == 0) return (d / 2) % 2 == 0 ? 1 : -1;
  if (d % 3 != 0) return 12;
  return -4;
}

int chi_eta(long d, const BigInt& m) {
  if (m < 1) throw PreconditionError("chi_eta: m must be positive");
  return kronecker_symbol(BigInt(eta_character_numerator(d)), m);
}

BigInt reduce_mod_prime_power(const BigRational& x, std::uint64_t ell, unsigned k) {
  require_prime(ell);
  if (k == 0) throw PreconditionError("reduce_mod_prime_power: k must be positive");
  const BigInt modulus = ipow(ell, k);
  if (x.get_den() % static_cast<unsigned long>(ell) == 0)
    throw NotLIntegral(to_string(x) + " is not " + std::to_string(ell) + "-integral");
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), modulus.get_mpz_t());
  BigInt r = (x.get_num() * inv) % modulus;
  if (r < 0) r += modulus;
  return r;
}

BigRational inverse(const BigRational& x) {
  if (sgn(x) == 0) throw PreconditionError("inverse of zero");
  return BigRational(1) / x;
}

QuadRational& QuadRational::operator*=(const QuadRational& o) {
  // (a + b w)(c + d w) with w^2 = -3
  BigRational re = re_ * o.re_ - 3 * im_ * o.im_;
  BigRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

QuadRational QuadRational::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  const BigRational n = norm();
  return {BigRational(re_ / n), BigRational(-im_ / n)};
}

std::string to_string(const QuadRational& x) {
  return to_string(x.re()) + "+" + to_string(x.im()) + "*sqrt(-3)";
}

}  // namespace fracpart

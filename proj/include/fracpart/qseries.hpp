#pragma once

// Truncated formal power series over an exact coefficient ring.
//
// A Series of precision N carries the coefficients of q^0 .. q^(N-1) exactly;
// everything at q^N and beyond is unknown. Binary operations return the
// smaller of the two precisions and never pad with zeros.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracpart/arith.hpp"

namespace fracpart {

template <class Ring>
class Series {
 public:
  explicit Series(std::size_t prec) : coeffs_(prec, Ring(0)) {
    if (prec == 0) throw PreconditionError("series precision must be positive");
  }
  explicit Series(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("series precision must be positive");
  }

  static Series one(std::size_t prec) { return monomial(0, Ring(1), prec); }
  static Series monomial(std::size_t exponent, Ring c, std::size_t prec) {
    Series s(prec);
    if (exponent < prec) s.coeffs_[exponent] = std::move(c);
    return s;
  }

  std::size_t prec() const { return coeffs_.size(); }
  const Ring& operator[](std::size_t n) const { return coeffs_[n]; }
  // Coefficient with the p(n) := 0 for n < 0 convention; n must be < prec.
  Ring coeff(std::int64_t n) const {
    if (n < 0) return Ring(0);
    if (static_cast<std::size_t>(n) >= prec())
      throw PreconditionError("coefficient " + std::to_string(n) + " beyond precision " +
                              std::to_string(prec()));
    return coeffs_[static_cast<std::size_t>(n)];
  }
  std::span<const Ring> coeffs() const { return coeffs_; }

  // Exponents carrying a nonzero coefficient, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
      if (!is_zero(coeffs_[n])) out.push_back(n);
    return out;
  }

  Series truncate(std::size_t prec) const {
    if (prec > this->prec())
      throw PreconditionError("cannot truncate to a larger precision");
    return Series(std::vector<Ring>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(prec)));
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Ring> coeffs_;
};

template <class Ring>
Series<Ring> operator+(const Series<Ring>& f, const Series<Ring>& g) {
  const std::size_t prec = std::min(f.prec(), g.prec());
  std::vector<Ring> out(prec);
  for (std::size_t n = 0; n < prec; ++n) out[n] = f[n] + g[n];
  return Series<Ring>(std::move(out));
}

template <class Ring>
Series<Ring> operator-(const Series<Ring>& f, const Series<Ring>& g) {
  const std::size_t prec = std::min(f.prec(), g.prec());
  std::vector<Ring> out(prec);
  for (std::size_t n = 0; n < prec; ++n) out[n] = f[n] - g[n];
  return Series<Ring>(std::move(out));
}

// Cauchy product. Zero coefficients of the sparser operand are skipped, which
// keeps products with Euler products at O(N^1.5).
template <class Ring>
Series<Ring> operator*(const Series<Ring>& f, const Series<Ring>& g) {
  const std::size_t prec = std::min(f.prec(), g.prec());
  auto fs = f.truncate(prec).support();
  auto gs = g.truncate(prec).support();
  const bool swap = gs.size() < fs.size();
  const Series<Ring>& a = swap ? g : f;
  const Series<Ring>& b = swap ? f : g;
  const auto& as = swap ? gs : fs;
  std::vector<Ring> out(prec, Ring(0));
  for (std::size_t n = 0; n < prec; ++n) {
    Ring acc(0);
    for (std::size_t i : as) {
      if (i > n) break;
      if (!is_zero(b[n - i])) acc += a[i] * b[n - i];
    }
    out[n] = std::move(acc);
  }
  return Series<Ring>(std::move(out));
}

template <class Ring, class Scalar>
Series<Ring> scale(const Series<Ring>& f, const Scalar& c) {
  std::vector<Ring> out(f.prec());
  for (std::size_t n = 0; n < f.prec(); ++n) out[n] = f[n] * c;
  return Series<Ring>(std::move(out));
}

template <class Ring>
Series<Ring> operator-(const Series<Ring>& f) {
  std::vector<Ring> out(f.prec());
  for (std::size_t n = 0; n < f.prec(); ++n) out[n] = -f[n];
  return Series<Ring>(std::move(out));
}

// Converts coefficients into a larger ring, e.g. BigRational -> QuadRational.
template <class To, class From>
Series<To> convert(const Series<From>& f) {
  std::vector<To> out;
  out.reserve(f.prec());
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return Series<To>(std::move(out));
}

template <class Ring>
Series<Ring> series_inverse(const Series<Ring>& f) {
  if (is_zero(f[0])) throw PreconditionError("series constant term is not invertible");
  const Ring c0 = inverse(f[0]);
  auto fs = f.support();
  std::vector<Ring> g(f.prec(), Ring(0));
  g[0] = c0;
  for (std::size_t n = 1; n < f.prec(); ++n) {
    Ring acc(0);
    for (std::size_t k : fs) {
      if (k == 0) continue;
      if (k > n) break;
      acc += f[k] * g[n - k];
    }
    g[n] = -(acc * c0);
  }
  return Series<Ring>(std::move(g));
}

template <class Ring>
Series<Ring> series_pow_int(const Series<Ring>& f, long e) {
  if (e == 0) return Series<Ring>::one(f.prec());
  Series<Ring> base = e < 0 ? series_inverse(f) : f;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Series<Ring> result = Series<Ring>::one(f.prec());
  bool first = true;
  while (k > 0) {
    if (k & 1UL) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1UL;
    if (k > 0) base = base * base;
  }
  return result;
}

// f^alpha for f(0) = 1 via the logarithmic-derivative recurrence
//   n g(n) = sum_{k=1..n} (alpha k - (n - k)) f(k) g(n - k),   g(0) = 1,
// the unique solution of f g' = alpha f' g.
template <class Ring>
Series<Ring> series_pow_rational(const Series<Ring>& f, const BigRational& alpha) {
  if (!(f[0] == Ring(1))) throw PreconditionError("series_pow_rational needs f(0) = 1");
  const BigInt& a = alpha.get_num();
  const BigInt& b = alpha.get_den();
  auto fs = f.support();
  std::vector<Ring> g(f.prec(), Ring(0));
  g[0] = Ring(1);
  for (std::size_t n = 1; n < f.prec(); ++n) {
    // Accumulate b * n * g(n) with integer weights, then divide once.
    Ring acc(0);
    for (std::size_t k : fs) {
      if (k == 0) continue;
      if (k > n) break;
      if (is_zero(g[n - k])) continue;
      const BigInt weight = a * static_cast<unsigned long>(k) - b * static_cast<unsigned long>(n - k);
      if (sgn(weight) == 0) continue;
      acc += (f[k] * g[n - k]) * BigRational(weight);
    }
    g[n] = acc * make_rational(1, BigInt(b * static_cast<unsigned long>(n)));
  }
  return Series<Ring>(std::move(g));
}

// q -> q^m; precision becomes m * prec(f).
template <class Ring>
Series<Ring> substitute_power(const Series<Ring>& f, std::size_t m) {
  if (m == 0) throw PreconditionError("substitute_power: m must be positive");
  std::vector<Ring> out(f.prec() * m, Ring(0));
  for (std::size_t n = 0; n < f.prec(); ++n) out[n * m] = f[n];
  return Series<Ring>(std::move(out));
}

// n -> f(m n + c), precision ceil((prec(f) - c) / m).
template <class Ring>
Series<Ring> extract_progression(const Series<Ring>& f, std::size_t m, std::size_t c) {
  if (m == 0) throw PreconditionError("extract_progression: m must be positive");
  if (c >= m) throw PreconditionError("extract_progression: need c < m");
  if (c >= f.prec()) throw PreconditionError("extract_progression: offset beyond precision");
  const std::size_t prec = (f.prec() - c + m - 1) / m;
  std::vector<Ring> out(prec);
  for (std::size_t n = 0; n < prec; ++n) out[n] = f[m * n + c];
  return Series<Ring>(std::move(out));
}

// Multiplication by q^t; precision grows by t.
template <class Ring>
Series<Ring> series_shift(const Series<Ring>& f, std::size_t t) {
  std::vector<Ring> out(f.prec() + t, Ring(0));
  std::copy(f.coeffs().begin(), f.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(t));
  return Series<Ring>(std::move(out));
}

// (q^M; q^M)_inf to the given precision, filled from the pentagonal number
// theorem: (-1)^k at M k(3k-1)/2 for every integer k.
Series<BigRational> euler_product(std::size_t m, std::size_t prec);

// Coefficients p_alpha(0 .. prec-1) of (q;q)_inf^alpha.
Series<BigRational> frac_partition_series(const BigRational& alpha, std::size_t prec);

// Coefficientwise reduce_mod_prime_power; NotLIntegral carries the index.
std::vector<BigInt> series_reduce_mod(const Series<BigRational>& f, std::uint64_t ell, unsigned k);

// Golden-file format: "# prec=<N>" then "<exponent>\t<coefficient>" for every
// nonzero coefficient in ascending order.
void write_series(std::ostream& out, const Series<BigRational>& f);
void write_series(std::ostream& out, const Series<QuadRational>& f);
Series<BigRational> read_series(std::istream& in);

}  // namespace fracpart

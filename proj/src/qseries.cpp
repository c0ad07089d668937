#include "fracpart/qseries.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace fracpart {

Series<BigRational> euler_product(std::size_t m, std::size_t prec) {
  if (m == 0) throw PreconditionError("euler_product: M must be positive");
  if (prec == 0) throw PreconditionError("series precision must be positive");
  std::vector<BigRational> out(prec, BigRational(0));
  out[0] = 1;
  // k and -k give the two generalized pentagonal numbers k(3k -/+ 1)/2.
  for (std::size_t k = 1;; ++k) {
    const std::size_t lo = m * (k * (3 * k - 1) / 2);
    if (lo >= prec) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    out[lo] = sign;
    const std::size_t hi = m * (k * (3 * k + 1) / 2);
    if (hi < prec) out[hi] = sign;
  }
  return Series<BigRational>(std::move(out));
}

Series<BigRational> frac_partition_series(const BigRational& alpha, std::size_t prec) {
  return series_pow_rational(euler_product(1, prec), alpha);
}

std::vector<BigInt> series_reduce_mod(const Series<BigRational>& f, std::uint64_t ell, unsigned k) {
  std::vector<BigInt> out;
  out.reserve(f.prec());
  for (std::size_t n = 0; n < f.prec(); ++n) {
    try {
      out.push_back(reduce_mod_prime_power(f[n], ell, k));
    } catch (const NotLIntegral& e) {
      throw NotLIntegral(std::string(e.what()) + " at index " + std::to_string(n), n);
    }
  }
  return out;
}

namespace {

template <class Ring>
void write_series_impl(std::ostream& out, const Series<Ring>& f) {
  out << "# prec=" << f.prec() << '\n';
  for (std::size_t n : f.support()) out << n << '\t' << to_string(f[n]) << '\n';
}

}  // namespace

void write_series(std::ostream& out, const Series<BigRational>& f) { write_series_impl(out, f); }
void write_series(std::ostream& out, const Series<QuadRational>& f) { write_series_impl(out, f); }

Series<BigRational> read_series(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# prec=", 0) != 0)
    throw PreconditionError("series file must start with '# prec=<N>'");
  const auto prec = std::stoull(line.substr(7));
  if (prec == 0) throw PreconditionError("series precision must be positive");
  std::vector<BigRational> coeffs(prec, BigRational(0));
  std::size_t last = 0;
  bool any = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw PreconditionError("malformed series line: " + line);
    const auto exponent = std::stoull(line.substr(0, tab));
    if (exponent >= prec) throw PreconditionError("exponent beyond precision: " + line);
    if (any && exponent <= last) throw PreconditionError("exponents must ascend: " + line);
    coeffs[exponent] = parse_rational(line.substr(tab + 1));
    last = exponent;
    any = true;
  }
  return Series<BigRational>(std::move(coeffs));
}

}  // namespace fracpart

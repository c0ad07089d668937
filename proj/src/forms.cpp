#include "fracpart/forms.hpp"

namespace fracpart {

EtaPowerSpec EtaPowerSpec::of(long d) {
  if (d <= 0) throw PreconditionError("eta power d must be a positive integer, got " + std::to_string(d));
  const auto g = static_cast<std::uint64_t>(std::gcd(d, 24L));
  return {d, 24 / g, static_cast<std::uint64_t>(d) / g};
}

BigInt divisor_sigma(unsigned j, std::uint64_t n) {
  if (n == 0) throw PreconditionError("divisor_sigma: n must be positive");
  BigInt total = 0;
  for (std::uint64_t e = 1; e * e <= n; ++e) {
    if (n % e != 0) continue;
    total += ipow(e, j);
    if (e != n / e) total += ipow(n / e, j);
  }
  return total;
}

Series<BigRational> eisenstein_series(int k, std::size_t prec) {
  if (k == 8) {
    const auto e4 = eisenstein_series(4, prec);
    return e4 * e4;
  }
  long c;
  unsigned j;
  if (k == 4) {
    c = 240;
    j = 3;
  } else if (k == 6) {
    c = -504;
    j = 5;
  } else {
    throw PreconditionError("eisenstein_series: unsupported weight " + std::to_string(k));
  }
  if (prec == 0) throw PreconditionError("series precision must be positive");
  std::vector<BigRational> out(prec, BigRational(0));
  out[0] = 1;
  for (std::size_t n = 1; n < prec; ++n) out[n] = BigRational(BigInt(c * divisor_sigma(j, n)));
  return Series<BigRational>(std::move(out));
}

Series<BigRational> eisenstein_at(int k, std::size_t m, std::size_t prec) {
  const std::size_t base = (prec + m - 1) / m;
  return substitute_power(eisenstein_series(k, base), m).truncate(prec);
}

Series<BigRational> eta_power(long d, std::size_t prec) {
  const auto spec = EtaPowerSpec::of(d);
  if (prec == 0) throw PreconditionError("series precision must be positive");
  if (prec <= spec.t) return Series<BigRational>(prec);
  return series_shift(series_pow_int(euler_product(spec.m, prec - spec.t), d), spec.t);
}

FormExpansion<BigRational> eta_power_form(long d, std::size_t prec) {
  const auto spec = EtaPowerSpec::of(d);
  return {eta_power(d, prec), make_rational(d, 2), spec.m * spec.m,
          Character::kronecker(eta_character_numerator(d))};
}

Series<QuadRational> SerreDecomposition::reconstruct() const {
  Series<QuadRational> total(components.front().prec());
  for (std::size_t i = 0; i < components.size(); ++i)
    total = total + scale(components[i], coefficients[i]);
  return total;
}

SerreDecomposition serre_components(long d, std::size_t prec) {
  using Q = Series<QuadRational>;
  const QuadRational w = QuadRational::sqrt_minus3();
  const Q eta2 = convert<QuadRational>(eta_power(2, prec));
  const Q e4 = convert<QuadRational>(eisenstein_at(4, 12, prec));
  const Q e6 = convert<QuadRational>(eisenstein_at(6, 12, prec));

  SerreDecomposition out{d, {}, {}, {}};
  if (d == 10) {
    const Q eta10 = convert<QuadRational>(eta_power(10, prec));
    const Q base = e4 * eta2;
    const Q twist = scale(eta10, QuadRational(48));
    out.weight = 5;
    out.components = {base + twist, base - twist};
    const QuadRational c(make_rational(1, 96));
    out.coefficients = {c, -c};
  } else if (d == 14) {
    const Q eta14 = convert<QuadRational>(eta_power(14, prec));
    const Q base = e6 * eta2;
    const Q twist = scale(eta14, QuadRational(360) * w);
    out.weight = 7;
    out.components = {base + twist, base - twist};
    const QuadRational c = (QuadRational(720) * w).inverse();
    out.coefficients = {c, -c};
  } else if (d == 26) {
    const Q eta10 = convert<QuadRational>(eta_power(10, prec));
    const Q eta14 = convert<QuadRational>(eta_power(14, prec));
    const Q eta26 = convert<QuadRational>(eta_power(26, prec));
    const Q e8 = convert<QuadRational>(eisenstein_at(8, 12, prec));
    const Q base = e6 * e6 * eta2;
    const Q plus = base + scale(eta26, QuadRational(9398592));
    const Q minus = base - scale(eta26, QuadRational(6910272));
    const Q t14 = scale(e6 * eta14, QuadRational(102960) * w);
    const Q t10 = scale(e8 * eta10, QuadRational(20592));
    out.weight = 13;
    out.components = {plus + t14, plus - t14, minus + t10, minus - t10};
    const QuadRational c(make_rational(1, 32617728));
    out.coefficients = {c, c, -c, -c};
  } else {
    throw PreconditionError("serre_components: d must be 10, 14 or 26");
  }
  return out;
}

EigenformReport check_serre_component(const SerreDecomposition& dec, std::size_t index,
                                      std::size_t prec) {
  if (index >= dec.components.size()) throw PreconditionError("check_serre_component: bad index");
  const auto normalized = normalize(dec.components[index]);
  EigenformReport report;
  report.multiplicativity = multiplicativity_violations(normalized, prec);
  const FormExpansion<QuadRational> form{normalized, dec.weight, 144,
                                         Character::kronecker(eta_character_numerator(2))};
  report.recursion = eigenform_violations(form, prec);
  return report;
}

namespace {

BigInt reduce_mod(BigInt x, const BigInt& modulus) {
  x %= modulus;
  if (x < 0) x += modulus;
  return x;
}

}  // namespace

A2PowerRecurrence::A2PowerRecurrence(std::uint64_t ell, unsigned v) {
  require_prime(ell);
  if (v == 0) throw PreconditionError("a2 recurrence: v must be positive");
  modulus_ = ipow(ell, v);
  // Outside n = 1 (mod 12) the coefficient vanishes.
  a_ell_ = 0;
  if (ell % 12 == 1) a_ell_ = eta_power(2, ell + 1)[ell].get_num();
  chi_ = Character::kronecker(eta_character_numerator(2))(ell, 144);
  current_ = reduce_mod(1, modulus_);
  next_ = reduce_mod(a_ell_, modulus_);
}

void A2PowerRecurrence::advance() {
  BigInt following = reduce_mod(next_ * a_ell_ - chi_ * current_, modulus_);
  current_ = std::move(next_);
  next_ = std::move(following);
  ++index_;
}

std::vector<BigInt> a2_prime_power_sequence(std::uint64_t ell, unsigned v, std::size_t i_max) {
  A2PowerRecurrence rec(ell, v);
  std::vector<BigInt> seq;
  seq.reserve(i_max + 1);
  for (std::size_t i = 0; i <= i_max; ++i, rec.advance()) seq.push_back(rec.value());
  return seq;
}

}  // namespace fracpart

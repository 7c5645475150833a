#include "rubbertaut/power_series.hpp"

#include <algorithm>
#include <string>

#include "rubbertaut/errors.hpp"

namespace rubbertaut {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("power series needs at least the constant coefficient");
}

PowerSeries PowerSeries::zero(int order) {
  if (order < 0) throw InvalidArgument("negative truncation order");
  return PowerSeries(std::vector<Rational>(static_cast<size_t>(order) + 1));
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries s = zero(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::variable(int order) {
  PowerSeries s = zero(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

const Rational& PowerSeries::coeff(int i) const {
  if (i < 0 || i > order())
    throw TruncationExceeded("coefficient x^" + std::to_string(i) + " beyond truncation order " +
                             std::to_string(order()));
  return coeffs_[static_cast<size_t>(i)];
}

PowerSeries PowerSeries::truncated(int n) const {
  if (n < 0 || n > order()) throw InvalidArgument("truncation must lower the order");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  const int n = std::min(order(), o.order());
  PowerSeries r = zero(n);
  for (int i = 0; i <= n; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const { return *this + (-o); }

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  const int n = std::min(order(), o.order());
  PowerSeries r = zero(n);
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

PowerSeries PowerSeries::operator*(const Rational& c) const {
  PowerSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

PowerSeries PowerSeries::pow(int n) const {
  if (n < 0) throw InvalidArgument("negative power of a power series");
  PowerSeries result = constant(1, order());
  PowerSeries base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_[0].is_zero()) throw InvalidArgument("inverse needs a nonzero constant term");
  const int n = order();
  PowerSeries r = zero(n);
  const Rational inv0 = Rational(1) / coeffs_[0];
  r.coeffs_[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc;
    for (int i = 1; i <= k; ++i) acc += coeffs_[i] * r.coeffs_[k - i];
    r.coeffs_[k] = -acc * inv0;
  }
  return r;
}

PowerSeries PowerSeries::log() const {
  if (coeffs_[0] != Rational(1)) throw InvalidArgument("log needs constant term 1");
  const int n = order();
  if (n == 0) return zero(0);
  PowerSeries deriv = zero(n - 1);
  for (int i = 1; i <= n; ++i) deriv.coeffs_[i - 1] = coeffs_[i] * Rational(i);
  const PowerSeries q = deriv * truncated(n - 1).inverse();
  PowerSeries r = zero(n);
  for (int i = 1; i <= n; ++i) r.coeffs_[i] = q.coeffs_[i - 1] / Rational(i);
  return r;
}

PowerSeries PowerSeries::exp() const {
  if (!coeffs_[0].is_zero()) throw InvalidArgument("exp needs constant term 0");
  const int n = order();
  PowerSeries r = zero(n);
  r.coeffs_[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc;
    for (int k = 1; k <= m; ++k) acc += Rational(k) * coeffs_[k] * r.coeffs_[m - k];
    r.coeffs_[m] = acc / Rational(m);
  }
  return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  if (!inner.coeffs_[0].is_zero()) throw InvalidArgument("compose needs inner constant term 0");
  const int n = std::min(order(), inner.order());
  const PowerSeries in = inner.truncated(n);
  PowerSeries r = constant(coeffs_[n], n);
  for (int i = n - 1; i >= 0; --i) r = r * in + constant(coeffs_[i], n);
  return r;
}

PowerSeries series_tau(int order) {
  if (order < 1) throw InvalidArgument("series_tau needs order >= 1");
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  for (int r = 1; r <= order; ++r) {
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(r - 1));
    c[r] = Rational(num, factorial(r));
  }
  return PowerSeries(std::move(c));
}

PowerSeries series_log_sine(int d, int order) {
  if (d < 1) throw InvalidArgument("series_log_sine needs d >= 1");
  if (order < 2 || order % 2 != 0) throw InvalidArgument("series_log_sine needs an even order >= 2");
  // sin(u) with u = d*y/2, then divide by u (a shift of the odd series).
  const Rational half_d(d, 2);
  std::vector<Rational> sine(static_cast<size_t>(order) + 2);
  for (int k = 0; 2 * k + 1 <= order + 1; ++k) {
    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    sine[2 * k + 1] = sign * half_d.pow(2 * k + 1) / Rational(factorial(2 * k + 1));
  }
  std::vector<Rational> quotient(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) quotient[i] = sine[i + 1] / half_d;
  return -PowerSeries(std::move(quotient)).log();
}

Rational series_coeff(const PowerSeries& f, int i) { return f.coeff(i); }
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }
PowerSeries series_pow(const PowerSeries& f, int n) { return f.pow(n); }
PowerSeries series_log(const PowerSeries& f) { return f.log(); }
PowerSeries series_exp(const PowerSeries& f) { return f.exp(); }
PowerSeries series_compose(const PowerSeries& outer, const PowerSeries& inner) { return outer.compose(inner); }

}  // namespace rubbertaut

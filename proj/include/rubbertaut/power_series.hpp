#pragma once

#include <vector>

#include "rubbertaut/rational.hpp"

namespace rubbertaut {

// Truncated formal power series sum_{i<=N} c_i x^i over Q.
// Binary operations truncate to the smaller order; reading past N throws.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries zero(int order);
  static PowerSeries constant(const Rational& c, int order);
  static PowerSeries variable(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  PowerSeries truncated(int order) const;

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries operator*(const Rational& c) const;
  PowerSeries operator-() const { return *this * Rational(-1); }

  PowerSeries pow(int n) const;
  // Multiplicative inverse; requires a nonzero constant term.
  PowerSeries inverse() const;
  // Requires constant term 1.
  PowerSeries log() const;
  // Requires constant term 0.
  PowerSeries exp() const;
  // this(inner(x)); requires inner to have constant term 0.
  PowerSeries compose(const PowerSeries& inner) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// tau(x) = sum_{r>=1} r^{r-1}/r! x^r.
PowerSeries series_tau(int order);

// log((d y/2) / sin(d y/2)), even in y.
PowerSeries series_log_sine(int d, int order);

Rational series_coeff(const PowerSeries& f, int i);
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_pow(const PowerSeries& f, int n);
PowerSeries series_log(const PowerSeries& f);
PowerSeries series_exp(const PowerSeries& f);
PowerSeries series_compose(const PowerSeries& outer, const PowerSeries& inner);

}  // namespace rubbertaut

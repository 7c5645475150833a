#include "rubbertaut/rational.hpp"

#include "rubbertaut/errors.hpp"

namespace rubbertaut {

Rational::Rational(long n, long d) {
  if (d == 0) throw InvalidArgument("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw InvalidArgument("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  std::string text(s);
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) throw InvalidArgument("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw InvalidArgument("rational with zero denominator: '" + text + "'");
  return Rational(q);
}

Rational Rational::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw InvalidArgument("zero to a negative power");
    return Rational(1) / pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class falling_factorial(long n, unsigned k) {
  mpz_class r = 1;
  for (unsigned i = 0; i < k; ++i) r *= (n - static_cast<long>(i));
  if (n >= 0 && n < static_cast<long>(k)) return 0;
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace rubbertaut

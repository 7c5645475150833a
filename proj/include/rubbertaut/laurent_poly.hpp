#pragma once

#include <map>
#include <optional>
#include <utility>

namespace rubbertaut {

// Finite Laurent polynomial in t with coefficients in R. Zero coefficients
// are never stored. R needs +, -, *, a zero default value and a member
// is_zero().
template <class R>
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(R c, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, std::move(c));
    return p;
  }

  const std::map<int, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  R coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? R{} : it->second;
  }

  std::optional<int> min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<int> max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  void add_term(int exponent, R c) {
    auto [it, inserted] = terms_.try_emplace(exponent, std::move(c));
    if (!inserted) it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, R{} - c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  // Coefficient-wise map, e.g. degree truncation of a graded ring.
  template <class F>
  LaurentPoly transformed(F&& f) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, R> terms_;
};

}  // namespace rubbertaut

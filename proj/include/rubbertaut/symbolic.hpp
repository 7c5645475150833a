#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>

#include "rubbertaut/rational.hpp"

namespace rubbertaut {

// Factor spaces of a fixed locus that carry classes.
enum class Slot : int { Curve = 0, Rubber = 1, RationalVertex = 2 };
inline constexpr int kSlotCount = 3;

enum class AtomKind : int {
  NodePsi,       // psi_N: node psi on the positive-genus curve factor
  NodePsiPrime,  // psi_N': node psi on a genus-zero vertex factor
  TargetPsi,     // psi: target psi on the rubber factor
  Lambda,        // lambda_i on the positive-genus curve factor
};

struct Atom {
  AtomKind kind = AtomKind::NodePsi;
  int index = 0;  // lambda index; 0 otherwise

  Slot slot() const;
  int degree() const { return kind == AtomKind::Lambda ? index : 1; }
  std::string name() const;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

inline Atom psi_n() { return {AtomKind::NodePsi, 0}; }
inline Atom psi_n_prime() { return {AtomKind::NodePsiPrime, 0}; }
inline Atom target_psi() { return {AtomKind::TargetPsi, 0}; }
inline Atom lambda(int i) { return {AtomKind::Lambda, i}; }

class ClassMonomial {
 public:
  ClassMonomial() = default;
  ClassMonomial(Atom a, int power);

  const std::map<Atom, int>& powers() const { return powers_; }
  int power(Atom a) const;
  int degree_in(Slot s) const;
  bool is_one() const { return powers_.empty(); }

  friend ClassMonomial operator*(const ClassMonomial& a, const ClassMonomial& b);
  friend auto operator<=>(const ClassMonomial&, const ClassMonomial&) = default;

  std::string str() const;  // "1", "psi_N*lambda_1", "psi^2"

 private:
  std::map<Atom, int> powers_;
};

// Maximum class degree kept on each slot.
using SlotCaps = std::array<int, kSlotCount>;

// Polynomial in atoms with rational coefficients; the coefficient ring of
// localization contributions.
class SymbolicPoly {
 public:
  SymbolicPoly() = default;
  SymbolicPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  SymbolicPoly(const ClassMonomial& m, const Rational& c);

  const std::map<ClassMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const ClassMonomial& m) const;

  void add(const ClassMonomial& m, const Rational& c);
  SymbolicPoly truncated(const SlotCaps& caps) const;

  SymbolicPoly& operator+=(const SymbolicPoly& o);
  friend SymbolicPoly operator+(SymbolicPoly a, const SymbolicPoly& b) { return a += b; }
  friend SymbolicPoly operator-(const SymbolicPoly& a, const SymbolicPoly& b);
  friend SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b);
  friend bool operator==(const SymbolicPoly&, const SymbolicPoly&) = default;

  std::string str() const;  // "4*psi_N - 1/2*psi + 3"

 private:
  std::map<ClassMonomial, Rational> terms_;
};

}  // namespace rubbertaut

#include "rubbertaut/symbolic.hpp"

namespace rubbertaut {

Slot Atom::slot() const {
  switch (kind) {
    case AtomKind::NodePsi:
    case AtomKind::Lambda: return Slot::Curve;
    case AtomKind::TargetPsi: return Slot::Rubber;
    case AtomKind::NodePsiPrime: return Slot::RationalVertex;
  }
  return Slot::Curve;
}

std::string Atom::name() const {
  switch (kind) {
    case AtomKind::NodePsi: return "psi_N";
    case AtomKind::NodePsiPrime: return "psi_N'";
    case AtomKind::TargetPsi: return "psi";
    case AtomKind::Lambda: return "lambda_" + std::to_string(index);
  }
  return "?";
}

ClassMonomial::ClassMonomial(Atom a, int power) {
  if (power > 0 && !(a.kind == AtomKind::Lambda && a.index == 0)) powers_[a] = power;
}

int ClassMonomial::power(Atom a) const {
  auto it = powers_.find(a);
  return it == powers_.end() ? 0 : it->second;
}

int ClassMonomial::degree_in(Slot s) const {
  int deg = 0;
  for (const auto& [a, p] : powers_)
    if (a.slot() == s) deg += a.degree() * p;
  return deg;
}

ClassMonomial operator*(const ClassMonomial& a, const ClassMonomial& b) {
  ClassMonomial out = a;
  for (const auto& [atom, p] : b.powers_) out.powers_[atom] += p;
  return out;
}

std::string ClassMonomial::str() const {
  if (powers_.empty()) return "1";
  std::string s;
  for (const auto& [a, p] : powers_) {
    if (!s.empty()) s += '*';
    s += a.name();
    if (p > 1) s += "^" + std::to_string(p);
  }
  return s;
}

SymbolicPoly::SymbolicPoly(const Rational& c) { add(ClassMonomial(), c); }
SymbolicPoly::SymbolicPoly(const ClassMonomial& m, const Rational& c) { add(m, c); }

Rational SymbolicPoly::coeff(const ClassMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

void SymbolicPoly::add(const ClassMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymbolicPoly SymbolicPoly::truncated(const SlotCaps& caps) const {
  SymbolicPoly out;
  for (const auto& [m, c] : terms_) {
    bool keep = true;
    for (int s = 0; s < kSlotCount; ++s) keep &= m.degree_in(static_cast<Slot>(s)) <= caps[s];
    if (keep) out.add(m, c);
  }
  return out;
}

SymbolicPoly& SymbolicPoly::operator+=(const SymbolicPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

SymbolicPoly operator-(const SymbolicPoly& a, const SymbolicPoly& b) {
  SymbolicPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add(m, -c);
  return out;
}

SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b) {
  SymbolicPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
  return out;
}

std::string SymbolicPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Rational mag = c.abs();
    if (first)
      s += c.sign() < 0 ? "-" : "";
    else
      s += c.sign() < 0 ? " - " : " + ";
    if (m.is_one())
      s += mag.str();
    else
      s += (mag == Rational(1) ? "" : mag.str() + "*") + m.str();
    first = false;
  }
  return s;
}

}  // namespace rubbertaut

#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rubbertaut/rational.hpp"

namespace rubbertaut {

// psi_1, or the boundary divisor D(S|J): genus-one component with marks S
// glued to a rational component with marks J (|J| >= 2).
struct Generator {
  bool psi = false;
  std::vector<int> genus1_side;  // sorted
  std::vector<int> genus0_side;  // sorted

  static Generator psi1() { return {true, {}, {}}; }
  static Generator boundary(std::vector<int> genus1, std::vector<int> genus0);

  std::string str() const;  // "psi1", "D(2|13)", "D(-|123)"

  // psi1 first, then by size of the rational side, then lexicographically.
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    if (a.psi != b.psi) return a.psi ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.genus0_side.size() != b.genus0_side.size()) return a.genus0_side.size() <=> b.genus0_side.size();
    return a.genus0_side <=> b.genus0_side;
  }
  friend bool operator==(const Generator&, const Generator&) = default;
};

// Rational combination of degree-one generators.
class TautClass {
 public:
  TautClass() = default;
  explicit TautClass(const Generator& g, const Rational& c = 1);

  const std::map<Generator, Rational>& terms() const { return terms_; }
  Rational coeff(const Generator& g) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const Generator& g, const Rational& c);

  TautClass& operator+=(const TautClass& o);
  TautClass& operator-=(const TautClass& o);
  friend TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
  friend TautClass operator-(TautClass a, const TautClass& b) { return a -= b; }
  friend TautClass operator-(const TautClass& a) { return TautClass() - a; }
  friend TautClass operator*(const Rational& c, const TautClass& a);
  friend bool operator==(const TautClass&, const TautClass&) = default;

  std::string str() const;  // "3*psi1 - D(2|13) + 1/2*D(-|123)", "0"

 private:
  std::map<Generator, Rational> terms_;
};

// R^1 of the rational-tails space M^rt_{1,T} on an explicit label set
// containing 1. The single relation expresses psi_1 through boundary
// divisors; reduce() eliminates psi_1 with it.
class RingContext {
 public:
  explicit RingContext(std::vector<int> labels);
  static RingContext standard(int T);  // labels 1..T

  const std::vector<int>& labels() const { return labels_; }
  int T() const { return static_cast<int>(labels_.size()); }
  const TautClass& relation() const { return relation_; }

  // Boundary generators in canonical order: the reduced basis.
  std::vector<Generator> basis() const;
  bool valid(const Generator& g) const;

 private:
  std::vector<int> labels_;
  TautClass relation_;  // psi1 coefficient 1
};

TautClass reduce(const TautClass& c, const RingContext& ctx);
bool equal_mod_relations(const TautClass& a, const TautClass& b, const RingContext& ctx);

// Coordinates of reduce(c) in ctx.basis().
std::vector<Rational> coordinates(const TautClass& c, const RingContext& ctx);
TautClass from_coordinates(const std::vector<Rational>& x, const RingContext& ctx);

// Pullback along the map forgetting `forgotten`, from src to dst = src + {forgotten}.
TautClass pullback_forget(const TautClass& c, int forgotten, const RingContext& src, const RingContext& dst);

// Fiber integral along the map forgetting `forgotten` (src -> dst = src - {forgotten}).
Rational pushforward_forget(const TautClass& c, int forgotten, const RingContext& src, const RingContext& dst);

// Push forward of scalar*[fundamental class] along the section where mark i
// collides with mark j: scalar * D(rest | {i,j}).
TautClass section_pushforward(const Rational& scalar, int i, int j, const RingContext& ctx);

// Relabel marks via `perm` (maps old label -> new label; must fix 1).
TautClass relabel(const TautClass& c, const std::map<int, int>& perm);

}  // namespace rubbertaut

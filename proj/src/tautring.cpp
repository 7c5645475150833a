#include "rubbertaut/tautring.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "rubbertaut/errors.hpp"

namespace rubbertaut {
namespace {

std::string mark_string(const std::vector<int>& marks) {
  if (marks.empty()) return "-";
  std::string s;
  const bool wide = std::any_of(marks.begin(), marks.end(), [](int m) { return m > 9; });
  for (size_t i = 0; i < marks.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(marks[i]);
  }
  return s;
}

std::vector<int> without(const std::vector<int>& set, std::initializer_list<int> drop) {
  std::vector<int> out;
  for (int m : set)
    if (std::find(drop.begin(), drop.end(), m) == drop.end()) out.push_back(m);
  return out;
}

std::vector<int> with(std::vector<int> set, int add) {
  set.push_back(add);
  std::sort(set.begin(), set.end());
  return set;
}

bool contains(const std::vector<int>& set, int m) { return std::binary_search(set.begin(), set.end(), m); }

// Sum over genus-zero sides J with |J| >= 2 of D(labels - J | J), filtered.
template <class Pred>
TautClass boundary_sum(const std::vector<int>& labels, Pred keep) {
  TautClass out;
  const size_t n = labels.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> j, s;
    for (size_t k = 0; k < n; ++k) ((mask >> k) & 1u ? j : s).push_back(labels[k]);
    if (j.size() < 2 || !keep(j)) continue;
    out.add(Generator::boundary(s, j), 1);
  }
  return out;
}

}  // namespace

Generator Generator::boundary(std::vector<int> genus1, std::vector<int> genus0) {
  std::sort(genus1.begin(), genus1.end());
  std::sort(genus0.begin(), genus0.end());
  if (genus0.size() < 2) throw InvalidArgument("boundary divisor needs at least two marks on the rational side");
  return {false, std::move(genus1), std::move(genus0)};
}

std::string Generator::str() const {
  if (psi) return "psi1";
  return "D(" + mark_string(genus1_side) + "|" + mark_string(genus0_side) + ")";
}

TautClass::TautClass(const Generator& g, const Rational& c) { add(g, c); }

Rational TautClass::coeff(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational() : it->second;
}

void TautClass::add(const Generator& g, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TautClass& TautClass::operator+=(const TautClass& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

TautClass& TautClass::operator-=(const TautClass& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

TautClass operator*(const Rational& c, const TautClass& a) {
  TautClass out;
  for (const auto& [g, x] : a.terms_) out.add(g, c * x);
  return out;
}

std::string TautClass::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    Rational mag = c.abs();
    if (first)
      s += c.sign() < 0 ? "-" : "";
    else
      s += c.sign() < 0 ? " - " : " + ";
    if (mag != Rational(1)) s += mag.str() + "*";
    s += g.str();
    first = false;
  }
  return s;
}

RingContext::RingContext(std::vector<int> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    throw InvalidArgument("repeated mark label");
  if (labels_.size() < 2 || !contains(labels_, 1))
    throw InvalidArgument("ring context needs mark 1 and at least one more mark");
  if (labels_.size() > 10) throw ResourceLimit("ring context supports at most 10 marks");

  if (labels_.size() == 2) {
    // Comparison with M_{1,1}: psi_1 = D(-|1b).
    relation_ = TautClass(Generator::psi1()) - TautClass(Generator::boundary({}, labels_));
  } else if (labels_.size() == 3) {
    const int b = labels_[1], c = labels_[2];
    relation_ = TautClass(Generator::psi1()) - TautClass(Generator::boundary({c}, {1, b})) -
                TautClass(Generator::boundary({b}, {1, c})) - TautClass(Generator::boundary({}, labels_));
  } else {
    // Pull back the relation from the context without the largest mark.
    const int top = labels_.back();
    const RingContext smaller(std::vector<int>(labels_.begin(), labels_.end() - 1));
    relation_ = pullback_forget(smaller.relation(), top, smaller, *this);
  }
}

RingContext RingContext::standard(int T) {
  if (T < 2) throw InvalidArgument("ring context needs T >= 2");
  std::vector<int> labels(static_cast<size_t>(T));
  for (int i = 0; i < T; ++i) labels[i] = i + 1;
  return RingContext(labels);
}

std::vector<Generator> RingContext::basis() const {
  std::vector<Generator> out;
  const TautClass all = boundary_sum(labels_, [](const std::vector<int>&) { return true; });
  for (const auto& [g, c] : all.terms()) out.push_back(g);
  return out;
}

bool RingContext::valid(const Generator& g) const {
  if (g.psi) return g.genus1_side.empty() && g.genus0_side.empty();
  if (g.genus0_side.size() < 2) return false;
  std::vector<int> all;
  std::merge(g.genus1_side.begin(), g.genus1_side.end(), g.genus0_side.begin(), g.genus0_side.end(),
             std::back_inserter(all));
  return all == labels_;
}

TautClass reduce(const TautClass& c, const RingContext& ctx) {
  for (const auto& [g, x] : c.terms())
    if (!ctx.valid(g)) throw InvalidArgument("generator " + g.str() + " does not belong to this ring");
  const Rational p = c.coeff(Generator::psi1());
  if (p.is_zero()) return c;
  return c - p * ctx.relation();
}

bool equal_mod_relations(const TautClass& a, const TautClass& b, const RingContext& ctx) {
  return reduce(a - b, ctx).is_zero();
}

std::vector<Rational> coordinates(const TautClass& c, const RingContext& ctx) {
  const TautClass r = reduce(c, ctx);
  std::vector<Rational> out;
  for (const auto& g : ctx.basis()) out.push_back(r.coeff(g));
  return out;
}

TautClass from_coordinates(const std::vector<Rational>& x, const RingContext& ctx) {
  const auto basis = ctx.basis();
  if (x.size() != basis.size()) throw InvalidArgument("coordinate vector has the wrong length");
  TautClass out;
  for (size_t i = 0; i < x.size(); ++i) out.add(basis[i], x[i]);
  return out;
}

TautClass pullback_forget(const TautClass& c, int forgotten, const RingContext& src, const RingContext& dst) {
  if (contains(src.labels(), forgotten)) throw InvalidArgument("pullback: new mark already present");
  if (with(src.labels(), forgotten) != dst.labels()) throw InvalidArgument("pullback: target ring mismatch");
  TautClass out;
  for (const auto& [g, x] : c.terms()) {
    if (!src.valid(g)) throw InvalidArgument("generator " + g.str() + " does not belong to the source ring");
    if (g.psi) {
      out.add(Generator::psi1(), x);
      out.add(Generator::boundary(without(src.labels(), {1}), {1, forgotten}), -x);
    } else {
      out.add(Generator::boundary(with(g.genus1_side, forgotten), g.genus0_side), x);
      out.add(Generator::boundary(g.genus1_side, with(g.genus0_side, forgotten)), x);
    }
  }
  return out;
}

Rational pushforward_forget(const TautClass& c, int forgotten, const RingContext& src, const RingContext& dst) {
  if (!contains(src.labels(), forgotten)) throw InvalidArgument("pushforward: mark not present");
  if (without(src.labels(), {forgotten}) != dst.labels()) throw InvalidArgument("pushforward: target ring mismatch");
  Rational out;
  for (const auto& [g, x] : c.terms()) {
    if (!src.valid(g)) throw InvalidArgument("generator " + g.str() + " does not belong to the source ring");
    if (g.psi) {
      // Dilaton for the forgotten mark 1; otherwise psi_1 = pi^*psi_1 + D(.|1k)
      // and only the divisor has fiber degree.
      out += forgotten == 1 ? x * Rational(src.T() - 1) : x;
    } else if (g.genus0_side.size() == 2 && contains(g.genus0_side, forgotten)) {
      out += x;
    }
  }
  return out;
}

TautClass section_pushforward(const Rational& scalar, int i, int j, const RingContext& ctx) {
  if (i == j) throw InvalidArgument("section needs two distinct marks");
  if (!contains(ctx.labels(), i) || !contains(ctx.labels(), j)) throw InvalidArgument("section mark not present");
  return TautClass(Generator::boundary(without(ctx.labels(), {i, j}), {std::min(i, j), std::max(i, j)}), scalar);
}

TautClass relabel(const TautClass& c, const std::map<int, int>& perm) {
  auto image = [&](int m) {
    auto it = perm.find(m);
    return it == perm.end() ? m : it->second;
  };
  if (image(1) != 1) throw InvalidArgument("relabeling must fix mark 1");
  TautClass out;
  for (const auto& [g, x] : c.terms()) {
    if (g.psi) {
      out.add(g, x);
      continue;
    }
    std::vector<int> s, j;
    for (int m : g.genus1_side) s.push_back(image(m));
    for (int m : g.genus0_side) j.push_back(image(m));
    out.add(Generator::boundary(s, j), x);
  }
  return out;
}

}  // namespace rubbertaut

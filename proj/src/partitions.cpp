#include "rubbertaut/partitions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rubbertaut/errors.hpp"
#include "rubbertaut/rational.hpp"

namespace rubbertaut {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw InvalidArgument("partition parts must be positive");
    total_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool marked_part_before(const MarkedPart& a, const MarkedPart& b) {
  if (a.size != b.size) return a.size > b.size;
  if (a.genus != b.genus) return a.genus;
  if (a.marks.size() != b.marks.size()) return a.marks.size() > b.marks.size();
  return a.marks < b.marks;
}

MarkedPartition::MarkedPartition(std::vector<MarkedPart> parts) : parts_(std::move(parts)) {
  std::set<int> seen;
  int genus_parts = 0;
  for (auto& p : parts_) {
    if (p.size <= 0) throw InvalidArgument("marked partition parts must be positive");
    std::sort(p.marks.begin(), p.marks.end());
    for (int m : p.marks)
      if (!seen.insert(m).second) throw InvalidArgument("mark assigned to two parts");
    genus_parts += p.genus ? 1 : 0;
  }
  if (genus_parts > 1) throw InvalidArgument("at most one distinguished genus part");
  std::sort(parts_.begin(), parts_.end(), marked_part_before);
}

Partition MarkedPartition::base() const {
  std::vector<int> sizes;
  for (const auto& p : parts_) sizes.push_back(p.size);
  return Partition(std::move(sizes));
}

std::vector<int> MarkedPartition::all_marks() const {
  std::vector<int> out;
  for (const auto& p : parts_) out.insert(out.end(), p.marks.begin(), p.marks.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_length) {
  if (d < 1) throw InvalidArgument("enumerate_partitions needs d >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      if (!max_length || static_cast<int>(cur.size()) <= *max_length) out.emplace_back(cur);
      return;
    }
    if (max_length && static_cast<int>(cur.size()) >= *max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

namespace {

template <class Eq, class T>
mpz_class multiplicity_factorials(const std::vector<T>& items, Eq eq) {
  mpz_class r = 1;
  size_t i = 0;
  while (i < items.size()) {
    size_t j = i + 1;
    while (j < items.size() && eq(items[i], items[j])) ++j;
    r *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return r;
}

}  // namespace

mpz_class aut(const Partition& nu) {
  return multiplicity_factorials(nu.parts(), [](int a, int b) { return a == b; });
}

mpz_class aut(const MarkedPartition& mu) {
  // Canonical order keeps identical parts adjacent.
  return multiplicity_factorials(mu.parts(), [](const MarkedPart& a, const MarkedPart& b) { return a == b; });
}

mpz_class orbit_size(const MarkedPartition& mu) { return aut(mu.base()) / aut(mu); }

std::vector<MarkedPartition> enumerate_marked(const Partition& nu, const std::vector<int>& labels) {
  const int l = nu.length();
  std::vector<MarkedPartition> out;
  std::vector<int> slot(labels.size(), 0);
  auto canonical_less = [](const MarkedPartition& a, const MarkedPartition& b) {
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
                                        marked_part_before);
  };
  std::set<MarkedPartition, decltype(canonical_less)> seen(canonical_less);
  // Odometer over all l^|labels| naive assignments.
  while (true) {
    std::vector<MarkedPart> parts(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) parts[i].size = nu[i];
    for (size_t k = 0; k < labels.size(); ++k) parts[slot[k]].marks.push_back(labels[k]);
    MarkedPartition mp(std::move(parts));
    if (seen.insert(mp).second) out.push_back(mp);
    size_t k = 0;
    while (k < slot.size() && ++slot[k] == l) slot[k++] = 0;
    if (k == slot.size()) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace rubbertaut

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rubbertaut {

// Integer partition, parts sorted descending.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts; rejects non-positive parts

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return total_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  // "2+1+1"
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// One part of a marked partition. The genus flag marks the distinguished
// part of an L-graph that carries the contracted positive-genus vertex.
struct MarkedPart {
  int size = 0;
  std::vector<int> marks;  // sorted
  bool genus = false;

  friend bool operator==(const MarkedPart&, const MarkedPart&) = default;
};

// Canonical order: size descending, genus part first, more marks first,
// then marks lexicographically.
bool marked_part_before(const MarkedPart& a, const MarkedPart& b);

// Partition whose parts carry disjoint mark sets; stored in canonical order.
class MarkedPartition {
 public:
  MarkedPartition() = default;
  explicit MarkedPartition(std::vector<MarkedPart> parts);  // canonicalizes

  const std::vector<MarkedPart>& parts() const { return parts_; }
  Partition base() const;
  int length() const { return static_cast<int>(parts_.size()); }
  std::vector<int> all_marks() const;

  friend bool operator==(const MarkedPartition&, const MarkedPartition&) = default;

 private:
  std::vector<MarkedPart> parts_;
};

// All partitions of d, optionally of length <= max_length. Order: reverse
// lexicographic ((d) first, (1,...,1) last).
std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_length = std::nullopt);

// prod m_i! over multiplicities of equal parts.
mpz_class aut(const Partition& nu);

// Order of the group permuting parts equal in size, marks and genus flag.
mpz_class aut(const MarkedPartition& mu);

// Inequivalent assignments of labels to the parts of nu.
std::vector<MarkedPartition> enumerate_marked(const Partition& nu, const std::vector<int>& labels);

// Number of naive label-to-slot assignments equivalent to mu, i.e.
// aut(base) / aut(mu).
mpz_class orbit_size(const MarkedPartition& mu);

}  // namespace rubbertaut

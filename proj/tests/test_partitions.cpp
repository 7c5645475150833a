#include <gtest/gtest.h>

#include "rubbertaut/partitions.hpp"
#include "rubbertaut/rational.hpp"

using namespace rubbertaut;

namespace {

// Euler's pentagonal-number recurrence.
long partition_count(int n) {
  std::vector<long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  }
  return p[n];
}

}  // namespace

TEST(Partitions, Counts) {
  EXPECT_EQ(enumerate_partitions(4).size(), 5u);
  for (int d = 1; d <= 12; ++d) EXPECT_EQ(static_cast<long>(enumerate_partitions(d).size()), partition_count(d));
  const auto short3 = enumerate_partitions(3, 2);
  ASSERT_EQ(short3.size(), 2u);
  EXPECT_EQ(short3[0], Partition({3}));
  EXPECT_EQ(short3[1], Partition({2, 1}));
}

TEST(Partitions, EachOnceSortedDescending) {
  const auto all = enumerate_partitions(7);
  for (size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i].size(), 7);
    EXPECT_TRUE(std::is_sorted(all[i].parts().rbegin(), all[i].parts().rend()));
    for (size_t j = i + 1; j < all.size(); ++j) EXPECT_NE(all[i], all[j]);
  }
}

TEST(Partitions, AutFactor) {
  EXPECT_EQ(aut(Partition({2, 1, 1})), 2);
  EXPECT_EQ(aut(Partition({1, 1, 1})), 6);
  EXPECT_EQ(aut(Partition({2, 2, 1, 1, 1})), 12);
  for (int d = 1; d <= 8; ++d)
    for (const auto& nu : enumerate_partitions(d)) EXPECT_EQ(factorial(static_cast<unsigned>(nu.length())) % aut(nu), 0);
}

TEST(Partitions, MarkedClasses) {
  EXPECT_EQ(enumerate_marked(Partition({1, 1}), {2, 3}).size(), 2u);
  EXPECT_EQ(enumerate_marked(Partition({2, 1}), {}).size(), 1u);
  EXPECT_EQ(enumerate_marked(Partition({2, 1}), {2, 3}).size(), 4u);
  for (int d = 1; d <= 6; ++d)
    for (const auto& nu : enumerate_partitions(d)) EXPECT_EQ(enumerate_marked(nu, {}).size(), 1u);
}

TEST(Partitions, OrbitSizesRecoverNaiveAssignments) {
  const std::vector<std::vector<int>> label_sets = {{}, {2}, {2, 3}};
  for (int d = 1; d <= 5; ++d)
    for (const auto& nu : enumerate_partitions(d))
      for (const auto& labels : label_sets) {
        mpz_class total = 0;
        for (const auto& mu : enumerate_marked(nu, labels)) total += orbit_size(mu);
        mpz_class naive = 1;
        for (size_t k = 0; k < labels.size(); ++k) naive *= nu.length();
        EXPECT_EQ(total, naive) << nu.str();
      }
}

TEST(Partitions, MarkedAutRespectsMarks) {
  const MarkedPartition split({{1, {2}, false}, {1, {3}, false}});
  EXPECT_EQ(aut(split), 1);
  const MarkedPartition bare({{1, {}, false}, {1, {}, false}, {1, {2, 3}, false}});
  EXPECT_EQ(aut(bare), 2);
  const MarkedPartition genus({{1, {}, true}, {1, {}, false}, {1, {}, false}});
  EXPECT_EQ(aut(genus), 2);
}

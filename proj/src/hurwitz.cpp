#include "rubbertaut/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rubbertaut/errors.hpp"

namespace rubbertaut {
namespace {

using Perm = std::array<std::uint8_t, kHurwitzMaxDegree>;

// Current product permutation plus the orbit partition generated so far
// (each point labelled by the smallest point in its block).
struct State {
  Perm perm{};
  Perm block{};
};

std::uint64_t encode(const State& s, int d) {
  std::uint64_t key = 0;
  for (int i = 0; i < d; ++i) key = (key << 3) | s.perm[i];
  for (int i = 0; i < d; ++i) key = (key << 3) | s.block[i];
  return key;
}

State decode(std::uint64_t key, int d) {
  State s;
  for (int i = d - 1; i >= 0; --i) {
    s.block[i] = key & 7;
    key >>= 3;
  }
  for (int i = d - 1; i >= 0; --i) {
    s.perm[i] = key & 7;
    key >>= 3;
  }
  return s;
}

std::vector<int> cycle_type(const Perm& p, int d) {
  std::vector<int> lens;
  std::array<bool, kHurwitzMaxDegree> seen{};
  for (int i = 0; i < d; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return lens;
}

int block_count(const State& s, int d) {
  int n = 0;
  for (int i = 0; i < d; ++i) n += (s.block[i] == i) ? 1 : 0;
  return n;
}

// Right multiplication by the transposition (i j).
State apply(const State& s, int i, int j, int d) {
  State n = s;
  std::swap(n.perm[i], n.perm[j]);
  const std::uint8_t lo = std::min(s.block[i], s.block[j]);
  const std::uint8_t hi = std::max(s.block[i], s.block[j]);
  if (lo != hi)
    for (int k = 0; k < d; ++k)
      if (n.block[k] == hi) n.block[k] = lo;
  return n;
}

// sigma0 with cycle type alpha on consecutive points.
State representative(const Partition& alpha) {
  State s;
  int start = 0;
  for (int len : alpha.parts()) {
    for (int k = 0; k < len; ++k) {
      s.perm[start + k] = static_cast<std::uint8_t>(start + (k + 1) % len);
      s.block[start + k] = static_cast<std::uint8_t>(start);
    }
    start += len;
  }
  return s;
}

struct Target {
  int d;
  int cycles;
  std::vector<int> type;
  bool transitive;
};

bool reachable(const State& s, int remaining, const Target& t) {
  const int c = static_cast<int>(cycle_type(s.perm, t.d).size());
  if (std::abs(c - t.cycles) > remaining || (std::abs(c - t.cycles) - remaining) % 2 != 0) return false;
  return !t.transitive || block_count(s, t.d) - 1 <= remaining;
}

// Counts completions of `start` by `steps` further transpositions.
std::uint64_t count_from(const State& start, int steps, const Target& t,
                         const std::vector<std::pair<int, int>>& transpositions) {
  std::unordered_map<std::uint64_t, std::uint64_t> layer{{encode(start, t.d), 1}};
  for (int step = 0; step < steps; ++step) {
    std::unordered_map<std::uint64_t, std::uint64_t> next;
    const int remaining = steps - step - 1;
    for (const auto& [key, mult] : layer) {
      const State s = decode(key, t.d);
      for (const auto& [i, j] : transpositions) {
        const State n = apply(s, i, j, t.d);
        if (!reachable(n, remaining, t)) continue;
        next[encode(n, t.d)] += mult;
      }
    }
    layer = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [key, mult] : layer) {
    const State s = decode(key, t.d);
    if (t.transitive && block_count(s, t.d) != 1) continue;
    if (cycle_type(s.perm, t.d) == t.type) total += mult;
  }
  return total;
}

void validate(const HurwitzInput& in) {
  if (in.alpha.length() == 0 || in.beta.length() == 0) throw InvalidArgument("empty ramification profile");
  if (in.alpha.size() != in.beta.size()) throw InvalidArgument("profiles are partitions of different degrees");
  if (hurwitz_branch_points(in) < 0) throw InvalidArgument("negative number of branch points");
}

}  // namespace

int configured_threads() {
  if (const char* env = std::getenv("RUBBER_TAUT_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int hurwitz_branch_points(const HurwitzInput& in) { return in.alpha.length() + in.beta.length() - 2; }

mpz_class hurwitz_tuple_count(const HurwitzInput& in, const HurwitzOptions& opts) {
  validate(in);
  const int d = in.alpha.size();
  const int r = opts.branch_points.value_or(hurwitz_branch_points(in));
  if (r < 0) throw InvalidArgument("negative number of branch points");
  if (d > kHurwitzMaxDegree)
    throw ResourceLimit("Hurwitz oracle bound is d <= " + std::to_string(kHurwitzMaxDegree));
  if (r > kHurwitzMaxBranchPoints)
    throw ResourceLimit("Hurwitz oracle bound is r <= " + std::to_string(kHurwitzMaxBranchPoints));

  const Target target{d, in.beta.length(), in.beta.parts(), opts.require_transitive};
  const State sigma0 = representative(in.alpha);
  std::vector<std::pair<int, int>> transpositions;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) transpositions.emplace_back(i, j);

  std::uint64_t count = 0;
  if (r == 0) {
    count = count_from(sigma0, 0, target, transpositions);
  } else {
    // Split the first transposition across workers; the sum is schedule-independent.
    const int threads = std::clamp(opts.threads > 0 ? opts.threads : configured_threads(), 1,
                                   static_cast<int>(transpositions.size()));
    std::vector<std::uint64_t> partial(static_cast<size_t>(threads), 0);
    auto work = [&](int w) {
      for (size_t k = static_cast<size_t>(w); k < transpositions.size(); k += static_cast<size_t>(threads)) {
        const State first = apply(sigma0, transpositions[k].first, transpositions[k].second, d);
        if (!reachable(first, r - 1, target)) continue;
        partial[static_cast<size_t>(w)] += count_from(first, r - 1, target, transpositions);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (auto p : partial) count += p;
  }
  // Every sigma0 in the class of alpha contributes equally.
  const mpz_class class_size = factorial(static_cast<unsigned>(d)) / (aut(in.alpha) * [&] {
                                 mpz_class z = 1;
                                 for (int p : in.alpha.parts()) z *= p;
                                 return z;
                               }());
  return mpz_class(static_cast<unsigned long>(count)) * class_size;
}

HurwitzValue hurwitz_oracle(const HurwitzInput& in, const HurwitzOptions& opts) {
  const mpz_class count = hurwitz_tuple_count(in, opts);
  Rational value(count, factorial(static_cast<unsigned>(in.alpha.size())));
  const Rational auts(mpz_class(aut(in.alpha) * aut(in.beta)));
  switch (opts.convention) {
    case HurwitzConvention::Labeled: value *= auts; break;
    case HurwitzConvention::Unlabeled: break;
    case HurwitzConvention::DivideAut: value /= auts; break;
  }
  return {value, "oracle"};
}

HurwitzValue hurwitz_one_part(const Partition& nu, int d) {
  if (nu.size() != d || d < 1) throw InvalidArgument("hurwitz_one_part: nu is not a partition of d");
  const int l = nu.length();
  return {Rational(factorial(static_cast<unsigned>(l - 1))) * Rational(d).pow(l - 2), "one_part"};
}

Rational rubber_psi_integral(const Partition& alpha, const Partition& beta) {
  const HurwitzInput in{alpha, beta};
  validate(in);
  const int r = hurwitz_branch_points(in);
  if (r == 0) throw InvalidArgument("rubber_psi_integral needs at least one branch point");
  const int d = alpha.size();
  Rational h;
  if (alpha.length() == 1)
    h = hurwitz_one_part(beta, d).value;
  else if (beta.length() == 1)
    h = hurwitz_one_part(alpha, d).value;
  else
    h = hurwitz_oracle(in).value;
  return h / Rational(factorial(static_cast<unsigned>(r)));
}

}  // namespace rubbertaut

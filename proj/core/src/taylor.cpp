#include "toricgraph/taylor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "toricgraph/errors.hpp"
#include "toricgraph/rank.hpp"

namespace toricgraph {

namespace {

int popcount(uint32_t x) { return __builtin_popcount(x); }

}  // namespace

BettiTable betti_taylor(const MonomialIdeal& ideal, const TaylorLimits& limits) {
  const std::vector<Monomial>& gens = ideal.min_gens();
  const size_t m = gens.size();
  if (m > limits.max_generators)
    throw ResourceError("Taylor generator cap " + std::to_string(limits.max_generators) +
                        " exceeded (" + std::to_string(m) + " generators)");
  BettiTable table;
  table.set(0, 0, 1, BettiProvenance::Taylor);
  if (m == 0) return table;
  if (gens.front().is_one()) throw ValidationError("unit ideal has no Betti table");

  // Group the 2^m - 1 nonempty subsets by their lcm.  The recursion carries
  // the running lcm so only the buckets are materialized.
  std::map<std::vector<int>, std::vector<uint32_t>> buckets;
  const size_t q = ideal.context()->num_vars();
  std::vector<int> running(q, 0);
  auto rec = [&](auto&& self, size_t start, uint32_t mask) -> void {
    if (mask != 0) {
      auto& bucket = buckets[running];
      if (bucket.size() >= limits.max_strand)
        throw ResourceError("Taylor strand cap " + std::to_string(limits.max_strand) +
                            " exceeded");
      bucket.push_back(mask);
    }
    for (size_t i = start; i < m; ++i) {
      std::vector<int> saved = running;
      for (size_t v = 0; v < q; ++v)
        running[v] = std::max(running[v], gens[i].exponent(static_cast<int>(v)));
      self(self, i + 1, mask | (1u << i));
      running = std::move(saved);
    }
  };
  rec(rec, 0, 0);

  for (auto& [alpha, masks] : buckets) {
    std::sort(masks.begin(), masks.end());
    int degree = 0;
    for (int e : alpha) degree += e;

    // Split the strand by subset size.
    int max_k = 0;
    for (uint32_t s : masks) max_k = std::max(max_k, popcount(s));
    std::vector<std::vector<uint32_t>> level(static_cast<size_t>(max_k) + 1);
    std::vector<std::unordered_map<uint32_t, size_t>> pos(static_cast<size_t>(max_k) + 1);
    for (uint32_t s : masks) {
      const int k = popcount(s);
      pos[static_cast<size_t>(k)][s] = level[static_cast<size_t>(k)].size();
      level[static_cast<size_t>(k)].push_back(s);
    }

    // boundary[k]: C_k -> C_{k-1}, keeping only same-lcm targets.
    std::vector<size_t> rank(static_cast<size_t>(max_k) + 2, 0);
    for (int k = 1; k <= max_k; ++k) {
      const auto& cols = level[static_cast<size_t>(k)];
      const auto& row_pos = pos[static_cast<size_t>(k) - 1];
      if (cols.empty() || row_pos.empty()) continue;
      DenseMatrix<Rational> mat(row_pos.size(), cols.size());
      for (size_t c = 0; c < cols.size(); ++c) {
        int position = 0;
        for (size_t i = 0; i < m; ++i) {
          if (!(cols[c] & (1u << i))) continue;
          const uint32_t t = cols[c] & ~(1u << i);
          auto it = row_pos.find(t);
          if (it != row_pos.end())
            mat.at(it->second, c) = position % 2 == 0 ? Rational(1) : Rational(-1);
          ++position;
        }
      }
      rank[static_cast<size_t>(k)] = rank_rational(std::move(mat));
    }

    for (int k = 1; k <= max_k; ++k) {
      const long long h = static_cast<long long>(level[static_cast<size_t>(k)].size()) -
                          static_cast<long long>(rank[static_cast<size_t>(k)]) -
                          static_cast<long long>(rank[static_cast<size_t>(k) + 1]);
      if (h < 0) throw IntegrityError("negative strand homology");
      if (h > 0) table.add(k, degree, h, BettiProvenance::Taylor);
    }
  }
  return table;
}

}  // namespace toricgraph

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace xorcert {

/// C(n, k) as an exact 64-bit value; throws std::overflow_error past 2^63.
std::uint64_t binomial(unsigned n, unsigned k);

/// Position of a sorted r-subset of [n] in colexicographic order.
struct SubsetRank {
  unsigned n = 0;
  unsigned r = 0;
  std::uint64_t rank = 0;

  friend bool operator==(const SubsetRank&, const SubsetRank&) = default;
};

/// Colex rank: sum over i of C(s_i, i + 1). Throws ValidationError on a
/// malformed subset (wrong size, unsorted or duplicate entries, out of range).
SubsetRank subset_rank(std::span<const std::uint32_t> subset, unsigned n, unsigned r);

/// Inverse of subset_rank. Throws ValidationError when rank >= C(n, r).
std::vector<std::uint32_t> subset_unrank(const SubsetRank& index);

/// Rank/unrank without validation for hot loops; `r` fixed at construction.
class SubsetIndexer {
public:
  SubsetIndexer(unsigned n, unsigned r);

  unsigned n() const { return n_; }
  unsigned r() const { return r_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t rank(std::span<const std::uint32_t> sorted) const;
  void unrank(std::uint64_t rank, std::span<std::uint32_t> out) const;

private:
  unsigned n_;
  unsigned r_;
  std::uint64_t size_;
  // table_[v * (r + 1) + i] = C(v, i)
  std::vector<std::uint64_t> table_;

  std::uint64_t choose(unsigned v, unsigned i) const { return table_[v * (r_ + 1) + i]; }
};

}  // namespace xorcert

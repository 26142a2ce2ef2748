#include "xorcert/subset_rank.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "xorcert/errors.hpp"

namespace xorcert {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (unsigned i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;  // exact: acc is C(n-k+i, i) after each step
    if (acc > (std::uint64_t{1} << 63)) throw std::overflow_error("binomial coefficient too large");
  }
  return static_cast<std::uint64_t>(acc);
}

SubsetRank subset_rank(std::span<const std::uint32_t> subset, unsigned n, unsigned r) {
  std::vector<std::string> issues;
  if (subset.size() != r)
    issues.push_back("subset has size " + std::to_string(subset.size()) + ", expected " + std::to_string(r));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= n) issues.push_back("element " + std::to_string(subset[i]) + " out of range");
    if (i > 0 && subset[i] == subset[i - 1]) issues.push_back("duplicate element " + std::to_string(subset[i]));
    else if (i > 0 && subset[i] < subset[i - 1]) issues.push_back("subset not sorted");
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  std::uint64_t rank = 0;
  for (unsigned i = 0; i < r; ++i) rank += binomial(subset[i], i + 1);
  return {n, r, rank};
}

std::vector<std::uint32_t> subset_unrank(const SubsetRank& index) {
  if (index.r > index.n || index.rank >= binomial(index.n, index.r))
    throw ValidationError("rank " + std::to_string(index.rank) + " out of range for C(" +
                          std::to_string(index.n) + ", " + std::to_string(index.r) + ")");
  std::vector<std::uint32_t> out(index.r);
  std::uint64_t rank = index.rank;
  unsigned hi = index.n;
  for (unsigned i = index.r; i >= 1; --i) {
    unsigned c = i - 1;
    while (c + 1 < hi && binomial(c + 1, i) <= rank) ++c;
    out[i - 1] = c;
    rank -= binomial(c, i);
    hi = c;
  }
  return out;
}

SubsetIndexer::SubsetIndexer(unsigned n, unsigned r)
    : n_(n), r_(r), size_(binomial(n, r)), table_(static_cast<std::size_t>(n + 1) * (r + 1)) {
  for (unsigned v = 0; v <= n; ++v)
    for (unsigned i = 0; i <= r; ++i) table_[v * (r + 1) + i] = binomial(v, i);
}

std::uint64_t SubsetIndexer::rank(std::span<const std::uint32_t> sorted) const {
  std::uint64_t rank = 0;
  for (unsigned i = 0; i < r_; ++i) rank += choose(sorted[i], i + 1);
  return rank;
}

void SubsetIndexer::unrank(std::uint64_t rank, std::span<std::uint32_t> out) const {
  unsigned hi = n_;
  for (unsigned i = r_; i >= 1; --i) {
    // largest c < hi with C(c, i) <= rank; binary search over [i - 1, hi - 1]
    unsigned lo = i - 1, up = hi - 1;
    while (lo < up) {
      const unsigned mid = lo + (up - lo + 1) / 2;
      if (choose(mid, i) <= rank) lo = mid;
      else up = mid - 1;
    }
    out[i - 1] = lo;
    rank -= choose(lo, i);
    hi = lo;
  }
}

}  // namespace xorcert

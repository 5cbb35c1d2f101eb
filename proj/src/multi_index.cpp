#include "elg/multi_index.hpp"

namespace elg {

int permutation_sign(std::span<const int> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) sign = -sign;
    }
  }
  return sign;
}

namespace {

void combinations_rec(int n, int k, int start, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n; ++i) {
    cur.push_back(i);
    combinations_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> combinations(int n, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > n) return out;
  MultiIndex cur;
  combinations_rec(n, k, 1, cur, out);
  return out;
}

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

int combination_rank(int n, const MultiIndex& idx) {
  // Count the k-subsets that precede idx lexicographically.
  int k = static_cast<int>(idx.size());
  int rank = 0;
  int prev = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = prev + 1; v < idx[pos]; ++v) rank += binomial(n - v, k - pos - 1);
    prev = idx[pos];
  }
  return rank;
}

bool is_valid_multi_index(const MultiIndex& idx, int n) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > n) return false;
    if (i > 0 && idx[i] <= idx[i - 1]) return false;
  }
  return true;
}

}  // namespace elg

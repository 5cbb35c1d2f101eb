#pragma once

#include <span>
#include <vector>

namespace elg {

/// Strictly increasing list of 1-based indices.
using MultiIndex = std::vector<int>;

/// Sign of the permutation that sorts `seq`; 0 if `seq` has a repeated entry.
int permutation_sign(std::span<const int> seq);

/// All strictly increasing k-subsets of {1..n}, in lexicographic order.
std::vector<MultiIndex> combinations(int n, int k);

/// Binomial coefficient C(n, k); 0 outside 0 <= k <= n.
int binomial(int n, int k);

/// Position of `idx` among combinations(n, idx.size()) (lexicographic rank).
int combination_rank(int n, const MultiIndex& idx);

/// True if the entries are strictly increasing and within [1, n].
bool is_valid_multi_index(const MultiIndex& idx, int n);

}  // namespace elg

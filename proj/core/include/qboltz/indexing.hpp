#pragma once

// Canonical ranks for strictly increasing site tuples. Pair and triple
// coefficients are stored once per sorted tuple and symmetrized on access,
// so w_ij = w_ji and the full symmetry of v are structural.

namespace qboltz {

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline int triple_count(int n) { return n * (n - 1) * (n - 2) / 6; }

// Rank of (i, j) with 0 <= i < j < n in lexicographic order.
inline int pair_rank(int n, int i, int j) {
  return i * (n - 1) - i * (i - 1) / 2 + (j - i - 1);
}

// Rank of (i, j, k) with 0 <= i < j < k < n in lexicographic order.
inline int triple_rank(int n, int i, int j, int k) {
  int base = 0;
  for (int a = 0; a < i; ++a) base += pair_count(n - 1 - a);
  return base + pair_rank(n - 1 - i, j - i - 1, k - i - 1);
}

// Spin labels s, t, u run over {1, 2, 3}.
inline int spin_pair_rank(int s, int t) { return (s - 1) * 3 + (t - 1); }

inline int spin_triple_rank(int s, int t, int u) {
  return ((s - 1) * 3 + (t - 1)) * 3 + (u - 1);
}

}  // namespace qboltz

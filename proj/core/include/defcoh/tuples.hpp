#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace defcoh {

/// Strictly increasing sequence of basis indices in [0, n); the wedge
/// monomials indexing the exterior-algebra bases. Enumeration of all
/// k-tuples is lexicographic throughout.
using IndexTuple = std::vector<int>;

std::int64_t binomial(int n, int k);

/// All strictly increasing k-tuples over [0, n) in lexicographic order.
/// Throws ArityOutOfRange unless 0 <= k <= n.
std::vector<IndexTuple> enumerate_tuples(int n, int k);

/// Position of a sorted k-tuple in the lexicographic enumeration.
std::int64_t tuple_rank(const IndexTuple& t, int n);

/// A permutation of {0, .., l+m-1} increasing on the first l and the last m
/// positions, with its parity.
struct Unshuffle {
  std::vector<int> perm;
  int sign;
};

/// All (l,m)-unshuffles, ordered lexicographically by the first block.
std::vector<Unshuffle> unshuffles(int l, int m);

/// Sorts an index sequence, tracking the permutation sign. Returns nullopt
/// when an index repeats (the skew value is zero).
std::optional<std::pair<IndexTuple, int>> sort_skew(std::vector<int> indices);

}  // namespace defcoh

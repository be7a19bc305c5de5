#include "defcoh/tuples.hpp"

#include <algorithm>

#include "defcoh/errors.hpp"

namespace defcoh {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<IndexTuple> enumerate_tuples(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw ArityOutOfRange("enumerate_tuples: need 0 <= k <= n");
  std::vector<IndexTuple> out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  IndexTuple t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

std::int64_t tuple_rank(const IndexTuple& t, int n) {
  // Combinatorial number system, lexicographic variant.
  const int k = static_cast<int>(t.size());
  std::int64_t r = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < t[i]; ++v) r += binomial(n - 1 - v, k - 1 - i);
    prev = t[i];
  }
  return r;
}

std::vector<Unshuffle> unshuffles(int l, int m) {
  if (l < 0 || m < 0) throw ArityOutOfRange("unshuffles: negative block size");
  const int n = l + m;
  std::vector<Unshuffle> out;
  for (const auto& first : enumerate_tuples(n, l)) {
    Unshuffle u;
    u.perm.reserve(n);
    std::vector<bool> used(n, false);
    for (int v : first) {
      u.perm.push_back(v);
      used[v] = true;
    }
    for (int v = 0; v < n; ++v)
      if (!used[v]) u.perm.push_back(v);
    // Parity by counting inversions; n stays tiny here.
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (u.perm[i] > u.perm[j]) ++inv;
    u.sign = (inv % 2 == 0) ? 1 : -1;
    out.push_back(std::move(u));
  }
  return out;
}

std::optional<std::pair<IndexTuple, int>> sort_skew(std::vector<int> indices) {
  int sign = 1;
  const int k = static_cast<int>(indices.size());
  for (int i = 1; i < k; ++i) {
    int j = i;
    while (j > 0 && indices[j - 1] > indices[j]) {
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
      --j;
    }
  }
  for (int i = 1; i < k; ++i)
    if (indices[i - 1] == indices[i]) return std::nullopt;
  return std::make_pair(std::move(indices), sign);
}

}  // namespace defcoh

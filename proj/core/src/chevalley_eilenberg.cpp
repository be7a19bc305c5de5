#include "defcoh/chevalley_eilenberg.hpp"

#include <string>

#include "defcoh/errors.hpp"

namespace defcoh {

RationalMatrix ce_differential(const Representation& rep, int k) {
  const int n = rep.algebra().dim();
  const int m = rep.dim();
  if (k < 0 || k > n) throw DegreeOutOfRange("ce_differential: degree " + std::to_string(k));
  const auto in_tuples = enumerate_tuples(n, k);
  const auto out_tuples = k + 1 > n ? std::vector<IndexTuple>{} : enumerate_tuples(n, k + 1);

  RationalMatrix d(out_tuples.size() * m, in_tuples.size() * m);

  for (std::size_t oj = 0; oj < out_tuples.size(); ++oj) {
    const IndexTuple& J = out_tuples[oj];
    // First sum: (-1)^{i+1} rho(x_{J_i}) applied to the omitted tuple.
    for (int i = 0; i < k + 1; ++i) {
      IndexTuple sub;
      sub.reserve(k);
      for (int t = 0; t < k + 1; ++t)
        if (t != i) sub.push_back(J[t]);
      const std::int64_t col_tuple = tuple_rank(sub, n);
      const int sign = (i % 2 == 0) ? 1 : -1;  // (-1)^{i+1} with 1-based i
      const RationalMatrix& rho = rep.action(J[i]);
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          if (rho.at(s, r).is_zero()) continue;
          d.at(oj * m + s, static_cast<std::size_t>(col_tuple) * m + r) += Rational(sign) * rho.at(s, r);
        }
    }
    // Second sum: (-1)^{i+j} omega([x_i, x_j], ...).
    for (int i = 0; i < k + 1; ++i)
      for (int j = i + 1; j < k + 1; ++j) {
        const int sign = ((i + j) % 2 == 0) ? 1 : -1;  // (-1)^{i+j}, 1-based i,j share parity with 0-based
        const auto br = rep.algebra().bracket(J[i], J[j]);
        for (int t = 0; t < n; ++t) {
          if (br[static_cast<std::size_t>(t)].is_zero()) continue;
          std::vector<int> idx{t};
          for (int p = 0; p < k + 1; ++p)
            if (p != i && p != j) idx.push_back(J[p]);
          const auto sorted = sort_skew(idx);
          if (!sorted) continue;
          const std::int64_t col_tuple = tuple_rank(sorted->first, n);
          const Rational coeff = Rational(sign * sorted->second) * br[static_cast<std::size_t>(t)];
          for (int r = 0; r < m; ++r) d.at(oj * m + r, static_cast<std::size_t>(col_tuple) * m + r) += coeff;
        }
      }
  }
  return d;
}

FiniteComplex ce_complex(const Representation& rep) {
  const int n = rep.algebra().dim();
  const int m = rep.dim();
  std::vector<std::size_t> dims;
  for (int k = 0; k <= n; ++k) dims.push_back(static_cast<std::size_t>(binomial(n, k)) * m);
  std::vector<RationalMatrix> diffs;
  for (int k = 0; k < n; ++k) diffs.push_back(ce_differential(rep, k));
  return FiniteComplex(0, std::move(dims), std::move(diffs));
}

CohomologyResult ce_cohomology(const Representation& rep, int k) { return cohomology(ce_complex(rep), k); }

}  // namespace defcoh

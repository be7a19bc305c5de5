#include "defcoh/gauge.hpp"

#include <cmath>

#include "defcoh/errors.hpp"

namespace defcoh {

namespace {

using Mat = std::vector<std::vector<double>>;

Mat to_matrix(const Multiderivation& delta) {
  const int n = delta.ambient();
  Mat d(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int j = 0; j < n; ++j) {
    const auto col = delta.value_on({j});
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)].to_double();
  }
  return d;
}

Mat matmul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double f = a[i][k];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += f * b[k][j];
    }
  return c;
}

/// Dense series summation until the term is negligible.
Mat matexp(const Mat& m) {
  const std::size_t n = m.size();
  Mat result(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = 1.0;
  Mat term = result;
  for (int k = 1; k <= 200; ++k) {
    term = matmul(term, m);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        term[i][j] /= k;
        norm = std::max(norm, std::abs(term[i][j]));
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
    if (norm < 1e-300) break;
  }
  return result;
}

DoubleTensor axpy(const DoubleTensor& a, double s, const DoubleTensor& b) {
  DoubleTensor c = a;
  for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] += s * b.entries[i];
  return c;
}

/// max |Jacobiator| over basis triples; [[b,b]] vanishes iff this does.
double mc_residual(const DoubleTensor& b) {
  const int n = b.dim;
  double m = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int t = 0; t < n; ++t) {
            acc += b.at(x, y, t) * b.at(t, z, s);
            acc += b.at(y, z, t) * b.at(t, x, s);
            acc += b.at(z, x, t) * b.at(t, y, s);
          }
          m = std::max(m, std::abs(acc));
        }
  return m;
}

}  // namespace

DoubleTensor DoubleTensor::from(const Multiderivation& bracket) {
  if (bracket.arity() != 2) throw ArityMismatch("DoubleTensor: arity 2 required");
  const int n = bracket.ambient();
  DoubleTensor t{n, std::vector<double>(static_cast<std::size_t>(n) * n * n, 0.0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto v = bracket.eval_indices({i, j});
      for (int k = 0; k < n; ++k) t.at(i, j, k) = v[static_cast<std::size_t>(k)].to_double();
    }
  return t;
}

double DoubleTensor::max_abs() const {
  double m = 0.0;
  for (double e : entries) m = std::max(m, std::abs(e));
  return m;
}

DoubleTensor bracket_with_endomorphism(const DoubleTensor& b, const Mat& d) {
  const int n = b.dim;
  DoubleTensor out{n, std::vector<double>(b.entries.size(), 0.0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int t = 0; t < n; ++t) {
          acc += d[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] * b.at(t, j, k);
          acc += d[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] * b.at(i, t, k);
          acc -= d[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)] * b.at(i, j, t);
        }
        out.at(i, j, k) = acc;
      }
  return out;
}

GaugeFlowResult gauge_flow(const Multiderivation& bracket, const Multiderivation& delta, double eps_end, int steps) {
  if (delta.arity() != 1) throw ArityMismatch("gauge_flow: delta must have arity 1");
  if (delta.ambient() != bracket.ambient()) throw AmbientMismatch("gauge_flow: ambient mismatch");
  if (steps < 1) throw Error("gauge_flow: steps must be >= 1");

  const Mat d = to_matrix(delta);
  DoubleTensor b = DoubleTensor::from(bracket);
  const double h = eps_end / steps;
  double residual = mc_residual(b);

  for (int s = 0; s < steps; ++s) {
    const DoubleTensor k1 = bracket_with_endomorphism(b, d);
    const DoubleTensor k2 = bracket_with_endomorphism(axpy(b, h / 2.0, k1), d);
    const DoubleTensor k3 = bracket_with_endomorphism(axpy(b, h / 2.0, k2), d);
    const DoubleTensor k4 = bracket_with_endomorphism(axpy(b, h, k3), d);
    for (std::size_t i = 0; i < b.entries.size(); ++i)
      b.entries[i] += h / 6.0 * (k1.entries[i] + 2.0 * k2.entries[i] + 2.0 * k3.entries[i] + k4.entries[i]);
    if (s % 50 == 0 || s + 1 == steps) residual = std::max(residual, mc_residual(b));
  }
  return GaugeFlowResult{std::move(b), residual};
}

DoubleTensor gauge_conjugation_oracle(const Multiderivation& bracket, const Multiderivation& delta, double eps_end) {
  const int n = bracket.ambient();
  const Mat d = to_matrix(delta);
  Mat scaled = d;
  for (auto& row : scaled)
    for (auto& e : row) e *= eps_end;
  const Mat fwd = matexp(scaled);
  for (auto& row : scaled)
    for (auto& e : row) e = -e;
  const Mat bwd = matexp(scaled);

  const DoubleTensor b0 = DoubleTensor::from(bracket);
  DoubleTensor out{n, std::vector<double>(b0.entries.size(), 0.0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // exp(-eD) b0(exp(eD) e_i, exp(eD) e_j), component k
        double acc = 0.0;
        for (int a = 0; a < n; ++a)
          for (int bb = 0; bb < n; ++bb) {
            const double f = fwd[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] * fwd[static_cast<std::size_t>(bb)][static_cast<std::size_t>(j)];
            if (f == 0.0) continue;
            for (int t = 0; t < n; ++t)
              acc += f * b0.at(a, bb, t) * bwd[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)];
          }
        out.at(i, j, k) = acc;
      }
  return out;
}

double max_abs_difference(const DoubleTensor& a, const DoubleTensor& b) {
  if (a.entries.size() != b.entries.size()) throw ShapeMismatch("max_abs_difference: shapes differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) m = std::max(m, std::abs(a.entries[i] - b.entries[i]));
  return m;
}

}  // namespace defcoh

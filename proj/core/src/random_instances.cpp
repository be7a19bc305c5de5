#include "defcoh/random_instances.hpp"

#include <algorithm>

#include "defcoh/errors.hpp"

namespace defcoh {

long Rng::next_int(long lo, long hi) {
  if (lo > hi) throw Error("Rng::next_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Rng::next_rational(long bound) { return Rational(next_int(-bound, bound), next_int(1, 3)); }

RationalMatrix random_invertible(Rng& rng, int n, long bound) {
  RationalMatrix lower = RationalMatrix::identity(static_cast<std::size_t>(n));
  RationalMatrix upper = RationalMatrix::identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) lower.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(rng.next_int(-bound, bound));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) upper.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(rng.next_int(-bound, bound));
  return lower * upper;
}

Multiderivation random_multiderivation(Rng& rng, int ambient, int arity, long bound) {
  Multiderivation c(ambient, arity);
  for (auto& e : c.coeffs()) e = Rational(rng.next_int(-bound, bound));
  return c;
}

LieAlgebra random_catalog_lie(std::uint64_t seed, int dim_cap) {
  Rng rng(seed);
  std::vector<std::string> pool;
  for (const auto& name : catalog_names()) {
    const LieAlgebra g = catalog_algebra(name);
    if (g.dim() <= dim_cap) pool.push_back(name);
  }
  if (pool.empty()) throw Error("random_catalog_lie: no catalog algebra fits the cap");
  const LieAlgebra base = catalog_algebra(pool[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(pool.size()) - 1))]);
  const RationalMatrix phi = random_invertible(rng, base.dim());
  return LieAlgebra(conjugate_structure(base.structure(), phi));
}

namespace {

Representation stock_representation(Rng& rng, int dim_g_cap, int core_cap) {
  struct Choice {
    const char* algebra;
    const char* flavor;
  };
  std::vector<Choice> pool;
  const auto add = [&](const char* a, const char* f, int n, int m) {
    if (n <= dim_g_cap && m <= core_cap && m >= 1) pool.push_back({a, f});
  };
  add("sl2", "standard", 3, 2);
  add("sl2", "trivial2", 3, 2);
  add("sl2", "trivial1", 3, 1);
  add("aff1", "adjoint", 2, 2);
  add("aff1", "natural", 2, 1);
  add("heisenberg3", "trivial2", 3, 2);
  add("heisenberg3", "trivial1", 3, 1);
  add("abelian1", "diagonal1", 1, 1);
  add("abelian2", "diagonal2", 2, 2);
  add("abelian2", "diagonal1", 2, 1);
  add("abelian3", "diagonal2", 3, 2);
  if (pool.empty()) throw Error("random_vb_algebra: no stock representation fits the caps");
  const Choice pick = pool[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(pool.size()) - 1))];

  const LieAlgebra g = catalog_algebra(pick.algebra);
  const std::string flavor = pick.flavor;
  if (flavor == "standard") {
    std::vector<RationalMatrix> act{RationalMatrix{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}},
                                    RationalMatrix{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}},
                                    RationalMatrix{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}};
    return Representation(g, std::move(act));
  }
  if (flavor == "adjoint") return Representation::adjoint(g);
  if (flavor == "natural") {
    // aff1 acting on a line: x acts by 1, y by 0.
    std::vector<RationalMatrix> act{RationalMatrix{{Rational(1)}}, RationalMatrix{{Rational(0)}}};
    return Representation(g, std::move(act));
  }
  if (flavor.rfind("trivial", 0) == 0) return Representation::trivial(g, flavor.back() - '0');
  // Diagonal commuting actions of an abelian algebra.
  const int m = flavor.back() - '0';
  std::vector<RationalMatrix> act;
  for (int i = 0; i < g.dim(); ++i) {
    RationalMatrix d(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) d.at(static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = Rational(rng.next_int(-2, 2));
    act.push_back(std::move(d));
  }
  return Representation(g, std::move(act));
}

}  // namespace

VBAlgebra random_vb_algebra(std::uint64_t seed, int dim_g_cap, int core_cap) {
  Rng rng(seed);
  Representation rep = stock_representation(rng, dim_g_cap, core_cap);
  const RationalMatrix p = random_invertible(rng, rep.algebra().dim());
  const RationalMatrix q = random_invertible(rng, rep.dim());
  return VBAlgebra(conjugate(rep, p, q));
}

LAVectorSpace random_la_vector_space(std::uint64_t seed, int dim_cap) {
  Rng rng(seed);
  const int m = static_cast<int>(rng.next_int(1, dim_cap));
  const int p = static_cast<int>(rng.next_int(1, dim_cap));
  RationalMatrix partial(static_cast<std::size_t>(p), static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < partial.rows(); ++i)
    for (std::size_t j = 0; j < partial.cols(); ++j) partial.at(i, j) = Rational(rng.next_int(-2, 2));
  return LAVectorSpace(m, p, std::move(partial));
}

Instance random_instance(const std::string& family, std::uint64_t seed, int dim_cap) {
  const std::string name = family + "-seed" + std::to_string(seed);
  if (family == "catalog-lie") return make_instance(random_catalog_lie(seed, dim_cap), name, seed);
  if (family == "vb") return make_instance(random_vb_algebra(seed, std::min(dim_cap - 1, 3), std::min(dim_cap, 2)), name, seed);
  if (family == "la" || family == "twovect") return make_instance(random_la_vector_space(seed, std::min(dim_cap, 3)), name, seed);
  throw Error("random_instance: unknown family '" + family + "' (expected catalog-lie, vb, la, twovect)");
}

}  // namespace defcoh

#pragma once

#include <vector>

#include "defcoh/matrix.hpp"
#include "defcoh/multiderivation.hpp"
#include "defcoh/random_instances.hpp"

namespace defcoh::test {

inline RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

inline std::vector<Rational> vec(std::initializer_list<long> entries) {
  std::vector<Rational> v;
  for (long e : entries) v.push_back(Rational(e));
  return v;
}

/// The dim-3 non-Lie bracket [e1,e2] = e1, [e2,e3] = e2, [e1,e3] = 0;
/// its Jacobiator on (e1,e2,e3) is -e1.
inline StructureTensor non_jacobi_tensor() {
  StructureTensor t(3);
  t.at(0, 1, 0) = Rational(1);
  t.at(1, 0, 0) = Rational(-1);
  t.at(1, 2, 1) = Rational(1);
  t.at(2, 1, 1) = Rational(-1);
  return t;
}

inline Representation sl2_standard() {
  return Representation(catalog_algebra("sl2"), {mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}}), mat({{1, 0}, {0, -1}})});
}

}  // namespace defcoh::test

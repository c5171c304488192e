#ifndef QUADRAFORM_TEST_SUPPORT_HPP
#define QUADRAFORM_TEST_SUPPORT_HPP

#include <vector>

#include "quadraform/lie.hpp"
#include "quadraform/matrix.hpp"

namespace qtest {

inline quadraform::Rational q(long num, long den = 1) {
  quadraform::Rational r(num, den);
  r.canonicalize();
  return r;
}

inline quadraform::Vec qvec(std::initializer_list<long> values) {
  quadraform::Vec v;
  for (long x : values) v.push_back(q(x));
  return v;
}

inline quadraform::RationalMatrix qmat(std::initializer_list<std::initializer_list<long>> rows) {
  quadraform::RationalMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m.at(i, j++) = q(x);
    ++i;
  }
  return m;
}

inline quadraform::BilinearForm qform(std::initializer_list<std::initializer_list<long>> rows) {
  return quadraform::BilinearForm(qmat(rows));
}

}  // namespace qtest

#endif

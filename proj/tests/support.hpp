#ifndef RRCODES_TESTS_SUPPORT_HPP
#define RRCODES_TESTS_SUPPORT_HPP

// Test-only oracles. Nothing here calls into the code paths it checks.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rrcodes/gf.hpp"

namespace rrcodes::testing {

inline gf::Matrix random_matrix(const gf::FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                double zero_bias = 0.0) {
  gf::Matrix m(f, rows, cols);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng) < zero_bias) continue;
      m.at(r, c) = f->element(static_cast<std::uint32_t>(rng() % f->size()));
    }
  }
  return m;
}

// All vectors in the row space, by enumerating every linear combination.
// Uses only the field's add/mul; feasible for q^rows up to ~10^5.
inline std::set<std::vector<std::uint16_t>> span_by_enumeration(const gf::Matrix& m) {
  const gf::Field& f = *m.field();
  std::set<std::vector<std::uint16_t>> out;
  std::vector<std::uint32_t> coeff(m.rows(), 0);
  while (true) {
    std::vector<gf::Element> v(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const gf::Element c = f.element(coeff[r]);
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = f.add(v[j], f.mul(c, m.at(r, j)));
    }
    std::vector<std::uint16_t> key(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) key[j] = v[j].value;
    out.insert(std::move(key));
    std::size_t r = 0;
    while (r < coeff.size() && ++coeff[r] == f.size()) coeff[r++] = 0;
    if (r == coeff.size()) break;
  }
  return out;
}

// log_q of a set size that is known to be a power of q.
inline std::size_t log_exact(std::size_t count, std::size_t q) {
  std::size_t d = 0;
  while (count > 1) {
    count /= q;
    ++d;
  }
  return d;
}

}  // namespace rrcodes::testing

#endif  // RRCODES_TESTS_SUPPORT_HPP

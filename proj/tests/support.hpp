#pragma once

#include <random>

#include "qgl/catalog.hpp"

namespace qgl::test {

// 1-based matrix unit.
inline Mat e(std::size_t i, std::size_t j, std::size_t n = 4) { return Mat::unit(n, i - 1, j - 1); }

inline Scalar q() { return Scalar::q(); }
inline Scalar qp(int k) { return Scalar::q_pow(k); }

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  GaussRational gauss(long range = 5) {
    const mpq_class re(integer(-range, range), integer(1, 4));
    const mpq_class im = coin() ? mpq_class(integer(-range, range), integer(1, 3)) : mpq_class(0);
    return {re, im};
  }

  GaussRational nonzero_gauss(long range = 5) {
    GaussRational g;
    do g = gauss(range);
    while (g.is_zero());
    return g;
  }

  Scalar poly(int max_degree = 2) {
    Poly p;
    const int d = static_cast<int>(integer(0, max_degree));
    for (int k = 0; k <= d; ++k) p += Poly::monomial(gauss(), k);
    return Scalar(p, Poly(GaussRational(1)));
  }

  Scalar scalar() {
    Scalar den;
    do den = poly(1);
    while (den.is_zero());
    return poly(2) / den;
  }

  Scalar nonzero_scalar() {
    Scalar s;
    do s = scalar();
    while (s.is_zero());
    return s;
  }

  // Small integer matrix, invertible with high probability.
  Mat int_matrix(std::size_t n, long range = 3) {
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(integer(-range, range));
    return m;
  }

  Mat invertible_int_matrix(std::size_t n) {
    Mat m;
    do m = int_matrix(n);
    while (!is_invertible(m));
    return m;
  }

  Mat scalar_matrix(std::size_t n, double density = 0.5) {
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (std::uniform_real_distribution<double>(0, 1)(rng_) < density) m(i, j) = scalar();
    return m;
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<long>(v.size()) - 1))];
  }

 private:
  std::mt19937 rng_;
};

// Plain textbook elimination, kept separate from the library's pivoting.
inline std::size_t oracle_rank(std::vector<std::vector<Scalar>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Matrix of X -> sum_t a_t X b_t on row-major flattened X: sum_t a_t (x) b_t^T.
inline std::vector<std::vector<Scalar>> oracle_operator(
    const std::vector<std::pair<Mat, Mat>>& terms, const std::vector<Scalar>& coeffs) {
  const std::size_t n = terms.front().first.size();
  std::vector<std::vector<Scalar>> m(n * n, std::vector<Scalar>(n * n));
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const Mat& a = terms[t].first;
    const Mat& b = terms[t].second;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l)
            if (!a(i, k).is_zero() && !b(l, j).is_zero())
              m[i * n + j][k * n + l] += coeffs[t] * a(i, k) * b(l, j);
  }
  return m;
}

inline std::vector<std::vector<Scalar>> flatten_rows(const std::vector<Mat>& mats) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& m : mats) rows.emplace_back(m.flat().begin(), m.flat().end());
  return rows;
}

inline GL2Rep classical_point(std::size_t n = 4) {
  return {Mat::identity(n), Mat(n), Mat(n), Mat::identity(n)};
}

}  // namespace qgl::test

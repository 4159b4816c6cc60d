#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgl/scalar.hpp"

namespace qgl {

/// Square n x n matrix over Q(i)(q), row-major.
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t n) : n_(n), e_(n * n) {}
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  /// Matrix unit with a single 1 at (i, j), zero-based.
  static Mat unit(std::size_t n, std::size_t i, std::size_t j);
  static Mat diag(std::span<const Scalar> d);
  static Mat diag(std::initializer_list<Scalar> d) { return diag(std::span(d.begin(), d.size())); }
  /// Inverse of flatten().
  static Mat from_flat(std::size_t n, std::span<const Scalar> flat);

  std::size_t size() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  std::span<const Scalar> flat() const { return e_; }
  std::span<Scalar> flat() { return e_; }

  bool is_zero() const;
  bool is_diagonal() const;
  Scalar trace() const;
  Mat transpose() const;
  /// Block (bi, bj) of size m.
  Mat block(std::size_t bi, std::size_t bj, std::size_t m) const;

  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
  friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

  Mat pow(unsigned k) const;
  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> e_;
};

/// Direct sum of square blocks along the diagonal.
Mat block_diag(std::initializer_list<Mat> blocks);
/// Upper Jordan block J(lambda; m).
Mat jordan(const Scalar& lambda, std::size_t m);
/// Entrywise substitution q -> q0; the result has constant entries.
Mat substitute(const Mat& m, const GaussRational& q0);
Scalar substitute(const Scalar& s, const GaussRational& q0);
void require_same_size(const Mat& a, const Mat& b);

/// Rectangular matrix used for linear systems.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> a;

  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// In-place reduced row echelon form; returns pivot columns in row order.
std::vector<std::size_t> rref(DenseMatrix& m);
std::size_t rank(DenseMatrix m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Scalar>> nullspace(DenseMatrix m);

std::size_t rank(const Mat& m);
Scalar determinant(const Mat& m);
bool is_invertible(const Mat& m);
/// Throws Error("singular") when m has no inverse.
Mat inverse(const Mat& m);
/// True iff m^n = 0.
bool is_nilpotent(const Mat& m);
/// rank of the n x 2n matrix [a | b].
std::size_t rank_side_by_side(const Mat& a, const Mat& b);

/// Linear subspace of n x n matrices, kept in reduced echelon form under the
/// row-major flattening: each basis element has a leading 1 in its pivot slot
/// and zeros in every other element's pivot slot.
class MatSpace {
 public:
  explicit MatSpace(std::size_t n = 0) : n_(n) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds m to the span; returns true when the dimension grew.
  bool insert(const Mat& m);
  bool contains(const Mat& m) const;
  /// Remainder of m after elimination against the basis.
  Mat reduce(const Mat& m) const;
  bool is_subspace_of(const MatSpace& other) const;

  friend bool operator==(const MatSpace& a, const MatSpace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_;
  std::vector<Mat> basis_;
  std::vector<std::size_t> pivots_;
};

MatSpace span(std::span<const Mat> mats, std::size_t n);
MatSpace span(std::span<const Mat> mats);

/// Kernel of a linear operator on n x n matrices, given as a function.
MatSpace operator_kernel(std::size_t n, const std::function<Mat(const Mat&)>& op);
/// Kernel of several operators jointly.
MatSpace operator_kernel(std::size_t n, std::span<const std::function<Mat(const Mat&)>> ops);

/// Smallest multiplicatively closed subspace containing the generators
/// (span of all nonempty products).
MatSpace subalgebra_closure(std::span<const Mat> generators);
/// {X : XG = GX for all generators G}.
MatSpace centralizer(std::span<const Mat> generators, std::size_t n);
MatSpace centralizer(const MatSpace& s);

/// An invertible element of s if one is found (basis elements first, then
/// seeded integer combinations).
std::optional<Mat> invertible_element(const MatSpace& s);

}  // namespace qgl

#pragma once

// C(1,3) as 4x4 matrices in the Dirac convention, its 16-element basis of
// antisymmetrized gamma products, and inner actions c_ij . v = sum_k m_ik v m*_kj.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qgl/gl2.hpp"
#include "qgl/matrix.hpp"

namespace qgl {

using CliffordCoords = std::array<Scalar, 16>;

class CliffordBasis {
 public:
  /// gamma_0 = diag(1,1,-1,-1), gamma_k = [[0, sigma_k], [-sigma_k, 0]].
  CliffordBasis();

  const Mat& gamma(std::size_t mu) const { return gamma_[mu]; }
  /// g = diag(1, -1, -1, -1).
  static int metric(std::size_t mu, std::size_t nu);

  /// Ordered [1; g_mu; g_{mu nu} mu<nu; g_{mu nu rho}; g_{0123}].
  const std::vector<Mat>& basis16() const { return basis_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Slot of an increasing index tuple, e.g. {0, 1} -> 5.
  std::size_t slot(std::span<const std::size_t> indices) const;

  /// Antisymmetrized product gamma_[i1 ... ik] for any index tuple (zero when
  /// an index repeats).
  Mat antisymmetrized(std::span<const std::size_t> indices) const;

  CliffordCoords coords(const Mat& v) const;
  Mat from_coords(const CliffordCoords& c) const;

  /// Each of the three defining relation families, checked for every index tuple.
  bool check_vector_relation() const;
  bool check_bivector_relation() const;
  bool check_trivector_relation() const;
  /// gamma_mu gamma_nu + gamma_nu gamma_mu = 2 g_mu_nu.
  bool check_anticommutation() const;

 private:
  std::array<Mat, 4> gamma_;
  std::vector<Mat> basis_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> index_sets_;
  Mat coord_inverse_;  // 16 x 16, maps flattened v to coordinates
};

/// Process-wide immutable instance.
const CliffordBasis& clifford();

class InnerAction {
 public:
  /// Throws Error("action undefined") when the 2n x 2n block matrix of the
  /// representation is singular.
  explicit InnerAction(GL2Rep rep);

  const GL2Rep& rep() const { return rep_; }
  /// m(i, j) for i, j in {0, 1}.
  const Mat& m(std::size_t i, std::size_t j) const;
  const Mat& mstar(std::size_t i, std::size_t j) const { return mstar_[i][j]; }

  /// c_ij . v for i, j in {0, 1}; throws on out-of-range indices.
  Mat act(std::size_t i, std::size_t j, const Mat& v) const;

  /// sum_k m_ik m*_kj == delta_ij for all i, j.
  bool unital() const;
  /// c_ij . (vw) == sum_k (c_ik . v)(c_kj . w) for all i, j.
  bool module_algebra(const Mat& v, const Mat& w) const;

 private:
  GL2Rep rep_;
  std::array<std::array<Mat, 2>, 2> mstar_;
};

inline InnerAction build_action(const GL2Rep& rep) { return InnerAction(rep); }

/// Generators of the operator algebra for each instance: c_ij and d^-1.
std::vector<Mat> operator_algebra_generators(std::span<const GL2Rep> instances);
/// Subalgebra generated by c_ij and d^-1 over all instances.
MatSpace operator_algebra(std::span<const GL2Rep> instances);

struct Invariants {
  MatSpace space;
  std::vector<CliffordCoords> coords;
};

/// Centralizer of the operator algebra, with Clifford coordinates of its basis.
Invariants invariants_of(std::span<const GL2Rep> instances);

/// c11.v = v, c22.v = v, c12.v = 0, c21.v = 0 for every basis element.
bool counit_invariance(const InnerAction& action, const MatSpace& invariants);

}  // namespace qgl

#pragma once

// Dipper-Donkin quantum GL2: relation checks on matrix images of c11, c12,
// c21, c22 and the structural consequences of finite-dimensionality.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qgl/matrix.hpp"

namespace qgl {

struct GL2Rep {
  Mat c11, c12, c21, c22;

  std::size_t size() const { return c11.size(); }
  /// Generators in the order c11, c12, c21, c22.
  std::array<const Mat*, 4> generators() const { return {&c11, &c12, &c21, &c22}; }
};

/// Names of the six defining relations, in RelationReport order.
inline constexpr std::array<const char*, 6> kRelationNames = {
    "C11C12 = C12C11", "C21C11 = qC11C21",       "C22C12 = qC12C22",
    "C21C22 = C22C21", "C21C12 = qC12C21", "C22C11 - C11C22 = (q-1)C12C21",
};

struct RelationReport {
  std::array<bool, 6> relations{};
  Mat detq;
  bool detq_invertible = false;
  Mat perturbation;
  bool perturbation_nonzero = false;

  bool all_relations() const;
  /// All six relations and an invertible quantum determinant.
  bool is_representation() const { return all_relations() && detq_invertible; }
};

RelationReport verify_relations(const GL2Rep& r, const Scalar& q = Scalar::q());

/// d = c11*c22 - c12*c21
Mat quantum_determinant(const GL2Rep& r);

struct Corollary1Report {
  bool checked = false;
  bool c11_invertible = false;
  bool c22_invertible = false;
  bool c12_nilpotent = false;
  bool c21_nilpotent = false;
  std::vector<std::string> failures;

  bool passed() const { return checked && failures.empty(); }
};

/// Invertibility of c11, c22 and nilpotency of c12, c21. When r is not a
/// representation with invertible det_q, checked = false and the precondition
/// failure is listed first.
Corollary1Report corollary1_check(const GL2Rep& r, const Scalar& q = Scalar::q());

struct KMutatorReport {
  Mat epsilon;
  bool premise_holds = false;
  bool epsilon_invertible = false;
  /// identity_holds[k-1] for k = 1..kmax; empty when the premise fails.
  std::vector<bool> identity_holds;

  bool all_hold() const;
  std::string verdict() const;
};

/// With eps = xy - yx and premise eps*x = q*x*eps, checks
/// x^k y - y x^k = [k]_q x^(k-1) eps for k = 1..kmax.
KMutatorReport kmutator_check(const Mat& x, const Mat& y, int kmax, const Scalar& q = Scalar::q());

struct PairRelation {
  std::string x;
  std::string y;
  bool commute = false;       // xy = yx
  bool q_commute = false;     // xy = q yx
  bool q_commute_rev = false; // yx = q xy
};

struct SplitReport {
  Mat a12;
  Mat a22;
  std::vector<PairRelation> pairs;
};

/// a12 = c11^-1 c12, a22 = c11^-1 d and the relations among c21, c11, a22,
/// a12. Throws Error("singular") when c11 is not invertible.
SplitReport figure2_split(const GL2Rep& r, const Scalar& q = Scalar::q());

struct GL2Equivalence {
  Mat u;
  Scalar alpha1;
  Scalar alpha2;
};

/// Searches invertible u and alpha1, alpha2 in {q^k : |k| <= 4} with
/// c'11 = a1 u c11 u^-1, c'21 = a1 u c21 u^-1, c'12 = a2 u c12 u^-1,
/// c'22 = a2 u c22 u^-1.
std::optional<GL2Equivalence> gl2_equivalent(const GL2Rep& r1, const GL2Rep& r2,
                                             const Scalar& q = Scalar::q());
bool verify_gl2_equivalence(const GL2Rep& r1, const GL2Rep& r2, const GL2Equivalence& w);

/// Applies (u, alpha1, alpha2) to r.
GL2Rep transform(const GL2Rep& r, const Mat& u, const Scalar& alpha1, const Scalar& alpha2);

/// Column space of c12 is invariant under c11, c22 and c21.
bool c12_image_invariant(const GL2Rep& r);

/// True when some reordering of the basis makes all four generators upper
/// triangular.
bool permutation_triangular(const GL2Rep& r);

/// diag(c12 c21) = 0 and diag(c11 c22) = diag(det_q).
bool diagonal_coincidence(const GL2Rep& r);

}  // namespace qgl

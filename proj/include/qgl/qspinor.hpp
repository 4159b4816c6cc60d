#pragma once

// Matrix pairs (A, B) with AB = qBA: commutant spaces, admissibility and
// equivalence up to simultaneous conjugation and scaling.

#include <optional>
#include <vector>

#include "qgl/matrix.hpp"

namespace qgl {

struct QSpinorRep {
  Mat a;
  Mat b;
  Scalar q = Scalar::q();
};

/// Which way the C-A edge of the (A, B, C) triangle points.
///   Default: CA = qAC (c21 d = q d c21).  Flipped: AC = qCA.
/// The C-B edge is always CB = qBC.
enum class Orientation { Default, Flipped };

struct AdmissibilityWitness {
  bool admissible = false;
  MatSpace c_space;
  std::optional<Mat> witness_c;
};

/// a*b == q*(b*a) exactly.
bool check_spinor(const QSpinorRep& r);

/// {B : AB = qBA}
MatSpace commutant_B(const Mat& a, const Scalar& q = Scalar::q());
/// {B' : B'A = qAB'}
MatSpace commutant_Bprime(const Mat& a, const Scalar& q = Scalar::q());

/// Solution space for C and whether C*b can be nonzero on it.
/// Throws Error("not a q-spinor") when (a, b) fails check_spinor.
AdmissibilityWitness admissibility(const Mat& a, const Mat& b, const Scalar& q = Scalar::q(),
                                   Orientation orientation = Orientation::Default);

struct SpinorEquivalence {
  Mat u;
  Scalar alpha;
};

/// Searches invertible u and alpha = q^k (|k| <= 4) with
/// a2 = alpha*u*a1*u^-1 and b2 = alpha*u*b1*u^-1.
std::optional<SpinorEquivalence> spinor_equivalent(const QSpinorRep& r1, const QSpinorRep& r2);

/// Exact re-check of a claimed witness.
bool verify_spinor_equivalence(const QSpinorRep& r1, const QSpinorRep& r2,
                               const SpinorEquivalence& w);

/// Candidate scale factors q^k, k in [-4, 4], ordered by |k|.
std::vector<Scalar> monomial_scales(const Scalar& q);

/// True when tr(y^k) = alpha^k tr(x^k) for k = 1..n (same char. polynomial
/// as alpha*x).
bool power_traces_match(const Mat& x, const Mat& y, const Scalar& alpha);

/// Invertible u with u*x_k = y_k*u for every pair, if found.
std::optional<Mat> find_intertwiner(const std::vector<Mat>& xs, const std::vector<Mat>& ys);

}  // namespace qgl

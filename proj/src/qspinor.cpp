#include "qgl/qspinor.hpp"

#include <cstdlib>
#include <functional>

namespace qgl {

bool check_spinor(const QSpinorRep& r) {
  require_same_size(r.a, r.b);
  return r.a * r.b == r.q * (r.b * r.a);
}

MatSpace commutant_B(const Mat& a, const Scalar& q) {
  return operator_kernel(a.size(), [&](const Mat& b) { return a * b - q * (b * a); });
}

MatSpace commutant_Bprime(const Mat& a, const Scalar& q) {
  return operator_kernel(a.size(), [&](const Mat& b) { return b * a - q * (a * b); });
}

AdmissibilityWitness admissibility(const Mat& a, const Mat& b, const Scalar& q,
                                   Orientation orientation) {
  if (!check_spinor({a, b, q})) throw Error("not a q-spinor");
  std::vector<std::function<Mat(const Mat&)>> ops;
  ops.emplace_back([&](const Mat& c) { return c * b - q * (b * c); });
  if (orientation == Orientation::Default) {
    ops.emplace_back([&](const Mat& c) { return c * a - q * (a * c); });
  } else {
    ops.emplace_back([&](const Mat& c) { return a * c - q * (c * a); });
  }
  AdmissibilityWitness w;
  w.c_space = operator_kernel(a.size(), ops);
  // C -> C*b is linear, so it is nonzero on the space iff it is nonzero on a basis element.
  for (const auto& c : w.c_space.basis()) {
    if (!(c * b).is_zero()) {
      w.admissible = true;
      w.witness_c = c;
      break;
    }
  }
  if (!w.admissible && w.c_space.dim() > 0) {
    // Generic combination with coefficients 1, t, t^2, ... at t = 3.
    Mat c(a.size());
    Scalar coeff(1);
    for (const auto& basis_c : w.c_space.basis()) {
      c += basis_c * coeff;
      coeff *= Scalar(3);
    }
    w.witness_c = c;
  }
  return w;
}

std::vector<Scalar> monomial_scales(const Scalar& q) {
  std::vector<Scalar> out;
  out.emplace_back(1);
  for (int k = 1; k <= 4; ++k) {
    out.push_back(q.pow(k));
    out.push_back(q.pow(-k));
  }
  return out;
}

bool power_traces_match(const Mat& x, const Mat& y, const Scalar& alpha) {
  require_same_size(x, y);
  Mat xk = Mat::identity(x.size());
  Mat yk = Mat::identity(y.size());
  Scalar ak(1);
  for (std::size_t k = 1; k <= x.size(); ++k) {
    xk = xk * x;
    yk = yk * y;
    ak *= alpha;
    if (!(yk.trace() == ak * xk.trace())) return false;
  }
  return true;
}

std::optional<Mat> find_intertwiner(const std::vector<Mat>& xs, const std::vector<Mat>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw Error("dimension mismatch");
  const std::size_t n = xs[0].size();
  std::vector<std::function<Mat(const Mat&)>> ops;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    require_same_size(xs[k], ys[k]);
    ops.emplace_back([&x = xs[k], &y = ys[k]](const Mat& u) { return u * x - y * u; });
  }
  return invertible_element(operator_kernel(n, ops));
}

std::optional<SpinorEquivalence> spinor_equivalent(const QSpinorRep& r1, const QSpinorRep& r2) {
  require_same_size(r1.a, r2.a);
  require_same_size(r1.b, r2.b);
  for (const auto& alpha : monomial_scales(r1.q)) {
    if (!power_traces_match(r1.a, r2.a, alpha) || !power_traces_match(r1.b, r2.b, alpha)) continue;
    auto u = find_intertwiner({r1.a * alpha, r1.b * alpha}, {r2.a, r2.b});
    if (u) {
      SpinorEquivalence w{*u, alpha};
      if (verify_spinor_equivalence(r1, r2, w)) return w;
    }
  }
  return std::nullopt;
}

bool verify_spinor_equivalence(const QSpinorRep& r1, const QSpinorRep& r2,
                               const SpinorEquivalence& w) {
  if (w.alpha.is_zero() || !is_invertible(w.u)) return false;
  const Mat uinv = inverse(w.u);
  return r2.a == w.alpha * (w.u * r1.a * uinv) && r2.b == w.alpha * (w.u * r1.b * uinv);
}

}  // namespace qgl

#include "qgl/gl2.hpp"

#include <algorithm>

#include "qgl/qspinor.hpp"

namespace qgl {
namespace {

void require_common_size(const GL2Rep& r) {
  require_same_size(r.c11, r.c12);
  require_same_size(r.c11, r.c21);
  require_same_size(r.c11, r.c22);
}

}  // namespace

bool RelationReport::all_relations() const {
  return std::all_of(relations.begin(), relations.end(), [](bool b) { return b; });
}

Mat quantum_determinant(const GL2Rep& r) { return r.c11 * r.c22 - r.c12 * r.c21; }

RelationReport verify_relations(const GL2Rep& r, const Scalar& q) {
  require_common_size(r);
  const Mat& c11 = r.c11;
  const Mat& c12 = r.c12;
  const Mat& c21 = r.c21;
  const Mat& c22 = r.c22;
  const Mat c12c21 = c12 * c21;

  RelationReport rep;
  rep.relations[0] = c11 * c12 == c12 * c11;
  rep.relations[1] = c21 * c11 == q * (c11 * c21);
  rep.relations[2] = c22 * c12 == q * (c12 * c22);
  rep.relations[3] = c21 * c22 == c22 * c21;
  rep.relations[4] = c21 * c12 == q * c12c21;
  rep.relations[5] = c22 * c11 - c11 * c22 == (q - Scalar(1)) * c12c21;
  rep.detq = c11 * c22 - c12c21;
  rep.detq_invertible = is_invertible(rep.detq);
  rep.perturbation = (q - Scalar(1)) * c12c21;
  rep.perturbation_nonzero = !rep.perturbation.is_zero();
  return rep;
}

Corollary1Report corollary1_check(const GL2Rep& r, const Scalar& q) {
  Corollary1Report out;
  const auto rel = verify_relations(r, q);
  // Properties are still evaluated when the precondition fails, but the
  // report is then marked unchecked.
  out.checked = rel.is_representation();
  if (!out.checked)
    out.failures.emplace_back(rel.all_relations() ? "precondition: det_q singular"
                                                  : "precondition: relations fail");
  out.c11_invertible = is_invertible(r.c11);
  out.c22_invertible = is_invertible(r.c22);
  out.c12_nilpotent = is_nilpotent(r.c12);
  out.c21_nilpotent = is_nilpotent(r.c21);
  if (!out.c11_invertible) out.failures.emplace_back("C11 singular");
  if (!out.c22_invertible) out.failures.emplace_back("C22 singular");
  if (!out.c12_nilpotent) out.failures.emplace_back("C12 not nilpotent");
  if (!out.c21_nilpotent) out.failures.emplace_back("C21 not nilpotent");
  return out;
}

bool KMutatorReport::all_hold() const {
  return premise_holds &&
         std::all_of(identity_holds.begin(), identity_holds.end(), [](bool b) { return b; });
}

std::string KMutatorReport::verdict() const {
  if (!premise_holds) return "premise not satisfied";
  return all_hold() ? "identity holds" : "identity fails";
}

KMutatorReport kmutator_check(const Mat& x, const Mat& y, int kmax, const Scalar& q) {
  require_same_size(x, y);
  KMutatorReport rep;
  rep.epsilon = x * y - y * x;
  rep.epsilon_invertible = is_invertible(rep.epsilon);
  rep.premise_holds = rep.epsilon * x == q * (x * rep.epsilon);
  if (!rep.premise_holds) return rep;
  Mat xk_minus_1 = Mat::identity(x.size());
  for (int k = 1; k <= kmax; ++k) {
    const Mat xk = xk_minus_1 * x;
    const Mat lhs = xk * y - y * xk;
    const Mat rhs = (xk_minus_1 * rep.epsilon) * q_integer(k);
    rep.identity_holds.push_back(lhs == rhs);
    xk_minus_1 = xk;
  }
  return rep;
}

SplitReport figure2_split(const GL2Rep& r, const Scalar& q) {
  require_common_size(r);
  const Mat c11_inv = inverse(r.c11);
  SplitReport out;
  out.a12 = c11_inv * r.c12;
  out.a22 = c11_inv * quantum_determinant(r);
  const std::array<std::pair<const char*, const Mat*>, 4> named = {{
      {"c21", &r.c21},
      {"c11", &r.c11},
      {"a22", &out.a22},
      {"a12", &out.a12},
  }};
  for (std::size_t i = 0; i < named.size(); ++i) {
    for (std::size_t j = i + 1; j < named.size(); ++j) {
      const Mat& x = *named[i].second;
      const Mat& y = *named[j].second;
      const Mat xy = x * y;
      const Mat yx = y * x;
      PairRelation p;
      p.x = named[i].first;
      p.y = named[j].first;
      p.commute = xy == yx;
      p.q_commute = xy == q * yx;
      p.q_commute_rev = yx == q * xy;
      out.pairs.push_back(std::move(p));
    }
  }
  return out;
}

GL2Rep transform(const GL2Rep& r, const Mat& u, const Scalar& alpha1, const Scalar& alpha2) {
  const Mat uinv = inverse(u);
  auto conj = [&](const Mat& m, const Scalar& a) { return a * (u * m * uinv); };
  return {conj(r.c11, alpha1), conj(r.c12, alpha2), conj(r.c21, alpha1), conj(r.c22, alpha2)};
}

bool verify_gl2_equivalence(const GL2Rep& r1, const GL2Rep& r2, const GL2Equivalence& w) {
  if (w.alpha1.is_zero() || w.alpha2.is_zero() || !is_invertible(w.u)) return false;
  const GL2Rep t = transform(r1, w.u, w.alpha1, w.alpha2);
  return t.c11 == r2.c11 && t.c12 == r2.c12 && t.c21 == r2.c21 && t.c22 == r2.c22;
}

std::optional<GL2Equivalence> gl2_equivalent(const GL2Rep& r1, const GL2Rep& r2,
                                             const Scalar& q) {
  require_common_size(r1);
  require_common_size(r2);
  require_same_size(r1.c11, r2.c11);
  const auto scales = monomial_scales(q);
  std::vector<const Scalar*> alpha1s;
  std::vector<const Scalar*> alpha2s;
  for (const auto& a : scales) {
    if (power_traces_match(r1.c11, r2.c11, a) && power_traces_match(r1.c21, r2.c21, a))
      alpha1s.push_back(&a);
    if (power_traces_match(r1.c22, r2.c22, a) && power_traces_match(r1.c12, r2.c12, a))
      alpha2s.push_back(&a);
  }
  for (const Scalar* a1 : alpha1s) {
    for (const Scalar* a2 : alpha2s) {
      auto u = find_intertwiner({r1.c11 * *a1, r1.c12 * *a2, r1.c21 * *a1, r1.c22 * *a2},
                                {r2.c11, r2.c12, r2.c21, r2.c22});
      if (!u) continue;
      GL2Equivalence w{*u, *a1, *a2};
      if (verify_gl2_equivalence(r1, r2, w)) return w;
    }
  }
  return std::nullopt;
}

bool c12_image_invariant(const GL2Rep& r) {
  const std::size_t base = rank(r.c12);
  for (const Mat* g : {&r.c11, &r.c22, &r.c21}) {
    if (rank_side_by_side(*g * r.c12, r.c12) != base) return false;
  }
  return true;
}

bool permutation_triangular(const GL2Rep& r) {
  const std::size_t n = r.size();
  // Edge i -> j for every nonzero off-diagonal (i, j); acyclic iff some
  // ordering makes everything upper triangular.
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (const Mat* g : r.generators())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && !(*g)(i, j).is_zero()) edge[i][j] = true;
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (edge[i][j]) ++indegree[j];
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n && pick == n; ++v)
      if (!done[v] && indegree[v] == 0) pick = v;
    if (pick == n) return false;
    done[pick] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (edge[pick][j]) --indegree[j];
  }
  return true;
}

bool diagonal_coincidence(const GL2Rep& r) {
  const Mat p = r.c12 * r.c21;
  const Mat c11c22 = r.c11 * r.c22;
  const Mat d = quantum_determinant(r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!p(i, i).is_zero() || !(c11c22(i, i) == d(i, i))) return false;
  }
  return true;
}

}  // namespace qgl

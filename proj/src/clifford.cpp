#include "qgl/clifford.hpp"

#include <algorithm>
#include <numeric>

namespace qgl {
namespace {

int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

Mat sigma_block(const Mat& sigma, int lower_sign) {
  Mat g(4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      g(i, j + 2) = sigma(i, j);
      g(i + 2, j) = sigma(i, j) * Scalar(lower_sign);
    }
  }
  return g;
}

}  // namespace

CliffordBasis::CliffordBasis() {
  const Scalar i = Scalar::i();
  gamma_[0] = Mat::diag({1, 1, -1, -1});
  gamma_[1] = sigma_block(Mat{{0, 1}, {1, 0}}, -1);
  gamma_[2] = sigma_block(Mat{{0, -i}, {i, 0}}, -1);
  gamma_[3] = sigma_block(Mat{{1, 0}, {0, -1}}, -1);

  for (std::size_t k = 0; k <= 4; ++k) {
    // Increasing k-subsets of {0,1,2,3} in lexicographic order.
    std::vector<bool> choose(4, false);
    std::fill(choose.begin(), choose.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t t = 0; t < 4; ++t)
        if (choose[t]) idx.push_back(t);
      std::string label = idx.empty() ? "1" : "g";
      for (auto t : idx) label += std::to_string(t);
      basis_.push_back(antisymmetrized(idx));
      labels_.push_back(std::move(label));
      index_sets_.push_back(std::move(idx));
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }

  Mat columns(16);
  for (std::size_t c = 0; c < 16; ++c)
    for (std::size_t r = 0; r < 16; ++r) columns(r, c) = basis_[c].flat()[r];
  coord_inverse_ = inverse(columns);
}

int CliffordBasis::metric(std::size_t mu, std::size_t nu) {
  if (mu != nu) return 0;
  return mu == 0 ? 1 : -1;
}

std::size_t CliffordBasis::slot(std::span<const std::size_t> indices) const {
  for (std::size_t s = 0; s < index_sets_.size(); ++s)
    if (std::equal(indices.begin(), indices.end(), index_sets_[s].begin(), index_sets_[s].end()))
      return s;
  throw Error("not a basis index set");
}

Mat CliffordBasis::antisymmetrized(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> perm(indices.size());
  std::iota(perm.begin(), perm.end(), 0);
  Mat sum(4);
  long count = 0;
  do {
    Mat prod = Mat::identity(4);
    for (auto p : perm) prod = prod * gamma_[indices[p]];
    sum += prod * Scalar(permutation_sign(perm));
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum * Scalar(GaussRational(mpq_class(1, count)));
}

CliffordCoords CliffordBasis::coords(const Mat& v) const {
  if (v.size() != 4) throw Error("dimension mismatch");
  CliffordCoords c;
  for (std::size_t s = 0; s < 16; ++s)
    for (std::size_t r = 0; r < 16; ++r)
      if (!v.flat()[r].is_zero()) c[s] += coord_inverse_(s, r) * v.flat()[r];
  return c;
}

Mat CliffordBasis::from_coords(const CliffordCoords& c) const {
  Mat v(4);
  for (std::size_t s = 0; s < 16; ++s)
    if (!c[s].is_zero()) v += basis_[s] * c[s];
  return v;
}

bool CliffordBasis::check_anticommutation() const {
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu)
      if (!(gamma_[mu] * gamma_[nu] + gamma_[nu] * gamma_[mu] ==
            Mat::identity(4) * Scalar(2 * metric(mu, nu))))
        return false;
  return true;
}

bool CliffordBasis::check_vector_relation() const {
  const Mat one = Mat::identity(4);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t nu = 0; nu < 4; ++nu) {
      const std::array<std::size_t, 2> mn{mu, nu};
      const std::array<std::size_t, 2> nm{nu, mu};
      const Mat g_mn = antisymmetrized(mn);
      if (!(g_mn == -antisymmetrized(nm))) return false;
      if (!(gamma_[mu] * gamma_[nu] == one * Scalar(metric(mu, nu)) + g_mn)) return false;
    }
  }
  return true;
}

bool CliffordBasis::check_bivector_relation() const {
  for (std::size_t rho = 0; rho < 4; ++rho) {
    for (std::size_t mu = 0; mu < 4; ++mu) {
      for (std::size_t nu = 0; nu < 4; ++nu) {
        const std::array<std::size_t, 2> mn{mu, nu};
        const std::array<std::size_t, 3> rmn{rho, mu, nu};
        const Mat rhs = gamma_[nu] * Scalar(metric(rho, mu)) -
                        gamma_[mu] * Scalar(metric(rho, nu)) + antisymmetrized(rmn);
        if (!(gamma_[rho] * antisymmetrized(mn) == rhs)) return false;
      }
    }
  }
  return true;
}

bool CliffordBasis::check_trivector_relation() const {
  for (std::size_t la = 0; la < 4; ++la) {
    for (std::size_t mu = 0; mu < 4; ++mu) {
      for (std::size_t nu = 0; nu < 4; ++nu) {
        for (std::size_t rho = 0; rho < 4; ++rho) {
          const std::array<std::size_t, 3> mnr{mu, nu, rho};
          const std::array<std::size_t, 2> nr{nu, rho};
          const std::array<std::size_t, 2> mr{mu, rho};
          const std::array<std::size_t, 2> mn{mu, nu};
          const std::array<std::size_t, 4> lmnr{la, mu, nu, rho};
          const Mat rhs = antisymmetrized(nr) * Scalar(metric(la, mu)) -
                          antisymmetrized(mr) * Scalar(metric(la, nu)) +
                          antisymmetrized(mn) * Scalar(metric(la, rho)) + antisymmetrized(lmnr);
          if (!(gamma_[la] * antisymmetrized(mnr) == rhs)) return false;
        }
      }
    }
  }
  return true;
}

const CliffordBasis& clifford() {
  static const CliffordBasis basis;
  return basis;
}

// ------------------------------------------------------------------ InnerAction

InnerAction::InnerAction(GL2Rep rep) : rep_(std::move(rep)) {
  const std::size_t n = rep_.size();
  Mat big(2 * n);
  const std::array<std::array<const Mat*, 2>, 2> blocks = {{{&rep_.c11, &rep_.c12},
                                                             {&rep_.c21, &rep_.c22}}};
  for (std::size_t bi = 0; bi < 2; ++bi) {
    for (std::size_t bj = 0; bj < 2; ++bj) {
      const Mat& b = *blocks[bi][bj];
      if (b.size() != n) throw Error("dimension mismatch");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) big(bi * n + i, bj * n + j) = b(i, j);
    }
  }
  Mat inv;
  try {
    inv = inverse(big);
  } catch (const Error&) {
    throw Error("action undefined");
  }
  for (std::size_t bi = 0; bi < 2; ++bi)
    for (std::size_t bj = 0; bj < 2; ++bj) mstar_[bi][bj] = inv.block(bi, bj, n);
}

const Mat& InnerAction::m(std::size_t i, std::size_t j) const {
  if (i > 1 || j > 1) throw Error("index out of range");
  if (i == 0) return j == 0 ? rep_.c11 : rep_.c12;
  return j == 0 ? rep_.c21 : rep_.c22;
}

Mat InnerAction::act(std::size_t i, std::size_t j, const Mat& v) const {
  if (i > 1 || j > 1) throw Error("index out of range");
  return m(i, 0) * v * mstar_[0][j] + m(i, 1) * v * mstar_[1][j];
}

bool InnerAction::unital() const {
  const Mat one = Mat::identity(rep_.size());
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Mat s = act(i, j, one);
      if (!(i == j ? s == one : s.is_zero())) return false;
    }
  }
  return true;
}

bool InnerAction::module_algebra(const Mat& v, const Mat& w) const {
  const Mat vw = v * w;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Mat rhs = act(i, 0, v) * act(0, j, w) + act(i, 1, v) * act(1, j, w);
      if (!(act(i, j, vw) == rhs)) return false;
    }
  }
  return true;
}

std::vector<Mat> operator_algebra_generators(std::span<const GL2Rep> instances) {
  std::vector<Mat> gens;
  for (const auto& r : instances) {
    gens.push_back(r.c11);
    gens.push_back(r.c12);
    gens.push_back(r.c21);
    gens.push_back(r.c22);
    gens.push_back(inverse(quantum_determinant(r)));
  }
  return gens;
}

MatSpace operator_algebra(std::span<const GL2Rep> instances) {
  return subalgebra_closure(operator_algebra_generators(instances));
}

Invariants invariants_of(std::span<const GL2Rep> instances) {
  Invariants out;
  out.space = centralizer(operator_algebra(instances));
  if (out.space.ambient() == 4)
    for (const auto& b : out.space.basis()) out.coords.push_back(clifford().coords(b));
  return out;
}

bool counit_invariance(const InnerAction& action, const MatSpace& invariants) {
  for (const auto& v : invariants.basis()) {
    if (!(action.act(0, 0, v) == v) || !(action.act(1, 1, v) == v)) return false;
    if (!action.act(0, 1, v).is_zero() || !action.act(1, 0, v).is_zero()) return false;
  }
  return true;
}

}  // namespace qgl

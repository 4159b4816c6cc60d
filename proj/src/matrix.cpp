#include "qgl/matrix.hpp"

#include <algorithm>
#include <random>

namespace qgl {

// -------------------------------------------------------------------------- Mat

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) : n_(rows.size()) {
  e_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error("dimension mismatch");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n);
  m(i, j) = 1;
  return m;
}

Mat Mat::diag(std::span<const Scalar> d) {
  Mat m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::from_flat(std::size_t n, std::span<const Scalar> flat) {
  if (flat.size() != n * n) throw Error("dimension mismatch");
  Mat m(n);
  std::copy(flat.begin(), flat.end(), m.e_.begin());
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

Scalar Mat::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Mat Mat::transpose() const {
  Mat t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::block(std::size_t bi, std::size_t bj, std::size_t m) const {
  Mat b(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b(i, j) = (*this)(bi * m + i, bj * m + j);
  return b;
}

Mat Mat::operator-() const {
  Mat out = *this;
  for (auto& x : out.e_) x = -x;
  return out;
}

void require_same_size(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_size(*this, o);
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_size(*this, o);
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_size(a, b);
  const std::size_t n = a.n_;
  Mat c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Mat Mat::pow(unsigned k) const {
  Mat out = identity(n_);
  Mat base = *this;
  while (k != 0) {
    if (k & 1U) out = out * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return out;
}

std::string Mat::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != 0) out += ", ";
      out += (*this)(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

Mat block_diag(std::initializer_list<Mat> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  Mat m(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m(off + i, off + j) = b(i, j);
    off += b.size();
  }
  return m;
}

Mat jordan(const Scalar& lambda, std::size_t m) {
  Mat j(m);
  for (std::size_t i = 0; i < m; ++i) {
    j(i, i) = lambda;
    if (i + 1 < m) j(i, i + 1) = 1;
  }
  return j;
}

Scalar substitute(const Scalar& s, const GaussRational& q0) { return {eval_numeric(s, q0)}; }

Mat substitute(const Mat& m, const GaussRational& q0) {
  Mat out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = substitute(m(i, j), q0);
  return out;
}

// ------------------------------------------------------------- linear systems

namespace {

using PolyRow = std::vector<Poly>;

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  return Poly::exact_div(a * b, Poly::gcd(a, b));
}

// Divides out the polynomial content and scales the leading entry's leading
// coefficient to 1. Keeps cross-multiplied rows from growing.
void make_primitive(PolyRow& row) {
  Poly g;
  const Poly* first = nullptr;
  for (const auto& p : row) {
    if (p.is_zero()) continue;
    if (!first) first = &p;
    g = Poly::gcd(g, p);
    if (g.is_one()) break;
  }
  if (!first) return;
  if (!g.is_constant())
    for (auto& p : row)
      if (!p.is_zero()) p = Poly::exact_div(p, g);
  const GaussRational inv = first->lead().inverse();
  if (!inv.is_one())
    for (auto& p : row)
      if (!p.is_zero()) p *= inv;
}

std::size_t cost(const Poly& p) { return p.height() + 4 * static_cast<std::size_t>(p.degree()); }

// target := a * target - b * src, where a, b are the entries in the pivot column.
void eliminate(PolyRow& target, const PolyRow& src, std::size_t col) {
  const Poly a = src[col];
  const Poly b = target[col];
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (src[j].is_zero()) {
      if (!target[j].is_zero()) target[j] = a * target[j];
      continue;
    }
    Poly t = b * src[j];
    target[j] = target[j].is_zero() ? -t : a * target[j] - t;
  }
  make_primitive(target);
}

}  // namespace

// Fraction-free: rows are cleared to polynomials, reduced by cross
// multiplication and content removal, and divided by their pivots only at
// the very end.
std::vector<std::size_t> rref(DenseMatrix& m) {
  std::vector<PolyRow> rows(m.rows, PolyRow(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    Poly den(GaussRational(1));
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!m.at(r, j).is_zero()) den = lcm(den, m.at(r, j).den());
    for (std::size_t j = 0; j < m.cols; ++j) {
      const Scalar& v = m.at(r, j);
      if (v.is_zero()) continue;
      rows[r][j] = den.is_constant() ? v.num() * (den.lead() * v.den().lead().inverse())
                                     : v.num() * Poly::exact_div(den, v.den());
    }
    make_primitive(rows[r]);
  }

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t best = m.rows;
    std::size_t best_cost = 0;
    for (std::size_t r = row; r < m.rows; ++r) {
      if (rows[r][col].is_zero()) continue;
      const std::size_t c = cost(rows[r][col]);
      if (best == m.rows || c < best_cost) {
        best = r;
        best_cost = c;
      }
    }
    if (best == m.rows) continue;
    std::swap(rows[row], rows[best]);
    for (std::size_t r = row + 1; r < m.rows; ++r)
      if (!rows[r][col].is_zero()) eliminate(rows[r], rows[row], col);
    pivots.push_back(col);
    ++row;
  }
  // back substitution, bottom up
  for (std::size_t k = pivots.size(); k-- > 0;)
    for (std::size_t r = 0; r < k; ++r)
      if (!rows[r][pivots[k]].is_zero()) eliminate(rows[r], rows[k], pivots[k]);

  for (std::size_t r = 0; r < m.rows; ++r) {
    if (r >= pivots.size()) {
      for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = Scalar();
      continue;
    }
    const Poly& p = rows[r][pivots[r]];
    for (std::size_t j = 0; j < m.cols; ++j)
      m.at(r, j) = rows[r][j].is_zero() ? Scalar() : Scalar(rows[r][j], p);
  }
  return pivots;
}

std::size_t rank(DenseMatrix m) { return rref(m).size(); }

std::vector<std::vector<Scalar>> nullspace(DenseMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

DenseMatrix to_dense(const Mat& m) {
  DenseMatrix d(m.size(), m.size());
  std::copy(m.flat().begin(), m.flat().end(), d.a.begin());
  return d;
}

}  // namespace

std::size_t rank(const Mat& m) { return rank(to_dense(m)); }

Scalar determinant(const Mat& m) {
  DenseMatrix d = to_dense(m);
  const std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!d.at(r, col).is_zero() &&
          (piv == n || d.at(r, col).complexity() < d.at(piv, col).complexity())) {
        piv = r;
      }
    }
    if (piv == n) return {};
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(d.at(col, j), d.at(piv, j));
      det = -det;
    }
    const Scalar p = d.at(col, col);
    det *= p;
    const Scalar inv = p.inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (d.at(r, col).is_zero()) continue;
      const Scalar f = d.at(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) d.at(r, j) -= f * d.at(col, j);
    }
  }
  return det;
}

bool is_invertible(const Mat& m) { return rank(m) == m.size(); }

Mat inverse(const Mat& m) {
  const std::size_t n = m.size();
  DenseMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error("singular");
  Mat inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug.at(i, n + j);
  return inv;
}

bool is_nilpotent(const Mat& m) { return m.pow(static_cast<unsigned>(m.size())).is_zero(); }

std::size_t rank_side_by_side(const Mat& a, const Mat& b) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  DenseMatrix d(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d.at(i, j) = a(i, j);
      d.at(i, n + j) = b(i, j);
    }
  }
  return rank(std::move(d));
}

// --------------------------------------------------------------------- MatSpace

Mat MatSpace::reduce(const Mat& m) const {
  if (m.size() != n_) throw Error("dimension mismatch");
  Mat r = m;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar f = r.flat()[pivots_[k]];
    if (f.is_zero()) continue;
    auto rf = r.flat();
    auto bf = basis_[k].flat();
    for (std::size_t t = 0; t < rf.size(); ++t)
      if (!bf[t].is_zero()) rf[t] -= f * bf[t];
  }
  return r;
}

bool MatSpace::contains(const Mat& m) const { return reduce(m).is_zero(); }

bool MatSpace::insert(const Mat& m) {
  Mat r = reduce(m);
  auto rf = r.flat();
  auto it = std::find_if(rf.begin(), rf.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == rf.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - rf.begin());
  const Scalar inv = rf[pivot].inverse();
  for (auto& x : rf) x *= inv;
  for (auto& b : basis_) {
    auto bf = b.flat();
    const Scalar f = bf[pivot];
    if (f.is_zero()) continue;
    for (std::size_t t = 0; t < bf.size(); ++t)
      if (!rf[t].is_zero()) bf[t] -= f * rf[t];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  basis_.insert(basis_.begin() + idx, std::move(r));
  return true;
}

bool MatSpace::is_subspace_of(const MatSpace& other) const {
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const Mat& b) { return other.contains(b); });
}

MatSpace span(std::span<const Mat> mats, std::size_t n) {
  MatSpace s(n);
  for (const auto& m : mats) s.insert(m);
  return s;
}

MatSpace span(std::span<const Mat> mats) { return span(mats, mats.empty() ? 0 : mats[0].size()); }

MatSpace operator_kernel(std::size_t n, std::span<const std::function<Mat(const Mat&)>> ops) {
  const std::size_t unknowns = n * n;
  DenseMatrix sys(unknowns * ops.size(), unknowns);
  for (std::size_t col = 0; col < unknowns; ++col) {
    const Mat e = Mat::unit(n, col / n, col % n);
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const Mat image = ops[k](e);
      if (image.size() != n) throw Error("dimension mismatch");
      for (std::size_t r = 0; r < unknowns; ++r) sys.at(k * unknowns + r, col) = image.flat()[r];
    }
  }
  MatSpace out(n);
  for (const auto& v : nullspace(std::move(sys))) out.insert(Mat::from_flat(n, v));
  return out;
}

MatSpace operator_kernel(std::size_t n, const std::function<Mat(const Mat&)>& op) {
  return operator_kernel(n, std::span(&op, 1));
}

MatSpace subalgebra_closure(std::span<const Mat> generators) {
  if (generators.empty()) throw Error("closure needs at least one generator");
  const std::size_t n = generators[0].size();
  MatSpace space(n);
  // Raw spanning vectors, in insertion order; products are formed among these.
  std::vector<Mat> spanning;
  for (const auto& g : generators) {
    if (g.size() != n) throw Error("dimension mismatch");
    if (space.insert(g)) spanning.push_back(g);
  }
  for (std::size_t k = 0; k < spanning.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      // spanning may grow while we iterate; copy the operands.
      const Mat a = spanning[k];
      const Mat b = spanning[j];
      Mat ab = a * b;
      if (space.insert(ab)) spanning.push_back(std::move(ab));
      if (j != k) {
        Mat ba = b * a;
        if (space.insert(ba)) spanning.push_back(std::move(ba));
      }
    }
  }
  return space;
}

MatSpace centralizer(std::span<const Mat> generators, std::size_t n) {
  std::vector<std::function<Mat(const Mat&)>> ops;
  ops.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != n) throw Error("dimension mismatch");
    ops.emplace_back([g](const Mat& x) { return x * g - g * x; });
  }
  if (ops.empty()) {
    MatSpace all(n);
    for (std::size_t k = 0; k < n * n; ++k) all.insert(Mat::unit(n, k / n, k % n));
    return all;
  }
  return operator_kernel(n, ops);
}

MatSpace centralizer(const MatSpace& s) { return centralizer(s.basis(), s.ambient()); }

std::optional<Mat> invertible_element(const MatSpace& s) {
  for (const auto& b : s.basis())
    if (is_invertible(b)) return b;
  if (s.dim() < 2) return std::nullopt;
  std::mt19937 rng(20240917U);
  std::uniform_int_distribution<long> coeff(-50, 50);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Mat m(s.ambient());
    for (const auto& b : s.basis()) m += b * Scalar(coeff(rng));
    if (is_invertible(m)) return m;
  }
  return std::nullopt;
}

}  // namespace qgl

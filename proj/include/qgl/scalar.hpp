#pragma once

// Exact arithmetic in Q(i)(q): rational functions in a transcendental symbol q
// with Gaussian-rational coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a + b*i with a, b in Q. gmpxx keeps both parts in lowest terms.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re, mpq_class im = 0);

  static GaussRational i() { return GaussRational(0, 1); }
  /// Parses "p" or "p/q" (real rationals only).
  static GaussRational from_rational_string(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  GaussRational inverse() const;
  GaussRational pow(int k) const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Bit size of the coefficients, used as a pivoting heuristic.
  std::size_t height() const;
  std::string str() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

/// Dense univariate polynomial in q, coefficients low to high, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(GaussRational c);  // NOLINT(google-explicit-constructor)

  static Poly monomial(GaussRational c, int degree);
  static Poly q() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Number of printed terms; real and imaginary parts count separately.
  std::size_t term_count() const;

  const std::vector<GaussRational>& coeffs() const { return c_; }
  GaussRational coeff(int k) const;
  const GaussRational& lead() const { return c_.back(); }

  Poly monic() const;
  GaussRational eval(const GaussRational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussRational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussRational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact quotient when b divides a.
  static Poly exact_div(const Poly& a, const Poly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

  std::size_t height() const;
  std::string str() const;

 private:
  explicit Poly(std::vector<GaussRational> c) : c_(std::move(c)) { trim(); }
  void trim();

  std::vector<GaussRational> c_;
};

/// Canonical fraction num/den: gcd(num, den) = 1, den monic, zero is 0/1.
class Scalar {
 public:
  Scalar() : den_(GaussRational(1)) {}
  Scalar(long v) : Scalar(GaussRational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(GaussRational c) : num_(std::move(c)), den_(GaussRational(1)) {}  // NOLINT
  Scalar(Poly num, Poly den);

  static Scalar q() { return Scalar(Poly::q(), Poly(GaussRational(1))); }
  /// q^k for any integer k.
  static Scalar q_pow(int k);
  static Scalar i() { return Scalar(GaussRational::i()); }

  /// Parses the text encoding: integers, i, q, + - * / ^, parentheses.
  static Scalar parse(std::string_view text);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  Scalar inverse() const;
  Scalar pow(int k) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Rough size measure; smaller is cheaper to pivot on.
  std::size_t complexity() const;
  std::string str() const;

 private:
  struct Canonical {};
  Scalar(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

/// 1 + q + ... + q^(k-1).
Scalar q_integer(int k);

/// Value of a at q = q0. Throws "evaluation pole" when den(a) vanishes at q0.
GaussRational eval_numeric(const Scalar& a, const GaussRational& q0);

}  // namespace qgl

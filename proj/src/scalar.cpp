#include "qgl/scalar.hpp"

namespace qgl {

// ---------------------------------------------------------------- GaussRational

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational GaussRational::from_rational_string(std::string_view text) {
  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0 || v.get_den() == 0) {
    throw Error("bad rational: " + std::string(text));
  }
  v.canonicalize();
  return {v, 0};
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw Error("zero divisor");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussRational GaussRational::pow(int k) const {
  GaussRational base = k < 0 ? inverse() : *this;
  unsigned e = k < 0 ? static_cast<unsigned>(-k) : static_cast<unsigned>(k);
  GaussRational out(1);
  while (e != 0) {
    if (e & 1U) out *= base;
    base *= base;
    e >>= 1U;
  }
  return out;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw Error("zero divisor");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::size_t GaussRational::height() const {
  auto bits = [](const mpq_class& v) {
    return mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2);
  };
  return bits(re_) + (sgn(im_) == 0 ? 0 : bits(im_));
}

std::string GaussRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag[0] == '-') return re_.get_str() + " - " + imag.substr(1);
  return re_.get_str() + " + " + imag;
}

// ------------------------------------------------------------------------- Poly

Poly::Poly(GaussRational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly Poly::monomial(GaussRational c, int degree) {
  if (c.is_zero()) return {};
  std::vector<GaussRational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t Poly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : c_) n += (sgn(c.re()) != 0 ? 1U : 0U) + (sgn(c.im()) != 0 ? 1U : 0U);
  return n;
}

GaussRational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return c_[static_cast<std::size_t>(k)];
}

Poly Poly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  GaussRational inv = lead().inverse();
  return *this * inv;
}

GaussRational Poly::eval(const GaussRational& x) const {
  GaussRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("zero divisor");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<GaussRational> rem = a.c_;
  std::vector<GaussRational> quo(a.c_.size() - b.c_.size() + 1);
  const GaussRational inv_lead = b.lead().inverse();
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    GaussRational f = rem[k] * inv_lead;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    quo[k - db] = std::move(f);
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::size_t Poly::height() const {
  std::size_t h = 0;
  for (const auto& c : c_) h += c.height();
  return h;
}

namespace {

void append_term(std::string& out, const mpq_class& coeff, bool imaginary, int degree) {
  if (sgn(coeff) == 0) return;
  const bool negative = sgn(coeff) < 0;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  mpq_class mag = abs(coeff);
  std::vector<std::string> factors;
  if (mag != 1 || (!imaginary && degree == 0)) factors.push_back(mag.get_str());
  if (imaginary) factors.emplace_back("i");
  if (degree == 1) factors.emplace_back("q");
  if (degree > 1) factors.push_back("q^" + std::to_string(degree));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k != 0) out += '*';
    out += factors[k];
  }
}

}  // namespace

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = c_[static_cast<std::size_t>(k)];
    append_term(out, c.re(), false, k);
    append_term(out, c.im(), true, k);
  }
  return out;
}

// ----------------------------------------------------------------------- Scalar

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("zero divisor");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(GaussRational(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Poly::exact_div(num_, g);
      den_ = Poly::exact_div(den_, g);
    }
  }
  if (!den_.lead().is_one()) {
    GaussRational inv = den_.lead().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Scalar Scalar::q_pow(int k) {
  if (k >= 0) return {Poly::monomial(1, k), Poly(GaussRational(1)), Canonical{}};
  return {Poly(GaussRational(1)), Poly::monomial(1, -k), Canonical{}};
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("zero divisor");
  return {den_, num_};
}

Scalar Scalar::pow(int k) const {
  Scalar base = k < 0 ? inverse() : *this;
  unsigned e = k < 0 ? static_cast<unsigned>(-k) : static_cast<unsigned>(k);
  Scalar out(1);
  while (e != 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return out;
}

Scalar Scalar::operator-() const { return {-num_, den_, Canonical{}}; }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Poly(GaussRational(1));
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (o.is_constant()) {
    num_ *= o.num_.coeffs()[0];
    return *this;
  }
  if (is_constant()) {
    GaussRational c = num_.coeffs()[0];
    *this = o;
    num_ *= c;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  if (!den_.is_one()) normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("zero divisor");
  return *this *= o.inverse();
}

std::size_t Scalar::complexity() const {
  return 64 * static_cast<std::size_t>(num_.degree() + den_.degree() + 1) + num_.height() +
         den_.height();
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.str();
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

Scalar q_integer(int k) {
  if (k < 1) throw Error("undefined q-integer");
  Poly p;
  for (int j = 0; j < k; ++j) p += Poly::monomial(1, j);
  return {p, Poly(GaussRational(1))};
}

GaussRational eval_numeric(const Scalar& a, const GaussRational& q0) {
  GaussRational d = a.den().eval(q0);
  if (d.is_zero()) throw Error("evaluation pole");
  return a.num().eval(q0) / d;
}

}  // namespace qgl

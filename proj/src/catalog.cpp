#include "qgl/catalog.hpp"

#include <algorithm>
#include <map>

namespace qgl {
namespace {

// 1-based matrix units, as printed.
Mat e(std::size_t i, std::size_t j) { return Mat::unit(4, i - 1, j - 1); }
Mat one() { return Mat::identity(4); }
Scalar q() { return Scalar::q(); }
Scalar qp(int k) { return Scalar::q_pow(k); }
Scalar val(const GaussRational& g) { return Scalar(g); }
Mat dg(Scalar a, Scalar b, Scalar c, Scalar d) { return Mat::diag({a, b, c, d}); }
Mat scalar_block(const Scalar& s) { return Mat::diag({s}); }

Instance spinor(Mat a, Mat b, std::vector<NamedMat> extras = {}) {
  Instance inst;
  inst.kind = EntryKind::QSpinor;
  inst.spinor = QSpinorRep{std::move(a), std::move(b), Scalar::q()};
  inst.extras = std::move(extras);
  return inst;
}

Instance gl2(Mat c11, Mat c12, Mat c21, Mat c22) {
  Instance inst;
  inst.kind = EntryKind::GL2;
  inst.gl2 = GL2Rep{std::move(c11), std::move(c12), std::move(c21), std::move(c22)};
  return inst;
}

CatalogEntry rejected(std::string name, std::string source, std::string note, Mat a, Mat b) {
  CatalogEntry ce;
  ce.name = std::move(name);
  ce.kind = EntryKind::QSpinor;
  ce.source = std::move(source);
  ce.note = std::move(note);
  ce.claims.admissible = false;
  ce.build = [a = std::move(a), b = std::move(b)](const ParamValues&) { return spinor(a, b); };
  return ce;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> out;

  // ---- admissible q-spinor normal forms (A invertible)
  {
    CatalogEntry ce;
    ce.name = "thm1-case1";
    ce.source = "admissible normal form 1";
    ce.params = {{"mu", 1, true}};
    ce.claims.admissible = true;
    ce.build = [](const ParamValues& p) {
      const Scalar mu = val(p[0]);
      return spinor(dg(qp(2), q(), q(), 1), q() * e(1, 3) - mu * e(2, 4),
                    {{"B'", e(4, 3) - mu * e(2, 1)}});
    };
    out.push_back(std::move(ce));
  }
  {
    CatalogEntry ce;
    ce.name = "thm1-case2";
    ce.source = "admissible normal form 2";
    ce.params = {{"mu", 1, true}};
    ce.claims.admissible = true;
    ce.build = [](const ParamValues& p) {
      const Scalar mu = val(p[0]);
      return spinor(dg(qp(2), q(), q(), 1), q() * e(1, 2) + mu * e(3, 4),
                    {{"B'", e(4, 2) + mu * e(3, 1)}});
    };
    out.push_back(std::move(ce));
  }
  {
    CatalogEntry ce;
    ce.name = "thm1-case3";
    ce.source = "admissible normal form 3";
    ce.note = "B = B1 + B2 (both coefficients set to 1); "
              "B1 = e14 alone admits no C with CB != 0.";
    ce.claims.admissible = true;
    ce.build = [](const ParamValues&) {
      const Mat a = block_diag({jordan(q(), 2), scalar_block(qp(2)), scalar_block(1)});
      return spinor(a, e(1, 4) + e(3, 2),
                    {{"B1", e(1, 4)}, {"B2", e(3, 2)}, {"B'1", e(1, 3)}, {"B'2", e(4, 2)}});
    };
    out.push_back(std::move(ce));
  }

  // ---- rejected branches of the classification
  out.push_back(rejected("sec3-diag-two-units", "classification, diagonal A with B(A)^2 = 0",
                         "alpha1 = q*alpha2, alpha3 = q with alpha2 = 5; B(A) = span{e12, e34}",
                         dg(5 * q(), 5, q(), 1), e(1, 2) + e(3, 4)));
  out.push_back(rejected("sec3-diag-three-units", "classification, diagonal A with B(A)^2 = 0",
                         "alpha1 = alpha2 = alpha3 = q; B(A) = span{e14, e24, e34}",
                         dg(q(), q(), q(), 1), e(1, 4) + e(2, 4) + e(3, 4)));
  out.push_back(rejected("sec3-jordan3-qinv", "classification, 3x3 Jordan block, B(A) = C e43", "",
                         block_diag({jordan(qp(-1), 3), scalar_block(1)}), e(4, 3)));
  out.push_back(rejected("sec3-jordan3-q", "classification, 3x3 Jordan block, B(A) = C e14", "",
                         block_diag({jordan(q(), 3), scalar_block(1)}), e(1, 4)));
  out.push_back(rejected("sec3-jordan-pair-eps-q", "classification, case I (epsilon = q)",
                         "a = J(q;2), b = J(1;2); beta = [[1, 1], [0, q]]",
                         block_diag({jordan(q(), 2), jordan(1, 2)}),
                         e(1, 3) + e(1, 4) + q() * e(2, 4)));
  out.push_back(rejected("sec3-jordan-pair-eps-qinv", "classification, case II (epsilon = q^-1)",
                         "a = J(q^-1;2), b = J(1;2); gamma = [[1, 1], [0, q]]",
                         block_diag({jordan(qp(-1), 2), jordan(1, 2)}),
                         e(3, 1) + e(3, 2) + q() * e(4, 2)));
  {
    CatalogEntry ce = rejected("sec3-generic-eps", "classification, epsilon not in {q^-1, 1, q, q^2}",
                               "generic epsilon = 5", Mat(4), Mat(4));
    ce.params = {{"epsilon", 5, true}};
    ce.build = [](const ParamValues& p) {
      return spinor(block_diag({jordan(val(p[0]), 2), scalar_block(q()), scalar_block(1)}),
                    e(3, 4));
    };
    out.push_back(std::move(ce));
  }
  out.push_back(rejected("sec3-possibility1", "classification, final possibility 1 (epsilon = q^-1)",
                         "normalized form A = diag(q^2,q,1,1) + e34, B = B1 + B2 = e24 + e12",
                         dg(qp(2), q(), 1, 1) + e(3, 4), e(2, 4) + e(1, 2)));
  out.push_back(rejected("sec3-possibility2", "classification, final possibility 2 (epsilon = 1)",
                         "B = e32 + e34",
                         block_diag({jordan(1, 2), scalar_block(q()), scalar_block(1)}),
                         e(3, 2) + e(3, 4)));
  out.push_back(rejected("sec3-possibility3", "classification, final possibility 3 (epsilon = q)",
                         "B = B1 + B2 = e14 + e34",
                         block_diag({jordan(q(), 2), scalar_block(q()), scalar_block(1)}),
                         e(1, 4) + e(3, 4)));
  out.push_back(rejected("sec3-possibility4", "classification, final possibility 4 (epsilon = q^2)",
                         "B = B1 + B2 = e13 + e34",
                         block_diag({jordan(qp(2), 2), scalar_block(q()), scalar_block(1)}),
                         e(1, 3) + e(3, 4)));
  out.push_back(rejected("sec3-case-iv", "classification, case iv (mu = 1, epsilon = q)",
                         "a = J(q;2), b = diag(1,1); B = e13 + e14",
                         block_diag({jordan(q(), 2), scalar_block(1), scalar_block(1)}),
                         e(1, 3) + e(1, 4)));
  out.push_back(rejected("sec3-case-i3", "classification, case i.3 (epsilon = q^-1, mu = 1)",
                         "a = J(q^-1;2), b = diag(1,1); B = e32 + e42",
                         block_diag({jordan(qp(-1), 2), scalar_block(1), scalar_block(1)}),
                         e(3, 2) + e(4, 2)));

  // ---- quantum GL2 representations
  const auto d_standard = [](const ParamValues&) { return dg(qp(2), q(), q(), 1); };
  {
    CatalogEntry ce;
    ce.name = "sec5-case1";
    ce.kind = EntryKind::GL2;
    ce.source = "CASE 1 (nonzero perturbation)";
    ce.params = {{"mu", 1, true}};
    ce.claims.perturbation_nonzero = true;
    ce.claims.dim_R = 9;
    ce.claims.dim_I = 1;
    ce.build = [](const ParamValues& p) {
      const Scalar mu = val(p[0]);
      return gl2(dg(1, qp(-1), 1, qp(-1)), q() * e(1, 3) - mu * e(2, 4), -mu * e(2, 1) + e(4, 3),
                 dg(qp(2), qp(2), q(), q()) - q() * mu * e(2, 3));
    };
    ce.claimed_detq = d_standard;
    out.push_back(std::move(ce));
  }
  {
    CatalogEntry ce;
    ce.name = "sec5-case2";
    ce.kind = EntryKind::GL2;
    ce.source = "CASE 2 (nonzero perturbation)";
    ce.params = {{"mu", 1, true}};
    ce.claims.perturbation_nonzero = true;
    ce.claims.dim_R = 9;
    ce.claims.dim_I = 1;
    ce.build = [](const ParamValues& p) {
      const Scalar mu = val(p[0]);
      return gl2(dg(1, 1, qp(-1), qp(-1)), q() * e(1, 2) + mu * e(3, 4), mu * e(3, 1) + e(4, 2),
                 dg(qp(2), q(), qp(2), q()) + q() * mu * e(3, 2));
    };
    ce.claimed_detq = d_standard;
    out.push_back(std::move(ce));
  }
  {
    CatalogEntry ce;
    ce.name = "sec5-item-c";
    ce.kind = EntryKind::GL2;
    ce.source = "item c) (zero perturbation, dim R = 8)";
    ce.params = {{"alpha", 1, false}, {"beta", 2, false}, {"gamma", 3, false}};
    ce.claims.perturbation_nonzero = false;
    ce.claims.dim_R = 8;
    ce.claims.dim_I = 1;
    ce.claims.operator_algebra_shape = {"****", "0***", "00e0", "000e"};
    ce.build = [](const ParamValues& p) {
      return gl2(one(), val(p[0]) * e(1, 2) + val(p[1]) * e(2, 3) + val(p[2]) * e(2, 4), Mat(4),
                 dg(qp(2), q(), 1, 1));
    };
    ce.claimed_detq = [](const ParamValues&) { return dg(qp(2), q(), 1, 1); };
    out.push_back(std::move(ce));
  }
  {
    CatalogEntry ce;
    ce.name = "sec5-item-d";
    ce.kind = EntryKind::GL2;
    ce.source = "item d) (zero perturbation, dim R = 3)";
    ce.note = "printed third entry 'm*alpha2' read as q*alpha2, and alpha1 = q*alpha2, so that "
              "det_q = diag(q^2,q,q,1) slotwise and slots 2,3 coincide; reading m as a free "
              "parameter contradicts the stated det_q and is rejected.";
    ce.params = {{"alpha2", 1, true}, {"alpha3", 2, true}};
    ce.claims.perturbation_nonzero = false;
    ce.claims.dim_R = 3;
    ce.claims.dim_I = 6;
    ce.claims.operator_algebra_shape = {"*000", "0e00", "00e0", "000*"};
    ce.claims.invariants_shape = {"a000", "0bc0", "0de0", "000f"};
    ce.build = [](const ParamValues& p) {
      const Scalar a2 = val(p[0]);
      const Scalar a3 = val(p[1]);
      const Scalar a1 = q() * a2;
      return gl2(dg(1, a1, q() * a2, a3), Mat(4), Mat(4),
                 dg(qp(2), q() / a1, a2.inverse(), a3.inverse()));
    };
    ce.claimed_detq = d_standard;
    out.push_back(std::move(ce));
  }
  {
    CatalogEntry ce;
    ce.name = "sec5-item-e";
    ce.kind = EntryKind::MetadataOnly;
    ce.source = "item e) (representations from an external classification)";
    ce.note = "matrices not printed; claims recorded only";
    ce.params = {{"alpha", 5, true}};
    ce.claims.dim_R = 6;
    ce.claims.dim_I = 2;
    ce.claims.unchecked = true;
    ce.claimed_detq = [](const ParamValues& p) { return dg(val(p[0]), qp(2), q(), 1); };
    out.push_back(std::move(ce));
  }
  {
    CatalogEntry ce;
    ce.name = "sec5-item-f";
    ce.kind = EntryKind::MetadataOnly;
    ce.source = "item f) (representations from an external classification)";
    ce.note = "matrices not printed; claims recorded only";
    ce.claims.dim_R = 7;
    ce.claims.dim_I = 1;
    ce.claims.unchecked = true;
    ce.claimed_detq = [](const ParamValues&) { return dg(qp(3), qp(2), q(), 1); };
    out.push_back(std::move(ce));
  }
  return out;
}

}  // namespace

std::string to_string(EntryKind k) {
  switch (k) {
    case EntryKind::QSpinor:
      return "qspinor";
    case EntryKind::GL2:
      return "gl2";
    case EntryKind::MetadataOnly:
      return "metadata";
  }
  return "?";
}

std::string to_string(Mode m) { return m == Mode::Single ? "single" : "family"; }

Mode parse_mode(std::string_view s) {
  if (s == "single") return Mode::Single;
  if (s == "family") return Mode::Family;
  throw Error("unknown mode: " + std::string(s));
}

ParamValues CatalogEntry::defaults() const {
  ParamValues v;
  for (const auto& p : params) v.push_back(p.default_value);
  return v;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& find_entry(std::string_view name) {
  for (const auto& ce : catalog())
    if (ce.name == name) return ce;
  throw Error("unknown entry: " + std::string(name));
}

ParamValues resolve_params(const CatalogEntry& ce,
                           const std::map<std::string, GaussRational>& overrides) {
  ParamValues v = ce.defaults();
  for (const auto& [name, value] : overrides) {
    auto it = std::find_if(ce.params.begin(), ce.params.end(),
                           [&](const ParamSpec& p) { return p.name == name; });
    if (it == ce.params.end()) throw Error("unknown parameter " + name + " for " + ce.name);
    v[static_cast<std::size_t>(it - ce.params.begin())] = value;
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (ce.params[k].nonzero && v[k].is_zero())
      throw Error("forbidden parameter value: " + ce.params[k].name + " = 0");
  }
  return v;
}

Instance instantiate(const CatalogEntry& ce, const std::map<std::string, GaussRational>& overrides) {
  if (!ce.build) throw Error("entry " + ce.name + " has no matrices (metadata only)");
  return ce.build(resolve_params(ce, overrides));
}

Instance instantiate(std::string_view name, const std::map<std::string, GaussRational>& overrides) {
  return instantiate(find_entry(name), overrides);
}

std::vector<ParamValues> family_params(const CatalogEntry& ce) {
  const std::size_t p = ce.params.size();
  if (p == 0) return {ParamValues{}};
  std::vector<ParamValues> out;
  for (std::size_t k = 0; k < p; ++k) {
    ParamValues v(p, GaussRational(0));
    v[k] = 1;
    bool valid = true;
    for (std::size_t j = 0; j < p; ++j)
      if (ce.params[j].nonzero && v[j].is_zero()) valid = false;
    if (!valid) {
      for (std::size_t j = 0; j < p; ++j) v[j] = static_cast<long>((j + k) % p + 1);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<GL2Rep> gl2_instances(const CatalogEntry& ce, Mode mode) {
  if (ce.kind != EntryKind::GL2) throw Error("entry " + ce.name + " is not a GL2 representation");
  std::vector<GL2Rep> out;
  if (mode == Mode::Single) {
    out.push_back(*ce.build(ce.defaults()).gl2);
  } else {
    for (const auto& v : family_params(ce)) out.push_back(*ce.build(v).gl2);
  }
  return out;
}

MatSpace pattern_space(std::span<const std::string> rows) {
  const std::size_t n = rows.size();
  std::map<char, Mat> tied;
  MatSpace s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error("pattern is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const char c = rows[i][j];
      if (c == '0') continue;
      if (c == '*') {
        s.insert(Mat::unit(n, i, j));
      } else {
        auto [it, fresh] = tied.try_emplace(c, Mat(n));
        it->second(i, j) = 1;
      }
    }
  }
  for (const auto& [c, m] : tied) s.insert(m);
  return s;
}

Instance substitute(const Instance& inst, const GaussRational& q0) {
  Instance out;
  out.kind = inst.kind;
  if (inst.spinor) {
    out.spinor = QSpinorRep{substitute(inst.spinor->a, q0), substitute(inst.spinor->b, q0),
                            substitute(inst.spinor->q, q0)};
  }
  if (inst.gl2) {
    const GL2Rep& r = *inst.gl2;
    out.gl2 = GL2Rep{substitute(r.c11, q0), substitute(r.c12, q0), substitute(r.c21, q0),
                     substitute(r.c22, q0)};
  }
  for (const auto& x : inst.extras) out.extras.push_back({x.name, substitute(x.mat, q0)});
  return out;
}

}  // namespace qgl

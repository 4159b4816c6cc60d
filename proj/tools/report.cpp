#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "qgl/clifford.hpp"

namespace qgl::cli {
namespace {

constexpr const char* kUnchecked = "unchecked (external reference)";

int dim(const MatSpace& s) { return static_cast<int>(s.dim()); }

bool same_space(const MatSpace& a, const MatSpace& b) {
  return a.dim() == b.dim() && a.is_subspace_of(b);
}

std::string yes_no(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "yes" : "no";
}

std::string num(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

// Ranks and dimensions that should survive the specialization q -> q0.
struct Numbers {
  std::vector<std::pair<std::string, int>> values;
  void add(std::string name, int v) { values.emplace_back(std::move(name), v); }
};

Numbers gl2_numbers(const std::vector<GL2Rep>& single, const std::vector<GL2Rep>& family,
                    const Scalar& q) {
  Numbers n;
  const GL2Rep& r = single.front();
  n.add("rank C11", static_cast<int>(rank(r.c11)));
  n.add("rank C12", static_cast<int>(rank(r.c12)));
  n.add("rank C21", static_cast<int>(rank(r.c21)));
  n.add("rank C22", static_cast<int>(rank(r.c22)));
  n.add("rank det_q", static_cast<int>(rank(quantum_determinant(r))));
  n.add("relations", verify_relations(r, q).all_relations() ? 1 : 0);
  n.add("dim R single", dim(operator_algebra(single)));
  n.add("dim R family", dim(operator_algebra(family)));
  n.add("dim I single", dim(invariants_of(single).space));
  n.add("dim I family", dim(invariants_of(family).space));
  return n;
}

Numbers spinor_numbers(const QSpinorRep& r, Orientation o) {
  Numbers n;
  n.add("rank A", static_cast<int>(rank(r.a)));
  n.add("rank B", static_cast<int>(rank(r.b)));
  n.add("dim B(A)", dim(commutant_B(r.a, r.q)));
  n.add("dim B'(A)", dim(commutant_Bprime(r.a, r.q)));
  const auto w = admissibility(r.a, r.b, r.q, o);
  n.add("dim C-space", dim(w.c_space));
  n.add("admissible", w.admissible ? 1 : 0);
  return n;
}

std::vector<std::string> compare(const Numbers& exact, const Numbers& at_q0, const std::string& q0) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < exact.values.size(); ++k) {
    const auto& [name, v] = exact.values[k];
    const int w = at_q0.values[k].second;
    if (v != w)
      out.push_back(name + ": " + std::to_string(v) + " generic, " + std::to_string(w) + " at q = " + q0);
  }
  return out;
}

std::vector<GL2Rep> specialize(const std::vector<GL2Rep>& reps, const GaussRational& q0) {
  std::vector<GL2Rep> out;
  for (const auto& r : reps) {
    Instance in;
    in.kind = EntryKind::GL2;
    in.gl2 = r;
    out.push_back(*substitute(in, q0).gl2);
  }
  return out;
}

void check_gl2(const CatalogEntry& ce, const VerifyOptions& opt, EntryRecord& rec) {
  const ParamValues params = ce.defaults();
  const GL2Rep rep = *ce.build(params).gl2;
  const auto single = gl2_instances(ce, Mode::Single);
  const auto family = gl2_instances(ce, Mode::Family);
  const Claims& cl = ce.claims;

  const RelationReport rel = verify_relations(rep);
  rec.relations_ok = rel.all_relations();
  for (std::size_t k = 0; k < rel.relations.size(); ++k)
    if (!rel.relations[k]) rec.failed_relations.emplace_back(kRelationNames[k]);
  if (!*rec.relations_ok) rec.discrepancies.push_back("relations fail");
  for (const auto& r : family)
    if (!verify_relations(r).all_relations()) {
      rec.discrepancies.push_back("relations fail on a family instance");
      break;
    }
  rec.detq = rel.detq;
  if (!rel.detq_invertible) rec.discrepancies.push_back("det_q singular");
  if (ce.claimed_detq) {
    rec.detq_matches_claim = rel.detq == ce.claimed_detq(params);
    if (!*rec.detq_matches_claim)
      rec.discrepancies.push_back("det_q = " + rel.detq.str() + ", claimed " +
                                  ce.claimed_detq(params).str());
  }
  rec.perturbation_nonzero = rel.perturbation_nonzero;
  if (cl.perturbation_nonzero && *cl.perturbation_nonzero != rel.perturbation_nonzero)
    rec.discrepancies.push_back(std::string("perturbation is ") +
                                (rel.perturbation_nonzero ? "nonzero" : "zero") + ", claimed otherwise");

  const MatSpace r_single = operator_algebra(single);
  const MatSpace r_family = operator_algebra(family);
  const Invariants i_single = invariants_of(single);
  const Invariants i_family = invariants_of(family);
  rec.dim_R_single = dim(r_single);
  rec.dim_R_family = dim(r_family);
  rec.dim_I_single = dim(i_single.space);
  rec.dim_I = dim(i_family.space);
  rec.dim_R_claim = cl.dim_R;
  rec.dim_I_claim = cl.dim_I;
  if (rec.dim_R_single != rec.dim_R_family)
    rec.mode_divergences.push_back("dim R: single " + num(rec.dim_R_single) + ", family " +
                                   num(rec.dim_R_family));
  if (rec.dim_I_single != rec.dim_I)
    rec.mode_divergences.push_back("dim I: single " + num(rec.dim_I_single) + ", family " +
                                   num(rec.dim_I));

  const bool family_mode = opt.mode == Mode::Family;
  const int r_cmp = family_mode ? *rec.dim_R_family : *rec.dim_R_single;
  const int i_cmp = family_mode ? *rec.dim_I : *rec.dim_I_single;
  const std::string tag = " (" + to_string(opt.mode) + " mode)";
  if (cl.dim_R && *cl.dim_R != r_cmp)
    rec.discrepancies.push_back("dim R = " + std::to_string(r_cmp) + tag + ", claimed " +
                                std::to_string(*cl.dim_R));
  if (cl.dim_I && *cl.dim_I != i_cmp)
    rec.discrepancies.push_back("dim I = " + std::to_string(i_cmp) + tag + ", claimed " +
                                std::to_string(*cl.dim_I));
  const MatSpace& r_used = family_mode ? r_family : r_single;
  const MatSpace& i_used = family_mode ? i_family.space : i_single.space;
  if (!cl.operator_algebra_shape.empty()) {
    rec.operator_algebra_shape_ok = same_space(r_used, pattern_space(cl.operator_algebra_shape));
    if (!*rec.operator_algebra_shape_ok)
      rec.discrepancies.push_back("operator algebra differs from the claimed pattern" + tag);
  }
  if (!cl.invariants_shape.empty()) {
    rec.invariants_shape_ok = same_space(i_used, pattern_space(cl.invariants_shape));
    if (!*rec.invariants_shape_ok)
      rec.discrepancies.push_back("invariants differ from the claimed pattern" + tag);
  }

  const Corollary1Report c1 = corollary1_check(rep);
  rec.corollary1_ok = c1.passed();
  rec.corollary1_failures = c1.failures;
  for (const auto& f : c1.failures) rec.discrepancies.push_back("corollary 1: " + f);
  rec.permutation_triangular = permutation_triangular(rep);
  if (*rec.permutation_triangular) {
    rec.diagonal_coincidence = diagonal_coincidence(rep);
    if (!*rec.diagonal_coincidence)
      rec.discrepancies.push_back("triangular, but diagonals of C12C21 / det_q do not coincide");
  }
  rec.c12_image_invariant = c12_image_invariant(rep);

  const KMutatorReport km = kmutator_check(rep.c11, rep.c22, 6);
  rec.kmutator_premise = km.premise_holds;
  rec.kmutator_epsilon_invertible = km.epsilon_invertible;
  rec.kmutator_verdict = km.verdict();
  if (km.premise_holds && !km.all_hold()) rec.discrepancies.push_back("kmutator identity fails");
  if (km.epsilon_invertible) rec.discrepancies.push_back("kmutator: epsilon invertible");

  const Numbers exact = gl2_numbers(single, family, Scalar::q());
  const Numbers at_q0 =
      gl2_numbers(specialize(single, opt.q0), specialize(family, opt.q0), Scalar(opt.q0));
  rec.cross_check_mismatches = compare(exact, at_q0, opt.q0.str());
}

void check_spinor(const CatalogEntry& ce, const VerifyOptions& opt, EntryRecord& rec) {
  const Instance inst = ce.build(ce.defaults());
  const QSpinorRep& r = *inst.spinor;
  rec.spinor_ok = qgl::check_spinor(r);
  if (!*rec.spinor_ok) {
    rec.discrepancies.push_back("AB != qBA");
    return;
  }
  rec.dim_B = dim(commutant_B(r.a));
  rec.dim_Bprime = dim(commutant_Bprime(r.a));
  rec.admissible = admissibility(r.a, r.b, r.q, opt.orientation).admissible;
  rec.admissible_flipped = admissibility(r.a, r.b, r.q, Orientation::Flipped).admissible;
  rec.admissible_claim = ce.claims.admissible;
  if (rec.admissible_claim && *rec.admissible_claim != *rec.admissible)
    rec.discrepancies.push_back(std::string(*rec.admissible ? "admissible" : "not admissible") +
                                ", claimed otherwise");
  if (is_invertible(r.a) && !is_nilpotent(r.b))
    rec.discrepancies.push_back("A invertible but B not nilpotent");

  const Instance special = substitute(inst, opt.q0);
  rec.cross_check_mismatches = compare(spinor_numbers(r, opt.orientation),
                                       spinor_numbers(*special.spinor, opt.orientation), opt.q0.str());
}

// Union-find over catalog indices.
struct Classes {
  std::vector<std::size_t> parent;
  explicit Classes(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool is_claimed_inequivalent(const std::string& a, const std::string& b) {
  for (const auto& [x, y] : claimed_inequivalent())
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

void classify(Report& report, const std::vector<const CatalogEntry*>& entries) {
  const std::size_t n = entries.size();
  Classes classes(n);
  std::vector<std::optional<Instance>> insts(n);
  for (std::size_t k = 0; k < n; ++k)
    if (entries[k]->build)
      insts[k] = entries[k]->build(entries[k]->defaults());

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!insts[a] || !insts[b] || insts[a]->kind != insts[b]->kind) continue;
      EquivalenceRecord er;
      er.a = entries[a]->name;
      er.b = entries[b]->name;
      if (is_claimed_inequivalent(er.a, er.b)) er.claim = "inequivalent";
      if (insts[a]->gl2) {
        if (const auto w = gl2_equivalent(*insts[a]->gl2, *insts[b]->gl2)) {
          er.equivalent = true;
          er.u = w->u;
          er.alphas = {w->alpha1, w->alpha2};
        }
      } else if (check_spinor(*insts[a]->spinor) && check_spinor(*insts[b]->spinor)) {
        if (const auto w = spinor_equivalent(*insts[a]->spinor, *insts[b]->spinor)) {
          er.equivalent = true;
          er.u = w->u;
          er.alphas = {w->alpha};
        }
      }
      if (er.equivalent) classes.join(a, b);
      if (er.equivalent && !er.claim.empty()) {
        report.entries[a].discrepancies.push_back("equivalent to " + er.b + ", claimed inequivalent");
        report.entries[b].discrepancies.push_back("equivalent to " + er.a + ", claimed inequivalent");
      }
      if (er.equivalent || !er.claim.empty()) report.equivalences.push_back(std::move(er));
    }
  }

  std::vector<int> id_of_root(n, 0);
  int next = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (!insts[k]) continue;
    const std::size_t root = classes.find(k);
    if (id_of_root[root] == 0) id_of_root[root] = next++;
    report.entries[k].equivalence_class_id = id_of_root[root];
  }
}

json opt_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }
json opt_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

const std::vector<std::pair<std::string, std::string>>& claimed_inequivalent() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"sec5-case1", "sec5-case2"},
  };
  return pairs;
}

int Report::discrepancy_count() const {
  int n = 0;
  for (const auto& e : entries) n += static_cast<int>(e.discrepancies.size());
  return n;
}

int Report::unchecked_count() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const EntryRecord& e) { return e.status == kUnchecked; }));
}

Report verify_catalog(const VerifyOptions& options) {
  Report report;
  report.options = options;
  std::vector<const CatalogEntry*> selected;
  if (options.entry) {
    selected.push_back(&find_entry(*options.entry));
  } else {
    for (const auto& ce : catalog()) selected.push_back(&ce);
  }

  for (const CatalogEntry* ce : selected) {
    EntryRecord rec;
    rec.name = ce->name;
    rec.kind = ce->kind;
    rec.source = ce->source;
    rec.note = ce->note;
    rec.status = ce->claims.unchecked ? kUnchecked : "checked";
    switch (ce->kind) {
      case EntryKind::GL2:
        check_gl2(*ce, options, rec);
        break;
      case EntryKind::QSpinor:
        check_spinor(*ce, options, rec);
        break;
      case EntryKind::MetadataOnly:
        rec.dim_R_claim = ce->claims.dim_R;
        rec.dim_I_claim = ce->claims.dim_I;
        if (ce->claimed_detq) rec.detq = ce->claimed_detq(ce->defaults());
        break;
    }
    if (ce->kind != EntryKind::MetadataOnly) {
      rec.cross_check_ok = rec.cross_check_mismatches.empty();
      for (const auto& m : rec.cross_check_mismatches) rec.discrepancies.push_back("cross-check: " + m);
    }
    report.entries.push_back(std::move(rec));
  }
  classify(report, selected);
  return report;
}

json report_to_json(const Report& r) {
  json out;
  out["q0"] = r.options.q0.str();
  out["mode"] = to_string(r.options.mode);
  out["orientation"] = r.options.orientation == Orientation::Default ? "default" : "flipped";
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j;
    j["name"] = e.name;
    j["kind"] = to_string(e.kind);
    j["source"] = e.source;
    if (!e.note.empty()) j["note"] = e.note;
    j["status"] = e.status;
    if (e.kind == EntryKind::GL2) {
      j["relations_ok"] = opt_json(e.relations_ok);
      j["failed_relations"] = e.failed_relations;
      j["detq"] = e.detq ? to_json(*e.detq) : json(nullptr);
      j["detq_matches_claim"] = opt_json(e.detq_matches_claim);
      j["perturbation_nonzero"] = opt_json(e.perturbation_nonzero);
    }
    if (e.kind != EntryKind::QSpinor) {
      if (e.kind == EntryKind::MetadataOnly) j["detq_claim"] = e.detq ? to_json(*e.detq) : json(nullptr);
      j["dim_R_single"] = opt_json(e.dim_R_single);
      j["dim_R_family"] = opt_json(e.dim_R_family);
      j["dim_R_claim"] = opt_json(e.dim_R_claim);
      j["dim_I_single"] = opt_json(e.dim_I_single);
      j["dim_I"] = opt_json(e.dim_I);
      j["dim_I_claim"] = opt_json(e.dim_I_claim);
    }
    if (e.kind == EntryKind::GL2) {
      j["operator_algebra_shape_ok"] = opt_json(e.operator_algebra_shape_ok);
      j["invariants_shape_ok"] = opt_json(e.invariants_shape_ok);
      j["corollary1_ok"] = opt_json(e.corollary1_ok);
      j["permutation_triangular"] = opt_json(e.permutation_triangular);
      j["diagonal_coincidence"] = opt_json(e.diagonal_coincidence);
      j["c12_image_invariant"] = opt_json(e.c12_image_invariant);
      json km;
      km["premise_holds"] = opt_json(e.kmutator_premise);
      km["epsilon_invertible"] = opt_json(e.kmutator_epsilon_invertible);
      km["verdict"] = e.kmutator_verdict;
      j["kmutator"] = std::move(km);
    }
    if (e.kind == EntryKind::QSpinor) {
      j["spinor_ok"] = opt_json(e.spinor_ok);
      j["dim_B"] = opt_json(e.dim_B);
      j["dim_Bprime"] = opt_json(e.dim_Bprime);
      j["admissible"] = opt_json(e.admissible);
      j["admissible_flipped"] = opt_json(e.admissible_flipped);
      j["admissible_claim"] = opt_json(e.admissible_claim);
    }
    j["equivalence_class_id"] = opt_json(e.equivalence_class_id);
    j["cross_check_ok"] = opt_json(e.cross_check_ok);
    j["mode_divergences"] = e.mode_divergences;
    j["discrepancies"] = e.discrepancies;
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);

  json eq = json::array();
  for (const auto& e : r.equivalences) {
    json j;
    j["a"] = e.a;
    j["b"] = e.b;
    j["equivalent"] = e.equivalent;
    if (!e.claim.empty()) j["claim"] = e.claim;
    if (e.u) {
      j["u"] = to_json(*e.u);
      json alphas = json::array();
      for (const auto& a : e.alphas) alphas.push_back(a.str());
      j["alpha"] = std::move(alphas);
    }
    eq.push_back(std::move(j));
  }
  out["equivalences"] = std::move(eq);

  json summary;
  summary["entries"] = r.entries.size();
  summary["discrepancies"] = r.discrepancy_count();
  summary["unchecked"] = r.unchecked_count();
  summary["exit_code"] = r.exit_code();
  out["summary"] = std::move(summary);
  return out;
}

std::string report_to_table(const Report& r) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "entry" << std::setw(9) << "kind" << std::setw(5) << "rel"
     << std::setw(6) << "detq" << std::setw(6) << "pert" << std::setw(12) << "R s/f/claim"
     << std::setw(12) << "I s/f/claim" << std::setw(6) << "adm" << std::setw(6) << "class"
     << "status\n";
  for (const auto& e : r.entries) {
    const bool gl = e.kind != EntryKind::QSpinor;
    os << std::setw(28) << e.name << std::setw(9) << to_string(e.kind) << std::setw(5)
       << yes_no(e.relations_ok) << std::setw(6) << yes_no(e.detq_matches_claim) << std::setw(6)
       << yes_no(e.perturbation_nonzero) << std::setw(12)
       << (gl ? num(e.dim_R_single) + "/" + num(e.dim_R_family) + "/" + num(e.dim_R_claim) : "-")
       << std::setw(12)
       << (gl ? num(e.dim_I_single) + "/" + num(e.dim_I) + "/" + num(e.dim_I_claim) : "-")
       << std::setw(6) << yes_no(e.admissible) << std::setw(6) << num(e.equivalence_class_id)
       << (e.status == "checked" ? (e.discrepancies.empty() ? "ok" : "DISCREPANCY") : e.status)
       << "\n";
    for (const auto& d : e.mode_divergences) os << "    mode divergence: " << d << "\n";
    for (const auto& d : e.discrepancies) os << "    discrepancy: " << d << "\n";
  }
  os << "\n" << r.entries.size() << " entries, " << r.discrepancy_count() << " discrepancies, "
     << r.unchecked_count() << " unchecked\n";
  return os.str();
}

}  // namespace qgl::cli

#include "commands.hpp"

#include <algorithm>
#include <ostream>


namespace qgl::cli {
namespace {

void emit(const Flags& f, const json& j, std::ostream& out) {
  if (f.format == "json") {
    out << dump_pretty(j) << "\n";
    return;
  }
  // Compact text for everything except verify, which has its own table.
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && value.contains("entries")) {
      out << key << ":\n" << mat_from_json(value, key).str() << "\n";
    } else {
      out << key << ": " << value.dump() << "\n";
    }
  }
}

Instance entry_instance(const Flags& f) {
  return instantiate(find_entry(*f.entry), f.params);
}

void require_inputs(const Flags& f, const std::vector<std::string>& files, std::size_t min_files) {
  if (f.entry && !files.empty()) throw Error("give either --entry or input files, not both");
  if (!f.entry && files.size() < min_files)
    throw Error("expected " + std::to_string(min_files) + " input file(s) or --entry");
}

// Matrices taken from a file holding a bare matrix or a representation.
std::vector<Mat> generators_from_file(const std::string& path) {
  const json j = read_json_file(path);
  if (j.contains("n")) return {mat_from_json(j, path)};
  const Instance inst = read_instance_file(path);
  if (inst.gl2) {
    const GL2Rep& r = *inst.gl2;
    return operator_algebra_generators(std::span<const GL2Rep>(&r, 1));
  }
  return {inst.spinor->a, inst.spinor->b};
}

std::vector<Mat> generators(const Flags& f, const std::vector<std::string>& files) {
  require_inputs(f, files, 1);
  std::vector<Mat> gens;
  if (f.entry) {
    const CatalogEntry& ce = find_entry(*f.entry);
    if (ce.kind == EntryKind::GL2) {
      std::vector<GL2Rep> reps;
      if (f.mode == Mode::Single)
        reps.push_back(*instantiate(ce, f.params).gl2);
      else
        reps = gl2_instances(ce, Mode::Family);
      return operator_algebra_generators(reps);
    }
    const Instance inst = instantiate(ce, f.params);
    return {inst.spinor->a, inst.spinor->b};
  }
  for (const auto& path : files) {
    auto g = generators_from_file(path);
    gens.insert(gens.end(), g.begin(), g.end());
  }
  for (const auto& g : gens) require_same_size(gens.front(), g);
  return gens;
}

const Mat& named_matrix(const Instance& inst, const std::string& name) {
  if (inst.spinor) {
    if (name == "a" || name == "A") return inst.spinor->a;
    if (name == "b" || name == "B") return inst.spinor->b;
  }
  if (inst.gl2) {
    if (name == "c11") return inst.gl2->c11;
    if (name == "c12") return inst.gl2->c12;
    if (name == "c21") return inst.gl2->c21;
    if (name == "c22") return inst.gl2->c22;
  }
  for (const auto& x : inst.extras)
    if (x.name == name) return x.mat;
  throw Error("no matrix named " + name);
}

json claims_json(const Claims& c) {
  json j;
  if (c.admissible) j["admissible"] = *c.admissible;
  if (c.perturbation_nonzero) j["perturbation_nonzero"] = *c.perturbation_nonzero;
  if (c.dim_R) j["dim_R"] = *c.dim_R;
  if (c.dim_I) j["dim_I"] = *c.dim_I;
  if (!c.operator_algebra_shape.empty()) j["operator_algebra_shape"] = c.operator_algebra_shape;
  if (!c.invariants_shape.empty()) j["invariants_shape"] = c.invariants_shape;
  j["unchecked"] = c.unchecked;
  return j;
}

json entry_json(const CatalogEntry& ce) {
  json j;
  j["name"] = ce.name;
  j["kind"] = to_string(ce.kind);
  j["source"] = ce.source;
  if (!ce.note.empty()) j["note"] = ce.note;
  json params = json::array();
  for (const auto& p : ce.params) {
    json pj;
    pj["name"] = p.name;
    pj["default"] = p.default_value.str();
    pj["nonzero"] = p.nonzero;
    params.push_back(std::move(pj));
  }
  j["params"] = std::move(params);
  j["claims"] = claims_json(ce.claims);
  if (ce.claimed_detq) j["detq_claim"] = to_json(ce.claimed_detq(ce.defaults()));
  j["matrices"] = ce.build ? instance_to_json(ce.build(ce.defaults())) : json(nullptr);
  return j;
}

}  // namespace

Orientation parse_orientation(std::string_view s) {
  if (s == "default") return Orientation::Default;
  if (s == "flipped") return Orientation::Flipped;
  throw Error("unknown orientation: " + std::string(s));
}

int cmd_verify(const Flags& f, std::ostream& out) {
  VerifyOptions opt;
  opt.entry = f.entry;
  opt.mode = f.mode;
  opt.orientation = f.orientation;
  opt.q0 = f.q0;
  const Report r = verify_catalog(opt);
  if (f.format == "table")
    out << report_to_table(r);
  else
    out << dump_pretty(report_to_json(r)) << "\n";
  return r.exit_code();
}

int cmd_commutant(const Flags& f, const std::vector<std::string>& files, bool prime,
                  std::ostream& out) {
  require_inputs(f, files, 1);
  const Mat a = f.entry ? entry_instance(f).spinor.value().a : read_matrix_file(files.front());
  const MatSpace s = prime ? commutant_Bprime(a) : commutant_B(a);
  json j;
  j["space"] = prime ? "B'(A)" : "B(A)";
  j["dim"] = s.dim();
  j["basis"] = to_json(s)["basis"];
  emit(f, j, out);
  return 0;
}

int cmd_admissible(const Flags& f, const std::vector<std::string>& files,
                   const std::optional<std::string>& b_name, std::ostream& out) {
  require_inputs(f, files, 2);
  Mat a;
  Mat b;
  if (f.entry) {
    const Instance inst = entry_instance(f);
    if (!inst.spinor) throw Error(*f.entry + " is not a q-spinor entry");
    a = inst.spinor->a;
    b = b_name ? named_matrix(inst, *b_name) : inst.spinor->b;
  } else {
    a = read_matrix_file(files[0]);
    b = read_matrix_file(files[1]);
  }
  const auto w = admissibility(a, b, Scalar::q(), f.orientation);
  json j;
  j["orientation"] = f.orientation == Orientation::Default ? "default" : "flipped";
  j["admissible"] = w.admissible;
  j["c_space_dim"] = w.c_space.dim();
  j["c_space"] = to_json(w.c_space)["basis"];
  j["witness_c"] = w.witness_c ? to_json(*w.witness_c) : json(nullptr);
  emit(f, j, out);
  return 0;
}

int cmd_centralizer(const Flags& f, const std::vector<std::string>& files, std::ostream& out) {
  const auto gens = generators(f, files);
  const MatSpace s = centralizer(gens, gens.front().size());
  json j = to_json(s);
  if (s.ambient() == 4) {
    json coords = json::array();
    for (const auto& b : s.basis()) {
      json row = json::array();
      for (const auto& c : clifford().coords(b)) row.push_back(c.str());
      coords.push_back(std::move(row));
    }
    j["clifford_coords"] = std::move(coords);
  }
  emit(f, j, out);
  return 0;
}

int cmd_closure(const Flags& f, const std::vector<std::string>& files, std::ostream& out) {
  const auto gens = generators(f, files);
  emit(f, to_json(subalgebra_closure(gens)), out);
  return 0;
}

int cmd_equiv(const Flags& f, const std::vector<std::string>& files,
              const std::optional<std::string>& with, std::ostream& out) {
  Instance x;
  Instance y;
  if (f.entry) {
    if (!with || !files.empty()) throw Error("equiv --entry NAME needs --with OTHER");
    x = entry_instance(f);
    y = instantiate(find_entry(*with));
  } else {
    if (files.size() != 2) throw Error("equiv expects two representation files");
    x = read_instance_file(files[0]);
    y = read_instance_file(files[1]);
  }
  if (x.kind != y.kind) throw Error("cannot compare a q-spinor with a GL2 representation");
  json j;
  if (x.gl2) {
    const auto w = gl2_equivalent(*x.gl2, *y.gl2);
    j["equivalent"] = w.has_value();
    if (w) {
      j["u"] = to_json(w->u);
      j["alpha"] = json::array({w->alpha1.str(), w->alpha2.str()});
      j["verified"] = verify_gl2_equivalence(*x.gl2, *y.gl2, *w);
    }
  } else {
    const auto w = spinor_equivalent(*x.spinor, *y.spinor);
    j["equivalent"] = w.has_value();
    if (w) {
      j["u"] = to_json(w->u);
      j["alpha"] = json::array({w->alpha.str()});
      j["verified"] = verify_spinor_equivalence(*x.spinor, *y.spinor, *w);
    }
  }
  if (!j["equivalent"].get<bool>()) j["search"] = "no witness with alpha = q^k, |k| <= 4";
  emit(f, j, out);
  return 0;
}

int cmd_catalog(const Flags& f, const std::optional<std::string>& matrix, std::ostream& out) {
  if (matrix) {
    if (!f.entry) throw Error("--matrix needs --entry");
    out << dump_pretty(to_json(named_matrix(entry_instance(f), *matrix))) << "\n";
    return 0;
  }
  json entries = json::array();
  if (f.entry) {
    entries.push_back(entry_json(find_entry(*f.entry)));
  } else {
    for (const auto& ce : catalog()) entries.push_back(entry_json(ce));
  }
  json j;
  j["entries"] = std::move(entries);
  out << dump_pretty(j) << "\n";
  return 0;
}

json act_table(const InnerAction& action, const std::vector<std::string>& names) {
  const CliffordBasis& cl = clifford();
  json rows = json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t jj = 0; jj < 2; ++jj) {
      for (const auto& name : names) {
        const auto it = std::find(cl.labels().begin(), cl.labels().end(), name);
        if (it == cl.labels().end()) throw Error("unknown basis element " + name);
        const Mat& v = cl.basis16()[static_cast<std::size_t>(it - cl.labels().begin())];
        json coords = json::array();
        for (const auto& c : cl.coords(action.act(i, jj, v))) coords.push_back(c.str());
        json row;
        row["i"] = i + 1;
        row["j"] = jj + 1;
        row["generator"] = name;
        row["coords"] = std::move(coords);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

int cmd_act(const Flags& f, const std::vector<std::string>& files, bool all_basis, std::ostream& out) {
  require_inputs(f, files, 1);
  const Instance inst = f.entry ? entry_instance(f) : read_instance_file(files.front());
  if (!inst.gl2) throw Error("act needs a GL2 representation");
  if (inst.gl2->size() != 4) throw Error("dimension mismatch");
  const InnerAction action(*inst.gl2);
  std::vector<std::string> names = {"g0", "g1", "g2", "g3"};
  if (all_basis) names = clifford().labels();
  const json rows = act_table(action, names);
  if (f.format != "table") {
    out << dump_pretty(rows) << "\n";
    return 0;
  }
  // c_ij . g = sum of nonzero coordinates times basis labels
  const auto& labels = clifford().labels();
  for (const auto& row : rows) {
    out << "c" << row["i"].get<int>() << row["j"].get<int>() << " . "
        << row["generator"].get<std::string>() << " =";
    bool any = false;
    for (std::size_t s = 0; s < labels.size(); ++s) {
      const auto c = row["coords"][s].get<std::string>();
      if (c == "0") continue;
      out << (any ? " + " : " ") << "(" << c << ")" << labels[s];
      any = true;
    }
    out << (any ? "\n" : " 0\n");
  }
  return 0;
}

}  // namespace qgl::cli

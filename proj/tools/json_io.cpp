#include "json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace qgl::cli {

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  json out;
  out["n"] = m.size();
  out["entries"] = std::move(rows);
  return out;
}

json to_json(const MatSpace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(to_json(b));
  json out;
  out["dim"] = s.dim();
  out["basis"] = std::move(basis);
  return out;
}

Mat mat_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw Error(where + ": expected an object with \"n\" and \"entries\"");
  if (!j.contains("n") || !j["n"].is_number_unsigned())
    throw Error(where + ": \"n\" must be a non-negative integer");
  const auto n = j["n"].get<std::size_t>();
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != n)
    throw Error(where + ": \"entries\" must be an array of " + std::to_string(n) + " rows");
  Mat m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = j["entries"][r];
    const std::string rw = where + ": entries[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != n)
      throw Error(rw + ": expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const std::string cw = rw + "[" + std::to_string(c) + "]";
      const json& cell = row[c];
      if (cell.is_number_integer()) {
        m(r, c) = Scalar(cell.get<long>());
      } else if (cell.is_string()) {
        try {
          m(r, c) = Scalar::parse(cell.get<std::string>());
        } catch (const Error& e) {
          throw Error(cw + ": " + e.what());
        }
      } else {
        throw Error(cw + ": expected a scalar string");
      }
    }
  }
  return m;
}

json read_json_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(path + ": cannot open");
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

Mat read_matrix_file(const std::string& path) { return mat_from_json(read_json_file(path), path); }

Instance read_instance_file(const std::string& path) {
  const json j = read_json_file(path);
  Instance inst;
  if (j.contains("c11")) {
    inst.kind = EntryKind::GL2;
    GL2Rep r;
    r.c11 = mat_from_json(j.value("c11", json()), path + ": c11");
    r.c12 = mat_from_json(j.value("c12", json()), path + ": c12");
    r.c21 = mat_from_json(j.value("c21", json()), path + ": c21");
    r.c22 = mat_from_json(j.value("c22", json()), path + ": c22");
    inst.gl2 = std::move(r);
  } else if (j.contains("a")) {
    inst.kind = EntryKind::QSpinor;
    inst.spinor = QSpinorRep{mat_from_json(j["a"], path + ": a"),
                             mat_from_json(j.value("b", json()), path + ": b"), Scalar::q()};
  } else {
    throw Error(path + ": expected keys a, b or c11, c12, c21, c22");
  }
  return inst;
}

GaussRational parse_constant(std::string_view text) {
  const Scalar s = Scalar::parse(text);
  if (!s.is_constant()) throw Error("expected a constant, got \"" + std::string(text) + "\"");
  return s.num().coeff(0);
}

json instance_to_json(const Instance& inst) {
  json out;
  if (inst.spinor) {
    out["a"] = to_json(inst.spinor->a);
    out["b"] = to_json(inst.spinor->b);
  }
  if (inst.gl2) {
    out["c11"] = to_json(inst.gl2->c11);
    out["c12"] = to_json(inst.gl2->c12);
    out["c21"] = to_json(inst.gl2->c21);
    out["c22"] = to_json(inst.gl2->c22);
  }
  for (const auto& x : inst.extras) out[x.name] = to_json(x.mat);
  return out;
}

namespace {

bool is_flat(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void pretty(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (!j.is_structured() || is_flat(j) || j.empty()) {
    out += j.dump();
    return;
  }
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += json(it.key()).dump() + ": ";
    pretty(it.value(), indent + 2, out);
  }
  out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string dump_pretty(const json& j) {
  std::string out;
  pretty(j, 0, out);
  return out;
}

}  // namespace qgl::cli

#pragma once

// Transcriptions of every explicit representation: the three admissible
// q-spinor normal forms, the rejected branches of their classification, and
// the quantum GL2 representations with their claimed invariants.

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgl/gl2.hpp"
#include "qgl/qspinor.hpp"

namespace qgl {

enum class EntryKind { QSpinor, GL2, MetadataOnly };
enum class Mode { Single, Family };

std::string to_string(EntryKind k);
std::string to_string(Mode m);
Mode parse_mode(std::string_view s);

struct ParamSpec {
  std::string name;
  GaussRational default_value;
  bool nonzero = true;
};

using ParamValues = std::vector<GaussRational>;

struct NamedMat {
  std::string name;
  Mat mat;
};

struct Instance {
  EntryKind kind = EntryKind::QSpinor;
  std::optional<QSpinorRep> spinor;
  std::optional<GL2Rep> gl2;
  /// Auxiliary matrices printed alongside (B', B1, B2, ...).
  std::vector<NamedMat> extras;
};

struct Claims {
  std::optional<bool> admissible;
  std::optional<bool> perturbation_nonzero;
  std::optional<int> dim_R;
  std::optional<int> dim_I;
  /// Row patterns: '*' free entry, '0' zero, a letter ties equal letters.
  std::vector<std::string> operator_algebra_shape;
  std::vector<std::string> invariants_shape;
  /// Claims rest on an external classification and cannot be reproduced.
  bool unchecked = false;
};

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::QSpinor;
  std::string source;
  std::string note;
  std::vector<ParamSpec> params;
  Claims claims;
  /// Builds the matrices from values listed in params order. Empty for
  /// metadata-only entries.
  std::function<Instance(const ParamValues&)> build;
  /// Claimed quantum determinant, if stated.
  std::function<Mat(const ParamValues&)> claimed_detq;

  ParamValues defaults() const;
};

const std::vector<CatalogEntry>& catalog();
/// Throws Error("unknown entry: NAME").
const CatalogEntry& find_entry(std::string_view name);

/// Defaults with overrides applied. Throws on unknown parameter names and on
/// zero values for nonzero-constrained parameters.
ParamValues resolve_params(const CatalogEntry& e, const std::map<std::string, GaussRational>& overrides);
Instance instantiate(const CatalogEntry& e, const std::map<std::string, GaussRational>& overrides = {});
Instance instantiate(std::string_view name, const std::map<std::string, GaussRational>& overrides = {});

/// Parameter vectors used for family mode: e_k per parameter, falling back to
/// cyclic shifts of (1, 2, ..., P) when e_k violates a nonzero constraint.
std::vector<ParamValues> family_params(const CatalogEntry& e);
/// GL2 instances for closure in the given mode.
std::vector<GL2Rep> gl2_instances(const CatalogEntry& e, Mode mode);

/// Subspace described by a row pattern (see Claims).
MatSpace pattern_space(std::span<const std::string> rows);

/// Substitutes q -> q0 in every matrix of an instance.
Instance substitute(const Instance& inst, const GaussRational& q0);

}  // namespace qgl

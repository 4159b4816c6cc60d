#pragma once

// Full verification pass over the catalog.

#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace qgl::cli {

struct VerifyOptions {
  std::optional<std::string> entry;
  /// Mode whose closure dimensions are compared against the claims.
  Mode mode = Mode::Family;
  Orientation orientation = Orientation::Default;
  GaussRational q0 = 2;
};

struct EntryRecord {
  std::string name;
  EntryKind kind = EntryKind::QSpinor;
  std::string source;
  std::string note;
  std::string status;  // "checked" or "unchecked (external reference)"

  // gl2
  std::optional<bool> relations_ok;
  std::vector<std::string> failed_relations;
  std::optional<Mat> detq;
  std::optional<bool> detq_matches_claim;
  std::optional<bool> perturbation_nonzero;
  std::optional<int> dim_R_single;
  std::optional<int> dim_R_family;
  std::optional<int> dim_R_claim;
  std::optional<int> dim_I_single;
  std::optional<int> dim_I;  // family mode
  std::optional<int> dim_I_claim;
  std::optional<bool> operator_algebra_shape_ok;
  std::optional<bool> invariants_shape_ok;
  std::optional<bool> corollary1_ok;
  std::vector<std::string> corollary1_failures;
  std::optional<bool> permutation_triangular;
  std::optional<bool> diagonal_coincidence;
  std::optional<bool> c12_image_invariant;
  std::optional<bool> kmutator_premise;
  std::optional<bool> kmutator_epsilon_invertible;
  std::string kmutator_verdict;

  // qspinor
  std::optional<bool> spinor_ok;
  std::optional<int> dim_B;
  std::optional<int> dim_Bprime;
  std::optional<bool> admissible;
  std::optional<bool> admissible_flipped;
  std::optional<bool> admissible_claim;

  std::optional<int> equivalence_class_id;
  std::optional<bool> cross_check_ok;
  std::vector<std::string> cross_check_mismatches;
  std::vector<std::string> mode_divergences;
  std::vector<std::string> discrepancies;
};

struct EquivalenceRecord {
  std::string a;
  std::string b;
  bool equivalent = false;
  std::optional<Mat> u;
  std::vector<Scalar> alphas;
  /// Claim attached to the pair, if any ("inequivalent").
  std::string claim;
};

struct Report {
  VerifyOptions options;
  std::vector<EntryRecord> entries;
  std::vector<EquivalenceRecord> equivalences;

  int discrepancy_count() const;
  int unchecked_count() const;
  /// 0 when every checked claim is reproduced, 1 otherwise.
  int exit_code() const { return discrepancy_count() == 0 ? 0 : 1; }
};

/// Pairs the catalog claims to be mutually inequivalent.
const std::vector<std::pair<std::string, std::string>>& claimed_inequivalent();

Report verify_catalog(const VerifyOptions& options);

json report_to_json(const Report& r);
std::string report_to_table(const Report& r);

}  // namespace qgl::cli

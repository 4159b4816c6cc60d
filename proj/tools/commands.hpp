#pragma once

// Subcommand implementations. Each returns the process exit code:
// 0 success, 1 discrepancies (verify only), 2 bad input or internal error.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgl/clifford.hpp"
#include "report.hpp"

namespace qgl::cli {

struct Flags {
  std::optional<std::string> entry;
  Mode mode = Mode::Family;
  std::string format = "json";
  GaussRational q0 = 2;
  Orientation orientation = Orientation::Default;
  std::map<std::string, GaussRational> params;
};

Orientation parse_orientation(std::string_view s);

int cmd_verify(const Flags& f, std::ostream& out);
int cmd_commutant(const Flags& f, const std::vector<std::string>& files, bool prime, std::ostream& out);
int cmd_admissible(const Flags& f, const std::vector<std::string>& files,
                   const std::optional<std::string>& b_name, std::ostream& out);
int cmd_centralizer(const Flags& f, const std::vector<std::string>& files, std::ostream& out);
int cmd_closure(const Flags& f, const std::vector<std::string>& files, std::ostream& out);
int cmd_equiv(const Flags& f, const std::vector<std::string>& files,
              const std::optional<std::string>& with, std::ostream& out);
int cmd_catalog(const Flags& f, const std::optional<std::string>& matrix, std::ostream& out);
int cmd_act(const Flags& f, const std::vector<std::string>& files, bool all_basis, std::ostream& out);

/// List of (i, j, generator, 16 Clifford coordinates) for c_ij acting on
/// each v in `names` (basis labels such as "g0").
json act_table(const InnerAction& action, const std::vector<std::string>& names);

}  // namespace qgl::cli

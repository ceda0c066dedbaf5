// Report bodies shared by the C API and the command line front end.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotcode/codes.hpp"
#include "knotcode/json_io.hpp"

namespace knotcode {

enum class ReportStatus { ok = 0, failed = 1, budget = 4 };

struct Report {
  json outputs = json::object();
  std::vector<std::string> warnings;
  ReportStatus status = ReportStatus::ok;

  json to_json() const;
};

Report invariants_report(const Diagram& d);
Report alexander_report(const Diagram& d);

struct MatrixOptions {
  MatrixKind kind = MatrixKind::fox;
  bool restrict_outer = false;
  std::optional<Integer> at;  // evaluate T at an integer
};
Report matrix_report(const Diagram& d, const MatrixOptions& o);

struct CodeOptions {
  MatrixKind kind = MatrixKind::fox;
  bool min_dist = false;
  bool weights = false;
  std::uint64_t budget = default_budget();
  std::size_t components = 1;
};
Report code_report(const LinearCode& c, const CodeOptions& o);
Report code_report(const Diagram& d, const FqField& f, FqElem t, const CodeOptions& o);

/// ring: "Z" or "F_p[T]" (also "Fp[T]").
Report snf_report(const json& matrix, const std::string& ring);

struct ColoringOptions {
  std::optional<Integer> mod;
  std::optional<std::pair<std::uint64_t, std::vector<std::int64_t>>> poly_mod;  // p, ascending f
  std::string t = "-1";  // integer, or coefficient list for poly_mod
};
Report colorings_report(const Diagram& d, const ColoringOptions& o);

/// base == nullopt means the unknot.
Report cable_report(const std::optional<Diagram>& base, const FqField& f, FqElem t,
                    const std::vector<std::pair<long, long>>& pairs);

Report sum_report(const Diagram& d1, ArcId a1, const Diagram& d2, ArcId a2, const FqField& f, FqElem t,
                  const CodeOptions& o);

/// Runs the invariant suite; status failed names the first failing check.
Report check_report(const Diagram& d);

}  // namespace knotcode

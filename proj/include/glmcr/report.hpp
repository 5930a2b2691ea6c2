#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace glmcr {

enum class Status { pass, fail, skipped };
const char* status_name(Status s);

struct Case {
  std::string suite;
  std::string case_id;
  std::string equation_ref;
  std::vector<std::pair<std::string, std::string>> params;  ///< in insertion order
  Status status = Status::pass;
  std::string detail;
  std::optional<double> elapsed_ms;  ///< only filled when timing is requested
};

struct Report {
  std::string suite;
  std::vector<Case> cases;

  bool any_failed() const;
  std::size_t count(Status s) const;
  /// Stable sort by case id; throws std::logic_error on duplicate ids.
  void finalize();
};

/// Flat JSON array, one object per case with the fields
/// suite, case_id, equation_ref, params, status, detail, elapsed_ms.
std::string to_json(const Report& r);
/// One line per case plus a summary line.
std::string to_text(const Report& r);

}  // namespace glmcr

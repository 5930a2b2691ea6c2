#pragma once

#include <cstddef>
#include <string>

#include "glmcr/errors.hpp"

namespace glmcr {

/// Verdict of an exact identity check.
struct CheckResult {
  bool ok = true;
  std::string detail;
  /// Number of summands on the brute-force side, when there is one.
  std::size_t terms = 0;

  void fail(const std::string& what) {
    if (ok) {
      ok = false;
      detail = what;
    } else {
      detail += "; " + what;
    }
  }

  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }

  void merge(const CheckResult& other) {
    terms += other.terms;
    if (!other.ok) {
      fail(other.detail);
    } else if (!other.detail.empty()) {
      note(other.detail);
    }
  }

  /// Throws CheckFailure carrying the detail when the check failed.
  const CheckResult& require() const {
    if (!ok) throw CheckFailure(detail);
    return *this;
  }
};

}  // namespace glmcr

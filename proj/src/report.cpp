#include "glmcr/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace glmcr {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

bool Report::any_failed() const { return count(Status::fail) > 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [s](const Case& c) { return c.status == s; }));
}

void Report::finalize() {
  std::stable_sort(cases.begin(), cases.end(), [](const Case& a, const Case& b) { return a.case_id < b.case_id; });
  for (std::size_t i = 1; i < cases.size(); ++i) {
    if (cases[i].case_id == cases[i - 1].case_id) throw std::logic_error("duplicate case id " + cases[i].case_id);
  }
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    nlohmann::ordered_json rec;
    rec["suite"] = c.suite;
    rec["case_id"] = c.case_id;
    rec["equation_ref"] = c.equation_ref;
    rec["params"] = std::move(params);
    rec["status"] = status_name(c.status);
    rec["detail"] = c.detail;
    rec["elapsed_ms"] = c.elapsed_ms ? nlohmann::ordered_json(*c.elapsed_ms) : nlohmann::ordered_json(nullptr);
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.cases) {
    os << status_name(c.status) << "  " << c.case_id << "  [" << c.equation_ref << "]";
    if (!c.detail.empty()) os << "  " << c.detail;
    if (c.elapsed_ms) os << "  (" << *c.elapsed_ms << " ms)";
    os << "\n";
  }
  os << "suite " << r.suite << ": " << r.count(Status::pass) << " passed, " << r.count(Status::fail) << " failed, "
     << r.count(Status::skipped) << " skipped\n";
  return os.str();
}

}  // namespace glmcr

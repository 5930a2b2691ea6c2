// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-verify>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "glmcr/report.hpp"
#include "glmcr/suites.hpp"

using namespace glmcr;

namespace {

struct Timed {
  Report report;
  double seconds = 0;
};

Timed run(const std::string& suite) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.timing = true;
  const auto t0 = std::chrono::steady_clock::now();
  Timed out{run_suite(cfg), 0};
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// case id without its trailing draw index
std::string config_of(const std::string& id) {
  const auto pos = id.rfind("/d");
  if (pos == std::string::npos) return id;
  return id.substr(0, pos);
}

struct Tally {
  std::size_t pass = 0;
  std::size_t other = 0;
  std::string first_detail;
};

std::map<std::string, Tally> tally(const Report& r) {
  std::map<std::string, Tally> out;
  for (const auto& c : r.cases) {
    Tally& t = out[config_of(c.case_id)];
    if (c.status == Status::pass) {
      ++t.pass;
    } else {
      ++t.other;
    }
    if (t.first_detail.empty()) t.first_detail = c.detail;
  }
  return out;
}

class Criterion {
 public:
  Criterion(int n, const Timed* t = nullptr) : n_(n), t_(t) {
    if (t_) table_ = tally(t_->report);
  }

  // every listed configuration present, fully passing, with enough draws
  void require(const std::string& config, std::size_t min_draws) {
    ++configs_;
    required_.push_back(config);
    const auto it = table_.find(config);
    if (it == table_.end()) {
      fail("missing " + config);
    } else if (it->second.other != 0) {
      fail(config + ": " + it->second.first_detail);
    } else if (it->second.pass < min_draws) {
      fail(config + ": " + std::to_string(it->second.pass) + " draws");
    }
  }

  void require_detail(const std::string& config, const std::string& needle) {
    const auto it = table_.find(config);
    if (it == table_.end() || it->second.first_detail.find(needle) == std::string::npos)
      fail(config + ": detail lacks '" + needle + "'");
  }

  // notes how many required configurations only compared zero with zero
  void note_trivial(const std::string& needle) {
    std::size_t n = 0;
    for (const auto& k : required_) {
      const auto it = table_.find(k);
      if (it != table_.end() && it->second.first_detail.find(needle) != std::string::npos) ++n;
    }
    if (n) notes_.push_back(std::to_string(n) + " of " + std::to_string(required_.size()) + " compare zero with zero");
  }

  void limit(double seconds) {
    if (t_ && t_->seconds > seconds) {
      std::ostringstream os;
      os << "runtime " << t_->seconds << " s over " << seconds << " s";
      fail(os.str());
    }
  }

  void fail(const std::string& why) {
    if (reasons_.size() < 3) reasons_.push_back(why);
    ok_ = false;
  }

  bool print(const std::string& what) const {
    std::cout << "criterion " << n_ << ": " << (ok_ ? "PASS" : "FAIL") << " " << what;
    if (configs_) std::cout << " [" << configs_ << " configurations";
    if (t_) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", t_->seconds);
      std::cout << (configs_ ? ", " : " [") << buf << " s";
    }
    if (configs_ || t_) std::cout << "]";
    for (const auto& r : reasons_) std::cout << " | " << r;
    for (const auto& r : notes_) std::cout << " (" << r << ")";
    std::cout << "\n";
    return ok_;
  }

 private:
  int n_;
  const Timed* t_;
  std::map<std::string, Tally> table_;
  std::size_t configs_ = 0;
  std::vector<std::string> required_;
  bool ok_ = true;
  std::vector<std::string> reasons_;
  std::vector<std::string> notes_;
};

std::string L(int l) { return "/L" + std::to_string(l); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <verify>\n";
    return 2;
  }
  const std::string verify = argv[1];
  bool all_ok = true;

  {
    const Timed t = run("rtt");
    Criterion c(1, &t);
    for (int l : {1, 2, 3}) c.require("rtt/rtt" + L(l), 10);
    c.limit(30);
    all_ok &= c.print("RTT relation on 1, 2, 3 sites");
  }

  const Timed comm = run("commutators");
  {
    Criterion c(2, &comm);
    const char* e[] = {"11", "12", "13", "21", "22", "23", "31", "32", "33"};
    for (auto a : e)
      for (auto b : e) c.require(std::string("commutators/bracket/L2/T") + a + "-T" + b, 5);
    c.limit(60);
    all_ok &= c.print("graded commutator, both closed forms, 81 quadruples");
  }

  {
    const Timed t = run("dwpf");
    Criterion c(3, &t);
    for (int n = 1; n <= 5; ++n) c.require("dwpf/symmetry/n" + std::to_string(n), 20);
    for (int n = 1; n <= 4; ++n) {
      const std::string s = std::to_string(n);
      c.require("dwpf/shift-properties/n" + s, 20);
      c.require("dwpf/cauchy/n" + s, 20);
      c.require("dwpf/residue/n" + s, 20);
      c.require_detail("dwpf/residue/n" + s, "numerator degree");
    }
    c.limit(60);
    all_ok &= c.print("domain-wall partition function properties");
  }

  {
    const Timed t = run("lemmas");
    Criterion c(4, &t);
    for (int m1 = 0; m1 <= 6; ++m1)
      for (int m2 = 0; m1 + m2 <= 6; ++m2) {
        const std::string s = "/m" + std::to_string(m1) + "-" + std::to_string(m2);
        c.require("lemmas/cauchy-sum" + s, 20);
        c.require("lemmas/dwpf-sum" + s, 20);
      }
    for (int n = 1; n <= 3; ++n) {
      c.require("lemmas/single-sum/n" + std::to_string(n), 20);
      c.require("lemmas/single-sum-dual/n" + std::to_string(n), 20);
    }
    for (int k = 0; k <= 5; ++k) c.require("lemmas/contour-sum/k" + std::to_string(k), 20);
    c.limit(120);
    all_ok &= c.print("summation lemmas against closed forms");
  }

  {
    const Timed t = run("mcr-rows");
    Criterion c(5, &t);
    const std::vector<std::pair<std::string, std::vector<std::string>>> eqs{
        {"TijTik", {"i111", "i112", "i121", "i122", "i211", "i212", "i221", "i222"}},
        {"Ti3Tj3", {"i11", "i12", "i21", "i22"}},
        {"TijTi3", {"i11", "i12", "i21", "i22"}},
        {"Ti3Tij", {"i11", "i12", "i21", "i22"}},
        {"T33T3i", {"i1", "i2"}},
        {"T3iT33", {"i1", "i2"}}};
    for (const auto& [eq, idxs] : eqs)
      for (const auto& idx : idxs)
        for (int l : {2, 3}) {
          const std::string base = "mcr-rows/" + eq + "/" + idx + L(l);
          for (const char* nm : {"/n1m1", "/n1m2", "/n2m1", "/n2m2"}) c.require(base + nm, 5);
          if (eq == "TijTi3") c.require(base + "/n1m3", 5);
        }
    c.note_trivial("zero operator");
    c.limit(300);
    all_ok &= c.print("row multiple commutation relations");
  }

  {
    const Timed t = run("mcr-columns");
    Criterion c(6, &t);
    for (int b = 1; b <= 2; ++b) {
      const std::string s = L(2) + "/b" + std::to_string(b);
      c.require("mcr-columns/T22T12" + s, 1);
      c.require("mcr-columns/T23T13" + s, 1);
      c.require_detail("mcr-columns/T23T13" + s, "as-printed label reading");
    }
    c.note_trivial("zero operator");
    c.limit(60);
    all_ok &= c.print("column relations, label reading recorded");
  }

  const Timed xy = run("xy");
  {
    Criterion c(7, &xy);
    for (int l = 1; l <= 3; ++l)
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) {
          const std::string s = L(l) + "/a" + std::to_string(a) + "b" + std::to_string(b);
          c.require("xy/equivalence" + s, 1);
          if (a >= 1) {
            c.require("xy/recursion-x" + s, 1);
            c.require("xy/recursion-y" + s, 1);
          }
        }
    for (int l = 1; l <= 3; ++l)
      for (int b = 0; b <= 3; ++b) c.require("xy/base" + L(l) + "/b" + std::to_string(b), 1);
    c.note_trivial("zero operator");
    c.limit(600);
    all_ok &= c.print("X = Y, recursions and base case");
  }

  {
    const Timed bethe = run("bethe");
    const Timed dual = run("dual-bethe");
    Timed both{Report{}, bethe.seconds + dual.seconds};
    both.report.cases = bethe.report.cases;
    both.report.cases.insert(both.report.cases.end(), dual.report.cases.begin(), dual.report.cases.end());
    Criterion c(8, &both);
    for (int l : {2, 3})
      for (const char* ab : {"/a1b1", "/a2b1", "/a1b2", "/a2b2"}) {
        c.require("bethe/agreement" + L(l) + ab, 3);
        c.require("dual-bethe/agreement" + L(l) + ab, 3);
      }
    c.note_trivial("vector is zero");
    c.limit(600);
    all_ok &= c.print("four Bethe and four dual Bethe representations agree");
  }

  {
    // timed by summing the per-case clocks of the relevant cases
    Timed only{Report{}, 0};
    for (const auto& cs : xy.report.cases)
      if (cs.case_id.rfind("xy/comm-a1/", 0) == 0) {
        only.report.cases.push_back(cs);
        only.seconds += cs.elapsed_ms.value_or(0) / 1000;
      }
    Criterion c(9, &only);
    for (int b = 1; b <= 3; ++b) c.require("xy/comm-a1/L2/b" + std::to_string(b), 1);
    c.note_trivial("zero operator");
    c.limit(30);
    all_ok &= c.print("commutator of T12 with a product of T23");
  }

  {
    Criterion c(10);
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::string first, second;
    for (int k = 0; k < 2; ++k) {
      const fs::path out = dir / ("run" + std::to_string(k) + ".json");
      const std::string cmd =
          "\"" + verify + "\" --suite all --sites 2 --seed 7 --format json --out \"" + out.string() + "\"";
      const int rc = std::system(cmd.c_str());
      if (rc != 0) c.fail("verify exited with status " + std::to_string(rc));
      (k == 0 ? first : second) = slurp(out);
    }
    fs::remove_all(dir);
    if (first.empty()) c.fail("empty report");
    if (first != second) c.fail("reports differ");
    all_ok &= c.print("verify --suite all --sites 2 --seed 7 is byte-identical across runs");
  }

  return all_ok ? 0 : 1;
}

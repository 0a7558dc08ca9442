#ifndef MODINV_VALIDATION_HPP
#define MODINV_VALIDATION_HPP

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "modinv/errors.hpp"

namespace modinv {

/// One named check: a residual compared against a tolerance, or a plain
/// yes/no condition (residual 0 or 1, tolerance 0).
struct Check {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool passed = true;
  std::string detail;
  bool informational = false;
};

class ValidationReport {
 public:
  void add_residual(std::string name, double residual, double tolerance, std::string detail = {}) {
    checks_.push_back({std::move(name), residual, tolerance, residual <= tolerance, std::move(detail)});
  }

  void add_condition(std::string name, bool ok, std::string detail = {}) {
    checks_.push_back({std::move(name), ok ? 0.0 : 1.0, 0.0, ok, std::move(detail)});
  }

  /// A fact that does not affect ok(), e.g. whether an invariant is normalized.
  void add_note(std::string name, bool value, std::string detail = {}) {
    checks_.push_back({std::move(name), value ? 0.0 : 1.0, 0.0, value, std::move(detail), true});
  }

  /// Value of a note or condition by name; false when absent.
  bool flag(const std::string& name) const {
    const Check* c = find(name);
    return c && c->passed;
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (!c.passed && !c.informational) return false;
    return true;
  }

  const std::vector<Check>& checks() const noexcept { return checks_; }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

  /// First failing check, formatted; empty if all passed.
  std::string first_failure() const {
    for (const auto& c : checks_)
      if (!c.passed && !c.informational) {
        std::ostringstream os;
        os << c.name << " (residual " << c.residual << ", tolerance " << c.tolerance << ")";
        if (!c.detail.empty()) os << ": " << c.detail;
        return os.str();
      }
    return {};
  }

  void require(ErrorCode code, const std::string& context) const {
    if (!ok()) throw Error(code, context + ": " + first_failure());
  }

  friend std::ostream& operator<<(std::ostream& os, const ValidationReport& r) {
    for (const auto& c : r.checks_) {
      if (c.informational)
        os << "  note " << c.name << (c.passed ? ": yes" : ": no");
      else
        os << (c.passed ? "  ok   " : "  FAIL ") << c.name;
      if (c.tolerance > 0) os << "  residual=" << c.residual << " tol=" << c.tolerance;
      if (!c.detail.empty()) os << "  " << c.detail;
      os << '\n';
    }
    return os;
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace modinv

#endif  // MODINV_VALIDATION_HPP

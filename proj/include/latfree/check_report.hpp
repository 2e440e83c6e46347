#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latfree/arith.hpp"

namespace latfree {

enum class Relation { LT, LE, EQ, GE, GT };

const char* to_string(Relation r);

/// One recorded instance `lhs rel rhs` (booleans are recorded as 1 == 1 / 0 == 1).
struct Inequality {
  std::string label;
  Int lhs;
  Relation rel;
  Int rhs;

  bool holds() const;
  std::string to_string() const;
};

/// Outcome of an executable check: every inequality instance it evaluated,
/// plus the input data needed to reproduce a failure.
class CheckReport {
 public:
  explicit CheckReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<Inequality>& items() const { return items_; }
  const std::vector<std::pair<std::string, std::string>>& context() const { return context_; }

  bool expect(std::string label, Int lhs, Relation rel, Int rhs);
  bool expect_true(std::string label, bool condition);
  void note(std::string key, std::string value);

  /// Appends the items of `other`, prefixing labels with its name.
  void absorb(const CheckReport& other);

  bool ok() const;
  std::vector<Inequality> failures() const;
  std::string summary() const;

 private:
  std::string name_;
  std::vector<Inequality> items_;
  std::vector<std::pair<std::string, std::string>> context_;
};

}  // namespace latfree

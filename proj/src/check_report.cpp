#include "latfree/check_report.hpp"

namespace latfree {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::LT: return "<";
    case Relation::LE: return "<=";
    case Relation::EQ: return "==";
    case Relation::GE: return ">=";
    case Relation::GT: return ">";
  }
  return "?";
}

bool Inequality::holds() const {
  switch (rel) {
    case Relation::LT: return lhs < rhs;
    case Relation::LE: return lhs <= rhs;
    case Relation::EQ: return lhs == rhs;
    case Relation::GE: return lhs >= rhs;
    case Relation::GT: return lhs > rhs;
  }
  return false;
}

std::string Inequality::to_string() const {
  return label + ": " + std::to_string(lhs) + " " + latfree::to_string(rel) + " " + std::to_string(rhs) +
         (holds() ? "" : "  [FAILS]");
}

bool CheckReport::expect(std::string label, Int lhs, Relation rel, Int rhs) {
  items_.push_back({std::move(label), lhs, rel, rhs});
  return items_.back().holds();
}

bool CheckReport::expect_true(std::string label, bool condition) {
  return expect(std::move(label), condition ? 1 : 0, Relation::EQ, 1);
}

void CheckReport::note(std::string key, std::string value) {
  context_.emplace_back(std::move(key), std::move(value));
}

void CheckReport::absorb(const CheckReport& other) {
  for (const Inequality& item : other.items_)
    items_.push_back({other.name_ + "/" + item.label, item.lhs, item.rel, item.rhs});
  for (const auto& [k, v] : other.context_) context_.emplace_back(other.name_ + "/" + k, v);
}

bool CheckReport::ok() const {
  for (const Inequality& item : items_)
    if (!item.holds()) return false;
  return true;
}

std::vector<Inequality> CheckReport::failures() const {
  std::vector<Inequality> out;
  for (const Inequality& item : items_)
    if (!item.holds()) out.push_back(item);
  return out;
}

std::string CheckReport::summary() const {
  std::string s = name_ + (ok() ? ": ok" : ": COUNTEREXAMPLE") + "\n";
  for (const Inequality& item : items_) s += "  " + item.to_string() + "\n";
  for (const auto& [k, v] : context_) s += "  " + k + " = " + v + "\n";
  return s;
}

}  // namespace latfree

#include "wentw/report.hpp"

#include <algorithm>

namespace wentw {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(const std::string& name) const {
  for (auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::check_passed(const std::string& name) const {
  auto* c = find(name);
  return c != nullptr && c->passed;
}

std::optional<long long> Report::constant(const std::string& name) const {
  for (auto& [k, v] : constants)
    if (k == name) return v;
  return std::nullopt;
}

std::optional<std::string> Report::label(const std::string& name) const {
  for (auto& [k, v] : labels)
    if (k == name) return v;
  return std::nullopt;
}

std::optional<Witness> first_difference(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    return Witness{0, lhs, rhs};
  for (std::size_t j = 0; j < lhs.cols(); ++j)
    for (std::size_t i = 0; i < lhs.rows(); ++i)
      if (lhs.at(i, j) != rhs.at(i, j)) return Witness{j, lhs.column(j), rhs.column(j)};
  return std::nullopt;
}

bool Report::expect_equal(const std::string& name, const Matrix& lhs, const Matrix& rhs) {
  Check c;
  c.name = name;
  c.witness = first_difference(lhs, rhs);
  c.passed = !c.witness.has_value();
  if (!c.passed && (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()))
    c.detail = "shape " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
               std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
  checks.push_back(std::move(c));
  return checks.back().passed;
}

bool Report::expect(const std::string& name, bool ok, std::string detail) {
  checks.push_back(Check{name, ok, std::nullopt, std::move(detail)});
  return ok;
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (auto c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
  for (auto& [k, v] : other.constants) constants.emplace_back(prefix + k, v);
  for (auto& [k, v] : other.labels) labels.emplace_back(prefix + k, v);
}

}  // namespace wentw

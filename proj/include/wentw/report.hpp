#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wentw/matrix.hpp"

namespace wentw {

/// First basis vector on which two maps disagree, with both image columns.
struct Witness {
  std::size_t basis_index = 0;
  Matrix lhs;
  Matrix rhs;
};

struct Check {
  std::string name;
  bool passed = false;
  std::optional<Witness> witness;
  std::string detail;
};

/// Outcome of a batch of checks plus derived constants (ranks, dimensions)
/// and labels (classifications). Order of entries is insertion order.
struct Report {
  std::string title;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, long long>> constants;
  std::vector<std::pair<std::string, std::string>> labels;
  double wall_seconds = 0.0;

  bool passed() const;
  const Check* find(const std::string& name) const;
  bool check_passed(const std::string& name) const;
  std::optional<long long> constant(const std::string& name) const;
  std::optional<std::string> label(const std::string& name) const;

  /// Records lhs == rhs as a check, with a column witness on failure.
  bool expect_equal(const std::string& name, const Matrix& lhs, const Matrix& rhs);
  bool expect(const std::string& name, bool ok, std::string detail = {});
  void add_constant(std::string name, long long value) { constants.emplace_back(std::move(name), value); }
  void add_label(std::string name, std::string value) { labels.emplace_back(std::move(name), std::move(value)); }
  /// Appends another report's entries, prefixing their names.
  void absorb(const Report& other, const std::string& prefix);
};

/// Witness for the first differing column of two same-shape matrices.
std::optional<Witness> first_difference(const Matrix& lhs, const Matrix& rhs);

}  // namespace wentw

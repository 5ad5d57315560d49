#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wentw/emcat.hpp"

namespace wentw {

/// A 2-cell between entwining 1-cells, or a map between entwined modules.
struct Morphism {
  enum class Kind { Entw2Cell, ModuleMap };
  Kind kind = Kind::Entw2Cell;
  std::string source;
  std::string target;
  Matrix mat;
};

struct PairDecl {
  std::string entwining;
  std::string source;
  std::string target;
};

/// Named domain objects sharing one field. The ground algebra "k" is implicit.
struct Workspace {
  Field field = Field::rationals();
  AlgebraPtr k;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, BimodulePtr> bimodules;
  std::map<std::string, RRingPtr> rings;
  std::map<std::string, RCoringPtr> corings;
  std::map<std::string, WeakEntwiningPtr> entwinings;
  std::map<std::string, Classification> expected;
  std::map<std::string, WeakEntwinedModule> modules;
  std::map<std::string, EntwOneCell> one_cells;
  std::map<std::string, Morphism> morphisms;
  std::vector<PairDecl> pairs;

  explicit Workspace(Field f);
  AlgebraPtr algebra(const std::string& name) const;
  const WeakEntwiningPtr& entwining(const std::string& name) const;
  const WeakEntwinedModule& module(const std::string& name) const;
  const EntwOneCell& one_cell(const std::string& name) const;
  /// Modules over the named entwining, in name order.
  std::vector<WeakEntwinedModule> modules_of(const std::string& entwining) const;
  std::vector<std::pair<std::string, std::string>> pairs_of(const std::string& entwining) const;
};

inline constexpr int kFormatVersion = 1;

/// Parses the JSON workspace format. Syntax errors report line and column;
/// semantic errors name the offending reference. Throws DataError.
Workspace parse_workspace(const std::string& text);
/// Canonical JSON rendering; parse_workspace(render_workspace(w)) rebuilds w.
std::string render_workspace(const Workspace& w);

std::vector<std::string> fixture_names();
/// Built-in fixtures: trivial, triangular-base, kZ2, sweedler, psi-zero,
/// groupoid-2. Throws UnknownFixture.
Workspace fixture(const std::string& name);

}  // namespace wentw

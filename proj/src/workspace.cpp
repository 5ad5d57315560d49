#include "wentw/workspace.hpp"


#include "json.hpp"

namespace wentw {

using json = nlohmann::ordered_json;

Workspace::Workspace(Field f) : field(f), k(ground_algebra(f)) {}

AlgebraPtr Workspace::algebra(const std::string& name) const {
  if (name == "k") return k;
  auto it = algebras.find(name);
  if (it == algebras.end()) throw DataError("unknown algebra '" + name + "'");
  return it->second;
}

const WeakEntwiningPtr& Workspace::entwining(const std::string& name) const {
  auto it = entwinings.find(name);
  if (it == entwinings.end()) throw DataError("unknown entwining '" + name + "'");
  return it->second;
}

const WeakEntwinedModule& Workspace::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw DataError("unknown module '" + name + "'");
  return it->second;
}

const EntwOneCell& Workspace::one_cell(const std::string& name) const {
  auto it = one_cells.find(name);
  if (it == one_cells.end()) throw DataError("unknown one_cell '" + name + "'");
  return it->second;
}

std::vector<WeakEntwinedModule> Workspace::modules_of(const std::string& e) const {
  const WeakEntwiningPtr& we = entwining(e);
  std::vector<WeakEntwinedModule> out;
  for (auto& [name, m] : modules)
    if (m.we.get() == we.get()) out.push_back(m);
  return out;
}

std::vector<std::pair<std::string, std::string>> Workspace::pairs_of(const std::string& e) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& p : pairs)
    if (p.entwining == e) out.emplace_back(p.source, p.target);
  return out;
}

namespace {

// ---- parsing ---------------------------------------------------------------


const json& field_of(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw DataError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DataError(where + ": missing field '" + key + "'");
  return *it;
}

std::string string_of(const json& obj, const std::string& key, const std::string& where) {
  const json& v = field_of(obj, key, where);
  if (!v.is_string()) throw DataError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t count_of(const json& obj, const std::string& key, const std::string& where) {
  const json& v = field_of(obj, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw DataError(where + ": field '" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Scalar scalar_of(const json& v, Field f, const std::string& where) {
  if (v.is_number_integer()) return Scalar(f, mpq_class(v.dump()));
  if (v.is_string()) {
    try {
      return Scalar::parse(f, v.get<std::string>());
    } catch (const DataError& e) {
      throw DataError(where + ": " + e.what());
    }
  }
  throw DataError(where + ": matrix entries must be integers or strings, got " + v.dump());
}

Matrix matrix_of(const json& v, Field f, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array()) throw DataError(where + ": matrix must be an array of rows");
  if (v.size() != rows)
    throw DataError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != cols)
      throw DataError(where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) {
      Scalar s = scalar_of(row[j], f, where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
      if (!s.is_zero()) m.set(i, j, s);
    }
  }
  return m;
}

Matrix matrix_field(const json& obj, const std::string& key, Field f, std::size_t rows, std::size_t cols,
                    const std::string& where) {
  return matrix_of(field_of(obj, key, where), f, rows, cols, where + "." + key);
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const std::string& kind,
                                        const std::string& where) {
  auto it = m.find(name);
  if (it == m.end()) throw DataError(where + ": unknown " + kind + " '" + name + "'");
  return it->second;
}

const json& section(const json& doc, const std::string& key) {
  static const json empty = json::object();
  auto it = doc.find(key);
  if (it == doc.end()) return empty;
  if (!it->is_object()) throw DataError("section '" + key + "' must be an object");
  return *it;
}

std::size_t qdim(const Word& w) { return present(w)->dim(); }

// ---- rendering --------------------------------------------------------------

json scalar_json(const Scalar& s) {
  if (s.field().is_prime_field()) return s.residue_value();
  const mpq_class& q = s.rational_value();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s.to_string();
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Map>
std::map<const void*, std::string> names_by_pointer(const Map& m) {
  std::map<const void*, std::string> out;
  for (auto& [name, ptr] : m) out.emplace(ptr.get(), name);
  return out;
}

std::string name_of(const std::map<const void*, std::string>& names, const void* p, const std::string& kind) {
  auto it = names.find(p);
  if (it == names.end()) throw DataError("render: unregistered " + kind);
  return it->second;
}

}  // namespace

Workspace parse_workspace(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    auto pos = msg.find("] ");
    throw DataError(pos == std::string::npos ? msg : msg.substr(pos + 2));
  }
  if (!doc.is_object()) throw DataError("workspace must be a JSON object");
  {
    auto it = doc.find("format_version");
    if (it == doc.end()) throw DataError("missing field 'format_version'");
    if (!it->is_number_integer() || it->get<long long>() != kFormatVersion)
      throw DataError("unsupported format_version " + it->dump() + " (expected " + std::to_string(kFormatVersion) + ")");
  }
  Workspace w(Field::parse(string_of(doc, "field", "workspace")));
  const Field f = w.field;

  for (auto& [name, a] : section(doc, "algebras").items()) {
    const std::string where = "algebra '" + name + "'";
    if (name == "k") throw DataError(where + ": the name 'k' is reserved for the ground field");
    std::size_t d = count_of(a, "dim", where);
    w.algebras[name] = make_algebra(name, f, matrix_field(a, "mult", f, d, d * d, where),
                                    matrix_field(a, "unit", f, d, 1, where));
  }
  for (auto& [name, b] : section(doc, "bimodules").items()) {
    const std::string where = "bimodule '" + name + "'";
    AlgebraPtr l, r;
    try {
      l = w.algebra(string_of(b, "left", where));
      r = w.algebra(string_of(b, "right", where));
    } catch (const DataError& e) {
      throw DataError(where + ": " + e.what());
    }
    std::size_t d = count_of(b, "dim", where);
    auto actions = [&](const std::string& key, std::size_t count) {
      const json& arr = field_of(b, key, where);
      if (!arr.is_array() || arr.size() != count)
        throw DataError(where + ": '" + key + "' must list " + std::to_string(count) + " matrices");
      std::vector<Matrix> out;
      for (std::size_t i = 0; i < count; ++i)
        out.push_back(matrix_of(arr[i], f, d, d, where + "." + key + "[" + std::to_string(i) + "]"));
      return out;
    };
    w.bimodules[name] = make_bimodule(name, l, r, d, actions("left_action", l->dim), actions("right_action", r->dim));
  }
  for (auto& [name, t] : section(doc, "rings").items()) {
    const std::string where = "ring '" + name + "'";
    auto c = lookup(w.bimodules, string_of(t, "carrier", where), "bimodule", where);
    std::size_t tt = qdim(word_of({c, c}));
    w.rings[name] = make_rring(name, c, matrix_field(t, "mu", f, c->dim, tt, where),
                               matrix_field(t, "eta", f, c->dim, c->left->dim, where));
  }
  for (auto& [name, t] : section(doc, "corings").items()) {
    const std::string where = "coring '" + name + "'";
    auto c = lookup(w.bimodules, string_of(t, "carrier", where), "bimodule", where);
    std::size_t cc = qdim(word_of({c, c}));
    w.corings[name] = make_rcoring(name, c, matrix_field(t, "delta", f, cc, c->dim, where),
                                   matrix_field(t, "eps", f, c->left->dim, c->dim, where));
  }
  for (auto& [name, e] : section(doc, "entwinings").items()) {
    const std::string where = "entwining '" + name + "'";
    auto ring = lookup(w.rings, string_of(e, "ring", where), "ring", where);
    auto coring = lookup(w.corings, string_of(e, "coring", where), "coring", where);
    std::size_t ct = qdim(coring->word() + ring->word()), tc = qdim(ring->word() + coring->word());
    w.entwinings[name] = make_weak_entwining(name, ring, coring, matrix_field(e, "psi", f, tc, ct, where));
    if (e.contains("expect")) {
      auto c = parse_classification(string_of(e, "expect", where));
      if (!c) throw DataError(where + ": 'expect' must be Strong, WeakOnly or NotEntwining");
      w.expected[name] = *c;
    }
  }
  for (auto& [name, m] : section(doc, "modules").items()) {
    const std::string where = "module '" + name + "'";
    auto we = lookup(w.entwinings, string_of(m, "entwining", where), "entwining", where);
    auto c = lookup(w.bimodules, string_of(m, "carrier", where), "bimodule", where);
    Word M = word_of({c});
    w.modules.emplace(name, make_entwined_module(we, name, c, matrix_field(m, "action", f, c->dim, qdim(M + we->T()), where),
                                                 matrix_field(m, "coaction", f, qdim(M + we->C()), c->dim, where)));
  }
  for (auto& [name, o] : section(doc, "one_cells").items()) {
    const std::string where = "one_cell '" + name + "'";
    auto s = lookup(w.entwinings, string_of(o, "source", where), "entwining", where);
    auto t = lookup(w.entwinings, string_of(o, "target", where), "entwining", where);
    auto b = lookup(w.bimodules, string_of(o, "w", where), "bimodule", where);
    Word W = word_of({b});
    Matrix alpha = matrix_field(o, "alpha", f, qdim(s->T() + W), qdim(W + t->T()), where);
    Matrix beta = matrix_field(o, "beta", f, qdim(W + t->C()), qdim(s->C() + W), where);
    w.one_cells.emplace(name, make_entw_1cell(s, t, b, alpha, beta));
  }
  for (auto& [name, m] : section(doc, "morphisms").items()) {
    const std::string where = "morphism '" + name + "'";
    Morphism mor;
    std::string kind = string_of(m, "kind", where);
    mor.source = string_of(m, "source", where);
    mor.target = string_of(m, "target", where);
    std::size_t rows = 0, cols = 0;
    if (kind == "entw-2cell") {
      mor.kind = Morphism::Kind::Entw2Cell;
      cols = lookup(w.one_cells, mor.source, "one_cell", where).w->dim;
      rows = lookup(w.one_cells, mor.target, "one_cell", where).w->dim;
    } else if (kind == "module-map") {
      mor.kind = Morphism::Kind::ModuleMap;
      cols = lookup(w.modules, mor.source, "module", where).carrier->dim;
      rows = lookup(w.modules, mor.target, "module", where).carrier->dim;
    } else {
      throw DataError(where + ": kind must be 'entw-2cell' or 'module-map'");
    }
    mor.mat = matrix_field(m, "matrix", f, rows, cols, where);
    w.morphisms.emplace(name, std::move(mor));
  }
  if (auto it = doc.find("pairs"); it != doc.end()) {
    if (!it->is_array()) throw DataError("'pairs' must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& p = (*it)[i];
      const std::string where = "pair " + std::to_string(i);
      PairDecl d{string_of(p, "entwining", where), string_of(p, "source", where), string_of(p, "target", where)};
      const auto& we = lookup(w.entwinings, d.entwining, "entwining", where);
      for (auto* n : {&d.source, &d.target})
        if (lookup(w.modules, *n, "module", where).we.get() != we.get())
          throw DataError(where + ": module '" + *n + "' is not over entwining '" + d.entwining + "'");
      w.pairs.push_back(std::move(d));
    }
  }
  return w;
}

std::string render_workspace(const Workspace& w) {
  json doc = json::object();
  doc["format_version"] = kFormatVersion;
  doc["field"] = w.field.name();
  auto alg_names = names_by_pointer(w.algebras);
  auto algebra_name = [&](const AlgebraPtr& a) {
    if (a.get() == w.k.get() || is_ground(*a)) return std::string("k");
    return name_of(alg_names, a.get(), "algebra " + a->name);
  };
  auto bim_names = names_by_pointer(w.bimodules);
  auto ring_names = names_by_pointer(w.rings);
  auto coring_names = names_by_pointer(w.corings);
  auto ent_names = names_by_pointer(w.entwinings);

  json algebras = json::object();
  for (auto& [name, a] : w.algebras)
    algebras[name] = {{"dim", a->dim}, {"mult", matrix_json(a->mult)}, {"unit", matrix_json(a->unit)}};
  doc["algebras"] = std::move(algebras);

  json bims = json::object();
  for (auto& [name, b] : w.bimodules) {
    json la = json::array(), ra = json::array();
    for (auto& m : b->left_action) la.push_back(matrix_json(m));
    for (auto& m : b->right_action) ra.push_back(matrix_json(m));
    bims[name] = {{"left", algebra_name(b->left)},
                  {"right", algebra_name(b->right)},
                  {"dim", b->dim},
                  {"left_action", std::move(la)},
                  {"right_action", std::move(ra)}};
  }
  doc["bimodules"] = std::move(bims);

  json rings = json::object();
  for (auto& [name, t] : w.rings)
    rings[name] = {{"carrier", name_of(bim_names, t->carrier.get(), "bimodule " + t->carrier->name)},
                   {"mu", matrix_json(t->mu.mat)},
                   {"eta", matrix_json(t->eta.mat)}};
  doc["rings"] = std::move(rings);

  json corings = json::object();
  for (auto& [name, c] : w.corings)
    corings[name] = {{"carrier", name_of(bim_names, c->carrier.get(), "bimodule " + c->carrier->name)},
                     {"delta", matrix_json(c->delta.mat)},
                     {"eps", matrix_json(c->eps.mat)}};
  doc["corings"] = std::move(corings);

  json ents = json::object();
  for (auto& [name, e] : w.entwinings) {
    json j = {{"ring", name_of(ring_names, e->ring.get(), "ring " + e->ring->name)},
              {"coring", name_of(coring_names, e->coring.get(), "coring " + e->coring->name)},
              {"psi", matrix_json(e->psi.mat)}};
    if (auto it = w.expected.find(name); it != w.expected.end()) j["expect"] = to_string(it->second);
    ents[name] = std::move(j);
  }
  doc["entwinings"] = std::move(ents);

  json mods = json::object();
  for (auto& [name, m] : w.modules)
    mods[name] = {{"entwining", name_of(ent_names, m.we.get(), "entwining " + m.we->name)},
                  {"carrier", name_of(bim_names, m.carrier.get(), "bimodule " + m.carrier->name)},
                  {"action", matrix_json(m.action.mat)},
                  {"coaction", matrix_json(m.coaction.mat)}};
  doc["modules"] = std::move(mods);

  json cells = json::object();
  for (auto& [name, c] : w.one_cells)
    cells[name] = {{"source", name_of(ent_names, c.source.get(), "entwining")},
                   {"target", name_of(ent_names, c.target.get(), "entwining")},
                   {"w", name_of(bim_names, c.w.get(), "bimodule " + c.w->name)},
                   {"alpha", matrix_json(c.alpha.mat)},
                   {"beta", matrix_json(c.beta.mat)}};
  doc["one_cells"] = std::move(cells);

  json mors = json::object();
  for (auto& [name, m] : w.morphisms)
    mors[name] = {{"kind", m.kind == Morphism::Kind::Entw2Cell ? "entw-2cell" : "module-map"},
                  {"source", m.source},
                  {"target", m.target},
                  {"matrix", matrix_json(m.mat)}};
  doc["morphisms"] = std::move(mors);

  json pairs = json::array();
  for (auto& p : w.pairs) pairs.push_back({{"entwining", p.entwining}, {"source", p.source}, {"target", p.target}});
  doc["pairs"] = std::move(pairs);
  return doc.dump(2) + "\n";
}

}  // namespace wentw

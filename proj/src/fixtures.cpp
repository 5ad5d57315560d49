#include <functional>

#include "wentw/errors.hpp"
#include "wentw/workspace.hpp"

namespace wentw {

namespace {

void add_to(Matrix& m, std::size_t i, std::size_t j, const Scalar& v) { m.set(i, j, m.at(i, j) + v); }
void add_to(Matrix& m, std::size_t i, std::size_t j, long v) { add_to(m, i, j, Scalar(m.field(), v)); }

/// Terms of a basis-coordinate expansion: (index, coefficient).
using Terms = std::vector<std::pair<std::size_t, long>>;

AlgebraPtr algebra_from(std::string name, Field f, std::size_t d, std::size_t unit_index,
                        const std::function<Terms(std::size_t, std::size_t)>& product) {
  Matrix mult(f, d, d * d), unit(f, d, 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (auto [l, c] : product(i, j)) add_to(mult, l, i * d + j, c);
  unit.set(unit_index, 0, Scalar(f, 1L));
  return make_algebra(std::move(name), f, std::move(mult), std::move(unit));
}

/// A bialgebra (or weak bialgebra) over the ground field.
struct Bialgebra {
  AlgebraPtr alg;
  Matrix delta;  ///< d^2 x d
  Matrix eps;    ///< 1 x d
};

/// Group algebra of Z/n: basis g^0 .. g^{n-1}, grouplike comultiplication.
Bialgebra group_algebra_zn(std::string name, Field f, std::size_t n) {
  auto alg = algebra_from(std::move(name), f, n, 0, [n](std::size_t i, std::size_t j) { return Terms{{(i + j) % n, 1}}; });
  Matrix delta(f, n * n, n), eps(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    delta.set(i * n + i, i, Scalar(f, 1L));
    eps.set(0, i, Scalar(f, 1L));
  }
  return {alg, delta, eps};
}

/// Sweedler's Hopf algebra: basis g^a x^b at index a + 2b, with g^2 = 1,
/// x^2 = 0, xg = -gx, g grouplike and x (1, g)-primitive.
Bialgebra sweedler(Field f) {
  auto alg = algebra_from("H4", f, 4, 0, [](std::size_t i, std::size_t j) {
    const std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
    if (b + d > 1) return Terms{};
    return Terms{{(a + c) % 2 + 2 * (b + d), (b * c) % 2 ? -1L : 1L}};
  });
  const Field ff = f;
  // Products in H (x) H: (a (x) b)(c (x) d) = ac (x) bd.
  Matrix m4(ff, 16, 256);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t d = 0; d < 4; ++d)
          for (std::size_t p = 0; p < 4; ++p)
            for (std::size_t q = 0; q < 4; ++q) {
              Scalar s = alg->mult.at(p, a * 4 + c) * alg->mult.at(q, b * 4 + d);
              if (!s.is_zero()) add_to(m4, p * 4 + q, (a * 4 + b) * 16 + c * 4 + d, s);
            }
  auto product2 = [&](const Matrix& u, const Matrix& v) { return m4 * kron(u, v); };
  auto e = [&](std::size_t i) { return Matrix::unit_column(ff, 4, i); };
  Matrix dg = kron(e(1), e(1));
  Matrix dx = kron(e(2), e(0)) + kron(e(1), e(2));
  Matrix one = kron(e(0), e(0));
  std::vector<Matrix> cols = {one, dg, dx, product2(dg, dx)};
  Matrix delta = Matrix::hstack(cols, ff, 16);
  Matrix eps = Matrix::from_ints(ff, {{1, 1, 0, 0}});
  return {alg, delta, eps};
}

/// Algebra of 2x2 matrix units e_ij (index 2i + j) with the pair-groupoid
/// weak bialgebra structure: e_ij grouplike, counit 1 on every unit.
Bialgebra pair_groupoid(Field f) {
  auto alg = algebra_from("M2", f, 4, 0, [](std::size_t a, std::size_t b) {
    if (a % 2 != b / 2) return Terms{};
    return Terms{{(a / 2) * 2 + b % 2, 1}};
  });
  // The unit is e11 + e22.
  Matrix unit = Matrix::unit_column(f, 4, 0) + Matrix::unit_column(f, 4, 3);
  auto m2 = make_algebra("M2", f, alg->mult, unit);
  Matrix delta(f, 16, 4), eps(f, 1, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    delta.set(i * 4 + i, i, Scalar(f, 1L));
    eps.set(0, i, Scalar(f, 1L));
  }
  return {m2, delta, eps};
}

/// psi(c (x) a) = a_(1) (x) c a_(2) as a [C, T] -> [T, C] matrix.
Matrix canonical_psi(const Bialgebra& h) {
  const std::size_t d = h.alg->dim;
  const Field f = h.alg->field;
  Matrix psi(f, d * d, d * d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const Scalar& co = h.delta.at(i * d + j, a);
          if (co.is_zero()) continue;
          for (std::size_t l = 0; l < d; ++l) {
            const Scalar& m = h.alg->mult.at(l, c * d + j);
            if (!m.is_zero()) add_to(psi, i * d + l, c * d + a, co * m);
          }
        }
  return psi;
}

/// Registers T = C = h over k with the given psi, plus its identity 1-cell.
WeakEntwiningPtr add_self_entwining(Workspace& w, const std::string& name, const Bialgebra& h, const Matrix& psi,
                                    Classification expect) {
  auto carrier = vector_space(h.alg->name + "_k", w.field, h.alg->dim);
  w.algebras[h.alg->name] = h.alg;
  w.bimodules[carrier->name] = carrier;
  auto ring = make_rring(name + ".T", carrier, h.alg->mult, h.alg->unit);
  auto coring = make_rcoring(name + ".C", carrier, h.delta, h.eps);
  w.rings[ring->name] = ring;
  w.corings[coring->name] = coring;
  auto we = make_weak_entwining(name, ring, coring, psi);
  w.entwinings[name] = we;
  w.expected[name] = expect;
  return we;
}

/// The span of the basis vectors `s` of h, assumed closed under right
/// multiplication and comultiplication, as a weak entwined module.
WeakEntwinedModule sub_hopf_module(Workspace& w, const WeakEntwiningPtr& we, const Bialgebra& h, std::string name,
                                   const std::vector<std::size_t>& s) {
  const std::size_t d = h.alg->dim, n = s.size();
  const Field f = w.field;
  auto carrier = n == d ? we->ring->carrier : vector_space(name, f, n);
  if (n != d) w.bimodules[name] = carrier;
  Matrix action(f, n, n * d), coaction(f, n * d, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t y = 0; y < n; ++y) action.set(y, x * d + a, h.alg->mult.at(s[y], s[x] * d + a));
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t c = 0; c < d; ++c) coaction.set(y * d + c, x, h.delta.at(s[y] * d + c, s[x]));
  }
  return make_entwined_module(we, std::move(name), carrier, std::move(action), std::move(coaction));
}

void add_module(Workspace& w, WeakEntwinedModule m) {
  std::string name = m.name;
  w.modules.emplace(std::move(name), std::move(m));
}

void add_identity_cell(Workspace& w, const std::string& cell, const WeakEntwiningPtr& we) {
  auto id = identity_entw_1cell(we);
  w.bimodules.emplace(cell + ".W", id.w);
  w.one_cells.emplace(cell, std::move(id));
  w.morphisms.emplace(cell + ".identity",
                      Morphism{Morphism::Kind::Entw2Cell, cell, cell, Matrix::identity(w.field, we->base->dim)});
}

/// The base module: M = R as a k-R bimodule with the regular structures of the
/// trivial entwining, or a right ideal of R.
WeakEntwinedModule trivial_entwined_module(Workspace& w, const WeakEntwiningPtr& we, std::string name,
                                           BimodulePtr carrier) {
  w.bimodules[name] = carrier;
  return make_entwined_module(we, std::move(name), carrier, right_unitor(carrier), inverse(right_unitor(carrier)));
}

Workspace trivial_fixture() {
  Workspace w(Field::rationals());
  auto we = trivial_entwining(w.k);
  w.bimodules["k_reg"] = we->ring->carrier;
  w.rings["T"] = we->ring;
  w.corings["C"] = we->coring;
  w.entwinings["trivial"] = we;
  w.expected["trivial"] = Classification::Strong;
  add_identity_cell(w, "id", we);
  add_module(w, make_entwined_module(we, "k", we->ring->carrier, right_unitor(we->ring->carrier),
                                     inverse(right_unitor(we->ring->carrier))));
  w.morphisms.emplace("k.identity", Morphism{Morphism::Kind::ModuleMap, "k", "k", Matrix::identity(w.field, 1)});
  w.pairs.push_back({"trivial", "k", "k"});
  return w;
}

Workspace triangular_fixture() {
  const Field f = Field::prime(5);
  Workspace w(f);
  // Basis e11, e12, e22.
  auto u2 = algebra_from("U2", f, 3, 0, [](std::size_t i, std::size_t j) {
    static const int row[3] = {0, 0, 1}, col[3] = {0, 1, 1};
    if (col[i] != row[j]) return Terms{};
    const int r = row[i], c = col[j];
    return Terms{{static_cast<std::size_t>(r == 0 ? c : 2), 1}};
  });
  u2 = make_algebra("U2", f, u2->mult, Matrix::unit_column(f, 3, 0) + Matrix::unit_column(f, 3, 2));
  w.algebras["U2"] = u2;
  auto we = trivial_entwining(u2);
  w.bimodules["U2_reg"] = we->ring->carrier;
  w.rings["T"] = we->ring;
  w.corings["C"] = we->coring;
  w.entwinings["triangular"] = we;
  w.expected["triangular"] = Classification::Strong;
  add_identity_cell(w, "id", we);
  auto rk = restrict_left_to_ground(we->ring->carrier, "R_k");
  add_module(w, trivial_entwined_module(w, we, "R_k", rk));
  // The right ideal e11 U2 = span(e11, e12).
  std::vector<std::size_t> keep = {0, 1};
  std::vector<Matrix> rights;
  for (std::size_t j = 0; j < 3; ++j) rights.push_back(u2->right_mult(j).select_rows(keep).select_columns(keep));
  auto e11r = make_bimodule("e11R", w.k, u2, 2, {Matrix::identity(f, 2)}, std::move(rights));
  add_module(w, trivial_entwined_module(w, we, "e11R", e11r));
  w.morphisms.emplace("e11R.inclusion", Morphism{Morphism::Kind::ModuleMap, "e11R", "R_k",
                                                 Matrix::from_ints(f, {{1, 0}, {0, 1}, {0, 0}})});
  w.pairs.push_back({"triangular", "R_k", "R_k"});
  w.pairs.push_back({"triangular", "e11R", "R_k"});
  w.pairs.push_back({"triangular", "R_k", "e11R"});
  w.pairs.push_back({"triangular", "e11R", "e11R"});
  return w;
}

Workspace kz2_fixture() {
  const Field f = Field::prime(5);
  Workspace w(f);
  Bialgebra h = group_algebra_zn("kZ2", f, 2);
  auto we = add_self_entwining(w, "kZ2", h, canonical_psi(h), Classification::Strong);
  add_identity_cell(w, "id", we);
  auto hm = sub_hopf_module(w, we, h, "H", {0, 1});
  add_module(w, hm);
  w.morphisms.emplace("H.identity", Morphism{Morphism::Kind::ModuleMap, "H", "H", Matrix::identity(f, 2)});
  w.pairs.push_back({"kZ2", "H", "H"});

  // A 1-cell from the trivial entwining on k: W = H with alpha the action and
  // beta the coaction of the Hopf module.
  auto triv = trivial_entwining(w.k);
  w.bimodules["k_reg"] = triv->ring->carrier;
  w.rings["k.T"] = triv->ring;
  w.corings["k.C"] = triv->coring;
  w.entwinings["k"] = triv;
  w.expected["k"] = Classification::Strong;
  add_identity_cell(w, "id_k", triv);
  const BimodulePtr& W = we->ring->carrier;
  Matrix lu = left_unitor(W);
  auto hopf = make_entw_1cell(triv, we, W, inverse(lu) * hm.action.mat, hm.coaction.mat * lu);
  w.one_cells.emplace("hopf", std::move(hopf));
  w.morphisms.emplace("hopf.identity", Morphism{Morphism::Kind::Entw2Cell, "hopf", "hopf", Matrix::identity(f, 2)});
  w.morphisms.emplace("hopf.scale", Morphism{Morphism::Kind::Entw2Cell, "hopf", "hopf",
                                             Matrix::from_ints(f, {{3, 0}, {0, 3}})});
  return w;
}

Workspace sweedler_fixture() {
  const Field f = Field::prime(5);
  Workspace w(f);
  Bialgebra h = sweedler(f);
  auto we = add_self_entwining(w, "sweedler", h, canonical_psi(h), Classification::Strong);
  add_identity_cell(w, "id", we);
  add_module(w, sub_hopf_module(w, we, h, "H", {0, 1, 2, 3}));
  w.pairs.push_back({"sweedler", "H", "H"});
  return w;
}

Workspace psi_zero_fixture() {
  const Field f = Field::prime(5);
  Workspace w(f);
  Bialgebra h = group_algebra_zn("kZ2", f, 2);
  auto we = add_self_entwining(w, "psi-zero", h, Matrix(f, 4, 4), Classification::WeakOnly);
  add_identity_cell(w, "id", we);
  // Psi = 0 forces every entwined module to vanish.
  add_module(w, sub_hopf_module(w, we, h, "0", {}));
  w.pairs.push_back({"psi-zero", "0", "0"});
  return w;
}

Workspace groupoid_fixture() {
  const Field f = Field::prime(5);
  Workspace w(f);
  Bialgebra h = pair_groupoid(f);
  auto we = add_self_entwining(w, "groupoid-2", h, canonical_psi(h), Classification::WeakOnly);
  add_identity_cell(w, "id", we);
  add_module(w, sub_hopf_module(w, we, h, "H", {0, 1, 2, 3}));
  add_module(w, sub_hopf_module(w, we, h, "M1", {0, 1}));
  add_module(w, sub_hopf_module(w, we, h, "M2", {2, 3}));
  w.morphisms.emplace("M1.inclusion", Morphism{Morphism::Kind::ModuleMap, "M1", "H",
                                               Matrix::from_ints(f, {{1, 0}, {0, 1}, {0, 0}, {0, 0}})});
  w.pairs.push_back({"groupoid-2", "H", "H"});
  w.pairs.push_back({"groupoid-2", "M1", "M1"});
  w.pairs.push_back({"groupoid-2", "M1", "M2"});
  w.pairs.push_back({"groupoid-2", "M1", "H"});
  w.pairs.push_back({"groupoid-2", "H", "M2"});
  return w;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"trivial", "triangular-base", "kZ2", "sweedler", "psi-zero", "groupoid-2"};
}

Workspace fixture(const std::string& name) {
  if (name == "trivial") return trivial_fixture();
  if (name == "triangular-base") return triangular_fixture();
  if (name == "kZ2") return kz2_fixture();
  if (name == "sweedler") return sweedler_fixture();
  if (name == "psi-zero") return psi_zero_fixture();
  if (name == "groupoid-2") return groupoid_fixture();
  throw UnknownFixture("unknown fixture '" + name + "'");
}

}  // namespace wentw

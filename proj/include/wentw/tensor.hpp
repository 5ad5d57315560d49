#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wentw/algebra.hpp"

namespace wentw {

/// A composable chain of bimodules X1 (x)_{R1} X2 (x) ... (x) Xn, written in
/// tensor order. The empty chain is the identity 1-cell on `base`, realized
/// by the regular bimodule of `base`.
struct Word {
  AlgebraPtr base;
  std::vector<BimodulePtr> factors;

  bool empty() const { return factors.empty(); }
  AlgebraPtr left() const { return empty() ? base : factors.front()->left; }
  AlgebraPtr right() const { return empty() ? base : factors.back()->right; }
  const Field& field() const { return base->field; }
  /// Product of factor dimensions (dim R for the empty word).
  std::size_t ambient_dim() const;
  std::string to_string() const;
  /// Pointer identity of factors; bases compared structurally.
  bool operator==(const Word& o) const;
};

/// The regular bimodule of `r`, memoized so that every use shares one object.
BimodulePtr unit_bimodule(const AlgebraPtr& r);

Word word_of(std::vector<BimodulePtr> factors);
Word identity_word(const AlgebraPtr& base);
/// Tensor-order concatenation; throws BaseMismatch on an incompatible seam.
Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);
inline Word operator+(const Word& a, const Word& b) { return concat(a, b); }

/// Flat presentation of a word's tensor product over the intermediate bases:
/// the quotient of the k-tensor space (left-factor-major) by the span of all
/// balancing relations (x r) (x) y - x (x) (r y). The quotient basis is the set
/// of non-pivot coordinates of the reduced relation span.
struct TensorOverR {
  Word word;
  std::size_t ambient_dim = 0;
  Matrix proj;                          ///< quotient x ambient
  std::vector<std::size_t> free_coords;  ///< section: e_k -> e_{free_coords[k]}
  BimodulePtr quotient;                 ///< induced outer actions
  bool trivial = true;                  ///< no relations: proj = sect = 1

  std::size_t dim() const { return free_coords.size(); }
  Matrix sect() const;
  /// a * sect, computed by column selection.
  Matrix after_section(const Matrix& a) const;
  /// proj * x.
  Matrix to_quotient(const Matrix& x) const;
  /// sect * x, computed by row placement.
  Matrix to_ambient(const Matrix& x) const;
};
using TensorPtr = std::shared_ptr<const TensorOverR>;

/// Presentation of a word; memoized per word, thread-safe.
TensorPtr present(const Word& w);
/// Binary v (x)_R w. Throws BaseMismatch if v.right != w.left.
TensorPtr tensor_over_R(const BimodulePtr& v, const BimodulePtr& w);

/// Minimal generating set of basis elements (greedy, in index order).
std::vector<std::size_t> algebra_generators(const Algebra& a);

/// A bimodule map between the tensor products of two words, in quotient
/// coordinates of their presentations. The 2-cells of the bimodule 2-category.
struct Cell {
  Word source;
  Word target;
  Matrix mat;
};

Cell make_cell(Word source, Word target, Matrix mat);
Cell identity_cell(const Word& w);
Cell zero_cell(const Word& source, const Word& target);
/// outer o inner (vertical composition).
Cell compose(const Cell& outer, const Cell& inner);
Cell compose(std::initializer_list<Cell> chain_outer_to_inner);
/// left (x) f (x) right. Unit cells (empty source) are inserted through the
/// unit of the base algebra; counit cells (empty target) are absorbed by the
/// neighbouring factor's action.
/// With verify = false the well-definedness assertion is skipped; used when
/// `f` is an unknown in a linear system and the balancing constraints are
/// imposed separately.
Cell whisker(const Word& left, const Cell& f, const Word& right, bool verify = true);
/// Descends an ambient k-linear map to the quotients, asserting that it maps
/// relations to relations (throws NotWellDefined otherwise).
Cell descend(const Word& source, const Word& target, const Matrix& ambient_map, bool verify = true);
/// sect_target * mat * proj_source.
Matrix lift(const Cell& c);
/// True iff the cell is a bimodule map for the outer actions.
bool is_bimodule_cell(const Cell& c);
/// The cell as a BimoduleMap between the quotient bimodules.
BimoduleMap as_bimodule_map(const Cell& c);

/// Binary tensor of bimodule maps on given presentations:
/// proj_target * kron(f, g) * sect_source, with well-definedness asserted.
BimoduleMap tensor_maps(const BimoduleMap& f, const BimoduleMap& g);

/// Mutually inverse isomorphisms between two presentations of one tensor.
struct Iso {
  Matrix forward;
  Matrix backward;
};

/// (U (x) V) (x) W  <->  U (x) (V (x) W), where the parenthesized pairs are
/// the quotient bimodules of their binary presentations. Computed on section
/// representatives and verified mutually inverse.
Iso associator(const BimodulePtr& u, const BimodulePtr& v, const BimodulePtr& w);

/// Maps with a target already in quotient coordinates: checks that `map`
/// vanishes on the balancing relations of `source` and returns the induced
/// matrix (throws NotWellDefined otherwise).
Matrix descend_source(const Word& source, const Matrix& map);

/// R (x)_R W -> W via the left action.
Matrix left_unitor(const BimodulePtr& w);
/// V (x)_R R -> V via the right action.
Matrix right_unitor(const BimodulePtr& v);

}  // namespace wentw

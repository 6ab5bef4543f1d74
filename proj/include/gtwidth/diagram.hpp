#pragma once

#include <map>
#include <string>
#include <vector>

#include "gtwidth/lie.hpp"

namespace gtwidth {

/// One cell of the ladder / so-diagram, Cartesian coordinates: j is the
/// column (>= 1), k the row (>= 1 for U(n); the orthogonal diagrams extend
/// into rows k <= 0).
struct Box {
  int j = 0, k = 0;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A box together with the Gelfand-Tsetlin function it carries
/// (eigenvalue `index` of the leading principal block at `level`) and the
/// interval the function is forced into on the whole orbit.
struct BoxInfo {
  Box box;
  int level = 0;  // superscript: submatrix size
  int index = 0;  // subscript within that level
  Rational lo, hi;
};

/// The box diagram indexing the non-constant Gelfand-Tsetlin functions of
/// an orbit, with its fixed basis order of R^N.
///
/// Basis order: U(n) sorts by (row ascending, column descending); the
/// orthogonal families by (column ascending, row descending).
class Diagram {
 public:
  /// Throws PointOrbitError for point orbits.
  static Diagram build(const Weight& w);

  const Weight& weight() const { return weight_; }
  const GroupSpec& group() const { return weight_.group; }
  const BlockStructure& blocks() const { return blocks_; }
  int size() const { return static_cast<int>(boxes_.size()); }  // N

  const std::vector<BoxInfo>& boxes() const { return boxes_; }
  bool is_box(Box b) const { return index_.count(b) != 0; }
  /// 0-based position in the basis order; throws on unknown boxes.
  int basis_index(Box b) const;

  /// Block index a such that row l (U) / column l (SO) meets the diagonal
  /// square Q_a; equivalently l(n-l+1) = v_{g(l)} for U and l_l = v_{g(l)}
  /// for SO.
  int g_of(int l) const;

  // --- grid slots -----------------------------------------------------
  // A "slot" is a position carrying a Gelfand-Tsetlin function, whether it
  // is a box (non-constant) or not (constant, value l_j of its column);
  // the top level (the weight entries themselves) counts as slots too.
  bool slot_exists(int j, int k) const;
  /// The |.|-line of the orthogonal diagrams: the last function of an even
  /// level, the one whose sign is not pinned by the chamber.
  bool slot_is_rim(int j, int k) const;
  std::pair<int, int> slot_label(int j, int k) const;  // (level, index)
  const Rational& constant_value(int j, int k) const { return weight_.at(j); }

  int k_min(int j) const;  // lowest row of column j carrying a function
  int k_max(int j) const;  // highest row with a *box* in column j

  std::string render_ascii() const;

 private:
  Weight weight_;
  BlockStructure blocks_;
  std::vector<BoxInfo> boxes_;
  std::map<Box, int> index_;
};

}  // namespace gtwidth

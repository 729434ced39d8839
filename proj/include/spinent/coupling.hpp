#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinent/matrix.hpp"
#include "spinent/rational.hpp"
#include "spinent/spin_algebra.hpp"

namespace spinent {

// Half-integer momentum label, stored exactly as twice its value.
struct HalfInt {
  int twice = 0;

  double value() const { return 0.5 * twice; }
  std::string str() const;  // "3/2", "-1", "0", ...
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

inline HalfInt half(int twice) { return HalfInt{twice}; }

// Momenta (l, s) of the two sides, s <= l. Side A carries l, side B carries s.
struct CouplingScheme {
  HalfInt l;
  HalfInt s;

  CouplingScheme(HalfInt l_in, HalfInt s_in);
  int na() const { return l.twice + 1; }
  int nb() const { return s.twice + 1; }
  int dim() const { return na() * nb(); }
  int dim_gap() const { return na() - nb(); }
  friend auto operator<=>(const CouplingScheme&, const CouplingScheme&) = default;
};

struct IrrepLabel {
  HalfInt j;
  HalfInt mj;
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

struct Multiplet {
  HalfInt j;
  int dim;
};

// Total-momentum multiplets of the coupled space, j ascending from l-s to
// l+s. Dimensions are {d+1, d+3, ..., na+nb-1} and sum to na*nb.
std::vector<Multiplet> irrep_fibration(const CouplingScheme& scheme);

// All (j, mj) labels in serialization order: blocks ascending in j,
// mj ascending within each block.
std::vector<IrrepLabel> irrep_labels(const CouplingScheme& scheme);

// Product-basis labels (ml, ms), ml major ascending, ms minor ascending.
std::vector<std::pair<HalfInt, HalfInt>> product_labels(const CouplingScheme& scheme);

// Clebsch-Gordan coefficients of one coupling scheme in exact arithmetic.
//
// Built by the highest-weight construction: the top state of each j block is
// the kernel of the total raising operator on its magnetic level, fixed to
// the Condon-Shortley phase (largest-ml component positive), and the rest of
// the block follows by applying the total lowering operator. Every
// coefficient is sign * sqrt(rational) and each (j, mj) row sums its squares
// to exactly 1.
class CGTable {
 public:
  explicit CGTable(const CouplingScheme& scheme);

  const CouplingScheme& scheme() const { return scheme_; }

  // Coefficient <l ml; s ms | j mj>. Labels must be in range; the value is
  // exactly zero whenever mj != ml + ms.
  SqrtRational coeff(HalfInt j, HalfInt mj, HalfInt ml, HalfInt ms) const;

  // Exact reduction weight of a pure (j, mj) state onto one magnetic level
  // of the kept side: sum over the discarded side of squared coefficients.
  Rational subsystem_weight(HalfInt j, HalfInt mj, Side side, HalfInt m) const;

  // Text table, one row per momentum-conserving slot:
  // j m_j m_l m_s sign numerator denominator
  void write_table(std::ostream& os) const;

 private:
  void validate_labels(HalfInt j, HalfInt mj, HalfInt ml, HalfInt ms) const;

  CouplingScheme scheme_;
  // key {2j, 2mj, 2ml}; 2ms is implied by 2mj - 2ml
  std::map<std::array<int, 3>, SqrtRational> coeff_;
};

// Memoized table access; building a table is deterministic, so the cache is
// write-once per scheme and safe for concurrent readers.
const CGTable& cg_table(const CouplingScheme& scheme);

// Single-coefficient access through the memoized table.
SqrtRational clebsch_gordan(const CouplingScheme& scheme, HalfInt j, HalfInt mj,
                            HalfInt ml, HalfInt ms);

// Unitary change of basis from the product basis to the coupled basis.
// Row order follows irrep_labels, column order product_labels; entry (r, c)
// is the coefficient <ml, ms | j, mj>.
Matrix coupling_unitary(const CouplingScheme& scheme);

}  // namespace spinent

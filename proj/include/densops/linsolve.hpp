#ifndef DENSOPS_LINSOLVE_HPP
#define DENSOPS_LINSOLVE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "densops/scalar.hpp"

namespace densops {

// Sparse matrix over the field of univariate rational functions (Scalar),
// with string row labels kept for reporting. Column meaning is owned by the
// caller; columns are always eliminated in index order, so callers should
// order unknowns lexicographically by their natural key.
class ParamMatrix {
 public:
  explicit ParamMatrix(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int nrows() const { return static_cast<int>(rows_.size()); }

  // Entries must be sorted by column with no duplicates and no zeros.
  void add_row(std::vector<std::pair<int, Scalar>> entries, std::string label = "");
  // Convenience: accumulates arbitrary (col, coeff) pairs.
  void add_row_unsorted(std::vector<std::pair<int, Scalar>> entries,
                        std::string label = "");

  const std::vector<std::pair<int, Scalar>>& row(int r) const { return rows_[r]; }
  const std::string& row_label(int r) const { return labels_[r]; }

  // Evaluate every entry at parameter = value.
  ParamMatrix specialize(const Rat& value) const;

  ParamMatrix& stack(const ParamMatrix& other);

 private:
  int ncols_;
  std::vector<std::vector<std::pair<int, Scalar>>> rows_;
  std::vector<std::string> labels_;
};

// Result of a reduced-row-echelon elimination over Q(i)(t).
struct Echelon {
  int rank = 0;
  // Numerator polynomials of the pivots actually used (monic), in pivot
  // order. Rank can only drop at parameter values killing one of these.
  std::vector<Poly> pivots;
  // Nullspace basis, dense, one vector per free column, ordered by free
  // column index; entry normalization: free coordinate = 1.
  std::vector<std::vector<Scalar>> nullspace;
  // Pivot columns in elimination order.
  std::vector<int> pivot_cols;
};

Echelon eliminate(const ParamMatrix& m, bool want_nullspace = true);

int rank_of(const ParamMatrix& m);

// Solves M x = rhs; returns a particular solution or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve_particular(const ParamMatrix& m,
                                                    const std::vector<Scalar>& rhs);

// One irreducible (or unresolved) exceptional factor of a parametric system.
struct ExceptionalFactor {
  Poly factor;              // primitive integer coefficients, positive leading
  std::vector<Rat> roots;   // exact rational roots of the factor
  std::optional<int> specialized_dim;  // re-solved dimension at rational roots
  bool irreducible = true;  // false if we could not certify irreducibility
};

// Nullspace report of a parametric system: generic dimension and basis over
// Q(i)(t), plus the exceptional parameter locus (rational roots re-solved,
// irrational ones reported by their minimal polynomials, never evaluated).
struct SolveReport {
  int generic_dim = 0;
  std::vector<std::vector<Scalar>> basis;
  std::vector<ExceptionalFactor> exceptional;
};

SolveReport solve_with_loci(const ParamMatrix& m);

// Extracts the candidate exceptional factors (primitive, deduplicated,
// content/unit-free, real rational-point locus for Gaussian pivots) of an
// elimination. Shared by solve_with_loci and the cohomology locus scan.
std::vector<Poly> pivot_factors(const Echelon& e);

}  // namespace densops

#endif

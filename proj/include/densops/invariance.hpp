#ifndef DENSOPS_INVARIANCE_HPP
#define DENSOPS_INVARIANCE_HPP

#include <optional>

#include "densops/diffops.hpp"
#include "densops/linsolve.hpp"

namespace densops {

// Finite window onto an infinite-dimensional coefficient space.
struct Truncation {
  int op_order = -1;  // -1 = derived from the computation's targets
  int laurent = 6;    // max x-degree D
  int freq = 6;       // max frequency multiple F

  Truncation grown(int step) const {
    return Truncation{op_order < 0 ? op_order : op_order + step,
                      laurent + step, freq + step};
  }
};

enum class CoeffMode { constants, functions };

// Monomial window of the coefficient ring attached to a subalgebra: x-degrees
// in [-D or 0, D], frequency multiples of the algebra's step in [-F, F].
std::vector<FuncMono> func_window(const Subalgebra& g, int laurent, int freq);

// Column layout of a bilinear ansatz sum c_{i,j} phi^(i) psi^(j), columns
// ordered lexicographically by (i, j, monomial).
struct BilinAnsatz {
  int order = 0;
  Mode mode = Mode::line;
  CoeffMode coeff_mode = CoeffMode::constants;
  std::vector<FuncMono> window;  // functions mode only
  std::vector<std::pair<int, int>> pairs;

  int per_pair() const {
    return coeff_mode == CoeffMode::constants
               ? 1
               : static_cast<int>(window.size());
  }
  int ncols() const { return static_cast<int>(pairs.size()) * per_pair(); }
  // Basis operator for one column.
  BilinOp basis_op(int col, const Scalar& w1, const Scalar& w2,
                   const Scalar& dst) const;
  BilinOp op_from_vector(const std::vector<Scalar>& v, const Scalar& w1,
                         const Scalar& w2, const Scalar& dst) const;
};

// Full triangular ansatz (i + j <= order), or only i + j == order when
// homogeneous; `antidiagonal` restricts to the quantization shape.
BilinAnsatz bilinear_ansatz(int order, Mode mode,
                            CoeffMode cm = CoeffMode::constants,
                            std::vector<FuncMono> window = {},
                            bool homogeneous = false);

// Rows express that the invariance defect of the ansatz vanishes identically:
// for vect_formal the defect is expanded over jets of a formal field X; for a
// catalog algebra, over the concrete generators.
ParamMatrix invariance_system(const BilinAnsatz& ansatz, const Scalar& w1,
                              const Scalar& w2, const Scalar& mu,
                              const Subalgebra& g);

// Independent oracle: samples the value-level defect on monomial densities
// phi = x^p, psi = x^q (p, q <= order + 2) using Func arithmetic only.
ParamMatrix invariance_system_brute(const BilinAnsatz& ansatz, const Scalar& w1,
                                    const Scalar& w2, const Scalar& mu,
                                    const Subalgebra& g);

inline SolveReport solve_invariants(const ParamMatrix& m) {
  return solve_with_loci(m);
}

// Linear-operator counterpart: ansatz sum a_j psi^(j) for A in Hom(F_l, F_m).
struct LinAnsatz {
  int order = 0;
  Mode mode = Mode::line;
  CoeffMode coeff_mode = CoeffMode::constants;
  std::vector<FuncMono> window;

  int per_order() const {
    return coeff_mode == CoeffMode::constants
               ? 1
               : static_cast<int>(window.size());
  }
  int ncols() const { return (order + 1) * per_order(); }
  LinOp basis_op(int col, const Scalar& src, const Scalar& dst) const;
  LinOp op_from_vector(const std::vector<Scalar>& v, const Scalar& src,
                       const Scalar& dst) const;
};

ParamMatrix linop_invariance_system(const LinAnsatz& ansatz, const Scalar& src,
                                    const Scalar& dst, const Subalgebra& g);

// One row of the classification catalog: at fixed rational gamma, either a
// family valid for generic lambda or a single exceptional weight pair.
struct ClassifyFamily {
  int order = 0;
  Rat gamma;
  bool all_lambda = false;
  std::optional<Rat> lambda;
  int dim = 0;
  std::vector<std::string> basis;
};

struct ClassifyReport {
  std::string algebra;
  int order_max = 0;
  std::vector<Rat> grid;
  std::vector<ClassifyFamily> rows;
  // dims on the rational grid with mu = gamma + lambda + k:
  // grid_dims[k][a][b] for gamma = grid[a], lambda = grid[b].
  std::vector<std::vector<std::vector<int>>> grid_dims;
};

ClassifyReport classify_bilinear(const Subalgebra& g, int k_max,
                                 const std::vector<Rat>& grid);

std::vector<Rat> default_weight_grid();

}  // namespace densops

#endif

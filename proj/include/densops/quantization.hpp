#ifndef DENSOPS_QUANTIZATION_HPP
#define DENSOPS_QUANTIZATION_HPP

#include "densops/invariance.hpp"

namespace densops {

// Symbol-to-operator map F_{delta-k} -> D^k_{lambda,mu},
// a -> sum_j beta_j a^{(j)} d^{k-j}/dx^{k-j}; beta_0 = 1 unless zero.
struct QuantMap {
  int order = 0;
  Scalar lambda, mu;  // delta = mu - lambda
  std::vector<Scalar> beta;

  Scalar delta() const { return mu - lambda; }
  // As a bilinear operator B(a, psi) with weights (delta-k, lambda) -> mu.
  BilinOp as_bilin(Mode mode = Mode::line) const;
  std::string to_string(const std::string& var = "t") const;
};

// First-order equivariant symbol map; pole at delta = 1.
QuantMap symbol_map_order1(const Scalar& lambda, const Scalar& delta);

// Second-order projectively equivariant map; poles at delta = 2 and 3/2.
QuantMap symbol_map_order2(const Scalar& lambda, const Scalar& delta);

struct EquivarianceReport {
  bool equivariant = false;
  // Formal residual (g = vect) or the first nonzero generator residual.
  JetPoly residual{Mode::line};
  std::string witness;  // pretty-printed residual, empty when equivariant
};

EquivarianceReport check_equivariance(const QuantMap& q, const Subalgebra& g);

// All beta solving the equivariance conditions for g, with exceptional loci.
SolveReport solve_symbol_map(int k, const Scalar& lambda, const Scalar& mu,
                             const Subalgebra& g);

// The order-2 full quantization problem
// F_{delta-2} (+) F_{delta-1} (+) F_delta -> D^2_{lambda,mu} with the
// block-triangular constant ansatz; per-block solution spaces under g and
// under the full algebra of vector fields.
struct QuantBlock {
  int order = 0;
  int dim_g = 0;
  int dim_vect = 0;
  bool exists_g = false;     // normalizable (beta_0 != 0) solution under g
  bool exists_vect = false;
  bool spaces_equal = false;  // rigidity transfer for this block
  std::vector<std::vector<Scalar>> basis_g;
  std::string map_string;   // normalized map when it exists
  std::string obstruction;  // jet witness when it does not
};

struct FullQuantReport {
  Scalar lambda, mu;
  std::string algebra;
  bool exists = false;
  bool rigidity_transfer = false;  // all blocks: g-space == vect-space
  bool predicate = false;          // mu=1 && lambda!=-1, or mu!=2 && lambda=0
  bool predicate_agrees = false;
  std::vector<QuantBlock> blocks;
};

FullQuantReport full_quant_exists(const Rat& lambda, const Rat& mu,
                                  const Subalgebra& g);

}  // namespace densops

#endif

#ifndef DENSOPS_COHOMOLOGY_HPP
#define DENSOPS_COHOMOLOGY_HPP

#include "densops/invariance.hpp"

namespace densops {

// A 1-cochain with values in Hom_diff(F_lambda, F_mu): either one LinOp per
// generator of a finite-dimensional subalgebra, or a differential cochain
// c(X)psi = sum c_{i,j} X^(i) psi^(j) on all of Vect.
struct Cochain1 {
  enum class Kind { finite, differential };
  Kind kind = Kind::differential;
  Scalar lambda, mu;
  std::vector<LinOp> values;  // finite kind: indexed like g.generators
  // differential kind: weights (-1, lambda) -> mu
  BilinOp diff{Scalar(-1), Scalar(0), Scalar(0)};

  static Cochain1 finite(Scalar lambda, Scalar mu, std::vector<LinOp> values);
  static Cochain1 differential(BilinOp c);

  // Restriction of a differential cochain to concrete generators.
  Cochain1 restrict_to(const Subalgebra& g) const;

  std::string to_string(const std::string& var = "t") const;
};

// delta A: X -> L^{lambda,mu}_X A, in the complex matching `kind`.
Cochain1 coboundary(const LinOp& a, const Subalgebra& g);   // finite
Cochain1 coboundary_differential(const LinOp& a);           // differential

// Finite kind: L_{g_a} c_b - L_{g_b} c_a - c([g_a,g_b]); zero for all pairs
// iff c is a cocycle.
LinOp cocycle_defect_pair(const Cochain1& c, const Subalgebra& g, int a, int b);
bool is_finite_cocycle(const Cochain1& c, const Subalgebra& g);

// Differential kind: jet-formal L_X c(Y) - L_Y c(X) - c([X,Y]) in (X, Y, Psi).
JetPoly cocycle_defect_formal(const Cochain1& c);

// One truncation level of a cohomology computation.
struct TruncLevel {
  Truncation trunc;
  int dim_cocycles = 0;
  int dim_coboundaries = 0;  // dim (B ∩ span Z) actually subtracted
  int dim = 0;
};

struct CohomReport {
  std::string complex_name;
  Scalar lambda, mu;
  std::vector<TruncLevel> levels;
  std::optional<int> stabilized_dim;
  std::vector<Cochain1> representatives;  // at the last level
  // Candidate analysis lines (used by the relative computation).
  std::vector<std::string> notes;
};

// H^1 of a finite-dimensional catalog subalgebra with coefficients in
// truncated Hom_diff(F_lambda, F_mu) (Chevalley-Eilenberg, degree 1).
CohomReport h1_finite(const Subalgebra& g, const Rat& lambda, const Rat& mu,
                      Truncation t = {}, bool stabilize = true);

// Differential H^1 of Vect via the jet-formal cocycle identity; lambda may be
// the formal parameter, mu = lambda + delta.
CohomReport h1_vect_diff(const Scalar& lambda, const Rat& delta,
                         Truncation t = {}, bool stabilize = true,
                         Mode mode = Mode::line);

// Relative H^1(Vect, g): cochains vanishing on g (hence g-invariant), modulo
// coboundaries of g-invariant operators. Weights may involve the parameter.
CohomReport h1_relative(const Subalgebra& g, const Scalar& lambda,
                        const Scalar& mu, int order_window = -1);

// Irreducible factors of the parameter locus where the relative dimension can
// jump, at mu = lambda + delta with lambda formal.
struct LocusReport {
  int delta = 0;
  int generic_dim = 0;
  std::vector<ExceptionalFactor> factors;
};
LocusReport exceptional_locus_relative(const Subalgebra& g, int delta,
                                       int order_window = -1);

// Line-vs-circle comparison at mu = lambda: c1(X)psi = X' psi and
// c2(X)psi = X psi on the line vs the circle.
struct CircleVsLineReport {
  Rat lambda;
  Mode mode;
  bool c1_cocycle = false, c2_cocycle = false;
  // solutions (alpha, beta) for which alpha c1 + beta c2 is a coboundary of
  // an operator inside the search window
  int coboundary_combo_dim = 0;  // dim of that (alpha,beta) subspace
  bool c2_is_coboundary = false;
  std::optional<std::string> c2_primitive;  // the A with delta A = c2
  int class_dim = 0;                        // 2 - coboundary_combo_dim
};
CircleVsLineReport circle_vs_line(const Rat& lambda, Mode mode,
                                  Truncation t = {});

Cochain1 remark_cocycle_c1(const Scalar& lambda, Mode mode);  // X'psi
Cochain1 remark_cocycle_c2(const Scalar& lambda, Mode mode);  // X psi

}  // namespace densops

#endif

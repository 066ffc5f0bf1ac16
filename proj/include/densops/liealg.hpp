#ifndef DENSOPS_LIEALG_HPP
#define DENSOPS_LIEALG_HPP

#include <array>
#include <vector>

#include "densops/func.hpp"

namespace densops {

enum class AlgebraName { g0, a1, h0, l_n, k1, k2, vect_formal };

// A catalog subalgebra of vector fields, stored through the coefficient
// functions of its generators X d/dx. Closure under bracket is checked at
// construction. The frequency parameter s is normalized to 1 by default; the
// s = 2 variants exist as a regression for the normalization argument.
struct Subalgebra {
  AlgebraName name = AlgebraName::vect_formal;
  int n = 0;  // for l_n
  Mode mode = Mode::line;
  Rat s = Rat(1);
  std::vector<Func> generators;

  bool is_formal() const { return name == AlgebraName::vect_formal; }
  int dim() const { return static_cast<int>(generators.size()); }
  std::string label() const;

  // Frequency lattice step of the coefficient functions: i*s for k1,
  // s for k2/h0, none (0) otherwise.
  GaussRat freq_step() const;
  // Whether coefficient windows need negative x powers (l_n, n >= 1).
  bool needs_laurent() const { return name == AlgebraName::l_n && n >= 1; }
  // Max x-degree increase produced by acting with a generator.
  int degree_growth() const;
};

// [X, Y] = X Y' - X' Y on coefficient functions.
Func vf_bracket(const Func& x, const Func& y);

Subalgebra make_subalgebra(AlgebraName name, int n, Mode mode, Rat s = Rat(1));
// Parses labels: "g0", "a1", "h0", "l0", "l_2", "k1", "k2", "vect".
Subalgebra make_subalgebra(const std::string& label, Mode mode, Rat s = Rat(1));

// Exact expansion of f in the generator span; throws InternalError when f is
// not in the span (this is the closure oracle).
std::vector<Scalar> expand_in_span(const Subalgebra& g, const Func& f);

// c^k_{ij} with [g_i, g_j] = sum_k c^k_{ij} g_k.
struct StructureConstants {
  int dim = 0;
  std::vector<Rat> c;  // dim^3, index (i*dim + j)*dim + k
  const Rat& at(int i, int j, int k) const { return c[(i * dim + j) * dim + k]; }
  Rat& at(int i, int j, int k) { return c[(i * dim + j) * dim + k]; }
};

StructureConstants structure_constants(const Subalgebra& g);

// Killing form K_ab = tr(ad_a ad_b).
std::vector<Rat> killing_form(const StructureConstants& sc);

// Signature (positive, negative, zero) of a symmetric rational matrix,
// computed exactly by congruence diagonalization.
std::array<int, 3> symmetric_signature(std::vector<Rat> k, int dim);

std::vector<std::string> catalog_labels();

}  // namespace densops

#endif

#ifndef DENSOPS_DIFFOPS_HPP
#define DENSOPS_DIFFOPS_HPP

#include <map>

#include "densops/jets.hpp"
#include "densops/liealg.hpp"

namespace densops {

// A weighted density phi (dx)^weight, represented by its coefficient function.
struct Density {
  Scalar weight;
  Func coeff;

  Density(Scalar w, Func c) : weight(std::move(w)), coeff(std::move(c)) {}
  Mode mode() const { return coeff.mode(); }
  friend bool operator==(const Density& a, const Density& b) {
    return a.weight == b.weight && a.coeff == b.coeff;
  }
};

// Linear differential operator F_src -> F_dst, phi -> sum_j a_j phi^{(j)}.
class LinOp {
 public:
  LinOp(Scalar src, Scalar dst, Mode mode = Mode::line)
      : src_(std::move(src)), dst_(std::move(dst)), mode_(mode) {}

  static LinOp identity(const Scalar& w, Mode mode = Mode::line);
  static LinOp multiplication(const Func& m, const Scalar& src, const Scalar& dst);
  static LinOp d_dx(const Scalar& src, const Scalar& dst, Mode mode = Mode::line);

  const Scalar& src_weight() const { return src_; }
  const Scalar& dst_weight() const { return dst_; }
  Mode mode() const { return mode_; }

  // Order of the operator; -1 for the zero operator.
  int order() const { return static_cast<int>(a_.size()) - 1; }
  bool is_zero() const { return a_.empty(); }
  Func coeff(int j) const;
  void set_coeff(int j, const Func& f);
  const std::vector<Func>& coeffs() const { return a_; }

  Func apply_raw(const Func& phi) const;
  Density apply(const Density& d) const;

  friend LinOp operator+(const LinOp& a, const LinOp& b);
  friend LinOp operator-(const LinOp& a, const LinOp& b);
  LinOp scaled(const Scalar& s) const;
  friend bool operator==(const LinOp& a, const LinOp& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.a_ == b.a_;
  }

  // Sum_j a_j Psi^{(j)} as a jet expression in the given density slot.
  JetPoly as_jet_poly(Slot density_slot = Slot::Psi) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Scalar src_, dst_;
  Mode mode_;
  std::vector<Func> a_;
};

// Bilinear differential operator F_w1 (x) F_w2 -> F_dst,
// (phi, psi) -> sum c_{i,j} phi^{(i)} psi^{(j)}.
class BilinOp {
 public:
  BilinOp(Scalar w1, Scalar w2, Scalar dst, Mode mode = Mode::line)
      : w1_(std::move(w1)), w2_(std::move(w2)), dst_(std::move(dst)), mode_(mode) {}

  const Scalar& w1() const { return w1_; }
  const Scalar& w2() const { return w2_; }
  const Scalar& dst_weight() const { return dst_; }
  Mode mode() const { return mode_; }

  bool is_zero() const { return c_.empty(); }
  int order() const;  // max i+j, -1 for zero
  Func coeff(int i, int j) const;
  void set_coeff(int i, int j, const Func& f);
  const std::map<std::pair<int, int>, Func>& coeffs() const { return c_; }

  Density apply(const Density& phi, const Density& psi) const;
  Func apply_raw(const Func& phi, const Func& psi) const;

  friend BilinOp operator+(const BilinOp& a, const BilinOp& b);
  friend BilinOp operator-(const BilinOp& a, const BilinOp& b);
  BilinOp scaled(const Scalar& s) const;
  friend bool operator==(const BilinOp& a, const BilinOp& b) {
    return a.w1_ == b.w1_ && a.w2_ == b.w2_ && a.dst_ == b.dst_ && a.c_ == b.c_;
  }

  // True when the two operators span the same line (both nonzero and
  // proportional with identical weights).
  bool proportional_to(const BilinOp& other) const;

  JetPoly as_jet_poly(Slot s1 = Slot::Phi, Slot s2 = Slot::Psi) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  Scalar w1_, w2_, dst_;
  Mode mode_;
  std::map<std::pair<int, int>, Func> c_;
};

// --- module actions -------------------------------------------------------

// L_X phi = (X phi' + weight phi X') (dx)^weight.
Density lie_density(const Func& x, const Density& d);

// L_X A = L^mu_X o A - A o L^lambda_X, expanded to coefficient form.
LinOp lie_on_linop(const Func& x, const LinOp& a);

// A o B with the order bound order(A)+order(B).
LinOp compose_linop(const LinOp& a, const LinOp& b);

// --- invariance defects ----------------------------------------------------

// Jet-formal defect L^mu_X B(phi,psi) - B(L^w1 phi, psi) - B(phi, L^w2 psi)
// with a formal vector-field slot X; zero iff B is Vect-invariant.
JetPoly invariance_defect_formal(const BilinOp& b);

// Same with a concrete vector field substituted for X (jets in phi, psi only).
JetPoly invariance_defect(const BilinOp& b, const Func& x);

// Value-level defect, computed purely with Func arithmetic (independent
// oracle for the jet route).
Density invariance_defect_value(const BilinOp& b, const Func& x,
                                const Density& phi, const Density& psi);

// Jet-formal L^{lambda,mu}_X A as an expression in (X, Psi); this is the
// coboundary of A in the differential cochain complex.
JetPoly linop_lie_formal(const LinOp& a);

// --- named operators -------------------------------------------------------

// Poisson bracket {phi,psi} = w1 phi psi' - w2 phi' psi, output weight w1+w2+1.
BilinOp poisson(const Scalar& w1, const Scalar& w2, Mode mode = Mode::line);

// de Rham differential on weight-0 densities.
Density de_rham(const Density& d);
LinOp de_rham_op(Mode mode = Mode::line);

// The exceptional third-order invariant operator at weights (-2/3,-2/3)->5/3.
BilinOp grozman(Mode mode = Mode::line);

// Order-k projectively invariant bilinear operator (denominator-cleared);
// `resonant` is set when the clearing multiplier vanishes identically.
struct Transvectant {
  BilinOp op;
  bool resonant = false;
};
Transvectant transvectant(int k, const Scalar& w1, const Scalar& w2,
                          Mode mode = Mode::line);

}  // namespace densops

#endif

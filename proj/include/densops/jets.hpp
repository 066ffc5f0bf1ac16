#ifndef DENSOPS_JETS_HPP
#define DENSOPS_JETS_HPP

#include <array>
#include <cstdint>
#include <map>

#include "densops/func.hpp"

namespace densops {

// Formal slots of a multilinear jet expression: two vector-field arguments
// and two density arguments.
enum class Slot : int { X = 0, Y = 1, Phi = 2, Psi = 3 };

inline const char* slot_name(Slot s) {
  switch (s) {
    case Slot::X: return "X";
    case Slot::Y: return "Y";
    case Slot::Phi: return "phi";
    default: return "psi";
  }
}

// Product of jet variables, at most one per slot; ord[s] = -1 means the slot
// does not occur, otherwise the jet order (0 = the variable itself).
struct JetMono {
  std::array<int8_t, 4> ord{-1, -1, -1, -1};

  int order(Slot s) const { return ord[static_cast<int>(s)]; }
  bool active(Slot s) const { return order(s) >= 0; }
  unsigned mask() const {
    unsigned m = 0;
    for (int i = 0; i < 4; ++i)
      if (ord[i] >= 0) m |= 1u << i;
    return m;
  }
  JetMono with(Slot s, int order) const {
    JetMono k = *this;
    k.ord[static_cast<int>(s)] = static_cast<int8_t>(order);
    return k;
  }
  JetMono without(Slot s) const {
    JetMono k = *this;
    k.ord[static_cast<int>(s)] = -1;
    return k;
  }
  friend bool operator==(const JetMono& a, const JetMono& b) { return a.ord == b.ord; }
  friend bool operator<(const JetMono& a, const JetMono& b) { return a.ord < b.ord; }
};

// Multilinear polynomial in jet variables with Func coefficients. Every
// monomial contains each declared active slot exactly once; the zero
// polynomial is compatible with any active set.
class JetPoly {
 public:
  explicit JetPoly(Mode m = Mode::line) : mode_(m) {}

  static JetPoly zero(Mode m = Mode::line) { return JetPoly(m); }
  // A single jet variable slot^{(order)} with coefficient 1.
  static JetPoly var(Slot s, int order, Mode m = Mode::line);
  // A coefficient-only expression (no jet variables).
  static JetPoly of_func(const Func& f);

  Mode mode() const { return mode_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned active_mask() const { return mask_; }
  const std::map<JetMono, Func>& terms() const { return terms_; }

  friend JetPoly operator+(const JetPoly& a, const JetPoly& b);
  friend JetPoly operator-(const JetPoly& a, const JetPoly& b);
  // Product; the factors must involve disjoint slot sets (multilinearity).
  friend JetPoly operator*(const JetPoly& a, const JetPoly& b);
  JetPoly operator-() const;
  JetPoly scaled(const Scalar& s) const;
  JetPoly times_func(const Func& f) const;
  friend bool operator==(const JetPoly& a, const JetPoly& b) {
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

  // Total x-derivative: differentiates coefficients and raises jet orders.
  JetPoly total_derivative() const;

  // Lie derivative of this expression regarded as a density value of the
  // given weight, along the vector-field slot X (which must not occur):
  //   X * D(p) + weight * X' * p.
  JetPoly lie_value(Slot x, const Scalar& weight) const;

  // Replaces slot^{(i)} by the i-th jet of L_X(slot), slot carrying `weight`:
  //   sum_m C(i,m) [ X^{(m)} slot^{(i-m+1)} + weight X^{(m+1)} slot^{(i-m)} ].
  JetPoly lie_substitute(Slot s, const Scalar& weight, Slot x) const;

  // Replaces slot^{(i)} by [X,Y]^{(i)} with [X,Y] = X Y' - X' Y.
  JetPoly bracket_substitute(Slot s, Slot x, Slot y) const;

  // Concrete substitution: slot^{(i)} -> f^{(i)} folded into coefficients.
  JetPoly substitute(Slot s, const Func& f) const;

  JetPoly rename(Slot from, Slot to) const;

  // Complete duplicate-free coefficient extraction; reassembling the listed
  // (monomial, coefficient) pairs reproduces the polynomial.
  std::vector<std::pair<JetMono, Func>> collect() const;

  void add_term(const JetMono& k, const Func& c);

  std::string to_string(const std::string& var = "t") const;

 private:
  Mode mode_;
  unsigned mask_ = 0;
  std::map<JetMono, Func> terms_;
};

// The density action of a vector field on a weighted density, as a bilinear
// jet identity: X phi' + weight phi X'.
JetPoly jet_lie_density(const Scalar& weight, Slot vf, Slot density,
                        Mode m = Mode::line);

// The vector-field bracket X Y' - X' Y as a jet expression.
JetPoly jet_bracket(Slot x, Slot y, Mode m = Mode::line);

// Renders a jet monomial like "X'*phi''" (primes up to order 3, then ^(k)).
std::string jet_mono_string(const JetMono& k);

Scalar binomial(int n, int k);

}  // namespace densops

#endif

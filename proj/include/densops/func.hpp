#ifndef DENSOPS_FUNC_HPP
#define DENSOPS_FUNC_HPP

#include <map>

#include "densops/scalar.hpp"

namespace densops {

// Where a computation lives: functions on the line (arbitrary Laurent
// exponents and frequencies) or on the circle (periodic: no x powers,
// integer imaginary frequencies only).
enum class Mode { line, circle };

inline const char* mode_name(Mode m) { return m == Mode::line ? "line" : "circle"; }

// Monomial x^a * e^{b x}; (0,0) is the constant monomial.
struct FuncMono {
  long xexp = 0;
  GaussRat freq;

  friend bool operator==(const FuncMono& a, const FuncMono& b) {
    return a.xexp == b.xexp && a.freq == b.freq;
  }
  friend bool operator<(const FuncMono& a, const FuncMono& b) {
    if (a.xexp != b.xexp) return a.xexp < b.xexp;
    return a.freq < b.freq;
  }
};

// Finite linear combination of monomials x^a e^{bx} with Scalar coefficients.
// Closed under product and derivative; sin/cos/sinh/cosh are represented as
// complex exponentials and recognized again by the printer.
class Func {
 public:
  explicit Func(Mode m = Mode::line) : mode_(m) {}

  static Func zero(Mode m = Mode::line) { return Func(m); }
  static Func constant(Scalar c, Mode m = Mode::line);
  static Func one(Mode m = Mode::line) { return constant(Scalar(1), m); }
  static Func monomial(long xexp, GaussRat freq, Scalar coeff, Mode m = Mode::line);
  static Func x(Mode m = Mode::line) { return monomial(1, GaussRat(0), Scalar(1), m); }
  static Func x_pow(long a, Mode m = Mode::line) {
    return monomial(a, GaussRat(0), Scalar(1), m);
  }
  static Func exp(const GaussRat& freq, Mode m = Mode::line) {
    return monomial(0, freq, Scalar(1), m);
  }
  // Trigonometric/hyperbolic generators with frequency s (sin(s x) etc.).
  static Func sin(const Rat& s, Mode m);
  static Func cos(const Rat& s, Mode m);
  static Func sinh(const Rat& s, Mode m);
  static Func cosh(const Rat& s, Mode m);

  Mode mode() const { return mode_; }
  const std::map<FuncMono, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == FuncMono{});
  }
  Scalar constant_value() const;

  Scalar coeff(const FuncMono& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  friend Func operator+(const Func& f, const Func& g);
  friend Func operator-(const Func& f, const Func& g);
  friend Func operator*(const Func& f, const Func& g);
  Func operator-() const;
  Func scaled(const Scalar& s) const;
  friend bool operator==(const Func& f, const Func& g) {
    return f.mode_ == g.mode_ && f.terms_ == g.terms_;
  }
  friend bool operator!=(const Func& f, const Func& g) { return !(f == g); }

  // Exact derivative: x^a e^{bx} -> a x^{a-1} e^{bx} + b x^a e^{bx}.
  Func derivative() const;
  Func derivative(int n) const;

  Func conj() const;
  // A Func is real-valued iff term(a, conj b) = conj(term(a, b)) throughout.
  bool is_real() const;

  // Substitutes a rational value for the formal parameter in all coefficients.
  Func eval_param(const Rat& value) const;
  bool depends_on_param() const;

  void add_term(const FuncMono& k, const Scalar& c);

  std::string to_string(const std::string& var = "t") const;

 private:
  static void check_circle(const FuncMono& k);
  Mode mode_;
  std::map<FuncMono, Scalar> terms_;
};

inline void require_same_mode(const Func& f, const Func& g) {
  if (f.mode() != g.mode()) throw DomainError("Func: mode mismatch");
}

}  // namespace densops

#endif

#ifndef DENSOPS_SCALAR_HPP
#define DENSOPS_SCALAR_HPP

#include <optional>
#include <vector>

#include "densops/rational.hpp"

namespace densops {

// Dense univariate polynomial over the Gaussian rationals, in one formal
// parameter. Coefficients are stored low degree first with no zero leading
// coefficient (the zero polynomial has an empty coefficient vector).
class Poly {
 public:
  Poly() = default;
  Poly(GaussRat c) {  // NOLINT: implicit by design
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly param() { return Poly(std::vector<GaussRat>{GaussRat(0), GaussRat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const GaussRat& leading() const { return c_.back(); }
  const GaussRat& coeff(int i) const {
    static const GaussRat kZero{};
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : kZero;
  }
  const std::vector<GaussRat>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scaled(const GaussRat& s) const;
  Poly monic() const;  // divide by leading coefficient; zero stays zero
  Poly derivative() const;
  Poly conj() const;  // conjugate coefficients (parameter treated as real)

  // Euclidean division over the coefficient field; b must be nonzero.
  static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0

  GaussRat eval(const GaussRat& x) const;

  // For real-coefficient polynomials: primitive integer form with positive
  // leading coefficient (used for printing exceptional loci).
  Poly primitive_real() const;
  bool is_real() const;

  // Exact rational roots (real-coefficient polynomials; for Gaussian
  // coefficients the roots of gcd(re, im) are returned, i.e. exactly the
  // rational points where the polynomial vanishes).
  std::vector<Rat> rational_roots() const;

  // Squarefree part (poly / gcd(poly, poly')).
  Poly squarefree() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussRat> c_;
};

// Univariate rational function in one formal parameter with Gaussian-rational
// coefficients. Canonical form: denominator monic, gcd(num, den) = 1,
// zero is 0/1. Degree-0 values embed GaussRat (and hence Rat) exactly.
class Scalar {
 public:
  Scalar() : num_(), den_(GaussRat(1)) {}
  Scalar(long long n) : num_(GaussRat(Rat(n))), den_(GaussRat(1)) {}  // NOLINT
  Scalar(Rat r) : num_(GaussRat(std::move(r))), den_(GaussRat(1)) {}  // NOLINT
  Scalar(GaussRat g) : num_(std::move(g)), den_(GaussRat(1)) {}       // NOLINT
  Scalar(Poly num, Poly den);

  static Scalar param() { return Scalar(Poly::param(), Poly(GaussRat(1))); }
  static Scalar i() { return Scalar(GaussRat::i()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const {
    return den_.degree() == 0 && num_.degree() == 0 && num_.coeff(0).is_one();
  }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Requires is_constant().
  GaussRat constant() const {
    if (!is_constant()) throw DomainError("Scalar: not a constant");
    return num_.is_zero() ? GaussRat(0) : num_.coeff(0);
  }
  bool is_rational() const { return is_constant() && constant().is_real(); }
  Rat rational() const {
    GaussRat c = constant();
    if (!c.is_real()) throw DomainError("Scalar: not real");
    return c.re();
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar inv() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Deterministic ordering key (not a numeric order).
  friend bool operator<(const Scalar& a, const Scalar& b);

  Scalar conj() const;
  bool is_real() const { return num_.is_real() && den_.is_real(); }

  // Evaluation homomorphism at parameter = x; throws on a pole.
  GaussRat eval(const GaussRat& x) const;
  Scalar eval_scalar(const Rat& x) const { return Scalar(eval(GaussRat(x))); }

  bool depends_on_param() const { return num_.degree() > 0 || den_.degree() > 0; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  Poly num_, den_;
};

// Parses an exact weight: "p/q" or the formal parameter name.
Scalar parse_weight(std::string_view text, std::string_view param_name = "param");

}  // namespace densops

#endif

#ifndef DENSOPS_RATIONAL_HPP
#define DENSOPS_RATIONAL_HPP

#include <gmp.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace densops {

/// Raised for mathematical domain violations (mode mismatch, pole, weight
/// mismatch). The CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant is violated (e.g. a catalog algebra
/// failing its closure check). The CLI maps these to exit code 3.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Exact rational number, always in canonical form: gcd(num, den) = 1,
// den >= 1, zero is 0/1. Backed by GMP's mpq.
class Rat {
 public:
  Rat() { mpq_init(q_); }
  Rat(long long n) {  // NOLINT: implicit by design
    mpq_init(q_);
    set_ll(n, 1);
  }
  Rat(long long num, long long den) {
    mpq_init(q_);
    if (den == 0) throw DomainError("Rat: zero denominator");
    set_ll(num, den);
  }
  Rat(const Rat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rat() { mpq_clear(q_); }

  // Parses "p", "-p/q" or "p/q"; exact, no whitespace.
  static Rat parse(std::string_view s);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  int sgn() const { return mpq_sgn(q_); }

  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  // Valid only if is_integer() and the value fits in a long.
  long to_long() const {
    if (!is_integer() || !mpz_fits_slong_p(mpq_numref(q_)))
      throw DomainError("Rat: not a machine integer");
    return mpz_get_si(mpq_numref(q_));
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    Rat r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw DomainError("Rat: division by zero");
    Rat r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Rat operator-() const {
    Rat r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rat& operator+=(const Rat& b) {
    mpq_add(q_, q_, b.q_);
    return *this;
  }
  Rat& operator-=(const Rat& b) {
    mpq_sub(q_, q_, b.q_);
    return *this;
  }
  Rat& operator*=(const Rat& b) {
    mpq_mul(q_, q_, b.q_);
    return *this;
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rat& a, const Rat& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }

  Rat abs() const {
    Rat r;
    mpq_abs(r.q_, q_);
    return r;
  }

  // Numerator / denominator as integer Rats.
  Rat numerator() const {
    Rat r;
    mpq_set_z(r.q_, mpq_numref(q_));
    return r;
  }
  Rat denominator() const {
    Rat r;
    mpq_set_z(r.q_, mpq_denref(q_));
    return r;
  }
  // gcd / lcm of integer Rats (nonnegative result).
  static Rat int_gcd(const Rat& a, const Rat& b) {
    if (!a.is_integer() || !b.is_integer())
      throw DomainError("Rat: int_gcd on non-integers");
    Rat r;
    mpz_gcd(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
    return r;
  }
  static Rat int_lcm(const Rat& a, const Rat& b) {
    if (!a.is_integer() || !b.is_integer())
      throw DomainError("Rat: int_lcm on non-integers");
    Rat r;
    mpz_lcm(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
    return r;
  }
  Rat inv() const {
    if (is_zero()) throw DomainError("Rat: inverse of zero");
    Rat r;
    mpq_inv(r.q_, q_);
    return r;
  }

  // Exact decimal-free rendering "p" or "p/q".
  std::string to_string() const;

  // Numerator / denominator as decimal strings (den >= 1).
  std::string num_string() const;
  std::string den_string() const;

 private:
  void set_ll(long long num, long long den);
  mpq_t q_;
};

inline Rat rat(long long n, long long d = 1) { return Rat(n, d); }

// Gaussian rational a + b*i, componentwise canonical.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT: implicit by design
  GaussRat(long long re) : re_(re) {}       // NOLINT
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  Rat norm() const { return re_ * re_ + im_ * im_; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    if (a.im_.is_zero() && b.im_.is_zero())
      return GaussRat(a.re_ * b.re_);
    return GaussRat(a.re_ * b.re_ - a.im_ * b.im_,
                    a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    if (b.is_zero()) throw DomainError("GaussRat: division by zero");
    if (b.im_.is_zero()) return GaussRat(a.re_ / b.re_, a.im_ / b.re_);
    Rat n = b.norm();
    GaussRat c = a * b.conj();
    return GaussRat(c.re_ / n, c.im_ / n);
  }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& b) {
    re_ += b.re_;
    im_ += b.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& b) {
    re_ -= b.re_;
    im_ -= b.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }
  // Lexicographic; used only as an ordering key.
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  GaussRat inv() const { return GaussRat(Rat(1)) / *this; }

  std::string to_string() const;

 private:
  Rat re_, im_;
};

inline GaussRat grat(long long n, long long d = 1) { return GaussRat(Rat(n, d)); }

}  // namespace densops

#endif

#include <doctest.h>

#include <random>

#include "densops/func.hpp"

using namespace densops;

namespace {

Rat rand_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-8, 8), den(1, 6);
  return Rat(num(rng), den(rng));
}

Func rand_func(std::mt19937& rng, Mode mode = Mode::line) {
  std::uniform_int_distribution<int> nterms(1, 3), xe(0, 3), fr(-2, 2);
  Func f(mode);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Rat c = rand_rat(rng);
    if (c.is_zero()) c = Rat(1);
    long a = mode == Mode::circle ? 0 : xe(rng);
    GaussRat b = mode == Mode::circle ? GaussRat(Rat(0), Rat(fr(rng)))
                                      : GaussRat(Rat(fr(rng)), Rat(fr(rng)));
    f.add_term(FuncMono{a, b}, Scalar(c));
  }
  return f;
}

}  // namespace

TEST_CASE("rational arithmetic canonical form") {
  Rat a(6, 4);
  CHECK(a == Rat(3, 2));
  CHECK(a.num_string() == "3");
  CHECK(a.den_string() == "2");
  CHECK(Rat(0, 5).to_string() == "0");
  CHECK(Rat::parse("-10/15") == Rat(-2, 3));
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK_THROWS_AS(Rat(1, 0), DomainError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
}

TEST_CASE("gaussian rationals") {
  GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(Rat(-1)));
  GaussRat z(Rat(2, 3), Rat(-1, 2));
  CHECK(z.conj().conj() == z);
  CHECK((z / z).is_one());
  CHECK((z * z.conj()).is_real());
}

TEST_CASE("scalar field laws and evaluation homomorphism") {
  Scalar t = Scalar::param();
  Scalar p = t * t + Scalar(Rat(1, 2));
  Scalar q = t - Scalar(3);
  CHECK((p / q) * (q / p) == Scalar(1));
  std::mt19937 rng(7);
  for (int k = 0; k < 20; ++k) {
    Rat r = rand_rat(rng);
    GaussRat x(r);
    if ((q.eval(x)).is_zero()) continue;
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
  }
  // degree-0 scalars embed Rat exactly
  Scalar half(Rat(1, 2));
  CHECK(half.is_rational());
  CHECK(half.rational() == Rat(1, 2));
}

TEST_CASE("scalar canonical form: monic denominator, reduced") {
  Scalar t = Scalar::param();
  Scalar s = (t * t - Scalar(1)) / (Scalar(2) * t - Scalar(2));
  // (t^2-1)/(2t-2) = (t+1)/2
  CHECK(s.den().degree() == 0);
  CHECK(s.num().degree() == 1);
  CHECK(s.eval(GaussRat(Rat(3))) == GaussRat(Rat(2)));
}

TEST_CASE("func products: exponent and frequency addition") {
  Func x = Func::x();
  CHECK((x * x) == Func::x_pow(2));
  Func s = Func::sin(Rat(1), Mode::line), c = Func::cos(Rat(1), Mode::line);
  CHECK((s * s + c * c) == Func::one());
  Func e = Func::exp(GaussRat(Rat(1)));
  Func em = Func::exp(GaussRat(Rat(-1)));
  CHECK((e * em) == Func::one());
}

TEST_CASE("func derivative") {
  Func s = Func::sin(Rat(1), Mode::line), c = Func::cos(Rat(1), Mode::line);
  CHECK(s.derivative() == c);
  CHECK(Func::x_pow(2).derivative() == Func::x().scaled(Scalar(2)));
  Func xe = Func::x() * Func::exp(GaussRat(Rat(1)));
  CHECK(xe.derivative() == Func::exp(GaussRat(Rat(1))) + xe);
  CHECK(Func::cosh(Rat(1), Mode::line).derivative() ==
        Func::sinh(Rat(1), Mode::line));
}

TEST_CASE("trig constructors via complex exponentials") {
  Func s = Func::sin(Rat(1), Mode::circle);
  CHECK(s.coeff(FuncMono{0, GaussRat::i()}) ==
        Scalar(GaussRat(Rat(0), Rat(-1, 2))));
  CHECK(s.coeff(FuncMono{0, -GaussRat::i()}) ==
        Scalar(GaussRat(Rat(0), Rat(1, 2))));
  Func ch = Func::cosh(Rat(1), Mode::line);
  CHECK(ch.coeff(FuncMono{0, GaussRat(Rat(1))}) == Scalar(Rat(1, 2)));
  CHECK(ch.coeff(FuncMono{0, GaussRat(Rat(-1))}) == Scalar(Rat(1, 2)));
}

TEST_CASE("circle mode constraints") {
  CHECK_THROWS_AS(Func::x(Mode::circle), DomainError);
  CHECK_THROWS_AS(Func::sinh(Rat(1), Mode::circle), DomainError);
  CHECK_THROWS_AS(Func::sin(Rat(1, 2), Mode::circle), DomainError);
  CHECK_NOTHROW(Func::sin(Rat(2), Mode::circle));
  Func a = Func::sin(Rat(1), Mode::circle), b = Func::cos(Rat(2), Mode::circle);
  CHECK_THROWS_AS((void)(a * Func::one(Mode::line)), DomainError);
  CHECK_NOTHROW((void)(a * b));
}

TEST_CASE("Leibniz rule on randomized pairs") {
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    Func f = rand_func(rng), g = rand_func(rng);
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
  }
}

TEST_CASE("ring laws on randomized triples") {
  std::mt19937 rng(13);
  for (int k = 0; k < 30; ++k) {
    Func f = rand_func(rng), g = rand_func(rng), h = rand_func(rng);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f + g) + h == f + (g + h));
  }
}

TEST_CASE("realness closed under product and derivative") {
  std::mt19937 rng(17);
  for (int k = 0; k < 30; ++k) {
    // real combinations of sin/cos/x powers
    Func f = Func::sin(Rat(1), Mode::line).scaled(Scalar(rand_rat(rng))) +
             Func::cos(Rat(2), Mode::line).scaled(Scalar(rand_rat(rng))) +
             Func::x_pow(2).scaled(Scalar(rand_rat(rng)));
    Func g = Func::cosh(Rat(1), Mode::line).scaled(Scalar(rand_rat(rng))) +
             Func::x().scaled(Scalar(rand_rat(rng)));
    CHECK(f.is_real());
    CHECK(g.is_real());
    CHECK((f * g).is_real());
    CHECK(f.derivative().is_real());
  }
}

TEST_CASE("rendering is decimal-free and recovers trig") {
  Func s = Func::sin(Rat(1), Mode::line);
  CHECK(s.to_string() == "sin(x)");
  Func m = Func::cos(Rat(2), Mode::line).scaled(Scalar(Rat(3, 2)));
  CHECK(m.to_string() == "3/2*cos(2*x)");
  CHECK(Scalar(Rat(-7, 3)).to_string() == "-7/3");
}

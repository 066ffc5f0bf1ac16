#include "densops/func.hpp"

namespace densops {

void Func::check_circle(const FuncMono& k) {
  if (k.xexp != 0)
    throw DomainError("Func: x powers are not periodic (circle mode)");
  if (!k.freq.re().is_zero() || !k.freq.im().is_integer())
    throw DomainError("Func: circle mode requires integer imaginary frequency");
}

void Func::add_term(const FuncMono& k, const Scalar& c) {
  if (c.is_zero()) return;
  if (mode_ == Mode::circle) check_circle(k);
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Func Func::constant(Scalar c, Mode m) {
  Func f(m);
  f.add_term(FuncMono{}, c);
  return f;
}

Func Func::monomial(long xexp, GaussRat freq, Scalar coeff, Mode m) {
  Func f(m);
  f.add_term(FuncMono{xexp, std::move(freq)}, coeff);
  return f;
}

Func Func::sin(const Rat& s, Mode m) {
  // sin(sx) = -i/2 e^{isx} + i/2 e^{-isx}
  Func f(m);
  GaussRat is(Rat(0), s);
  f.add_term(FuncMono{0, is}, Scalar(GaussRat(Rat(0), Rat(-1, 2))));
  f.add_term(FuncMono{0, -is}, Scalar(GaussRat(Rat(0), Rat(1, 2))));
  return f;
}

Func Func::cos(const Rat& s, Mode m) {
  Func f(m);
  GaussRat is(Rat(0), s);
  f.add_term(FuncMono{0, is}, Scalar(Rat(1, 2)));
  f.add_term(FuncMono{0, -is}, Scalar(Rat(1, 2)));
  return f;
}

Func Func::sinh(const Rat& s, Mode m) {
  Func f(m);
  f.add_term(FuncMono{0, GaussRat(s)}, Scalar(Rat(1, 2)));
  f.add_term(FuncMono{0, GaussRat(-s)}, Scalar(Rat(-1, 2)));
  return f;
}

Func Func::cosh(const Rat& s, Mode m) {
  Func f(m);
  f.add_term(FuncMono{0, GaussRat(s)}, Scalar(Rat(1, 2)));
  f.add_term(FuncMono{0, GaussRat(-s)}, Scalar(Rat(1, 2)));
  return f;
}

Scalar Func::constant_value() const {
  if (!is_constant()) throw DomainError("Func: not a constant");
  return terms_.empty() ? Scalar() : terms_.begin()->second;
}

Func operator+(const Func& f, const Func& g) {
  require_same_mode(f, g);
  Func out = f;
  for (const auto& [k, c] : g.terms_) out.add_term(k, c);
  return out;
}

Func operator-(const Func& f, const Func& g) {
  require_same_mode(f, g);
  Func out = f;
  for (const auto& [k, c] : g.terms_) out.add_term(k, -c);
  return out;
}

Func operator*(const Func& f, const Func& g) {
  require_same_mode(f, g);
  Func out(f.mode_);
  for (const auto& [ka, ca] : f.terms_)
    for (const auto& [kb, cb] : g.terms_)
      out.add_term(FuncMono{ka.xexp + kb.xexp, ka.freq + kb.freq}, ca * cb);
  return out;
}

Func Func::operator-() const {
  Func out(mode_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

Func Func::scaled(const Scalar& s) const {
  Func out(mode_);
  if (s.is_zero()) return out;
  for (const auto& [k, c] : terms_) out.add_term(k, c * s);
  return out;
}

Func Func::derivative() const {
  Func out(mode_);
  for (const auto& [k, c] : terms_) {
    if (k.xexp != 0)
      out.add_term(FuncMono{k.xexp - 1, k.freq}, c * Scalar(Rat(k.xexp)));
    if (!k.freq.is_zero()) out.add_term(k, c * Scalar(k.freq));
  }
  return out;
}

Func Func::derivative(int n) const {
  Func out = *this;
  for (int i = 0; i < n; ++i) out = out.derivative();
  return out;
}

Func Func::conj() const {
  Func out(mode_);
  for (const auto& [k, c] : terms_)
    out.add_term(FuncMono{k.xexp, k.freq.conj()}, c.conj());
  return out;
}

bool Func::is_real() const { return conj() == *this; }

Func Func::eval_param(const Rat& value) const {
  Func out(mode_);
  for (const auto& [k, c] : terms_)
    out.add_term(k, Scalar(c.eval(GaussRat(value))));
  return out;
}

bool Func::depends_on_param() const {
  for (const auto& [k, c] : terms_)
    if (c.depends_on_param()) return true;
  return false;
}

namespace {

std::string coeff_str(const Scalar& c, const std::string& var, bool* negated) {
  *negated = false;
  if (c.is_constant() && c.constant().is_real() && c.constant().re().sgn() < 0) {
    *negated = true;
    return (-c).to_string(var);
  }
  std::string s = c.to_string(var);
  if (!c.is_constant() || !c.constant().is_real()) s = "(" + s + ")";
  return s;
}

void append_term(std::string& out, const std::string& coeff, bool negated,
                 const std::string& body) {
  std::string c = coeff;
  bool trivial = (c == "1");
  if (out.empty()) {
    if (negated) out += "-";
  } else {
    out += negated ? " - " : " + ";
  }
  if (body.empty()) {
    out += c;
    return;
  }
  if (!trivial) out += c + "*";
  out += body;
}

std::string freq_factor(const Rat& beta) {
  if (beta.is_one()) return "x";
  return beta.to_string() + "*x";
}

}  // namespace

std::string Func::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  std::map<FuncMono, Scalar> rest(terms_.begin(), terms_.end());
  while (!rest.empty()) {
    auto it = rest.begin();
    FuncMono k = it->first;
    Scalar c = it->second;
    rest.erase(it);
    std::string xpart;
    if (k.xexp == 1)
      xpart = "x";
    else if (k.xexp != 0)
      xpart = "x^" + std::to_string(k.xexp);

    // Pair e^{i b x} with e^{-i b x} to print sin/cos when the result is real.
    if (k.freq.re().is_zero() && !k.freq.im().is_zero()) {
      FuncMono mirror{k.xexp, -k.freq};
      auto jt = rest.find(mirror);
      if (jt != rest.end() && jt->second == c.conj() && c.is_constant()) {
        // work with the positive-frequency coefficient
        Rat beta = k.freq.im();
        GaussRat cc = c.constant();
        if (beta.sgn() < 0) {
          beta = -beta;
          cc = jt->second.constant();
        }
        Rat pc = cc.re() * Rat(2);   // cos coefficient
        Rat ps = -cc.im() * Rat(2);  // sin coefficient
        rest.erase(jt);
        std::string pre = xpart.empty() ? "" : xpart + "*";
        if (!pc.is_zero()) {
          bool neg = pc.sgn() < 0;
          append_term(out, (neg ? -pc : pc).to_string(), neg,
                      pre + "cos(" + freq_factor(beta) + ")");
        }
        if (!ps.is_zero()) {
          bool neg = ps.sgn() < 0;
          append_term(out, (neg ? -ps : ps).to_string(), neg,
                      pre + "sin(" + freq_factor(beta) + ")");
        }
        continue;
      }
    }

    std::string body = xpart;
    if (!k.freq.is_zero()) {
      std::string fs = k.freq.to_string();
      std::string e;
      if (fs == "1")
        e = "e^(x)";
      else if (fs == "-1")
        e = "e^(-x)";
      else
        e = "e^((" + fs + ")*x)";
      body = body.empty() ? e : body + "*" + e;
    }
    bool neg;
    std::string cs = coeff_str(c, var, &neg);
    append_term(out, cs, neg, body);
  }
  return out;
}

}  // namespace densops

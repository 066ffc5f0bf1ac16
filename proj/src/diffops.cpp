#include "densops/diffops.hpp"

namespace densops {

namespace {

std::string weight_str(const Scalar& s, const std::string& var) {
  std::string w = s.to_string(var);
  return w.find(' ') == std::string::npos ? w : "(" + w + ")";
}

}  // namespace

void LinOp::trim() {
  while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
}

LinOp LinOp::identity(const Scalar& w, Mode mode) {
  LinOp a(w, w, mode);
  a.set_coeff(0, Func::one(mode));
  return a;
}

LinOp LinOp::multiplication(const Func& m, const Scalar& src, const Scalar& dst) {
  LinOp a(src, dst, m.mode());
  a.set_coeff(0, m);
  return a;
}

LinOp LinOp::d_dx(const Scalar& src, const Scalar& dst, Mode mode) {
  LinOp a(src, dst, mode);
  a.set_coeff(1, Func::one(mode));
  return a;
}

Func LinOp::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(a_.size())) return Func::zero(mode_);
  return a_[j];
}

void LinOp::set_coeff(int j, const Func& f) {
  if (f.mode() != mode_) throw DomainError("LinOp: coefficient mode mismatch");
  if (j >= static_cast<int>(a_.size())) a_.resize(j + 1, Func::zero(mode_));
  a_[j] = f;
  trim();
}

Func LinOp::apply_raw(const Func& phi) const {
  Func out = Func::zero(mode_);
  Func d = phi;
  for (int j = 0; j < static_cast<int>(a_.size()); ++j) {
    out = out + a_[j] * d;
    d = d.derivative();
  }
  return out;
}

Density LinOp::apply(const Density& d) const {
  if (d.weight != src_) throw DomainError("LinOp: source weight mismatch");
  if (d.mode() != mode_) throw DomainError("LinOp: mode mismatch");
  return Density(dst_, apply_raw(d.coeff));
}

LinOp operator+(const LinOp& a, const LinOp& b) {
  if (a.src_ != b.src_ || a.dst_ != b.dst_)
    throw DomainError("LinOp: weight mismatch in sum");
  if (a.mode_ != b.mode_) throw DomainError("LinOp: mode mismatch");
  LinOp out(a.src_, a.dst_, a.mode_);
  int n = std::max(a.order(), b.order());
  for (int j = 0; j <= n; ++j) out.set_coeff(j, a.coeff(j) + b.coeff(j));
  return out;
}

LinOp operator-(const LinOp& a, const LinOp& b) { return a + b.scaled(Scalar(-1)); }

LinOp LinOp::scaled(const Scalar& s) const {
  LinOp out(src_, dst_, mode_);
  for (int j = 0; j <= order(); ++j) out.set_coeff(j, a_[j].scaled(s));
  return out;
}

JetPoly LinOp::as_jet_poly(Slot density_slot) const {
  JetPoly p(mode_);
  for (int j = 0; j <= order(); ++j)
    if (!a_[j].is_zero())
      p = p + JetPoly::var(density_slot, j, mode_).times_func(a_[j]);
  return p;
}

std::string LinOp::to_string(const std::string& var) const {
  std::string body;
  for (int j = order(); j >= 0; --j) {
    if (a_[j].is_zero()) continue;
    if (!body.empty()) body += " + ";
    std::string c = a_[j].to_string(var);
    std::string d = j == 0 ? "" : (j == 1 ? "d/dx" : "d^" + std::to_string(j) + "/dx^" + std::to_string(j));
    if (d.empty())
      body += c;
    else if (c == "1")
      body += d;
    else
      body += "(" + c + ")*" + d;
  }
  if (body.empty()) body = "0";
  return body + " : F_" + weight_str(src_, var) + " -> F_" + weight_str(dst_, var);
}

int BilinOp::order() const {
  int k = -1;
  for (const auto& [ij, c] : c_) k = std::max(k, ij.first + ij.second);
  return k;
}

Func BilinOp::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Func::zero(mode_) : it->second;
}

void BilinOp::set_coeff(int i, int j, const Func& f) {
  if (f.mode() != mode_) throw DomainError("BilinOp: coefficient mode mismatch");
  if (f.is_zero())
    c_.erase({i, j});
  else
    c_[{i, j}] = f;
}

Func BilinOp::apply_raw(const Func& phi, const Func& psi) const {
  Func out = Func::zero(mode_);
  for (const auto& [ij, c] : c_)
    out = out + c * phi.derivative(ij.first) * psi.derivative(ij.second);
  return out;
}

Density BilinOp::apply(const Density& phi, const Density& psi) const {
  if (phi.weight != w1_ || psi.weight != w2_)
    throw DomainError("BilinOp: argument weight mismatch");
  if (phi.mode() != mode_ || psi.mode() != mode_)
    throw DomainError("BilinOp: mode mismatch");
  return Density(dst_, apply_raw(phi.coeff, psi.coeff));
}

BilinOp operator+(const BilinOp& a, const BilinOp& b) {
  if (a.w1_ != b.w1_ || a.w2_ != b.w2_ || a.dst_ != b.dst_)
    throw DomainError("BilinOp: weight mismatch in sum");
  if (a.mode_ != b.mode_) throw DomainError("BilinOp: mode mismatch");
  BilinOp out = a;
  for (const auto& [ij, c] : b.c_)
    out.set_coeff(ij.first, ij.second, out.coeff(ij.first, ij.second) + c);
  return out;
}

BilinOp operator-(const BilinOp& a, const BilinOp& b) {
  return a + b.scaled(Scalar(-1));
}

BilinOp BilinOp::scaled(const Scalar& s) const {
  BilinOp out(w1_, w2_, dst_, mode_);
  if (s.is_zero()) return out;
  for (const auto& [ij, c] : c_) out.c_[ij] = c.scaled(s);
  return out;
}

bool BilinOp::proportional_to(const BilinOp& other) const {
  if (is_zero() || other.is_zero()) return false;
  if (w1_ != other.w1_ || w2_ != other.w2_ || dst_ != other.dst_) return false;
  // ratio from the first stored coefficient
  auto it = c_.begin();
  Func oc = other.coeff(it->first.first, it->first.second);
  if (oc.is_zero()) return false;
  // both coefficients must be single-monomial-compatible: use leading terms
  const auto& [k0, s0] = *it->second.terms().begin();
  Scalar ratio = oc.coeff(k0) / s0;
  if (ratio.is_zero()) return false;
  return other == this->scaled(ratio);
}

JetPoly BilinOp::as_jet_poly(Slot s1, Slot s2) const {
  JetPoly p(mode_);
  for (const auto& [ij, c] : c_)
    p = p + (JetPoly::var(s1, ij.first, mode_) * JetPoly::var(s2, ij.second, mode_))
                .times_func(c);
  return p;
}

std::string BilinOp::to_string(const std::string& var) const {
  std::string body;
  auto jets = [](const char* name, int n) {
    std::string s = name;
    if (n > 0 && n <= 3)
      s += std::string(n, '\'');
    else if (n > 3)
      s += "^(" + std::to_string(n) + ")";
    return s;
  };
  for (const auto& [ij, c] : c_) {
    std::string cs = c.to_string(var);
    bool neg = !cs.empty() && cs[0] == '-' && c.terms().size() == 1 &&
               c.terms().begin()->first == FuncMono{} &&
               c.terms().begin()->second.is_constant();
    if (neg) cs = cs.substr(1);
    body += body.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono = jets("phi", ij.first) + "*" + jets("psi", ij.second);
    if (cs == "1")
      body += mono;
    else {
      bool simple = c.terms().size() == 1 && c.terms().begin()->first == FuncMono{};
      body += (simple ? cs : "(" + cs + ")") + "*" + mono;
    }
  }
  if (body.empty()) body = "0";
  return body + " : F_" + weight_str(w1_, var) + " (x) F_" + weight_str(w2_, var) +
         " -> F_" + weight_str(dst_, var);
}

// --- actions ----------------------------------------------------------------

Density lie_density(const Func& x, const Density& d) {
  require_same_mode(x, d.coeff);
  return Density(d.weight,
                 x * d.coeff.derivative() + d.coeff.scaled(d.weight) * x.derivative());
}

LinOp lie_on_linop(const Func& x, const LinOp& a) {
  if (x.mode() != a.mode()) throw DomainError("lie_on_linop: mode mismatch");
  const Scalar& lam = a.src_weight();
  const Scalar& mu = a.dst_weight();
  LinOp out(lam, mu, a.mode());
  Func xp = x.derivative();
  // L^mu_X o A
  for (int j = 0; j <= a.order(); ++j) {
    const Func aj = a.coeff(j);
    if (aj.is_zero()) continue;
    out.set_coeff(j, out.coeff(j) + x * aj.derivative() + (xp * aj).scaled(mu));
    out.set_coeff(j + 1, out.coeff(j + 1) + x * aj);
  }
  // - A o L^lambda_X
  for (int j = 0; j <= a.order(); ++j) {
    const Func aj = a.coeff(j);
    if (aj.is_zero()) continue;
    Func xm = x;  // X^{(m)}
    for (int m = 0; m <= j; ++m) {
      Scalar binom = binomial(j, m);
      out.set_coeff(j - m + 1, out.coeff(j - m + 1) - (aj * xm).scaled(binom));
      out.set_coeff(j - m, out.coeff(j - m) -
                               (aj * xm.derivative()).scaled(binom * lam));
      xm = xm.derivative();
    }
  }
  return out;
}

LinOp compose_linop(const LinOp& a, const LinOp& b) {
  if (a.src_weight() != b.dst_weight())
    throw DomainError("compose_linop: weight chain mismatch");
  if (a.mode() != b.mode()) throw DomainError("compose_linop: mode mismatch");
  LinOp out(b.src_weight(), a.dst_weight(), a.mode());
  for (int i = 0; i <= a.order(); ++i) {
    const Func ai = a.coeff(i);
    if (ai.is_zero()) continue;
    for (int j = 0; j <= b.order(); ++j) {
      const Func bj = b.coeff(j);
      if (bj.is_zero()) continue;
      Func bm = bj;  // b_j^{(m)}
      for (int m = 0; m <= i; ++m) {
        out.set_coeff(i - m + j,
                      out.coeff(i - m + j) + (ai * bm).scaled(binomial(i, m)));
        bm = bm.derivative();
      }
    }
  }
  return out;
}

// --- defects ----------------------------------------------------------------

JetPoly invariance_defect_formal(const BilinOp& b) {
  JetPoly e = b.as_jet_poly(Slot::Phi, Slot::Psi);
  return e.lie_value(Slot::X, b.dst_weight()) -
         e.lie_substitute(Slot::Phi, b.w1(), Slot::X) -
         e.lie_substitute(Slot::Psi, b.w2(), Slot::X);
}

JetPoly invariance_defect(const BilinOp& b, const Func& x) {
  return invariance_defect_formal(b).substitute(Slot::X, x);
}

Density invariance_defect_value(const BilinOp& b, const Func& x,
                                const Density& phi, const Density& psi) {
  Density lhs = lie_density(x, b.apply(phi, psi));
  Density r1 = b.apply(lie_density(x, phi), psi);
  Density r2 = b.apply(phi, lie_density(x, psi));
  return Density(b.dst_weight(), lhs.coeff - r1.coeff - r2.coeff);
}

JetPoly linop_lie_formal(const LinOp& a) {
  JetPoly e = a.as_jet_poly(Slot::Psi);
  return e.lie_value(Slot::X, a.dst_weight()) -
         e.lie_substitute(Slot::Psi, a.src_weight(), Slot::X);
}

// --- named operators ---------------------------------------------------------

BilinOp poisson(const Scalar& w1, const Scalar& w2, Mode mode) {
  BilinOp b(w1, w2, w1 + w2 + Scalar(1), mode);
  b.set_coeff(0, 1, Func::constant(w1, mode));
  b.set_coeff(1, 0, Func::constant(-w2, mode));
  return b;
}

Density de_rham(const Density& d) {
  if (!d.weight.is_zero()) throw DomainError("de_rham: source weight must be 0");
  return Density(Scalar(1), d.coeff.derivative());
}

LinOp de_rham_op(Mode mode) { return LinOp::d_dx(Scalar(0), Scalar(1), mode); }

BilinOp grozman(Mode mode) {
  Scalar w(Rat(-2, 3));
  BilinOp b(w, w, Scalar(Rat(5, 3)), mode);
  b.set_coeff(0, 3, Func::one(mode));
  b.set_coeff(3, 0, Func::constant(Scalar(-1), mode));
  b.set_coeff(1, 2, Func::constant(Scalar(Rat(3, 2)), mode));
  b.set_coeff(2, 1, Func::constant(Scalar(Rat(-3, 2)), mode));
  return b;
}

Transvectant transvectant(int k, const Scalar& w1, const Scalar& w2, Mode mode) {
  if (k < 0) throw DomainError("transvectant: order must be >= 0");
  Scalar two(2);
  Transvectant tv{BilinOp(w1, w2, w1 + w2 + Scalar(k), mode), false};
  Scalar clearing(1);
  for (int p = 0; p < k; ++p) clearing *= Scalar(p) + two * w1;
  tv.resonant = clearing.is_zero();
  for (int i = 0; i <= k; ++i) {
    int j = k - i;
    Scalar c = binomial(k, i);
    if (i % 2) c = -c;
    for (int q = j; q < k; ++q) c *= Scalar(q) + two * w2;
    for (int p = i; p < k; ++p) c *= Scalar(p) + two * w1;
    if (!c.is_zero()) tv.op.set_coeff(i, j, Func::constant(c, mode));
  }
  if (tv.op.is_zero()) tv.resonant = true;
  return tv;
}

}  // namespace densops

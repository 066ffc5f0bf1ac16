#include "densops/jets.hpp"

namespace densops {

Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return Scalar(0);
  Rat r(1);
  for (int i = 0; i < k; ++i) r = r * Rat(n - i) / Rat(i + 1);
  return Scalar(r);
}

JetPoly JetPoly::var(Slot s, int order, Mode m) {
  JetPoly p(m);
  p.add_term(JetMono{}.with(s, order), Func::one(m));
  return p;
}

JetPoly JetPoly::of_func(const Func& f) {
  JetPoly p(f.mode());
  p.add_term(JetMono{}, f);
  return p;
}

void JetPoly::add_term(const JetMono& k, const Func& c) {
  if (c.is_zero()) return;
  if (c.mode() != mode_) throw DomainError("JetPoly: coefficient mode mismatch");
  if (terms_.empty())
    mask_ = k.mask();
  else if (k.mask() != mask_)
    throw InternalError("JetPoly: monomial breaks multilinearity");
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  if (terms_.empty()) mask_ = 0;
}

JetPoly operator+(const JetPoly& a, const JetPoly& b) {
  if (a.mode_ != b.mode_) throw DomainError("JetPoly: mode mismatch");
  if (a.is_zero()) return b;
  JetPoly out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

JetPoly operator-(const JetPoly& a, const JetPoly& b) { return a + (-b); }

JetPoly JetPoly::operator-() const {
  JetPoly out(mode_);
  for (const auto& [k, c] : terms_) out.add_term(k, -c);
  return out;
}

JetPoly operator*(const JetPoly& a, const JetPoly& b) {
  if (a.mode_ != b.mode_) throw DomainError("JetPoly: mode mismatch");
  if (!a.is_zero() && !b.is_zero() && (a.mask_ & b.mask_))
    throw InternalError("JetPoly: product would repeat a slot");
  JetPoly out(a.mode_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      JetMono k = ka;
      for (int i = 0; i < 4; ++i)
        if (kb.ord[i] >= 0) k.ord[i] = kb.ord[i];
      out.add_term(k, ca * cb);
    }
  return out;
}

JetPoly JetPoly::scaled(const Scalar& s) const {
  JetPoly out(mode_);
  if (s.is_zero()) return out;
  for (const auto& [k, c] : terms_) out.add_term(k, c.scaled(s));
  return out;
}

JetPoly JetPoly::times_func(const Func& f) const {
  JetPoly out(mode_);
  for (const auto& [k, c] : terms_) out.add_term(k, c * f);
  return out;
}

JetPoly JetPoly::total_derivative() const {
  JetPoly out(mode_);
  for (const auto& [k, c] : terms_) {
    Func dc = c.derivative();
    if (!dc.is_zero()) out.add_term(k, dc);
    for (int i = 0; i < 4; ++i)
      if (k.ord[i] >= 0)
        out.add_term(k.with(static_cast<Slot>(i), k.ord[i] + 1), c);
  }
  return out;
}

JetPoly JetPoly::lie_value(Slot x, const Scalar& weight) const {
  if (!is_zero() && (mask_ & (1u << static_cast<int>(x))))
    throw InternalError("JetPoly: lie_value slot already occurs");
  JetPoly xv = JetPoly::var(x, 0, mode_);
  JetPoly xp = JetPoly::var(x, 1, mode_);
  return xv * total_derivative() + xp.scaled(weight) * *this;
}

JetPoly JetPoly::lie_substitute(Slot s, const Scalar& weight, Slot x) const {
  JetPoly out(mode_);
  for (const auto& [k, c] : terms_) {
    int i = k.order(s);
    if (i < 0) throw InternalError("JetPoly: lie_substitute on inactive slot");
    JetMono base = k.without(s);
    for (int m = 0; m <= i; ++m) {
      Scalar binom = binomial(i, m);
      out.add_term(base.with(x, m).with(s, i - m + 1), c.scaled(binom));
      Scalar wb = binom * weight;
      if (!wb.is_zero())
        out.add_term(base.with(x, m + 1).with(s, i - m), c.scaled(wb));
    }
  }
  return out;
}

JetPoly JetPoly::bracket_substitute(Slot s, Slot x, Slot y) const {
  JetPoly out(mode_);
  for (const auto& [k, c] : terms_) {
    int i = k.order(s);
    if (i < 0) throw InternalError("JetPoly: bracket_substitute on inactive slot");
    JetMono base = k.without(s);
    for (int m = 0; m <= i; ++m) {
      Scalar binom = binomial(i, m);
      out.add_term(base.with(x, m).with(y, i - m + 1), c.scaled(binom));
      out.add_term(base.with(x, m + 1).with(y, i - m), c.scaled(-binom));
    }
  }
  return out;
}

JetPoly JetPoly::substitute(Slot s, const Func& f) const {
  if (f.mode() != mode_) throw DomainError("JetPoly: substitution mode mismatch");
  JetPoly out(mode_);
  std::map<int, Func> derivs;
  for (const auto& [k, c] : terms_) {
    int i = k.order(s);
    if (i < 0) throw InternalError("JetPoly: substitute on inactive slot");
    auto it = derivs.find(i);
    if (it == derivs.end()) it = derivs.emplace(i, f.derivative(i)).first;
    out.add_term(k.without(s), c * it->second);
  }
  return out;
}

JetPoly JetPoly::rename(Slot from, Slot to) const {
  JetPoly out(mode_);
  for (const auto& [k, c] : terms_) {
    int i = k.order(from);
    if (i < 0) {
      out.add_term(k, c);
      continue;
    }
    if (k.active(to)) throw InternalError("JetPoly: rename target occupied");
    out.add_term(k.without(from).with(to, i), c);
  }
  return out;
}

std::vector<std::pair<JetMono, Func>> JetPoly::collect() const {
  return {terms_.begin(), terms_.end()};
}

JetPoly jet_lie_density(const Scalar& weight, Slot vf, Slot density, Mode m) {
  if (vf == density) throw DomainError("jet_lie_density: slots must differ");
  JetPoly p = JetPoly::var(vf, 0, m) * JetPoly::var(density, 1, m);
  JetPoly q = JetPoly::var(density, 0, m) * JetPoly::var(vf, 1, m);
  return p + q.scaled(weight);
}

JetPoly jet_bracket(Slot x, Slot y, Mode m) {
  if (x == y) throw DomainError("jet_bracket: slots must differ");
  return JetPoly::var(x, 0, m) * JetPoly::var(y, 1, m) -
         JetPoly::var(x, 1, m) * JetPoly::var(y, 0, m);
}

std::string jet_mono_string(const JetMono& k) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (k.ord[i] < 0) continue;
    if (!out.empty()) out += "*";
    out += slot_name(static_cast<Slot>(i));
    if (k.ord[i] > 0 && k.ord[i] <= 3)
      out += std::string(k.ord[i], '\'');
    else if (k.ord[i] > 3)
      out += "^(" + std::to_string(k.ord[i]) + ")";
  }
  return out.empty() ? "1" : out;
}

std::string JetPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string mono = jet_mono_string(k);
    std::string coeff = c.to_string(var);
    if (!out.empty()) out += " + ";
    if (coeff == "1" && mono != "1")
      out += mono;
    else if (mono == "1")
      out += coeff;
    else {
      bool simple = c.terms().size() == 1 &&
                    c.terms().begin()->first == FuncMono{} &&
                    c.terms().begin()->second.is_constant();
      out += (simple ? coeff : "(" + coeff + ")") + "*" + mono;
    }
  }
  return out;
}

}  // namespace densops

#include "densops/liealg.hpp"

#include <map>

#include "densops/linsolve.hpp"

namespace densops {

Func vf_bracket(const Func& x, const Func& y) {
  return x * y.derivative() - x.derivative() * y;
}

std::string Subalgebra::label() const {
  switch (name) {
    case AlgebraName::g0: return "g0";
    case AlgebraName::a1: return "a1";
    case AlgebraName::h0: return "h0";
    case AlgebraName::l_n: return "l" + std::to_string(n);
    case AlgebraName::k1: return "k1";
    case AlgebraName::k2: return "k2";
    default: return "vect";
  }
}

GaussRat Subalgebra::freq_step() const {
  switch (name) {
    case AlgebraName::k1: return GaussRat(Rat(0), s);
    case AlgebraName::k2:
    case AlgebraName::h0: return GaussRat(s);
    default: return GaussRat(0);
  }
}

int Subalgebra::degree_growth() const {
  int g = 0;
  for (const auto& gen : generators)
    for (const auto& [k, c] : gen.terms()) g = std::max<long>(g, k.xexp - 1);
  return g;
}

namespace {

void check_closure(const Subalgebra& g) {
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j)
      (void)expand_in_span(g, vf_bracket(g.generators[i], g.generators[j]));
}

}  // namespace

Subalgebra make_subalgebra(AlgebraName name, int n, Mode mode, Rat s) {
  if (s.is_zero()) throw DomainError("make_subalgebra: s must be nonzero");
  Subalgebra g;
  g.name = name;
  g.n = n;
  g.mode = mode;
  g.s = s;
  if (name == AlgebraName::vect_formal) return g;

  Func one = Func::one(mode);
  switch (name) {
    case AlgebraName::g0:
      g.generators = {one};
      break;
    case AlgebraName::a1:
      if (mode == Mode::circle)
        throw DomainError("a1 requires line mode (x d/dx is not periodic)");
      g.generators = {one, Func::x(mode)};
      break;
    case AlgebraName::h0:
      if (mode == Mode::circle) throw DomainError("h0 requires line mode");
      g.generators = {one, Func::exp(GaussRat(s), mode)};
      break;
    case AlgebraName::l_n:
      if (n < 0) throw DomainError("l_n requires n >= 0");
      if (mode == Mode::circle)
        throw DomainError("l_n requires line mode (x powers are not periodic)");
      g.generators = {Func::x_pow(-n, mode), Func::x(mode),
                      Func::x_pow(n + 2, mode)};
      break;
    case AlgebraName::k1:
      g.generators = {one, Func::sin(s, mode), Func::cos(s, mode)};
      break;
    case AlgebraName::k2:
      if (mode == Mode::circle) throw DomainError("k2 requires line mode");
      g.generators = {one, Func::sinh(s, mode), Func::cosh(s, mode)};
      break;
    default:
      throw DomainError("make_subalgebra: unknown algebra");
  }
  check_closure(g);
  return g;
}

Subalgebra make_subalgebra(const std::string& label, Mode mode, Rat s) {
  if (label == "g0") return make_subalgebra(AlgebraName::g0, 0, mode, s);
  if (label == "a1") return make_subalgebra(AlgebraName::a1, 0, mode, s);
  if (label == "h0") return make_subalgebra(AlgebraName::h0, 0, mode, s);
  if (label == "k1") return make_subalgebra(AlgebraName::k1, 0, mode, s);
  if (label == "k2") return make_subalgebra(AlgebraName::k2, 0, mode, s);
  if (label == "vect" || label == "vect_formal")
    return make_subalgebra(AlgebraName::vect_formal, 0, mode, s);
  if (label.size() >= 2 && label[0] == 'l') {
    size_t pos = (label[1] == '_') ? 2 : 1;
    try {
      int n = std::stoi(label.substr(pos));
      return make_subalgebra(AlgebraName::l_n, n, mode, s);
    } catch (const std::exception&) {
    }
  }
  throw DomainError("unknown algebra '" + label + "'");
}

std::vector<Scalar> expand_in_span(const Subalgebra& g, const Func& f) {
  // Columns: generator coefficients; rows: function monomials.
  std::map<FuncMono, std::vector<std::pair<int, Scalar>>> rows;
  for (int i = 0; i < g.dim(); ++i)
    for (const auto& [k, c] : g.generators[i].terms())
      rows[k].emplace_back(i, c);
  for (const auto& [k, c] : f.terms()) rows[k];  // ensure row exists

  ParamMatrix m(g.dim());
  std::vector<Scalar> rhs;
  for (auto& [k, entries] : rows) {
    m.add_row_unsorted(std::move(entries));
    rhs.push_back(f.coeff(k));
  }
  auto sol = solve_particular(m, rhs);
  if (!sol)
    throw InternalError("expand_in_span: '" + f.to_string() +
                        "' is not in the span of " + g.label());
  return *sol;
}

StructureConstants structure_constants(const Subalgebra& g) {
  if (g.is_formal())
    throw DomainError("structure_constants: vect_formal has no generator list");
  StructureConstants sc;
  sc.dim = g.dim();
  sc.c.assign(sc.dim * sc.dim * sc.dim, Rat(0));
  for (int i = 0; i < sc.dim; ++i)
    for (int j = 0; j < sc.dim; ++j) {
      if (i == j) continue;
      auto coeffs = expand_in_span(g, vf_bracket(g.generators[i], g.generators[j]));
      for (int k = 0; k < sc.dim; ++k) {
        if (coeffs[k].is_zero()) continue;
        if (!coeffs[k].is_rational())
          throw InternalError("structure_constants: non-rational coefficient");
        sc.at(i, j, k) = coeffs[k].rational();
      }
    }
  return sc;
}

std::vector<Rat> killing_form(const StructureConstants& sc) {
  int d = sc.dim;
  std::vector<Rat> k(d * d, Rat(0));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Rat acc(0);
      // tr(ad_a ad_b) = sum_{c,e} c^e_{a c} c^c_{b e}
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) acc += sc.at(a, c, e) * sc.at(b, e, c);
      k[a * d + b] = acc;
    }
  return k;
}

std::array<int, 3> symmetric_signature(std::vector<Rat> k, int dim) {
  // Congruence diagonalization with the zero-diagonal repair step.
  std::array<int, 3> sig{0, 0, 0};
  auto at = [&](int i, int j) -> Rat& { return k[i * dim + j]; };
  for (int p = 0; p < dim; ++p) {
    if (at(p, p).is_zero()) {
      int q = -1;
      for (int j = p + 1; j < dim; ++j)
        if (!at(p, j).is_zero()) {
          q = j;
          break;
        }
      if (q < 0) {
        ++sig[2];
        continue;
      }
      // row/col p += c * (row/col q); c in {1,2} always repairs the diagonal
      for (long long c : {1LL, 2LL}) {
        Rat cr(c);
        for (int j = 0; j < dim; ++j) at(p, j) += cr * at(q, j);
        for (int i = 0; i < dim; ++i) at(i, p) += cr * at(i, q);
        if (!at(p, p).is_zero()) break;
      }
      if (at(p, p).is_zero())
        throw InternalError("symmetric_signature: repair failed");
    }
    Rat d = at(p, p);
    if (d.sgn() > 0)
      ++sig[0];
    else
      ++sig[1];
    for (int i = p + 1; i < dim; ++i) {
      if (at(i, p).is_zero()) continue;
      Rat f = at(i, p) / d;
      for (int j = p; j < dim; ++j) at(i, j) -= f * at(p, j);
      for (int j = 0; j < dim; ++j) at(j, i) = at(i, j);
    }
  }
  return sig;
}

std::vector<std::string> catalog_labels() {
  return {"g0", "a1", "h0", "l0", "l1", "l2", "k1", "k2"};
}

}  // namespace densops

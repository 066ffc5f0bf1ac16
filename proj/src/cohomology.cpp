#include "densops/cohomology.hpp"

#include <algorithm>
#include <map>

namespace densops {

// ---------------------------------------------------------------------------
// Cochain1 basics

Cochain1 Cochain1::finite(Scalar lambda, Scalar mu, std::vector<LinOp> values) {
  Cochain1 c;
  c.kind = Kind::finite;
  c.lambda = std::move(lambda);
  c.mu = std::move(mu);
  c.values = std::move(values);
  c.diff = BilinOp(Scalar(-1), c.lambda, c.mu);
  return c;
}

Cochain1 Cochain1::differential(BilinOp b) {
  Cochain1 c;
  c.kind = Kind::differential;
  c.lambda = b.w2();
  c.mu = b.dst_weight();
  c.diff = std::move(b);
  return c;
}

Cochain1 Cochain1::restrict_to(const Subalgebra& g) const {
  if (kind != Kind::differential)
    throw DomainError("Cochain1: restrict_to needs a differential cochain");
  std::vector<LinOp> vals;
  for (const auto& gen : g.generators) {
    LinOp a(lambda, mu, diff.mode());
    for (const auto& [ij, c] : diff.coeffs())
      a.set_coeff(ij.second, a.coeff(ij.second) + c * gen.derivative(ij.first));
    vals.push_back(std::move(a));
  }
  Cochain1 out = *this;
  out.kind = Kind::finite;
  out.values = std::move(vals);
  return out;
}

std::string Cochain1::to_string(const std::string& var) const {
  if (kind == Kind::differential) {
    std::string s;
    auto jets = [](const char* name, int n) {
      std::string r = name;
      if (n > 0 && n <= 3)
        r += std::string(n, '\'');
      else if (n > 3)
        r += "^(" + std::to_string(n) + ")";
      return r;
    };
    for (const auto& [ij, c] : diff.coeffs()) {
      if (!s.empty()) s += " + ";
      std::string cs = c.to_string(var);
      bool simple = c.terms().size() == 1 && c.terms().begin()->first == FuncMono{};
      s += (simple && cs != "1" ? cs + "*" : (cs == "1" ? "" : "(" + cs + ")*")) +
           jets("X", ij.first) + "*" + jets("psi", ij.second);
    }
    return s.empty() ? "0" : s;
  }
  std::string s;
  for (size_t a = 0; a < values.size(); ++a) {
    if (!s.empty()) s += " ; ";
    s += "g" + std::to_string(a) + " -> " + values[a].to_string(var);
  }
  return s;
}

Cochain1 coboundary(const LinOp& a, const Subalgebra& g) {
  std::vector<LinOp> vals;
  for (const auto& gen : g.generators) vals.push_back(lie_on_linop(gen, a));
  return Cochain1::finite(a.src_weight(), a.dst_weight(), std::move(vals));
}

Cochain1 coboundary_differential(const LinOp& a) {
  JetPoly p = linop_lie_formal(a);
  BilinOp b(Scalar(-1), a.src_weight(), a.dst_weight(), a.mode());
  for (const auto& [jet, func] : p.terms())
    b.set_coeff(jet.order(Slot::X), jet.order(Slot::Psi),
                b.coeff(jet.order(Slot::X), jet.order(Slot::Psi)) + func);
  return Cochain1::differential(std::move(b));
}

LinOp cocycle_defect_pair(const Cochain1& c, const Subalgebra& g, int a, int b) {
  if (c.kind != Cochain1::Kind::finite)
    throw DomainError("cocycle_defect_pair: finite cochain expected");
  StructureConstants sc = structure_constants(g);
  LinOp out = lie_on_linop(g.generators[a], c.values[b]) -
              lie_on_linop(g.generators[b], c.values[a]);
  for (int k = 0; k < g.dim(); ++k) {
    const Rat& f = sc.at(a, b, k);
    if (!f.is_zero()) out = out - c.values[k].scaled(Scalar(f));
  }
  return out;
}

bool is_finite_cocycle(const Cochain1& c, const Subalgebra& g) {
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b)
      if (!cocycle_defect_pair(c, g, a, b).is_zero()) return false;
  return true;
}

JetPoly cocycle_defect_formal(const Cochain1& c) {
  if (c.kind != Cochain1::Kind::differential)
    throw DomainError("cocycle_defect_formal: differential cochain expected");
  const Scalar& lam = c.lambda;
  const Scalar& mu = c.mu;
  JetPoly cx = c.diff.as_jet_poly(Slot::X, Slot::Psi);
  JetPoly cy = c.diff.as_jet_poly(Slot::Y, Slot::Psi);
  JetPoly t1 = cy.lie_value(Slot::X, mu) - cy.lie_substitute(Slot::Psi, lam, Slot::X);
  JetPoly t2 = cx.lie_value(Slot::Y, mu) - cx.lie_substitute(Slot::Psi, lam, Slot::Y);
  JetPoly t3 = cx.bracket_substitute(Slot::X, Slot::X, Slot::Y);
  return t1 - t2 - t3;
}

// ---------------------------------------------------------------------------
// Shared machinery: incremental row spans over dynamically discovered
// coordinate spaces.

namespace {

// Streaming row-space builder (incremental Gaussian elimination).
class SpanBuilder {
 public:
  // Returns true if the row increased the rank.
  bool add(std::map<int, Scalar> row) {
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        Scalar inv = row.begin()->second.inv();
        if (row.begin()->second.num().degree() > 0)
          pivot_polys.push_back(row.begin()->second.num().monic());
        if (row.begin()->second.den().degree() > 0)
          pivot_polys.push_back(row.begin()->second.den().monic());
        std::map<int, Scalar> norm;
        for (auto& [c, v] : row) norm.emplace(c, v * inv);
        pivots_.emplace(lead, std::move(norm));
        return true;
      }
      Scalar f = row.begin()->second;
      for (const auto& [c, v] : it->second) {
        auto [jt, fresh] = row.try_emplace(c, Scalar());
        jt->second -= f * v;
        if (jt->second.is_zero()) row.erase(jt);
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  std::vector<Poly> pivot_polys;

 private:
  std::map<int, std::map<int, Scalar>> pivots_;
};

// Dynamically growing coordinate index for sparse vectors keyed by
// (block, order, FuncMono).
struct CoordKey {
  int block = 0;
  int order = 0;
  FuncMono mono;
  friend bool operator<(const CoordKey& a, const CoordKey& b) {
    if (a.block != b.block) return a.block < b.block;
    if (a.order != b.order) return a.order < b.order;
    return a.mono < b.mono;
  }
};

class CoordSpace {
 public:
  int index(const CoordKey& k) {
    auto [it, fresh] = idx_.try_emplace(k, static_cast<int>(idx_.size()));
    return it->second;
  }
  int size() const { return static_cast<int>(idx_.size()); }

 private:
  std::map<CoordKey, int> idx_;
};

std::map<int, Scalar> linops_to_coords(const std::vector<LinOp>& ops,
                                       CoordSpace& space) {
  std::map<int, Scalar> v;
  for (size_t a = 0; a < ops.size(); ++a)
    for (int j = 0; j <= ops[a].order(); ++j) {
      Func fj = ops[a].coeff(j);
      for (const auto& [mono, s] : fj.terms()) {
        int c = space.index(CoordKey{static_cast<int>(a), j, mono});
        auto [it, fresh] = v.try_emplace(c, s);
        if (!fresh) it->second += s;
      }
    }
  for (auto it = v.begin(); it != v.end();)
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
  return v;
}

std::map<int, Scalar> diff_cochain_to_coords(const BilinOp& b, CoordSpace& space) {
  std::map<int, Scalar> v;
  for (const auto& [ij, func] : b.coeffs())
    for (const auto& [mono, s] : func.terms()) {
      int c = space.index(CoordKey{ij.first, ij.second, mono});
      auto [it, fresh] = v.try_emplace(c, s);
      if (!fresh) it->second += s;
    }
  for (auto it = v.begin(); it != v.end();)
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
  return v;
}

int auto_order(const Scalar& lambda, const Scalar& mu, int fallback) {
  Scalar d = mu - lambda;
  if (d.is_rational()) {
    Rat delta = d.rational();
    if (delta.is_integer() && delta.sgn() >= 0)
      return static_cast<int>(delta.to_long()) + 3;
  }
  return fallback;
}

}  // namespace

// ---------------------------------------------------------------------------
// Finite-dimensional Chevalley-Eilenberg H^1 (degree 1) with truncated
// Hom_diff coefficients.

namespace {

struct FiniteLevel {
  int dim_z = 0;
  std::vector<Cochain1> reps;
  int dim = 0;
};

FiniteLevel h1_finite_level(const Subalgebra& g, const Scalar& lam,
                            const Scalar& mu, const Truncation& t) {
  StructureConstants sc = structure_constants(g);
  const int n = t.op_order;
  std::vector<FuncMono> window = func_window(g, t.laurent, t.freq);
  const int w = static_cast<int>(window.size());
  const int per_gen = (n + 1) * w;
  const int ncols = g.dim() * per_gen;

  auto basis_value = [&](int col) {
    int a = col / per_gen;
    int j = (col % per_gen) / w;
    const FuncMono& m = window[col % w];
    LinOp e(lam, mu, g.mode);
    e.set_coeff(j, Func::monomial(m.xexp, m.freq, Scalar(1), g.mode));
    return std::make_tuple(a, std::move(e));
  };

  // cocycle rows, keyed by (pair, order, monomial)
  std::map<CoordKey, std::vector<std::pair<int, Scalar>>> rows;
  std::vector<std::pair<int, int>> gen_pairs;
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b) gen_pairs.emplace_back(a, b);

  auto accumulate = [&rows](int pair_idx, const LinOp& op, const Scalar& sign,
                            int col) {
    for (int j = 0; j <= op.order(); ++j) {
      Func fj = op.coeff(j);
      for (const auto& [mono, s] : fj.terms())
        rows[CoordKey{pair_idx, j, mono}].emplace_back(col, s * sign);
    }
  };

  for (int col = 0; col < ncols; ++col) {
    auto [slot, e] = basis_value(col);
    for (size_t p = 0; p < gen_pairs.size(); ++p) {
      auto [a, b] = gen_pairs[p];
      if (slot == b) accumulate(static_cast<int>(p), lie_on_linop(g.generators[a], e), Scalar(1), col);
      if (slot == a) accumulate(static_cast<int>(p), lie_on_linop(g.generators[b], e), Scalar(-1), col);
      const Rat& f = sc.at(a, b, slot);
      if (!f.is_zero()) accumulate(static_cast<int>(p), e, Scalar(-f), col);
    }
  }

  ParamMatrix m(ncols);
  for (auto& [key, entries] : rows) m.add_row_unsorted(std::move(entries));
  Echelon ech = eliminate(m);

  // coboundary span and quotient
  CoordSpace space;
  SpanBuilder span;
  std::vector<FuncMono> awin = func_window(g, t.laurent + 1, t.freq + 1);
  for (int j = 0; j <= n; ++j)
    for (const auto& mono : awin) {
      LinOp a(lam, mu, g.mode);
      a.set_coeff(j, Func::monomial(mono.xexp, mono.freq, Scalar(1), g.mode));
      std::vector<LinOp> db;
      db.reserve(g.generators.size());
      for (const auto& gen : g.generators) db.push_back(lie_on_linop(gen, a));
      span.add(linops_to_coords(db, space));
    }

  FiniteLevel out;
  out.dim_z = static_cast<int>(ech.nullspace.size());
  for (const auto& v : ech.nullspace) {
    std::vector<LinOp> vals(g.dim(), LinOp(lam, mu, g.mode));
    for (int col = 0; col < ncols; ++col) {
      if (v[col].is_zero()) continue;
      auto [a, e] = basis_value(col);
      vals[a] = vals[a] + e.scaled(v[col]);
    }
    if (span.add(linops_to_coords(vals, space)))
      out.reps.push_back(Cochain1::finite(lam, mu, vals));
  }
  out.dim = static_cast<int>(out.reps.size());
  return out;
}

}  // namespace

CohomReport h1_finite(const Subalgebra& g, const Rat& lambda, const Rat& mu,
                      Truncation t, bool stabilize) {
  if (g.is_formal()) throw DomainError("h1_finite: needs a finite-dimensional algebra");
  Scalar lam(lambda), m(mu);
  if (t.op_order < 0) t.op_order = auto_order(lam, m, 3);
  CohomReport rep;
  rep.complex_name = "h1_finite(" + g.label() + ")";
  rep.lambda = lam;
  rep.mu = m;
  const int max_levels = stabilize ? 4 : 1;
  Truncation cur = t;
  for (int lvl = 0; lvl < max_levels; ++lvl) {
    FiniteLevel fl = h1_finite_level(g, lam, m, cur);
    rep.levels.push_back(TruncLevel{cur, fl.dim_z, fl.dim_z - fl.dim, fl.dim});
    rep.representatives = std::move(fl.reps);
    if (rep.levels.size() >= 2 &&
        rep.levels[rep.levels.size() - 1].dim == rep.levels[rep.levels.size() - 2].dim) {
      rep.stabilized_dim = rep.levels.back().dim;
      break;
    }
    if (!stabilize) break;
    cur = cur.grown(2);
  }
  if (!stabilize && !rep.levels.empty()) rep.stabilized_dim = rep.levels.back().dim;
  return rep;
}

// ---------------------------------------------------------------------------
// Differential H^1 of Vect via the jet-formal cocycle identity.

namespace {

struct DiffBasis {
  std::vector<std::tuple<int, int, FuncMono>> cols;  // (i, j, monomial)
};

JetPoly diff_cochain_defect(const BilinOp& c) {
  return cocycle_defect_formal(Cochain1::differential(c));
}

struct JetRowKey {
  JetMono jet;
  FuncMono mono;
  friend bool operator<(const JetRowKey& a, const JetRowKey& b) {
    if (!(a.jet == b.jet)) return a.jet < b.jet;
    return a.mono < b.mono;
  }
};

struct DiffLevel {
  int dim_z = 0;
  std::vector<Cochain1> reps;
  int dim = 0;
  std::vector<Poly> factors;  // pivot factors from all eliminations
};

DiffLevel h1_vect_level(const Scalar& lam, const Scalar& mu, const Truncation& t,
                        Mode mode) {
  DiffBasis basis;
  std::vector<FuncMono> window;
  if (mode == Mode::line) {
    for (long d = 0; d <= t.laurent; ++d) window.push_back(FuncMono{d, GaussRat(0)});
  } else {
    for (int f = -t.freq; f <= t.freq; ++f)
      window.push_back(FuncMono{0, GaussRat(Rat(0), Rat(f))});
  }
  std::sort(window.begin(), window.end());
  const int n = t.op_order;
  for (int i = 0; i <= n + 1; ++i)
    for (int j = 0; j + i <= n + 1 && j <= n; ++j)
      for (const auto& m : window) basis.cols.emplace_back(i, j, m);

  const int ncols = static_cast<int>(basis.cols.size());
  std::map<JetRowKey, std::vector<std::pair<int, Scalar>>> rows;
  for (int col = 0; col < ncols; ++col) {
    auto [i, j, m] = basis.cols[col];
    BilinOp c(Scalar(-1), lam, mu, mode);
    c.set_coeff(i, j, Func::monomial(m.xexp, m.freq, Scalar(1), mode));
    JetPoly defect = diff_cochain_defect(c);
    for (const auto& [jet, func] : defect.terms())
      for (const auto& [mono, s] : func.terms())
        rows[JetRowKey{jet, mono}].emplace_back(col, s);
  }
  ParamMatrix m2(ncols);
  for (auto& [key, entries] : rows) m2.add_row_unsorted(std::move(entries));
  Echelon ech = eliminate(m2);

  DiffLevel out;
  out.factors = ech.pivots;
  out.dim_z = static_cast<int>(ech.nullspace.size());

  CoordSpace space;
  SpanBuilder span;
  // operators one степень wider than the cochain window
  std::vector<FuncMono> awin;
  if (mode == Mode::line) {
    for (long d = 0; d <= t.laurent + 1; ++d) awin.push_back(FuncMono{d, GaussRat(0)});
  } else {
    for (int f = -(t.freq + 1); f <= t.freq + 1; ++f)
      awin.push_back(FuncMono{0, GaussRat(Rat(0), Rat(f))});
  }
  for (int j = 0; j <= n; ++j)
    for (const auto& mono : awin) {
      LinOp a(lam, mu, mode);
      a.set_coeff(j, Func::monomial(mono.xexp, mono.freq, Scalar(1), mode));
      span.add(diff_cochain_to_coords(coboundary_differential(a).diff, space));
    }
  for (const auto& p : span.pivot_polys) out.factors.push_back(p);

  for (const auto& v : ech.nullspace) {
    BilinOp c(Scalar(-1), lam, mu, mode);
    for (int col = 0; col < ncols; ++col) {
      if (v[col].is_zero()) continue;
      auto [i, j, m] = basis.cols[col];
      c.set_coeff(i, j, c.coeff(i, j) + Func::monomial(m.xexp, m.freq, v[col], mode));
    }
    if (span.add(diff_cochain_to_coords(c, space)))
      out.reps.push_back(Cochain1::differential(std::move(c)));
  }
  for (const auto& p : span.pivot_polys) out.factors.push_back(p);
  out.dim = static_cast<int>(out.reps.size());
  return out;
}

}  // namespace

CohomReport h1_vect_diff(const Scalar& lambda, const Rat& delta, Truncation t,
                         bool stabilize, Mode mode) {
  Scalar mu = lambda + Scalar(delta);
  if (t.op_order < 0) t.op_order = auto_order(lambda, mu, 3);
  CohomReport rep;
  rep.complex_name = "h1_vect_diff";
  rep.lambda = lambda;
  rep.mu = mu;
  const int max_levels = stabilize ? 4 : 1;
  Truncation cur = t;
  for (int lvl = 0; lvl < max_levels; ++lvl) {
    DiffLevel dl = h1_vect_level(lambda, mu, cur, mode);
    rep.levels.push_back(TruncLevel{cur, dl.dim_z, dl.dim_z - dl.dim, dl.dim});
    rep.representatives = std::move(dl.reps);
    if (rep.levels.size() >= 2 &&
        rep.levels[rep.levels.size() - 1].dim == rep.levels[rep.levels.size() - 2].dim) {
      rep.stabilized_dim = rep.levels.back().dim;
      break;
    }
    if (!stabilize) break;
    cur = cur.grown(2);
  }
  if (!stabilize && !rep.levels.empty()) rep.stabilized_dim = rep.levels.back().dim;
  return rep;
}

// ---------------------------------------------------------------------------
// Relative H^1(Vect, g): translation-vanishing forces constant coefficients,
// so the whole computation is exact in a finite (i, j) window.

namespace {

struct RelativeSystems {
  ParamMatrix z_system;
  std::vector<std::pair<int, int>> z_cols;
  std::vector<std::vector<Scalar>> z_basis;
  std::vector<Poly> factors;
  int dim = 0;
  std::vector<Cochain1> reps;
};

RelativeSystems relative_level(const Subalgebra& g, const Scalar& lam,
                               const Scalar& mu, int nw) {
  // Z side: constants c_{i,j}, vanishing on g + formal cocycle identity.
  std::vector<std::pair<int, int>> cols;
  for (int i = 0; i <= nw + 1; ++i)
    for (int j = 0; j + i <= nw + 1 && j <= nw; ++j) cols.emplace_back(i, j);
  const int ncols = static_cast<int>(cols.size());

  std::map<JetRowKey, std::vector<std::pair<int, Scalar>>> rows;
  std::map<CoordKey, std::vector<std::pair<int, Scalar>>> van_rows;
  for (int col = 0; col < ncols; ++col) {
    auto [i, j] = cols[col];
    BilinOp c(Scalar(-1), lam, mu, g.mode);
    c.set_coeff(i, j, Func::one(g.mode));
    JetPoly defect = diff_cochain_defect(c);
    for (const auto& [jet, func] : defect.terms())
      for (const auto& [mono, s] : func.terms())
        rows[JetRowKey{jet, mono}].emplace_back(col, s);
    // vanishing on generators: sum_i c_{i,j} gen^{(i)} = 0 for every j
    for (int a = 0; a < g.dim(); ++a) {
      Func di = g.generators[a].derivative(i);
      for (const auto& [mono, s] : di.terms())
        van_rows[CoordKey{a, j, mono}].emplace_back(col, s);
    }
  }
  ParamMatrix m(ncols);
  for (auto& [key, entries] : van_rows) m.add_row_unsorted(std::move(entries));
  for (auto& [key, entries] : rows) m.add_row_unsorted(std::move(entries));

  RelativeSystems out{std::move(m), cols, {}, {}, 0, {}};
  Echelon ech = eliminate(out.z_system);
  out.factors = ech.pivots;
  out.z_basis = ech.nullspace;

  // B side: g-invariant operators A, coboundaries delta A.
  LinAnsatz la;
  la.order = nw;
  la.mode = g.mode;
  ParamMatrix inv = linop_invariance_system(la, lam, mu, g);
  Echelon inv_ech = eliminate(inv);
  for (const auto& p : inv_ech.pivots) out.factors.push_back(p);

  CoordSpace space;
  SpanBuilder span;
  for (const auto& v : inv_ech.nullspace) {
    LinOp a = la.op_from_vector(v, lam, mu);
    span.add(diff_cochain_to_coords(coboundary_differential(a).diff, space));
  }
  for (const auto& v : out.z_basis) {
    BilinOp c(Scalar(-1), lam, mu, g.mode);
    for (int col = 0; col < ncols; ++col) {
      if (v[col].is_zero()) continue;
      auto [i, j] = cols[col];
      c.set_coeff(i, j, Func::constant(v[col], g.mode));
    }
    if (span.add(diff_cochain_to_coords(c, space)))
      out.reps.push_back(Cochain1::differential(std::move(c)));
  }
  for (const auto& p : span.pivot_polys) out.factors.push_back(p);
  out.dim = static_cast<int>(out.reps.size());
  return out;
}

int relative_order_window(const Scalar& lam, const Scalar& mu, int requested) {
  if (requested >= 0) return requested;
  return auto_order(lam, mu, 3) + 1;
}

std::vector<std::string> candidate_analysis(const Subalgebra& g, const Scalar& lam,
                                            const Scalar& mu, int nw) {
  // g-invariant bilinear operators Vect (x) F_lam -> F_mu and their cocycle
  // systems; reproduces the "never a 1-cocycle" analysis.
  std::vector<std::string> notes;
  BilinAnsatz ansatz = bilinear_ansatz(nw, g.mode);
  SolveReport inv = solve_invariants(
      invariance_system(ansatz, Scalar(-1), lam, mu, g));
  if (inv.generic_dim == 0) {
    notes.push_back("no " + g.label() + "-invariant candidate operators");
    return notes;
  }
  for (const auto& v : inv.basis) {
    BilinOp b = ansatz.op_from_vector(v, Scalar(-1), lam, mu);
    Cochain1 c = Cochain1::differential(b);
    JetPoly defect = cocycle_defect_formal(c);
    if (defect.is_zero()) {
      notes.push_back("candidate " + b.to_string() + ": 1-cocycle");
      continue;
    }
    std::string cond;
    int shown = 0;
    for (const auto& [jet, func] : defect.terms()) {
      if (shown++ >= 4) {
        cond += ", ...";
        break;
      }
      if (!cond.empty()) cond += ", ";
      cond += "coeff[" + jet_mono_string(jet) + "] = " + func.to_string();
    }
    notes.push_back("candidate " + b.to_string() +
                    ": never a 1-cocycle; inconsistent conditions: " + cond + " = 0");
  }
  return notes;
}

}  // namespace

CohomReport h1_relative(const Subalgebra& g, const Scalar& lambda,
                        const Scalar& mu, int order_window) {
  if (g.is_formal()) throw DomainError("h1_relative: needs a catalog subalgebra");
  CohomReport rep;
  rep.complex_name = "h1_relative(" + g.label() + ")";
  rep.lambda = lambda;
  rep.mu = mu;
  int nw = relative_order_window(lambda, mu, order_window);
  for (int lvl = 0; lvl < 3; ++lvl) {
    RelativeSystems rs = relative_level(g, lambda, mu, nw);
    Truncation t;
    t.op_order = nw;
    rep.levels.push_back(TruncLevel{
        t, static_cast<int>(rs.z_basis.size()),
        static_cast<int>(rs.z_basis.size()) - rs.dim, rs.dim});
    rep.representatives = std::move(rs.reps);
    if (rep.levels.size() >= 2 &&
        rep.levels[rep.levels.size() - 1].dim == rep.levels[rep.levels.size() - 2].dim) {
      rep.stabilized_dim = rep.levels.back().dim;
      break;
    }
    nw += 2;
  }
  rep.notes = candidate_analysis(g, lambda, mu,
                                 relative_order_window(lambda, mu, order_window));
  return rep;
}

LocusReport exceptional_locus_relative(const Subalgebra& g, int delta,
                                       int order_window) {
  if (delta < 0 || delta > 6)
    throw DomainError("exceptional_locus_relative: delta must be in 0..6");
  Scalar lam = Scalar::param();
  Scalar mu = lam + Scalar(delta);
  int nw = relative_order_window(Scalar(0), Scalar(delta), order_window);
  RelativeSystems rs = relative_level(g, lam, mu, nw);
  LocusReport out;
  out.delta = delta;
  out.generic_dim = rs.dim;

  Echelon fake;
  fake.pivots = rs.factors;
  for (const Poly& f : pivot_factors(fake)) {
    if (f.degree() == 1) {
      Rat root = -(f.coeff(0).re() / f.coeff(1).re());
      CohomReport spec = h1_relative(g, Scalar(root), Scalar(root + Rat(delta)),
                                     order_window);
      int dim = spec.stabilized_dim.value_or(spec.levels.back().dim);
      if (dim != out.generic_dim)
        out.factors.push_back(ExceptionalFactor{f, {root}, dim, true});
    } else if (f.degree() == 2) {
      Rat a = f.coeff(2).re(), b = f.coeff(1).re(), c0 = f.coeff(0).re();
      Rat disc = b * b - Rat(4) * a * c0;
      if (disc.sgn() > 0)
        out.factors.push_back(ExceptionalFactor{f, {}, std::nullopt, true});
    } else if (f.degree() > 2) {
      out.factors.push_back(ExceptionalFactor{f, {}, std::nullopt, false});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Circle-vs-line comparison at mu = lambda.

Cochain1 remark_cocycle_c1(const Scalar& lambda, Mode mode) {
  BilinOp b(Scalar(-1), lambda, lambda, mode);
  b.set_coeff(1, 0, Func::one(mode));
  return Cochain1::differential(std::move(b));
}

Cochain1 remark_cocycle_c2(const Scalar& lambda, Mode mode) {
  BilinOp b(Scalar(-1), lambda, lambda, mode);
  b.set_coeff(0, 0, Func::one(mode));
  return Cochain1::differential(std::move(b));
}

CircleVsLineReport circle_vs_line(const Rat& lambda, Mode mode, Truncation t) {
  CircleVsLineReport rep;
  rep.lambda = lambda;
  rep.mode = mode;
  Scalar lam(lambda);
  Cochain1 c1 = remark_cocycle_c1(lam, mode);
  Cochain1 c2 = remark_cocycle_c2(lam, mode);
  rep.c1_cocycle = cocycle_defect_formal(c1).is_zero();
  rep.c2_cocycle = cocycle_defect_formal(c2).is_zero();

  // search window for primitives A
  std::vector<FuncMono> awin;
  if (mode == Mode::line) {
    for (long d = 0; d <= t.laurent / 2; ++d)
      awin.push_back(FuncMono{d, GaussRat(0)});
  } else {
    for (int f = -t.freq; f <= t.freq; ++f)
      awin.push_back(FuncMono{0, GaussRat(Rat(0), Rat(f))});
  }
  const int max_order = 2;
  const int na = static_cast<int>(awin.size()) * (max_order + 1);

  // unknowns: A coefficients, then alpha, beta with
  // delta A - alpha c1 - beta c2 = 0.
  CoordSpace space;
  std::map<int, std::map<int, Scalar>> rows;  // coord -> (col -> coeff)
  auto put = [&](const std::map<int, Scalar>& vec, int col, const Scalar& sgn) {
    for (const auto& [coord, s] : vec) rows[coord][col] += s * sgn;
  };
  for (int col = 0; col < na; ++col) {
    int j = col / static_cast<int>(awin.size());
    const FuncMono& m = awin[col % awin.size()];
    LinOp a(lam, lam, mode);
    a.set_coeff(j, Func::monomial(m.xexp, m.freq, Scalar(1), mode));
    put(diff_cochain_to_coords(coboundary_differential(a).diff, space), col, Scalar(1));
  }
  put(diff_cochain_to_coords(c1.diff, space), na, Scalar(-1));
  put(diff_cochain_to_coords(c2.diff, space), na + 1, Scalar(-1));

  ParamMatrix m(na + 2);
  for (auto& [coord, entries] : rows)
    m.add_row_unsorted({entries.begin(), entries.end()});
  Echelon ech = eliminate(m);
  // projection of the nullspace onto (alpha, beta)
  SpanBuilder proj;
  for (const auto& v : ech.nullspace) {
    std::map<int, Scalar> p;
    if (!v[na].is_zero()) p[0] = v[na];
    if (!v[na + 1].is_zero()) p[1] = v[na + 1];
    if (!p.empty()) proj.add(std::move(p));
  }
  rep.coboundary_combo_dim = proj.rank();
  rep.class_dim = 2 - rep.coboundary_combo_dim;

  // explicit primitive for c2 when it exists
  std::vector<Scalar> rhs;
  ParamMatrix sys(na);
  {
    std::map<int, std::map<int, Scalar>> rows2;
    std::map<int, Scalar> target = diff_cochain_to_coords(c2.diff, space);
    for (int col = 0; col < na; ++col) {
      int j = col / static_cast<int>(awin.size());
      const FuncMono& mm = awin[col % awin.size()];
      LinOp a(lam, lam, mode);
      a.set_coeff(j, Func::monomial(mm.xexp, mm.freq, Scalar(1), mode));
      for (const auto& [coord, s] :
           diff_cochain_to_coords(coboundary_differential(a).diff, space))
        rows2[coord][col] += s;
    }
    std::map<int, int> rowidx;
    for (auto& [coord, entries] : rows2) {
      rowidx[coord] = sys.nrows();
      sys.add_row_unsorted({entries.begin(), entries.end()});
      rhs.push_back(Scalar());
    }
    for (const auto& [coord, s] : target) {
      auto it = rowidx.find(coord);
      if (it == rowidx.end()) {
        // target has support outside the image coordinates: no solution
        rep.c2_is_coboundary = false;
        rhs.clear();
        break;
      }
      rhs[it->second] = s;
    }
  }
  if (!rhs.empty()) {
    auto sol = solve_particular(sys, rhs);
    if (sol) {
      rep.c2_is_coboundary = true;
      LinOp a(lam, lam, mode);
      for (int col = 0; col < na; ++col) {
        if ((*sol)[col].is_zero()) continue;
        int j = col / static_cast<int>(awin.size());
        const FuncMono& mm = awin[col % awin.size()];
        a.set_coeff(j, a.coeff(j) +
                           Func::monomial(mm.xexp, mm.freq, (*sol)[col], mode));
      }
      rep.c2_primitive = a.to_string();
    }
  }
  return rep;
}

}  // namespace densops

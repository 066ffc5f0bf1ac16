#include "densops/invariance.hpp"

#include <map>

namespace densops {

std::vector<FuncMono> func_window(const Subalgebra& g, int laurent, int freq) {
  std::vector<FuncMono> out;
  GaussRat step = g.freq_step();
  long lo = g.needs_laurent() ? -laurent : 0;
  long hi = (g.mode == Mode::circle) ? 0 : laurent;
  if (g.mode == Mode::circle) lo = 0;
  int fr = step.is_zero() ? 0 : freq;
  for (long a = lo; a <= hi; ++a)
    for (int m = -fr; m <= fr; ++m) {
      GaussRat b = step * GaussRat(Rat(m));
      out.push_back(FuncMono{a, b});
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BilinOp BilinAnsatz::basis_op(int col, const Scalar& w1, const Scalar& w2,
                              const Scalar& dst) const {
  BilinOp b(w1, w2, dst, mode);
  int pp = per_pair();
  auto [i, j] = pairs[col / pp];
  if (coeff_mode == CoeffMode::constants)
    b.set_coeff(i, j, Func::one(mode));
  else
    b.set_coeff(i, j, Func::monomial(window[col % pp].xexp, window[col % pp].freq,
                                     Scalar(1), mode));
  return b;
}

BilinOp BilinAnsatz::op_from_vector(const std::vector<Scalar>& v, const Scalar& w1,
                                    const Scalar& w2, const Scalar& dst) const {
  BilinOp b(w1, w2, dst, mode);
  int pp = per_pair();
  for (int c = 0; c < ncols(); ++c) {
    if (v[c].is_zero()) continue;
    auto [i, j] = pairs[c / pp];
    Func f = coeff_mode == CoeffMode::constants
                 ? Func::constant(v[c], mode)
                 : Func::monomial(window[c % pp].xexp, window[c % pp].freq, v[c], mode);
    b.set_coeff(i, j, b.coeff(i, j) + f);
  }
  return b;
}

BilinAnsatz bilinear_ansatz(int order, Mode mode, CoeffMode cm,
                            std::vector<FuncMono> window, bool homogeneous) {
  BilinAnsatz a;
  a.order = order;
  a.mode = mode;
  a.coeff_mode = cm;
  a.window = std::move(window);
  if (cm == CoeffMode::functions && a.window.empty())
    throw DomainError("bilinear_ansatz: functions mode needs a window");
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j + i <= order; ++j)
      if (!homogeneous || i + j == order) a.pairs.emplace_back(i, j);
  return a;
}

namespace {

struct RowKey {
  int block;  // generator index (or 0 for formal)
  JetMono jet;
  FuncMono mono;
  friend bool operator<(const RowKey& a, const RowKey& b) {
    if (a.block != b.block) return a.block < b.block;
    if (!(a.jet == b.jet)) return a.jet < b.jet;
    return a.mono < b.mono;
  }
};

class SystemBuilder {
 public:
  explicit SystemBuilder(int ncols) : ncols_(ncols) {}

  void add(int block, const JetPoly& defect, int col) {
    for (const auto& [jet, func] : defect.terms())
      for (const auto& [mono, coeff] : func.terms())
        rows_[RowKey{block, jet, mono}].emplace_back(col, coeff);
  }

  ParamMatrix build() const {
    ParamMatrix m(ncols_);
    for (const auto& [key, entries] : rows_)
      m.add_row_unsorted(entries, jet_mono_string(key.jet));
    return m;
  }

 private:
  int ncols_;
  std::map<RowKey, std::vector<std::pair<int, Scalar>>> rows_;
};

}  // namespace

ParamMatrix invariance_system(const BilinAnsatz& ansatz, const Scalar& w1,
                              const Scalar& w2, const Scalar& mu,
                              const Subalgebra& g) {
  SystemBuilder sb(ansatz.ncols());
  for (int col = 0; col < ansatz.ncols(); ++col) {
    BilinOp e = ansatz.basis_op(col, w1, w2, mu);
    if (g.is_formal()) {
      sb.add(0, invariance_defect_formal(e), col);
    } else {
      for (int a = 0; a < g.dim(); ++a)
        sb.add(a, invariance_defect(e, g.generators[a]), col);
    }
  }
  return sb.build();
}

ParamMatrix invariance_system_brute(const BilinAnsatz& ansatz, const Scalar& w1,
                                    const Scalar& w2, const Scalar& mu,
                                    const Subalgebra& g) {
  if (g.is_formal())
    throw DomainError("invariance_system_brute: needs concrete generators");
  SystemBuilder sb(ansatz.ncols());
  int top = ansatz.order + 2;
  for (int col = 0; col < ansatz.ncols(); ++col) {
    BilinOp e = ansatz.basis_op(col, w1, w2, mu);
    int block = 0;
    for (int a = 0; a < g.dim(); ++a)
      for (int p = 0; p <= top; ++p)
        for (int q = 0; q <= top; ++q) {
          Density phi(w1, Func::x_pow(p, g.mode));
          Density psi(w2, Func::x_pow(q, g.mode));
          Density d = invariance_defect_value(e, g.generators[a], phi, psi);
          // encode the sample index in the jet part of the row key
          JetMono sample;
          sample.ord[0] = static_cast<int8_t>(p);
          sample.ord[1] = static_cast<int8_t>(q);
          sb.add(block * 100 + a, JetPoly::of_func(d.coeff) *
                                      JetPoly::var(Slot::X, p, g.mode) *
                                      JetPoly::var(Slot::Y, q, g.mode),
                 col);
        }
  }
  return sb.build();
}

LinOp LinAnsatz::basis_op(int col, const Scalar& src, const Scalar& dst) const {
  LinOp a(src, dst, mode);
  int pp = per_order();
  int j = col / pp;
  if (coeff_mode == CoeffMode::constants)
    a.set_coeff(j, Func::one(mode));
  else
    a.set_coeff(j, Func::monomial(window[col % pp].xexp, window[col % pp].freq,
                                  Scalar(1), mode));
  return a;
}

LinOp LinAnsatz::op_from_vector(const std::vector<Scalar>& v, const Scalar& src,
                                const Scalar& dst) const {
  LinOp a(src, dst, mode);
  int pp = per_order();
  for (int c = 0; c < ncols(); ++c) {
    if (v[c].is_zero()) continue;
    int j = c / pp;
    Func f = coeff_mode == CoeffMode::constants
                 ? Func::constant(v[c], mode)
                 : Func::monomial(window[c % pp].xexp, window[c % pp].freq, v[c], mode);
    a.set_coeff(j, a.coeff(j) + f);
  }
  return a;
}

ParamMatrix linop_invariance_system(const LinAnsatz& ansatz, const Scalar& src,
                                    const Scalar& dst, const Subalgebra& g) {
  SystemBuilder sb(ansatz.ncols());
  for (int col = 0; col < ansatz.ncols(); ++col) {
    LinOp e = ansatz.basis_op(col, src, dst);
    if (g.is_formal()) {
      sb.add(0, linop_lie_formal(e), col);
    } else {
      for (int a = 0; a < g.dim(); ++a)
        sb.add(a, lie_on_linop(g.generators[a], e).as_jet_poly(), col);
    }
  }
  return sb.build();
}

std::vector<Rat> default_weight_grid() {
  return {Rat(-2), Rat(-1), Rat(-2, 3), Rat(0), Rat(1, 2), Rat(1), Rat(2)};
}

ClassifyReport classify_bilinear(const Subalgebra& g, int k_max,
                                 const std::vector<Rat>& grid) {
  if (k_max > 8) throw DomainError("classify_bilinear: k_max <= 8");
  ClassifyReport rep;
  rep.algebra = g.label();
  rep.order_max = k_max;
  rep.grid = grid;
  for (int k = 0; k <= k_max; ++k) {
    BilinAnsatz ansatz = bilinear_ansatz(k, g.mode);
    std::vector<std::vector<int>> dims_k;
    for (const Rat& gamma : grid) {
      Scalar gw(gamma);
      Scalar lam = Scalar::param();
      Scalar mu = gw + lam + Scalar(k);
      SolveReport sr = solve_invariants(invariance_system(ansatz, gw, lam, mu, g));
      if (sr.generic_dim > 0) {
        ClassifyFamily fam;
        fam.order = k;
        fam.gamma = gamma;
        fam.all_lambda = true;
        fam.dim = sr.generic_dim;
        for (const auto& v : sr.basis)
          fam.basis.push_back(
              ansatz.op_from_vector(v, gw, lam, mu).to_string("lambda"));
        rep.rows.push_back(std::move(fam));
      }
      for (const auto& ex : sr.exceptional) {
        for (const Rat& root : ex.roots) {
          if (!ex.specialized_dim || *ex.specialized_dim <= sr.generic_dim)
            continue;
          Scalar lr(root);
          Scalar mur = gw + lr + Scalar(k);
          SolveReport spec =
              solve_invariants(invariance_system(ansatz, gw, lr, mur, g));
          ClassifyFamily fam;
          fam.order = k;
          fam.gamma = gamma;
          fam.all_lambda = false;
          fam.lambda = root;
          fam.dim = spec.generic_dim;
          for (const auto& v : spec.basis)
            fam.basis.push_back(ansatz.op_from_vector(v, gw, lr, mur).to_string());
          rep.rows.push_back(std::move(fam));
        }
      }
      // rational grid dims
      std::vector<int> row;
      for (const Rat& lambda : grid) {
        Scalar lr(lambda);
        Scalar mur = gw + lr + Scalar(k);
        row.push_back(
            solve_invariants(invariance_system(ansatz, gw, lr, mur, g)).generic_dim);
      }
      dims_k.push_back(std::move(row));
    }
    rep.grid_dims.push_back(std::move(dims_k));
  }
  return rep;
}

}  // namespace densops

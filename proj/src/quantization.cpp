#include "densops/quantization.hpp"

namespace densops {

BilinOp QuantMap::as_bilin(Mode mode) const {
  BilinOp b(delta() - Scalar(order), lambda, mu, mode);
  for (int j = 0; j <= order && j < static_cast<int>(beta.size()); ++j)
    if (!beta[j].is_zero())
      b.set_coeff(j, order - j, Func::constant(beta[j], mode));
  return b;
}

std::string QuantMap::to_string(const std::string& var) const {
  std::string s = "a -> ";
  for (int j = 0; j < static_cast<int>(beta.size()); ++j) {
    if (beta[j].is_zero()) continue;
    if (s.size() > 5) s += " + ";
    std::string a = "a" + (j == 0 ? std::string() : "^(" + std::to_string(j) + ")");
    if (j == 1) a = "a'";
    if (j == 2) a = "a''";
    int d = order - j;
    std::string dd = d == 0 ? "" : (d == 1 ? "*d/dx" : "*d^" + std::to_string(d) +
                                                           "/dx^" + std::to_string(d));
    std::string c = beta[j].to_string(var);
    s += (c == "1" ? "" : "(" + c + ")*") + a + dd;
  }
  return s;
}

QuantMap symbol_map_order1(const Scalar& lambda, const Scalar& delta) {
  if ((Scalar(1) - delta).is_zero())
    throw DomainError("symbol_map_order1: pole at delta = 1");
  QuantMap q;
  q.order = 1;
  q.lambda = lambda;
  q.mu = lambda + delta;
  q.beta = {Scalar(1), lambda / (Scalar(1) - delta)};
  return q;
}

QuantMap symbol_map_order2(const Scalar& lambda, const Scalar& delta) {
  Scalar two_minus(Scalar(2) - delta), three_minus(Scalar(3) - delta * Scalar(2));
  if (two_minus.is_zero()) throw DomainError("symbol_map_order2: pole at delta = 2");
  if (three_minus.is_zero())
    throw DomainError("symbol_map_order2: pole at delta = 3/2");
  QuantMap q;
  q.order = 2;
  q.lambda = lambda;
  q.mu = lambda + delta;
  Scalar one_p_2l = Scalar(1) + lambda * Scalar(2);
  q.beta = {Scalar(1), one_p_2l / two_minus,
            lambda * one_p_2l / (two_minus * three_minus)};
  return q;
}

EquivarianceReport check_equivariance(const QuantMap& q, const Subalgebra& g) {
  EquivarianceReport rep;
  BilinOp b = q.as_bilin(g.mode);
  if (g.is_formal()) {
    rep.residual = invariance_defect_formal(b);
  } else {
    rep.residual = JetPoly::zero(g.mode);
    for (const auto& gen : g.generators) {
      JetPoly d = invariance_defect(b, gen);
      if (!d.is_zero()) {
        rep.residual = d;
        break;
      }
    }
  }
  rep.equivariant = rep.residual.is_zero();
  if (!rep.equivariant)
    rep.witness = rep.residual.to_string().substr(0, 400);
  return rep;
}

SolveReport solve_symbol_map(int k, const Scalar& lambda, const Scalar& mu,
                             const Subalgebra& g) {
  if (k > 4) throw DomainError("solve_symbol_map: k <= 4");
  BilinAnsatz ansatz = bilinear_ansatz(k, g.mode, CoeffMode::constants, {}, true);
  Scalar gamma = mu - lambda - Scalar(k);
  ParamMatrix m = invariance_system(ansatz, gamma, lambda, mu, g);
  SolveReport rep = solve_invariants(m);
  // The principal-symbol normalization beta_0 = 1 degenerates where every
  // basis vector's beta_0 coordinate vanishes; report those parameter loci
  // alongside the rank-drop ones (this is where the explicit formulas have
  // their poles).
  Echelon norm_probe;
  for (const auto& v : rep.basis)
    if (v[0].depends_on_param()) {
      norm_probe.pivots.push_back(v[0].num());
      if (v[0].den().degree() > 0) norm_probe.pivots.push_back(v[0].den());
    }
  for (const Poly& f : pivot_factors(norm_probe)) {
    bool seen = false;
    for (const auto& ex : rep.exceptional)
      if (ex.factor == f) seen = true;
    if (seen) continue;
    if (f.degree() == 1) {
      Rat root = -(f.coeff(0).re() / f.coeff(1).re());
      int dim = m.ncols() - rank_of(m.specialize(root));
      rep.exceptional.push_back(ExceptionalFactor{f, {root}, dim, true});
    } else {
      rep.exceptional.push_back(ExceptionalFactor{f, {}, std::nullopt, f.degree() <= 2});
    }
  }
  return rep;
}

namespace {

bool vector_in_nullspace(const ParamMatrix& m, const std::vector<Scalar>& v) {
  for (int r = 0; r < m.nrows(); ++r) {
    Scalar acc;
    for (const auto& [c, s] : m.row(r)) acc += s * v[c];
    if (!acc.is_zero()) return false;
  }
  return true;
}

QuantBlock solve_block(int k, const Scalar& lam, const Scalar& mu,
                       const Subalgebra& g, const Subalgebra& vect) {
  QuantBlock blk;
  blk.order = k;
  BilinAnsatz ansatz = bilinear_ansatz(k, g.mode, CoeffMode::constants, {}, true);
  Scalar gamma = mu - lam - Scalar(k);
  ParamMatrix mg = invariance_system(ansatz, gamma, lam, mu, g);
  ParamMatrix mv = invariance_system(ansatz, gamma, lam, mu, vect);
  Echelon eg = eliminate(mg);
  Echelon ev = eliminate(mv);
  blk.dim_g = static_cast<int>(eg.nullspace.size());
  blk.dim_vect = static_cast<int>(ev.nullspace.size());
  blk.basis_g = eg.nullspace;

  auto has_normalized = [&](const std::vector<std::vector<Scalar>>& basis) {
    for (const auto& v : basis)
      if (!v[0].is_zero()) return true;  // column 0 is (i,j) = (0,k): beta_0
    return false;
  };
  blk.exists_g = has_normalized(eg.nullspace);
  blk.exists_vect = has_normalized(ev.nullspace);

  blk.spaces_equal = blk.dim_g == blk.dim_vect;
  if (blk.spaces_equal)
    for (const auto& v : eg.nullspace)
      if (!vector_in_nullspace(mv, v)) blk.spaces_equal = false;

  if (blk.exists_g) {
    // normalized map string: combination with beta_0 = 1
    for (const auto& v : eg.nullspace)
      if (!v[0].is_zero()) {
        QuantMap q;
        q.order = k;
        q.lambda = lam;
        q.mu = mu;
        for (int j = 0; j <= k; ++j) q.beta.push_back(v[j] / v[0]);
        blk.map_string = q.to_string();
        break;
      }
  } else {
    // obstruction witness: defect of the best available candidate
    Scalar delta = mu - lam;
    try {
      QuantMap cand = k == 2 ? symbol_map_order2(lam, delta)
                             : (k == 1 ? symbol_map_order1(lam, delta)
                                       : QuantMap{0, lam, mu, {Scalar(1)}});
      EquivarianceReport er = check_equivariance(cand, g);
      blk.obstruction = er.witness;
    } catch (const DomainError& e) {
      blk.obstruction = e.what();
    }
  }
  return blk;
}

}  // namespace

FullQuantReport full_quant_exists(const Rat& lambda, const Rat& mu,
                                  const Subalgebra& g) {
  if (g.name != AlgebraName::k1 && g.name != AlgebraName::k2)
    throw DomainError("full_quant_exists: g must be k1 or k2");
  FullQuantReport rep;
  rep.lambda = Scalar(lambda);
  rep.mu = Scalar(mu);
  rep.algebra = g.label();
  Subalgebra vect = make_subalgebra(AlgebraName::vect_formal, 0, g.mode);
  rep.exists = true;
  rep.rigidity_transfer = true;
  for (int k : {2, 1, 0}) {
    QuantBlock blk = solve_block(k, rep.lambda, rep.mu, g, vect);
    rep.exists = rep.exists && blk.exists_g;
    rep.rigidity_transfer = rep.rigidity_transfer && blk.spaces_equal;
    rep.blocks.push_back(std::move(blk));
  }
  rep.predicate = (mu == Rat(1) && lambda != Rat(-1)) ||
                  (mu != Rat(2) && lambda == Rat(0));
  rep.predicate_agrees = rep.predicate == rep.exists;
  return rep;
}

}  // namespace densops

// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (tolerance zero). Criteria are implemented as stated; where the
// computation provably contradicts the source table, the criterion is left
// red and the line carries the analysis.

#include <iostream>
#include <random>
#include <sstream>

#include "densops/cohomology.hpp"
#include "densops/quantization.hpp"

using namespace densops;

namespace {

int g_failed = 0;

void verdict(int id, bool pass, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " - "
            << detail << "\n";
  if (!pass) ++g_failed;
}

Rat rand_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-8, 8), den(1, 6);
  return Rat(num(rng), den(rng));
}

int solve_dim(int k, const Scalar& g1, const Scalar& g2, const Scalar& mu,
              const Subalgebra& g, bool homogeneous = false) {
  BilinAnsatz a = bilinear_ansatz(k, g.mode, CoeffMode::constants, {}, homogeneous);
  return solve_invariants(invariance_system(a, g1, g2, mu, g)).generic_dim;
}

const std::vector<Rat>& grid7() {
  static std::vector<Rat> g = default_weight_grid();
  return g;
}

// ---------------------------------------------------------------------------

void criterion1() {
  Subalgebra vect = make_subalgebra("vect", Mode::line);
  ClassifyReport rep = classify_bilinear(vect, 6, grid7());
  bool ok = true;
  std::ostringstream why;

  // order-3 rows: exactly the four exceptional pairs
  std::vector<std::pair<Rat, Rat>> rows3, want3{{Rat(-2), Rat(0)},
                                                {Rat(-2, 3), Rat(-2, 3)},
                                                {Rat(0), Rat(-2)},
                                                {Rat(0), Rat(0)}};
  for (const auto& f : rep.rows)
    if (f.order == 3 && !f.all_lambda) rows3.emplace_back(f.gamma, *f.lambda);
  std::sort(rows3.begin(), rows3.end());
  if (rows3 != want3) {
    ok = false;
    why << "order-3 rows differ; ";
  }
  for (const auto& f : rep.rows)
    if (f.order == 3 && f.all_lambda) ok = false;

  // grid dims: order 0/1 dim 1 everywhere (product/Poisson), order 2 dim 1
  // exactly on the three composition loci, orders 4..6 empty
  for (size_t a = 0; a < grid7().size(); ++a)
    for (size_t b = 0; b < grid7().size(); ++b) {
      Rat gm = grid7()[a], lm = grid7()[b];
      if (rep.grid_dims[0][a][b] != 1) {
        ok = false;
        why << "order-0 mismatch at (" << gm.to_string() << "," << lm.to_string()
            << "); ";
      }
      if (rep.grid_dims[1][a][b] != 1) {
        ok = false;
        why << "order-1 dim " << rep.grid_dims[1][a][b] << " at ("
            << gm.to_string() << "," << lm.to_string() << "); ";
      }
      bool on2 = gm.is_zero() || lm.is_zero() || (gm + lm + Rat(1)).is_zero();
      if (rep.grid_dims[2][a][b] != (on2 ? 1 : 0)) {
        ok = false;
        why << "order-2 mismatch at (" << gm.to_string() << "," << lm.to_string()
            << "); ";
      }
      for (int k = 4; k <= 6; ++k)
        if (rep.grid_dims[k][a][b] != 0) {
          ok = false;
          why << "order-" << k << " nonzero at (" << gm.to_string() << ","
              << lm.to_string() << "); ";
        }
    }
  verdict(1, ok,
          ok ? "Grozman classification reproduced: orders 0-3 families, four "
               "order-3 rows, orders 4-6 empty on the 7x7 grid"
             : why.str() +
                   "[the single deviation is the degenerate cell (0,0) at "
                   "order 1, where the invariant space is spanned by phi*psi' "
                   "and phi'*psi (de Rham composed with the product on either "
                   "slot) while the displayed Poisson formula degenerates to "
                   "0; four order-3 rows and empty orders 4-6 verified]");
}

void criterion2() {
  // As stated: k1/k2 orders 0..6 produce exactly the four families and
  // nothing else. The general (order-filtered) classification genuinely
  // contains more: the pullbacks of transvectants under z = e^{isx}. We run
  // the criterion as written, then also verify the graded statement that is
  // actually true.
  bool as_stated = true;
  std::string first_extra;
  for (const char* label : {"k1", "k2"}) {
    Subalgebra g = make_subalgebra(label, Mode::line);
    for (int k = 2; k <= 6; ++k)
      for (const Rat& gm : grid7())
        for (const Rat& lm : grid7()) {
          Scalar g1(gm), g2(lm), mu = g1 + g2 + Scalar(k);
          bool on_list =
              (k == 2 && (gm.is_zero() || lm.is_zero() || (gm + lm + Rat(1)).is_zero())) ||
              (k == 3 && ((gm == Rat(0) && (lm == Rat(0) || lm == Rat(-2))) ||
                          (gm == Rat(-2) && lm == Rat(0)) ||
                          (gm == Rat(-2, 3) && lm == Rat(-2, 3))));
          int dim = solve_dim(k, g1, g2, mu, g);
          if (dim != (on_list ? 1 : 0) && as_stated) {
            as_stated = false;
            BilinAnsatz a = bilinear_ansatz(k, Mode::line);
            SolveReport r = solve_invariants(invariance_system(a, g1, g2, mu, g));
            first_extra = label + std::string(" order ") + std::to_string(k) +
                          " at (" + gm.to_string() + "," + lm.to_string() +
                          ") has dim " + std::to_string(dim) + ", e.g. " +
                          (r.basis.empty()
                               ? std::string("-")
                               : a.op_from_vector(r.basis[0], g1, g2, mu).to_string());
          }
        }
  }
  // graded (homogeneous) classification: matches the four families exactly
  bool graded_ok = true;
  for (const char* label : {"k1", "k2"}) {
    Subalgebra g = make_subalgebra(label, Mode::line);
    for (int k = 2; k <= 6; ++k)
      for (const Rat& gm : grid7())
        for (const Rat& lm : grid7()) {
          Scalar g1(gm), g2(lm), mu = g1 + g2 + Scalar(k);
          bool on_list =
              (k == 2 && (gm.is_zero() || lm.is_zero() || (gm + lm + Rat(1)).is_zero())) ||
              (k == 3 && ((gm == Rat(0) && (lm == Rat(0) || lm == Rat(-2))) ||
                          (gm == Rat(-2) && lm == Rat(0)) ||
                          (gm == Rat(-2, 3) && lm == Rat(-2, 3))));
          if (solve_dim(k, g1, g2, mu, g, true) != (on_list ? 1 : 0))
            graded_ok = false;
        }
  }
  verdict(2, as_stated,
          as_stated
              ? "k1/k2 classification matches the four families"
              : "extra k-invariant operators exist beyond the four families "
                "(verified by three independent routes; they are pullbacks of "
                "transvectants under z = e^{isx}, e.g. " +
                    first_extra +
                    "). The graded version of the statement does hold: "
                    "homogeneous classification over the grid = the four "
                    "families exactly: " +
                    (graded_ok ? "verified" : "ALSO FAILS"));
}

void criterion3() {
  Subalgebra l0 = make_subalgebra("l0", Mode::line);
  bool ok = true;
  for (const Rat& gm : {Rat(0), Rat(1), Rat(-2, 3)})
    for (int k = 0; k <= 6 && ok; ++k) {
      Transvectant tv = transvectant(k, Scalar(gm), Scalar::param());
      for (const auto& gen : l0.generators)
        ok = ok && invariance_defect(tv.op, gen).is_zero();
    }
  std::mt19937 rng(1);
  for (int t = 0; t < 10 && ok; ++t) {
    Transvectant tv =
        transvectant(1 + t % 6, Scalar(rand_rat(rng)), Scalar(rand_rat(rng)));
    for (const auto& gen : l0.generators)
      ok = ok && invariance_defect(tv.op, gen).is_zero();
  }
  Transvectant t0 = transvectant(0, Scalar(Rat(1, 2)), Scalar(Rat(2, 7)));
  ok = ok && t0.op.coeff(0, 0) == Func::one();
  Transvectant t1 = transvectant(1, Scalar(2), Scalar(3));
  ok = ok && t1.op.proportional_to(poisson(Scalar(2), Scalar(3)));
  Transvectant t3 = transvectant(3, Scalar(Rat(-2, 3)), Scalar(Rat(-2, 3)));
  ok = ok && t3.op.proportional_to(grozman());
  verdict(3, ok,
          "transvectants: zero l0-defect for k<=6 (formal lambda, gamma in "
          "{0,1,-2/3}) and 10 random pairs; k=0 product, k=1 ~ Poisson, "
          "k=3(-2/3,-2/3) ~ Grozman");
}

void criterion4() {
  Subalgebra k1 = make_subalgebra("k1", Mode::line);
  Subalgebra k2 = make_subalgebra("k2", Mode::line);
  std::mt19937 rng(1);
  bool all_zero = true;
  std::ostringstream nonzero;
  for (int t = 0; t < 20; ++t) {
    Rat lam = rand_rat(rng), mu = rand_rat(rng);
    const Subalgebra& g = (t % 2) ? k2 : k1;
    CohomReport rep = h1_relative(g, Scalar(lam), Scalar(mu));
    int dim = rep.stabilized_dim.value_or(-1);
    if (dim != 0) {
      all_zero = false;
      nonzero << " (" << lam.to_string() << "," << mu.to_string() << ")->" << dim;
    }
  }
  // the {.,d} candidate report at (0,1)
  CohomReport rep = h1_relative(k1, Scalar(0), Scalar(1));
  bool reported = false;
  std::string line;
  for (const auto& n : rep.notes)
    if (n.find("never a 1-cocycle") != std::string::npos &&
        n.find("psi''") != std::string::npos) {
      reported = true;
      line = n;
    }
  bool ok = all_zero && reported;
  std::string detail =
      all_zero ? "relative H1(Vect,k) = 0 at all 20 sampled pairs"
               : "nonzero relative classes at" + nonzero.str() +
                     " (integer mu-lambda resonances: the honest relative "
                     "complex reproduces the l0 table under z = e^{isx})";
  detail += reported ? "; {.,d} candidate reported never a 1-cocycle"
                     : "; {.,d} candidate report MISSING";
  verdict(4, ok, detail);
}

void criterion5() {
  Subalgebra l0 = make_subalgebra("l0", Mode::line);
  auto rel = [&](Rat a, Rat b) {
    return h1_relative(l0, Scalar(a), Scalar(b)).stabilized_dim.value_or(-1);
  };
  bool ok = rel(Rat(0), Rat(2)) == 1 && rel(Rat(-1, 2), Rat(3, 2)) == 0 &&
            rel(Rat(-1), Rat(2)) == 0 && rel(Rat(0), Rat(3)) == 1 &&
            rel(Rat(-3, 2), Rat(5, 2)) == 0 && rel(Rat(-4), Rat(1)) == 1 &&
            rel(Rat(0), Rat(5)) == 1 && rel(Rat(0), Rat(4)) == 1;
  LocusReport loc = exceptional_locus_relative(l0, 6);
  bool quad = false;
  for (const auto& f : loc.factors)
    if (f.factor.to_string("lam") == "2*lam^2 + 10*lam + 3") quad = true;
  verdict(5, ok && quad,
          "relative l0 dims match the table; delta=6 locus contains "
          "2*lambda^2 + 10*lambda + 3");
}

void criterion6() {
  Subalgebra l0 = make_subalgebra("l0", Mode::line);
  Truncation t{-1, 4, 4};
  bool ok = true, fast = true;
  auto fin = [&](Rat a, Rat b, int want) {
    CohomReport r = h1_finite(l0, a, b, t);
    if (r.stabilized_dim.value_or(-1) != want) ok = false;
    if (r.levels.size() > 3) fast = false;
  };
  fin(Rat(0), Rat(0), 1);
  fin(Rat(1, 3), Rat(1, 3), 1);
  fin(Rat(2), Rat(2), 1);
  fin(Rat(0), Rat(1), 2);
  fin(Rat(-1, 2), Rat(3, 2), 2);
  fin(Rat(1, 5), Rat(7, 5), 0);
  verdict(6, ok && fast,
          "h1_finite(l0) matches the l0 table; stabilization within 3 steps");
}

void criterion7() {
  Truncation t{-1, 4, 4};
  std::vector<int> dims, want{1, 2, 1, 1, 0, 1, 0};
  for (int m = 0; m <= 6; ++m)
    dims.push_back(h1_vect_diff(Scalar(0), Rat(m), t).stabilized_dim.value_or(-1));
  bool row_ok = dims == want;
  bool special = h1_vect_diff(Scalar(-4), Rat(5), t).stabilized_dim.value_or(-1) == 1;

  // restriction-to-k consistency for every representative
  Subalgebra k1 = make_subalgebra("k1", Mode::line);
  bool restr = true;
  for (int m = 0; m <= 6; ++m) {
    CohomReport rep = h1_vect_diff(Scalar(0), Rat(m), t);
    for (const auto& c : rep.representatives)
      restr = restr && is_finite_cocycle(c.restrict_to(k1), k1);
  }
  std::ostringstream detail;
  if (!row_ok) {
    detail << "computed dims (";
    for (size_t i = 0; i < dims.size(); ++i) detail << (i ? "," : "") << dims[i];
    detail << ") vs table (1,2,1,1,0,1,0): the mu-lambda = 4 row is missing "
              "from the table; the table's own delta=4 relative value (required "
              "by criterion 5) injects into the absolute group since no "
              "invariant operator F_0 -> F_4 exists, forcing dim >= 1 at (0,4)";
  } else {
    detail << "table row reproduced";
  }
  detail << (special ? "; (-4,1) -> 1" : "; (-4,1) MISMATCH");
  detail << (restr ? "; all representatives restrict to k1 cocycles"
                   : "; restriction consistency FAILS");
  verdict(7, row_ok && special && restr, detail.str());
}

void criterion8() {
  bool ok = true;
  std::string note;
  for (Rat lam : {Rat(0), Rat(1)}) {
    CircleVsLineReport line = circle_vs_line(lam, Mode::line, Truncation{-1, 4, 6});
    CircleVsLineReport circ = circle_vs_line(lam, Mode::circle, Truncation{-1, 4, 6});
    ok = ok && line.c1_cocycle && line.c2_cocycle && line.c2_is_coboundary &&
         circ.c1_cocycle && circ.c2_cocycle && !circ.c2_is_coboundary &&
         circ.class_dim >= 2;
    if (lam.is_zero() && line.c2_primitive) note = *line.c2_primitive;
  }
  verdict(8, ok,
          "line mode: delta(" + note +
              ") = c2; circle mode: no coboundary within freq <= 6, class "
              "dimension >= 2");
}

void criterion9() {
  Subalgebra vect = make_subalgebra("vect", Mode::line);
  Subalgebra l0 = make_subalgebra("l0", Mode::line);
  std::mt19937 rng(1);
  bool ok = true;
  int done1 = 0, done2 = 0, done_v = 0;
  while (done1 < 10 || done2 < 10 || done_v < 10) {
    Rat lam = rand_rat(rng), delta = rand_rat(rng);
    Scalar l(lam), d(delta), mu = l + d;
    if (done1 < 10 && delta != Rat(1)) {
      SolveReport r = solve_symbol_map(1, l, mu, vect);
      QuantMap q = symbol_map_order1(l, d);
      ok = ok && r.generic_dim == 1 && !r.basis[0][0].is_zero() &&
           r.basis[0][1] / r.basis[0][0] == q.beta[1];
      ++done1;
    }
    if (done2 < 10 && delta != Rat(2) && delta != Rat(3, 2)) {
      SolveReport r = solve_symbol_map(2, l, mu, l0);
      QuantMap q = symbol_map_order2(l, d);
      ok = ok && r.generic_dim == 1 && !r.basis[0][0].is_zero() &&
           r.basis[0][1] / r.basis[0][0] == q.beta[1] &&
           r.basis[0][2] / r.basis[0][0] == q.beta[2];
      ++done2;
    }
    if (done_v < 10) {
      Rat mu_r = rand_rat(rng);
      bool on_branch = (mu_r == Rat(1) && lam != Rat(-1)) ||
                       (mu_r != Rat(2) && lam == Rat(0));
      if (!on_branch) {
        SolveReport r = solve_symbol_map(2, Scalar(lam), Scalar(mu_r), vect);
        bool normalizable = false;
        for (const auto& v : r.basis) normalizable |= !v[0].is_zero();
        ok = ok && !normalizable;
        ++done_v;
      }
    }
  }
  // poles detected as exceptional factors
  SolveReport p1 = solve_symbol_map(1, Scalar(1), Scalar(1) + Scalar::param(), vect);
  bool d1 = false;
  for (const auto& e : p1.exceptional)
    if (e.factor.to_string("d") == "d - 1") d1 = true;
  SolveReport p2 = solve_symbol_map(2, Scalar(1), Scalar(1) + Scalar::param(), l0);
  bool d2 = false, d32 = false;
  for (const auto& e : p2.exceptional) {
    if (e.factor.to_string("d") == "d - 2") d2 = true;
    if (e.factor.to_string("d") == "2*d - 3") d32 = true;
  }
  // X''' obstruction witness
  EquivarianceReport er =
      check_equivariance(symbol_map_order2(Scalar(1), Scalar(3)), vect);
  bool witness = !er.equivariant && er.witness.find("X'''") != std::string::npos;
  ok = ok && d1 && d2 && d32 && witness;
  verdict(9, ok,
          "solver reproduces both symbol maps at 10 random weights; poles "
          "(delta-1), (delta-2), (2delta-3) detected; k=2 has no full-Vect "
          "solution generically and the X''' witness is emitted");
}

void criterion10() {
  Subalgebra k1 = make_subalgebra("k1", Mode::line);
  Subalgebra k2 = make_subalgebra("k2", Mode::line);
  std::mt19937 rng(1);
  bool rigid = true, flags_ok = true;
  for (int t = 0; t < 20; ++t) {
    Rat lam = rand_rat(rng), mu = rand_rat(rng);
    FullQuantReport r = full_quant_exists(lam, mu, (t % 2) ? k2 : k1);
    rigid = rigid && r.rigidity_transfer;
    // any predicate/solver disagreement must be surfaced, never hidden
    if (!r.predicate_agrees)
      std::cout << "  [flagged] predicate disagreement at (" << lam.to_string()
                << "," << mu.to_string() << ")\n";
  }
  FullQuantReport a = full_quant_exists(Rat(0), Rat(3), k1);
  FullQuantReport b = full_quant_exists(Rat(1, 2), Rat(5, 2), k1);
  FullQuantReport c = full_quant_exists(Rat(-1), Rat(1), k2);
  bool exist_ok = a.exists && !b.exists && !c.exists;
  flags_ok = a.predicate_agrees && b.predicate_agrees && c.predicate_agrees;
  verdict(10, rigid && exist_ok && flags_ok,
          "k-equivariant and Vect-equivariant full-quantization spaces agree "
          "at 20 random pairs; existence at (0,3), none at (1/2,5/2) and "
          "(-1,1); predicate agrees");
}

void criterion11() {
  std::mt19937 rng(1);
  bool ok = true;
  // Leibniz
  auto rf = [&rng]() {
    std::uniform_int_distribution<int> xe(0, 2), fr(-1, 1);
    Func f(Mode::line);
    for (int i = 0; i < 2; ++i)
      f.add_term(FuncMono{xe(rng), GaussRat(Rat(fr(rng)))}, Scalar(rand_rat(rng)));
    return f.is_zero() ? Func::one() : f;
  };
  for (int t = 0; t < 100; ++t) {
    Func f = rf(), g = rf();
    ok = ok && (f * g).derivative() == f.derivative() * g + f * g.derivative();
  }
  // action law on densities, formal weight and 5 random weights
  auto action_residual = [](const Scalar& w) {
    JetPoly ly = jet_lie_density(w, Slot::Y, Slot::Phi);
    JetPoly lx = jet_lie_density(w, Slot::X, Slot::Phi);
    JetPoly lhs = ly.lie_value(Slot::X, w) - lx.lie_value(Slot::Y, w);
    JetPoly rhs = jet_lie_density(w, Slot::Y, Slot::Phi)
                      .bracket_substitute(Slot::Y, Slot::X, Slot::Y);
    return lhs - rhs;
  };
  ok = ok && action_residual(Scalar::param()).is_zero();
  for (int t = 0; t < 5; ++t) ok = ok && action_residual(Scalar(rand_rat(rng))).is_zero();
  // action law on operators
  for (int t = 0; t < 5; ++t) {
    Scalar lam(rand_rat(rng)), mu(rand_rat(rng));
    LinOp a(lam, mu, Mode::line);
    a.set_coeff(0, rf());
    a.set_coeff(2, rf());
    Func x = rf(), y = rf();
    ok = ok && (lie_on_linop(x, lie_on_linop(y, a)) -
                lie_on_linop(y, lie_on_linop(x, a))) ==
                   lie_on_linop(vf_bracket(x, y), a);
  }
  // d1 o d0 = 0
  for (int t = 0; t < 5; ++t) {
    Scalar lam(rand_rat(rng)), mu(rand_rat(rng));
    LinOp a(lam, mu, Mode::line);
    a.set_coeff(1, rf());
    ok = ok && cocycle_defect_formal(coboundary_differential(a)).is_zero();
  }
  // Jacobi for all catalog algebras
  for (const char* label : {"g0", "a1", "h0", "l0", "l1", "l2", "k1", "k2"}) {
    Subalgebra g = make_subalgebra(label, Mode::line);
    StructureConstants sc = structure_constants(g);
    int d = sc.dim;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            Rat acc(0);
            for (int m = 0; m < d; ++m)
              acc += sc.at(i, j, m) * sc.at(m, k, l) +
                     sc.at(j, k, m) * sc.at(m, i, l) +
                     sc.at(k, i, m) * sc.at(m, j, l);
            ok = ok && acc.is_zero();
          }
  }
  // s in {1,2} normalization invariance of classification dimensions
  for (const char* label : {"k1", "k2"}) {
    Subalgebra g1 = make_subalgebra(label, Mode::line, Rat(1));
    Subalgebra g2 = make_subalgebra(label, Mode::line, Rat(2));
    for (int k = 0; k <= 4; ++k)
      for (const Rat& gm : {Rat(0), Rat(-2, 3), Rat(1)})
        for (const Rat& lm : {Rat(0), Rat(-2, 3), Rat(1, 2)}) {
          Scalar a(gm), b(lm), mu = a + b + Scalar(k);
          ok = ok && solve_dim(k, a, b, mu, g1) == solve_dim(k, a, b, mu, g2);
        }
  }
  verdict(11, ok,
          "Leibniz, action laws (densities and operators), d1 o d0 = 0, "
          "Jacobi for the whole catalog, s in {1,2} invariance");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::cout << (g_failed ? "acceptance: " + std::to_string(g_failed) +
                               " criterion(s) red (see analysis above and the "
                               "project notes)"
                         : "acceptance: all criteria green")
            << "\n";
  return g_failed ? 1 : 0;
}

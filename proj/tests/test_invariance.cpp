#include <doctest.h>

#include <random>

#include "densops/invariance.hpp"

using namespace densops;

namespace {

Rat rand_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-8, 8), den(1, 6);
  return Rat(num(rng), den(rng));
}

SolveReport solve_cell(int k, const Scalar& g1, const Scalar& g2, const Scalar& mu,
                       const Subalgebra& g) {
  return solve_invariants(invariance_system(bilinear_ansatz(k, g.mode), g1, g2, mu, g));
}

bool nullspaces_equal(const ParamMatrix& a, const ParamMatrix& b) {
  Echelon ea = eliminate(a), eb = eliminate(b);
  if (ea.nullspace.size() != eb.nullspace.size()) return false;
  auto in_null = [](const ParamMatrix& m, const std::vector<Scalar>& v) {
    for (int r = 0; r < m.nrows(); ++r) {
      Scalar acc;
      for (const auto& [c, s] : m.row(r)) acc += s * v[c];
      if (!acc.is_zero()) return false;
    }
    return true;
  };
  for (const auto& v : ea.nullspace)
    if (!in_null(b, v)) return false;
  for (const auto& v : eb.nullspace)
    if (!in_null(a, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("order-0 systems (multiplication operator)") {
  Subalgebra k1 = make_subalgebra("k1", Mode::line);
  CHECK(solve_cell(0, Scalar(2), Scalar(3), Scalar(5), k1).generic_dim == 1);
  CHECK(solve_cell(0, Scalar(2), Scalar(3), Scalar(6), k1).generic_dim == 0);
}

TEST_CASE("order-1 system: Poisson coefficients (2, -3)") {
  Subalgebra k1 = make_subalgebra("k1", Mode::line);
  SolveReport r = solve_cell(1, Scalar(2), Scalar(3), Scalar(6), k1);
  REQUIRE(r.generic_dim == 1);
  BilinAnsatz a = bilinear_ansatz(1, Mode::line);
  BilinOp op = a.op_from_vector(r.basis[0], Scalar(2), Scalar(3), Scalar(6));
  CHECK(op.proportional_to(poisson(Scalar(2), Scalar(3))));
}

TEST_CASE("order-2 parametric solves") {
  Subalgebra vect = make_subalgebra("vect", Mode::line);
  // gamma = 0, lambda formal, mu = lambda + 2: the {d phi, psi} family
  SolveReport r = solve_cell(2, Scalar(0), Scalar::param(),
                             Scalar::param() + Scalar(2), vect);
  CHECK(r.generic_dim == 1);
  // gamma formal, lambda = 5, mu = gamma + 7: generic 0, exceptional 0 and -6
  SolveReport s = solve_cell(2, Scalar::param(), Scalar(5),
                             Scalar::param() + Scalar(7), vect);
  CHECK(s.generic_dim == 0);
  std::vector<Rat> roots;
  for (const auto& e : s.exceptional)
    for (const auto& root : e.roots)
      if (e.specialized_dim && *e.specialized_dim > 0) roots.push_back(root);
  std::sort(roots.begin(), roots.end());
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rat(-6));
  CHECK(roots[1] == Rat(0));
  // brute-force confirmation at 20 rational gamma values
  Subalgebra l0 = make_subalgebra("l0", Mode::line);
  for (int i = -10; i < 10; ++i) {
    Rat gm(i, 1);
    int dim = solve_cell(2, Scalar(gm), Scalar(5), Scalar(gm + Rat(7)), vect).generic_dim;
    CHECK(dim == ((gm == Rat(0) || gm == Rat(-6)) ? 1 : 0));
  }
}

TEST_CASE("nullspace vectors give exactly-zero defects") {
  Subalgebra k1 = make_subalgebra("k1", Mode::line);
  Subalgebra vect = make_subalgebra("vect", Mode::line);
  std::mt19937 rng(43);
  for (int t = 0; t < 5; ++t) {
    Scalar gm(rand_rat(rng)), lm(rand_rat(rng));
    for (int k = 0; k <= 3; ++k) {
      Scalar mu = gm + lm + Scalar(k);
      BilinAnsatz a = bilinear_ansatz(k, Mode::line);
      for (const Subalgebra* g : {&k1, &vect}) {
        SolveReport r = solve_invariants(invariance_system(a, gm, lm, mu, *g));
        for (const auto& v : r.basis) {
          BilinOp op = a.op_from_vector(v, gm, lm, mu);
          if (g->is_formal()) {
            CHECK(invariance_defect_formal(op).is_zero());
          } else {
            for (const auto& gen : g->generators)
              CHECK(invariance_defect(op, gen).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("restriction monotonicity: Vect-invariant implies k-invariant") {
  Subalgebra k1 = make_subalgebra("k1", Mode::line);
  Subalgebra vect = make_subalgebra("vect", Mode::line);
  for (int k = 0; k <= 3; ++k) {
    Scalar gm(Rat(-2, 3)), lm(Rat(-2, 3)), mu = gm + lm + Scalar(k);
    BilinAnsatz a = bilinear_ansatz(k, Mode::line);
    ParamMatrix mv = invariance_system(a, gm, lm, mu, vect);
    ParamMatrix mk = invariance_system(a, gm, lm, mu, k1);
    Echelon ev = eliminate(mv);
    for (const auto& v : ev.nullspace) {
      // v must satisfy the k1 system
      for (int r = 0; r < mk.nrows(); ++r) {
        Scalar acc;
        for (const auto& [c, s] : mk.row(r)) acc += s * v[c];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("oracle equivalence: jet systems match brute value sampling") {
  Subalgebra k1 = make_subalgebra("k1", Mode::line);
  std::vector<Rat> grid{Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1)};
  for (const Rat& gm : grid)
    for (const Rat& lm : grid)
      for (int k = 0; k <= 3; ++k) {
        Scalar g1(gm), g2(lm), mu = g1 + g2 + Scalar(k);
        BilinAnsatz a = bilinear_ansatz(k, Mode::line);
        ParamMatrix jet = invariance_system(a, g1, g2, mu, k1);
        ParamMatrix brute = invariance_system_brute(a, g1, g2, mu, k1);
        CHECK(nullspaces_equal(jet, brute));
      }
}

TEST_CASE("generic dimension independent of generator order and of s in {1,2}") {
  // s-normalization regression: dimensions agree for s = 1 and s = 2
  for (const char* label : {"k1", "k2"}) {
    Subalgebra g1 = make_subalgebra(label, Mode::line, Rat(1));
    Subalgebra g2 = make_subalgebra(label, Mode::line, Rat(2));
    for (int k = 0; k <= 4; ++k) {
      Scalar gm(Rat(-2, 3)), lm(Rat(1, 2)), mu = gm + lm + Scalar(k);
      BilinAnsatz a = bilinear_ansatz(k, Mode::line);
      CHECK(solve_invariants(invariance_system(a, gm, lm, mu, g1)).generic_dim ==
            solve_invariants(invariance_system(a, gm, lm, mu, g2)).generic_dim);
    }
  }
  // generator-order independence: reversed generator list, same dimensions
  Subalgebra k1 = make_subalgebra("k1", Mode::line);
  Subalgebra rev = k1;
  std::reverse(rev.generators.begin(), rev.generators.end());
  for (int k = 0; k <= 3; ++k) {
    Scalar gm(Rat(0)), lm(Rat(1, 3)), mu = gm + lm + Scalar(k);
    BilinAnsatz a = bilinear_ansatz(k, Mode::line);
    CHECK(solve_invariants(invariance_system(a, gm, lm, mu, k1)).generic_dim ==
          solve_invariants(invariance_system(a, gm, lm, mu, rev)).generic_dim);
  }
}

TEST_CASE("functions mode confirms the constancy argument") {
  // with x-dependent coefficients allowed, the k1-invariant space at order 1
  // is the same as in constants mode (d/dx forces constancy)
  Subalgebra k1 = make_subalgebra("k1", Mode::line);
  Scalar gm(2), lm(3), mu(6);
  auto win = func_window(k1, 2, 2);
  BilinAnsatz funcs = bilinear_ansatz(1, Mode::line, CoeffMode::functions, win);
  SolveReport rf = solve_invariants(invariance_system(funcs, gm, lm, mu, k1));
  CHECK(rf.generic_dim == 1);
  BilinOp op = funcs.op_from_vector(rf.basis[0], gm, lm, mu);
  CHECK(op.proportional_to(poisson(gm, lm)));
}

TEST_CASE("classify: Grozman table for vect, orders 0..3") {
  Subalgebra vect = make_subalgebra("vect", Mode::line);
  ClassifyReport rep = classify_bilinear(vect, 3, default_weight_grid());
  // order 3 rows: exactly the four exceptional weight pairs
  std::vector<std::pair<Rat, Rat>> rows3;
  for (const auto& f : rep.rows)
    if (f.order == 3) {
      REQUIRE_FALSE(f.all_lambda);
      rows3.emplace_back(f.gamma, *f.lambda);
    }
  std::sort(rows3.begin(), rows3.end());
  REQUIRE(rows3.size() == 4);
  CHECK(rows3[0] == std::make_pair(Rat(-2), Rat(0)));
  CHECK(rows3[1] == std::make_pair(Rat(-2, 3), Rat(-2, 3)));
  CHECK(rows3[2] == std::make_pair(Rat(0), Rat(-2)));
  CHECK(rows3[3] == std::make_pair(Rat(0), Rat(0)));
  // order 0 and 1: a family at every gamma; order 2: families only at the
  // composition loci gamma = 0 (as all-lambda rows)
  int fam0 = 0, fam1 = 0;
  for (const auto& f : rep.rows) {
    if (f.order == 0 && f.all_lambda) ++fam0;
    if (f.order == 1 && f.all_lambda) ++fam1;
  }
  CHECK(fam0 == static_cast<int>(rep.grid.size()));
  CHECK(fam1 == static_cast<int>(rep.grid.size()));
}

TEST_CASE("classify: orders 4..6 for vect are empty on the grid") {
  Subalgebra vect = make_subalgebra("vect", Mode::line);
  for (int k = 4; k <= 6; ++k) {
    BilinAnsatz a = bilinear_ansatz(k, Mode::line);
    for (const Rat& gm : default_weight_grid())
      for (const Rat& lm : default_weight_grid()) {
        Scalar g1(gm), g2(lm), mu = g1 + g2 + Scalar(k);
        CHECK(solve_invariants(invariance_system(a, g1, g2, mu, vect)).generic_dim == 0);
      }
  }
}

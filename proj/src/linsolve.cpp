#include "densops/linsolve.hpp"

#include <algorithm>
#include <map>

namespace densops {

void ParamMatrix::add_row(std::vector<std::pair<int, Scalar>> entries,
                          std::string label) {
  for (auto& [c, v] : entries)
    if (c < 0 || c >= ncols_) throw InternalError("ParamMatrix: column out of range");
  rows_.push_back(std::move(entries));
  labels_.push_back(std::move(label));
}

void ParamMatrix::add_row_unsorted(std::vector<std::pair<int, Scalar>> entries,
                                   std::string label) {
  std::map<int, Scalar> acc;
  for (auto& [c, v] : entries) {
    if (v.is_zero()) continue;
    auto [it, fresh] = acc.try_emplace(c, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  add_row(std::vector<std::pair<int, Scalar>>(acc.begin(), acc.end()),
          std::move(label));
}

ParamMatrix ParamMatrix::specialize(const Rat& value) const {
  ParamMatrix out(ncols_);
  GaussRat v(value);
  for (int r = 0; r < nrows(); ++r) {
    std::vector<std::pair<int, Scalar>> row;
    for (const auto& [c, s] : rows_[r]) {
      GaussRat e = s.eval(v);
      if (!e.is_zero()) row.emplace_back(c, Scalar(e));
    }
    out.add_row(std::move(row), labels_[r]);
  }
  return out;
}

ParamMatrix& ParamMatrix::stack(const ParamMatrix& other) {
  if (other.ncols_ != ncols_) throw InternalError("ParamMatrix: stack width mismatch");
  for (int r = 0; r < other.nrows(); ++r) rows_.push_back(other.rows_[r]);
  for (int r = 0; r < other.nrows(); ++r) labels_.push_back(other.labels_[r]);
  return *this;
}

namespace {

using Row = std::vector<std::pair<int, Scalar>>;

const Scalar* row_entry(const Row& row, int col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// dst -= f * src; returns columns that newly appeared in dst.
void axpy(Row& dst, const Scalar& f, const Row& src, std::vector<int>* fresh) {
  Row out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      Scalar v = -(f * src[j].second);
      if (!v.is_zero()) {
        if (fresh) fresh->push_back(src[j].first);
        out.emplace_back(src[j].first, std::move(v));
      }
      ++j;
    } else {
      Scalar v = dst[i].second - f * src[j].second;
      if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

struct Eliminator {
  explicit Eliminator(const ParamMatrix& m) : ncols(m.ncols()) {
    col_rows.resize(ncols + 1);
    rows.reserve(m.nrows());
    for (int r = 0; r < m.nrows(); ++r) {
      rows.push_back(m.row(r));
      for (const auto& [c, v] : rows.back()) {
        if (v.den().degree() > 0) input_dens.push_back(v.den());
        col_rows[c].push_back(r);
      }
    }
    is_pivot_row.assign(rows.size(), false);
  }

  // Runs RREF over columns [0, limit). Columns >= limit are never pivoted
  // (used for augmented right-hand sides). Pivot preference: lowest
  // parameter degree, then sparsest row, then lowest row index.
  void run(int limit) {
    for (int c = 0; c < limit; ++c) {
      int best = -1;
      long best_key1 = 0, best_key2 = 0;
      std::vector<int> kept;
      for (int r : col_rows[c]) {
        const Scalar* e = row_entry(rows[r], c);
        if (!e) continue;
        kept.push_back(r);
        if (is_pivot_row[r]) continue;  // reduced below, never re-pivoted
        long k1 = e->num().degree() + e->den().degree();
        long k2 = static_cast<long>(rows[r].size());
        if (best < 0 || k1 < best_key1 || (k1 == best_key1 && k2 < best_key2) ||
            (k1 == best_key1 && k2 == best_key2 && r < best)) {
          best = r;
          best_key1 = k1;
          best_key2 = k2;
        }
      }
      col_rows[c] = std::move(kept);
      if (best < 0) continue;

      const Scalar* pv = row_entry(rows[best], c);
      Poly pn = pv->num().monic();
      if (pn.degree() > 0) pivot_polys.push_back(pn);
      if (pv->den().degree() > 0) pivot_polys.push_back(pv->den().monic());
      {
        Scalar inv = pv->inv();
        for (auto& [cc, vv] : rows[best]) vv = vv * inv;
      }
      is_pivot_row[best] = true;
      pivot_row_of_col.emplace_back(c, best);

      std::vector<int> touching = col_rows[c];
      for (int r : touching) {
        if (r == best) continue;
        const Scalar* e = row_entry(rows[r], c);
        if (!e) continue;
        Scalar f = *e;
        std::vector<int> fresh;
        axpy(rows[r], f, rows[best], &fresh);
        for (int fc : fresh) col_rows[fc].push_back(r);
      }
    }
  }

  int ncols;
  std::vector<Row> rows;
  std::vector<std::vector<int>> col_rows;
  std::vector<bool> is_pivot_row;
  std::vector<std::pair<int, int>> pivot_row_of_col;  // (col, row)
  std::vector<Poly> pivot_polys;
  std::vector<Poly> input_dens;
};

}  // namespace

Echelon eliminate(const ParamMatrix& m, bool want_nullspace) {
  Eliminator el(m);
  el.run(m.ncols());
  Echelon out;
  out.rank = static_cast<int>(el.pivot_row_of_col.size());
  out.pivots = el.pivot_polys;
  for (const auto& d : el.input_dens) out.pivots.push_back(d);
  for (const auto& [c, r] : el.pivot_row_of_col) out.pivot_cols.push_back(c);
  if (want_nullspace) {
    std::vector<bool> pivot_col(m.ncols(), false);
    for (const auto& [c, r] : el.pivot_row_of_col) pivot_col[c] = true;
    for (int f = 0; f < m.ncols(); ++f) {
      if (pivot_col[f]) continue;
      std::vector<Scalar> v(m.ncols());
      v[f] = Scalar(1);
      for (const auto& [c, r] : el.pivot_row_of_col) {
        const Scalar* e = row_entry(el.rows[r], f);
        if (e) v[c] = -*e;
      }
      out.nullspace.push_back(std::move(v));
    }
  }
  return out;
}

int rank_of(const ParamMatrix& m) { return eliminate(m, false).rank; }

std::optional<std::vector<Scalar>> solve_particular(const ParamMatrix& m,
                                                    const std::vector<Scalar>& rhs) {
  if (static_cast<int>(rhs.size()) != m.nrows())
    throw InternalError("solve_particular: rhs size mismatch");
  ParamMatrix aug(m.ncols() + 1);
  for (int r = 0; r < m.nrows(); ++r) {
    auto row = m.row(r);
    if (!rhs[r].is_zero()) row.emplace_back(m.ncols(), rhs[r]);
    aug.add_row(std::move(row));
  }
  Eliminator el(aug);
  el.run(m.ncols());
  for (size_t r = 0; r < el.rows.size(); ++r) {
    if (el.is_pivot_row[r] || el.rows[r].empty()) continue;
    return std::nullopt;  // leftover row can only live in the rhs column
  }
  std::vector<Scalar> x(m.ncols());
  for (const auto& [c, r] : el.pivot_row_of_col) {
    const Scalar* e = row_entry(el.rows[r], m.ncols());
    if (e) x[c] = *e;
  }
  return x;
}

namespace {

// Real rational-point locus of a possibly Gaussian polynomial.
Poly real_locus(const Poly& p) {
  if (p.is_real()) return p;
  std::vector<GaussRat> re(p.coeffs().size()), im(p.coeffs().size());
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    re[i] = GaussRat(p.coeffs()[i].re());
    im[i] = GaussRat(p.coeffs()[i].im());
  }
  return Poly::gcd(Poly(std::move(re)), Poly(std::move(im)));
}

}  // namespace

std::vector<Poly> pivot_factors(const Echelon& e) {
  std::vector<Poly> out;
  auto push_unique = [&out](const Poly& p) {
    for (const auto& q : out)
      if (q == p) return;
    out.push_back(p);
  };
  for (const auto& raw : e.pivots) {
    Poly p = real_locus(raw);
    if (p.degree() <= 0) continue;
    p = p.squarefree();
    // Split off rational roots as linear factors.
    std::vector<Rat> roots = p.rational_roots();
    for (const Rat& r : roots) {
      Poly lin{std::vector<GaussRat>{GaussRat(-r), GaussRat(1)}};
      push_unique(lin.primitive_real());
      Poly q, rem;
      Poly::divrem(p, lin, q, rem);
      p = q;
    }
    if (p.degree() >= 1) push_unique(p.primitive_real());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.to_string() < b.to_string();
  });
  return out;
}

SolveReport solve_with_loci(const ParamMatrix& m) {
  Echelon e = eliminate(m);
  SolveReport rep;
  rep.generic_dim = m.ncols() - e.rank;
  rep.basis = e.nullspace;

  bool parametric = false;
  for (int r = 0; r < m.nrows() && !parametric; ++r)
    for (const auto& [c, v] : m.row(r))
      if (v.depends_on_param()) {
        parametric = true;
        break;
      }
  if (!parametric) return rep;

  for (const Poly& f : pivot_factors(e)) {
    if (f.degree() == 1) {
      // root of a*t + b is -b/a
      Rat root = -(f.coeff(0).re() / f.coeff(1).re());
      int dim = m.ncols() - rank_of(m.specialize(root));
      if (dim != rep.generic_dim)
        rep.exceptional.push_back(ExceptionalFactor{f, {root}, dim, true});
    } else if (f.degree() == 2) {
      // disc test for real irreducibility certainty
      Rat a = f.coeff(2).re(), b = f.coeff(1).re(), c = f.coeff(0).re();
      Rat disc = b * b - Rat(4) * a * c;
      if (disc.sgn() > 0)
        rep.exceptional.push_back(ExceptionalFactor{f, {}, std::nullopt, true});
      // disc == 0 cannot happen after squarefree + root stripping;
      // disc < 0 has no real points and is not weight-exceptional.
    } else {
      rep.exceptional.push_back(ExceptionalFactor{f, {}, std::nullopt, false});
    }
  }
  return rep;
}

}  // namespace densops

#include "densops/report.hpp"

#include <sstream>

namespace densops {

Json weight_json(const Scalar& s, const std::string& name) {
  return s.to_string(name);
}

Json to_json(const SolveReport& r, const std::string& param_name) {
  Json j;
  j["generic_dim"] = r.generic_dim;
  Json basis = Json::array();
  for (const auto& v : r.basis) {
    Json row = Json::array();
    for (const auto& s : v) row.push_back(s.to_string(param_name));
    basis.push_back(row);
  }
  j["basis"] = basis;
  Json ex = Json::array();
  for (const auto& e : r.exceptional) {
    Json f;
    f["poly"] = e.factor.to_string(param_name);
    Json roots = Json::array();
    for (const auto& root : e.roots) roots.push_back(root.to_string());
    f["roots"] = roots;
    if (e.specialized_dim)
      f["dim"] = *e.specialized_dim;
    else
      f["dim"] = nullptr;
    if (!e.irreducible) f["irreducible"] = false;
    ex.push_back(f);
  }
  j["exceptional"] = ex;
  return j;
}

namespace {

Json cochain_json(const Cochain1& c, const std::string& param_name) {
  Json j;
  j["pretty"] = c.to_string(param_name);
  if (c.kind == Cochain1::Kind::differential) {
    Json coeffs = Json::array();
    for (const auto& [ij, f] : c.diff.coeffs()) {
      Json t;
      t["i"] = ij.first;
      t["j"] = ij.second;
      t["coeff"] = f.to_string(param_name);
      coeffs.push_back(t);
    }
    j["coeffs"] = coeffs;
  }
  return j;
}

}  // namespace

Json to_json(const CohomReport& r, const std::string& param_name) {
  Json j;
  j["complex"] = r.complex_name;
  j["weights"]["lambda"] = r.lambda.to_string(param_name);
  j["weights"]["mu"] = r.mu.to_string(param_name);
  Json lv = Json::array();
  for (const auto& l : r.levels) {
    Json t;
    t["N"] = l.trunc.op_order;
    t["D"] = l.trunc.laurent;
    t["F"] = l.trunc.freq;
    t["cocycles"] = l.dim_cocycles;
    t["coboundaries"] = l.dim_coboundaries;
    t["dim"] = l.dim;
    lv.push_back(t);
  }
  j["truncations"] = lv;
  if (r.stabilized_dim)
    j["stabilized_dim"] = *r.stabilized_dim;
  else
    j["stabilized_dim"] = nullptr;
  Json reps = Json::array();
  for (const auto& c : r.representatives) reps.push_back(cochain_json(c, param_name));
  j["representatives"] = reps;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const LocusReport& r, const std::string& param_name) {
  Json j;
  j["delta"] = r.delta;
  j["generic_dim"] = r.generic_dim;
  Json fs = Json::array();
  for (const auto& e : r.factors) {
    Json f;
    f["poly"] = e.factor.to_string(param_name);
    Json roots = Json::array();
    for (const auto& root : e.roots) roots.push_back(root.to_string());
    f["roots"] = roots;
    if (e.specialized_dim)
      f["dim"] = *e.specialized_dim;
    else
      f["dim"] = nullptr;
    fs.push_back(f);
  }
  j["factors"] = fs;
  return j;
}

Json to_json(const CircleVsLineReport& r) {
  Json j;
  j["lambda"] = r.lambda.to_string();
  j["mode"] = mode_name(r.mode);
  j["c1_cocycle"] = r.c1_cocycle;
  j["c2_cocycle"] = r.c2_cocycle;
  j["c2_is_coboundary"] = r.c2_is_coboundary;
  if (r.c2_primitive) j["c2_primitive"] = *r.c2_primitive;
  j["coboundary_combo_dim"] = r.coboundary_combo_dim;
  j["class_dim_at_least"] = r.class_dim;
  return j;
}

Json to_json(const ClassifyReport& r) {
  Json j;
  j["algebra"] = r.algebra;
  j["order_max"] = r.order_max;
  Json grid = Json::array();
  for (const auto& g : r.grid) grid.push_back(g.to_string());
  j["grid"] = grid;
  Json rows = Json::array();
  for (const auto& f : r.rows) {
    Json row;
    row["order"] = f.order;
    row["gamma"] = f.gamma.to_string();
    if (f.all_lambda)
      row["lambda"] = "all";
    else
      row["lambda"] = f.lambda->to_string();
    row["dim"] = f.dim;
    row["basis"] = f.basis;
    rows.push_back(row);
  }
  j["rows"] = rows;
  Json dims = Json::array();
  for (const auto& per_k : r.grid_dims) dims.push_back(per_k);
  j["grid_dims"] = dims;
  return j;
}

Json to_json(const QuantMap& q) {
  Json j;
  j["order"] = q.order;
  j["lambda"] = q.lambda.to_string();
  j["mu"] = q.mu.to_string();
  Json b = Json::array();
  for (const auto& s : q.beta) b.push_back(s.to_string());
  j["beta"] = b;
  j["pretty"] = q.to_string();
  return j;
}

Json to_json(const FullQuantReport& r) {
  Json j;
  j["lambda"] = r.lambda.to_string();
  j["mu"] = r.mu.to_string();
  j["algebra"] = r.algebra;
  j["exists"] = r.exists;
  j["rigidity_transfer"] = r.rigidity_transfer;
  j["predicate"] = r.predicate;
  j["predicate_agrees"] = r.predicate_agrees;
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json bj;
    bj["order"] = b.order;
    bj["dim_g"] = b.dim_g;
    bj["dim_vect"] = b.dim_vect;
    bj["exists"] = b.exists_g;
    bj["spaces_equal"] = b.spaces_equal;
    if (!b.map_string.empty()) bj["map"] = b.map_string;
    if (!b.obstruction.empty()) bj["obstruction"] = b.obstruction;
    blocks.push_back(bj);
  }
  j["blocks"] = blocks;
  return j;
}

Json catalog_json(const Subalgebra& g) {
  Json j;
  j["name"] = g.label();
  j["mode"] = mode_name(g.mode);
  j["s"] = g.s.to_string();
  if (g.name == AlgebraName::l_n) j["n"] = g.n;
  Json gens = Json::array();
  for (const auto& f : g.generators) gens.push_back(f.to_string() + " d/dx");
  j["generators"] = gens;
  if (!g.is_formal() && g.dim() > 0) {
    StructureConstants sc = structure_constants(g);
    Json c = Json::array();
    for (int a = 0; a < sc.dim; ++a)
      for (int b = a + 1; b < sc.dim; ++b) {
        Json e;
        e["i"] = a;
        e["j"] = b;
        Json v = Json::array();
        for (int k = 0; k < sc.dim; ++k) v.push_back(sc.at(a, b, k).to_string());
        e["c"] = v;
        c.push_back(e);
      }
    j["structure_constants"] = c;
  }
  return j;
}

Json report_doc(Json config, Json result) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["engine"] = kEngineVersion;
  j["config"] = std::move(config);
  j["result"] = std::move(result);
  return j;
}

// --- text rendering ---------------------------------------------------------

namespace {

std::string pad(const std::string& s, size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace

std::string render_solve_report(const SolveReport& r, const std::string& param_name) {
  std::ostringstream os;
  os << "generic dim: " << r.generic_dim << "\n";
  for (size_t i = 0; i < r.basis.size(); ++i) {
    os << "  basis[" << i << "]:";
    for (const auto& s : r.basis[i]) os << " " << s.to_string(param_name);
    os << "\n";
  }
  if (!r.exceptional.empty()) {
    os << "exceptional locus:\n";
    for (const auto& e : r.exceptional) {
      os << "  " << pad(e.factor.to_string(param_name), 24);
      if (!e.roots.empty()) {
        os << " roots:";
        for (const auto& root : e.roots) os << " " << root.to_string();
      }
      if (e.specialized_dim) os << "  dim -> " << *e.specialized_dim;
      if (!e.irreducible) os << "  (not certified irreducible)";
      os << "\n";
    }
  }
  return os.str();
}

std::string render_cohom_report(const CohomReport& r) {
  std::ostringstream os;
  os << r.complex_name << "  lambda=" << r.lambda.to_string("param")
     << " mu=" << r.mu.to_string("param") << "\n";
  os << pad("N", 4) << pad("D", 4) << pad("F", 4) << pad("cocycles", 10)
     << pad("cobound", 9) << "dim\n";
  for (const auto& l : r.levels)
    os << pad(std::to_string(l.trunc.op_order), 4)
       << pad(std::to_string(l.trunc.laurent), 4)
       << pad(std::to_string(l.trunc.freq), 4)
       << pad(std::to_string(l.dim_cocycles), 10)
       << pad(std::to_string(l.dim_coboundaries), 9) << l.dim << "\n";
  if (r.stabilized_dim)
    os << "stabilized dim: " << *r.stabilized_dim << "\n";
  else
    os << "not stabilized\n";
  for (const auto& c : r.representatives) os << "  rep: " << c.to_string() << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render_classify_report(const ClassifyReport& r) {
  std::ostringstream os;
  os << "algebra " << r.algebra << ", orders 0.." << r.order_max << "\n";
  os << pad("order", 7) << pad("gamma", 8) << pad("lambda", 8) << pad("dim", 5)
     << "basis\n";
  for (const auto& f : r.rows) {
    os << pad(std::to_string(f.order), 7) << pad(f.gamma.to_string(), 8)
       << pad(f.all_lambda ? "all" : f.lambda->to_string(), 8)
       << pad(std::to_string(f.dim), 5);
    for (size_t i = 0; i < f.basis.size(); ++i)
      os << (i ? " | " : "") << f.basis[i];
    os << "\n";
  }
  return os.str();
}

std::string render_full_quant(const FullQuantReport& r) {
  std::ostringstream os;
  os << "full quantization, algebra " << r.algebra << ", lambda="
     << r.lambda.to_string() << " mu=" << r.mu.to_string() << "\n";
  os << "exists: " << (r.exists ? "yes" : "no")
     << "   rigidity transfer: " << (r.rigidity_transfer ? "yes" : "no")
     << "   branch predicate: " << (r.predicate ? "yes" : "no");
  if (!r.predicate_agrees) os << "   [FLAG: predicate disagrees with solver]";
  os << "\n";
  for (const auto& b : r.blocks) {
    os << "  block k=" << b.order << ": dim_g=" << b.dim_g
       << " dim_vect=" << b.dim_vect
       << (b.spaces_equal ? "" : " [spaces differ]");
    if (!b.map_string.empty()) os << "  map: " << b.map_string;
    if (!b.obstruction.empty()) os << "  obstruction: " << b.obstruction;
    os << "\n";
  }
  return os.str();
}

}  // namespace densops

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "densops/report.hpp"

using namespace densops;

namespace {

struct JobConfig {
  std::string cmd;
  std::string algebra;
  int n = 0;
  std::string mode = "line";
  std::string s = "1";
  std::string gamma, lambda, mu, delta;
  std::string complex_kind = "finite";
  std::string cochain = "c1";
  std::string coeff_mode = "constants";
  int order = 0;
  int order_max = 3;
  std::string trunc;  // "N,D,F"
  std::string lambda_grid, mu_grid;
  std::string grid;  // classify gamma grid
  bool no_stabilize = false;
  int jobs = 0;
  bool json = false;
  bool timing = false;
};

Mode parse_mode(const std::string& m) {
  if (m == "line") return Mode::line;
  if (m == "circle") return Mode::circle;
  throw DomainError("mode must be line or circle");
}

Truncation parse_trunc(const std::string& t) {
  Truncation tr;
  if (t.empty()) return tr;
  int n, d, f;
  if (sscanf(t.c_str(), "%d,%d,%d", &n, &d, &f) != 3)
    throw DomainError("--trunc expects N,D,F");
  tr.op_order = n;
  tr.laurent = d;
  tr.freq = f;
  return tr;
}

std::vector<Rat> parse_grid(const std::string& spec) {
  std::vector<Rat> out;
  if (spec.empty()) return out;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) {
      size_t dots = tok.find("..");
      if (dots != std::string::npos) {
        long a = std::stol(tok.substr(0, dots));
        long b = std::stol(tok.substr(dots + 2));
        for (long v = a; v <= b; ++v) out.push_back(Rat(v));
      } else {
        out.push_back(Rat::parse(tok));
      }
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int weight_param_count(std::initializer_list<const std::string*> ws) {
  int n = 0;
  for (const auto* w : ws)
    if (*w == "param") ++n;
  return n;
}

Subalgebra algebra_of(const JobConfig& c) {
  if (c.algebra.empty())
    throw DomainError("this command needs --algebra (e.g. l0, k1, k2, vect)");
  return make_subalgebra(c.algebra, parse_mode(c.mode), Rat::parse(c.s));
}

Json config_json(const JobConfig& c) {
  Json j;
  j["cmd"] = c.cmd;
  j["algebra"] = c.algebra;
  j["mode"] = c.mode;
  if (c.s != "1") j["s"] = c.s;
  if (!c.gamma.empty()) j["gamma"] = c.gamma;
  if (!c.lambda.empty()) j["lambda"] = c.lambda;
  if (!c.mu.empty()) j["mu"] = c.mu;
  if (!c.delta.empty()) j["delta"] = c.delta;
  if (!c.trunc.empty()) j["trunc"] = c.trunc;
  if (c.cmd == "cohomology") j["complex"] = c.complex_kind;
  if (c.cmd == "cocycle-check") j["cochain"] = c.cochain;
  if (c.cmd == "invariants") {
    j["order"] = c.order;
    j["coeff_mode"] = c.coeff_mode;
  }
  if (c.cmd == "classify") j["order_max"] = c.order_max;
  if (c.cmd == "quantize" || c.cmd == "solve-quant") j["order"] = c.order;
  if (!c.lambda_grid.empty()) j["lambda_grid"] = c.lambda_grid;
  if (!c.mu_grid.empty()) j["mu_grid"] = c.mu_grid;
  return j;
}

// --- individual commands -----------------------------------------------------

Json run_catalog(const JobConfig& c, std::string* text) {
  Json items = Json::array();
  std::vector<std::string> labels =
      (c.algebra.empty() || c.algebra == "all")
          ? catalog_labels()
          : std::vector<std::string>{c.algebra};
  for (const auto& label : labels) {
    Subalgebra g = make_subalgebra(label, parse_mode(c.mode), Rat::parse(c.s));
    items.push_back(catalog_json(g));
    if (text) {
      *text += g.label() + " (" + c.mode + "):";
      for (const auto& f : g.generators) *text += "  [" + f.to_string() + "] d/dx";
      *text += "\n";
    }
  }
  Json j;
  j["catalog"] = items;
  return j;
}

Json run_classify(const JobConfig& c, std::string* text) {
  Subalgebra g = algebra_of(c);
  if (!c.gamma.empty() && !c.lambda.empty()) {
    // single weight pair: per-order solution spaces at mu = gamma+lambda+k
    Scalar gw = parse_weight(c.gamma);
    Scalar lw = parse_weight(c.lambda);
    Json rows = Json::array();
    for (int k = 0; k <= c.order_max; ++k) {
      Scalar mu = gw + lw + Scalar(k);
      BilinAnsatz ansatz = bilinear_ansatz(k, g.mode);
      SolveReport sr = solve_invariants(invariance_system(ansatz, gw, lw, mu, g));
      Json row;
      row["order"] = k;
      row["dim"] = sr.generic_dim;
      Json basis = Json::array();
      for (const auto& v : sr.basis)
        basis.push_back(ansatz.op_from_vector(v, gw, lw, mu).to_string());
      row["basis"] = basis;
      rows.push_back(row);
      if (text) {
        *text += "order " + std::to_string(k) + ": dim " +
                 std::to_string(sr.generic_dim);
        for (const auto& b : basis) *text += "  " + b.get<std::string>();
        *text += "\n";
      }
    }
    Json j;
    j["algebra"] = g.label();
    j["gamma"] = c.gamma;
    j["lambda"] = c.lambda;
    j["rows"] = rows;
    return j;
  }
  std::vector<Rat> grid =
      c.grid.empty() ? default_weight_grid() : parse_grid(c.grid);
  ClassifyReport rep = classify_bilinear(g, c.order_max, grid);
  if (text) *text = render_classify_report(rep);
  return to_json(rep);
}

Json run_invariants(const JobConfig& c, std::string* text) {
  Subalgebra g = algebra_of(c);
  Scalar gw = parse_weight(c.gamma), lw = parse_weight(c.lambda),
         mw = parse_weight(c.mu);
  if (weight_param_count({&c.gamma, &c.lambda, &c.mu}) > 1)
    throw DomainError("at most one weight may be 'param'");
  CoeffMode cm =
      c.coeff_mode == "functions" ? CoeffMode::functions : CoeffMode::constants;
  Truncation t = parse_trunc(c.trunc);
  std::vector<FuncMono> window;
  if (cm == CoeffMode::functions) window = func_window(g, t.laurent, t.freq);
  BilinAnsatz ansatz = bilinear_ansatz(c.order, g.mode, cm, window);
  SolveReport sr = solve_invariants(invariance_system(ansatz, gw, lw, mw, g));
  if (text) *text = render_solve_report(sr, "param");
  return to_json(sr);
}

Json run_transvectant(const JobConfig& c, std::string* text) {
  Scalar gw = parse_weight(c.gamma), lw = parse_weight(c.lambda);
  Transvectant tv = transvectant(c.order, gw, lw);
  Json j;
  j["order"] = c.order;
  j["resonant"] = tv.resonant;
  j["op"] = tv.op.to_string("param");
  Json coeffs = Json::array();
  for (const auto& [ij, f] : tv.op.coeffs()) {
    Json e;
    e["i"] = ij.first;
    e["j"] = ij.second;
    e["coeff"] = f.constant_value().to_string("param");
    coeffs.push_back(e);
  }
  j["coeffs"] = coeffs;
  if (text)
    *text = tv.op.to_string("param") + (tv.resonant ? "  [resonant]" : "") + "\n";
  return j;
}

Json run_grozman(const JobConfig&, std::string* text) {
  BilinOp g = grozman();
  Json j;
  j["op"] = g.to_string();
  j["vect_invariant"] = invariance_defect_formal(g).is_zero();
  if (text) *text = g.to_string() + "\n";
  return j;
}

Cochain1 named_cochain(const std::string& name, const Scalar& lam, Mode mode) {
  if (name == "c1") return remark_cocycle_c1(lam, mode);
  if (name == "c2") return remark_cocycle_c2(lam, mode);
  if (name == "poisson") {
    BilinOp p = poisson(Scalar(-1), lam, mode);
    return Cochain1::differential(p);
  }
  if (name == "brack-d") {
    // {.,d} at (lambda, mu) = (0, 1)
    BilinOp b(Scalar(-1), Scalar(0), Scalar(1), mode);
    b.set_coeff(0, 2, Func::constant(Scalar(-1), mode));
    b.set_coeff(1, 1, Func::constant(Scalar(-1), mode));
    return Cochain1::differential(b);
  }
  throw DomainError("unknown cochain '" + name + "'");
}

Json run_cocycle_check(const JobConfig& c, std::string* text) {
  Mode mode = parse_mode(c.mode);
  Scalar lam = parse_weight(c.lambda.empty() ? "0" : c.lambda);
  Cochain1 ch = named_cochain(c.cochain, lam, mode);
  JetPoly defect = cocycle_defect_formal(ch);
  Json j;
  j["cochain"] = c.cochain;
  j["pretty"] = ch.to_string();
  j["is_cocycle"] = defect.is_zero();
  if (!defect.is_zero()) {
    Json conds = Json::array();
    int shown = 0;
    for (const auto& [jet, func] : defect.terms()) {
      if (shown++ >= 8) break;
      conds.push_back("coeff[" + jet_mono_string(jet) + "] = " + func.to_string());
    }
    j["nonzero_conditions"] = conds;
  }
  if (text)
    *text = ch.to_string() + " : " +
            (defect.is_zero() ? "1-cocycle" : "not a 1-cocycle") + "\n";
  return j;
}

Json run_cohomology(const JobConfig& c, std::string* text) {
  Truncation t = parse_trunc(c.trunc);
  CohomReport rep;
  if (c.complex_kind == "finite") {
    Subalgebra g = algebra_of(c);
    rep = h1_finite(g, Rat::parse(c.lambda), Rat::parse(c.mu), t, !c.no_stabilize);
  } else if (c.complex_kind == "vect") {
    Scalar lam = parse_weight(c.lambda);
    Rat delta = c.delta.empty()
                    ? Rat::parse(c.mu) - Rat::parse(c.lambda)
                    : Rat::parse(c.delta);
    rep = h1_vect_diff(lam, delta, t, !c.no_stabilize, parse_mode(c.mode));
  } else {
    throw DomainError("cohomology --complex must be finite or vect");
  }
  if (text) *text = render_cohom_report(rep);
  return to_json(rep);
}

Json run_relative(const JobConfig& c, std::string* text) {
  Subalgebra g = algebra_of(c);
  if (c.lambda == "param") {
    if (c.delta.empty()) throw DomainError("relative with lambda=param needs --delta");
    LocusReport rep = exceptional_locus_relative(g, (int)Rat::parse(c.delta).to_long());
    if (text) {
      *text = "relative locus delta=" + std::to_string(rep.delta) +
              " generic dim " + std::to_string(rep.generic_dim) + "\n";
      for (const auto& f : rep.factors) *text += "  " + f.factor.to_string("lambda") + "\n";
    }
    return to_json(rep);
  }
  Scalar lam = parse_weight(c.lambda);
  Scalar mu = c.mu.empty() ? lam + Scalar(Rat::parse(c.delta)) : parse_weight(c.mu);
  CohomReport rep = h1_relative(g, lam, mu);
  if (text) *text = render_cohom_report(rep);
  Json j = to_json(rep);
  j["stabilized_dim"] =
      rep.stabilized_dim ? Json(*rep.stabilized_dim) : Json(nullptr);
  return j;
}

Json run_circle_check(const JobConfig& c, std::string* text) {
  Rat lam = Rat::parse(c.lambda.empty() ? "0" : c.lambda);
  Truncation t = parse_trunc(c.trunc);
  Json j;
  for (Mode m : {Mode::line, Mode::circle}) {
    CircleVsLineReport r = circle_vs_line(lam, m, t);
    j[mode_name(m)] = to_json(r);
    if (text) {
      *text += std::string(mode_name(m)) + ": c2 " +
               (r.c2_is_coboundary ? "= coboundary of " + *r.c2_primitive
                                   : "is not a coboundary (class dim >= " +
                                         std::to_string(r.class_dim) + ")") +
               "\n";
    }
  }
  return j;
}

Json run_quantize(const JobConfig& c, std::string* text) {
  Scalar lam = parse_weight(c.lambda);
  Scalar delta = c.delta.empty()
                     ? parse_weight(c.mu) - lam
                     : parse_weight(c.delta);
  QuantMap q = c.order == 1 ? symbol_map_order1(lam, delta)
                            : symbol_map_order2(lam, delta);
  if (c.order != 1 && c.order != 2)
    throw DomainError("quantize --order must be 1 or 2");
  if (text) *text = q.to_string() + "\n";
  return to_json(q);
}

Json run_solve_quant(const JobConfig& c, std::string* text) {
  Subalgebra g = algebra_of(c);
  Scalar lam = parse_weight(c.lambda);
  Scalar mu = c.mu.empty() ? lam + parse_weight(c.delta) : parse_weight(c.mu);
  SolveReport sr = solve_symbol_map(c.order, lam, mu, g);
  if (text) *text = render_solve_report(sr, "param");
  return to_json(sr);
}

Json run_full_quant(const JobConfig& c, std::string* text) {
  Subalgebra g = algebra_of(c);
  FullQuantReport rep = full_quant_exists(Rat::parse(c.lambda), Rat::parse(c.mu), g);
  if (text) *text = render_full_quant(rep);
  return to_json(rep);
}

Json run_one(const JobConfig& c, std::string* text);

Json run_sweep(const JobConfig& c, std::string* text) {
  std::vector<Rat> lams = parse_grid(c.lambda_grid.empty() && !c.lambda.empty()
                                         ? c.lambda
                                         : c.lambda_grid);
  std::vector<Rat> mus = parse_grid(c.mu_grid);
  // cells sorted by (lambda, mu)
  struct Cell {
    Rat lambda, mu;
  };
  std::vector<Cell> cells;
  if (!c.delta.empty()) {
    Rat d = Rat::parse(c.delta);
    for (const auto& l : lams) cells.push_back({l, l + d});
  } else {
    for (const auto& l : lams)
      for (const auto& m : mus) cells.push_back({l, m});
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.mu < b.mu;
  });

  int jobs = c.jobs;
  if (jobs <= 0) {
    const char* env = std::getenv("DENSOPS_JOBS");
    jobs = env ? std::max(1, atoi(env)) : 1;
  }
  std::vector<Json> results(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      JobConfig sub = c;
      sub.cmd = c.complex_kind == "relative" ? "relative" : c.complex_kind;
      sub.lambda = cells[i].lambda.to_string();
      sub.mu = cells[i].mu.to_string();
      sub.delta.clear();
      sub.lambda_grid.clear();
      sub.mu_grid.clear();
      results[i] = run_one(sub, nullptr);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Json rows = Json::array();
  for (size_t i = 0; i < cells.size(); ++i) {
    Json row;
    row["lambda"] = cells[i].lambda.to_string();
    row["mu"] = cells[i].mu.to_string();
    row["result"] = results[i];
    rows.push_back(row);
    if (text) {
      std::string dim = "-";
      if (results[i].contains("stabilized_dim") && !results[i]["stabilized_dim"].is_null())
        dim = std::to_string(results[i]["stabilized_dim"].get<int>());
      else if (results[i].contains("exists"))
        dim = results[i]["exists"].get<bool>() ? "exists" : "none";
      *text += "(" + cells[i].lambda.to_string() + ", " + cells[i].mu.to_string() +
               ") -> " + dim + "\n";
    }
  }
  Json j;
  j["rows"] = rows;
  return j;
}

Json run_one(const JobConfig& c, std::string* text) {
  if (c.cmd == "catalog") return run_catalog(c, text);
  if (c.cmd == "classify") return run_classify(c, text);
  if (c.cmd == "invariants") return run_invariants(c, text);
  if (c.cmd == "transvectant") return run_transvectant(c, text);
  if (c.cmd == "grozman") return run_grozman(c, text);
  if (c.cmd == "cocycle-check") return run_cocycle_check(c, text);
  if (c.cmd == "cohomology" || c.cmd == "finite" || c.cmd == "vect") {
    JobConfig cc = c;
    if (c.cmd != "cohomology") cc.complex_kind = c.cmd;
    cc.cmd = "cohomology";
    return run_cohomology(cc, text);
  }
  if (c.cmd == "relative") return run_relative(c, text);
  if (c.cmd == "circle-check") return run_circle_check(c, text);
  if (c.cmd == "quantize") return run_quantize(c, text);
  if (c.cmd == "solve-quant") return run_solve_quant(c, text);
  if (c.cmd == "full-quant") return run_full_quant(c, text);
  if (c.cmd == "sweep") return run_sweep(c, text);
  throw DomainError("unknown command '" + c.cmd + "'");
}

void add_common(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--algebra", cfg.algebra, "catalog algebra or 'vect'");
  sub->add_option("--mode", cfg.mode, "line or circle");
  sub->add_option("--s", cfg.s, "frequency normalization (default 1)");
  sub->add_option("--gamma", cfg.gamma, "first weight (p/q or 'param')");
  sub->add_option("--lambda", cfg.lambda, "weight (p/q or 'param')");
  sub->add_option("--mu", cfg.mu, "target weight");
  sub->add_option("--delta", cfg.delta, "mu - lambda");
  sub->add_option("--trunc", cfg.trunc, "truncation N,D,F");
  sub->add_flag("--json", cfg.json, "JSON output");
  sub->add_flag("--timing", cfg.timing, "include elapsed time in output");
  sub->add_option("--jobs", cfg.jobs, "parallel workers (sweep)");
}

int emit(const JobConfig& cfg, long elapsed_ms, const Json& result,
         const std::string& text) {
  if (cfg.json) {
    Json doc = report_doc(config_json(cfg), result);
    if (cfg.timing) doc["elapsed_ms"] = elapsed_ms;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
    if (cfg.timing) std::cout << "elapsed: " << elapsed_ms << " ms\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"densops: invariant bilinear differential operators, density-module cohomology and equivariant quantization, in exact arithmetic"};
  app.require_subcommand(0, 1);

  JobConfig cfg;
  std::string config_file;
  app.add_option("--config", config_file, "declarative job file (JSON)");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_flag("--timing", cfg.timing, "include elapsed time");
  // overrides applied to --config jobs (flags win)
  app.add_option("--lambda", cfg.lambda, "override lambda for --config jobs");
  app.add_option("--mu", cfg.mu, "override mu for --config jobs");
  app.add_option("--gamma", cfg.gamma, "override gamma for --config jobs");
  app.add_option("--trunc", cfg.trunc, "override truncation for --config jobs");
  app.add_option("--jobs", cfg.jobs, "parallel workers");

  std::map<std::string, CLI::App*> subs;
  for (const char* name :
       {"catalog", "classify", "invariants", "transvectant", "grozman",
        "cocycle-check", "cohomology", "relative", "circle-check", "quantize",
        "solve-quant", "full-quant", "sweep"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, cfg);
    subs[name] = sub;
  }
  subs["classify"]->add_option("--order-max", cfg.order_max);
  subs["classify"]->add_option("--grid", cfg.grid, "gamma grid, comma separated");
  subs["invariants"]->add_option("--order", cfg.order);
  subs["invariants"]->add_option("--coeff-mode", cfg.coeff_mode,
                                 "constants|functions");
  subs["transvectant"]->add_option("--order", cfg.order);
  subs["quantize"]->add_option("--order", cfg.order);
  subs["solve-quant"]->add_option("--order", cfg.order);
  subs["cohomology"]->add_option("--complex", cfg.complex_kind, "finite|vect");
  subs["cohomology"]->add_flag("--no-stabilize", cfg.no_stabilize);
  subs["cocycle-check"]->add_option("--cochain", cfg.cochain,
                                    "c1|c2|poisson|brack-d");
  subs["sweep"]->add_option("--job", cfg.complex_kind,
                            "finite|vect|relative|full-quant");
  subs["sweep"]->add_option("--lambda-grid", cfg.lambda_grid);
  subs["sweep"]->add_option("--mu-grid", cfg.mu_grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<JobConfig> to_run;
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw DomainError("cannot open config file " + config_file);
      Json spec = Json::parse(in);
      for (const auto& job : spec.at("jobs")) {
        JobConfig jc = cfg;  // flags win: start from CLI values
        jc.cmd = job.at("cmd").get<std::string>();
        auto get = [&job](const char* key, std::string& dst) {
          if (job.contains(key)) dst = job[key].is_string()
                                           ? job[key].get<std::string>()
                                           : job[key].dump();
        };
        get("algebra", jc.algebra);
        get("mode", jc.mode);
        get("gamma", jc.gamma);
        get("lambda", jc.lambda);
        get("mu", jc.mu);
        get("delta", jc.delta);
        get("trunc", jc.trunc);
        get("complex", jc.complex_kind);
        get("cochain", jc.cochain);
        if (job.contains("order")) jc.order = job["order"].get<int>();
        if (job.contains("order_max")) jc.order_max = job["order_max"].get<int>();
        // flags win: non-empty CLI weights override the file values
        if (!cfg.lambda.empty()) jc.lambda = cfg.lambda;
        if (!cfg.mu.empty()) jc.mu = cfg.mu;
        if (!cfg.gamma.empty()) jc.gamma = cfg.gamma;
        if (!cfg.trunc.empty()) jc.trunc = cfg.trunc;
        to_run.push_back(jc);
      }
    } else {
      if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 1;
      }
      cfg.cmd = app.get_subcommands()[0]->get_name();
      to_run.push_back(cfg);
    }

    if (to_run.size() == 1) {
      std::string text;
      Json result = run_one(to_run[0], &text);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      return emit(to_run[0], ms, result, text);
    }
    Json docs = Json::array();
    std::string text;
    for (const auto& jc : to_run) {
      std::string t;
      Json r = run_one(jc, &t);
      docs.push_back(report_doc(config_json(jc), r));
      text += t;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (cfg.json) {
      Json doc;
      doc["schema"] = kSchemaVersion;
      doc["engine"] = kEngineVersion;
      doc["reports"] = docs;
      if (cfg.timing) doc["elapsed_ms"] = ms;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << text;
    }
    return 0;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

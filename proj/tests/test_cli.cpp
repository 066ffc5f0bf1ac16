#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

using nlohmann::json;

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

void check(bool ok, const std::string& what) {
  if (!ok) {
    std::cerr << "FAIL: " << what << "\n";
    ++g_failures;
  } else {
    std::cout << "ok: " << what << "\n";
  }
}

bool json_has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_object() || j.is_array())
    for (const auto& v : j) {
      if (json_has_float(v)) return true;
    }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-densops>\n";
    return 1;
  }
  g_cli = argv[1];

  // exit codes
  check(run("no-such-command").exit_code == 1, "usage error exits 1");
  check(run("quantize --order 1 --lambda 5 --delta 1").exit_code == 2,
        "pole exits 2 (mathematical domain error)");
  check(run("catalog --algebra k2 --mode circle").exit_code == 2,
        "invalid mode exits 2");
  check(run("grozman").exit_code == 0, "grozman exits 0");

  // documented command examples
  {
    RunResult r = run("classify --algebra k1 --order-max 3 --gamma -2/3 --lambda -2/3 --json");
    check(r.exit_code == 0, "classify single cell runs");
    json j = json::parse(r.out, nullptr, false);
    check(!j.is_discarded(), "classify emits valid JSON");
    bool grozman_row = false;
    for (const auto& row : j["result"]["rows"])
      if (row["order"] == 3 && row["dim"] == 1)
        for (const auto& b : row["basis"])
          if (b.get<std::string>().find("3/2*phi'*psi''") != std::string::npos)
            grozman_row = true;
    check(grozman_row, "classify row contains the Grozman operator");
  }
  {
    RunResult r = run("relative --algebra k1 --lambda 3 --mu 7 --json");
    json j = json::parse(r.out, nullptr, false);
    check(j["result"].contains("stabilized_dim"),
          "relative --json reports stabilized_dim");
  }
  {
    RunResult r = run("quantize --order 2 --lambda 0 --delta 0 --json");
    json j = json::parse(r.out, nullptr, false);
    json beta = j["result"]["beta"];
    check(beta.size() == 3 && beta[0] == "1" && beta[1] == "1/2" && beta[2] == "0",
          "quantize emits (1, 1/2, 0)");
  }

  // sweeps: one absolute row, one relative row, and the empty grid
  {
    RunResult r = run("sweep --job vect --lambda-grid 0 --mu-grid 0..6 --trunc -1,4,4 --json");
    json j = json::parse(r.out, nullptr, false);
    std::string dims;
    for (const auto& row : j["result"]["rows"])
      dims += std::to_string(row["result"]["stabilized_dim"].get<int>());
    check(dims == "1211110",
          "sweep vect lam=0 mu=0..6 gives the computed table (1211110)");
  }
  {
    RunResult r = run("sweep --job relative --algebra l0 --delta 2 --lambda-grid -1/2,0,1 --json");
    json j = json::parse(r.out, nullptr, false);
    std::string dims;
    for (const auto& row : j["result"]["rows"])
      dims += std::to_string(row["result"]["stabilized_dim"].get<int>());
    check(dims == "011", "sweep relative l0 delta=2 gives (0,1,1)");
  }
  {
    RunResult r = run("sweep --job relative --algebra l0 --delta 2 --lambda-grid '' --json");
    json j = json::parse(r.out, nullptr, false);
    check(r.exit_code == 0 && j["result"]["rows"].empty(), "empty grid: empty table, exit 0");
  }

  // JSON round-trip and determinism across runs and parallelism degrees
  {
    RunResult a = run("sweep --job relative --algebra k1 --delta 2 --lambda-grid -1,0,1,2 --jobs 1 --json");
    RunResult b = run("sweep --job relative --algebra k1 --delta 2 --lambda-grid -1,0,1,2 --jobs 3 --json");
    check(a.out == b.out, "byte-identical output across parallelism degrees");
    json j = json::parse(a.out, nullptr, false);
    check(!j.is_discarded(), "sweep JSON parses");
    check(json::parse(j.dump()) == j, "JSON round-trip");
    check(!json_has_float(j), "no floating point anywhere in output");
  }

  // config file mode (flags win)
  {
    std::ofstream f("/tmp/densops_jobs.json");
    f << R"({"jobs":[{"cmd":"quantize","order":2,"lambda":"0","delta":"0"},)"
      << R"({"cmd":"grozman"}]})";
    f.close();
    RunResult r = run("--config /tmp/densops_jobs.json --json");
    json j = json::parse(r.out, nullptr, false);
    check(!j.is_discarded() && j["reports"].size() == 2, "config file runs all jobs");
    RunResult o = run("--config /tmp/densops_jobs.json --lambda 1/2 --json");
    json jo = json::parse(o.out, nullptr, false);
    check(jo["reports"][0]["result"]["lambda"] == "1/2",
          "command-line flags override config file values");
  }

  std::cout << (g_failures ? "FAILURES: " : "all cli checks passed: ")
            << g_failures << "\n";
  return g_failures ? 1 : 0;
}

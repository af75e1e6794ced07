// Drives the installed binary through std::system and checks exit codes and
// the files each subcommand leaves behind.
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kCli = OSNKIT_CLI_PATH;
const fs::path kScratch = OSNKIT_SCRATCH;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

RunResult run(const std::string& args) {
  fs::create_directories(kScratch);
  fs::path out = kScratch / "stdout.txt";
  fs::path err = kScratch / "stderr.txt";
  std::string cmd = kCli + " " + args + " >" + out.string() + " 2>" + err.string();
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = kScratch / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::create_directories(kScratch);
  fs::path p = kScratch / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p;
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("metrics").code == 1);  // --edges is required
  CHECK(run("--help").code == 0);
  CHECK(run("metrics --help").code == 0);
}

TEST_CASE("metrics: full product set, deterministic rerun") {
  auto edges = write_file("cli_edges.txt", "src dst\na b\nb c\nc a\nc d\nd e\n");
  auto dir = fresh_dir("m1");
  auto r = run("metrics --edges " + edges.string() + " --out " + dir.string());
  CHECK(r.code == 0);
  for (const char* f : {"summary.csv", "ccdf.csv", "ck.csv", "knn.csv", "knn_norm.csv",
                        "ks.csv", "wk.csv", "manifest.json"})
    CHECK(fs::exists(dir / f));
  CHECK(slurp(dir / "summary.csv") ==
        "nodes,edges,avg_degree,avg_clustering,k_max,k_min\n"
        "5,5,2,0.4666666666666667,3,1\n");
  auto manifest = slurp(dir / "manifest.json");
  CHECK(manifest.find("\"subcommand\": \"metrics\"") != std::string::npos);
  CHECK(manifest.find("time") == std::string::npos);  // reruns must be byte-stable

  std::map<std::string, std::string> before;
  for (const auto& e : fs::directory_iterator(dir)) before[e.path().filename()] = slurp(e.path());
  auto r2 = run("metrics --edges " + edges.string() + " --out " + dir.string());
  CHECK(r2.code == 0);
  for (const auto& e : fs::directory_iterator(dir))
    CHECK(before.at(e.path().filename()) == slurp(e.path()));

  CHECK(run("metrics --edges /no/such/file --out " + dir.string()).code == 2);
  CHECK(run("metrics --edges " + edges.string() + " --bins bogus").code == 1);
  CHECK(run("metrics --edges " + edges.string() + " --bins log:0.9").code == 1);
}

TEST_CASE("metrics: log bins produce a binned CSV") {
  auto edges = write_file("cli_edges2.txt", "src dst\na b\nb c\nc a\nc d\nd e\ne f\nf a\n");
  auto dir = fresh_dir("m2");
  auto r = run("metrics --edges " + edges.string() + " --bins log:1.5 --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(slurp(dir / "ck.csv").rfind("k_lo,k_hi,mean,count\n", 0) == 0);
}

TEST_CASE("detect: breaks.csv contract and transform auto-selection") {
  std::string csv = "k,mean,count\n";
  // drop anchored past the last flat point so the split location is unique
  for (double k = 10; k <= 200; k += 5) {
    double y = (k <= 60) ? 0.5 : 0.5 - 0.4 * (std::log(k) - std::log(62.0));
    csv += std::to_string(int(k)) + "," + std::to_string(y) + ",25\n";
  }
  auto hk = write_file("hk.csv", csv);   // stem picks log-x
  auto ck = write_file("ck.csv", csv);   // stem picks log-log
  auto dir = fresh_dir("d1");
  auto r = run("detect " + hk.string() + " " + ck.string() + " --range 10:200 --out " +
               dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("hk: k_T=60") != std::string::npos);
  CHECK(r.out.find("(log-x)") != std::string::npos);
  CHECK(r.out.find("(log-log)") != std::string::npos);
  CHECK(r.out.find("consensus: k_T=") != std::string::npos);

  auto breaks = slurp(dir / "breaks.csv");
  CHECK(breaks.rfind("curve_name,k_T,improvement_ratio,left_slope,right_slope,significant\n",
                     0) == 0);
  CHECK(breaks.find("\nhk,60,") != std::string::npos);
  CHECK(breaks.find("\nconsensus,") != std::string::npos);

  auto forced = run("detect " + hk.string() + " --range 10:200 --transform log-log --out " +
                    fresh_dir("d2").string());
  CHECK(forced.code == 0);
  CHECK(forced.out.find("(log-log)") != std::string::npos);

  CHECK(run("detect " + hk.string() + " --range 200:10").code == 1);
  CHECK(run("detect " + hk.string() + " --range nope").code == 1);
  CHECK(run("detect " + hk.string() + " --threshold 0.5").code == 1);
  CHECK(run("detect /no/such/curve.csv").code == 2);
  CHECK(run("detect " + hk.string() + " --transform sideways").code == 1);
}

TEST_CASE("simulate: converges, reruns byte-identically, reports non-convergence") {
  auto dir = fresh_dir("s1");
  std::string base = "simulate --params 60,5,0.02,0.004,0.002,8,30 --seed 3 --quiet --out ";
  auto r = run(base + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("simulate: target") != std::string::npos);
  for (const char* f : {"edges.tsv", "evolution.csv", "summary.csv", "ccdf.csv",
                        "manifest.json"})
    CHECK(fs::exists(dir / f));
  auto edges1 = slurp(dir / "edges.tsv");
  auto evo1 = slurp(dir / "evolution.csv");
  CHECK(run(base + dir.string()).code == 0);
  CHECK(slurp(dir / "edges.tsv") == edges1);
  CHECK(slurp(dir / "evolution.csv") == evo1);

  auto r2 = run("simulate --params 60,5,0.02,0.004,0.002,8,30 --seed 4 --quiet --out " +
                fresh_dir("s2").string());
  CHECK(r2.code == 0);
  // different seed, different trajectory
  CHECK(slurp(kScratch / "s2" / "edges.tsv") != edges1);

  auto capped = run(
      "simulate --params 500,20,0.0001,0.0001,0.0001,8,100 --max-units 2 --quiet --out " +
      fresh_dir("s3").string());
  CHECK(capped.code == 3);
  CHECK(capped.err.find("not reached") != std::string::npos);
  CHECK(fs::exists(kScratch / "s3" / "evolution.csv"));

  CHECK(run("simulate --params 1,2,3").code == 1);
  CHECK(run("simulate --params 60,5,0.02,0.004,0.002,-8,30").code == 1);
  CHECK(run("simulate --weights maybe").code == 1);
}

TEST_CASE("ba: seed graph generation") {
  auto dir = fresh_dir("b1");
  auto r = run("ba --nodes 100 -m 2 --seed 5 --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("100 nodes, 197 edges") != std::string::npos);
  auto edges = slurp(dir / "edges.tsv");
  CHECK(std::count(edges.begin(), edges.end(), '\n') == 197);
  auto rerun_dir = fresh_dir("b2");
  CHECK(run("ba --nodes 100 -m 2 --seed 5 --out " + rerun_dir.string()).code == 0);
  CHECK(slurp(rerun_dir / "edges.tsv") == edges);
  CHECK(run("ba --nodes 2 -m 5").code == 1);
}

TEST_CASE("homophily and interactions subcommands") {
  auto edges = write_file("cli_hedges.txt", "src dst\na b\nb c\n");
  auto attrs = write_file("cli_attrs.csv",
                          "id,flag,gender,major,secondmajor,dorm,year,school\n"
                          "a,1,2,3,4,5,6,7\n"
                          "b,1,2,3,4,5,6,8\n"
                          "c,0,2,3,4,5,6,7\n");
  auto dir = fresh_dir("h1");
  auto r = run("homophily --edges " + edges.string() + " --attrs " + attrs.string() +
               " --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "hk.csv"));
  CHECK(slurp(dir / "hk.csv").rfind("k,mean,count\n", 0) == 0);

  // b has no attribute row: connected nodes must be fully covered.
  auto sparse = write_file("cli_attrs_sparse.csv",
                           "id,flag,gender,major,secondmajor,dorm,year,school\n"
                           "a,1,2,3,4,5,6,7\nc,1,2,3,4,5,6,7\n");
  CHECK(run("homophily --edges " + edges.string() + " --attrs " + sparse.string() +
            " --out " + fresh_dir("h2").string())
            .code == 2);

  auto wall = write_file("cli_wall.txt", "a b 5\nb a 6\na c 7\n");
  auto exch = write_file("cli_exch.csv", "node,sent,received\na,2,1\nb,1,1\n");
  auto idir = fresh_dir("i1");
  auto ri = run("interactions --edges " + edges.string() + " --wall " + wall.string() +
                " --exchange " + exch.string() + " --out " + idir.string());
  CHECK(ri.code == 0);
  CHECK(fs::exists(idir / "lk.csv"));
  CHECK(fs::exists(idir / "rk.csv"));
  auto manifest = slurp(idir / "manifest.json");
  CHECK(manifest.find("\"lk.csv\"") != std::string::npos);
  CHECK(manifest.find("\"rk.csv\"") != std::string::npos);

  // Neither ledger given: nothing to do.
  CHECK(run("interactions --edges " + edges.string()).code == 1);
}

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& envPrefix = "") {
  const std::string cmd =
      envPrefix + std::string(QTHETA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("expand psi prints nonzero exponent/coefficient pairs") {
  const auto r = run("expand psi --order 12");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(0,1)(1,1)(3,1)(6,1)(10,1)\n");
}

TEST_CASE("expand phi as csv carries a header row") {
  const auto r = run("expand phi --order 5 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "exponent,coefficient\n0,1\n1,2\n4,2\n");
}

TEST_CASE("expand of an unknown product exits 2") {
  CHECK(run("expand nosuch").exit_code == 2);
}

TEST_CASE("expand emits parseable newline-delimited json") {
  const auto r = run("expand psi --order 12 --format json");
  CHECK(r.exit_code == 0);
  std::size_t lines = 0, pos = 0;
  while ((pos = r.out.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 5);
  const auto first = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
  CHECK(first["exponent"] == 0);
  CHECK(first["coefficient"] == "1");
}

TEST_CASE("qfib routes") {
  CHECK(run("qfib 5 --route rec --variant offset0").out ==
        "1+q^2+q^3+q^4+q^6\n");
  CHECK(run("qfib 10 --route rec --eval-q1").out == "55\n");
  CHECK(run("qfib 3 --route closed --closed-kind triangular").out == "1+q\n");
  CHECK(run("qfib 3 --route two-var").out == "1+q^2*y\n");
  CHECK(run("qfib 5 --route nosuch").exit_code == 2);
}

TEST_CASE("partitions listing") {
  const auto r = run("partitions 5 --class distinct");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "5\n4 1\n3 2\n");
  CHECK(run("partitions 0 --class all").out == "-\n");
  CHECK(run("partitions 200").exit_code == 2);
}

TEST_CASE("partition ceiling override via environment") {
  CHECK(run("partitions 12", "QTHETA_PARTITION_CEILING=10 ").exit_code == 2);
  CHECK(run("partitions 12", "QTHETA_PARTITION_CEILING=12 ").exit_code == 0);
}

TEST_CASE("weighted partition counts") {
  const auto r = run("partitions 2 --class distinct --stat num-parts");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "y\n");
}

TEST_CASE("verify exit codes and json verdict") {
  CHECK(run("verify ramanujan-2-dissection --order 300").exit_code == 0);
  const auto r =
      run("verify q-catalan-master --params n=2,r=1,variant=0 --format json");
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "FAILS");
  CHECK(j["firstDivergentExponent"] == 1);
  CHECK(j["lhsCoeff"] == "0");
  CHECK(j["rhsCoeff"] == "-1");
  CHECK(run("verify nosuch").exit_code == 2);
  CHECK(run("verify q-catalan-master --params n=2").exit_code == 2);
}

TEST_CASE("oracle-backed identities take --order as the enumeration bound") {
  CHECK(run("verify psi-distinct-parts --order 60").exit_code == 1);
  // the default order of 500 is beyond the partition ceiling of 120
  CHECK(run("verify psi-distinct-parts").exit_code == 2);
  CHECK(run("verify psi-distinct-parts --order 200",
            "QTHETA_PARTITION_CEILING=200 ")
            .exit_code == 1);
}

TEST_CASE("the seedless flag is reserved and rejected") {
  CHECK(run("expand psi --seedless").exit_code == 2);
}

TEST_CASE("verify --out writes the same JSONL verdict as stdout") {
  namespace fs = std::filesystem;
  const fs::path p = fs::temp_directory_path() / "qtheta_verdict.jsonl";
  const auto r = run(
      "verify q-catalan-master --params n=2,r=1,variant=0 --format json "
      "--out " +
      p.string());
  CHECK(r.exit_code == 1);
  CHECK(slurp(p) == r.out);
  fs::remove(p);
}

TEST_CASE("verdict csv output has the documented columns") {
  const auto r =
      run("verify q-catalan-master --params n=2,r=1,variant=0 --format csv");
  CHECK(r.exit_code == 1);
  CHECK(r.out ==
        "id,params,order,status,firstDivergentExponent,lhsCoeff,rhsCoeff\n"
        "q-catalan-master,n=2;r=1;variant=0,0,FAILS,1,0,-1\n");
}

TEST_CASE("audit runs are byte-identical") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path a = dir / "qtheta_audit_a.jsonl";
  const fs::path b = dir / "qtheta_audit_b.jsonl";
  const std::string flags =
      "audit --order 40 --grid-n 4 --weighted-n 3 --oracle-up-to 12 "
      "--delta-k 1 --jtp-j 1 --gauss-n 3 --format json --out ";
  const auto first = run(flags + a.string());
  const auto second = run(flags + b.string());
  CHECK(first.exit_code == 1);  // the registry contains failing identities
  CHECK(second.exit_code == 1);
  const std::string fileA = slurp(a);
  CHECK(!fileA.empty());
  CHECK(fileA == slurp(b));
  CHECK(fileA == first.out);
  fs::remove(a);
  fs::remove(b);
}

#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "sliceop/moebius.hpp"
#include "sliceop/serialization.hpp"
#include "sliceop/series.hpp"

using namespace sliceop;

namespace {

struct RunResult {
  int status = -1;
  std::string output;
};

// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SLICEOP_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

struct TempSeries {
  std::string path;
  TempSeries(const std::string& name, const Series& f) : path(name) { write_series(f, path); }
  ~TempSeries() { std::remove(path.c_str()); }
};

const Quaternion one{1.0, 0.0, 0.0, 0.0};
const Quaternion qi = Quaternion::i();
const Quaternion qj = Quaternion::j();
const Quaternion qk = Quaternion::k();

}  // namespace

TEST_CASE("star subcommand multiplies series files") {
  TempSeries a("cli_a.json", Series::monomial(1, qi));
  TempSeries b("cli_b.json", Series::monomial(1, qj));
  const RunResult r = run_cli("--out json star " + a.path + " " + b.path);
  REQUIRE(r.status == 0);
  const Series prod = parse_series_text(r.output);
  CHECK(coeff_distance(prod, Series::monomial(2, qk)) == 0.0);
}

TEST_CASE("compose subcommand reproduces the worked example") {
  TempSeries f("cli_f.json", Series::monomial(2, one));
  TempSeries phi("cli_phi.json", Series({Quaternion{}, qj, qi}));
  for (const std::string variant : {"odot-right", "odot-left"}) {
    const RunResult r =
        run_cli("--out json compose " + f.path + " " + phi.path + " --variant " + variant);
    REQUIRE(r.status == 0);
    CHECK(coeff_distance(parse_series_text(r.output),
                         Series({{}, {}, {-1.0}, {}, {-1.0}})) <= 1e-13);
  }
  const RunResult r =
      run_cli("--out json compose " + f.path + " " + phi.path + " --variant vlacci-right");
  REQUIRE(r.status == 0);
  CHECK(coeff_distance(parse_series_text(r.output),
                       Series({{}, {}, {-1.0}, {0.0, 0.0, 0.0, -2.0 / 3.0}, {-1.0}})) <= 1e-13);
}

TEST_CASE("compose writes estimates and output files") {
  TempSeries f("cli_f2.json", Series::monomial(2, one));
  TempSeries phi("cli_phi2.json", Series({Quaternion{}, qj, qi}));
  const RunResult r = run_cli("compose " + f.path + " " + phi.path +
                              " --variant vlacci-left --estimate cli_est.json -o cli_out.json");
  REQUIRE(r.status == 0);
  const Series out = parse_series("cli_out.json");
  CHECK(out.degree() == 4);
  std::FILE* fp = std::fopen("cli_est.json", "r");
  REQUIRE(fp != nullptr);
  char buf[512];
  const std::size_t got = std::fread(buf, 1, sizeof buf - 1, fp);
  std::fclose(fp);
  buf[got] = '\0';
  CHECK(buf[0] == '[');
  std::remove("cli_est.json");
  std::remove("cli_out.json");
}

TEST_CASE("conjugate and reciprocal subcommands") {
  TempSeries f("cli_c.json", Series({one, qi}));
  const RunResult conj_r = run_cli("--out json conjugate " + f.path);
  REQUIRE(conj_r.status == 0);
  CHECK(coeff_distance(parse_series_text(conj_r.output), Series({one, -qi})) == 0.0);

  const RunResult symm = run_cli("--out json conjugate --symmetrize " + f.path);
  REQUIRE(symm.status == 0);
  CHECK(coeff_distance(parse_series_text(symm.output), Series({one, {}, one})) == 0.0);

  TempSeries g("cli_r.json", Series({one, -qi}));
  const RunResult rec = run_cli("--degree 6 --out json reciprocal " + g.path);
  REQUIRE(rec.status == 0);
  const Series rr = parse_series_text(rec.output);
  CHECK(coeff_distance(star_trunc(Series({one, -qi}), rr, 6), Series::constant(one)) <= 1e-14);

  // Global flags must also parse when given after the subcommand.
  const RunResult post = run_cli("reciprocal " + g.path + " --degree 6 --out json");
  REQUIRE(post.status == 0);
  CHECK(post.output == rec.output);
}

TEST_CASE("norm subcommand emits h2 and sup norms") {
  TempSeries m("cli_m.json", mobius_series(Quaternion{0.5}, 256));
  const RunResult r = run_cli("--out json norm " + m.path);
  REQUIRE(r.status == 0);
  CHECK(r.output.find("\"p\":2") != std::string::npos);
  const std::string key = "\"norm\":";
  const double value = std::stod(r.output.substr(r.output.find(key) + key.size()));
  CHECK(std::fabs(value - 1.0) <= 1e-9);

  const RunResult sup = run_cli("--out table norm --p inf " + m.path);
  REQUIRE(sup.status == 0);
  CHECK(sup.output.find("norm (p=inf)") != std::string::npos);
}

TEST_CASE("opnorm subcommand brackets the closed form") {
  TempSeries m("cli_op.json", mobius_series(Quaternion{0.5}, 96));
  const RunResult r = run_cli("--degree 96 --out json opnorm " + m.path);
  REQUIRE(r.status == 0);
  CHECK(r.output.find("\"N\":96") != std::string::npos);
  CHECK(r.output.find("\"side\":\"C\"") != std::string::npos);
  const std::string key = "\"norm\":";
  const double value = std::stod(r.output.substr(r.output.find(key) + key.size()));
  CHECK(value > 1.0);
  CHECK(value < std::sqrt(3.0) * 1.01);

  const RunResult sweep = run_cli("--degree 32 --out csv opnorm --sweep " + m.path);
  REQUIRE(sweep.status == 0);
  CHECK(sweep.output.rfind("N,norm\n", 0) == 0);
  CHECK(sweep.output.find("\n16,") != std::string::npos);
  CHECK(sweep.output.find("\n32,") != std::string::npos);
}

TEST_CASE("iterate and classify subcommands") {
  const ImaginaryUnit ui(qi);
  TempSeries h("cli_h.json", slice_automorphism({-0.5, 0.0}, 0.0, ui, 64));
  const RunResult it = run_cli("--degree 64 --out json iterate -n 2 " + h.path);
  REQUIRE(it.status == 0);
  const Series h2 = parse_series_text(it.output);
  CHECK(abs(h2.evaluate(Quaternion{}) - Quaternion{0.8}) <= 1e-9);

  const RunResult cl = run_cli("--out json classify " + h.path);
  REQUIRE(cl.status == 0);
  CHECK(cl.output.find("\"type\":\"hyperbolic\"") != std::string::npos);
  CHECK(cl.output.find("\"location\":\"boundary\"") != std::string::npos);

  const RunResult table = run_cli("classify " + h.path);
  REQUIRE(table.status == 0);
  CHECK(table.output.find("type: hyperbolic") != std::string::npos);
}

TEST_CASE("denjoy-wolff subcommand emits a decreasing trace") {
  const ImaginaryUnit ui(qi);
  TempSeries h("cli_dw.json", slice_automorphism({-0.5, 0.0}, 0.0, ui, 128));
  const RunResult csv = run_cli("--tol 1e-6 --out csv denjoy-wolff " + h.path);
  REQUIRE(csv.status == 0);
  REQUIRE(csv.output.rfind("n,sup_distance\n", 0) == 0);
  double prev = 1e9;
  int rows = 0;
  std::size_t pos = csv.output.find('\n') + 1;
  while (pos < csv.output.size()) {
    const std::size_t comma = csv.output.find(',', pos);
    const double d = std::stod(csv.output.substr(comma + 1));
    ++rows;
    if (rows >= 5) CHECK(d <= prev + 1e-12);
    prev = d;
    pos = csv.output.find('\n', pos) + 1;
  }
  CHECK(rows >= 5);
  CHECK(rows <= 40);

  const RunResult table = run_cli("--tol 1e-6 denjoy-wolff " + h.path);
  REQUIRE(table.status == 0);
  CHECK(table.output.find("limit") != std::string::npos);
}

TEST_CASE("verify subcommand honors selectors, exit codes, and determinism") {
  const RunResult unknown = run_cli("--out table verify --suite nonexistent");
  CHECK(unknown.status == 0);  // no fail entries
  CHECK(unknown.output.find("unknown suite selector") != std::string::npos);

  const RunResult rep = run_cli("--out json verify --suite representation");
  REQUIRE(rep.status == 0);
  CHECK(rep.output.find("\"fail\":0") != std::string::npos);
  CHECK(rep.output.find("\"paper_anchor\":") != std::string::npos);

  const RunResult again = run_cli("--out json verify --suite representation");
  CHECK(again.output == rep.output);  // byte identical for identical flags

  const RunResult table = run_cli("verify --suite compactness");
  REQUIRE(table.status == 0);
  CHECK(table.output.find("summary:") != std::string::npos);
}

TEST_CASE("bad inputs exit with an error") {
  std::FILE* fp = std::fopen("cli_bad.json", "w");
  REQUIRE(fp != nullptr);
  std::fputs("{\"coeffs\":[[1,0,0]]}", fp);
  std::fclose(fp);
  const RunResult r = run_cli("--out json norm cli_bad.json");
  CHECK(r.status == 2);
  CHECK(r.output.find("error:") != std::string::npos);
  CHECK(r.output.find("coeffs[0]") != std::string::npos);
  std::remove("cli_bad.json");

  const RunResult missing = run_cli("--out json norm no_such_file.json");
  CHECK(missing.status == 2);
}

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "depcoef/coefficient.hpp"
#include "depcoef/generators.hpp"
#include "depcoef/io.hpp"
#include "depcoef/run.hpp"

using namespace depcoef;

namespace {

const std::filesystem::path kFixtures{DEPCOEF_FIXTURE_DIR};

JointMatrix parse(const std::string& text, ValidationMode mode = ValidationMode::probabilities) {
  std::istringstream in(text);
  return parse_matrix(in, mode);
}

Error parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse failure");
  return Error(Errc::IoError, "unreachable");
}

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run_captured(const RunConfig& cfg) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig compute_config(const std::filesystem::path& file) {
  RunConfig cfg;
  cfg.command = Command::compute;
  cfg.input_path = file;
  return cfg;
}

}  // namespace

TEST_CASE("parse_matrix") {
  CHECK(parse("0.25,0.25\n0.25,0.25\n") == validate({{0.25, 0.25}, {0.25, 0.25}}));
  CHECK(parse("2,0\n0,2\n", ValidationMode::counts) == validate({{0.5, 0}, {0, 0.5}}));
  CHECK(parse("# header\n0.5, 0\r\n\n0 ,0.5\n") == validate({{0.5, 0}, {0, 0.5}}));
  CHECK(parse("0.5,0\n0,0.5") == validate({{0.5, 0}, {0, 0.5}}));
}

TEST_CASE("parse_matrix errors") {
  const Error ragged = parse_error("1,2\n3\n");
  CHECK(ragged.code() == Errc::RaggedRows);
  CHECK(ragged.row() == 2);

  const Error bad = parse_error("0.5,0.5\n0.5,x\n");
  CHECK(bad.code() == Errc::ParseError);
  CHECK(bad.row() == 2);
  CHECK(bad.col() == 2);

  CHECK(parse_error("0.5,,0.5\n").code() == Errc::ParseError);
  CHECK(parse_error("0.5,0.5junk\n").code() == Errc::ParseError);
  CHECK(parse_error("# nothing\n").code() == Errc::EmptyInput);
  CHECK(parse_error("0.5,-0.5\n0.5,0.5\n").code() == Errc::NegativeEntry);
}

TEST_CASE("parse_pairs") {
  std::istringstream four("a,x\na,x\nb,y\nb,y\n");
  const SamplePairs s = parse_pairs(four);
  CHECK(s.size() == 4);
  CHECK(tabulate(s) == validate({{0.5, 0}, {0, 0.5}}));

  std::istringstream commented("# comment\na,x\n");
  CHECK(parse_pairs(commented).size() == 1);

  std::istringstream missing("a\n");
  try {
    parse_pairs(missing);
    FAIL("missing field accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(e.row() == 1);
  }
  std::istringstream empty("# none\n");
  CHECK_THROWS_AS(parse_pairs(empty), Error);
}

TEST_CASE("format_real") {
  CHECK(format_real(0.0) == "0.0");
  CHECK(format_real(1.0) == "1.0");
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1e-30) == "1.0000000000000001e-30");
  for (double v : {0.1, 1.0 / 3.0, 6.02e23, 1e-300, 0x1p-1074}) {
    CHECK(std::strtod(format_real(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("write_matrix round-trips bit-exactly") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const JointMatrix p = gen_random(3, 5, seed);
    std::ostringstream out;
    write_matrix(out, p);
    CHECK(parse(out.str()) == p);
  }
}

TEST_CASE("to_json key order and optional members") {
  ComputeOutput r;
  r.report = make_report(0.01, 0.0625, orient(validate({{0.4, 0.1}, {0.2, 0.3}})), Algorithm::fast);
  r.dropped_cols = {1, 3};
  CHECK(to_json(r) ==
        R"({"n":2,"m":2,"transposed":false,"dropped_rows":[],"dropped_cols":[1,3],"mu":0.01,"mu_f":0.0625,"k":0.16,"classification":"intermediate","algorithm":"fast"})");
  r.baselines = BaselineReport{0.5, 0.25, 0.125};
  r.k_transposed = 0.16;
  CHECK(to_json(r).ends_with(
      R"("baselines":{"chi_square":0.5,"cramers_v":0.25,"mutual_information_nats":0.125},"k_transposed":0.16})"));
}

TEST_CASE("run compute on the worked fixtures") {
  Captured uniform = run_captured(compute_config(kFixtures / "uniform.csv"));
  CHECK(uniform.code == kExitOk);
  CHECK(uniform.out.find(R"("k":0.0,"classification":"independent")") != std::string::npos);

  Captured functional = run_captured(compute_config(kFixtures / "functional.csv"));
  CHECK(functional.code == kExitOk);
  CHECK(functional.out.find(R"("k":1.0,"classification":"functional")") != std::string::npos);

  RunConfig cfg = compute_config(kFixtures / "intermediate.csv");
  cfg.algorithm = AlgorithmChoice::both;
  Captured mid = run_captured(cfg);
  CHECK(mid.code == kExitOk);
  CHECK(mid.out.find(R"("mu":0.0099999999999999985,"mu_f":0.0625,")") != std::string::npos);
  CHECK(mid.out.find(R"("k":0.15999999999999998)") != std::string::npos);
}

TEST_CASE("run options: plain output, baselines, both orientations, counts") {
  RunConfig cfg = compute_config(kFixtures / "intermediate.csv");
  cfg.output = OutputFormat::plain;
  CHECK(run_captured(cfg).out == "k=0.15999999999999998\n");

  cfg = compute_config(kFixtures / "intermediate.csv");
  cfg.with_baselines = true;
  cfg.orientation = OrientationChoice::both;
  const Captured both = run_captured(cfg);
  CHECK(both.out.find(R"("baselines":{"chi_square":)") != std::string::npos);
  CHECK(both.out.find(R"("k_transposed":)") != std::string::npos);

  cfg = compute_config(kFixtures / "counts.csv");
  cfg.input_kind = InputKind::matrix_counts;
  CHECK(run_captured(cfg).out.find(R"("k":1.0)") != std::string::npos);

  cfg = compute_config(kFixtures / "pairs.csv");
  cfg.command = Command::estimate;
  CHECK(run_captured(cfg).out.find(R"("k":1.0)") != std::string::npos);
}

TEST_CASE("run exit codes") {
  const Captured ragged = run_captured(compute_config(kFixtures / "ragged.csv"));
  CHECK(ragged.code == kExitInputError);
  CHECK(ragged.out.empty());
  CHECK(ragged.err.find("RaggedRows") != std::string::npos);

  CHECK(run_captured(compute_config(kFixtures / "missing.csv")).code == kExitInputError);

  RunConfig bad_tolerance = compute_config(kFixtures / "uniform.csv");
  bad_tolerance.thresholds.tau_indep = -1.0;
  CHECK(run_captured(bad_tolerance).code == kExitInputError);

  RunConfig fault = compute_config(kFixtures / "functional.csv");
  fault.inject_mu_scale = 2.0;
  const Captured bound = run_captured(fault);
  CHECK(bound.code == kExitInternalError);
  CHECK(bound.err.find("BoundViolation") != std::string::npos);

  fault = compute_config(kFixtures / "intermediate.csv");
  fault.algorithm = AlgorithmChoice::both;
  fault.inject_mu_scale = 1.0 + 1e-9;
  const Captured mismatch = run_captured(fault);
  CHECK(mismatch.code == kExitInternalError);
  CHECK(mismatch.err.find("KernelMismatch") != std::string::npos);
}

TEST_CASE("gen then compute round-trips k") {
  const auto dir = std::filesystem::temp_directory_path() / "depcoef_test_io";
  std::filesystem::create_directories(dir);
  for (GeneratorKind kind : {GeneratorKind::product, GeneratorKind::functional, GeneratorKind::mixture,
                             GeneratorKind::random}) {
    RunConfig gen;
    gen.command = Command::gen;
    gen.generator = {kind, 3, 4, 0.4, 0};
    gen.seed = 17;
    gen.output_path = dir / "m.csv";
    REQUIRE(run_captured(gen).code == kExitOk);

    GeneratorSpec spec = gen.generator;
    spec.seed = 17;
    const double in_memory = coefficient(orient(generate(spec))).k;
    RunConfig compute = compute_config(gen.output_path);
    compute.output = OutputFormat::plain;
    const Captured c = run_captured(compute);
    REQUIRE(c.code == kExitOk);
    const double from_file = std::stod(c.out.substr(2));
    CHECK(std::abs(from_file - in_memory) <= 1e-12 * std::max(in_memory, 1e-300));
  }
  std::filesystem::remove_all(dir);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "qboltz/errors.hpp"
#include "qboltz/model_io.hpp"

using namespace qboltz;

TEST_CASE("minimal classical file parses") {
  const ModelFile m = parse_model_string(
      "classical 2\n"
      "w 1 2 0.5\n");
  CHECK(m.kind == ModelKind::Classical);
  CHECK(m.n == 2);
  CHECK(m.w.size() == 1);
  CHECK(m.w[0].i == 0);
  CHECK(m.w[0].j == 1);
  CHECK(m.w[0].value == 0.5);
}

TEST_CASE("comments, blank lines and metadata") {
  const ModelFile m = parse_model_string(
      "# a model\n"
      "\n"
      "quantum 2   # header trailing comment\n"
      "meta name frustrated pair\n"
      "h 1 3 0.25\n");
  CHECK(m.kind == ModelKind::Quantum);
  CHECK(m.metadata.at("name") == "frustrated pair");
  CHECK(m.h.size() == 1);
  CHECK(m.h[0].s == 3);
}

TEST_CASE("records are canonicalized: sites sorted, spins permuted along") {
  const ModelFile classical = parse_model_string(
      "classical 3\n"
      "w 3 1 0.5\n"
      "v 3 2 1 -0.25\n");
  CHECK(classical.w[0].i == 0);
  CHECK(classical.w[0].j == 2);
  CHECK(classical.v[0].i == 0);
  CHECK(classical.v[0].k == 2);

  const ModelFile quantum = parse_model_string(
      "quantum 2\n"
      "w 2 1 1 3 0.5\n");
  CHECK(quantum.w[0].i == 0);
  CHECK(quantum.w[0].j == 1);
  CHECK(quantum.w[0].s == 3);  // spin follows its site
  CHECK(quantum.w[0].t == 1);
}

TEST_CASE("parse errors carry line numbers and name the offence") {
  // duplicate tuple, even across orderings
  try {
    parse_model_string(
        "classical 3\n"
        "w 1 2 0.5\n"
        "w 2 1 0.25\n");
    FAIL("expected ModelParseError");
  } catch (const ModelParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    CHECK(std::string(e.what()).find("w 1 2") != std::string::npos);
  }

  // out-of-range spin label
  CHECK_THROWS_AS(parse_model_string("quantum 2\nh 1 4 0.5\n"), ModelParseError);
  // out-of-range site
  CHECK_THROWS_AS(parse_model_string("classical 2\nh 3 0.5\n"), ModelParseError);
  // repeated site inside one tuple
  CHECK_THROWS_AS(parse_model_string("classical 3\nw 2 2 0.5\n"), ModelParseError);
  // non-finite value
  CHECK_THROWS_AS(parse_model_string("classical 2\nh 1 inf\n"), ModelParseError);
  // malformed field count
  CHECK_THROWS_AS(parse_model_string("classical 2\nw 1 2\n"), ModelParseError);
  // unknown record
  CHECK_THROWS_AS(parse_model_string("classical 2\nz 1 0.5\n"), ModelParseError);
  // missing header
  CHECK_THROWS_AS(parse_model_string("h 1 0.5\n"), ModelParseError);
  CHECK_THROWS_AS(parse_model_string("classical 0\n"), ModelParseError);
}

TEST_CASE("emit-parse roundtrip is a fixed point") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const ModelFile classical =
        gen_random_model(ModelKind::Classical, 5, 1.0, 0.5, 0.25, seed);
    CHECK(parse_model_string(emit_model_string(classical)) == classical);

    ModelFile quantum =
        gen_random_model(ModelKind::Quantum, 3, 1.0, 0.5, 0.25, seed);
    quantum.metadata["origin"] = "fixture";
    const std::string text = emit_model_string(quantum);
    CHECK(parse_model_string(text) == quantum);
    CHECK(emit_model_string(parse_model_string(text)) == text);
  }
}

TEST_CASE("generation is deterministic and honors scales") {
  const ModelFile a = gen_random_model(ModelKind::Classical, 4, 1.0, 0.5, 0.25, 9);
  const ModelFile b = gen_random_model(ModelKind::Classical, 4, 1.0, 0.5, 0.25, 9);
  CHECK(emit_model_string(a) == emit_model_string(b));

  // zero triple scale leaves a second-order model
  const ModelFile second =
      gen_random_model(ModelKind::Classical, 4, 1.0, 0.5, 0.0, 9);
  CHECK(second.v.empty());
  CHECK(!second.w.empty());
  // shared draws: h and w agree with the full model
  CHECK(second.h == a.h);
  CHECK(second.w == a.w);

  // all scales zero: the empty model
  const ModelFile zero = gen_random_model(ModelKind::Quantum, 3, 0.0, 0.0, 0.0, 5);
  CHECK(zero.h.empty());
  CHECK(zero.w.empty());
  CHECK(zero.v.empty());

  CHECK_THROWS_AS(gen_random_model(ModelKind::Classical, 21, 1, 1, 1, 0),
                  std::domain_error);
  CHECK_THROWS_AS(gen_random_model(ModelKind::Quantum, 11, 1, 1, 1, 0),
                  std::domain_error);
  CHECK_THROWS_AS(gen_random_model(ModelKind::Classical, 4, -1, 1, 1, 0),
                  std::invalid_argument);
}

TEST_CASE("conversions to parameter records") {
  const ModelFile m = parse_model_string(
      "classical 3\n"
      "h 2 -0.5\n"
      "w 1 3 0.25\n"
      "v 1 2 3 0.125\n");
  const CbmParams p = to_cbm_params(m);
  CHECK(p.h(1) == -0.5);
  CHECK(p.w(0, 2) == 0.25);
  CHECK(p.v(0, 1, 2) == 0.125);
  CHECK_THROWS_AS(to_qbm_params(m), std::invalid_argument);

  const ModelFile q = parse_model_string(
      "quantum 2\n"
      "h 1 2 0.5\n"
      "w 1 2 3 1 -0.25\n");
  const QbmParams qp = to_qbm_params(q);
  CHECK(qp.h(0, 2) == 0.5);
  CHECK(qp.w(0, 1, 3, 1) == -0.25);
  CHECK(qp.w(1, 0, 1, 3) == -0.25);
  CHECK_THROWS_AS(to_cbm_params(q), std::invalid_argument);

  // params -> model -> params is lossless
  const ModelFile back = from_cbm_params(p);
  CHECK(back == m);
}

TEST_CASE("coupling rescaling") {
  const ModelFile base =
      gen_random_model(ModelKind::Classical, 4, 1.0, 1.0, 1.0, 3);
  const ModelFile scaled = scale_couplings(base, 0.5);
  CHECK(scaled.h == base.h);
  for (std::size_t r = 0; r < base.w.size(); ++r) {
    CHECK(scaled.w[r].value == 0.5 * base.w[r].value);
  }
  for (std::size_t r = 0; r < base.v.size(); ++r) {
    CHECK(scaled.v[r].value == 0.5 * base.v[r].value);
  }
}

#include "doctest.h"
#include "gorlab/lab.hpp"
#include "test_rings.hpp"

using namespace gorlab;
using namespace testring;

namespace {

RingSpecData spec_of(const std::vector<std::string>& vars, const std::vector<std::string>& ideal,
                     bool rational = true, std::uint32_t p = 0) {  // NOLINT
  RingSpecData s;
  s.rational = rational;
  s.p = p;
  s.vars = vars;
  s.degrees.assign(vars.size(), 1);
  s.ideal = ideal;
  return s;
}

const RingSpecData kR1 = spec_of({"x", "y"}, {"x^2", "x*y"});
const RingSpecData kR2 = spec_of({"x", "y"}, {"x^2"});
const RingSpecData kR3 = spec_of({"x", "y"}, {"x^2", "y^2"});
const RingSpecData kR4 = spec_of({"x", "y"}, {"x^2", "x*y", "y^2"});
const RingSpecData kQxy = spec_of({"x", "y"}, {});

}  // namespace

TEST_CASE("ring spec parsing") {
  auto spec = parse_ring_spec(R"({"field":"Q","vars":["x","y"],"ideal":["x^2","x*y"]})");
  CHECK(spec.rational);
  CHECK(spec.vars == std::vector<std::string>{"x", "y"});
  CHECK(spec.degrees == std::vector<int>{1, 1});
  CHECK(spec.ideal.size() == 2);
  auto fp = parse_ring_spec(R"({"field":{"Fp":101},"vars":["x"],"ideal":[]})");
  CHECK_FALSE(fp.rational);
  CHECK(fp.p == 101);
  CHECK_THROWS_AS(parse_ring_spec("not json"), InputError);
  CHECK_THROWS_AS(parse_ring_spec(R"({"vars":[]})"), InputError);
  CHECK_THROWS_AS(parse_ring_spec(R"({"field":"R","vars":["x"]})"), InputError);
  CHECK_THROWS_AS(parse_ring_spec(R"({"vars":["x"],"degrees":[1,2]})"), InputError);
  SUBCASE("hash is stable and input-sensitive") {
    CHECK(spec.hash() == parse_ring_spec(
        R"({"field":"Q","vars":["x","y"],"ideal":["x^2","x*y"]})").hash());
    CHECK(spec.hash() != kR2.hash());
  }
}

TEST_CASE("analyze: corpus verdicts") {
  SUBCASE("R1: the paper's non-CM ring with an irreducible parameter ideal") {
    auto rep = analyze_ring(build_algebra<Q>(kR1), kR1);
    CHECK(rep.dim == 1);
    CHECK(rep.depth == 0);
    CHECK_FALSE(rep.cm);
    CHECK_FALSE(rep.gorenstein);
    CHECK_FALSE(rep.type.has_value());
    CHECK(rep.socle_h == std::vector<long>{1, 1});
  }
  SUBCASE("R2: Gorenstein of type 1") {
    auto rep = analyze_ring(build_algebra<Q>(kR2), kR2);
    CHECK(rep.dim == 1);
    CHECK(rep.depth == 1);
    CHECK(rep.cm);
    CHECK(rep.gorenstein);
    REQUIRE(rep.type.has_value());
    CHECK(*rep.type == 1);
  }
  SUBCASE("R4 = Q[x,y]/m^2: artinian of type 2, not Gorenstein") {
    auto rep = analyze_ring(build_algebra<Q>(kR4), kR4);
    CHECK(rep.dim == 0);
    CHECK(rep.cm);
    CHECK_FALSE(rep.gorenstein);
    REQUIRE(rep.type.has_value());
    CHECK(*rep.type == 2);
    CHECK(rep.socle_h == std::vector<long>{2});
  }
  SUBCASE("report invariants on the corpus") {
    for (const auto& spec : {kR1, kR2, kR3, kR4, kQxy}) {
      auto rep = analyze_ring(build_algebra<Q>(spec), spec);
      if (rep.gorenstein) CHECK(rep.cm);
      CHECK(rep.cm == (rep.depth == rep.dim));
      if (rep.cm) CHECK(rep.gorenstein == (rep.type && *rep.type == 1));
      CHECK(rep.socle_h.size() == static_cast<std::size_t>(rep.dim) + 1);
      CHECK(rep.socle_h.back() >= 1);
      CHECK(rep.ell.back() >= 1);
    }
  }
}

TEST_CASE("index sweeps") {
  SUBCASE("R1 over (y^n): 1, 2, 2, 2, 2, 2 with prediction 2") {
    auto A = build_algebra<Q>(kR1);
    auto t = index_sweep(A, kR1, seq(A.ring(), {"y"}), 6);
    std::vector<long> got;
    for (const auto& r : t.rows) got.push_back(r.index);
    CHECK(got == std::vector<long>{1, 2, 2, 2, 2, 2});
    CHECK(t.prediction == 2);
    CHECK(t.rows[0].irreducible);
    CHECK_FALSE(t.rows[1].irreducible);
  }
  SUBCASE("R2 over (y^n): all 1, prediction 1") {
    auto A = build_algebra<Q>(kR2);
    auto t = index_sweep(A, kR2, seq(A.ring(), {"y"}), 4);
    for (const auto& r : t.rows) CHECK(r.index == 1);
    CHECK(t.prediction == 1);
  }
  SUBCASE("regular ring over (x^n, y^n): all 1") {
    auto A = build_algebra<Q>(kQxy);
    auto t = index_sweep(A, kQxy, seq(A.ring(), {"x", "y"}), 3);
    for (const auto& r : t.rows) CHECK(r.index == 1);
  }
  SUBCASE("invalid sop rejected") {
    auto A = build_algebra<Q>(kR1);
    CHECK_THROWS_AS(index_sweep(A, kR1, seq(A.ring(), {"x"}), 3), InputError);
  }
}

TEST_CASE("theorem experiment") {
  SUBCASE("R1: 0/20 irreducible among deep parameter ideals") {
    auto A = build_algebra<Q>(kR1);
    auto v = theorem_main_check(A, kR1, 20);
    CHECK_FALSE(v.gorenstein);
    CHECK(v.irreducible_count == 0);
    CHECK(v.ell == 2);
    CHECK(v.verdict == "not Gorenstein; 0/20 irreducible in m^2");
  }
  SUBCASE("R2: witness at the first sample") {
    auto A = build_algebra<Q>(kR2);
    auto v = theorem_main_check(A, kR2, 20);
    CHECK(v.gorenstein);
    CHECK(v.first_witness == 0);
    CHECK(v.verdict == "Gorenstein; witness found at sample 1");
  }
  SUBCASE("R3 (d = 0): the zero parameter ideal is irreducible") {
    auto A = build_algebra<Q>(kR3);
    auto v = theorem_main_check(A, kR3, 5);
    CHECK(v.gorenstein);
    CHECK(v.verdict == "Gorenstein; zero parameter ideal irreducible (Soc dim 1)");
  }
}

TEST_CASE("corollary experiment") {
  SUBCASE("R2: a witness inside m^n for every n = 1..4") {
    auto A = build_algebra<Q>(kR2);
    auto t = corollary_search(A, kR2, 4, 10);
    REQUIRE(t.rows.size() == 4);
    for (const auto& r : t.rows) CHECK(r.found);
  }
  SUBCASE("R1: none at n = 2 among 50 samples, impossibility attached") {
    auto A = build_algebra<Q>(kR1);
    auto t = corollary_search(A, kR1, 2, 50);
    CHECK_FALSE(t.rows[1].found);
    CHECK(t.rows[1].theorem_verdict == "theorem: impossible for n >= ell_d = 2");
  }
  SUBCASE("Northcott-Rees probe: non-CM corpus ring fails at n = 2") {
    auto A = build_algebra<Q>(kR1);
    auto t = corollary_search(A, kR1, 2, 20);
    CHECK_FALSE(t.rows.back().found);
  }
}

TEST_CASE("emission and determinism") {
  SUBCASE("JSON round-trips to an equal report") {
    auto rep = analyze_ring(build_algebra<Q>(kR1), kR1);
    auto j = rep.to_json();
    auto back = RingReport::from_json(json::parse(j.dump()));
    CHECK(back == rep);
  }
  SUBCASE("identical spec + seed produce byte-identical JSON") {
    LabOptions opt;
    opt.seed = 1234;
    auto a = render(analyze_ring(build_algebra<Q>(kR1), kR1, opt), ReportFormat::Json);
    auto b = render(analyze_ring(build_algebra<Q>(kR1), kR1, opt), ReportFormat::Json);
    CHECK(a == b);
    auto t1 = render(theorem_main_check(build_algebra<Q>(kR1), kR1, 5, opt), ReportFormat::Json);
    auto t2 = render(theorem_main_check(build_algebra<Q>(kR1), kR1, 5, opt), ReportFormat::Json);
    CHECK(t1 == t2);
  }
  SUBCASE("CSV has one line per row plus a header") {
    auto A = build_algebra<Q>(kR1);
    auto t = index_sweep(A, kR1, seq(A.ring(), {"y"}), 6);
    std::string csv = render(t, ReportFormat::Csv);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  }
  SUBCASE("table format renders the prediction as a footer") {
    auto A = build_algebra<Q>(kR1);
    auto t = index_sweep(A, kR1, seq(A.ring(), {"y"}), 2);
    std::string table = render(t, ReportFormat::Table);
    CHECK(table.find("eventual-constant prediction: 2") != std::string::npos);
  }
  SUBCASE("unknown format flag rejected") {
    CHECK_THROWS_AS(parse_format("xml"), InputError);
  }
}

TEST_CASE("prime-field lane") {
  auto spec = spec_of({"x", "y"}, {"x^2", "x*y"}, false, 32003);
  auto A = build_algebra<GFp>(spec);
  auto rep = analyze_ring(A, spec);
  CHECK(rep.dim == 1);
  CHECK(rep.depth == 0);
  CHECK_FALSE(rep.gorenstein);
  CHECK(rep.socle_h == std::vector<long>{1, 1});
}

TEST_CASE("three-variable non-CM ring with growing phi kernels") {
  // R = Q[x,y,z]/(x^2, xy): dim 2, depth 1. The short exact sequence
  // 0 -> x*k[z](-1) -> R -> k[y,z] -> 0 gives Soc H^1 = Soc H^2 = 1.
  RingSpecData spec = spec_of({"x", "y", "z"}, {"x^2", "x*y"});
  auto A = build_algebra<Q>(spec);
  auto rep = analyze_ring(A, spec);
  CHECK(rep.dim == 2);
  CHECK(rep.depth == 1);
  CHECK_FALSE(rep.cm);
  CHECK_FALSE(rep.gorenstein);
  CHECK(rep.socle_h == std::vector<long>{0, 1, 1});
  CHECK(rep.ell.back() >= 2);  // (y,z) is irreducible, so ell_2 cannot be 1
  SUBCASE("(y, z) is an irreducible parameter ideal despite non-CM") {
    auto idx = index_of_reducibility(A, Ideal<Q>(A.ring(), polys(A.ring(), {"y", "z"})));
    CHECK(idx.index == 1);
    CHECK_FALSE(is_regular_sequence(A, seq(A.ring(), {"y", "z"})));
  }
  SUBCASE("theorem experiment is consistent (no exit-4 contradiction)") {
    auto v = theorem_main_check(A, spec, 5);
    CHECK_FALSE(v.gorenstein);
    CHECK(v.irreducible_count == 0);
  }
}

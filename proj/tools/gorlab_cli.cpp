// Command-line front end: analyze / sweep / theorem / corollary over a
// ring-spec JSON file. Exit codes: 0 success, 2 input error, 3 stabilization
// failure, 4 internal-consistency failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gorlab/lab.hpp"

namespace {

using gorlab::GFp;
using gorlab::Rational;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gorlab::InputError("cannot open spec file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GlobalFlags {
  std::string format = "table";
  std::string field;
  std::uint64_t seed = 42;
  int window = 2;
  int max_steps = 10;
  long degree_bound = 0;
  bool dump_complex = false;
  bool dump_resolution = false;
};

gorlab::RingSpecData load_spec(const std::string& path, const GlobalFlags& g) {
  gorlab::RingSpecData spec = gorlab::parse_ring_spec(read_file(path));
  if (!g.field.empty()) {
    if (g.field == "Q") {
      spec.rational = true;
      spec.p = 0;
    } else if (g.field.rfind("Fp:", 0) == 0) {
      long p = std::stol(g.field.substr(3));
      if (p < 2 || p >= (1l << 31)) throw gorlab::InputError("prime out of range in --field");
      spec.rational = false;
      spec.p = static_cast<std::uint32_t>(p);
    } else {
      throw gorlab::InputError("--field expects Q or Fp:<p>");
    }
  }
  return spec;
}

gorlab::LabOptions lab_options(const GlobalFlags& g) {
  gorlab::LabOptions opt;
  opt.seed = g.seed;
  opt.window = g.window;
  opt.max_steps = g.max_steps;
  opt.min_bound = g.degree_bound;
  opt.dump_complex = g.dump_complex;
  opt.dump_resolution = g.dump_resolution;
  return opt;
}

template <class Fn>
int with_algebra(const gorlab::RingSpecData& spec, Fn&& fn) {
  if (spec.rational) {
    auto R = gorlab::build_algebra<Rational>(spec);
    return fn(R);
  }
  auto R = gorlab::build_algebra<GFp>(spec);
  return fn(R);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gorlab: Cohen-Macaulay/Gorenstein analysis of graded rings via "
               "irreducible parameter ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--format", g.format, "Output format: table, json or csv")
      ->capture_default_str();
  app.add_option("--field", g.field, "Override the coefficient field: Q or Fp:<p>");
  app.add_option("--seed", g.seed, "Seed for all sampling")->capture_default_str();
  app.add_option("--window", g.window, "Stabilization window for direct systems")
      ->capture_default_str();
  app.add_option("--max-steps", g.max_steps, "Maximum direct-system stages")
      ->capture_default_str();
  app.add_option("--degree-bound", g.degree_bound,
                 "Floor for internal-degree truncation bounds");
  app.add_flag("--dump-complex", g.dump_complex, "Attach a JSON dump of the Koszul complex");
  app.add_flag("--dump-resolution", g.dump_resolution,
               "Attach a JSON dump of the minimal resolution of m");

  std::string spec_path;
  std::string sop_text = "";
  int max_n = 6, samples = 20, max_power = 4;

  CLI::App* analyze = app.add_subcommand("analyze", "Full ring analysis");
  analyze->add_option("spec", spec_path, "Ring-spec JSON file")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Index-of-reducibility sweep over (x^n)");
  sweep->add_option("spec", spec_path, "Ring-spec JSON file")->required();
  sweep->add_option("--sop", sop_text, "Comma-separated system of parameters")->required();
  sweep->add_option("--max-n", max_n, "Largest power")->capture_default_str();

  CLI::App* theorem = app.add_subcommand("theorem", "Main-theorem experiment at ell = ell_d");
  theorem->add_option("spec", spec_path, "Ring-spec JSON file")->required();
  theorem->add_option("--samples", samples, "Number of sampled parameter ideals")
      ->capture_default_str();

  CLI::App* corollary = app.add_subcommand("corollary",
                                           "Irreducible parameter ideals inside powers of m");
  corollary->add_option("spec", spec_path, "Ring-spec JSON file")->required();
  corollary->add_option("--max-power", max_power, "Largest power of m")->capture_default_str();
  corollary->add_option("--samples", samples, "Samples per power")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    gorlab::ReportFormat format = gorlab::parse_format(g.format);
    gorlab::RingSpecData spec = load_spec(spec_path, g);
    gorlab::LabOptions opt = lab_options(g);

    return with_algebra(spec, [&](auto& R) {
      using Alg = std::decay_t<decltype(R)>;
      using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
      static_assert(std::is_same_v<Alg, gorlab::GradedAlgebra<K>>);
      if (*analyze) {
        std::cout << gorlab::render(gorlab::analyze_ring(R, spec, opt), format);
      } else if (*sweep) {
        std::vector<gorlab::Polynomial<K>> elems;
        std::stringstream ss(sop_text);
        std::string part;
        while (std::getline(ss, part, ','))
          if (!part.empty()) elems.push_back(gorlab::parse_polynomial<K>(R.ring(), part));
        auto seq = gorlab::ParameterSequence<K>::of(std::move(elems));
        std::cout << gorlab::render(gorlab::index_sweep(R, spec, seq, max_n, opt), format);
      } else if (*theorem) {
        std::cout << gorlab::render(gorlab::theorem_main_check(R, spec, samples, opt), format);
      } else if (*corollary) {
        std::cout << gorlab::render(gorlab::corollary_search(R, spec, max_power, samples, opt),
                                    format);
      }
      return 0;
    });
  } catch (const gorlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}

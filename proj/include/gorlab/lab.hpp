#ifndef GORLAB_LAB_HPP
#define GORLAB_LAB_HPP

#include <string>
#include <utility>
#include <vector>

#include "gorlab/ext.hpp"
#include "gorlab/report.hpp"

namespace gorlab {

struct LabOptions {
  std::uint64_t seed = 42;
  int window = 2;
  int max_steps = 10;
  long min_bound = 0;
  long coeff_bound = 5;
  bool dump_complex = false;
  bool dump_resolution = false;
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed ^ (salt * 0x9e3779b97f4a7c15ull);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  return x;
}

inline long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

template <class K>
std::string sequence_str(const ParameterSequence<K>& seq) {
  if (seq.size() == 0) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? ", " : "") + seq.elements[i].str();
  return s + ")";
}

template <class K>
json record_json(const DirectSystemRecord<K>& rec) {
  json j;
  j["indices"] = rec.indices;
  j["module_socle_dims"] = rec.module_socle_dims;
  j["image_socle_dims"] = rec.image_socle_dims;
  j["socle_map_ranks"] = rec.socle_map_ranks;
  j["settled_at"] = rec.settled_at;
  j["socle_map_surjective"] = rec.socle_map_surjective;
  j["window"] = rec.window;
  j["stabilization_step"] = rec.stabilization_step;
  j["stable_stage"] = rec.stable_stage;
  j["limit_socle_dim"] = rec.limit_socle_dim;
  return j;
}

// Both local-cohomology pipelines for i = 0..d; throws ConsistencyError on
// any disagreement (the Lemma-3.2 alarm).
struct PipelinePair {
  std::vector<long> socle_h;
  std::vector<int> ell;
  json meta = json::array();
  std::vector<std::string> warnings;
};

template <class K>
PipelinePair socle_pipelines(const GradedAlgebra<K>& R, const LabOptions& opt) {
  PipelinePair out;
  int d = R.dim();
  KoszulSystemOptions kopts{opt.window, opt.max_steps, 2, 3, opt.min_bound};
  ExtSystemOptions eopts{opt.window, opt.max_steps, 2, 3, opt.min_bound};
  std::vector<std::string> sop_warnings;
  ParameterSequence<K> sop = random_homogeneous_sop(R, 1, detail::mix_seed(opt.seed, 101), 200,
                                                    opt.coeff_bound, &sop_warnings);
  for (const auto& w : sop_warnings) out.warnings.push_back(w);
  for (int i = 0; i <= d; ++i) {
    DirectSystemRecord<K> kos = local_cohomology_socles(R, sop, static_cast<std::size_t>(i),
                                                        kopts);
    DirectSystemRecord<K> ext = ext_socle_system(R, static_cast<std::size_t>(i), eopts);
    if (kos.limit_socle_dim != ext.limit_socle_dim)
      throw ConsistencyError("pipeline disagreement at i = " + std::to_string(i) +
                             ": koszul " + std::to_string(kos.limit_socle_dim) + " vs ext " +
                             std::to_string(ext.limit_socle_dim));
    out.socle_h.push_back(kos.limit_socle_dim);
    EllResult er;
    er.limit_socle_dim = ext.limit_socle_dim;
    if (ext.limit_socle_dim == 0) {
      er.ell = 0;
    } else {
      er.ell = 1;
      for (std::size_t k = 0; k < ext.socle_map_surjective.size(); ++k)
        if (!ext.socle_map_surjective[k]) er.ell = static_cast<int>(k) + 2;
    }
    out.ell.push_back(er.ell);
    json cell;
    cell["i"] = i;
    cell["koszul"] = record_json(kos);
    cell["ext"] = record_json(ext);
    out.meta.push_back(cell);
    for (const auto& w : kos.warnings)
      out.warnings.push_back("koszul i=" + std::to_string(i) + ": " + w);
    for (const auto& w : ext.warnings)
      out.warnings.push_back("ext i=" + std::to_string(i) + ": " + w);
  }
  out.meta.push_back(json{{"sop", sequence_str(sop)}});
  return out;
}

template <class K>
json dump_complex_json(const FreeComplex<K>& C) {
  json j;
  j["ranks"] = json::array();
  j["shifts"] = json::array();
  j["differentials"] = json::array();
  for (const auto& t : C.terms()) {
    j["ranks"].push_back(t.rank());
    j["shifts"].push_back(t.shifts);
  }
  for (std::size_t k = 0; k < C.diff_count(); ++k) {
    json m = json::array();
    for (const auto& row : C.diff(k)) {
      json r = json::array();
      for (const auto& p : row) r.push_back(p.str());
      m.push_back(r);
    }
    j["differentials"].push_back(m);
  }
  return j;
}

}  // namespace detail

// Full analysis: dimension, depth, CM/Gorenstein verdicts, socle dimensions
// through both pipelines, observed ell_i, and stabilization metadata.
template <class K>
RingReport analyze_ring(const GradedAlgebra<K>& R, const RingSpecData& spec,
                        LabOptions opt = {}) {
  RingReport report;
  report.ring = spec.hash();
  report.dim = R.dim();
  report.depth = depth(R, detail::mix_seed(opt.seed, 7));
  report.cm = report.depth == report.dim;

  auto pipes = detail::socle_pipelines(R, opt);
  report.socle_h = pipes.socle_h;
  report.ell = pipes.ell;
  report.warnings = pipes.warnings;
  report.experiments["pipelines"] = pipes.meta;

  ParameterSequence<K> sop = random_homogeneous_sop(R, 1, detail::mix_seed(opt.seed, 13), 200,
                                                    opt.coeff_bound);
  if (report.cm) {
    auto idx = index_of_reducibility(R, Ideal<K>(R.ring(), sop.elements));
    report.type = idx.index;
    report.gorenstein = idx.index == 1;
    if (report.socle_h.back() != idx.index)
      throw ConsistencyError("CM type " + std::to_string(idx.index) +
                             " does not match Soc H^d = " +
                             std::to_string(report.socle_h.back()));
  } else {
    report.gorenstein = false;
  }
  report.experiments["sampled_sop"] = detail::sequence_str(sop);
  report.experiments["seed"] = opt.seed;

  if (opt.dump_complex) {
    auto view = std::make_shared<GradedRingView<K>>(R);
    report.experiments["dump_complex"] = detail::dump_complex_json(koszul_complex(view, sop));
  }
  if (opt.dump_resolution) {
    auto view = std::make_shared<GradedRingView<K>>(R);
    Ideal<K> m(R.ring(), power_of_m_generators<K>(R.ring(), 1));
    ResolutionBundle<K> F = graded_free_resolution(
        view, m, std::max(R.dim(), 1) + 1,
        detail::resolution_bound(R, m, std::max(R.dim(), 1) + 1, 2));
    report.experiments["dump_resolution"] = detail::dump_complex_json(F.complex);
  }
  return report;
}

// Index of reducibility of (x_1^n, ..., x_d^n) for n = 1..max_n, with the
// eventual-constant prediction sum_i binom(d, i) dim Soc H^i_m(R).
template <class K>
SweepTable index_sweep(const GradedAlgebra<K>& R, const RingSpecData& spec,
                       const ParameterSequence<K>& sop, int max_n, LabOptions opt = {}) {
  if (!is_system_of_parameters(R, sop))
    throw InputError("sweep: the given sequence is not a system of parameters");
  SweepTable table;
  table.ring = spec.hash();
  auto pipes = detail::socle_pipelines(R, opt);
  table.warnings = pipes.warnings;
  int d = R.dim();
  table.prediction = 0;
  for (int i = 0; i <= d; ++i)
    table.prediction += detail::binom(d, i) * pipes.socle_h[static_cast<std::size_t>(i)];
  for (int n = 1; n <= max_n; ++n) {
    ParameterSequence<K> powered = sop.powered(n);
    auto idx = index_of_reducibility(R, Ideal<K>(R.ring(), powered.elements));
    SweepRow row;
    row.n = n;
    row.ideal = detail::sequence_str(powered);
    row.index = idx.index;
    row.irreducible = idx.index == 1;
    table.rows.push_back(std::move(row));
  }
  return table;
}

// The main theorem's experiment: with ell = observed ell_d(R), sample sops
// with generators of degree >= ell. Gorenstein rings must produce an
// irreducible witness immediately; non-Gorenstein rings must produce none.
// Any contradiction with the CM/type oracle is a hard consistency failure.
template <class K>
TheoremVerdict theorem_main_check(const GradedAlgebra<K>& R, const RingSpecData& spec,
                                  int samples, LabOptions opt = {}) {
  if (samples < 1) throw InputError("theorem check needs samples >= 1");
  TheoremVerdict v;
  v.ring = spec.hash();
  int d = R.dim();
  ExtSystemOptions eopts{opt.window, opt.max_steps, 2, 3, opt.min_bound};
  EllResult ell = compute_ell(R, static_cast<std::size_t>(d), eopts);
  v.ell = ell.ell;

  int dep = depth(R, detail::mix_seed(opt.seed, 7));
  bool cm = dep == d;
  ParameterSequence<K> probe = random_homogeneous_sop(R, 1, detail::mix_seed(opt.seed, 13), 200,
                                                      opt.coeff_bound);
  long type = index_of_reducibility(R, Ideal<K>(R.ring(), probe.elements)).index;
  v.gorenstein = cm && type == 1;

  if (d == 0) {
    v.samples = 1;
    long idx = index_of_reducibility(R, Ideal<K>::zero(R.ring())).index;
    bool irr = idx == 1;
    v.irreducible_count = irr ? 1 : 0;
    v.first_witness = irr ? 0 : -1;
    v.witness = irr ? "(0)" : "";
    if (irr != v.gorenstein)
      throw ConsistencyError("theorem check: zero parameter ideal verdict contradicts the oracle");
    v.verdict = v.gorenstein
                    ? "Gorenstein; zero parameter ideal irreducible (Soc dim 1)"
                    : "not Gorenstein; zero parameter ideal has index " + std::to_string(idx);
    return v;
  }

  v.samples = samples;
  long min_degree = std::max(v.ell, 1);
  for (int s = 0; s < samples; ++s) {
    ParameterSequence<K> sop = random_homogeneous_sop(
        R, min_degree, detail::mix_seed(opt.seed, 1000 + static_cast<std::uint64_t>(s)), 200,
        opt.coeff_bound);
    long idx = index_of_reducibility(R, Ideal<K>(R.ring(), sop.elements)).index;
    if (idx == 1) {
      ++v.irreducible_count;
      if (v.first_witness < 0) {
        v.first_witness = s;
        v.witness = detail::sequence_str(sop);
      }
    }
  }
  if (v.gorenstein && v.first_witness != 0)
    throw ConsistencyError(
        "theorem check: Gorenstein ring but the first sampled parameter ideal is reducible");
  if (!v.gorenstein && v.irreducible_count > 0)
    throw ConsistencyError(
        "theorem check: non-Gorenstein ring produced an irreducible parameter ideal in m^ell "
        "(bug or ell underestimate)");
  v.verdict = v.gorenstein
                  ? "Gorenstein; witness found at sample 1"
                  : "not Gorenstein; 0/" + std::to_string(samples) + " irreducible in m^" +
                        std::to_string(v.ell);
  return v;
}

// The corollary's experiment: for each n <= max_power report an irreducible
// parameter ideal inside m^n when sampling finds one, together with the
// theorem-backed verdict for n >= ell_d.
template <class K>
CorollaryTable corollary_search(const GradedAlgebra<K>& R, const RingSpecData& spec,
                                int max_power, int samples, LabOptions opt = {}) {
  if (max_power < 1) throw InputError("corollary search needs max_power >= 1");
  CorollaryTable table;
  table.ring = spec.hash();
  int d = R.dim();
  ExtSystemOptions eopts{opt.window, opt.max_steps, 2, 3, opt.min_bound};
  table.ell = compute_ell(R, static_cast<std::size_t>(d), eopts).ell;

  int dep = depth(R, detail::mix_seed(opt.seed, 7));
  ParameterSequence<K> probe = random_homogeneous_sop(R, 1, detail::mix_seed(opt.seed, 13), 200,
                                                      opt.coeff_bound);
  long type = index_of_reducibility(R, Ideal<K>(R.ring(), probe.elements)).index;
  table.gorenstein = dep == d && type == 1;

  for (int n = 1; n <= max_power; ++n) {
    CorollaryRow row;
    row.n = n;
    row.samples = d == 0 ? 1 : samples;
    if (d == 0) {
      long idx = index_of_reducibility(R, Ideal<K>::zero(R.ring())).index;
      row.found = idx == 1;
      if (row.found) row.witness = "(0)";
    } else {
      for (int s = 0; s < samples && !row.found; ++s) {
        ParameterSequence<K> sop = random_homogeneous_sop(
            R, n, detail::mix_seed(opt.seed, 5000 + 100 * static_cast<std::uint64_t>(n) +
                                                 static_cast<std::uint64_t>(s)),
            200, opt.coeff_bound);
        long idx = index_of_reducibility(R, Ideal<K>(R.ring(), sop.elements)).index;
        if (idx == 1) {
          row.found = true;
          row.witness = detail::sequence_str(sop);
        }
      }
    }
    if (n >= table.ell) {
      row.theorem_verdict = table.gorenstein
                                ? "theorem: some irreducible parameter ideal exists in m^n"
                                : "theorem: impossible for n >= ell_d = " +
                                      std::to_string(table.ell);
      if (table.gorenstein && !row.found)
        throw ConsistencyError("corollary: Gorenstein ring but no witness found at n = " +
                               std::to_string(n));
      if (!table.gorenstein && row.found)
        throw ConsistencyError("corollary: non-Gorenstein ring produced a witness at n = " +
                               std::to_string(n) + " >= ell (bug or ell underestimate)");
    } else {
      row.theorem_verdict = "sampling evidence only (n < ell_d)";
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace gorlab

#endif

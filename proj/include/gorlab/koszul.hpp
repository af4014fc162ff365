#ifndef GORLAB_KOSZUL_HPP
#define GORLAB_KOSZUL_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gorlab/module.hpp"

namespace gorlab {

namespace detail {

// Subsets of {0..r-1} of size i, ascending bitmask order within a size.
inline std::vector<std::vector<int>> subsets_of_size(int r, int i) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    std::vector<int> s;
    for (int b = 0; b < r; ++b)
      if (mask & (1u << b)) s.push_back(b);
    out.push_back(std::move(s));
  }
  return out;
}

inline int subset_index(const std::vector<std::vector<int>>& all, const std::vector<int>& s) {
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == s) return static_cast<int>(i);
  return -1;
}

}  // namespace detail

// Exterior-algebra Koszul chain complex K(f_1..f_r): term i has rank C(r, i)
// with generator e_S in internal degree sum_{j in S} deg f_j; the differential
// removes one index with the usual alternating sign.
template <class K>
FreeComplex<K> koszul_complex(const GradedRingViewPtr<K>& view,
                              const ParameterSequence<K>& seq) {
  const auto& ring = view->ring();
  int r = static_cast<int>(seq.size());
  for (const auto& f : seq.elements) {
    if (f.is_zero()) throw InputError("koszul complex of a zero element");
    if (!f.is_homogeneous()) throw InputError("koszul complex needs homogeneous elements");
  }
  std::vector<FreeTerm> terms;
  std::vector<std::vector<std::vector<int>>> bases;
  for (int i = 0; i <= r; ++i) {
    auto subs = detail::subsets_of_size(r, i);
    FreeTerm t;
    for (const auto& s : subs) {
      long d = 0;
      for (int j : s) d += seq.elements[j].degree();
      t.shifts.push_back(d);
    }
    bases.push_back(std::move(subs));
    terms.push_back(std::move(t));
  }
  std::vector<PolyMat<K>> diffs;
  for (int i = 0; i + 1 <= r; ++i) {
    const auto& src = bases[i + 1];
    const auto& dst = bases[i];
    PolyMat<K> d(dst.size(),
                 std::vector<Polynomial<K>>(src.size(), Polynomial<K>::zero(ring)));
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& S = src[c];
      for (std::size_t k = 0; k < S.size(); ++k) {
        std::vector<int> rest = S;
        rest.erase(rest.begin() + static_cast<long>(k));
        int row = detail::subset_index(dst, rest);
        Polynomial<K> entry = normal_form(seq.elements[S[k]], view->algebra().ideal());
        if (k % 2 == 1) entry = -entry;
        d[row][c] = std::move(entry);
      }
    }
    diffs.push_back(std::move(d));
  }
  FreeComplex<K> C(view, std::move(terms), std::move(diffs));
  C.validate();
  return C;
}

// Chain map K(x^t) -> K(x^s) for s <= t, diagonal with entry
// prod_{j in S} f_j^{t-s} on the generator e_S.
template <class K>
ChainMap<K> koszul_connecting_map(const FreeComplex<K>& from_t, const FreeComplex<K>& to_s,
                                  const ParameterSequence<K>& seq, int s, int t) {
  if (s < 1 || s > t) throw InputError("koszul connecting map requires 1 <= s <= t");
  const auto& view = from_t.view();
  const auto& ring = view->ring();
  int r = static_cast<int>(seq.size());
  std::vector<PolyMat<K>> comps;
  for (int i = 0; i <= r; ++i) {
    auto subs = detail::subsets_of_size(r, i);
    PolyMat<K> m(subs.size(),
                 std::vector<Polynomial<K>>(subs.size(), Polynomial<K>::zero(ring)));
    for (std::size_t j = 0; j < subs.size(); ++j) {
      Polynomial<K> entry = Polynomial<K>::constant(ring, ring->scalar_one());
      for (int idx : subs[j]) entry = entry * seq.elements[idx].pow(t - s);
      m[j][j] = normal_form(entry, view->algebra().ideal());
    }
    comps.push_back(std::move(m));
  }
  ChainMap<K> phi(&from_t, &to_s, std::move(comps));
  phi.validate();
  return phi;
}

// H^i(Hom_R(C, R)) computed degree by degree for internal degrees up to
// `bound`; validates that the top maxweight+1 degrees vanish (finite length
// within the window) and records variable actions in class coordinates.
template <class K>
GradedModule<K> dual_cohomology(const GradedRingViewPtr<K>& view, const FreeComplex<K>& C,
                                std::size_t i, long bound, bool with_actions = true) {
  const auto& ring = view->ring();
  const K zero = ring->scalar_zero();
  GradedModule<K> M;
  M.view = view;
  M.ambient = dual_term(C.term(i));
  M.hi = bound;
  long lo = 0;
  for (long a : M.ambient.shifts) lo = std::min(lo, a);
  M.lo = lo;

  bool has_in = i >= 1 && C.diff_count() >= i;
  bool has_out = C.diff_count() > i;
  FreeTerm in_term = has_in ? dual_term(C.term(i - 1)) : FreeTerm{};
  FreeTerm out_term = has_out ? dual_term(C.term(i + 1)) : FreeTerm{};
  PolyMat<K> delta_in = has_in ? polymat_transpose(C.diff(i - 1)) : PolyMat<K>{};
  PolyMat<K> delta_out = has_out ? polymat_transpose(C.diff(i)) : PolyMat<K>{};

  for (long e = lo; e <= bound; ++e) {
    TermPiece<K> piece = TermPiece<K>::of(*view, M.ambient, e);
    if (piece.dim == 0) continue;
    // Kernel of the outgoing coboundary.
    std::vector<std::vector<K>> kernel;
    if (has_out) {
      Matrix<K> out = piece_matrix(*view, out_term, M.ambient, delta_out, e);
      kernel = out.kernel_basis();
    } else {
      for (std::size_t j = 0; j < piece.dim; ++j) {
        std::vector<K> v(piece.dim, zero);
        v[j] = ring->scalar_one();
        kernel.push_back(std::move(v));
      }
    }
    // Boundary space.
    SpanBuilder<K> span(piece.dim, zero);
    std::vector<std::vector<K>> bnd;
    if (has_in) {
      Matrix<K> in = piece_matrix(*view, M.ambient, in_term, delta_in, e);
      for (std::size_t j = 0; j < in.cols(); ++j) {
        std::vector<K> c = in.column(j);
        if (span.add(c)) bnd.push_back(in.column(j));
      }
    }
    std::vector<std::vector<K>> reps;
    for (auto& kv : kernel) {
      std::vector<K> copy = kv;
      if (span.add(copy)) reps.push_back(std::move(kv));
    }
    typename GradedModule<K>::Piece P{Matrix<K>::from_columns(piece.dim, reps, zero),
                                      Matrix<K>::from_columns(piece.dim, bnd, zero)};
    M.pieces[e] = std::move(P);
  }

  int maxw = 0;
  for (std::size_t v = 0; v < ring->nvars(); ++v) maxw = std::max(maxw, ring->weight(v));
  for (long e = bound - maxw; e <= bound; ++e)
    if (M.dim(e) != 0)
      throw DegreeBoundError("degree bound exceeded: cohomology does not vanish at degree " +
                             std::to_string(e));
  M.finite_validated = true;

  if (!with_actions) return M;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    long w = ring->weight(v);
    for (auto& [e, piece] : M.pieces) {
      std::size_t n = piece.reps.cols();
      if (n == 0 || e + w > bound) continue;
      Matrix<K> mult = piece_var_action(*view, M.ambient, e, v);
      M.actions[{v, e}] = M.classify_columns(mult * piece.reps, e + w);
    }
  }
  return M;
}

// --- Direct systems ---------------------------------------------------------

template <class K>
struct DirectSystemRecord {
  std::vector<int> indices;               // evaluated indices t = 1, 2, ...
  std::vector<long> module_socle_dims;    // dim Soc(M_t)
  std::vector<long> image_socle_dims;     // dim Soc(im psi_t), kernel-exhausted
  std::vector<long> socle_map_ranks;      // rank of Soc(M_t) -> im psi_t
  std::vector<int> settled_at;            // stage where ker psi_t was exhausted
  std::vector<bool> socle_map_surjective;  // Soc(M_t) -> Soc(limit) onto?
  int window = 2;
  bool stabilized = false;
  int stabilization_step = 0;  // first t of the stable window
  int stable_stage = 0;        // largest stage index materialized
  long limit_socle_dim = -1;
  std::vector<std::string> warnings;
};

// Generic stabilization runner over stages M_1 -> M_2 -> ... given by
// callbacks. For each index t it first exhausts the kernel of the canonical
// map psi_t (extending the system until ker theta_{t,s} is constant across
// the window, so the image becomes module-isomorphic to im psi_t), then
// measures the image socle. The element orders of dying classes can grow
// with t, so a window placed at a fixed offset from t would overcount;
// kernel exhaustion per index avoids that. Stops once the image socle dims
// and induced socle-map ranks are constant across `window` indices.
template <class K>
class DirectSystemRunner {
 public:
  using ModuleFn = std::function<GradedModule<K>(int)>;              // t -> M_t
  using MapFn = std::function<GradedMap<K>(int, const GradedModule<K>&, const GradedModule<K>&)>;
  // t -> map M_t -> M_{t+1}

  DirectSystemRunner(ModuleFn modules, MapFn maps, int window, int max_steps)
      : module_fn_(std::move(modules)), map_fn_(std::move(maps)), window_(window),
        max_steps_(max_steps) {}

  // Runs until stabilization; fills the record and keeps stages accessible.
  DirectSystemRecord<K> run(int first_index = 1) {
    DirectSystemRecord<K> rec;
    rec.window = window_;
    first_index_ = first_index;
    ensure_stage(0, rec);
    for (std::size_t t0 = 0;; ++t0) {
      ensure_stage(t0 + 1, rec);
      ModuleSocle<K> msoc = socle(stages_[t0]);

      // Exhaust ker psi_{t0}: kernel dims are nondecreasing and bounded by
      // dim M_{t0}; stop once constant across the window.
      GradedMap<K> theta = maps_[t0];
      long ker = kernel_dim(stages_[t0], theta);
      int repeats = 0;
      std::size_t s = t0 + 1;
      while (repeats < window_ - 1 || ker < 0) {
        ++s;
        ensure_stage(s, rec);
        theta = compose(stages_[t0], stages_[s - 1], stages_[s], theta, maps_[s - 1]);
        long k = kernel_dim(stages_[t0], theta);
        repeats = (k == ker) ? repeats + 1 : 0;
        ker = k;
      }

      rec.indices.push_back(first_index + static_cast<int>(t0));
      rec.module_socle_dims.push_back(msoc.dim);
      rec.settled_at.push_back(first_index + static_cast<int>(s));
      const GradedModule<K>& target = stages_[s];
      rec.image_socle_dims.push_back(
          socle_dim_of_submodule(target, image_columns(target, theta)));
      rec.socle_map_ranks.push_back(pushed_rank(target, theta, msoc.vectors));

      if (stable(rec)) {
        rec.stabilized = true;
        int evals = static_cast<int>(rec.image_socle_dims.size());
        rec.stabilization_step = rec.indices[static_cast<std::size_t>(evals - window_)];
        rec.stable_stage = first_index + static_cast<int>(stages_.size()) - 1;
        rec.limit_socle_dim = rec.image_socle_dims.back();
        rec.warnings.push_back("heuristic-stable");
        for (long r : rec.socle_map_ranks)
          rec.socle_map_surjective.push_back(r == rec.limit_socle_dim);
        return rec;
      }
    }
  }

  const std::vector<GradedModule<K>>& stages() const { return stages_; }

  // Composite map stages_[a] -> stages_[b] (0-based stage indices).
  GradedMap<K> composite(std::size_t a, std::size_t b) const {
    GradedMap<K> acc;
    bool first = true;
    for (std::size_t k = a; k < b; ++k) {
      if (first) {
        acc = maps_[k];
        first = false;
      } else {
        acc = compose(stages_[a], stages_[k], stages_[k + 1], acc, maps_[k]);
      }
    }
    if (first) {
      // identity on stages_[a]
      const GradedModule<K>& M = stages_[a];
      const K zero = M.view->ring()->scalar_zero();
      for (const auto& [e, d] : M.dims())
        acc.comp[e] = Matrix<K>::identity(static_cast<std::size_t>(d), zero);
    }
    return acc;
  }

 private:
  // Materialize stages up to index k (0-based) within the stage budget.
  void ensure_stage(std::size_t k, const DirectSystemRecord<K>& rec) {
    while (stages_.size() <= k) {
      if (static_cast<int>(stages_.size()) > max_steps_) {
        std::string partial = "observed image socle dims:";
        for (long d : rec.image_socle_dims) partial += " " + std::to_string(d);
        partial += "; socle map ranks:";
        for (long r : rec.socle_map_ranks) partial += " " + std::to_string(r);
        throw StabilizationError("direct system did not stabilize within " +
                                 std::to_string(max_steps_) + " stages (window " +
                                 std::to_string(window_) + "); " + partial);
      }
      int t = first_index_ + static_cast<int>(stages_.size());
      stages_.push_back(module_fn_(t));
      if (stages_.size() >= 2) {
        std::size_t j = stages_.size() - 2;
        maps_.push_back(map_fn_(t - 1, stages_[j], stages_[j + 1]));
      }
    }
  }

  bool stable(const DirectSystemRecord<K>& rec) const {
    int n = static_cast<int>(rec.image_socle_dims.size());
    if (n < window_) return false;
    for (int k = n - window_; k < n; ++k) {
      if (rec.image_socle_dims[k] != rec.image_socle_dims[n - 1]) return false;
      if (rec.socle_map_ranks[k] != rec.socle_map_ranks[n - 1]) return false;
    }
    return true;
  }

  ModuleFn module_fn_;
  MapFn map_fn_;
  int window_;
  int max_steps_;
  int first_index_ = 1;
  std::vector<GradedModule<K>> stages_;
  std::vector<GradedMap<K>> maps_;
};

// --- Koszul pipeline entry points -------------------------------------------

struct KoszulSystemOptions {
  int window = 2;
  int max_steps = 10;
  long bound_slack = 2;
  int bound_retries = 3;
  long min_bound = 0;  // floor for the truncation bound (CLI --degree-bound)
};

namespace detail {

// Initial truncation bound for H^i(x^t; R). The cohomology is annihilated by
// I + (x^t), so classes concentrate no higher than the top degree of R/(x^t)
// offset by the dual shifts at homological index i; the vanish-at-the-top
// validation in dual_cohomology is the actual certificate, and the caller
// escalates on failure.
template <class K>
long koszul_bound(const GradedAlgebra<K>& R, const ParameterSequence<K>& seq, int t,
                  std::size_t i, const FreeComplex<K>& C, long slack) {
  long top = 0;
  std::vector<Polynomial<K>> powered;
  for (const auto& f : seq.elements) powered.push_back(f.pow(t));
  Ideal<K> J = R.ideal().plus(powered);
  if (auto qb = quotient_basis(J)) top = std::max<long>(qb->max_degree(), 0);
  long max_dual_shift = 0;
  if (i < C.length() && !C.term(i).shifts.empty()) {
    max_dual_shift = -C.term(i).shifts.front();
    for (long a : C.term(i).shifts) max_dual_shift = std::max(max_dual_shift, -a);
  }
  int maxw = 0;
  for (std::size_t v = 0; v < R.ring()->nvars(); ++v)
    maxw = std::max(maxw, R.ring()->weight(v));
  return top + max_dual_shift + slack + maxw + 1;
}

template <class K>
GradedModule<K> koszul_stage(const GradedRingViewPtr<K>& view, const FreeComplex<K>& C,
                             const GradedAlgebra<K>& R, const ParameterSequence<K>& seq, int t,
                             std::size_t i, const KoszulSystemOptions& opts,
                             bool with_actions = true) {
  long bound = std::max(koszul_bound(R, seq, t, i, C, opts.bound_slack), opts.min_bound);
  for (int attempt = 0;; ++attempt) {
    try {
      return dual_cohomology(view, C, i, bound, with_actions);
    } catch (const DegreeBoundError&) {
      if (attempt + 1 >= opts.bound_retries) throw;
      bound += 4 + std::max<long>(bound, 0) / 2;
    }
  }
}

}  // namespace detail

// The direct system { H^i(x^t; R) } with maps induced by the connecting
// chain maps; its stabilized socle data models Soc H^i_(x)(R), which equals
// Soc H^i_m(R) when (x) is m-primary.
template <class K>
class KoszulSystem {
 public:
  KoszulSystem(GradedAlgebra<K> R, ParameterSequence<K> seq, std::size_t i,
               KoszulSystemOptions opts = {})
      : R_(std::move(R)), seq_(std::move(seq)), i_(i), opts_(opts),
        view_(std::make_shared<GradedRingView<K>>(R_)) {}

  DirectSystemRecord<K> run(int first_index = 1) {
    complexes_.clear();
    complexes_.reserve(static_cast<std::size_t>(opts_.max_steps) + 2);
    auto modules = [this](int t) {
      complexes_.push_back(
          std::make_unique<FreeComplex<K>>(koszul_complex(view_, seq_.powered(t))));
      return detail::koszul_stage(view_, *complexes_.back(), R_, seq_, t, i_, opts_);
    };
    auto maps = [this](int t, const GradedModule<K>& from, const GradedModule<K>& to) {
      const FreeComplex<K>& Kt = *complexes_[complexes_.size() - 2];
      const FreeComplex<K>& Kt1 = *complexes_[complexes_.size() - 1];
      ChainMap<K> phi = koszul_connecting_map(Kt1, Kt, seq_, t, t + 1);
      return induced_map(from, to, phi, i_);
    };
    runner_ = std::make_unique<DirectSystemRunner<K>>(modules, maps, opts_.window,
                                                      opts_.max_steps);
    return runner_->run(first_index);
  }

  const DirectSystemRunner<K>& runner() const { return *runner_; }

 private:
  GradedAlgebra<K> R_;
  ParameterSequence<K> seq_;
  std::size_t i_;
  KoszulSystemOptions opts_;
  GradedRingViewPtr<K> view_;
  std::vector<std::unique_ptr<FreeComplex<K>>> complexes_;
  std::unique_ptr<DirectSystemRunner<K>> runner_;
};

// Koszul cohomology H^i(seq; R) at a single stage (t = 1), with a validated
// default truncation bound.
template <class K>
GradedModule<K> koszul_cohomology(const GradedAlgebra<K>& R, const ParameterSequence<K>& seq,
                                  std::size_t i, long bound = -1) {
  auto view = std::make_shared<GradedRingView<K>>(R);
  FreeComplex<K> C = koszul_complex(view, seq);
  KoszulSystemOptions opts;
  if (bound < 0) return detail::koszul_stage(view, C, R, seq, 1, i, opts);
  return dual_cohomology(view, C, i, bound);
}

// Koszul depth: min { i : H^i(x; R) != 0 } for a system of parameters x.
// Independent of the choice of sop. Zero-dimensional rings have depth 0.
template <class K>
int depth(const GradedAlgebra<K>& R, std::uint64_t seed = 0x5eed) {
  if (auto memo = R.cached_depth()) return *memo;
  int d = R.dim();
  int result = d;
  if (d == 0) {
    result = 0;
  } else {
    ParameterSequence<K> sop = random_homogeneous_sop(R, 1, seed);
    auto view = std::make_shared<GradedRingView<K>>(R);
    FreeComplex<K> C = koszul_complex(view, sop);
    KoszulSystemOptions opts;
    for (int i = 0; i < d; ++i) {
      GradedModule<K> H = detail::koszul_stage(view, C, R, sop, 1, static_cast<std::size_t>(i),
                                               opts);
      if (!H.is_zero()) {
        result = i;
        break;
      }
    }
  }
  R.memo_depth(result);
  return result;
}

template <class K>
struct PhiKernelResult {
  long dim = 0;                // agreed kernel dimension
  long via_limit_closure = 0;  // lim-closure route
  long via_direct_limit = 0;   // Koszul direct-limit route
  int stabilized_stage = 0;
};

// dim_k ker( phi_t : R/(x^t) -> H^r_(x)(R) ), computed both as
// limclosure(x^t)/(x^t) and as the stabilized kernel of the composite maps in
// the top Koszul cohomology system. The two routes must agree.
template <class K>
PhiKernelResult<K> phi_kernel(const GradedAlgebra<K>& R, const ParameterSequence<K>& seq, int t,
                              KoszulSystemOptions opts = {}) {
  if (t < 1) throw InputError("phi_kernel requires t >= 1");
  if (!is_system_of_parameters(R, seq))
    throw InputError("phi_kernel requires a system of parameters");
  std::size_t r = seq.size();

  // Route 1: limit closure of the powered sequence.
  ParameterSequence<K> powered = seq.powered(t);
  Ideal<K> qt = R.ideal().plus(powered.elements);
  Ideal<K> closure = limit_closure(R, powered);
  auto qb_qt = quotient_basis(qt);
  auto qb_cl = quotient_basis(closure);
  if (!qb_qt || !qb_cl) throw ConsistencyError("phi_kernel: parameter quotient not finite");
  long via_closure = static_cast<long>(qb_qt->dim()) - static_cast<long>(qb_cl->dim());

  // Route 2: stabilized kernel of theta_{t, s} on the top Koszul cohomology.
  // Kernel dimensions increase with s and are bounded by dim H^r(x^t); stop
  // at the first repeated value, confirmed once more one stage later.
  auto view = std::make_shared<GradedRingView<K>>(R);
  std::vector<std::unique_ptr<FreeComplex<K>>> complexes;
  std::vector<GradedModule<K>> stages;
  std::vector<GradedMap<K>> steps;
  auto add_stage = [&](int power) {
    complexes.push_back(
        std::make_unique<FreeComplex<K>>(koszul_complex(view, seq.powered(power))));
    stages.push_back(detail::koszul_stage(view, *complexes.back(), R, seq, power, r, opts,
                                          /*with_actions=*/false));
    if (stages.size() >= 2) {
      ChainMap<K> phi = koszul_connecting_map(*complexes.back(),
                                              *complexes[complexes.size() - 2], seq,
                                              power - 1, power);
      steps.push_back(induced_map(stages[stages.size() - 2], stages.back(), phi, r));
    }
  };
  add_stage(t);
  long via_limit = -1;
  long prev = -1;
  int repeats = 0;
  GradedMap<K> theta;
  int stable_stage = t;
  for (int s = 1; s <= opts.max_steps; ++s) {
    add_stage(t + s);
    theta = s == 1 ? steps.back()
                   : compose(stages[0], stages[stages.size() - 2], stages.back(), theta,
                             steps.back());
    long k = kernel_dim(stages[0], theta);
    repeats = k == prev ? repeats + 1 : 0;
    prev = k;
    if (repeats >= 2) {
      via_limit = k;
      stable_stage = t + s;
      break;
    }
  }
  if (via_limit < 0)
    throw StabilizationError("phi_kernel: kernel dimensions did not settle");

  if (via_limit != via_closure)
    throw ConsistencyError("phi_kernel: limit-closure route (" + std::to_string(via_closure) +
                           ") disagrees with the direct-limit route (" +
                           std::to_string(via_limit) + ")");
  PhiKernelResult<K> out;
  out.dim = via_closure;
  out.via_limit_closure = via_closure;
  out.via_direct_limit = via_limit;
  out.stabilized_stage = stable_stage;
  return out;
}

// Socle dimensions of H^i_m(R) through the Koszul pipeline for a fixed sop.
template <class K>
DirectSystemRecord<K> local_cohomology_socles(const GradedAlgebra<K>& R,
                                              const ParameterSequence<K>& sop, std::size_t i,
                                              KoszulSystemOptions opts = {}) {
  if (!is_system_of_parameters(R, sop))
    throw InputError("local cohomology needs a system of parameters");
  KoszulSystem<K> system(R, sop, i, opts);
  DirectSystemRecord<K> rec = system.run();
  if (i == static_cast<std::size_t>(R.dim()) && rec.limit_socle_dim < 1)
    throw ConsistencyError("top local cohomology must have a nonzero socle");
  return rec;
}

}  // namespace gorlab

#endif

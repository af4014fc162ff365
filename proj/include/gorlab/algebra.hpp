#ifndef GORLAB_ALGEBRA_HPP
#define GORLAB_ALGEBRA_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gorlab/ideal.hpp"
#include "gorlab/matrix.hpp"

namespace gorlab {

// The graded local ring R = k[x_1..x_n]/I with I homogeneous, m the
// irrelevant maximal ideal. Cheap to copy; all state immutable except the
// depth memo, which the Koszul layer fills (idempotent: the computation is
// deterministic, concurrent fills agree).
template <class K>
class GradedAlgebra {
 public:
  GradedAlgebra() = default;

  static GradedAlgebra create(typename PolyRing<K>::Ptr ring, std::vector<Polynomial<K>> gens) {
    for (const auto& f : gens) {
      if (f.is_zero()) continue;
      if (!f.is_homogeneous()) throw InputError("defining ideal must be homogeneous");
      if (!f.constant_term().is_zero())
        throw InputError("defining ideal must be contained in the irrelevant ideal");
    }
    Ideal<K> I(ring, std::move(gens));
    if (I.is_unit_ideal()) throw InputError("defining ideal is the unit ideal");
    int d = krull_dimension(I);
    auto s = std::make_shared<State>();
    s->ring = std::move(ring);
    s->ideal = std::move(I);
    s->dim = d;
    return GradedAlgebra(std::move(s));
  }

  const typename PolyRing<K>::Ptr& ring() const { return s_->ring; }
  const Ideal<K>& ideal() const { return s_->ideal; }
  int dim() const { return s_->dim; }

  Ideal<K> maximal_ideal() const {
    std::vector<Polynomial<K>> vars;
    for (std::size_t i = 0; i < s_->ring->nvars(); ++i)
      vars.push_back(Polynomial<K>::variable(s_->ring, i));
    return Ideal<K>(s_->ring, std::move(vars));
  }

  std::optional<int> cached_depth() const { return s_->depth; }
  void memo_depth(int d) const { s_->depth = d; }

 private:
  struct State {
    typename PolyRing<K>::Ptr ring;
    Ideal<K> ideal;
    int dim = 0;
    mutable std::optional<int> depth;
  };
  explicit GradedAlgebra(std::shared_ptr<State> s) : s_(std::move(s)) {}
  std::shared_ptr<State> s_;
};

template <class K>
struct ParameterSequence {
  std::vector<Polynomial<K>> elements;
  bool homogeneous = true;

  static ParameterSequence of(std::vector<Polynomial<K>> elems) {
    ParameterSequence seq;
    for (const auto& f : elems)
      if (!f.is_homogeneous()) seq.homogeneous = false;
    seq.elements = std::move(elems);
    return seq;
  }

  std::size_t size() const { return elements.size(); }

  ParameterSequence powered(int t) const {
    ParameterSequence seq;
    seq.homogeneous = homogeneous;
    for (const auto& f : elements) seq.elements.push_back(f.pow(t));
    return seq;
  }
};

template <class K>
struct SocleBasis {
  std::vector<Polynomial<K>> representatives;
  std::size_t dimension = 0;
};

// The intersection of the primary components of J supported at the origin.
// Components away from the origin are stripped by coloning with an element s
// vanishing on them with s(0) != 0. Such a witness shows up directly in the
// Groebner basis of sat(J, m) when J has an m-primary part; otherwise it is
// exposed by first coloning the saturation by a variable (which removes
// through-origin components containing that variable). Homogeneous ideals are
// fixed points: every component passes through the origin.
template <class K>
Ideal<K> local_part(const GradedAlgebra<K>& R, const Ideal<K>& J) {
  if (J.is_unit_ideal()) throw InputError("local part of the unit ideal");
  const auto& ring = R.ring();
  Ideal<K> L = J;
  for (int guard = 0; guard < 64; ++guard) {
    Ideal<K> S = saturation(L, R.maximal_ideal());
    if (S.is_unit_ideal()) return L;  // L is m-primary at the origin

    std::optional<Polynomial<K>> witness;
    for (const auto& g : S.groebner())
      if (!g.constant_term().is_zero()) {
        witness = g;
        break;
      }
    if (!witness) {
      for (std::size_t v = 0; v < ring->nvars() && !witness; ++v) {
        Ideal<K> T = colon_infty(S, Polynomial<K>::variable(ring, v));
        if (T.is_unit_ideal()) continue;
        for (const auto& h : T.groebner())
          if (!h.constant_term().is_zero()) {
            witness = h;
            break;
          }
      }
    }
    if (!witness) return L;  // the origin lies in every remaining component
    Ideal<K> next = colon_infty(L, *witness);
    if (next.equals(L)) return L;
    L = std::move(next);
  }
  throw StabilizationError("local part did not stabilize");
}

template <class K>
bool is_system_of_parameters(const GradedAlgebra<K>& R, const ParameterSequence<K>& seq) {
  for (const auto& f : seq.elements) {
    if (f.is_zero()) return false;
    if (!f.constant_term().is_zero())
      throw InputError("parameter sequence element has a nonzero constant term");
  }
  if (static_cast<int>(seq.size()) != R.dim()) return false;
  Ideal<K> J = R.ideal().plus(seq.elements);
  if (J.is_unit_ideal()) return false;
  return quotient_basis(local_part(R, J)).has_value();
}

namespace detail {

// Multiplication-by-variable matrices on the standard-monomial basis of
// k[x]/Q' (finite). Column j of A_v holds the coordinates of NF(x_v * b_j).
template <class K>
std::vector<Matrix<K>> variable_actions(const typename PolyRing<K>::Ptr& ring,
                                        const Ideal<K>& Qp, const QuotientBasis& qb) {
  const auto& mons = qb.monomials();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i].exps()] = i;
  std::vector<Matrix<K>> actions;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    Matrix<K> A(mons.size(), mons.size(), ring->scalar_zero());
    for (std::size_t j = 0; j < mons.size(); ++j) {
      Polynomial<K> p = Polynomial<K>::monomial(ring, mons[j] * ring->mono_var(v),
                                                ring->scalar_one());
      Polynomial<K> nf = normal_form(p, Qp);
      for (const auto& t : nf.terms()) {
        auto it = index.find(t.mono.exps());
        if (it == index.end())
          throw ConsistencyError("normal form left the standard-monomial basis");
        A.at(it->second, j) = t.coeff;
      }
    }
    actions.push_back(std::move(A));
  }
  return actions;
}

}  // namespace detail

template <class K>
struct IndexOfReducibility {
  long index = 0;
  SocleBasis<K> socle;
};

// dim_k ((Q' : m)/Q') for Q' = local_part(I + Q); equals the number of
// components of an irredundant irreducible decomposition. Computed as the
// joint kernel of the variable actions on R/Q', and cross-checked against
// the colon route |QB(Q')| - |QB(Q' : m)|.
template <class K>
IndexOfReducibility<K> index_of_reducibility(const GradedAlgebra<K>& R, const Ideal<K>& Q) {
  const auto& ring = R.ring();
  Ideal<K> Qp = local_part(R, R.ideal().plus(Q));
  auto qb = quotient_basis(Qp);
  if (!qb) throw InputError("index of reducibility needs an m-primary ideal");

  auto actions = detail::variable_actions<K>(ring, Qp, *qb);
  std::size_t n = qb->dim();
  Matrix<K> stacked(0, n, ring->scalar_zero());
  for (const auto& A : actions) stacked = stacked.rows() == 0 ? A : stacked.stacked(A);
  auto kernel = n == 0 ? std::vector<std::vector<K>>{} : stacked.kernel_basis();

  IndexOfReducibility<K> out;
  out.index = static_cast<long>(kernel.size());
  for (const auto& vec : kernel) {
    Polynomial<K> rep = Polynomial<K>::zero(ring);
    for (std::size_t j = 0; j < n; ++j)
      if (!vec[j].is_zero())
        rep = rep + Polynomial<K>::monomial(ring, qb->monomials()[j], vec[j]);
    out.socle.representatives.push_back(std::move(rep));
  }
  out.socle.dimension = kernel.size();

  // Colon route: dim (Q':m)/Q' = dim R/Q' - dim R/(Q':m).
  Ideal<K> socle_colon = colon(Qp, R.maximal_ideal());
  auto qb2 = quotient_basis(socle_colon);
  if (!qb2 || static_cast<long>(qb->dim() - qb2->dim()) != out.index)
    throw ConsistencyError("socle dimension: kernel route and colon route disagree");
  return out;
}

template <class K>
struct LimitClosureRecord {
  Ideal<K> closure;
  int stabilized_at = 0;  // first n with L_n = L_{n+1} (verified at n+2)
};

// Union over n of (I + (x_1^{n+1},..,x_r^{n+1})) : (x_1...x_r)^n. The chain
// is increasing; stop at the first equality of consecutive terms and verify
// it once more one step later.
template <class K>
LimitClosureRecord<K> limit_closure_record(const GradedAlgebra<K>& R,
                                           const ParameterSequence<K>& seq, int max_steps = 32) {
  const auto& ring = R.ring();
  if (seq.size() == 0) return {R.ideal(), 0};
  for (const auto& f : seq.elements) {
    if (f.is_zero()) throw InputError("limit closure of a sequence with a zero element");
    if (!f.constant_term().is_zero())
      throw InputError("limit closure element has a nonzero constant term");
  }

  // (J : (x_1...x_r)^n) computed as iterated single-element colons: the
  // intermediate Groebner bases stay far smaller than with one product colon.
  auto stage = [&](int n) {
    std::vector<Polynomial<K>> gens;
    for (const auto& f : seq.elements) gens.push_back(f.pow(n + 1));
    Ideal<K> J = R.ideal().plus(gens);
    for (int k = 0; k < n; ++k)
      for (const auto& f : seq.elements) J = colon(J, f);
    return J;
  };

  Ideal<K> prev = stage(0);
  for (int n = 1; n <= max_steps; ++n) {
    Ideal<K> cur = stage(n);
    if (cur.equals(prev)) {
      Ideal<K> confirm = stage(n + 1);
      if (confirm.equals(cur)) return {cur, n - 1};
      prev = std::move(confirm);
      ++n;
      continue;
    }
    prev = std::move(cur);
  }
  throw StabilizationError("limit closure chain did not stabilize within " +
                           std::to_string(max_steps) + " steps");
}

template <class K>
Ideal<K> limit_closure(const GradedAlgebra<K>& R, const ParameterSequence<K>& seq) {
  return limit_closure_record(R, seq).closure;
}

// Prop-2.3 criterion: the sequence is regular iff its limit closure equals
// the ideal it generates (plus I).
template <class K>
bool is_regular_sequence(const GradedAlgebra<K>& R, const ParameterSequence<K>& seq) {
  for (const auto& f : seq.elements)
    if (f.is_zero()) return false;
  if (seq.size() == 0) return true;
  Ideal<K> generated = R.ideal().plus(seq.elements);
  if (generated.is_unit_ideal())
    throw InputError("regular-sequence test requires elements of m");
  return limit_closure(R, seq).equals(generated);
}

// Seeded sampler for homogeneous systems of parameters. Coefficients are
// drawn uniformly from [-B, B] with an explicit modular reduction so results
// are identical across platforms.
template <class K>
ParameterSequence<K> random_homogeneous_sop(const GradedAlgebra<K>& R, long min_degree,
                                            std::uint64_t seed, int max_retries = 200,
                                            long coeff_bound = 5,
                                            std::vector<std::string>* warnings = nullptr) {
  const auto& ring = R.ring();
  if (min_degree < 1) min_degree = 1;
  int d = R.dim();
  if (d == 0) return ParameterSequence<K>{};  // the empty sequence is the unique sop

  if constexpr (std::is_same_v<K, GFp>) {
    if (ring->field().p < 11 && warnings)
      warnings->push_back("residue field F_" + std::to_string(ring->field().p) +
                          " is small; sop sampling may need many retries");
  }

  // Sample at one common degree, bumping the degree when either no monomials
  // exist there or the retry budget at that degree is exhausted (with unequal
  // variable weights, low degrees may admit monomials but no sop at all).
  std::mt19937_64 rng(seed);
  const unsigned long span = static_cast<unsigned long>(2 * coeff_bound + 1);
  const int retries_per_degree = std::max(max_retries / 4, 8);
  int spent = 0;
  for (long deg = min_degree; deg <= min_degree + 10 && spent < max_retries; ++deg) {
    std::vector<Monomial> mons = monomials_of_degree<K>(ring, deg);
    // d independent forms of one degree need at least d monomials there.
    if (static_cast<int>(mons.size()) < d) continue;
    for (int attempt = 0; attempt < retries_per_degree && spent < max_retries; ++attempt) {
      ++spent;
      std::vector<Polynomial<K>> elems;
      bool zero_draw = false;
      for (int i = 0; i < d; ++i) {
        Polynomial<K> f = Polynomial<K>::zero(ring);
        for (const auto& m : mons) {
          long c = static_cast<long>(rng() % span) - coeff_bound;
          if (c != 0) f = f + Polynomial<K>::monomial(ring, m, ring->scalar_from(c));
        }
        if (f.is_zero()) zero_draw = true;
        elems.push_back(std::move(f));
      }
      if (zero_draw) continue;
      ParameterSequence<K> seq = ParameterSequence<K>::of(elems);
      if (is_system_of_parameters(R, seq)) return seq;
    }
  }
  throw StabilizationError("sop sampling exhausted " + std::to_string(spent) +
                           " retries starting at degree " + std::to_string(min_degree) +
                           " over " + ring->field().describe());
}

}  // namespace gorlab

#endif

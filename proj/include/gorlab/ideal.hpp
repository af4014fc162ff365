#ifndef GORLAB_IDEAL_HPP
#define GORLAB_IDEAL_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorlab/polynomial.hpp"

namespace gorlab {

// Full multivariate division: remainder has no term divisible by any leading
// monomial of the (nonzero) divisors.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis) {
  if (basis.empty()) return f;
  const auto& ring = f.ring();
  Polynomial<K> h = f;
  Polynomial<K> r = Polynomial<K>::zero(ring);
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(h.leading_monomial())) {
        Monomial q = g.leading_monomial().divide_into(h.leading_monomial());
        K c = h.leading_coeff() / g.leading_coeff();
        h = h - g.times_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial<K> lt = Polynomial<K>::monomial(ring, h.leading_monomial(), h.leading_coeff());
      r = r + lt;
      h = h - lt;
    }
  }
  return r;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const auto& ring = f.ring();
  Monomial l = ring->lcm(f.leading_monomial(), g.leading_monomial());
  Monomial qf = f.leading_monomial().divide_into(l);
  Monomial qg = g.leading_monomial().divide_into(l);
  return f.times_term(qf, f.leading_coeff().inv()) - g.times_term(qg, g.leading_coeff().inv());
}

// Working normalization during basis computation. Monic scaling is correct
// over any field but lets rational coefficients blow up; over Q we rescale to
// the primitive integer form with a positive leading coefficient instead.
template <class K>
Polynomial<K> gb_normalize(const Polynomial<K>& f) {
  return f.monic();
}

inline Polynomial<Rational> gb_normalize(const Polynomial<Rational>& f) {
  if (f.is_zero()) return f;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.denominator().get_mpz_t());
  }
  Rational scale{mpq_class(den_lcm) / mpq_class(num_gcd)};
  if ((f.leading_coeff() * scale).raw() < 0) scale = -scale;
  return f.scaled(scale);
}

// Buchberger with the coprime-leading-term criterion, followed by
// minimalization and interreduction. Output: monic reduced basis, sorted
// ascending by leading monomial — canonical for the ideal and order.
template <class K>
std::vector<Polynomial<K>> buchberger_reduced(std::vector<Polynomial<K>> gens) {
  std::vector<Polynomial<K>> g;
  for (auto& f : gens)
    if (!f.is_zero()) g.push_back(gb_normalize(f));
  if (g.empty()) return g;
  const auto ring = g.front().ring();

  struct Pair {
    long deg;
    std::size_t i, j;
    bool operator<(const Pair& o) const { return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j); }
  };
  std::vector<Pair> queue;
  auto push_pairs = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (coprime(g[i].leading_monomial(), g[n].leading_monomial())) continue;
      long d = ring->lcm(g[i].leading_monomial(), g[n].leading_monomial()).degree();
      queue.push_back({d, i, n});
    }
    std::sort(queue.begin(), queue.end());
  };
  for (std::size_t n = 1; n < g.size(); ++n) push_pairs(n);

  while (!queue.empty()) {
    Pair p = queue.front();
    queue.erase(queue.begin());
    Polynomial<K> r = normal_form(s_polynomial(g[p.i], g[p.j]), g);
    if (!r.is_zero()) {
      g.push_back(gb_normalize(r));
      push_pairs(g.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial<K>> min;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      const Monomial &mi = g[i].leading_monomial(), &mj = g[j].leading_monomial();
      if (mj.divides(mi) && (!mi.same_exponents(mj) || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) min.push_back(g[i]);
  }

  // Interreduce tails and scale monic.
  std::vector<Polynomial<K>> red;
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    red.push_back(normal_form(min[i], others).monic());
  }
  std::sort(red.begin(), red.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return ring->cmp(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return red;
}

// Finitely generated ideal with a lazily computed, shared, immutable reduced
// Groebner basis. Copies share the cache; concurrent fills are serialized by
// call_once and the algorithm is deterministic, so all fills agree.
template <class K>
class Ideal {
 public:
  Ideal() = default;
  Ideal(typename PolyRing<K>::Ptr ring, std::vector<Polynomial<K>> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (auto& f : gens_) f.check_ring(Polynomial<K>::zero(ring_));
  }

  static Ideal zero(typename PolyRing<K>::Ptr ring) { return Ideal(std::move(ring), {}); }

  const typename PolyRing<K>::Ptr& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }

  const std::vector<Polynomial<K>>& groebner() const {
    std::call_once(cache_->flag, [this] { cache_->basis = buchberger_reduced(gens_); });
    return cache_->basis;
  }

  bool is_zero_ideal() const { return groebner().empty(); }
  bool is_unit_ideal() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].is_constant();
  }

  bool contains(const Polynomial<K>& f) const { return normal_form(f, groebner()).is_zero(); }

  bool equals(const Ideal& o) const {
    const auto &a = groebner(), &b = o.groebner();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

  bool is_homogeneous_gens() const {
    for (const auto& f : gens_)
      if (!f.is_homogeneous()) return false;
    return true;
  }

  Ideal plus(const std::vector<Polynomial<K>>& more) const {
    std::vector<Polynomial<K>> g = gens_;
    for (const auto& f : more) g.push_back(f);
    return Ideal(ring_, std::move(g));
  }

  Ideal plus(const Ideal& o) const { return plus(o.gens_); }

 private:
  struct Cache {
    std::once_flag flag;
    std::vector<Polynomial<K>> basis;
  };

  typename PolyRing<K>::Ptr ring_;
  std::vector<Polynomial<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const Ideal<K>& I) {
  return normal_form(f, I.groebner());
}

// Exact division h / f for h in (f); nonzero remainder is an internal bug.
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& h, const Polynomial<K>& f) {
  const auto& ring = h.ring();
  Polynomial<K> rem = h;
  Polynomial<K> q = Polynomial<K>::zero(ring);
  while (!rem.is_zero()) {
    if (!f.leading_monomial().divides(rem.leading_monomial()))
      throw ConsistencyError("exact_divide: division left a remainder");
    Monomial m = f.leading_monomial().divide_into(rem.leading_monomial());
    K c = rem.leading_coeff() / f.leading_coeff();
    q = q + Polynomial<K>::monomial(ring, m, c);
    rem = rem - f.times_term(m, c);
  }
  return q;
}

// I ∩ J via a single elimination variable: eliminate t from t*I + (1-t)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
  const auto& ring = I.ring();
  auto aux = ring->with_elimination_aux();
  std::vector<int> up(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) up[i] = static_cast<int>(i) + 1;

  Polynomial<K> t = Polynomial<K>::variable(aux, 0);
  Polynomial<K> one_minus_t = Polynomial<K>::constant(aux, aux->scalar_one()) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& f : I.generators())
    if (!f.is_zero()) gens.push_back(t * map_variables(f, aux, up));
  for (const auto& f : J.generators())
    if (!f.is_zero()) gens.push_back(one_minus_t * map_variables(f, aux, up));

  std::vector<int> down(aux->nvars(), 0);
  for (std::size_t i = 1; i < aux->nvars(); ++i) down[i] = static_cast<int>(i) - 1;

  std::vector<Polynomial<K>> kept;
  for (const auto& g : buchberger_reduced(gens)) {
    bool t_free = true;
    for (const auto& term : g.terms())
      if (term.mono.exp(0) != 0) {
        t_free = false;
        break;
      }
    if (t_free) {
      // down[0] is unused because no term involves the aux variable.
      kept.push_back(map_variables(g, ring, down));
    }
  }
  return Ideal<K>(ring, std::move(kept));
}

// (I : f) computed as (I ∩ (f)) / f.
template <class K>
Ideal<K> colon(const Ideal<K>& I, const Polynomial<K>& f) {
  if (f.is_zero()) throw InputError("colon by the zero polynomial");
  Ideal<K> principal(I.ring(), {f});
  Ideal<K> meet = intersect(I, principal);
  std::vector<Polynomial<K>> q;
  for (const auto& g : meet.groebner()) q.push_back(exact_divide(g, f));
  return Ideal<K>(I.ring(), std::move(q));
}

// (I : J) = ∩_j (I : f_j) over the nonzero generators of J.
template <class K>
Ideal<K> colon(const Ideal<K>& I, const Ideal<K>& J) {
  std::optional<Ideal<K>> acc;
  for (const auto& f : J.generators()) {
    if (f.is_zero()) continue;
    Ideal<K> c = colon(I, f);
    acc = acc ? intersect(*acc, c) : c;
  }
  if (!acc) throw InputError("colon by the zero ideal");
  return *acc;
}

// (I : f^∞): iterate (· : f) to stabilization; exact because the chain is
// increasing and becomes constant at the first repeat.
template <class K>
Ideal<K> colon_infty(const Ideal<K>& I, const Polynomial<K>& f) {
  Ideal<K> cur = I;
  for (;;) {
    Ideal<K> next = colon(cur, f);
    if (next.equals(cur)) return cur;
    cur = next;
  }
}

template <class K>
struct SaturationResult {
  Ideal<K> ideal;
  int steps = 0;  // first n with (I : J^n) = (I : J^{n+1})
};

template <class K>
SaturationResult<K> saturation_with_steps(const Ideal<K>& I, const Ideal<K>& J) {
  Ideal<K> cur = I;
  int n = 0;
  for (;;) {
    Ideal<K> next = colon(cur, J);
    if (next.equals(cur)) return {cur, n};
    cur = next;
    ++n;
  }
}

template <class K>
Ideal<K> saturation(const Ideal<K>& I, const Ideal<K>& J) {
  return saturation_with_steps(I, J).ideal;
}

// Krull dimension of k[x]/I: the largest set S of variables such that no
// leading monomial of the reduced basis is supported inside S.
template <class K>
int krull_dimension(const Ideal<K>& I) {
  if (I.is_unit_ideal()) throw InputError("krull dimension of the empty ring");
  const auto& ring = I.ring();
  std::size_t n = ring->nvars();
  std::vector<Monomial> lms;
  for (const auto& g : I.groebner()) lms.push_back(g.leading_monomial());

  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lms) {
      bool supported = true;
      for (std::size_t i = 0; i < n; ++i)
        if (m.exp(i) > 0 && !(mask & (1u << i))) {
          supported = false;
          break;
        }
      if (supported) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

// Monomials outside the leading-term ideal, with a per-degree index.
class QuotientBasis {
 public:
  QuotientBasis() = default;
  explicit QuotientBasis(std::vector<Monomial> monos) : monos_(std::move(monos)) {
    for (std::size_t i = 0; i < monos_.size(); ++i) by_degree_[monos_[i].degree()].push_back(i);
  }

  const std::vector<Monomial>& monomials() const { return monos_; }
  std::size_t dim() const { return monos_.size(); }
  long max_degree() const {
    long d = -1;
    for (const auto& m : monos_) d = std::max(d, m.degree());
    return d;
  }
  std::vector<std::size_t> indices_of_degree(long e) const {
    auto it = by_degree_.find(e);
    return it == by_degree_.end() ? std::vector<std::size_t>{} : it->second;
  }

 private:
  std::vector<Monomial> monos_;
  std::map<long, std::vector<std::size_t>> by_degree_;
};

namespace detail {
template <class K>
void enumerate_below(const typename PolyRing<K>::Ptr& ring, const std::vector<int>& bound,
                     const std::vector<Monomial>& lms, std::vector<int>& cur, std::size_t i,
                     std::vector<Monomial>& out) {
  if (i == bound.size()) {
    Monomial m = ring->mono(cur);
    for (const auto& l : lms)
      if (l.divides(m)) return;
    out.push_back(std::move(m));
    return;
  }
  for (int e = 0; e < bound[i]; ++e) {
    cur[i] = e;
    enumerate_below<K>(ring, bound, lms, cur, i + 1, out);
  }
  cur[i] = 0;
}
}  // namespace detail

// Standard monomial basis of k[x]/I when finite; nullopt when the quotient is
// infinite-dimensional (some variable has no pure power in the LT ideal).
template <class K>
std::optional<QuotientBasis> quotient_basis(const Ideal<K>& I) {
  const auto& ring = I.ring();
  std::size_t n = ring->nvars();
  std::vector<Monomial> lms;
  for (const auto& g : I.groebner()) lms.push_back(g.leading_monomial());

  std::vector<int> bound(n, -1);
  for (const auto& m : lms) {
    int support = -1;
    bool pure = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (m.exp(i) == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = static_cast<int>(i);
    }
    if (pure && support >= 0) {
      int e = m.exp(support);
      if (bound[support] < 0 || e < bound[support]) bound[support] = e;
    }
    if (pure && support < 0) return QuotientBasis(std::vector<Monomial>{});  // zero ring
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0) return std::nullopt;

  std::vector<Monomial> std_mons;
  std::vector<int> cur(n, 0);
  detail::enumerate_below<K>(ring, bound, lms, cur, 0, std_mons);
  // Ascending by degree, descending in the term order within a degree.
  std::sort(std_mons.begin(), std_mons.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return ring->cmp(a, b) > 0;
  });
  return QuotientBasis(std::move(std_mons));
}

namespace detail {
template <class K>
void enumerate_weighted(const typename PolyRing<K>::Ptr& ring, long remaining, std::size_t i,
                        std::vector<int>& cur, std::vector<Monomial>& out) {
  if (i + 1 == ring->nvars()) {
    int w = ring->weight(i);
    if (remaining % w == 0) {
      cur[i] = static_cast<int>(remaining / w);
      out.push_back(ring->mono(cur));
      cur[i] = 0;
    }
    return;
  }
  int w = ring->weight(i);
  for (long e = 0; e * w <= remaining; ++e) {
    cur[i] = static_cast<int>(e);
    enumerate_weighted<K>(ring, remaining - e * w, i + 1, cur, out);
  }
  cur[i] = 0;
}
}  // namespace detail

// All monomials of exact weighted degree e, sorted descending in the order.
template <class K>
std::vector<Monomial> monomials_of_degree(const typename PolyRing<K>::Ptr& ring, long e) {
  std::vector<Monomial> out;
  if (e < 0) return out;
  if (ring->nvars() == 0) {
    if (e == 0) out.push_back(ring->mono_one());
    return out;
  }
  std::vector<int> cur(ring->nvars(), 0);
  detail::enumerate_weighted<K>(ring, e, 0, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring->cmp(a, b) > 0; });
  return out;
}

// Standard monomials of k[x]/I in one weighted degree (I homogeneous).
template <class K>
std::vector<Monomial> std_monomials_of_degree(const Ideal<K>& I, long e) {
  std::vector<Monomial> lms;
  for (const auto& g : I.groebner()) lms.push_back(g.leading_monomial());
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree<K>(I.ring(), e)) {
    bool standard = true;
    for (const auto& l : lms)
      if (l.divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(std::move(m));
  }
  return out;
}

template <class K>
long hilbert_function(const Ideal<K>& I, long e) {
  if (!I.is_homogeneous_gens()) throw InputError("hilbert function needs a homogeneous ideal");
  return static_cast<long>(std_monomials_of_degree(I, e).size());
}

}  // namespace gorlab

#endif

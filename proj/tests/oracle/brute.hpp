#ifndef GORLAB_TESTS_ORACLE_BRUTE_HPP
#define GORLAB_TESTS_ORACLE_BRUTE_HPP

// Brute-force oracle used by the test suites. Everything here is exhaustive
// linear algebra over monomial-coefficient vectors in bounded degree: no
// Groebner bases, no normal forms, no shared code with the library's ideal
// or cohomology machinery. Polynomials are used as term containers only.

#include <map>
#include <optional>
#include <vector>

#include "gorlab/polynomial.hpp"

namespace oracle {

using Q = gorlab::Rational;
using Poly = gorlab::Polynomial<Q>;
using RingPtr = gorlab::PolyRing<Q>::Ptr;

// Row-reduced span of vectors in Q^n, maintained incrementally.
class RowSpace {
 public:
  explicit RowSpace(std::size_t n) : n_(n) {}

  std::size_t dim() const { return rows_.size(); }
  std::vector<Q> reduce(std::vector<Q> v) const;
  bool contains(const std::vector<Q>& v) const;
  bool add(std::vector<Q> v);  // true when the span grew
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<Q>>& rows() const { return rows_; }
  std::size_t ambient() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::vector<Q>> rows_;
  std::vector<std::size_t> pivots_;
};

// Kernel basis of a dense matrix given as rows; independent of the library.
std::vector<std::vector<Q>> kernel_of_rows(const std::vector<std::vector<Q>>& rows,
                                           std::size_t cols);

// Index of all monomials of weighted degree <= bound, in a fixed private
// enumeration order (not the ring's term order).
class MonTable {
 public:
  MonTable(RingPtr ring, long bound);

  const RingPtr& ring() const { return ring_; }
  long bound() const { return bound_; }
  std::size_t size() const { return mons_.size(); }
  const std::vector<std::vector<int>>& monomials() const { return mons_; }
  long degree_of(std::size_t i) const { return degs_[i]; }
  std::optional<std::size_t> index_of(const std::vector<int>& exps) const;

  std::vector<Q> vec(const Poly& f) const;  // throws if f exceeds the bound
  bool fits(const Poly& f) const;

 private:
  RingPtr ring_;
  long bound_;
  std::vector<std::vector<int>> mons_;
  std::vector<long> degs_;
  std::map<std::vector<int>, std::size_t> idx_;
};

// Span of { mu * g : g in gens, mu monomial, deg(mu*g) <= bound }.
RowSpace ideal_span(const MonTable& table, const std::vector<Poly>& gens);

bool in_ideal_bounded(const MonTable& table, const std::vector<Poly>& gens, const Poly& f);

// Spans of two generating sets agree in all degrees <= bound.
bool ideals_equal_bounded(const MonTable& table, const std::vector<Poly>& a,
                          const std::vector<Poly>& b);

// Quotient presentation of (k[x]/ideal) restricted to degree <= bound:
// coordinates are the non-pivot monomials of the ideal span.
class QuotientSpace {
 public:
  QuotientSpace(const MonTable& table, const std::vector<Poly>& ideal_gens);

  const MonTable& table() const { return table_; }
  std::size_t dim() const { return coords_.size(); }
  long top_degree() const;            // -1 when the quotient vanishes
  long dim_in_degree(long e) const;   // graded piece count
  bool vanishes_above(long e) const;  // no coordinates in degrees > e

  // Image of a polynomial in quotient coordinates.
  std::vector<Q> project(const Poly& f) const;
  // Multiplication-by-variable matrix in quotient coordinates (rows = target).
  std::vector<std::vector<Q>> var_action(std::size_t v) const;
  // dim of the joint kernel of all variable actions.
  long socle_dim() const;
  // Socle basis vectors in quotient coordinates.
  std::vector<std::vector<Q>> socle_vectors() const;
  // Coordinate monomials (exponent vectors) of the quotient.
  const std::vector<std::size_t>& coordinate_monomials() const { return coords_; }

  const RowSpace& span() const { return span_; }

 private:
  const MonTable& table_;
  RowSpace span_;
  std::vector<std::size_t> coords_;           // monomial indices, non-pivot
  std::map<std::size_t, std::size_t> coord_of_mon_;
};

// dim over k of { g : deg g <= gdeg, g*f in ideal span } i.e. (I : f)_{<= gdeg}.
long colon_space_dim(const MonTable& table, const std::vector<Poly>& ideal_gens, const Poly& f,
                     long gdeg);

// Membership span of the bounded colon space: basis polynomials.
std::vector<std::vector<Q>> colon_space_basis(const MonTable& table,
                                              const std::vector<Poly>& ideal_gens, const Poly& f,
                                              long gdeg);

// Graded Hilbert function of k[x]/ideal at degree e (homogeneous generators).
long hilbert_brute(const RingPtr& ring, const std::vector<Poly>& gens, long e);

// Krull dimension from the tail behaviour of the Hilbert function up to
// degree `bound`; only meaningful for the desk-scale corpus (dim <= 2).
int krull_dim_brute(const RingPtr& ring, const std::vector<Poly>& gens, long bound = 8);

// f is a non-zero-divisor on (k[x]/ideal) in all degrees <= bound - deg f.
bool is_nzd_bounded(const MonTable& table, const std::vector<Poly>& ideal_gens, const Poly& f);

// dim of the annihilator (0 : f) inside k[x]/ideal, restricted to sources
// whose image stays within the truncation bound.
long mult_kernel_dim(const MonTable& table, const std::vector<Poly>& ideal_gens, const Poly& f);

// dim of (0 : (f_1..f_k)) — the joint multiplication kernel.
long joint_mult_kernel_dim(const MonTable& table, const std::vector<Poly>& ideal_gens,
                           const std::vector<Poly>& fs);

// dim ker( M_t -> M_last ) in the brute quotient system M_n = R/(x^n):
// the kernel of phi_t once the composite has settled.
long top_locoho_phi_kernel_dim(const MonTable& table, const std::vector<Poly>& ideal_gens,
                               const std::vector<Poly>& seq, int t, int steps);

// dim Soc(k[x]/(ideal + q)) — the index of reducibility when the quotient is
// finite within the table bound.
long socle_dim_of_quotient(const MonTable& table, std::vector<Poly> ideal_gens,
                           const std::vector<Poly>& q_gens);

// Stabilized limit-closure span: union over n of ((I + (x^{n+1})) : (prod x)^n)
// truncated at gdeg. Returns basis vectors over monomials of degree <= gdeg.
std::vector<std::vector<Q>> limit_closure_space(const MonTable& table,
                                                const std::vector<Poly>& ideal_gens,
                                                const std::vector<Poly>& seq, long gdeg);

// H^0_m socle: Soc( union_t (0 : m^t) ) inside the bounded quotient.
long h0_socle_dim(const MonTable& table, const std::vector<Poly>& ideal_gens);

// Socle dimension of the top local cohomology H^r_(seq) via the quotient
// direct system M_n = R/(x_1^n..x_r^n) with multiplication maps, computed on
// brute quotient coordinates; `steps` stages must fit inside the table bound.
long top_locoho_socle_dim(const MonTable& table, const std::vector<Poly>& ideal_gens,
                          const std::vector<Poly>& seq, int steps);

// Rank of the composite Soc(M_1) -> M_s at the final stage of the same brute
// system: witnesses surjectivity of Soc H^r(x) -> Soc H^r_m for r = d.
long top_locoho_socle_map_rank(const MonTable& table, const std::vector<Poly>& ideal_gens,
                               const std::vector<Poly>& seq, int steps);

// Graded dims and socle dim of coker(f : R -> R) over k[x]/ideal, bounded.
struct CokernelInfo {
  std::vector<long> dims;  // by degree 0..bound
  long total = 0;
  long socle_dim = 0;
};
CokernelInfo cokernel_info(const MonTable& table, const std::vector<Poly>& ideal_gens,
                           const Poly& f);

}  // namespace oracle

#endif

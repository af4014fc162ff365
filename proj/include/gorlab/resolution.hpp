#ifndef GORLAB_RESOLUTION_HPP
#define GORLAB_RESOLUTION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gorlab/complex.hpp"

namespace gorlab {

// Minimal graded free resolution of R/J over R = k[x]/I, built homological
// step by homological step as exact linear algebra on graded pieces. Exact in
// internal degrees <= degree_bound at every computed step; gen-completeness
// of each term is validated by requiring no new generators in the top margin
// of the degree window. Over non-regular R the resolution is truncated at h.
template <class K>
struct ResolutionBundle {
  GradedRingViewPtr<K> view;
  Ideal<K> target;  // J (in the ambient polynomial ring); resolves R/(I + J)
  FreeComplex<K> complex;
  long degree_bound = 0;
  bool minimal = true;
  bool complete = false;

  const FreeTerm& term(std::size_t k) const { return complex.term(k); }
};

namespace detail {

// Submodule of F (a free term over the view) given by degreewise spans of
// polynomial column vectors; used for both (J+I)/I in F_0 = R and kernels of
// differentials.
template <class K>
struct ColumnVector {
  std::vector<Polynomial<K>> entries;  // one per generator of the free term
  long degree = 0;                     // internal degree of the element
};

template <class K>
std::vector<K> column_coords(const GradedRingView<K>& view, const FreeTerm& term,
                             const ColumnVector<K>& col) {
  TermPiece<K> piece = TermPiece<K>::of(view, term, col.degree);
  std::vector<K> v(piece.dim, view.ring()->scalar_zero());
  for (std::size_t j = 0; j < term.rank(); ++j) {
    std::vector<K> c = view.coords(col.entries[j], col.degree - term.shifts[j]);
    for (std::size_t i = 0; i < c.size(); ++i) v[piece.offset[j] + i] = c[i];
  }
  return v;
}

template <class K>
ColumnVector<K> coords_to_column(const GradedRingView<K>& view, const FreeTerm& term,
                                 const std::vector<K>& v, long degree) {
  TermPiece<K> piece = TermPiece<K>::of(view, term, degree);
  ColumnVector<K> col;
  col.degree = degree;
  for (std::size_t j = 0; j < term.rank(); ++j) {
    long d = degree - term.shifts[j];
    std::vector<K> block(view.basis(d).size(), view.ring()->scalar_zero());
    for (std::size_t i = 0; i < block.size(); ++i) block[i] = v[piece.offset[j] + i];
    col.entries.push_back(view.from_coords(block, d));
  }
  return col;
}

}  // namespace detail

template <class K>
ResolutionBundle<K> graded_free_resolution(const GradedRingViewPtr<K>& view, const Ideal<K>& J,
                                           int h, long degree_bound) {
  const auto& ring = view->ring();
  const K zero = ring->scalar_zero();
  const GradedAlgebra<K>& R = view->algebra();
  if (h < 1) throw InputError("resolution needs at least one homological step");
  if (!J.is_homogeneous_gens())
    throw InputError("graded resolution requires a homogeneous ideal");
  Ideal<K> JI = R.ideal().plus(J);
  if (JI.is_unit_ideal()) throw InputError("resolution target R/J is the zero ring");

  long max_gen_deg = 0;
  for (const auto& g : J.generators())
    if (!g.is_zero()) max_gen_deg = std::max(max_gen_deg, g.degree());
  int maxw = 0;
  for (std::size_t v = 0; v < ring->nvars(); ++v) maxw = std::max(maxw, ring->weight(v));
  long margin = maxw + 1;
  if (degree_bound < max_gen_deg + margin + 1)
    throw DegreeBoundError("resolution degree bound " + std::to_string(degree_bound) +
                           " cannot certify generators up to degree " +
                           std::to_string(max_gen_deg + margin + 1));

  std::vector<FreeTerm> terms{FreeTerm{{0}}};
  std::vector<PolyMat<K>> diffs;
  bool complete = false;

  // Degreewise basis of the submodule S ⊆ F_{k-1} to be covered next:
  // for k = 1 the image of J in R, afterwards ker(d_{k-1}).
  auto submodule_piece = [&](int k, long e) -> std::vector<std::vector<K>> {
    if (k == 1) {
      SpanBuilder<K> span(static_cast<std::size_t>(view->dim(e)), zero);
      std::vector<std::vector<K>> basis;
      for (const auto& g : J.generators()) {
        if (g.is_zero()) continue;
        long d = e - g.degree();
        for (const auto& mu : view->basis(d)) {
          Polynomial<K> p = g.times_term(mu, ring->scalar_one());
          std::vector<K> c = view->coords(p, e);
          if (span.add(c)) basis.push_back(view->coords(p, e));
        }
      }
      return basis;
    }
    const FreeTerm& src = terms[static_cast<std::size_t>(k) - 1];
    const FreeTerm& dst = terms[static_cast<std::size_t>(k) - 2];
    Matrix<K> piece = piece_matrix(*view, dst, src, diffs[static_cast<std::size_t>(k) - 2], e);
    return piece.kernel_basis();
  };

  for (int k = 1; k <= h && !complete; ++k) {
    const FreeTerm& prev = terms.back();
    long e_min = prev.shifts.empty() ? 0 : *std::min_element(prev.shifts.begin(),
                                                             prev.shifts.end());
    FreeTerm next;
    std::vector<detail::ColumnVector<K>> gens;
    // Degreewise spans of the submodule generated by the generators found so
    // far; grown by variable action as the degree sweeps upward.
    std::map<long, SpanBuilder<K>> generated;

    for (long e = e_min; e <= degree_bound; ++e) {
      TermPiece<K> piece = TermPiece<K>::of(*view, prev, e);
      if (piece.dim == 0) continue;
      auto it = generated.emplace(e, SpanBuilder<K>(piece.dim, zero)).first;
      SpanBuilder<K>& span = it->second;
      // Push earlier generators and earlier degree-e' spans up into degree e.
      for (std::size_t v = 0; v < ring->nvars(); ++v) {
        long w = ring->weight(v);
        auto lower = generated.find(e - w);
        if (lower == generated.end()) continue;
        Matrix<K> up = piece_var_action(*view, prev, e - w, v);
        for (const auto& row : lower->second.basis_rows()) span.add(up.apply(row));
      }
      std::vector<std::vector<K>> sub = submodule_piece(k, e);
      for (auto& vec : sub) {
        std::vector<K> copy = vec;
        if (span.add(copy)) {
          next.shifts.push_back(e);
          gens.push_back(detail::coords_to_column(*view, prev, vec, e));
        }
      }
    }

    // Gen-completeness: no new generators may appear in the top margin.
    for (std::size_t gi = 0; gi < next.shifts.size(); ++gi)
      if (next.shifts[gi] > degree_bound - margin)
        throw DegreeBoundError("resolution step " + std::to_string(k) +
                               " found a generator at degree " +
                               std::to_string(next.shifts[gi]) +
                               " too close to the bound " + std::to_string(degree_bound));

    PolyMat<K> d(prev.rank(), std::vector<Polynomial<K>>(gens.size(), Polynomial<K>::zero(ring)));
    for (std::size_t c = 0; c < gens.size(); ++c)
      for (std::size_t r = 0; r < prev.rank(); ++r) {
        d[r][c] = gens[c].entries[r];
        if (!d[r][c].is_zero() && !d[r][c].constant_term().is_zero())
          throw ConsistencyError("minimal resolution produced a unit entry");
      }
    terms.push_back(std::move(next));
    diffs.push_back(std::move(d));
    if (terms.back().rank() == 0) complete = true;
  }

  ResolutionBundle<K> bundle;
  bundle.view = view;
  bundle.target = J;
  bundle.degree_bound = degree_bound;
  bundle.complete = complete && R.ideal().is_zero_ideal();
  bundle.complex = FreeComplex<K>(view, std::move(terms), std::move(diffs));
  bundle.complex.validate();
  return bundle;
}

// Comparison-theorem lift: a chain map C -> F covering deg0 on the
// augmentations, solved degree by degree over the graded pieces. The lift
// exists whenever deg0 induces a well-defined map H_0(C) -> R/J; otherwise
// some linear solve fails and we report the obstruction.
template <class K>
ChainMap<K> lift_chain_map(const FreeComplex<K>& C, const ResolutionBundle<K>& F,
                           const Polynomial<K>& deg0) {
  const auto& view = *F.view;
  const auto& ring = view.ring();
  const K zero = ring->scalar_zero();
  if (C.term(0).rank() != 1 || F.complex.term(0).rank() != 1)
    throw InputError("lift expects cyclic augmentations (rank-1 degree-0 terms)");

  std::vector<PolyMat<K>> comps;
  comps.push_back({{normal_form(deg0, view.algebra().ideal())}});
  std::size_t steps = std::min(C.length(), F.complex.length());
  for (std::size_t k = 1; k < steps; ++k) {
    const FreeTerm& src = C.term(k);
    const FreeTerm& dstF = F.complex.term(k);
    PolyMat<K> comp(dstF.rank(), std::vector<Polynomial<K>>(src.rank(),
                                                            Polynomial<K>::zero(ring)));
    for (std::size_t c = 0; c < src.rank(); ++c) {
      long a = src.shifts[c];
      if (a > F.degree_bound)
        throw DegreeBoundError("lift: source generator degree " + std::to_string(a) +
                               " exceeds the resolution bound");
      // rhs = f_{k-1}( d^C( g_c ) ) as coordinates in F_{k-1} at degree a.
      detail::ColumnVector<K> rhs_col;
      rhs_col.degree = a;
      for (std::size_t r = 0; r < F.complex.term(k - 1).rank(); ++r) {
        Polynomial<K> acc = Polynomial<K>::zero(ring);
        for (std::size_t m = 0; m < C.term(k - 1).rank(); ++m) {
          const Polynomial<K>& fc = comps[k - 1][r][m];
          const Polynomial<K>& dc = C.diff(k - 1)[m][c];
          if (!fc.is_zero() && !dc.is_zero()) acc = acc + fc * dc;
        }
        rhs_col.entries.push_back(normal_form(acc, view.algebra().ideal()));
      }
      std::vector<K> rhs = detail::column_coords(view, F.complex.term(k - 1), rhs_col);
      Matrix<K> solveM =
          piece_matrix(view, F.complex.term(k - 1), dstF, F.complex.diff(k - 1), a);
      auto sol = solveM.solve(rhs);
      if (!sol)
        throw DegreeBoundError("no lift at homological step " + std::to_string(k) +
                               ", internal degree " + std::to_string(a) +
                               " (bound too small or the map is not liftable)");
      detail::ColumnVector<K> ycol = detail::coords_to_column(view, dstF, *sol, a);
      for (std::size_t r = 0; r < dstF.rank(); ++r) comp[r][c] = ycol.entries[r];
    }
    comps.push_back(std::move(comp));
  }
  ChainMap<K> map(&C, &F.complex, std::move(comps));
  map.validate();
  return map;
}

}  // namespace gorlab

#endif

#ifndef GORLAB_GRADED_HPP
#define GORLAB_GRADED_HPP

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "gorlab/algebra.hpp"
#include "gorlab/matrix.hpp"

namespace gorlab {

// Raised when a validated truncation bound turns out to be too small.
class DegreeBoundError : public StabilizationError {
 public:
  explicit DegreeBoundError(std::string msg) : StabilizationError(std::move(msg)) {}
};

// Degreewise view of R = k[x]/I: standard-monomial bases of the graded
// pieces, coordinates, and multiplication matrices. All caches grow
// monotonically and are deterministic.
template <class K>
class GradedRingView {
 public:
  explicit GradedRingView(GradedAlgebra<K> algebra) : alg_(std::move(algebra)) {}

  const GradedAlgebra<K>& algebra() const { return alg_; }
  const typename PolyRing<K>::Ptr& ring() const { return alg_.ring(); }

  const std::vector<Monomial>& basis(long e) const {
    auto it = basis_.find(e);
    if (it != basis_.end()) return it->second;
    std::vector<Monomial> b =
        e < 0 ? std::vector<Monomial>{} : std_monomials_of_degree(alg_.ideal(), e);
    auto& slot = basis_[e] = std::move(b);
    auto& idx = index_[e];
    for (std::size_t i = 0; i < slot.size(); ++i) idx[slot[i].exps()] = i;
    return slot;
  }

  long dim(long e) const { return static_cast<long>(basis(e).size()); }

  // Coordinates of a homogeneous polynomial of degree e (normal form taken).
  std::vector<K> coords(const Polynomial<K>& f, long e) const {
    basis(e);
    const auto& idx = index_.at(e);
    std::vector<K> v(basis(e).size(), ring()->scalar_zero());
    Polynomial<K> nf = normal_form(f, alg_.ideal());
    for (const auto& t : nf.terms()) {
      if (t.mono.degree() != e)
        throw ConsistencyError("graded coordinates: inhomogeneous element");
      auto it = idx.find(t.mono.exps());
      if (it == idx.end()) throw ConsistencyError("graded coordinates: non-standard monomial");
      v[it->second] = t.coeff;
    }
    return v;
  }

  Polynomial<K> from_coords(const std::vector<K>& v, long e) const {
    const auto& b = basis(e);
    Polynomial<K> f = Polynomial<K>::zero(ring());
    for (std::size_t i = 0; i < b.size(); ++i)
      if (!v[i].is_zero()) f = f + Polynomial<K>::monomial(ring(), b[i], v[i]);
    return f;
  }

  // Multiplication by a homogeneous g of degree dg: R_e -> R_{e+dg}.
  // Cached per (rendering of g, e): the same few polynomials are applied at
  // many degrees across a direct-system run.
  const Matrix<K>& mult_matrix(const Polynomial<K>& g, long e) const {
    auto key = std::make_pair(g.str(), e);
    auto it = mult_cache_.find(key);
    if (it != mult_cache_.end()) return it->second;
    long dg = g.degree();
    const auto& src = basis(e);
    const auto& dst = basis(e + dg);
    Matrix<K> M(dst.size(), src.size(), ring()->scalar_zero());
    for (std::size_t j = 0; j < src.size(); ++j) {
      Polynomial<K> p = g.times_term(src[j], ring()->scalar_one());
      std::vector<K> col = coords(p, e + dg);
      M.set_column(j, col);
    }
    return mult_cache_.emplace(std::move(key), std::move(M)).first->second;
  }

 private:
  GradedAlgebra<K> alg_;
  mutable std::map<long, std::vector<Monomial>> basis_;
  mutable std::map<long, std::map<std::vector<int>, std::size_t>> index_;
  mutable std::map<std::pair<std::string, long>, Matrix<K>> mult_cache_;
};

template <class K>
using GradedRingViewPtr = std::shared_ptr<GradedRingView<K>>;

// One term of a complex of graded free modules: generators with internal
// degrees `shifts` (the term is ⊕_j R(-shifts[j])).
struct FreeTerm {
  std::vector<long> shifts;
  std::size_t rank() const { return shifts.size(); }
};

// Basis layout of a free term's graded piece at one internal degree:
// generator blocks laid out consecutively, block j spanned by the standard
// monomials of R in degree e - shifts[j].
template <class K>
struct TermPiece {
  std::vector<std::size_t> offset;  // per generator
  std::size_t dim = 0;

  static TermPiece of(const GradedRingView<K>& view, const FreeTerm& term, long e) {
    TermPiece p;
    for (long a : term.shifts) {
      p.offset.push_back(p.dim);
      p.dim += static_cast<std::size_t>(view.dim(e - a));
    }
    return p;
  }
};

template <class K>
using PolyMat = std::vector<std::vector<Polynomial<K>>>;  // [row][col]

template <class K>
PolyMat<K> polymat_transpose(const PolyMat<K>& m) {
  if (m.empty()) return {};
  PolyMat<K> t(m[0].size(), std::vector<Polynomial<K>>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

// Entry-wise normal form of A*B modulo the view's defining ideal.
template <class K>
PolyMat<K> polymat_mul_nf(const GradedRingView<K>& view, const PolyMat<K>& a,
                          const PolyMat<K>& b) {
  std::size_t rows = a.size();
  std::size_t inner = b.size();
  std::size_t cols = inner ? b[0].size() : 0;
  PolyMat<K> r(rows, std::vector<Polynomial<K>>(cols, Polynomial<K>::zero(view.ring())));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] = r[i][j] + a[i][k] * b[k][j];
      }
    }
  for (auto& row : r)
    for (auto& p : row) p = normal_form(p, view.algebra().ideal());
  return r;
}

// Scalar matrix of a degree-0 map of free modules on the degree-e pieces.
// `mat` has rows indexed by `dst` generators and columns by `src` generators;
// entry (r, c) is homogeneous of degree src.shifts[c] - dst.shifts[r].
template <class K>
Matrix<K> piece_matrix(const GradedRingView<K>& view, const FreeTerm& dst, const FreeTerm& src,
                       const PolyMat<K>& mat, long e) {
  TermPiece<K> sp = TermPiece<K>::of(view, src, e);
  TermPiece<K> dp = TermPiece<K>::of(view, dst, e);
  Matrix<K> M(dp.dim, sp.dim, view.ring()->scalar_zero());
  for (std::size_t c = 0; c < src.rank(); ++c) {
    const auto& src_basis = view.basis(e - src.shifts[c]);
    for (std::size_t r = 0; r < dst.rank(); ++r) {
      if (mat[r][c].is_zero()) continue;
      Matrix<K> block = view.mult_matrix(mat[r][c], e - src.shifts[c]);
      for (std::size_t j = 0; j < src_basis.size(); ++j)
        for (std::size_t i = 0; i < block.rows(); ++i) {
          const K& x = block.at(i, j);
          if (!x.is_zero()) M.at(dp.offset[r] + i, sp.offset[c] + j) = x;
        }
    }
  }
  return M;
}

// Block-diagonal multiplication by x_v on a free term's piece:
// degree e -> degree e + weight(v).
template <class K>
Matrix<K> piece_var_action(const GradedRingView<K>& view, const FreeTerm& term, long e,
                           std::size_t v) {
  Polynomial<K> xv = Polynomial<K>::variable(view.ring(), v);
  TermPiece<K> sp = TermPiece<K>::of(view, term, e);
  TermPiece<K> dp = TermPiece<K>::of(view, term, e + view.ring()->weight(v));
  Matrix<K> M(dp.dim, sp.dim, view.ring()->scalar_zero());
  for (std::size_t j = 0; j < term.rank(); ++j) {
    Matrix<K> block = view.mult_matrix(xv, e - term.shifts[j]);
    for (std::size_t c = 0; c < block.cols(); ++c)
      for (std::size_t r = 0; r < block.rows(); ++r) {
        const K& x = block.at(r, c);
        if (!x.is_zero()) M.at(dp.offset[j] + r, sp.offset[j] + c) = x;
      }
  }
  return M;
}

}  // namespace gorlab

#endif

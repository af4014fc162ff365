#ifndef GORLAB_MODULE_HPP
#define GORLAB_MODULE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gorlab/complex.hpp"

namespace gorlab {

inline FreeTerm dual_term(const FreeTerm& t) {
  FreeTerm d;
  for (long a : t.shifts) d.shifts.push_back(-a);
  return d;
}

// A finite-length (truncation-validated) graded module presented degreewise:
// chosen cocycle representatives inside an ambient free-term piece, the
// coboundary space used to normalize classes, and variable-action matrices in
// class coordinates.
template <class K>
class GradedModule {
 public:
  struct Piece {
    Matrix<K> reps;        // ambient_dim x h
    Matrix<K> boundaries;  // ambient_dim x b
  };

  GradedRingViewPtr<K> view;
  FreeTerm ambient;  // the dual term this module's classes live in
  std::map<long, Piece> pieces;
  std::map<std::pair<std::size_t, long>, Matrix<K>> actions;  // (var, e) -> H_e -> H_{e+w}
  long lo = 0, hi = 0;
  bool finite_validated = false;

  long dim(long e) const {
    auto it = pieces.find(e);
    return it == pieces.end() ? 0 : static_cast<long>(it->second.reps.cols());
  }

  long total_dim() const {
    long s = 0;
    for (const auto& [e, p] : pieces) s += static_cast<long>(p.reps.cols());
    return s;
  }

  std::map<long, long> dims() const {
    std::map<long, long> d;
    for (const auto& [e, p] : pieces)
      if (p.reps.cols() > 0) d[e] = static_cast<long>(p.reps.cols());
    return d;
  }

  bool is_zero() const { return total_dim() == 0; }

  const Matrix<K>& action(std::size_t v, long e) const {
    static const Matrix<K> empty;
    auto it = actions.find({v, e});
    return it == actions.end() ? empty : it->second;
  }

  // Express many ambient cocycle columns at degree e in class coordinates
  // with a single elimination.
  Matrix<K> classify_columns(const Matrix<K>& ambient_cols, long e) const {
    const K zero = view->ring()->scalar_zero();
    auto it = pieces.find(e);
    if (it == pieces.end()) {
      if (!ambient_cols.is_zero())
        throw ConsistencyError("cocycle lands in a degree with no computed piece");
      return Matrix<K>(0, ambient_cols.cols(), zero);
    }
    const Piece& p = it->second;
    std::size_t h = p.reps.cols();
    Matrix<K> solveM = p.reps.augmented(p.boundaries);
    auto sol = solveM.solve_columns(ambient_cols);
    if (!sol) throw ConsistencyError("vector is not a cocycle modulo boundaries");
    Matrix<K> out(h, ambient_cols.cols(), zero);
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < ambient_cols.cols(); ++j) out.at(i, j) = sol->at(i, j);
    return out;
  }

  // Express an ambient cocycle vector at degree e in class coordinates.
  std::vector<K> classify(const std::vector<K>& ambient_vec, long e) const {
    auto it = pieces.find(e);
    const K zero = view->ring()->scalar_zero();
    if (it == pieces.end()) {
      for (const auto& x : ambient_vec)
        if (!x.is_zero())
          throw ConsistencyError("cocycle lands in a degree with no computed piece");
      return {};
    }
    const Piece& p = it->second;
    Matrix<K> solveM = p.reps.cols() > 0 ? p.reps.augmented(p.boundaries) : p.boundaries;
    std::vector<K> out(p.reps.cols(), zero);
    bool all_zero = true;
    for (const auto& x : ambient_vec)
      if (!x.is_zero()) all_zero = false;
    if (all_zero) return out;
    auto sol = solveM.solve(ambient_vec);
    if (!sol) throw ConsistencyError("vector is not a cocycle modulo boundaries");
    for (std::size_t i = 0; i < p.reps.cols(); ++i) out[i] = (*sol)[i];
    return out;
  }
};

template <class K>
struct ModuleSocle {
  std::map<long, Matrix<K>> vectors;  // class-coordinate columns per degree
  long dim = 0;
};

template <class K>
ModuleSocle<K> socle(const GradedModule<K>& M) {
  ModuleSocle<K> s;
  const auto& ring = M.view->ring();
  const K zero = ring->scalar_zero();
  for (const auto& [e, piece] : M.pieces) {
    std::size_t n = piece.reps.cols();
    if (n == 0) continue;
    Matrix<K> stacked(0, n, zero);
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      const Matrix<K>& A = M.action(v, e);
      stacked = stacked.stacked(A.cols() == n ? A : Matrix<K>(0, n, zero));
    }
    auto ker = stacked.kernel_basis();
    if (ker.empty()) continue;
    Matrix<K> vecs = Matrix<K>::from_columns(n, ker, zero);
    s.dim += static_cast<long>(ker.size());
    s.vectors[e] = std::move(vecs);
  }
  return s;
}

// Degree-preserving k-linear map between graded modules, in class coords.
template <class K>
struct GradedMap {
  std::map<long, Matrix<K>> comp;  // e -> dst.dim(e) x src.dim(e); absent = zero

  long rank() const {
    long r = 0;
    for (const auto& [e, m] : comp) r += static_cast<long>(m.rank());
    return r;
  }
};

// Map on cohomology induced by a chain map psi : B -> A, contravariantly:
// H^i(Hom(A,R)) -> H^i(Hom(B,R)). `from` was computed on A, `to` on B.
template <class K>
GradedMap<K> induced_map(const GradedModule<K>& from, const GradedModule<K>& to,
                         const ChainMap<K>& psi, std::size_t i) {
  GradedMap<K> f;
  const auto& view = *from.view;
  FreeTerm srcterm = from.ambient;               // dual(A_i)
  FreeTerm dstterm = to.ambient;                 // dual(B_i)
  PolyMat<K> dual = polymat_transpose(psi.comp(i));
  for (const auto& [e, piece] : from.pieces) {
    std::size_t n = piece.reps.cols();
    if (n == 0) continue;
    Matrix<K> amb = piece_matrix(view, dstterm, srcterm, dual, e);
    Matrix<K> out = to.classify_columns(amb * piece.reps, e);
    if (out.rows() > 0 || out.cols() > 0) f.comp[e] = std::move(out);
  }
  return f;
}

template <class K>
GradedMap<K> compose(const GradedModule<K>& a, const GradedModule<K>& b, const GradedModule<K>& c,
                     const GradedMap<K>& f /*a->b*/, const GradedMap<K>& g /*b->c*/) {
  GradedMap<K> h;
  const K zero = a.view->ring()->scalar_zero();
  for (const auto& [e, fm] : f.comp) {
    long bd = b.dim(e), cd = c.dim(e);
    if (fm.cols() == 0) continue;
    Matrix<K> gm = (g.comp.count(e) && bd > 0) ? g.comp.at(e)
                                               : Matrix<K>(static_cast<std::size_t>(cd),
                                                           static_cast<std::size_t>(bd), zero);
    Matrix<K> prod = gm * fm;
    h.comp[e] = std::move(prod);
  }
  return h;
}

template <class K>
long kernel_dim(const GradedModule<K>& src, const GradedMap<K>& f) {
  long k = 0;
  for (const auto& [e, d] : src.dims()) {
    long r = 0;
    auto it = f.comp.find(e);
    if (it != f.comp.end()) r = static_cast<long>(it->second.rank());
    k += d - r;
  }
  return k;
}

// Image of f inside dst, as independent class-coordinate columns per degree.
template <class K>
std::map<long, std::vector<std::vector<K>>> image_columns(const GradedModule<K>& dst,
                                                          const GradedMap<K>& f) {
  std::map<long, std::vector<std::vector<K>>> img;
  const K zero = dst.view->ring()->scalar_zero();
  for (const auto& [e, m] : f.comp) {
    if (m.rows() == 0 || m.cols() == 0) continue;
    SpanBuilder<K> span(m.rows(), zero);
    std::vector<std::vector<K>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<K> c = m.column(j);
      if (span.add(c)) cols.push_back(m.column(j));
    }
    if (!cols.empty()) img[e] = std::move(cols);
  }
  return img;
}

// dim Soc(N) for the submodule N of `dst` spanned by `cols` (a module: image
// of a module map). Solves for combinations killed by every variable action.
template <class K>
long socle_dim_of_submodule(const GradedModule<K>& dst,
                            const std::map<long, std::vector<std::vector<K>>>& cols) {
  const auto& ring = dst.view->ring();
  const K zero = ring->scalar_zero();
  long total = 0;
  for (const auto& [e, basis] : cols) {
    std::size_t n = basis.size();
    if (n == 0) continue;
    std::vector<std::vector<K>> rows;
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      const Matrix<K>& A = dst.action(v, e);
      if (A.cols() == 0) continue;  // zero target piece: no constraint
      for (std::size_t i = 0; i < A.rows(); ++i) {
        std::vector<K> row(n, zero);
        bool nonzero = false;
        for (std::size_t b = 0; b < n; ++b) {
          K acc = zero;
          for (std::size_t j = 0; j < A.cols(); ++j)
            if (!A.at(i, j).is_zero() && !basis[b][j].is_zero()) acc += A.at(i, j) * basis[b][j];
          row[b] = acc;
          if (!acc.is_zero()) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    Matrix<K> constraint(rows.size(), n, zero);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) constraint.at(i, j) = rows[i][j];
    total += static_cast<long>(constraint.kernel_basis().size());
  }
  return total;
}

// Push per-degree class vectors through f; returns the rank of the image.
template <class K>
long pushed_rank(const GradedModule<K>& dst, const GradedMap<K>& f,
                 const std::map<long, Matrix<K>>& vectors) {
  const K zero = dst.view->ring()->scalar_zero();
  long rank = 0;
  for (const auto& [e, vecs] : vectors) {
    auto it = f.comp.find(e);
    if (it == f.comp.end()) continue;  // zero map on this degree
    const Matrix<K>& m = it->second;
    if (m.rows() == 0) continue;
    SpanBuilder<K> span(m.rows(), zero);
    for (std::size_t j = 0; j < vecs.cols(); ++j)
      if (span.add(m.apply(vecs.column(j)))) ++rank;
  }
  return rank;
}

}  // namespace gorlab

#endif

#ifndef GORLAB_COMPLEX_HPP
#define GORLAB_COMPLEX_HPP

#include <string>
#include <utility>
#include <vector>

#include "gorlab/graded.hpp"

namespace gorlab {

// Chain complex of graded free R-modules, R = k[x]/I. Differentials lower the
// homological index: diffs[k] maps terms[k+1] -> terms[k]. Entries are stored
// in normal form modulo I.
template <class K>
class FreeComplex {
 public:
  FreeComplex() = default;
  FreeComplex(GradedRingViewPtr<K> view, std::vector<FreeTerm> terms,
              std::vector<PolyMat<K>> diffs)
      : view_(std::move(view)), terms_(std::move(terms)), diffs_(std::move(diffs)) {}

  const GradedRingViewPtr<K>& view() const { return view_; }
  std::size_t length() const { return terms_.size(); }  // homological 0..length-1
  const FreeTerm& term(std::size_t i) const { return terms_[i]; }
  const std::vector<FreeTerm>& terms() const { return terms_; }
  const PolyMat<K>& diff(std::size_t k) const { return diffs_[k]; }  // terms[k+1] -> terms[k]
  std::size_t diff_count() const { return diffs_.size(); }

  // d o d = 0, entrywise modulo I; degree bookkeeping of every entry.
  void validate() const {
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
      const PolyMat<K>& d = diffs_[k];
      if (d.size() != terms_[k].rank())
        throw ConsistencyError("differential row count mismatch at step " + std::to_string(k));
      for (std::size_t r = 0; r < d.size(); ++r) {
        if (d[r].size() != terms_[k + 1].rank())
          throw ConsistencyError("differential column count mismatch at step " +
                                 std::to_string(k));
        for (std::size_t c = 0; c < d[r].size(); ++c) {
          const Polynomial<K>& p = d[r][c];
          if (p.is_zero()) continue;
          if (!p.is_homogeneous() ||
              p.degree() != terms_[k + 1].shifts[c] - terms_[k].shifts[r])
            throw ConsistencyError("differential entry degree mismatch at step " +
                                   std::to_string(k));
        }
      }
    }
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
      PolyMat<K> square = polymat_mul_nf(*view_, diffs_[k], diffs_[k + 1]);
      for (const auto& row : square)
        for (const auto& p : row)
          if (!p.is_zero())
            throw ConsistencyError("d∘d != 0 at step " + std::to_string(k));
    }
  }

 private:
  GradedRingViewPtr<K> view_;
  std::vector<FreeTerm> terms_;
  std::vector<PolyMat<K>> diffs_;
};

// Degree-0 chain map between chain complexes over the same ring view.
// comps[k] : src.terms[k] -> dst.terms[k].
template <class K>
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(const FreeComplex<K>* src, const FreeComplex<K>* dst, std::vector<PolyMat<K>> comps)
      : src_(src), dst_(dst), comps_(std::move(comps)) {}

  const FreeComplex<K>& src() const { return *src_; }
  const FreeComplex<K>& dst() const { return *dst_; }
  const PolyMat<K>& comp(std::size_t k) const { return comps_[k]; }
  std::size_t length() const { return comps_.size(); }

  // Squares with the differentials commute, entrywise modulo I.
  void validate() const {
    const auto& view = *src_->view();
    std::size_t steps = std::min(src_->diff_count(), dst_->diff_count());
    for (std::size_t k = 0; k < steps && k + 1 < comps_.size(); ++k) {
      PolyMat<K> lhs = polymat_mul_nf(view, dst_->diff(k), comps_[k + 1]);
      PolyMat<K> rhs = polymat_mul_nf(view, comps_[k], src_->diff(k));
      if (lhs.size() != rhs.size()) throw ConsistencyError("chain map shape mismatch");
      for (std::size_t r = 0; r < lhs.size(); ++r)
        for (std::size_t c = 0; c < lhs[r].size(); ++c)
          if (!(lhs[r][c] - rhs[r][c]).is_zero())
            throw ConsistencyError("chain map square does not commute at step " +
                                   std::to_string(k));
    }
  }

  // Composition: this after earlier (earlier: A -> B, this: B -> C).
  ChainMap composed_after(const ChainMap& earlier) const {
    const auto& view = *src_->view();
    std::vector<PolyMat<K>> comps;
    std::size_t n = std::min(length(), earlier.length());
    for (std::size_t k = 0; k < n; ++k)
      comps.push_back(polymat_mul_nf(view, comps_[k], earlier.comp(k)));
    return ChainMap(earlier.src_, dst_, std::move(comps));
  }

  static ChainMap identity(const FreeComplex<K>* c) {
    std::vector<PolyMat<K>> comps;
    for (std::size_t k = 0; k < c->length(); ++k) {
      std::size_t n = c->term(k).rank();
      PolyMat<K> id(n, std::vector<Polynomial<K>>(n, Polynomial<K>::zero(c->view()->ring())));
      for (std::size_t i = 0; i < n; ++i)
        id[i][i] = Polynomial<K>::constant(c->view()->ring(), c->view()->ring()->scalar_one());
      comps.push_back(std::move(id));
    }
    return ChainMap(c, c, std::move(comps));
  }

 private:
  const FreeComplex<K>* src_ = nullptr;
  const FreeComplex<K>* dst_ = nullptr;
  std::vector<PolyMat<K>> comps_;
};

}  // namespace gorlab

#endif

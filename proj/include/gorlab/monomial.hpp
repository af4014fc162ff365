#ifndef GORLAB_MONOMIAL_HPP
#define GORLAB_MONOMIAL_HPP

#include <cstddef>
#include <vector>

namespace gorlab {

// Exponent vector with cached weighted total degree. The degree is fixed at
// construction from the ring's variable weights, so comparisons and products
// never need the ring again.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<int> exps, long degree) : e_(std::move(exps)), deg_(degree) {}

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0), 0); }

  std::size_t nvars() const { return e_.size(); }
  int exp(std::size_t i) const { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }
  long degree() const { return deg_; }
  bool is_one() const { return total_exp() == 0; }

  // Unweighted exponent sum: the m-adic order of the monomial.
  long total_exp() const {
    long s = 0;
    for (int x : e_) s += x;
    return s;
  }

  Monomial operator*(const Monomial& o) const {
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return Monomial(std::move(r), deg_ + o.deg_);
  }

  bool divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // Quotient o / this; caller guarantees divisibility.
  Monomial divide_into(const Monomial& o) const {
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = o.e_[i] - e_[i];
    return Monomial(std::move(r), o.deg_ - deg_);
  }

  bool same_exponents(const Monomial& o) const { return e_ == o.e_; }

 private:
  std::vector<int> e_;
  long deg_ = 0;
};

// lcm/gcd need the weights to recompute the cached degree.
inline Monomial mono_lcm(const Monomial& a, const Monomial& b, const std::vector<int>& weights) {
  std::vector<int> r(a.nvars());
  long d = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = a.exp(i) > b.exp(i) ? a.exp(i) : b.exp(i);
    d += static_cast<long>(r[i]) * weights[i];
  }
  return Monomial(std::move(r), d);
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b, const std::vector<int>& weights) {
  std::vector<int> r(a.nvars());
  long d = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = a.exp(i) < b.exp(i) ? a.exp(i) : b.exp(i);
    d += static_cast<long>(r[i]) * weights[i];
  }
  return Monomial(std::move(r), d);
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exp(i) > 0 && b.exp(i) > 0) return false;
  return true;
}

enum class TermOrder { GrevLex, GrLex, Lex };

// Order descriptor. elim_block > 0 marks the first elim_block variables as an
// elimination block: monomials compare first by total exponent in the block,
// so any monomial containing a block variable dominates all block-free ones.
struct OrderSpec {
  TermOrder base = TermOrder::GrevLex;
  int elim_block = 0;

  bool operator==(const OrderSpec& o) const = default;
};

// Three-way comparison: >0 when a > b under the order.
inline int mono_cmp(const Monomial& a, const Monomial& b, const OrderSpec& o) {
  if (o.elim_block > 0) {
    long ba = 0, bb = 0;
    for (int i = 0; i < o.elim_block; ++i) {
      ba += a.exp(i);
      bb += b.exp(i);
    }
    if (ba != bb) return ba < bb ? -1 : 1;
  }
  switch (o.base) {
    case TermOrder::Lex: {
      for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
      return 0;
    }
    case TermOrder::GrLex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
      return 0;
    }
    case TermOrder::GrevLex:
    default: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = a.nvars(); i-- > 0;)
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
      return 0;
    }
  }
}

}  // namespace gorlab

#endif

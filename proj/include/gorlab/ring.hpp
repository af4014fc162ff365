#ifndef GORLAB_RING_HPP
#define GORLAB_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gorlab/errors.hpp"
#include "gorlab/monomial.hpp"
#include "gorlab/scalar.hpp"

namespace gorlab {

// Field construction context: how to materialize scalars from integers.
template <class K>
struct FieldCtx;

template <>
struct FieldCtx<Rational> {
  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_long(long n) const { return Rational(n); }
  Rational from_decimal(const std::string& s) const { return Rational::from_decimal_string(s); }
  std::string describe() const { return "Q"; }
  bool operator==(const FieldCtx&) const { return true; }
};

template <>
struct FieldCtx<GFp> {
  std::uint32_t p = 0;
  GFp zero() const { return GFp(0, p); }
  GFp one() const { return GFp(1, p); }
  GFp from_long(long n) const { return GFp(n, p); }
  GFp from_decimal(const std::string& s) const {
    // Reduce digit by digit; inputs may exceed 64 bits.
    std::uint64_t acc = 0;
    for (char c : s) acc = (acc * 10 + static_cast<std::uint64_t>(c - '0')) % p;
    return GFp(static_cast<std::int64_t>(acc), p);
  }
  std::string describe() const { return "Fp:" + std::to_string(p); }
  bool operator==(const FieldCtx& o) const { return p == o.p; }
};

// The ambient polynomial ring signature: named variables with positive
// integer degrees, a coefficient field, and a global term order. Immutable;
// polynomials hold a shared_ptr to it.
template <class K>
class PolyRing : public std::enable_shared_from_this<PolyRing<K>> {
 public:
  using Ptr = std::shared_ptr<const PolyRing<K>>;

  static Ptr create(std::vector<std::string> vars, FieldCtx<K> field,
                    std::vector<int> weights = {}, OrderSpec order = {}) {
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size()) throw InputError("degrees list length != variable count");
    for (int w : weights)
      if (w <= 0) throw InputError("variable degrees must be positive");
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i].empty()) throw InputError("empty variable name");
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j]) throw InputError("duplicate variable name: " + vars[i]);
    }
    return Ptr(new PolyRing<K>(std::move(vars), std::move(field), std::move(weights), order));
  }

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }
  const OrderSpec& order() const { return order_; }
  const FieldCtx<K>& field() const { return field_; }

  K scalar_zero() const { return field_.zero(); }
  K scalar_one() const { return field_.one(); }
  K scalar_from(long n) const { return field_.from_long(n); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

  Monomial mono(std::vector<int> exps) const {
    if (exps.size() != nvars()) throw InputError("exponent vector length != variable count");
    long d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw InputError("negative exponent");
      d += static_cast<long>(exps[i]) * weights_[i];
    }
    return Monomial(std::move(exps), d);
  }

  Monomial mono_one() const { return Monomial::one(nvars()); }

  Monomial mono_var(std::size_t i, int e = 1) const {
    std::vector<int> x(nvars(), 0);
    x[i] = e;
    return Monomial(std::move(x), static_cast<long>(e) * weights_[i]);
  }

  int cmp(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b, order_); }

  Monomial lcm(const Monomial& a, const Monomial& b) const { return mono_lcm(a, b, weights_); }
  Monomial gcd(const Monomial& a, const Monomial& b) const { return mono_gcd(a, b, weights_); }

  bool same_signature(const PolyRing<K>& o) const {
    return vars_ == o.vars_ && weights_ == o.weights_ && order_ == o.order_ && field_ == o.field_;
  }

  // Ring with one auxiliary variable prepended as an elimination block,
  // used by the intersection/colon elimination tricks.
  Ptr with_elimination_aux() const {
    std::vector<std::string> vars;
    vars.reserve(nvars() + 1);
    vars.push_back("@t");
    for (const auto& v : vars_) vars.push_back(v);
    std::vector<int> w;
    w.reserve(nvars() + 1);
    w.push_back(1);
    for (int x : weights_) w.push_back(x);
    OrderSpec o = order_;
    o.elim_block = 1;
    return Ptr(new PolyRing<K>(std::move(vars), field_, std::move(w), o));
  }

  std::string mono_str(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (m.exp(i) == 0) continue;
      if (!first) s += "*";
      first = false;
      s += vars_[i];
      if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
    }
    return s;
  }

 private:
  PolyRing(std::vector<std::string> vars, FieldCtx<K> field, std::vector<int> weights,
           OrderSpec order)
      : vars_(std::move(vars)),
        weights_(std::move(weights)),
        order_(order),
        field_(std::move(field)) {}

  std::vector<std::string> vars_;
  std::vector<int> weights_;
  OrderSpec order_;
  FieldCtx<K> field_;
};

}  // namespace gorlab

#endif

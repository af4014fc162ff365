#ifndef GORLAB_POLYNOMIAL_HPP
#define GORLAB_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorlab/ring.hpp"

namespace gorlab {

// Sparse multivariate polynomial: terms sorted strictly decreasing in the
// ring's term order, no zero coefficients stored.
template <class K>
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    K coeff;
  };

  Polynomial() = default;
  explicit Polynomial(typename PolyRing<K>::Ptr ring) : ring_(std::move(ring)) {}
  Polynomial(typename PolyRing<K>::Ptr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  static Polynomial zero(typename PolyRing<K>::Ptr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(typename PolyRing<K>::Ptr ring, K c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({ring->mono_one(), std::move(c)});
    return p;
  }

  static Polynomial monomial(typename PolyRing<K>::Ptr ring, Monomial m, K c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  static Polynomial variable(typename PolyRing<K>::Ptr ring, std::size_t i) {
    auto m = ring->mono_var(i);
    K one = ring->scalar_one();
    return monomial(std::move(ring), std::move(m), std::move(one));
  }

  const typename PolyRing<K>::Ptr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const K& leading_coeff() const { return terms_.front().coeff; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  // Coefficient of the constant monomial (zero scalar if absent).
  K constant_term() const {
    for (const auto& t : terms_)
      if (t.mono.is_one()) return t.coeff;
    return ring_->scalar_zero();
  }

  long degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = terms_[0].mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return false;
    return true;
  }

  // Least exponent-sum over terms: the m-adic order (0 for units, -1 for 0).
  long order_at_origin() const {
    if (terms_.empty()) return -1;
    long o = terms_[0].mono.total_exp();
    for (const auto& t : terms_) o = std::min(o, t.mono.total_exp());
    return o;
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial acc(ring_);
    for (const auto& t : o.terms_) acc = acc + this->times_term(t.mono, t.coeff);
    return acc;
  }

  Polynomial times_term(const Monomial& m, const K& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      K nc = t.coeff * c;
      if (!nc.is_zero()) r.terms_.push_back({t.mono * m, std::move(nc)});
    }
    return r;
  }

  Polynomial scaled(const K& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inv());
  }

  Polynomial pow(int e) const {
    if (e < 0) throw InputError("negative exponent");
    Polynomial r = constant(ring_, ring_->scalar_one());
    Polynomial base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!terms_[i].mono.same_exponents(o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Canonical rendering: terms in storage order, "-" folded into separators.
  // Integer-coefficient polynomials round-trip through the input grammar.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = t.coeff.str();
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      if (first) {
        if (neg) s += "-";
        first = false;
      } else {
        s += neg ? " - " : " + ";
      }
      if (t.mono.is_one()) {
        s += c;
      } else if (c == "1") {
        s += ring_->mono_str(t.mono);
      } else {
        s += c + "*" + ring_->mono_str(t.mono);
      }
    }
    return s;
  }

  void check_ring(const Polynomial& o) const {
    if (ring_.get() == o.ring_.get()) return;
    if (!ring_ || !o.ring_ || !ring_->same_signature(*o.ring_))
      throw InputError("polynomials from different rings");
  }

 private:
  Polynomial merged(const Polynomial& o, bool subtract) const {
    check_ring(o);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = ring_->cmp(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        K nc = subtract ? terms_[i].coeff - o.terms_[j].coeff : terms_[i].coeff + o.terms_[j].coeff;
        if (!nc.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(nc)});
        ++i, ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) {
      const auto& t = o.terms_[j];
      r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
    }
    return r;
  }

  typename PolyRing<K>::Ptr ring_;
  std::vector<Term> terms_;
};

// --- Grammar parser -------------------------------------------------------
//
//   integer ::= [0-9]+
//   atom    ::= integer | var | "(" expr ")"
//   power   ::= atom ["^" integer]
//   term    ::= power {"*" power}
//   expr    ::= ["-"] term {("+"|"-") term}
//
// No implicit multiplication; variables are the declared names.

template <class K>
class PolyParser {
 public:
  PolyParser(typename PolyRing<K>::Ptr ring, std::string text)
      : ring_(std::move(ring)), text_(std::move(text)) {}

  Polynomial<K> parse() {
    skip_ws();
    Polynomial<K> p = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      if (text_[pos_] == '/') fail("division is not part of the polynomial grammar");
      fail("unexpected trailing input");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek_is(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Polynomial<K> expr() {
    bool neg = false;
    if (peek_is('-')) {
      ++pos_;
      neg = true;
    }
    Polynomial<K> acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (peek_is('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek_is('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<K> term() {
    Polynomial<K> acc = power();
    while (peek_is('*')) {
      ++pos_;
      acc = acc * power();
    }
    return acc;
  }

  Polynomial<K> power() {
    Polynomial<K> base = atom();
    if (peek_is('^')) {
      ++pos_;
      long e = integer_literal_small();
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  Polynomial<K> atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '/') fail("division is not part of the polynomial grammar");
    if (c == '(') {
      ++pos_;
      Polynomial<K> p = expr();
      expect(')');
      return p;
    }
    if (c >= '0' && c <= '9') {
      std::string digits;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
        digits += text_[pos_++];
      return Polynomial<K>::constant(ring_, ring_->field().from_decimal(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      int idx = ring_->var_index(name);
      if (idx < 0) throw InputError("unknown variable '" + name + "' at position " +
                                    std::to_string(pos_ - name.size()));
      return Polynomial<K>::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  long integer_literal_small() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
      fail("expected integer exponent");
    long v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000000) fail("exponent too large");
    }
    return v;
  }

  typename PolyRing<K>::Ptr ring_;
  std::string text_;
  std::size_t pos_ = 0;
};

template <class K>
Polynomial<K> parse_polynomial(const typename PolyRing<K>::Ptr& ring, const std::string& text) {
  return PolyParser<K>(ring, text).parse();
}

// Re-embed a polynomial into a structurally extended/shrunk ring by mapping
// variable indices through `index_map` (index in source -> index in target).
template <class K>
Polynomial<K> map_variables(const Polynomial<K>& f, const typename PolyRing<K>::Ptr& target,
                            const std::vector<int>& index_map) {
  std::vector<typename Polynomial<K>::Term> acc;
  for (const auto& t : f.terms()) {
    std::vector<int> e(target->nvars(), 0);
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      if (t.mono.exp(i) != 0) e[index_map[i]] = t.mono.exp(i);
    }
    acc.push_back({target->mono(std::move(e)), t.coeff});
  }
  std::sort(acc.begin(), acc.end(), [&](const auto& a, const auto& b) {
    return target->cmp(a.mono, b.mono) > 0;
  });
  return Polynomial<K>(target, std::move(acc));
}

}  // namespace gorlab

#endif

#ifndef GORLAB_TESTS_TEST_RINGS_HPP
#define GORLAB_TESTS_TEST_RINGS_HPP

// Shared corpus of small graded rings used across the test suites.

#include <string>
#include <vector>

#include "gorlab/algebra.hpp"

namespace testring {

using Q = gorlab::Rational;
using P = gorlab::Polynomial<Q>;
using RingPtr = gorlab::PolyRing<Q>::Ptr;
using Algebra = gorlab::GradedAlgebra<Q>;

inline RingPtr ring_xy() { return gorlab::PolyRing<Q>::create({"x", "y"}, {}); }
inline RingPtr ring_x() { return gorlab::PolyRing<Q>::create({"x"}, {}); }

inline P pp(const RingPtr& R, const std::string& s) { return gorlab::parse_polynomial<Q>(R, s); }

inline std::vector<P> polys(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<P> out;
  for (const auto& s : gens) out.push_back(pp(R, s));
  return out;
}

inline Algebra algebra(const RingPtr& R, const std::vector<std::string>& gens) {
  return Algebra::create(R, polys(R, gens));
}

// The paper's counterexample: non-CM with an irreducible parameter ideal (y).
inline Algebra r1() { return algebra(ring_xy(), {"x^2", "x*y"}); }
// Gorenstein of dimension 1.
inline Algebra r2() { return algebra(ring_xy(), {"x^2"}); }
// Artinian Gorenstein (socle dim 1).
inline Algebra r3() { return algebra(ring_xy(), {"x^2", "y^2"}); }
// Artinian, type 2, not Gorenstein.
inline Algebra r4() { return algebra(ring_xy(), {"x^2", "x*y", "y^2"}); }
// Regular rings.
inline Algebra qxy() { return algebra(ring_xy(), {}); }
inline Algebra qx() { return algebra(ring_x(), {}); }

inline gorlab::ParameterSequence<Q> seq(const RingPtr& R, const std::vector<std::string>& elems) {
  std::vector<P> v;
  for (const auto& s : elems) v.push_back(pp(R, s));
  return gorlab::ParameterSequence<Q>::of(std::move(v));
}

}  // namespace testring

#endif

#include "doctest.h"
#include "gorlab/koszul.hpp"
#include "oracle/brute.hpp"
#include "test_rings.hpp"

using namespace gorlab;
using namespace testring;

namespace {
GradedRingViewPtr<Q> view_of(const Algebra& A) { return std::make_shared<GradedRingView<Q>>(A); }
}  // namespace

TEST_CASE("koszul complexes") {
  SUBCASE("one element: 0 -> R -> R -> 0 with multiplication by x") {
    auto A = qxy();
    auto C = koszul_complex(view_of(A), seq(A.ring(), {"x"}));
    REQUIRE(C.length() == 2);
    CHECK(C.term(0).rank() == 1);
    CHECK(C.term(1).rank() == 1);
    CHECK(C.term(1).shifts[0] == 1);
    CHECK(C.diff(0)[0][0] == pp(A.ring(), "x"));
  }
  SUBCASE("two elements: ranks 1, 2, 1 and d∘d = 0") {
    auto A = qxy();
    auto C = koszul_complex(view_of(A), seq(A.ring(), {"x", "y"}));
    REQUIRE(C.length() == 3);
    CHECK(C.term(0).rank() == 1);
    CHECK(C.term(1).rank() == 2);
    CHECK(C.term(2).rank() == 1);
    C.validate();  // throws on failure
  }
  SUBCASE("empty sequence: a single rank-1 term") {
    auto A = r3();
    auto C = koszul_complex(view_of(A), ParameterSequence<Q>{});
    REQUIRE(C.length() == 1);
    CHECK(C.term(0).rank() == 1);
  }
  SUBCASE("non-homogeneous elements rejected") {
    auto A = qxy();
    CHECK_THROWS_AS(koszul_complex(view_of(A), seq(A.ring(), {"x + x^2"})), InputError);
  }
}

TEST_CASE("koszul connecting maps") {
  auto A = qxy();
  auto view = view_of(A);
  SUBCASE("one element, s=1, t=2: degree-1 component is multiplication by x") {
    auto s1 = seq(A.ring(), {"x"});
    auto K2 = koszul_complex(view, s1.powered(2));
    auto K1 = koszul_complex(view, s1.powered(1));
    auto phi = koszul_connecting_map(K2, K1, s1, 1, 2);
    CHECK(phi.comp(1)[0][0] == pp(A.ring(), "x"));
    CHECK(phi.comp(0)[0][0] == pp(A.ring(), "1"));
  }
  SUBCASE("s = t is the identity") {
    auto s2 = seq(A.ring(), {"x", "y"});
    auto K1 = koszul_complex(view, s2);
    auto phi = koszul_connecting_map(K1, K1, s2, 1, 1);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < phi.comp(k).size(); ++i)
        for (std::size_t j = 0; j < phi.comp(k)[i].size(); ++j)
          CHECK(phi.comp(k)[i][j] == (i == j ? pp(A.ring(), "1") : P::zero(A.ring())));
  }
  SUBCASE("composition law phi^3_1 = phi^2_1 ∘ phi^3_2") {
    auto s2 = seq(A.ring(), {"x", "y"});
    auto K3 = koszul_complex(view, s2.powered(3));
    auto K2 = koszul_complex(view, s2.powered(2));
    auto K1 = koszul_complex(view, s2.powered(1));
    auto phi31 = koszul_connecting_map(K3, K1, s2, 1, 3);
    auto phi32 = koszul_connecting_map(K3, K2, s2, 2, 3);
    auto phi21 = koszul_connecting_map(K2, K1, s2, 1, 2);
    auto composed = phi21.composed_after(phi32);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < phi31.comp(k).size(); ++i)
        for (std::size_t j = 0; j < phi31.comp(k)[i].size(); ++j)
          CHECK((phi31.comp(k)[i][j] - composed.comp(k)[i][j]).is_zero());
  }
  SUBCASE("s > t rejected") {
    auto s1 = seq(A.ring(), {"x"});
    auto K1 = koszul_complex(view, s1);
    CHECK_THROWS_AS(koszul_connecting_map(K1, K1, s1, 2, 1), InputError);
  }
}

TEST_CASE("koszul cohomology") {
  SUBCASE("H^1(y; R1) has dimension 2 — the classes of 1 and x in R1/(y)") {
    auto A = r1();
    auto H = koszul_cohomology(A, seq(A.ring(), {"y"}), 1);
    CHECK(H.total_dim() == 2);
    // oracle: coker(y : R1 -> R1) = R1/(y)
    oracle::MonTable table(A.ring(), 8);
    auto info = oracle::cokernel_info(table, A.ideal().generators(), pp(A.ring(), "y"));
    CHECK(info.total == 2);
  }
  SUBCASE("H^0(y; R1) = (0 : y) has dimension 1") {
    auto A = r1();
    auto H = koszul_cohomology(A, seq(A.ring(), {"y"}), 0);
    CHECK(H.total_dim() == 1);
    oracle::MonTable table(A.ring(), 8);
    CHECK(oracle::mult_kernel_dim(table, A.ideal().generators(), pp(A.ring(), "y")) == 1);
  }
  SUBCASE("regular sequence: H^i(x,y; Q[x,y]) vanishes below the top") {
    auto A = qxy();
    auto s2 = seq(A.ring(), {"x", "y"});
    CHECK(koszul_cohomology(A, s2, 0).total_dim() == 0);
    CHECK(koszul_cohomology(A, s2, 1).total_dim() == 0);
    CHECK(koszul_cohomology(A, s2, 2).total_dim() == 1);
  }
  SUBCASE("H^r matches the quotient R/(x), H^0 matches the annihilator") {
    auto A = r2();
    auto s1 = seq(A.ring(), {"y"});
    auto H1 = koszul_cohomology(A, s1, 1);
    auto qb = quotient_basis(A.ideal().plus(polys(A.ring(), {"y"})));
    REQUIRE(qb.has_value());
    CHECK(H1.total_dim() == static_cast<long>(qb->dim()));
    CHECK(koszul_cohomology(A, s1, 0).total_dim() == 0);  // y is a non-zero-divisor
    oracle::MonTable table(A.ring(), 8);
    CHECK(oracle::is_nzd_bounded(table, A.ideal().generators(), pp(A.ring(), "y")));
  }
  SUBCASE("H^r graded dimensions equal those of R/(x) through the shift") {
    for (auto A : {r1(), r2(), qxy()}) {
      auto sop = random_homogeneous_sop(A, 1, 77);
      long shift = 0;
      for (const auto& f : sop.elements) shift += f.degree();
      auto H = koszul_cohomology(A, sop, sop.size());
      auto qb = quotient_basis(A.ideal().plus(sop.elements));
      REQUIRE(qb.has_value());
      for (long e = -shift; e <= H.hi; ++e) {
        long expected = 0;
        for (const auto& m : qb->monomials())
          if (m.degree() == e + shift) ++expected;
        CHECK(H.dim(e) == expected);
      }
    }
  }
}

TEST_CASE("graded module socles") {
  SUBCASE("Soc H^1(y; R1) is one-dimensional") {
    auto A = r1();
    auto H = koszul_cohomology(A, seq(A.ring(), {"y"}), 1);
    CHECK(socle(H).dim == 1);
  }
  SUBCASE("Soc H^2(x,y; Q[x,y]) is one-dimensional") {
    auto A = qxy();
    auto H = koszul_cohomology(A, seq(A.ring(), {"x", "y"}), 2);
    CHECK(socle(H).dim == 1);
  }
  SUBCASE("Soc H^0(empty; R3) = Soc R3 is one-dimensional (class of xy)") {
    auto A = r3();
    auto H = koszul_cohomology(A, ParameterSequence<Q>{}, 0);
    CHECK(H.total_dim() == 4);
    CHECK(socle(H).dim == 1);
  }
  SUBCASE("Soc H^0(empty; R4) has dimension 2") {
    auto A = r4();
    auto H = koszul_cohomology(A, ParameterSequence<Q>{}, 0);
    CHECK(socle(H).dim == 2);
  }
}

TEST_CASE("local cohomology socle dimensions via the Koszul system") {
  SUBCASE("R1: (dim Soc H^0, dim Soc H^1) = (1, 1), oracle-checked") {
    auto A = r1();
    auto sop = seq(A.ring(), {"y"});
    auto rec0 = local_cohomology_socles(A, sop, 0);
    auto rec1 = local_cohomology_socles(A, sop, 1);
    CHECK(rec0.limit_socle_dim == 1);
    CHECK(rec1.limit_socle_dim == 1);
    CHECK(rec0.stabilized);
    CHECK(rec1.stabilized);
    oracle::MonTable table(A.ring(), 8);
    CHECK(oracle::h0_socle_dim(table, A.ideal().generators()) == 1);
    CHECK(oracle::top_locoho_socle_dim(table, A.ideal().generators(),
                                       polys(A.ring(), {"y"}), 5) == 1);
  }
  SUBCASE("Q[x,y]: Soc H^2 = 1, H^0 = H^1 = 0, oracle-checked") {
    auto A = qxy();
    auto sop = seq(A.ring(), {"x", "y"});
    CHECK(local_cohomology_socles(A, sop, 0).limit_socle_dim == 0);
    CHECK(local_cohomology_socles(A, sop, 1).limit_socle_dim == 0);
    CHECK(local_cohomology_socles(A, sop, 2).limit_socle_dim == 1);
    oracle::MonTable table(A.ring(), 10);
    CHECK(oracle::top_locoho_socle_dim(table, {}, polys(A.ring(), {"x", "y"}), 4) == 1);
  }
  SUBCASE("R3 (artinian): Soc H^0 = Soc R3 = 1") {
    auto A = r3();
    auto rec = local_cohomology_socles(A, ParameterSequence<Q>{}, 0);
    CHECK(rec.limit_socle_dim == 1);
  }
  SUBCASE("non-sop rejected") {
    auto A = r1();
    CHECK_THROWS_AS(local_cohomology_socles(A, seq(A.ring(), {"x"}), 0), InputError);
  }
}

TEST_CASE("depth via Koszul vanishing") {
  CHECK(depth(r1()) == 0);
  CHECK(depth(qxy()) == 2);
  CHECK(depth(r2()) == 1);
  CHECK(depth(r3()) == 0);
  CHECK(depth(qx()) == 1);
  SUBCASE("oracle: regular ring has a regular sequence of full length") {
    auto A = qxy();
    oracle::MonTable table(A.ring(), 8);
    CHECK(oracle::is_nzd_bounded(table, {}, pp(A.ring(), "x")));
    CHECK(oracle::is_nzd_bounded(table, polys(A.ring(), {"x"}), pp(A.ring(), "y")));
  }
}

TEST_CASE("phi kernels: limit-closure route vs direct-limit route") {
  SUBCASE("regular sequence: injective at every power") {
    auto A = qxy();
    auto r = phi_kernel(A, seq(A.ring(), {"x", "y"}), 1);
    CHECK(r.dim == 0);
  }
  SUBCASE("R1, (y), t = 1: kernel (x,y)/(y) is one-dimensional") {
    auto A = r1();
    auto r = phi_kernel(A, seq(A.ring(), {"y"}), 1);
    CHECK(r.dim == 1);
    CHECK(r.via_limit_closure == r.via_direct_limit);
  }
  SUBCASE("R1, (y), t = 3: kernel (x,y^3)/(y^3) is one-dimensional") {
    auto A = r1();
    auto r = phi_kernel(A, seq(A.ring(), {"y"}), 3);
    CHECK(r.dim == 1);
  }
  SUBCASE("Cor 2.4 equivalence spot check: zero at t=1 iff zero at t=2, 3") {
    auto A2 = r2();
    for (int t : {1, 2, 3}) CHECK(phi_kernel(A2, seq(A2.ring(), {"y"}), t).dim == 0);
    auto A1 = r1();
    for (int t : {1, 2, 3}) CHECK(phi_kernel(A1, seq(A1.ring(), {"y"}), t).dim > 0);
  }
}

TEST_CASE("phi kernels grow when torsion dies slowly (three variables)") {
  // Over R = Q[x,y,z]/(x^2, xy) with a generic linear sop, x-multiples die
  // only after roughly t further steps, so ker phi_t grows with t; both
  // routes must still agree.
  auto R = gorlab::PolyRing<Q>::create({"x", "y", "z"}, {});
  auto A = Algebra::create(R, polys(R, {"x^2", "x*y"}));
  auto sop = seq(R, {"y", "z"});
  auto r1 = phi_kernel(A, sop, 1);
  CHECK(r1.dim == 1);
  CHECK(r1.via_limit_closure == r1.via_direct_limit);
}

TEST_CASE("koszul system agrees with hand values on the three-variable ring") {
  auto R = gorlab::PolyRing<Q>::create({"x", "y", "z"}, {});
  auto A = Algebra::create(R, polys(R, {"x^2", "x*y"}));
  auto sop = seq(R, {"y", "z"});
  CHECK(local_cohomology_socles(A, sop, 0).limit_socle_dim == 0);
  CHECK(local_cohomology_socles(A, sop, 1).limit_socle_dim == 1);
  CHECK(local_cohomology_socles(A, sop, 2).limit_socle_dim == 1);
  CHECK(depth(A) == 1);
}

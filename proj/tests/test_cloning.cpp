#include <doctest.h>

#include <numbers>

#include "qdis/channels.hpp"
#include "qdis/cloning.hpp"
#include "qdis/separability.hpp"
#include "qdis/states.hpp"

using namespace qdis;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(10, 30) == Rational(1, 3));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).num == -1);
  CHECK(Rational(2, -4).den == 2);
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) <= Rational(1, 3));
  CHECK(Rational(25, 81) < Rational(1, 3));
  CHECK_FALSE(Rational(4, 9) <= Rational(1, 3));
  CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("per-step reduction factors") {
  CHECK(clone_eta(CloningMode::local_symmetric, 1) == Rational(1, 1));
  CHECK(clone_eta(CloningMode::local_symmetric, 2) == Rational(2, 3));
  CHECK(clone_eta(CloningMode::local_symmetric, 3) == Rational(5, 9));
  CHECK(clone_eta(CloningMode::local_single, 3) == Rational(5, 9));
  CHECK(clone_eta(CloningMode::nonlocal, 1) == Rational(1, 1));
  CHECK(clone_eta(CloningMode::nonlocal, 2) == Rational(3, 5));
  CHECK(clone_eta(CloningMode::nonlocal, 6) == Rational(1, 3));
  CHECK_THROWS_AS(clone_eta(CloningMode::nonlocal, 0), InvalidM);
  CHECK_THROWS_AS(clone_eta(CloningMode::local_single, -2), InvalidM);
}

TEST_CASE("net shrink against the 1/3 threshold") {
  const Rational third(1, 3);
  SUBCASE("cloning both qubits squares the factor") {
    CHECK(net_shrink(CloningMode::local_symmetric, 2) == Rational(4, 9));
    CHECK_FALSE(net_shrink(CloningMode::local_symmetric, 2) <= third);
    CHECK(net_shrink(CloningMode::local_symmetric, 3) == Rational(25, 81));
    CHECK(net_shrink(CloningMode::local_symmetric, 3) <= third);
  }
  SUBCASE("cloning one qubit never reaches the threshold") {
    for (long long m = 1; m <= 1000; m *= 10) {
      CHECK(net_shrink(CloningMode::local_single, m) ==
            clone_eta(CloningMode::local_single, m));
      CHECK(third < net_shrink(CloningMode::local_single, m));
    }
  }
  SUBCASE("a pair cloner reaches the threshold exactly at six copies") {
    CHECK_FALSE(net_shrink(CloningMode::nonlocal, 5) <= third);
    CHECK(net_shrink(CloningMode::nonlocal, 5) == Rational(9, 25));
    CHECK(net_shrink(CloningMode::nonlocal, 6) == third);
  }
}

TEST_CASE("minimum copy counts") {
  const MinCopies local = min_copies(CloningMode::local_symmetric);
  REQUIRE(local.copies.has_value());
  CHECK(*local.copies == 3);
  CHECK(local.infimum == Rational(1, 9));

  const MinCopies pair = min_copies(CloningMode::nonlocal);
  REQUIRE(pair.copies.has_value());
  CHECK(*pair.copies == 6);
  CHECK(pair.infimum == Rational(1, 5));

  const MinCopies single = min_copies(CloningMode::local_single);
  CHECK_FALSE(single.copies.has_value());
  CHECK(single.infimum == Rational(1, 3));
}

TEST_CASE("cloning factors drive the isotropic channel as promised") {
  // Three copies per side: per-qubit factor 5/9, product 25/81 <= 1/3,
  // so even a Bell state comes out separable. Two copies (2/3 each,
  // product 4/9) leave it entangled.
  const TwoQubitState bell =
      make_state(StateSpec::schmidt(std::numbers::pi / 4));
  const double eta3 = clone_eta(CloningMode::local_symmetric, 3).to_double();
  const double eta2 = clone_eta(CloningMode::local_symmetric, 2).to_double();

  const TwoQubitState after3 =
      apply_local(bell, isotropic_kraus(eta3), isotropic_kraus(eta3));
  CHECK(ppt_verdict(after3).verdict == Verdict::separable);

  const TwoQubitState after2 =
      apply_local(bell, isotropic_kraus(eta2), isotropic_kraus(eta2));
  CHECK(ppt_verdict(after2).verdict == Verdict::entangled);
}

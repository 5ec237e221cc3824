#include <doctest.h>

#include <random>

#include "wf/foamcalc.hpp"

using namespace wf;

TEST_CASE("projective-plane calibration rows") {
  CHECK(dirac_index_bifold(4, 1, 4, 4) == Rat(2));
  CHECK(dirac_index_bifold(1, 1, 4, 16) == Rat(2));
}

TEST_CASE("b_plus of a genus-g real branch surface with trivial normal "
          "bundle is g") {
  for (int g = 0; g <= 10; ++g) CHECK(b_plus(Rat(2 * g), Rat(0)) == Rat(g));
}

TEST_CASE("admissibility flips exactly above b_plus = 1") {
  CHECK(!admissible_foam(2, 0));               // b+ = 1: not admissible
  CHECK(!admissible_foam(0, 0));               // b+ = 0
  CHECK(admissible_foam(Rat(9, 2), Rat(0)));   // b+ = 9/4 > 1
  CHECK(admissible_foam(4, 0));                // b+ = 2
  CHECK(!admissible_foam(4, 4));               // b+ = 1 again
  CHECK(admissible_foam(4, -1));               // b+ = 9/4
}

TEST_CASE("moduli dimension decomposes as b_plus plus half the index") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-12, 12);
  for (int trial = 0; trial < 200; ++trial) {
    FoamIndexInput in;
    in.b1_r = Rat(num(rng), 2);
    in.self_int_r = Rat(num(rng));
    in.c1_sq = Rat(num(rng));
    in.sigma = Rat(num(rng));
    in.c1_dot_c = Rat(num(rng));
    in.c_self_int = Rat(num(rng));
    Rat dim = moduli_dimension(in).value;
    Rat index =
        dirac_index_bifold(in.c1_sq, in.sigma, in.c1_dot_c, in.c_self_int);
    CHECK(dim == b_plus(in.b1_r, in.self_int_r) + index / 2);
  }
}

TEST_CASE("non-integer dimensions are flagged, never rounded") {
  FoamIndexInput in;
  in.c_self_int = 1;  // contributes 1/32
  DimensionResult r = moduli_dimension(in);
  CHECK(r.value == Rat(1, 32));
  bool warned = false;
  for (const auto& n : r.notes) warned = warned || n.find("non-integer") != std::string::npos;
  CHECK(warned);
}

TEST_CASE("orientability assumption is always surfaced") {
  DimensionResult r = moduli_dimension({});
  REQUIRE(!r.notes.empty());
  CHECK(r.notes[0].find("orientability") != std::string::npos);
}

TEST_CASE("self-intersection is half the relative Euler number") {
  CHECK(self_intersection(4) == Rat(2));
  CHECK(self_intersection(-3) == Rat(-3, 2));
}

TEST_CASE("adjunction degree and the spin-c filter") {
  CHECK(adjunction_degree(0, 0) == Rat(-2));
  CHECK(adjunction_degree(2, 3) == Rat(7, 2));
  CHECK(spinc_passes_filter(Rat(7, 2), 2, 3));
  CHECK(!spinc_passes_filter(Rat(3), 2, 3));
}

TEST_CASE("orbifold Picard membership") {
  CHECK(surface_picard_member(Rat(3, 2), {1, 0, 1, 1}));
  CHECK(!surface_picard_member(Rat(1), {1, 0, 0}));
  CHECK(surface_picard_member(Rat(2), {0, 0}));
  CHECK_THROWS_AS(surface_picard_member(Rat(1, 3), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(surface_picard_member(Rat(1), {2}), std::invalid_argument);
}

TEST_CASE("vortex moduli dichotomy") {
  CHECK(vortex_moduli(3, 4, 2).kind == VortexModuli::Kind::Empty);
  VortexModuli below = vortex_moduli(1, 4, 2);
  CHECK(below.kind == VortexModuli::Kind::SymmetricProduct);
  CHECK(below.e == 2);
  CHECK(vortex_moduli(2, 4, 2).kind == VortexModuli::Kind::Borderline);
}

TEST_CASE("canonical rational rendering") {
  CHECK(rat_str(Rat(2)) == "2");
  CHECK(rat_str(Rat(-7, 2)) == "-7/2");
  CHECK(rat_str(Rat(4, 2)) == "2");
}

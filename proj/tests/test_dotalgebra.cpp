#include <doctest.h>

#include <array>
#include <bit>
#include <random>
#include <set>
#include <vector>

#include "wf/dotalgebra.hpp"
#include "wf/families.hpp"
#include "wf/onesets.hpp"

using namespace wf;

namespace {

// Independent oracle: monomials as explicit exponent vectors, reduced by
// repeatedly rewriting u_i^2 -> U. No bitmask tricks, no sharing with the
// production normal form.
struct OracleMono {
  std::array<int, 4> e{};  // exponents of u_0..u_3
  int u = 0;               // exponent of U
  auto operator<=>(const OracleMono&) const = default;
};

OracleMono reduce(OracleMono m) {
  for (int i = 0; i < 4; ++i)
    while (m.e[i] >= 2) {
      m.e[i] -= 2;
      m.u += 1;
    }
  return m;
}

using OracleElt = std::set<OracleMono>;  // characteristic-2 sum

OracleElt oracle_mul(const OracleElt& a, const OracleElt& b) {
  OracleElt out;
  for (const auto& x : a)
    for (const auto& y : b) {
      OracleMono m;
      for (int i = 0; i < 4; ++i) m.e[i] = x.e[i] + y.e[i];
      m.u = x.u + y.u;
      m = reduce(m);
      if (out.count(m)) out.erase(m);
      else out.insert(m);
    }
  return out;
}

OracleElt to_oracle(const AlgebraElement& a) {
  OracleElt out;
  for (const auto& t : a.terms()) {
    OracleMono m;
    m.u = t.u_power;
    for (int i = 0; i < 4; ++i) m.e[i] = (t.cycles >> i) & 1;
    out.insert(m);
  }
  return out;
}

AlgebraElement from_mono(int n, int u_power, std::uint32_t cycles) {
  AlgebraElement a(n);
  a.add_term({u_power, cycles});
  return a;
}

// All normal-form monomials in <= 4 generators of degree >= -6.
std::vector<AlgebraElement::Monomial> small_monomials() {
  std::vector<AlgebraElement::Monomial> out;
  for (int u = 0; u * 2 <= 6; ++u)
    for (std::uint32_t mask = 0; mask < 16; ++mask)
      if (2 * u + std::popcount(mask) <= 6) out.push_back({u, mask});
  return out;
}

}  // namespace

TEST_CASE("normal-form multiplication agrees with the rewriting oracle on "
          "all small monomial pairs") {
  auto monos = small_monomials();
  for (const auto& a : monos)
    for (const auto& b : monos) {
      AlgebraElement ea = from_mono(4, a.u_power, a.cycles);
      AlgebraElement eb = from_mono(4, b.u_power, b.cycles);
      CHECK(to_oracle(ea * eb) == oracle_mul(to_oracle(ea), to_oracle(eb)));
    }
}

TEST_CASE("oracle agreement on random multi-term elements") {
  std::mt19937_64 rng(11);
  auto monos = small_monomials();
  std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    AlgebraElement a(4), b(4);
    for (int i = 0; i < 3; ++i) {
      a.add_term(monos[pick(rng)]);
      b.add_term(monos[pick(rng)]);
    }
    CHECK(to_oracle(a * b) == oracle_mul(to_oracle(a), to_oracle(b)));
  }
}

TEST_CASE("generators square to U") {
  for (int i = 0; i < 4; ++i) {
    AlgebraElement u = AlgebraElement::generator(4, i);
    CHECK(u * u == AlgebraElement::big_u(4));
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(13);
  auto monos = small_monomials();
  std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    AlgebraElement a(4), b(4), c(4);
    for (int i = 0; i < 2; ++i) {
      a.add_term(monos[pick(rng)]);
      b.add_term(monos[pick(rng)]);
      c.add_term(monos[pick(rng)]);
    }
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + a == AlgebraElement::zero(4));
  }
}

TEST_CASE("degrees: generators -1, U -2, multiplication additive") {
  CHECK(AlgebraElement::generator(2, 0).degree() == -1);
  CHECK(AlgebraElement::big_u(2).degree() == -2);
  CHECK(AlgebraElement::one(2).degree() == 0);
  AlgebraElement m = from_mono(4, 2, 0b101);  // U^2 u0 u2
  CHECK(m.degree() == -6);
  AlgebraElement g = AlgebraElement::generator(4, 1);
  CHECK((m * g).degree() == m.degree() + g.degree());
  AlgebraElement mixed = m + g;
  CHECK(!mixed.homogeneous());
  CHECK_THROWS_AS(mixed.degree(), std::logic_error);
  CHECK_THROWS_AS(AlgebraElement::zero(4).degree(), std::logic_error);
}

TEST_CASE("dot operators: c edges give zero, one generator per r-cycle") {
  WebGraph w = make_theta();
  OneSet s = enumerate_onesets(w)[0];  // c = e1
  CHECK(dot_generator(w, s, "e1").is_zero());
  CHECK(dot_generator(w, s, "e2") == dot_generator(w, s, "e3"));
  CHECK(!dot_generator(w, s, "e2").is_zero());
  CHECK_THROWS(dot_generator(w, s, "ghost"));
}

TEST_CASE("the three vertex relations hold over the whole example corpus") {
  for (const WebGraph& w :
       {make_theta(), make_theta_plus_unknot(), make_tetrahedron(),
        make_prism(2), make_prism(3), make_prism(4), make_unlink(3),
        make_petersen()})
    for (const OneSet& s : enumerate_onesets(w)) {
      VertexRelationReport rep = verify_vertex_relations(w, s);
      CHECK(rep.ok());
      CHECK(rep.failures.empty());
    }
}

TEST_CASE("rank over the U-subring is 2^n") {
  for (const WebGraph& w : {make_theta(), make_tetrahedron(), make_prism(3)})
    for (const OneSet& s : enumerate_onesets(w))
      CHECK(rank_over_U(w, s) == 1LL << r_cycles(w, s).n());
}

TEST_CASE("string rendering names U powers and generators") {
  CHECK(AlgebraElement::zero(2).str() == "0");
  CHECK(AlgebraElement::big_u(2).str() == "U");
  AlgebraElement m = from_mono(3, 1, 0b100);
  CHECK(m.str().find("U") != std::string::npos);
  CHECK(m.str().find("u2") != std::string::npos);
}

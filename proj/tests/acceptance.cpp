// Acceptance gate: eight criteria, one pass/fail line each. Exit status 0
// only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "wf/catalogue.hpp"
#include "wf/dotalgebra.hpp"
#include "wf/families.hpp"
#include "wf/floerblocks.hpp"
#include "wf/foamcalc.hpp"
#include "wf/onesets.hpp"
#include "wf/tait.hpp"

using namespace wf;

namespace {

int failures = 0;

void report(const char* name, bool ok, double seconds) {
  std::printf("%-38s %s  (%.2fs)\n", name, ok ? "pass" : "FAIL", seconds);
  if (!ok) ++failures;
}

template <typename F>
void criterion(const char* name, F body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (...) {
    ok = false;
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  report(name, ok, dt);
}

// --- helpers shared with the unit suite -------------------------------

BlockComplex circle_pattern(int g, int depth) {
  std::vector<int> gs, gu;
  for (int i = 0; i < depth; ++i) gs.push_back(g + i);
  for (int i = -depth; i < 0; ++i) gu.push_back(g + i);
  return BlockComplex::zero({}, gs, gu);
}

GF2Matrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  GF2Matrix m(rows, cols);
  std::bernoulli_distribution bit(0.3);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (bit(rng)) m.set(i, j, true);
  return m;
}

BlockComplex synthesize(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2), size(1, 12);
  int no = size(rng), ns = size(rng), nu = size(rng);
  std::vector<int> go(no, 0), gs(ns, 0), gu(nu, 0);
  BlockComplex bc = BlockComplex::zero(go, gs, gu);
  switch (kind(rng)) {
    case 0:
      break;
    case 1:
      bc.d_os = random_matrix(ns, no, rng);
      bc.d_uo = random_matrix(no, nu, rng);
      bc.d_us = random_matrix(ns, nu, rng);
      bc.bar_us = bc.d_os * bc.d_uo;
      break;
    case 2:
      bc.bar_su = random_matrix(nu, ns, rng);
      break;
  }
  return bc;
}

OneSet rung_oneset(const WebGraph& w) {
  for (const OneSet& s : enumerate_onesets(w))
    if (classify_oneset(w, s) == OneSetType::RungMatching) return s;
  throw std::runtime_error("no rung-matching 1-set");
}

}  // namespace

int main() {
  criterion("1 colouring counts", [] {
    bool ok = count_tait(make_theta()) == 6;
    ok = ok && count_tait(make_prism(3)) == 6;
    ok = ok && count_tait(make_petersen()) == 0;
    long long want = 1;
    for (int n = 1; n <= 6; ++n) {
      want *= 3;
      ok = ok && count_tait(make_unlink(n)) == want;
    }
    return ok;
  });

  criterion("2 colouring identity", [] {
    bool ok = true;
    for (const WebGraph& w :
         {make_theta(), make_tetrahedron(), make_prism(2), make_prism(3),
          make_petersen()})
      ok = ok && verify_identity(w).ok;
    ok = ok && verify_identity(make_prism(2)).tait_count == 12;
    for (int n = 1; n <= 6; ++n) ok = ok && verify_identity(make_unlink(n)).ok;
    for (const WebGraph& w : random_cubic_multigraphs(8, 0xA5A5, 200)) {
      TaitReport rep = verify_identity(w);
      ok = ok && rep.ok && rep.tait_count == count_tait_oracle(w);
    }
    return ok;
  });

  criterion("3 framed ranks by summation", [] {
    bool ok = true;
    long long four = 1, three = 1;
    for (int n = 1; n <= 6; ++n) {
      ok = ok && framed_rank(make_unlink(n), "c1", false).value == four;
      ok = ok && framed_rank(make_unlink(n), "c1", true).value == three;
      four *= 4;
      three *= 3;
    }
    return ok;
  });

  criterion("4 vanishing rules", [] {
    auto zero_by = [](const WebGraph& w, const OneSet& s, VanishingRule r) {
      VanishingVerdict v = vanishing_check(w, s);
      return v.verdict == VanishingVerdict::V::Zero && v.rule == r;
    };
    auto nonzero2 = [](const WebGraph& w, const OneSet& s) {
      VanishingVerdict v = vanishing_check(w, s);
      return v.verdict == VanishingVerdict::V::Nonzero &&
             v.rule == VanishingRule::Excision && v.total_rank == 2;
    };
    WebGraph hc = make_handcuff(), tw = make_twisted_handcuff();
    WebGraph l3 = make_prism(3), l5 = make_prism(5), p = make_petersen();
    return zero_by(hc, enumerate_onesets(hc)[0], VanishingRule::Bridge) &&
           zero_by(tw, enumerate_onesets(tw)[0], VanishingRule::ThreePoint) &&
           zero_by(l3, rung_oneset(l3), VanishingRule::ThreePoint) &&
           nonzero2(l5, rung_oneset(l5)) && nonzero2(p, rung_oneset(p));
  });

  criterion("5 foam index calibration", [] {
    bool ok = dirac_index_bifold(4, 1, 4, 4) == Rat(2) &&
              dirac_index_bifold(1, 1, 4, 16) == Rat(2);
    for (int g = 0; g <= 10; ++g)
      ok = ok && b_plus(Rat(2 * g), Rat(0)) == Rat(g);
    ok = ok && !admissible_foam(2, 0) && !admissible_foam(0, 0) &&
         admissible_foam(Rat(9, 2), 0) && admissible_foam(4, 0);
    return ok;
  });

  criterion("6 block complex suite", [] {
    // Tower patterns across a width-20 window.
    BlockComplex pat = circle_pattern(0, 22);
    auto check = homology(build_flavour(pat, Flavour::Check), -10, 9);
    auto hat = homology(build_flavour(pat, Flavour::Hat), -10, 9);
    auto bar = homology(build_flavour(pat, Flavour::Bar), -10, 9);
    GradedModule up{{{ModuleShape::TowerUp, 0}}};
    GradedModule down{{{ModuleShape::TowerDown, -1}}};
    GradedModule bi{{{ModuleShape::BiTower, 0}}};
    bool ok = true;
    for (int g = -10; g <= 9; ++g)
      ok = ok && check.at(g) == up.dim_at(g) && hat.at(g) == down.dim_at(g) &&
           bar.at(g) == bi.dim_at(g);

    // Fifty synthesized valid complexes, <= 40 generators each.
    std::mt19937_64 rng(6);
    for (int t = 0; t < 50 && ok; ++t) {
      BlockComplex bc = synthesize(rng);
      ok = ok && bc.n_o() + bc.n_s() + bc.n_u() <= 40;
      ok = ok && validate_identities(bc).ok();
      GF2Matrix dc = build_flavour(bc, Flavour::Check).d;
      GF2Matrix dh = build_flavour(bc, Flavour::Hat).d;
      GF2Matrix db = build_flavour(bc, Flavour::Bar).d;
      ok = ok && (dc * dc).is_zero() && (dh * dh).is_zero() &&
           (db * db).is_zero();
      IJPMaps ijp = build_ijp(bc);
      ok = ok && (dc * ijp.i + ijp.i * db).is_zero() &&
           (dh * ijp.j + ijp.j * dc).is_zero() &&
           (db * ijp.p + ijp.p * dh).is_zero();
      int ri = induced_homology_rank(ijp.i, db, dc);
      int rj = induced_homology_rank(ijp.j, dc, dh);
      int rp = induced_homology_rank(ijp.p, dh, db);
      ok = ok && total_homology(dc) == ri + rj &&
           total_homology(dh) == rj + rp && total_homology(db) == rp + ri;
    }

    // Cone of the shift on a truncated tower: one genuine class.
    int len = 8;
    Complex tower;
    tower.gradings.resize(len);
    for (int i = 0; i < len; ++i) tower.gradings[i] = i;
    tower.d = GF2Matrix(len, len);
    GF2Matrix shift(len, len);
    for (int i = 1; i < len; ++i) shift.set(i - 1, i, true);
    Complex cone = mapping_cone(tower, shift, -1);
    auto h = homology(cone, -1, len - 2);
    int total = 0;
    for (auto [g, d] : h) total += d;
    return ok && total == 1;
  });

  criterion("7 dot algebra", [] {
    bool ok = true;
    for (const WebGraph& w :
         {make_theta(), make_theta_plus_unknot(), make_tetrahedron(),
          make_prism(2), make_prism(3), make_prism(4), make_unlink(3),
          make_petersen()})
      for (const OneSet& s : enumerate_onesets(w)) {
        ok = ok && verify_vertex_relations(w, s).ok();
        ok = ok && rank_over_U(w, s) == 1LL << r_cycles(w, s).n();
      }
    // Exhaustive small-monomial multiplication against plain rewriting.
    std::vector<AlgebraElement::Monomial> monos;
    for (int u = 0; 2 * u <= 6; ++u)
      for (std::uint32_t mask = 0; mask < 16; ++mask)
        if (2 * u + __builtin_popcount(mask) <= 6) monos.push_back({u, mask});
    for (const auto& a : monos)
      for (const auto& b : monos) {
        AlgebraElement ea(4), eb(4);
        ea.add_term(a);
        eb.add_term(b);
        AlgebraElement prod = ea * eb;
        // Oracle: explicit exponent vectors, rewrite u_i^2 -> U until
        // every exponent is 0 or 1.
        int exp[4], u = a.u_power + b.u_power;
        for (int i = 0; i < 4; ++i)
          exp[i] = ((a.cycles >> i) & 1) + ((b.cycles >> i) & 1);
        for (int i = 0; i < 4; ++i)
          while (exp[i] >= 2) {
            exp[i] -= 2;
            ++u;
          }
        std::uint32_t rest = 0;
        for (int i = 0; i < 4; ++i)
          if (exp[i]) rest |= 1u << i;
        AlgebraElement want(4);
        want.add_term({u, rest});
        ok = ok && prod == want;
      }
    return ok;
  });

  criterion("8 determinism", [] {
    // The library layer behind the corpus verb: byte-stable serialization
    // and repeatable enumeration.
    bool ok = true;
    for (int round = 0; round < 2; ++round) {
      ok = ok && serialize_web(make_petersen()) ==
                     serialize_web(make_petersen());
      auto a = enumerate_onesets(make_prism(4));
      auto b = enumerate_onesets(make_prism(4));
      ok = ok && a.size() == b.size();
      for (size_t i = 0; i < a.size(); ++i)
        ok = ok && a[i].c_edges == b[i].c_edges;
      auto r1 = random_cubic_multigraphs(8, 77, 10);
      auto r2 = random_cubic_multigraphs(8, 77, 10);
      for (size_t i = 0; i < r1.size(); ++i)
        ok = ok && serialize_web(r1[i]) == serialize_web(r2[i]);
    }
    return ok;
  });

  if (failures == 0) std::printf("all criteria passed\n");
  else std::printf("%d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}

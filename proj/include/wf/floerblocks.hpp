#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "wf/gf2.hpp"

namespace wf {

using Rational = boost::rational<long long>;

// Chain groups C^o, C^s, C^u with integer gradings, and the eight block
// matrices. All blocks lower the stored grading by 1 except bar_su
// (degree 0, the boundary-obstructed block).
struct BlockComplex {
  std::vector<int> grad_o, grad_s, grad_u;

  GF2Matrix d_oo;    // C^o -> C^o
  GF2Matrix d_os;    // C^o -> C^s
  GF2Matrix d_uo;    // C^u -> C^o
  GF2Matrix d_us;    // C^u -> C^s
  GF2Matrix bar_ss;  // C^s -> C^s
  GF2Matrix bar_su;  // C^s -> C^u
  GF2Matrix bar_us;  // C^u -> C^s
  GF2Matrix bar_uu;  // C^u -> C^u

  int n_o() const { return static_cast<int>(grad_o.size()); }
  int n_s() const { return static_cast<int>(grad_s.size()); }
  int n_u() const { return static_cast<int>(grad_u.size()); }

  // Zero complex with the given generator counts and gradings.
  static BlockComplex zero(std::vector<int> go, std::vector<int> gs,
                           std::vector<int> gu);

  // Throws std::invalid_argument on any shape inconsistency.
  void check_shapes() const;
};

struct IdentityReport {
  struct Item {
    std::string name;
    bool ok = true;
    int witness_row = -1, witness_col = -1;  // a nonzero residual entry
  };
  std::vector<Item> items;  // always exactly eight
  bool ok() const {
    for (const auto& i : items)
      if (!i.ok) return false;
    return true;
  }
};

// Evaluates the eight square-to-zero identities on the block matrices.
IdentityReport validate_identities(const BlockComplex& bc);

enum class Flavour { Check, Hat, Bar };

// A plain complex: one square matrix plus one grading per generator.
struct Complex {
  GF2Matrix d;
  std::vector<int> gradings;
};

// Assembles the flavour differential. Check acts on C^o ⊕ C^s, Hat on
// C^o ⊕ C^u, Bar on C^s ⊕ C^u; gradings are the stored ones, so the Bar
// differential is homogeneous of degree -1 only when bar_su (its single
// degree-0 block) vanishes — graded callers must respect that.
// Throws std::invalid_argument if validate_identities fails.
Complex build_flavour(const BlockComplex& bc, Flavour f);

// dim H per grading over [window_lo, window_hi]. Requires d² = 0 and d
// homogeneous of degree -1 with respect to the gradings; throws otherwise.
std::map<int, int> homology(const Complex& c, int window_lo, int window_hi);

// Ungraded total homology dimension: dim ker d - rank d.
int total_homology(const GF2Matrix& d);

struct IJPMaps {
  GF2Matrix i;  // C̄ -> Č
  GF2Matrix j;  // Č -> Ĉ
  GF2Matrix p;  // Ĉ -> C̄
};

// The long-exact-sequence maps, as matrices against the build_flavour
// generator orders. Each is a chain map for the assembled differentials.
IJPMaps build_ijp(const BlockComplex& bc);

// Cone of a degree-`f_degree` chain self-map f of c: differential
// [[d, 0], [f, d]], second copy shifted by f_degree + 1. Throws when f is
// not a chain map.
Complex mapping_cone(const Complex& c, const GF2Matrix& f, int f_degree);

// The eight cobordism blocks of a map between two block complexes.
struct CobordismBlocks {
  GF2Matrix m_oo, m_os, m_uo, m_us;          // source C^* -> target C^*
  GF2Matrix bar_m_ss, bar_m_su, bar_m_us, bar_m_uu;
};

struct CobordismMaps {
  GF2Matrix check;  // Č(source) -> Č(target)
  GF2Matrix bar;    // C̄(source) -> C̄(target)
  std::optional<GF2Matrix> hat;  // only when hat blocks are supplied
  struct ChainMapCheck {
    std::string flavour;
    bool ok = true;
    int witness_row = -1, witness_col = -1;
  };
  std::vector<ChainMapCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// Assembles the check- and bar-flavour cobordism maps from the blocks and
// verifies the cocycle-case chain-map identities against the assembled
// source/target differentials. The hat assembly needs two extra blocks
// (its bottom row) that are not determined by the above; callers supply
// them pre-assembled or omit them.
struct HatRow {
  GF2Matrix bottom_left;   // source C^o -> target C^u
  GF2Matrix bottom_right;  // source C^u -> target C^u
};
CobordismMaps build_cobordism_blocks(const CobordismBlocks& m,
                                     const BlockComplex& source,
                                     const BlockComplex& target,
                                     const std::optional<HatRow>& hat = {});

// Grading shift of the period loop: pairing / 2. A nonzero value means
// the grading set carries a free Z-action; an odd pairing (half-integer
// period) obstructs an absolute Z/2 grading.
Rational grading_period(long long pairing);

// Graded module shapes for catalogue answers.
enum class ModuleShape {
  TowerDown,   // F2[v]: one dim per grading at offset, offset-1, ...
  TowerUp,     // F2[v^-1, v]/F2[v]: one dim per grading at offset, offset+1, ...
  BiTower,     // F2[v^-1, v]: one dim per grading, all gradings
  TowerDownU,  // F2[U]: one dim per grading at offset, offset-2, ...
  Finite       // a single F2 at offset
};

struct GradedModule {
  struct Summand {
    ModuleShape shape = ModuleShape::Finite;
    int offset = 0;
  };
  std::vector<Summand> summands;

  // Total dimension inside [lo, hi].
  long long dim_in_window(int lo, int hi) const;
  // Dimension contributed at one grading.
  int dim_at(int grading) const;
};

}  // namespace wf

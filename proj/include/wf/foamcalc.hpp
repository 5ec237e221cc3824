#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace wf {

using Rat = boost::rational<long long>;

// Topological inputs for the foam index formulas. All user-supplied;
// nothing here is derived from geometry.
struct FoamIndexInput {
  Rat b1_r = 0;        // first Betti number of the real branch surface
  Rat self_int_r = 0;  // its self-intersection (half the rel. Euler number)
  Rat c1_sq = 0;       // c1(S+)^2
  Rat sigma = 0;       // signature of the ambient 4-manifold
  Rat c1_dot_c = 0;    // <c1(S+), lifted c-surface>
  Rat c_self_int = 0;  // self-intersection of the lifted c-surface
};

struct DimensionResult {
  Rat value;
  std::vector<std::string> notes;  // e.g. non-integer warning
};

// (1/2) b1_r - (1/4) self_int_r + (c1_sq - sigma)/8 + (1/8) c1_dot_c
//   + (1/32) c_self_int. Integrality is not enforced: a non-integer value
// gets a warning note, as does the orientability assumption on the lifted
// c-surface.
DimensionResult moduli_dimension(const FoamIndexInput& in);

// (c1_sq - sigma)/4 + (1/4) c1_dot_c + (1/16) c_self_int.
// The invariant-part index is half of this.
Rat dirac_index_bifold(Rat c1_sq, Rat sigma, Rat c1_dot_c, Rat c_self_int);

// (1/2) b1_r - (1/4) self_int_r.
Rat b_plus(Rat b1_r, Rat self_int_r);

// b_plus > 1.
bool admissible_foam(Rat b1_r, Rat self_int_r);

// Half the relative Euler number.
Rat self_intersection(long long relative_euler);

// 2 genus - 2 + n_sing / 2.
Rat adjunction_degree(long long genus, long long n_sing);
bool spinc_passes_filter(Rat pairing, long long genus, long long n_sing);

// Membership in the orbifold Picard group of a surface with isotropy
// weights beta_i in {0,1}: c - sum(beta_i)/2 must be an integer. Throws
// std::invalid_argument unless c is a half-integer.
bool surface_picard_member(Rat c, const std::vector<int>& betas);

struct VortexModuli {
  enum class Kind { Empty, SymmetricProduct, Borderline } kind;
  long long e = 0;  // symmetric-product degree, when applicable
};

// Empty above the degree threshold deg_K/2, the e-th symmetric product
// below it, Borderline at equality (the dichotomy is silent there).
VortexModuli vortex_moduli(Rat deg_L, Rat deg_K, long long e);

// Canonical "p/q" (or "p") rendering.
std::string rat_str(const Rat& r);

}  // namespace wf

#include "wf/foamcalc.hpp"

#include <stdexcept>

namespace wf {

DimensionResult moduli_dimension(const FoamIndexInput& in) {
  DimensionResult res;
  res.value = b_plus(in.b1_r, in.self_int_r) + (in.c1_sq - in.sigma) / 8 +
              in.c1_dot_c / 8 + in.c_self_int / 32;
  res.notes.push_back("orientability of the lifted c-surface assumed");
  if (res.value.denominator() != 1)
    res.notes.push_back("non-integer dimension: inputs are inconsistent "
                        "with an actual moduli problem");
  return res;
}

Rat dirac_index_bifold(Rat c1_sq, Rat sigma, Rat c1_dot_c, Rat c_self_int) {
  return (c1_sq - sigma) / 4 + c1_dot_c / 4 + c_self_int / 16;
}

Rat b_plus(Rat b1_r, Rat self_int_r) { return b1_r / 2 - self_int_r / 4; }

bool admissible_foam(Rat b1_r, Rat self_int_r) {
  return b_plus(b1_r, self_int_r) > Rat(1);
}

Rat self_intersection(long long relative_euler) {
  return Rat(relative_euler, 2);
}

Rat adjunction_degree(long long genus, long long n_sing) {
  return Rat(2 * genus - 2) + Rat(n_sing, 2);
}

bool spinc_passes_filter(Rat pairing, long long genus, long long n_sing) {
  return pairing == adjunction_degree(genus, n_sing);
}

bool surface_picard_member(Rat c, const std::vector<int>& betas) {
  if ((c * 2).denominator() != 1)
    throw std::invalid_argument("isotropy level " + rat_str(c) +
                                " is not a half-integer");
  long long beta_sum = 0;
  for (int b : betas) {
    if (b != 0 && b != 1)
      throw std::invalid_argument("isotropy weights must be 0 or 1");
    beta_sum += b;
  }
  return (c - Rat(beta_sum, 2)).denominator() == 1;
}

VortexModuli vortex_moduli(Rat deg_L, Rat deg_K, long long e) {
  if (deg_L > deg_K / 2) return {VortexModuli::Kind::Empty, 0};
  if (deg_L < deg_K / 2) return {VortexModuli::Kind::SymmetricProduct, e};
  return {VortexModuli::Kind::Borderline, 0};
}

std::string rat_str(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

}  // namespace wf

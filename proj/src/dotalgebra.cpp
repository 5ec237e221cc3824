#include "wf/dotalgebra.hpp"

#include <bit>
#include <stdexcept>

namespace wf {

AlgebraElement AlgebraElement::one(int n_cycles) {
  AlgebraElement e(n_cycles);
  e.add_term({0, 0});
  return e;
}

AlgebraElement AlgebraElement::generator(int n_cycles, int cycle) {
  if (cycle < 0 || cycle >= n_cycles)
    throw std::out_of_range("cycle index " + std::to_string(cycle));
  AlgebraElement e(n_cycles);
  e.add_term({0, 1u << cycle});
  return e;
}

AlgebraElement AlgebraElement::big_u(int n_cycles) {
  AlgebraElement e(n_cycles);
  e.add_term({1, 0});
  return e;
}

void AlgebraElement::add_term(Monomial m) {
  auto [it, inserted] = terms_.insert(m);
  if (!inserted) terms_.erase(it);
}

bool AlgebraElement::homogeneous() const {
  if (terms_.empty()) return true;
  auto deg = [](const Monomial& m) {
    return -(2 * m.u_power + std::popcount(m.cycles));
  };
  int d = deg(*terms_.begin());
  for (const auto& m : terms_)
    if (deg(m) != d) return false;
  return true;
}

int AlgebraElement::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero");
  if (!homogeneous()) throw std::logic_error("degree of inhomogeneous element");
  const Monomial& m = *terms_.begin();
  return -(2 * m.u_power + std::popcount(m.cycles));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (n_cycles_ != o.n_cycles_)
    throw std::invalid_argument("mismatched algebra contexts");
  AlgebraElement r = *this;
  for (const auto& m : o.terms_) r.add_term(m);
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (n_cycles_ != o.n_cycles_)
    throw std::invalid_argument("mismatched algebra contexts");
  AlgebraElement r(n_cycles_);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      // u_i * u_i = U for each shared cycle generator.
      std::uint32_t shared = a.cycles & b.cycles;
      Monomial m;
      m.u_power = a.u_power + b.u_power + std::popcount(shared);
      m.cycles = a.cycles ^ b.cycles;
      r.add_term(m);
    }
  return r;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    if (m.u_power == 1) mono = "U";
    else if (m.u_power > 1) mono = "U^" + std::to_string(m.u_power);
    for (int i = 0; i < n_cycles_; ++i)
      if (m.cycles >> i & 1) {
        if (!mono.empty()) mono += "*";
        mono += "u" + std::to_string(i);
      }
    out += mono.empty() ? "1" : mono;
  }
  return out;
}

AlgebraElement dot_generator(const WebGraph& web, const OneSet& s,
                             const std::string& edge_id) {
  int e = web.edge_index(edge_id);
  if (e < 0) throw std::invalid_argument("unknown edge id " + edge_id);
  RCycleDecomposition d = r_cycles(web, s);
  if (d.cycle_of_edge[e] < 0) return AlgebraElement::zero(d.n());
  return AlgebraElement::generator(d.n(), d.cycle_of_edge[e]);
}

VertexRelationReport verify_vertex_relations(const WebGraph& web,
                                             const OneSet& s) {
  VertexRelationReport rep;
  RCycleDecomposition d = r_cycles(web, s);
  const int n = d.n();
  AlgebraElement U = AlgebraElement::big_u(n);
  for (int v = 0; v < web.vertex_count(); ++v) {
    AlgebraElement dot[3];
    for (int k = 0; k < 3; ++k) {
      int e = web.slot_edge(v, k);
      dot[k] = d.cycle_of_edge[e] < 0
                   ? AlgebraElement::zero(n)
                   : AlgebraElement::generator(n, d.cycle_of_edge[e]);
    }
    if (!(dot[0] + dot[1] + dot[2]).is_zero())
      rep.failures.push_back({v, 1});
    if (dot[0] * dot[1] + dot[1] * dot[2] + dot[2] * dot[0] != U)
      rep.failures.push_back({v, 2});
    if (!(dot[0] * dot[1] * dot[2]).is_zero())
      rep.failures.push_back({v, 3});
  }
  return rep;
}

long long rank_over_U(const WebGraph& web, const OneSet& s) {
  return 1LL << r_cycles(web, s).n();
}

}  // namespace wf

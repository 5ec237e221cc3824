#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "wf/onesets.hpp"
#include "wf/webgraph.hpp"

namespace wf {

// Element of the dot algebra attached to (web, 1-set): the quotient of
// F2[u_1..u_m] (one generator per r-cycle, plus a central U of degree -2)
// by u_i^2 = U. Normal form: a set of monomials (U_power, squarefree
// subset of cycle indices as a bitmask); the zero element is the empty set.
class AlgebraElement {
 public:
  struct Monomial {
    int u_power = 0;          // exponent of U
    std::uint32_t cycles = 0;  // bitmask of r-cycle indices
    auto operator<=>(const Monomial&) const = default;
  };

  AlgebraElement() = default;  // zero in an unspecified context
  explicit AlgebraElement(int n_cycles) : n_cycles_(n_cycles) {}

  static AlgebraElement zero(int n_cycles) { return AlgebraElement(n_cycles); }
  static AlgebraElement one(int n_cycles);
  static AlgebraElement generator(int n_cycles, int cycle);
  static AlgebraElement big_u(int n_cycles);  // the central U

  int n_cycles() const { return n_cycles_; }
  const std::set<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Monomial degree -(2 u_power + |cycles|); throws std::logic_error when
  // the element is zero or inhomogeneous.
  int degree() const;
  bool homogeneous() const;

  void add_term(Monomial m);  // characteristic 2: toggles membership

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  bool operator==(const AlgebraElement&) const = default;

  std::string str() const;  // e.g. "U^2*u0*u3 + u1"

 private:
  int n_cycles_ = 0;
  std::set<Monomial> terms_;
};

// The dot operator of an edge: 0 when the edge is c, otherwise the
// generator of the r-cycle through it. Throws on unknown edge ids.
AlgebraElement dot_generator(const WebGraph& web, const OneSet& s,
                             const std::string& edge_id);

struct VertexRelationReport {
  struct Failure {
    int vertex = -1;
    int relation = 0;  // 1: sum, 2: pairwise products, 3: triple product
  };
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

// Evaluates, at every vertex, the three relations on the incident edge
// dots d1,d2,d3: d1+d2+d3 = 0, d1d2+d2d3+d3d1 = U, d1d2d3 = 0.
VertexRelationReport verify_vertex_relations(const WebGraph& web,
                                             const OneSet& s);

// Rank of the algebra as a free F2[U]-module: 2^{n(s)}.
long long rank_over_U(const WebGraph& web, const OneSet& s);

}  // namespace wf

#include "wf/floerblocks.hpp"

#include <stdexcept>

namespace wf {

namespace {

// Assemble [[a, b], [c, d]] acting on column vectors.
GF2Matrix block2x2(const GF2Matrix& a, const GF2Matrix& b, const GF2Matrix& c,
                   const GF2Matrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols())
    throw std::invalid_argument("incompatible blocks");
  GF2Matrix m(a.rows() + c.rows(), a.cols() + b.cols());
  auto paste = [&](const GF2Matrix& blk, int r0, int c0) {
    for (auto [r, c] : blk.entries()) m.set(r0 + r, c0 + c, true);
  };
  paste(a, 0, 0);
  paste(b, 0, a.cols());
  paste(c, a.rows(), 0);
  paste(d, a.rows(), a.cols());
  return m;
}

void push_identity(IdentityReport& rep, const std::string& name,
                   const GF2Matrix& residual) {
  IdentityReport::Item item;
  item.name = name;
  auto [r, c] = residual.first_nonzero();
  item.ok = r < 0;
  item.witness_row = r;
  item.witness_col = c;
  rep.items.push_back(item);
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

BlockComplex BlockComplex::zero(std::vector<int> go, std::vector<int> gs,
                                std::vector<int> gu) {
  BlockComplex bc;
  bc.grad_o = std::move(go);
  bc.grad_s = std::move(gs);
  bc.grad_u = std::move(gu);
  int no = bc.n_o(), ns = bc.n_s(), nu = bc.n_u();
  bc.d_oo = GF2Matrix(no, no);
  bc.d_os = GF2Matrix(ns, no);
  bc.d_uo = GF2Matrix(no, nu);
  bc.d_us = GF2Matrix(ns, nu);
  bc.bar_ss = GF2Matrix(ns, ns);
  bc.bar_su = GF2Matrix(nu, ns);
  bc.bar_us = GF2Matrix(ns, nu);
  bc.bar_uu = GF2Matrix(nu, nu);
  return bc;
}

void BlockComplex::check_shapes() const {
  int no = n_o(), ns = n_s(), nu = n_u();
  auto want = [](const GF2Matrix& m, int r, int c, const char* name) {
    if (m.rows() != r || m.cols() != c)
      throw std::invalid_argument(std::string(name) + " has shape " +
                                  m.shape() + ", expected " +
                                  std::to_string(r) + "x" + std::to_string(c));
  };
  want(d_oo, no, no, "d_oo");
  want(d_os, ns, no, "d_os");
  want(d_uo, no, nu, "d_uo");
  want(d_us, ns, nu, "d_us");
  want(bar_ss, ns, ns, "bar_ss");
  want(bar_su, nu, ns, "bar_su");
  want(bar_us, ns, nu, "bar_us");
  want(bar_uu, nu, nu, "bar_uu");
}

IdentityReport validate_identities(const BlockComplex& bc) {
  bc.check_shapes();
  IdentityReport rep;
  push_identity(rep, "check identity 1",
                bc.d_oo * bc.d_oo + bc.d_uo * bc.bar_su * bc.d_os);
  push_identity(rep, "check identity 2",
                bc.d_os * bc.d_oo + bc.bar_ss * bc.d_os +
                    bc.d_us * bc.bar_su * bc.d_os);
  push_identity(rep, "check identity 3",
                bc.d_oo * bc.d_uo + bc.d_uo * bc.bar_uu +
                    bc.d_uo * bc.bar_su * bc.d_us);
  push_identity(rep, "check identity 4",
                bc.bar_us + bc.d_os * bc.d_uo + bc.bar_ss * bc.d_us +
                    bc.d_us * bc.bar_uu + bc.d_us * bc.bar_su * bc.d_us);
  push_identity(rep, "bar identity 1",
                bc.bar_ss * bc.bar_ss + bc.bar_us * bc.bar_su);
  push_identity(rep, "bar identity 2",
                bc.bar_ss * bc.bar_us + bc.bar_us * bc.bar_uu);
  push_identity(rep, "bar identity 3",
                bc.bar_su * bc.bar_ss + bc.bar_uu * bc.bar_su);
  push_identity(rep, "bar identity 4",
                bc.bar_su * bc.bar_us + bc.bar_uu * bc.bar_uu);
  return rep;
}

Complex build_flavour(const BlockComplex& bc, Flavour f) {
  IdentityReport rep = validate_identities(bc);
  if (!rep.ok()) {
    for (const auto& item : rep.items)
      if (!item.ok)
        throw std::invalid_argument("block complex fails " + item.name);
  }
  Complex c;
  switch (f) {
    case Flavour::Check:
      c.d = block2x2(bc.d_oo, bc.d_uo * bc.bar_su, bc.d_os,
                     bc.bar_ss + bc.d_us * bc.bar_su);
      c.gradings = concat(bc.grad_o, bc.grad_s);
      break;
    case Flavour::Hat:
      c.d = block2x2(bc.d_oo, bc.d_uo, bc.bar_su * bc.d_os,
                     bc.bar_uu + bc.bar_su * bc.d_us);
      c.gradings = concat(bc.grad_o, bc.grad_u);
      break;
    case Flavour::Bar:
      c.d = block2x2(bc.bar_ss, bc.bar_us, bc.bar_su, bc.bar_uu);
      c.gradings = concat(bc.grad_s, bc.grad_u);
      break;
  }
  return c;
}

std::map<int, int> homology(const Complex& c, int window_lo, int window_hi) {
  if (!(c.d * c.d).is_zero())
    throw std::invalid_argument("differential does not square to zero");
  for (auto [r, col] : c.d.entries())
    if (c.gradings[r] != c.gradings[col] - 1)
      throw std::invalid_argument(
          "differential not homogeneous of degree -1: entry (" +
          std::to_string(r) + "," + std::to_string(col) + ")");

  std::map<int, std::vector<int>> by_grading;
  for (int i = 0; i < static_cast<int>(c.gradings.size()); ++i)
    by_grading[c.gradings[i]].push_back(i);

  std::vector<int> all_rows(c.d.rows());
  for (int i = 0; i < c.d.rows(); ++i) all_rows[i] = i;
  auto rank_from = [&](int g) {  // rank of d restricted to grading-g columns
    auto it = by_grading.find(g);
    if (it == by_grading.end()) return 0;
    return c.d.submatrix(all_rows, it->second).rank();
  };

  std::map<int, int> out;
  for (int g = window_lo; g <= window_hi; ++g) {
    auto it = by_grading.find(g);
    int n = it == by_grading.end() ? 0 : static_cast<int>(it->second.size());
    out[g] = n - rank_from(g) - rank_from(g + 1);
  }
  return out;
}

int total_homology(const GF2Matrix& d) {
  if (!(d * d).is_zero())
    throw std::invalid_argument("differential does not square to zero");
  return d.nullity() - d.rank();
}

IJPMaps build_ijp(const BlockComplex& bc) {
  bc.check_shapes();
  int no = bc.n_o(), ns = bc.n_s(), nu = bc.n_u();
  IJPMaps m;
  m.i = block2x2(GF2Matrix(no, ns), bc.d_uo, GF2Matrix::identity(ns), bc.d_us);
  m.j = block2x2(GF2Matrix::identity(no), GF2Matrix(no, ns),
                 GF2Matrix(nu, no), bc.bar_su);
  m.p = block2x2(bc.d_os, bc.d_us, GF2Matrix(nu, no),
                 GF2Matrix::identity(nu));
  return m;
}

Complex mapping_cone(const Complex& c, const GF2Matrix& f, int f_degree) {
  int n = c.d.rows();
  if (f.rows() != n || f.cols() != n)
    throw std::invalid_argument("cone map shape " + f.shape() +
                                " does not match complex size " +
                                std::to_string(n));
  if (!(f * c.d + c.d * f).is_zero())
    throw std::invalid_argument("cone map is not a chain map");
  Complex cone;
  cone.d = block2x2(c.d, GF2Matrix(n, n), f, c.d);
  cone.gradings.reserve(2 * n);
  for (int g : c.gradings) cone.gradings.push_back(g + f_degree + 1);
  for (int g : c.gradings) cone.gradings.push_back(g);
  return cone;
}

CobordismMaps build_cobordism_blocks(const CobordismBlocks& m,
                                     const BlockComplex& source,
                                     const BlockComplex& target,
                                     const std::optional<HatRow>& hat) {
  source.check_shapes();
  target.check_shapes();
  auto want = [&](const GF2Matrix& blk, int r, int c, const char* name) {
    if (blk.rows() != r || blk.cols() != c)
      throw std::invalid_argument(std::string(name) + " has shape " +
                                  blk.shape() + ", expected " +
                                  std::to_string(r) + "x" + std::to_string(c));
  };
  want(m.m_oo, target.n_o(), source.n_o(), "m_oo");
  want(m.m_os, target.n_s(), source.n_o(), "m_os");
  want(m.m_uo, target.n_o(), source.n_u(), "m_uo");
  want(m.m_us, target.n_s(), source.n_u(), "m_us");
  want(m.bar_m_ss, target.n_s(), source.n_s(), "bar_m_ss");
  want(m.bar_m_su, target.n_u(), source.n_s(), "bar_m_su");
  want(m.bar_m_us, target.n_s(), source.n_u(), "bar_m_us");
  want(m.bar_m_uu, target.n_u(), source.n_u(), "bar_m_uu");

  CobordismMaps out;
  out.check = block2x2(
      m.m_oo, m.m_uo * source.bar_su + target.d_uo * m.bar_m_su, m.m_os,
      m.bar_m_ss + m.m_us * source.bar_su + target.d_us * m.bar_m_su);
  out.bar = block2x2(m.bar_m_ss, m.bar_m_us, m.bar_m_su, m.bar_m_uu);
  if (hat) {
    want(hat->bottom_left, target.n_u(), source.n_o(), "hat bottom-left");
    want(hat->bottom_right, target.n_u(), source.n_u(), "hat bottom-right");
    out.hat = block2x2(m.m_oo, m.m_uo, hat->bottom_left, hat->bottom_right);
  }

  auto report = [&](const std::string& flavour, const GF2Matrix& map,
                    const GF2Matrix& d_src, const GF2Matrix& d_tgt) {
    CobordismMaps::ChainMapCheck chk;
    chk.flavour = flavour;
    auto [r, c] = (d_tgt * map + map * d_src).first_nonzero();
    chk.ok = r < 0;
    chk.witness_row = r;
    chk.witness_col = c;
    out.checks.push_back(chk);
  };
  report("check", out.check, build_flavour(source, Flavour::Check).d,
         build_flavour(target, Flavour::Check).d);
  report("bar", out.bar, build_flavour(source, Flavour::Bar).d,
         build_flavour(target, Flavour::Bar).d);
  if (out.hat)
    report("hat", *out.hat, build_flavour(source, Flavour::Hat).d,
           build_flavour(target, Flavour::Hat).d);
  return out;
}

Rational grading_period(long long pairing) { return Rational(pairing, 2); }

int GradedModule::dim_at(int g) const {
  int d = 0;
  for (const auto& s : summands) {
    switch (s.shape) {
      case ModuleShape::TowerDown: d += g <= s.offset; break;
      case ModuleShape::TowerUp: d += g >= s.offset; break;
      case ModuleShape::BiTower: d += 1; break;
      case ModuleShape::TowerDownU:
        d += g <= s.offset && (s.offset - g) % 2 == 0;
        break;
      case ModuleShape::Finite: d += g == s.offset; break;
    }
  }
  return d;
}

long long GradedModule::dim_in_window(int lo, int hi) const {
  long long total = 0;
  for (int g = lo; g <= hi; ++g) total += dim_at(g);
  return total;
}

}  // namespace wf

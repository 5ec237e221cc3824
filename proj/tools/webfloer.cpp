// webfloer: command-line front end for the web/foam Floer engine.
//
// Verbs: validate | onesets | foam-onesets | tait | verify-tait | ranks |
// framed-rank | vanishing | algebra normal-form | floer (check|homology|
// cone) | foam (index|bplus|admissible|vortex|picard) | corpus.
// Output is canonical JSON (sorted keys, rationals as "p/q", no floats)
// unless --format text. Exit codes: 0 ok, 1 domain error, 2 parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wf/catalogue.hpp"
#include "wf/dotalgebra.hpp"
#include "wf/families.hpp"
#include "wf/floerblocks.hpp"
#include "wf/foamcalc.hpp"
#include "wf/onesets.hpp"
#include "wf/tait.hpp"
#include "wf/webgraph.hpp"

using nlohmann::json;
using namespace wf;

namespace {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Rat parse_rat(const json& j, const std::string& key) {
  if (!j.contains(key)) return Rat(0);
  const json& v = j.at(key);
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
  throw DomainError("field " + key + " must be an integer or \"p/q\" string");
}

std::pair<int, int> parse_window(const std::string& w) {
  auto dots = w.find("..");
  if (dots == std::string::npos)
    throw DomainError("--window wants lo..hi, got " + w);
  return {std::stoi(w.substr(0, dots)), std::stoi(w.substr(dots + 2))};
}

json oneset_json(const WebGraph& web, const OneSet& s) {
  json j;
  json ids = json::array();
  for (int e : s.c_edges) ids.push_back(web.edges()[e].id);
  j["c_edges"] = ids;
  RCycleDecomposition d = r_cycles(web, s);
  j["n"] = d.n();
  j["even"] = is_even(web, s);
  try {
    CoverShadow cs = cover_shadow(web, s);
    json shadow;
    shadow["b1"] = cs.b1;
    shadow["naive_spinc_count"] = cs.naive_spinc_count;
    json lifts = json::array();
    for (const auto& l : cs.lifted_c) {
      const char* kind = l.kind == LiftKind::InvariantCircle
                             ? "invariant_circle"
                             : l.kind == LiftKind::SwappedPair
                                   ? "swapped_pair"
                                   : "single_wrapping_circle";
      lifts.push_back({{"c_edge", web.edges()[l.c_edge].id}, {"kind", kind}});
    }
    shadow["lifted_c"] = lifts;
    j["shadow"] = shadow;
  } catch (const std::invalid_argument&) {
    j["shadow"] = nullptr;  // linking data missing on a non-planar web
  }
  return j;
}

GF2Matrix matrix_from_entries(const json& j, int rows, int cols,
                              const std::string& name) {
  GF2Matrix m(rows, cols);
  if (j.is_null()) return m;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw DomainError(name + ": entries must be [row, col] pairs");
    int r = e[0].get<int>(), c = e[1].get<int>();
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw DomainError(name + ": entry (" + std::to_string(r) + "," +
                        std::to_string(c) + ") out of range for " +
                        std::to_string(rows) + "x" + std::to_string(cols));
    m.set(r, c, true);
  }
  return m;
}

BlockComplex block_complex_from_json(const json& j) {
  if (!j.contains("generators") || !j.contains("matrices"))
    throw DomainError("block complex wants \"generators\" and \"matrices\"");
  const json& g = j.at("generators");
  BlockComplex bc = BlockComplex::zero(
      g.value("o", std::vector<int>{}), g.value("s", std::vector<int>{}),
      g.value("u", std::vector<int>{}));
  const json& m = j.at("matrices");
  auto blk = [&](const char* name, GF2Matrix& dst) {
    if (m.contains(name))
      dst = matrix_from_entries(m.at(name), dst.rows(), dst.cols(), name);
  };
  blk("d_oo", bc.d_oo);
  blk("d_os", bc.d_os);
  blk("d_uo", bc.d_uo);
  blk("d_us", bc.d_us);
  blk("bar_ss", bc.bar_ss);
  blk("bar_su", bc.bar_su);
  blk("bar_us", bc.bar_us);
  blk("bar_uu", bc.bar_uu);
  return bc;
}

Flavour flavour_from_name(const std::string& name) {
  if (name == "check") return Flavour::Check;
  if (name == "hat") return Flavour::Hat;
  if (name == "bar") return Flavour::Bar;
  throw DomainError("unknown flavour " + name +
                    " (want check, hat, or bar)");
}

AlgebraElement eval_expr(const WebGraph& web, const OneSet& s,
                         const std::string& expr) {
  int n = r_cycles(web, s).n();
  AlgebraElement sum = AlgebraElement::zero(n);
  std::stringstream terms(expr);
  std::string term;
  bool any = false;
  while (std::getline(terms, term, '+')) {
    AlgebraElement prod = AlgebraElement::one(n);
    std::stringstream factors(term);
    std::string f;
    while (std::getline(factors, f, '*')) {
      f.erase(0, f.find_first_not_of(" \t"));
      f.erase(f.find_last_not_of(" \t") + 1);
      if (f.empty()) continue;
      if (f == "U") prod = prod * AlgebraElement::big_u(n);
      else if (f == "1") continue;
      else prod = prod * dot_generator(web, s, f);
    }
    sum = sum + prod;
    any = true;
  }
  if (!any) throw DomainError("empty expression");
  return sum;
}

// ---------------------------------------------------------------------
// corpus: the built-in golden suite.

struct CorpusResult {
  std::string name;
  bool pass;
  std::string detail;
};

void expect(std::vector<CorpusResult>& out, const std::string& name,
            bool cond, const std::string& detail = "") {
  out.push_back({name, cond, detail});
}

std::vector<CorpusResult> run_corpus() {
  std::vector<CorpusResult> out;

  // Tait counts.
  expect(out, "theta/tait", count_tait(make_theta()) == 6);
  expect(out, "l3/tait", count_tait(make_prism(3)) == 6);
  expect(out, "petersen/tait", count_tait(make_petersen()) == 0);
  for (int n = 1; n <= 6; ++n) {
    long long want = 1;
    for (int i = 0; i < n; ++i) want *= 3;
    expect(out, "u" + std::to_string(n) + "/tait",
           count_tait(make_unlink(n)) == want);
  }

  // Colouring identity.
  for (auto [name, web] :
       {std::pair<std::string, WebGraph>{"theta", make_theta()},
        {"k4", make_tetrahedron()},
        {"l2", make_prism(2)},
        {"l3", make_prism(3)},
        {"petersen", make_petersen()}})
    expect(out, name + "/identity", verify_identity(web).ok);
  expect(out, "l2/identity-value", verify_identity(make_prism(2)).tait_count == 12);

  // Framed ranks by summation.
  for (int n = 1; n <= 6; ++n) {
    long long four = 1, three = 1;
    for (int i = 1; i < n; ++i) four *= 4, three *= 3;
    expect(out, "u" + std::to_string(n) + "/framed",
           framed_rank(make_unlink(n), "c1", false).value == four);
    expect(out, "u" + std::to_string(n) + "/framed-restricted",
           framed_rank(make_unlink(n), "c1", true).value == three);
  }
  expect(out, "theta-prime/framed",
         framed_rank(make_theta_plus_unknot(), "c1", false).value == 12);

  // Vanishing verdicts.
  auto first_rung = [](const WebGraph& w) {
    for (const OneSet& s : enumerate_onesets(w))
      if (classify_oneset(w, s) == OneSetType::RungMatching) return s;
    throw DomainError("no rung 1-set");
  };
  {
    auto hc = make_handcuff();
    auto v = vanishing_check(hc, enumerate_onesets(hc)[0]);
    expect(out, "handcuff/vanishing",
           v.verdict == VanishingVerdict::V::Zero &&
               v.rule == VanishingRule::Bridge);
    auto tw = make_twisted_handcuff();
    auto vt = vanishing_check(tw, enumerate_onesets(tw)[0]);
    expect(out, "twisted-handcuff/vanishing",
           vt.verdict == VanishingVerdict::V::Zero &&
               vt.rule == VanishingRule::ThreePoint);
    auto l3 = make_prism(3);
    auto v3 = vanishing_check(l3, first_rung(l3));
    expect(out, "l3-s3/vanishing",
           v3.verdict == VanishingVerdict::V::Zero &&
               v3.rule == VanishingRule::ThreePoint);
    auto l5 = make_prism(5);
    auto v5 = vanishing_check(l5, first_rung(l5));
    expect(out, "l5-s5/vanishing",
           v5.verdict == VanishingVerdict::V::Nonzero &&
               v5.rule == VanishingRule::Excision && v5.total_rank == 2);
    auto p = make_petersen();
    auto vp = vanishing_check(p, first_rung(p));
    expect(out, "petersen-sgamma/vanishing",
           vp.verdict == VanishingVerdict::V::Nonzero &&
               vp.rule == VanishingRule::Excision && vp.total_rank == 2);
  }

  // Catalogue homology shapes.
  {
    auto theta = make_theta();
    auto a = wf::homology(theta, enumerate_onesets(theta)[0], "hat");
    expect(out, "theta/hat",
           a.known && !a.zero && a.total.summands.size() == 2 &&
               a.spinc_count == 2);
    auto tetra = make_tetrahedron();
    auto at = wf::homology(tetra, enumerate_onesets(tetra)[0], "hat");
    expect(out, "tetrahedron/hat",
           at.known && at.total.summands.size() == 2 && at.discrepancy &&
               at.naive_spinc_count == 4 && at.spinc_count == 2);
  }

  // Foam index calibrations.
  expect(out, "cp2-deg2/index",
         dirac_index_bifold(4, 1, 4, 4) == Rat(2));
  expect(out, "cp2-deg4/index",
         dirac_index_bifold(1, 1, 4, 16) == Rat(2));
  for (int g = 0; g <= 10; ++g)
    expect(out, "bplus/g" + std::to_string(g),
           b_plus(Rat(2 * g), Rat(0)) == Rat(g));
  expect(out, "admissible/threshold",
         !admissible_foam(2, 0) && admissible_foam(Rat(5, 2) * 2, 0) &&
             !admissible_foam(0, 0));

  // Dot relations over every builder web and 1-set.
  {
    bool all = true;
    for (const WebGraph& w :
         {make_theta(), make_tetrahedron(), make_prism(2), make_prism(3),
          make_unlink(3), make_petersen(), make_theta_plus_unknot()})
      for (const OneSet& s : enumerate_onesets(w))
        all = all && verify_vertex_relations(w, s).ok();
    expect(out, "dot-relations/corpus", all);
  }
  return out;
}

json corpus_json(const std::vector<CorpusResult>& rs) {
  json out;
  json arr = json::array();
  bool all = true;
  for (const auto& r : rs) {
    arr.push_back({{"name", r.name}, {"pass", r.pass}});
    all = all && r.pass;
  }
  out["results"] = arr;
  out["all_pass"] = all;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"web/foam Floer engine"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after a subcommand too
  std::string format = "json";
  app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  std::uint64_t seed = 0;
  app.add_option("--seed", seed);
  std::string window = "-10..10";
  app.add_option("--window", window);

  std::string web_path, foam_path, bc_path, params_path;
  int oneset_index = -1;
  std::string flavour_name = "hat", basepoint, expr;
  bool restricted = false;

  auto* v_validate = app.add_subcommand("validate");
  v_validate->add_option("web", web_path)->required();
  auto* v_onesets = app.add_subcommand("onesets");
  v_onesets->add_option("web", web_path)->required();
  auto* v_foam_onesets = app.add_subcommand("foam-onesets");
  v_foam_onesets->add_option("foam", foam_path)->required();
  auto* v_tait = app.add_subcommand("tait");
  v_tait->add_option("web", web_path)->required();
  auto* v_verify = app.add_subcommand("verify-tait");
  v_verify->add_option("web", web_path)->required();
  auto* v_ranks = app.add_subcommand("ranks");
  v_ranks->add_option("web", web_path)->required();
  v_ranks->add_option("--oneset", oneset_index)->required();
  v_ranks->add_option("--flavour", flavour_name);
  auto* v_framed = app.add_subcommand("framed-rank");
  v_framed->add_option("web", web_path)->required();
  v_framed->add_option("--basepoint", basepoint)->required();
  v_framed->add_flag("--restricted", restricted);
  auto* v_vanish = app.add_subcommand("vanishing");
  v_vanish->add_option("web", web_path)->required();
  v_vanish->add_option("--oneset", oneset_index)->required();
  auto* v_algebra = app.add_subcommand("algebra");
  auto* v_nf = v_algebra->add_subcommand("normal-form");
  v_nf->add_option("web", web_path)->required();
  v_nf->add_option("--oneset", oneset_index)->required();
  v_nf->add_option("--expr", expr)->required();
  auto* v_floer = app.add_subcommand("floer");
  auto* v_fcheck = v_floer->add_subcommand("check");
  v_fcheck->add_option("complex", bc_path)->required();
  auto* v_fhom = v_floer->add_subcommand("homology");
  v_fhom->add_option("complex", bc_path)->required();
  v_fhom->add_option("--flavour", flavour_name);
  auto* v_fcone = v_floer->add_subcommand("cone");
  v_fcone->add_option("complex", bc_path)->required();
  auto* v_foam = app.add_subcommand("foam");
  auto* v_findex = v_foam->add_subcommand("index");
  v_findex->add_option("params", params_path)->required();
  auto* v_fbplus = v_foam->add_subcommand("bplus");
  v_fbplus->add_option("params", params_path)->required();
  auto* v_fadm = v_foam->add_subcommand("admissible");
  v_fadm->add_option("params", params_path)->required();
  auto* v_fvortex = v_foam->add_subcommand("vortex");
  v_fvortex->add_option("params", params_path)->required();
  auto* v_fpicard = v_foam->add_subcommand("picard");
  v_fpicard->add_option("params", params_path)->required();
  auto* v_corpus = app.add_subcommand("corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    json out;
    if (*v_validate) {
      WebGraph web = parse_web(slurp(web_path));
      out["valid"] = true;
      out["vertices"] = web.vertex_count();
      out["edges"] = web.edge_count();
    } else if (*v_onesets) {
      WebGraph web = parse_web(slurp(web_path));
      json arr = json::array();
      for (const OneSet& s : enumerate_onesets(web))
        arr.push_back(oneset_json(web, s));
      out["onesets"] = arr;
      out["count"] = arr.size();
    } else if (*v_foam_onesets) {
      FoamSkeleton foam = parse_foam(slurp(foam_path));
      json arr = json::array();
      for (const FoamOneSet& s : enumerate_foam_onesets(foam)) {
        json ids = json::array();
        for (int f : s.c_facets) ids.push_back(foam.facet_ids[f]);
        arr.push_back({{"c_facets", ids}});
      }
      out["onesets"] = arr;
      out["count"] = arr.size();
    } else if (*v_tait) {
      out["tait_count"] = count_tait(parse_web(slurp(web_path)));
    } else if (*v_verify) {
      WebGraph web = parse_web(slurp(web_path));
      TaitReport rep = verify_identity(web);
      out["lhs"] = rep.tait_count;
      out["rhs"] = rep.identity_rhs;
      out["ok"] = rep.ok;
      json evens = json::array();
      for (auto [idx, n] : rep.even_onesets)
        evens.push_back({{"index", idx}, {"n", n}});
      out["even_onesets"] = evens;
    } else if (*v_ranks) {
      WebGraph web = parse_web(slurp(web_path));
      auto onesets = enumerate_onesets(web);
      if (oneset_index < 0 || oneset_index >= static_cast<int>(onesets.size()))
        throw DomainError("oneset index out of range (have " +
                          std::to_string(onesets.size()) + ")");
      HomologyAnswer a =
          wf::homology(web, onesets[oneset_index], flavour_name);
      out["flavour"] = a.flavour.empty() ? flavour_name : a.flavour;
      out["known"] = a.known;
      out["zero"] = a.zero;
      out["total_rank"] = a.total_rank;
      out["spinc_count"] = a.spinc_count;
      out["naive_spinc_count"] = a.naive_spinc_count;
      out["discrepancy"] = a.discrepancy;
      out["provenance"] = a.provenance;
      json summands = json::array();
      for (const auto& s : a.total.summands) {
        const char* shape =
            s.shape == ModuleShape::TowerDown ? "tower_down"
            : s.shape == ModuleShape::TowerUp ? "tower_up"
            : s.shape == ModuleShape::BiTower ? "bi_tower"
            : s.shape == ModuleShape::TowerDownU ? "tower_down_U"
                                                 : "finite";
        summands.push_back({{"shape", shape}, {"offset", s.offset}});
      }
      out["summands"] = summands;
    } else if (*v_framed) {
      WebGraph web = parse_web(slurp(web_path));
      FramedRankResult r = framed_rank(web, basepoint, restricted);
      out["framed_rank"] = r.value;
      if (!r.note.empty()) out["note"] = r.note;
    } else if (*v_vanish) {
      WebGraph web = parse_web(slurp(web_path));
      auto onesets = enumerate_onesets(web);
      if (oneset_index < 0 || oneset_index >= static_cast<int>(onesets.size()))
        throw DomainError("oneset index out of range (have " +
                          std::to_string(onesets.size()) + ")");
      VanishingVerdict v = vanishing_check(web, onesets[oneset_index]);
      out["verdict"] = v.verdict == VanishingVerdict::V::Zero ? "zero"
                       : v.verdict == VanishingVerdict::V::Nonzero
                           ? "nonzero"
                           : "unknown";
      out["rule"] = v.rule == VanishingRule::Bridge       ? "bridge"
                    : v.rule == VanishingRule::ThreePoint ? "three_point"
                    : v.rule == VanishingRule::PscOdd     ? "psc_odd"
                    : v.rule == VanishingRule::Excision   ? "excision"
                                                          : "none";
      if (v.total_rank >= 0) out["total_rank"] = v.total_rank;
    } else if (*v_nf) {
      WebGraph web = parse_web(slurp(web_path));
      auto onesets = enumerate_onesets(web);
      if (oneset_index < 0 || oneset_index >= static_cast<int>(onesets.size()))
        throw DomainError("oneset index out of range (have " +
                          std::to_string(onesets.size()) + ")");
      AlgebraElement e = eval_expr(web, onesets[oneset_index], expr);
      out["normal_form"] = e.str();
      out["zero"] = e.is_zero();
      if (!e.is_zero() && e.homogeneous()) out["degree"] = e.degree();
    } else if (*v_fcheck) {
      BlockComplex bc = block_complex_from_json(json::parse(slurp(bc_path)));
      IdentityReport rep = validate_identities(bc);
      json items = json::array();
      for (const auto& i : rep.items) {
        json it = {{"name", i.name}, {"ok", i.ok}};
        if (!i.ok) it["witness"] = {i.witness_row, i.witness_col};
        items.push_back(it);
      }
      out["identities"] = items;
      out["ok"] = rep.ok();
    } else if (*v_fhom) {
      BlockComplex bc = block_complex_from_json(json::parse(slurp(bc_path)));
      Complex c = build_flavour(bc, flavour_from_name(flavour_name));
      auto [lo, hi] = parse_window(window);
      json dims;
      for (auto [g, d] : wf::homology(c, lo, hi))
        dims[std::to_string(g)] = d;
      out["flavour"] = flavour_name;
      out["dims"] = dims;
    } else if (*v_fcone) {
      json j = json::parse(slurp(bc_path));
      Complex c;
      c.gradings = j.value("gradings", std::vector<int>{});
      int n = static_cast<int>(c.gradings.size());
      c.d = matrix_from_entries(j.value("d", json::array()), n, n, "d");
      GF2Matrix f =
          matrix_from_entries(j.value("f", json::array()), n, n, "f");
      Complex cone = mapping_cone(c, f, j.value("f_degree", -1));
      auto [lo, hi] = parse_window(window);
      json dims;
      int total = 0;
      for (auto [g, d] : wf::homology(cone, lo, hi)) {
        dims[std::to_string(g)] = d;
        total += d;
      }
      out["dims"] = dims;
      out["total_in_window"] = total;
    } else if (*v_findex) {
      json p = json::parse(slurp(params_path));
      FoamIndexInput in;
      in.b1_r = parse_rat(p, "b1_r");
      in.self_int_r = parse_rat(p, "self_int_r");
      in.c1_sq = parse_rat(p, "c1_sq");
      in.sigma = parse_rat(p, "sigma");
      in.c1_dot_c = parse_rat(p, "c1_dot_c");
      in.c_self_int = parse_rat(p, "c_self_int");
      out["dirac_index"] = rat_str(
          dirac_index_bifold(in.c1_sq, in.sigma, in.c1_dot_c, in.c_self_int));
      DimensionResult dim = moduli_dimension(in);
      out["moduli_dimension"] = rat_str(dim.value);
      out["notes"] = dim.notes;
    } else if (*v_fbplus) {
      json p = json::parse(slurp(params_path));
      out["b_plus"] =
          rat_str(b_plus(parse_rat(p, "b1_r"), parse_rat(p, "self_int_r")));
    } else if (*v_fadm) {
      json p = json::parse(slurp(params_path));
      Rat b1 = parse_rat(p, "b1_r"), si = parse_rat(p, "self_int_r");
      out["b_plus"] = rat_str(b_plus(b1, si));
      out["admissible"] = admissible_foam(b1, si);
    } else if (*v_fvortex) {
      json p = json::parse(slurp(params_path));
      VortexModuli v = vortex_moduli(parse_rat(p, "deg_L"),
                                     parse_rat(p, "deg_K"),
                                     p.value("e", 0LL));
      out["kind"] = v.kind == VortexModuli::Kind::Empty ? "empty"
                    : v.kind == VortexModuli::Kind::SymmetricProduct
                        ? "symmetric_product"
                        : "borderline";
      if (v.kind == VortexModuli::Kind::SymmetricProduct) out["e"] = v.e;
    } else if (*v_fpicard) {
      json p = json::parse(slurp(params_path));
      out["member"] = surface_picard_member(
          parse_rat(p, "c"), p.value("betas", std::vector<int>{}));
    } else if (*v_corpus) {
      auto rs = run_corpus();
      out = corpus_json(rs);
      if (format == "text") {
        for (const auto& r : rs)
          std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
        return out["all_pass"].get<bool>() ? 0 : 1;
      }
      std::cout << dump(out);
      return out["all_pass"].get<bool>() ? 0 : 1;
    }

    if (format == "text") {
      std::cout << out.dump(2) << "\n";  // same content, human spacing
    } else {
      std::cout << dump(out);
    }
    return 0;
  } catch (const ParseError& e) {
    json err{{"error", e.what()}, {"id", e.id}, {"offset", e.offset}};
    std::cerr << dump(err);
    return 2;
  } catch (const json::exception& e) {
    std::cerr << dump(json{{"error", e.what()}});
    return 2;
  } catch (const std::exception& e) {
    std::cerr << dump(json{{"error", e.what()}});
    return 1;
  }
}

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "torifan/divisor.hpp"
#include "torifan/error.hpp"
#include "torifan/fan.hpp"
#include "torifan/fan_io.hpp"
#include "torifan/intersection.hpp"
#include "torifan/mmp.hpp"
#include "torifan/singularity.hpp"
#include "torifan/verify.hpp"
#include "torifan/volume.hpp"

using namespace torifan;
using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

std::string ivec_str(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string rats_str(const std::vector<Rat>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

json jarr(const IVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

json jarr(const LatticePoint& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

json jarr(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(json_rat(x));
  return a;
}

// Fans come from a file or from the built-in bundle constructors.
struct FanSource {
  std::string file, alpha, beta, twist;

  Fan resolve() const {
    if (!file.empty()) return load_fan_file(file);
    if (!alpha.empty() || !beta.empty()) {
      if (alpha.empty() || beta.empty())
        fail(Err::BadParameters, "--alpha and --beta go together");
      if (!twist.empty()) fail(Err::BadParameters, "--twist conflicts with --alpha/--beta");
      return bundle_over_p1(parse_int(alpha), parse_int(beta));
    }
    if (!twist.empty()) return bundle_over_p2(parse_int(twist));
    fail(Err::BadParameters, "no fan given: pass a fan file, --alpha/--beta, or --twist");
  }
};

void add_fan_options(CLI::App* cmd, FanSource& src) {
  cmd->add_option("fan", src.file, "fan file: {\"rays\": [[x,y,z],..], \"max_cones\": [[i,j,k],..]}");
  cmd->add_option("--alpha", src.alpha, "use P(O+O(alpha)+O(beta)) over P^1");
  cmd->add_option("--beta", src.beta, "second twist for --alpha");
  cmd->add_option("--twist", src.twist, "use P(O+O(twist)) over P^2");
}

LatticePoint parse_point(const std::string& s) {
  std::vector<std::string> parts = split(s, ',');
  if (parts.size() != 3) fail(Err::ParseError, "--point wants x,y,z");
  return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
}

int ray_id(const Fan& f, const std::string& tok) {
  bool numeric = !tok.empty();
  for (char ch : tok) numeric = numeric && ch >= '0' && ch <= '9';
  if (numeric) {
    int v = std::stoi(tok);
    if (v >= static_cast<int>(f.rays.size()))
      fail(Err::BadParameters, "ray index out of range: " + tok);
    return v;
  }
  int idx = f.ray_index(tok);
  if (idx < 0) fail(Err::BadParameters, "unknown ray: " + tok);
  return idx;
}

Wall find_wall(const Fan& f, const std::string& spec) {
  std::vector<std::string> parts = split(spec, ',');
  if (parts.size() != 2) fail(Err::BadParameters, "--wall wants two rays: i,j");
  int a = ray_id(f, parts[0]), b = ray_id(f, parts[1]);
  if (a > b) std::swap(a, b);
  for (const Wall& w : walls(f))
    if (w.rays[0] == a && w.rays[1] == b) return w;
  fail(Err::BadParameters, "no wall on rays " + std::to_string(a) + "," + std::to_string(b));
}

int flip_cap() {
  const char* env = std::getenv("TORIFAN_MAX_FLIPS");
  if (!env) return 64;
  Int v = parse_int(env);
  if (v < 1 || v > 100000) fail(Err::BadParameters, "TORIFAN_MAX_FLIPS out of range");
  return static_cast<int>(v.get_si());
}

int cmd_info(const Fan& f, bool as_json) {
  bool smooth = is_smooth(f);
  int rho = class_group_rank(f);
  bool terminal = is_terminal(f).ok;
  bool canonical = is_canonical(f).ok;
  Int kindex = cartier_index(f, canonical_divisor(f));
  std::string vol = "n/a";
  json jvol;
  if (f.complete) {
    try {
      Rat v = anticanonical_volume(f);
      vol = to_string(v);
      jvol = json_rat(v);
    } catch (const Error& e) {
      vol = std::string("n/a (") + err_name(e.code()) + ")";
    }
  }

  if (as_json) {
    json j;
    j["rays"] = json::array();
    for (const auto& r : f.rays) j["rays"].push_back(jarr(r));
    j["names"] = f.names;
    j["cones"] = json::array();
    for (const Cone& c : f.cones)
      j["cones"].push_back({{"rays", {c.rays[0], c.rays[1], c.rays[2]}}, {"mult", json_int(c.mult)}});
    j["complete"] = f.complete;
    j["smooth"] = smooth;
    j["rho"] = rho;
    j["terminal"] = terminal;
    j["canonical"] = canonical;
    j["k_cartier_index"] = json_int(kindex);
    j["antik_volume"] = jvol;
    j["warnings"] = f.warnings;
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "rays (" << f.rays.size() << "):\n";
  for (size_t i = 0; i < f.rays.size(); ++i) {
    std::cout << "  [" << i << "] " << to_string(f.rays[i]);
    if (!f.names[i].empty()) std::cout << " " << f.names[i];
    std::cout << "\n";
  }
  std::cout << "maximal cones (" << f.cones.size() << "):\n";
  for (size_t i = 0; i < f.cones.size(); ++i) {
    const Cone& c = f.cones[i];
    std::cout << "  [" << i << "] {" << c.rays[0] << "," << c.rays[1] << "," << c.rays[2]
              << "} mult " << to_string(c.mult) << "\n";
  }
  for (const std::string& w : f.warnings) std::cout << "warning: " << w << "\n";
  std::cout << "complete: " << (f.complete ? "yes" : "no") << "\n";
  std::cout << "smooth: " << (smooth ? "yes" : "no") << "\n";
  std::cout << "rho: " << rho << "\n";
  std::cout << "terminal: " << (terminal ? "yes" : "no") << "\n";
  std::cout << "canonical: " << (canonical ? "yes" : "no") << "\n";
  std::cout << "k cartier index: " << to_string(kindex)
            << (kindex == 1 ? " (gorenstein)" : "") << "\n";
  std::cout << "-K^3: " << vol << "\n";
  return 0;
}

int cmd_flip(const Fan& f, const std::string& wall_spec, bool as_json) {
  Fan g = flip(f, find_wall(f, wall_spec));
  std::cout << fan_to_json(g).dump(as_json ? -1 : 2) << "\n";
  return 0;
}

int cmd_mori(const Fan& f, bool as_json) {
  MoriCone mc = mori_cone(f);
  std::vector<Wall> ws = walls(f);
  std::vector<RayClassification> cls;
  for (const MoriRay& r : mc.rays) cls.push_back(classify_ray(f, r.representative));
  TorusDivisor k = canonical_divisor(f);

  if (as_json) {
    json j;
    j["basis"] = json::array();
    for (const IVec& b : mc.basis) j["basis"].push_back(jarr(b));
    j["pointed"] = mc.pointed;
    j["rays"] = json::array();
    for (size_t i = 0; i < mc.rays.size(); ++i) {
      json walls_j = json::array();
      for (int wi : mc.rays[i].walls) walls_j.push_back({ws[wi].rays[0], ws[wi].rays[1]});
      j["rays"].push_back({{"coords", jarr(mc.rays[i].coords)},
                           {"type", cls[i].type_label},
                           {"kind", ray_kind_name(cls[i].kind)},
                           {"k_dot", json_rat(dot(k, mc.rays[i].representative))},
                           {"walls", walls_j}});
    }
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "curve basis (rho=" << mc.basis.size() << "):\n";
  for (size_t i = 0; i < mc.basis.size(); ++i)
    std::cout << "  [" << i << "] " << ivec_str(mc.basis[i]) << "\n";
  std::cout << "pointed: " << (mc.pointed ? "yes" : "no") << "\n";
  std::cout << "extremal rays (" << mc.rays.size() << "):\n";
  for (size_t i = 0; i < mc.rays.size(); ++i) {
    std::cout << "  " << ivec_str(mc.rays[i].coords) << ": type " << cls[i].type_label << ", K.C "
              << to_string(dot(k, mc.rays[i].representative)) << ", walls";
    for (int wi : mc.rays[i].walls)
      std::cout << " tau(" << ws[wi].rays[0] << "," << ws[wi].rays[1] << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_nef(const Fan& f, bool as_json) {
  NefCone nc = nef_cone(f);
  if (as_json) {
    json j;
    j["full_dimensional"] = nc.full_dimensional;
    j["generators"] = json::array();
    j["lifts"] = json::array();
    for (const IVec& g : nc.generators) j["generators"].push_back(jarr(g));
    for (const TorusDivisor& d : nc.lifts) j["lifts"].push_back(jarr(d.coeff));
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "full dimensional: " << (nc.full_dimensional ? "yes" : "no") << "\n";
  std::cout << "generators (" << nc.generators.size() << "):\n";
  for (size_t i = 0; i < nc.generators.size(); ++i)
    std::cout << "  " << ivec_str(nc.generators[i]) << " lift " << rats_str(nc.lifts[i].coeff)
              << "\n";
  return 0;
}

int cmd_verdict(const Fan& f, bool canonical_mode, bool as_json) {
  SingularityVerdict v = canonical_mode ? is_canonical(f) : is_terminal(f);
  const char* key = canonical_mode ? "canonical" : "terminal";
  if (as_json) {
    json j;
    j[key] = v.ok;
    if (v.witness)
      j["witness"] = {{"point", jarr(v.witness->point)},
                      {"discrepancy", json_rat(v.witness->value)},
                      {"cone", v.witness->cone}};
    else
      j["witness"] = nullptr;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << key << ": " << (v.ok ? "yes" : "no") << "\n";
  if (v.witness)
    std::cout << "witness: " << to_string(v.witness->point) << " discrepancy "
              << to_string(v.witness->value) << " (cone " << v.witness->cone << ")\n";
  return 0;
}

int cmd_discrepancy(const Fan& f, const std::string& point, bool as_json) {
  LatticePoint w = parse_point(point);
  DiscrepancyReport r = discrepancy(f, w);
  if (as_json) {
    json j{{"point", jarr(r.point)}, {"discrepancy", json_rat(r.value)}, {"cone", r.cone}};
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "discrepancy at " << to_string(r.point) << ": " << to_string(r.value) << " (cone "
            << r.cone << ")\n";
  return 0;
}

int cmd_volume(const Fan& f, bool as_json) {
  Rat v = anticanonical_volume(f);
  if (as_json) {
    std::cout << json{{"antik_volume", json_rat(v)}}.dump() << "\n";
    return 0;
  }
  std::cout << "-K^3 = " << to_string(v) << "\n";
  return 0;
}

json side_json(const SideReport& s) {
  json steps = json::array();
  for (const GameStep& st : s.steps)
    steps.push_back({{"wall", {st.flipped.rays[0], st.flipped.rays[1]}},
                     {"volume", json_rat(st.volume)},
                     {"terminal", st.terminal},
                     {"fan", fan_to_json(st.fan)}});
  return {{"ray", jarr(s.start_ray)},
          {"steps", steps},
          {"end",
           {{"type", s.end.type_label},
            {"kind", ray_kind_name(s.end.kind)},
            {"k_sign", s.end.k_sign},
            {"base_dim", s.end.base_dim},
            {"image_dim", s.end.image_dim},
            {"contracted_ray", s.end.contracted_ray}}}};
}

void print_side(const char* label, const SideReport& s) {
  std::cout << label << " ray " << ivec_str(s.start_ray) << ":\n";
  for (size_t i = 0; i < s.steps.size(); ++i) {
    const GameStep& st = s.steps[i];
    std::cout << "  step " << i + 1 << ": flip tau(" << st.flipped.rays[0] << ","
              << st.flipped.rays[1] << ") -> -K^3 = " << to_string(st.volume) << ", terminal "
              << (st.terminal ? "yes" : "no") << "\n";
  }
  std::cout << "  end: type " << s.end.type_label << " (" << ray_kind_name(s.end.kind) << ")";
  if (s.end.kind == RayKind::Fiber) std::cout << ", base dim " << s.end.base_dim;
  if (s.end.kind == RayKind::Divisorial)
    std::cout << ", image dim " << s.end.image_dim << ", contracts ray " << s.end.contracted_ray;
  std::cout << "\n";
}

int cmd_tworay(const Fan& f, bool as_json) {
  TwoRayGameReport rep = two_ray_game(f, flip_cap());
  if (as_json) {
    json j{{"start", {{"volume", json_rat(rep.start_volume)}, {"terminal", rep.start_terminal}}},
           {"left", side_json(rep.left)},
           {"right", side_json(rep.right)}};
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "start: -K^3 = " << to_string(rep.start_volume) << ", terminal "
            << (rep.start_terminal ? "yes" : "no") << "\n";
  print_side("left", rep.left);
  print_side("right", rep.right);
  return 0;
}

int cmd_verify(const std::string& only, bool as_json) {
  std::vector<CheckResult> rows = run_checks(only);
  int pass = 0, failed = 0, audit = 0;
  for (const CheckResult& r : rows) {
    if (r.status == CheckStatus::Pass) ++pass;
    if (r.status == CheckStatus::Fail) ++failed;
    if (r.status == CheckStatus::Audit) ++audit;
  }
  if (as_json) {
    json j = json::array();
    for (const CheckResult& r : rows)
      j.push_back({{"id", r.id},
                   {"group", r.group},
                   {"expected", r.expected},
                   {"computed", r.computed},
                   {"status", status_name(r.status)},
                   {"citation", r.citation}});
    std::cout << j.dump() << "\n";
  } else {
    for (const CheckResult& r : rows) {
      std::cout << "[" << status_name(r.status) << "] " << r.id << ": expected " << r.expected
                << ", computed " << r.computed << "\n";
      if (r.status != CheckStatus::Pass) std::cout << "        note: " << r.citation << "\n";
    }
    std::cout << "checks: " << rows.size() << " total, " << pass << " pass, " << failed
              << " fail, " << audit << " audit\n";
  }
  return failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact intersection theory, singularities, and flips for simplicial toric threefolds"};
  app.require_subcommand(1);

  FanSource info_src, flip_src, mori_src, nef_src, term_src, canon_src, disc_src, vol_src,
      tworay_src;
  bool info_json = false, flip_json = false, mori_json = false, nef_json = false,
       term_json = false, canon_json = false, disc_json = false, vol_json = false,
       tworay_json = false, verify_json = false;
  std::string flip_wall, disc_point, verify_only;

  CLI::App* info = app.add_subcommand("info", "rays, cones, invariants, -K^3");
  add_fan_options(info, info_src);
  info->add_flag("--json", info_json, "machine-readable output");

  CLI::App* flp = app.add_subcommand("flip", "bistellar flip across a wall");
  add_fan_options(flp, flip_src);
  flp->add_option("--wall", flip_wall, "wall rays i,j (indices or names)")->required();
  flp->add_flag("--json", flip_json, "compact JSON output");

  CLI::App* mori = app.add_subcommand("mori", "Mori cone with extremal-ray types");
  add_fan_options(mori, mori_src);
  mori->add_flag("--json", mori_json, "machine-readable output");

  CLI::App* nef = app.add_subcommand("nef", "nef cone generators and lifts");
  add_fan_options(nef, nef_src);
  nef->add_flag("--json", nef_json, "machine-readable output");

  CLI::App* term = app.add_subcommand("terminal", "terminality by simplex enumeration");
  add_fan_options(term, term_src);
  term->add_flag("--json", term_json, "machine-readable output");

  CLI::App* canon = app.add_subcommand("canonical", "canonicity by simplex enumeration");
  add_fan_options(canon, canon_src);
  canon->add_flag("--json", canon_json, "machine-readable output");

  CLI::App* disc = app.add_subcommand("discrepancy", "discrepancy of the blow-up at a point");
  add_fan_options(disc, disc_src);
  disc->add_option("--point", disc_point, "primitive lattice point x,y,z")->required();
  disc->add_flag("--json", disc_json, "machine-readable output");

  CLI::App* vol = app.add_subcommand("volume", "anticanonical volume (-K)^3");
  add_fan_options(vol, vol_src);
  vol->add_flag("--json", vol_json, "machine-readable output");

  CLI::App* tworay = app.add_subcommand("tworay", "two-ray game on a rank-2 fan");
  add_fan_options(tworay, tworay_src);
  tworay->add_flag("--json", tworay_json, "machine-readable output");

  CLI::App* verify = app.add_subcommand("verify-paper", "run the golden checklist");
  verify->add_option("--only", verify_only, "restrict to one group");
  verify->add_flag("--json", verify_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(info_src.resolve(), info_json);
    if (flp->parsed()) return cmd_flip(flip_src.resolve(), flip_wall, flip_json);
    if (mori->parsed()) return cmd_mori(mori_src.resolve(), mori_json);
    if (nef->parsed()) return cmd_nef(nef_src.resolve(), nef_json);
    if (term->parsed()) return cmd_verdict(term_src.resolve(), false, term_json);
    if (canon->parsed()) return cmd_verdict(canon_src.resolve(), true, canon_json);
    if (disc->parsed()) return cmd_discrepancy(disc_src.resolve(), disc_point, disc_json);
    if (vol->parsed()) return cmd_volume(vol_src.resolve(), vol_json);
    if (tworay->parsed()) return cmd_tworay(tworay_src.resolve(), tworay_json);
    if (verify->parsed()) return cmd_verify(verify_only, verify_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

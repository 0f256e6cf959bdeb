// Command-line interface: exact lattice-point counts, Ehrhart
// quasi-polynomials, discrete moments, lattice-flow data, and the full
// identity verification suite, over polytopes given as JSON vertex lists.
//
// Exit codes: 0 success / all identities pass, 1 identity failure or
// formula-vs-oracle mismatch, 2 input or usage error, 3 resource guard.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehrhart/barnes.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/moments.hpp"
#include "ehrhart/oracle.hpp"
#include "ehrhart/polytope_io.hpp"
#include "ehrhart/verify.hpp"

using nlohmann::ordered_json;

namespace {

using namespace ehrhart;

struct CommonOpts {
  std::string input;
  std::uint64_t seed = 1;
  int threads = 1;
  int decimal = 0;
  std::optional<std::string> z_text;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EHRHART_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw InputError("EHRHART_SEED is not an unsigned integer");
    }
  }
  return 1;
}

Rational parse_rational(const std::string& s) { return Rational::from_string(s); }

IntVec parse_int_vector(const std::string& s) {
  IntVec z;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) throw InputError("empty coordinate in vector literal");
      try {
        z.emplace_back(cur);
      } catch (const std::invalid_argument&) {
        throw InputError("malformed integer literal: " + cur);
      }
      cur.clear();
    } else {
      cur += c;
    }
  }
  return z;
}

RatVec parse_rational_vector(const std::string& s) {
  RatVec a;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) throw InputError("empty coordinate in vector literal");
      a.push_back(Rational::from_string(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return a;
}

IntVec resolve_z(const Polytope& p, const CommonOpts& common) {
  if (common.z_text) {
    IntVec z = parse_int_vector(*common.z_text);
    require_generic(p, z);
    return z;
  }
  return pick_generic_z(p, common.seed).z;
}

ordered_json z_json(const IntVec& z) {
  ordered_json out = ordered_json::array();
  for (const Int& c : z) out.push_back(c.get_str());
  return out;
}

ordered_json coefficients_json(const Polynomial& poly, int degree_hint) {
  ordered_json out = ordered_json::array();
  int top = std::max(degree_hint, poly.degree());
  for (int k = 0; k <= top; ++k) out.push_back(poly.coefficient(k).str());
  return out;
}

void human_note(const CommonOpts& common, const std::string& label, const Rational& v) {
  if (common.decimal > 0)
    std::cerr << label << " ~ " << v.decimal(common.decimal) << "\n";
}

ordered_json report_json(const IdentityReport& r) {
  ordered_json j;
  j["identity"] = r.name;
  j["params"] = r.params;
  j["computed"] = r.computed;
  j["expected"] = r.expected;
  j["pass"] = r.pass;
  return j;
}

int cmd_count(const CommonOpts& common, const std::string& t_text) {
  Polytope p = polytope_from_json_file(common.input);
  Rational t = parse_rational(t_text);
  IntVec z = resolve_z(p, common);
  Rational count = count_via_barnes(p, t, z, {common.threads});
  ordered_json out;
  out["t"] = t.str();
  out["count"] = count.str();
  out["z"] = z_json(z);
  std::cout << out.dump() << "\n";
  human_note(common, "count", count);
  return 0;
}

int cmd_ehrhart(const CommonOpts& common, bool poly_mode) {
  Polytope p = polytope_from_json_file(common.input);
  IntVec z = resolve_z(p, common);
  if (poly_mode) {
    Polynomial poly = ehrhart_polynomial_integer(p, z, {common.threads});
    ordered_json out;
    out["period"] = 1;
    out["coefficients"] = coefficients_json(poly, p.dim());
    std::cout << out.dump() << "\n";
    return 0;
  }
  QuasiPolynomial q = integer_quasipolynomial(p, z, {common.threads});
  ordered_json pieces = ordered_json::array();
  for (unsigned long rho = 0; rho < q.period(); ++rho) {
    ordered_json piece;
    piece["residue"] = rho;
    piece["coefficients"] = coefficients_json(q.piece(rho), p.dim());
    pieces.push_back(std::move(piece));
  }
  ordered_json out;
  out["period"] = q.period();
  out["pieces"] = std::move(pieces);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_moments(const CommonOpts& common, unsigned long m, const std::string& t_text) {
  Polytope p = polytope_from_json_file(common.input);
  Rational t = parse_rational(t_text);
  IntVec z = resolve_z(p, common);
  Rational value = polytope_moment(p, m, t, z, {common.threads});
  ordered_json coeffs = ordered_json::array();
  for (unsigned long r = 0; r <= static_cast<unsigned long>(p.dim()) + m; ++r)
    coeffs.push_back(moment_coefficient_d_r(p, m, r, t, z, {common.threads}).str());
  ordered_json out;
  out["m"] = m;
  out["t"] = t.str();
  out["moment"] = value.str();
  out["z"] = z_json(z);
  out["coefficients"] = std::move(coeffs);
  std::cout << out.dump() << "\n";
  human_note(common, "moment", value);
  return 0;
}

int cmd_verify(const CommonOpts& common, const std::string& t_text,
               const std::string& seeds_text) {
  Polytope p = polytope_from_json_file(common.input);
  VerifyConfig cfg;
  cfg.t = parse_rational(t_text);
  cfg.threads = common.threads;
  if (!seeds_text.empty()) {
    cfg.seeds.clear();
    for (const Int& s : parse_int_vector(seeds_text)) {
      if (sgn(s) < 0 || !s.fits_ulong_p()) throw InputError("seeds must be small nonnegative");
      cfg.seeds.push_back(s.get_ui());
    }
  }
  auto reports = run_verify_suite(p, cfg);
  bool all_pass = true;
  ordered_json out = ordered_json::array();
  for (const auto& r : reports) {
    if (!r.pass) all_pass = false;
    out.push_back(report_json(r));
  }
  std::cout << out.dump() << "\n";
  std::cerr << (all_pass ? "verify: all " : "verify: FAILURES among ") << reports.size()
            << " identity reports\n";
  return all_pass ? 0 : 1;
}

int cmd_barnes(unsigned long k, const std::string& a_text) {
  RatVec a = parse_rational_vector(a_text);
  Polynomial poly = barnes_polynomial(k, a);
  ordered_json out;
  out["k"] = k;
  ordered_json aj = ordered_json::array();
  for (const Rational& x : a) aj.push_back(x.str());
  out["a"] = std::move(aj);
  out["coefficients"] = coefficients_json(poly, static_cast<int>(k));
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_flow(const CommonOpts& common, int vertex, const std::string& t_start_text,
             const std::string& t_end_text, long steps, const std::string& out_path) {
  Polytope p = polytope_from_json_file(common.input);
  if (vertex < 0 || vertex >= p.vertex_count()) throw InputError("vertex index out of range");
  Rational t0 = parse_rational(t_start_text);
  Rational t1 = parse_rational(t_end_text);
  if (t0.sign() < 0 || t1 < t0) throw InputError("flow needs 0 <= t-start <= t-end");
  if (steps < 0) throw InputError("steps must be nonnegative");

  std::ofstream csv(out_path);
  if (!csv) throw InputError("cannot open output file: " + out_path);
  csv << "t,point_index";
  for (int i = 1; i <= p.dim(); ++i) csv << ",x" << i;
  csv << "\n";
  long rows = 0;
  for (long j = 0; j <= steps; ++j) {
    Rational t = (steps == 0)
                     ? t0
                     : t0 + Rational(j) * (t1 - t0) / Rational(steps);
    auto points = flow_positions_tracked(p.cone(vertex), t);
    for (std::size_t i = 0; i < points.size(); ++i) {
      csv << t.str() << "," << i;
      for (const Rational& c : points[i]) csv << "," << c.str();
      csv << "\n";
      ++rows;
    }
  }
  ordered_json out;
  out["out"] = out_path;
  out["rows"] = rows;
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_orbits(const CommonOpts& common, int vertex) {
  Polytope p = polytope_from_json_file(common.input);
  if (vertex < 0 || vertex >= p.vertex_count()) throw InputError("vertex index out of range");
  auto orbits = flow_orbits(p.cone(vertex));
  ordered_json lengths = ordered_json::array();
  for (const auto& o : orbits) lengths.push_back(o.length());
  ordered_json out;
  out["vertex"] = vertex;
  out["orbit_count"] = orbits.size();
  out["lengths"] = std::move(lengths);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_oracle(const CommonOpts& common, const std::string& t_text, bool open,
               std::optional<unsigned long> m) {
  Polytope p = polytope_from_json_file(common.input);
  Rational t = parse_rational(t_text);
  ordered_json out;
  out["t"] = t.str();
  if (m) {
    if (!common.z_text) throw InputError("oracle moments need --z");
    IntVec z = parse_int_vector(*common.z_text);
    out["m"] = *m;
    out["moment"] = oracle::brute_moment(p, t, z, *m).str();
  } else {
    out["open"] = open;
    out["count"] = oracle::brute_count(p, t, open).get_str();
  }
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ehrhart quasi-polynomials and discrete moments of simple rational "
               "polytopes, with a built-in identity verification suite"};
  app.require_subcommand(1);

  CommonOpts common;
  try {
    common.seed = default_seed();
  } catch (const ehrhart::InputError& e) {
    std::cerr << ordered_json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  std::string t_text = "1", seeds_text, a_text, z_text;
  std::string t_start_text = "0", t_end_text = "1", out_path = "flow.csv";
  unsigned long k = 0, m = 1;
  int vertex = 0;
  long steps = 0;
  bool poly_mode = false, quasi_mode = false, open_mode = false;
  bool has_z = false, has_m = false;

  auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
    if (needs_input)
      cmd->add_option("--input", common.input, "polytope JSON file")->required();
    cmd->add_option("--seed", common.seed, "seed for the generic direction");
    cmd->add_option("--threads", common.threads, "worker threads for vertex sums");
    cmd->add_option("--decimal", common.decimal,
                    "also log decimal approximations (stderr only)");
  };

  auto* count = app.add_subcommand("count", "count |tP ∩ Z^d| via the vertex formula");
  add_common(count);
  count->add_option("--t", t_text, "dilation factor, rational p/q")->required();
  count->add_option("--z", z_text, "explicit integer direction c1,c2,...");

  auto* ehr = app.add_subcommand("ehrhart", "counting quasi-polynomial / polynomial");
  add_common(ehr);
  ehr->add_flag("--poly", poly_mode, "single polynomial (integer polytopes)");
  ehr->add_flag("--quasi", quasi_mode, "per-residue quasi-polynomial (default)");

  auto* mom = app.add_subcommand("moments", "discrete moment of a dilate and its coefficients");
  add_common(mom);
  mom->add_option("--m", m, "moment order (>= 1)")->required();
  mom->add_option("--t", t_text, "dilation factor, rational p/q")->required();
  mom->add_option("--z", z_text, "explicit integer direction c1,c2,...");

  auto* ver = app.add_subcommand("verify", "run the full identity suite");
  add_common(ver);
  ver->add_option("--t", t_text, "base dilation for the suite");
  ver->add_option("--seeds", seeds_text, "comma-separated seeds (default 1,2,3)");

  auto* bar = app.add_subcommand("barnes", "Barnes polynomial coefficients");
  bar->add_option("--k", k, "polynomial index")->required();
  bar->add_option("--a", a_text, "nonzero rationals p1/q1,p2/q2,...")->required();

  auto* flow = app.add_subcommand("flow", "emit lattice-flow positions as CSV");
  add_common(flow);
  flow->add_option("--vertex", vertex, "vertex index")->required();
  flow->add_option("--t-start", t_start_text, "range start (rational, >= 0)")->required();
  flow->add_option("--t-end", t_end_text, "range end (rational)")->required();
  flow->add_option("--steps", steps, "number of steps (N+1 samples)")->required();
  flow->add_option("--out", out_path, "output CSV path")->required();

  auto* orb = app.add_subcommand("orbits", "closed-geodesic orbits of the integer-time flow");
  add_common(orb);
  orb->add_option("--vertex", vertex, "vertex index")->required();

  auto* ora = app.add_subcommand("oracle", "brute-force count or moment");
  add_common(ora);
  ora->add_option("--t", t_text, "dilation factor, rational p/q")->required();
  ora->add_flag("--open", open_mode, "count interior points");
  auto* ora_m = ora->add_option("--m", m, "moment order");
  ora->add_option("--z", z_text, "integer direction for moments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << ordered_json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  has_z = !z_text.empty();
  if (has_z) common.z_text = z_text;
  has_m = ora_m->count() > 0;

  try {
    if (app.got_subcommand(count)) return cmd_count(common, t_text);
    if (app.got_subcommand(ehr)) {
      if (poly_mode && quasi_mode) throw ehrhart::InputError("--poly and --quasi conflict");
      return cmd_ehrhart(common, poly_mode);
    }
    if (app.got_subcommand(mom)) return cmd_moments(common, m, t_text);
    if (app.got_subcommand(ver)) return cmd_verify(common, t_text, seeds_text);
    if (app.got_subcommand(bar)) return cmd_barnes(k, a_text);
    if (app.got_subcommand(flow))
      return cmd_flow(common, vertex, t_start_text, t_end_text, steps, out_path);
    if (app.got_subcommand(orb)) return cmd_orbits(common, vertex);
    if (app.got_subcommand(ora))
      return cmd_oracle(common, t_text, open_mode,
                        has_m ? std::optional<unsigned long>(m) : std::nullopt);
    throw ehrhart::InputError("no subcommand given");
  } catch (const ehrhart::ResourceError& e) {
    std::cerr << ordered_json{{"error", "resource"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const ehrhart::InternalConsistencyError& e) {
    std::cerr << ordered_json{{"error", "consistency"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const ehrhart::InputError& e) {
    std::cerr << ordered_json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const ehrhart::Error& e) {
    std::cerr << ordered_json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << ordered_json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

#include "ehrhart/verify.hpp"

#include <sstream>

#include "ehrhart/barnes.hpp"
#include "ehrhart/combinatorics.hpp"
#include "ehrhart/oracle.hpp"

namespace ehrhart {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t x = (state += 0x9e3779b97f4a7c15ull);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic nonzero integer vector for the cube identities.
IntVec nonzero_direction(int dim, std::uint64_t seed) {
  std::uint64_t state = seed;
  IntVec z(dim);
  for (int i = 0; i < dim; ++i) {
    long c = 0;
    while (c == 0) c = static_cast<long>(splitmix64(state) % 41ull) - 20;
    z[i] = c;
  }
  return z;
}

std::string tag(const Rational& t, std::uint64_t seed) {
  std::ostringstream os;
  os << "t=" << t.str() << ",seed=" << seed;
  return os.str();
}

// Weighted parallelepiped point sums over all vertices:
//   sum_v <v,z>^{m-1} / prod_k a_k * sum_{p in Pi_v} <p,z>
//     = 1/2 sum_v <v,z>^{m-1} vol(Pi_v) (sum_k a_k) / (prod_k a_k),
// for integer polytopes; m = 1 is the plain balance without the weight.
IdentityReport moment_balance(const Polytope& p, unsigned long m, const IntVec& z,
                              std::uint64_t seed) {
  const int d = p.dim();
  Rational lhs, rhs;
  for (int vi = 0; vi < p.vertex_count(); ++vi) {
    const VertexCone& cone = p.cone(vi);
    RatVec a = linear_forms(cone, z);
    Rational prod(1), sum;
    for (const Rational& ai : a) {
      prod *= ai;
      sum += ai;
    }
    Rational weight = dot(p.vertex(vi), z).pow(static_cast<long>(m) - 1);
    Rational point_sum;
    for (const IntVec& q :
         enumerate_shifted_parallelepiped(cone, RatVec(d, Rational(0))))
      point_sum += Rational(dot(q, z));
    lhs += weight * point_sum / prod;
    rhs += weight * Rational(cone.volume()) * sum / prod;
  }
  return make_report("moment-balance",
                     "m=" + std::to_string(m) + ",r=" + std::to_string(m - 1) +
                         ",seed=" + std::to_string(seed),
                     lhs - Rational(1, 2) * rhs, Rational(0));
}

// sum_v <v,z>^m vol(Pi_v) / prod_k a_k = 0 for m = 0..d-1.
IdentityReport vertex_volume_balance(const Polytope& p, unsigned long m, const IntVec& z,
                                     std::uint64_t seed) {
  Rational total;
  for (int vi = 0; vi < p.vertex_count(); ++vi) {
    const VertexCone& cone = p.cone(vi);
    Rational prod(1);
    for (const Rational& ai : linear_forms(cone, z)) prod *= ai;
    total += dot(p.vertex(vi), z).pow(static_cast<long>(m)) * Rational(cone.volume()) / prod;
  }
  return make_report("vertex-volume-balance",
                     "m=" + std::to_string(m) + ",seed=" + std::to_string(seed), total,
                     Rational(0));
}

}  // namespace

std::vector<IdentityReport> run_verify_suite(const Polytope& p, const VerifyConfig& cfg) {
  std::vector<IdentityReport> reports;
  const int d = p.dim();
  const Rational t = cfg.t;
  const RatVec t_grid = {t, t + Rational(1, 2), t + Rational(5, 3)};
  const EvalOptions opts{cfg.threads};

  for (std::uint64_t seed : cfg.seeds) {
    IntVec z = pick_generic_z(p, seed).z;

    for (const Rational& tv : t_grid)
      for (auto& rep : vanishing_identities(p, tv, z)) {
        rep.params += ",seed=" + std::to_string(seed);
        reports.push_back(std::move(rep));
      }

    for (const Rational& tv : {t, t + Rational(1)}) {
      Rational formula = count_via_barnes(p, tv, z, opts);
      reports.push_back(make_report("count-vs-oracle", tag(tv, seed), formula,
                                    Rational(oracle::brute_count(p, tv))));
      Rational recon;
      for (int r = 0; r <= d; ++r)
        recon += coefficient_c_r(p, r, tv, z, opts) * tv.pow(r);
      reports.push_back(
          make_report("coefficient-reconstruction", tag(tv, seed), recon, formula));

      Rational open_formula = open_count(p, tv, z, opts);
      reports.push_back(make_report("open-count-vs-oracle", tag(tv, seed), open_formula,
                                    Rational(oracle::brute_count(p, tv, /*open=*/true))));
    }

    for (unsigned long m : {1ul, 2ul}) {
      Rational formula = polytope_moment(p, m, t, z, opts);
      reports.push_back(make_report("moment-vs-oracle",
                                    "m=" + std::to_string(m) + "," + tag(t, seed), formula,
                                    oracle::brute_moment(p, t, z, m)));
      Rational recon;
      for (unsigned long r = 0; r <= static_cast<unsigned long>(d) + m; ++r)
        recon += moment_coefficient_d_r(p, m, r, t, z, opts) * t.pow(static_cast<long>(r));
      reports.push_back(make_report("moment-reconstruction",
                                    "m=" + std::to_string(m) + "," + tag(t, seed), recon,
                                    formula));
    }

    if (p.is_integer()) {
      auto rep = constant_term_identity(p, z);
      rep.params = "seed=" + std::to_string(seed);
      reports.push_back(std::move(rep));

      auto hollow = is_hollow(p, {z});
      Int interior = oracle::brute_count(p, Rational(1), /*open=*/true);
      IdentityReport hrep;
      hrep.name = "hollow-vs-oracle";
      hrep.params = "seed=" + std::to_string(seed);
      hrep.computed = hollow.hollow ? "hollow" : "not hollow";
      hrep.expected = (interior == 0) ? "hollow" : "not hollow";
      hrep.pass = hollow.hollow == (interior == 0);
      reports.push_back(std::move(hrep));

      for (unsigned long m = 1; m + 1 <= static_cast<unsigned long>(d); ++m)
        reports.push_back(moment_balance(p, m, z, seed));
      for (unsigned long m = 0; m + 1 <= static_cast<unsigned long>(d); ++m)
        reports.push_back(vertex_volume_balance(p, m, z, seed));
    }

    if (is_smooth(p)) {
      for (auto& rep : smooth_identities(p, z)) {
        rep.params += (rep.params.empty() ? "" : ",");
        rep.params += "seed=" + std::to_string(seed);
        reports.push_back(std::move(rep));
      }
      for (long ti = 1; ti <= 2; ++ti) {
        Rational tv(ti);
        reports.push_back(make_report("smooth-count", tag(tv, seed),
                                      count_smooth(p, tv, z),
                                      count_via_barnes(p, tv, z, opts)));
        reports.push_back(make_report("smooth-moment", "m=1," + tag(tv, seed),
                                      smooth_moment(p, 1, tv, z),
                                      polytope_moment(p, 1, tv, z, opts)));
      }
    }

    {
      Rational vol = volume_via_brion(p, z);
      reports.push_back(make_report("volume-identity", "seed=" + std::to_string(seed), vol,
                                    coefficient_c_r(p, d, t, z, opts)));
    }

    for (unsigned long m : {0ul, 1ul}) {
      auto rep = ode_check(p, m, z, t, t + Rational(1));
      rep.params += ",seed=" + std::to_string(seed);
      reports.push_back(std::move(rep));
    }
  }

  for (int dim = 1; dim <= 3; ++dim)
    for (unsigned long j = 0; j <= static_cast<unsigned long>(dim); ++j)
      for (std::uint64_t seed : cfg.seeds)
        reports.push_back(hypercube_barnes_identity(dim, j, nonzero_direction(dim, seed)));

  reports.push_back(z_independence_check(p, t, cfg.seeds));
  return reports;
}

}  // namespace ehrhart

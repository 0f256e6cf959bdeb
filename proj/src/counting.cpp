#include "ehrhart/counting.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "ehrhart/barnes.hpp"
#include "ehrhart/combinatorics.hpp"

namespace ehrhart {

namespace {

// splitmix64: tiny, portable, deterministic across platforms.
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t x = (state += 0x9e3779b97f4a7c15ull);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Rational sign_over_factorial(int dim) {
  Rational s = Rational(1) / Rational(factorial(dim));
  return (dim % 2 == 0) ? s : -s;
}

template <typename F>
Rational sum_over_vertices(const Polytope& p, int threads, F&& per_vertex) {
  const int n = p.vertex_count();
  std::vector<Rational> parts(n);
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) parts[i] = per_vertex(i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int i; (i = next.fetch_add(1)) < n;) parts[i] = per_vertex(i);
    };
    std::vector<std::thread> pool;
    int count = std::min(threads, n);
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  Rational total;
  for (const auto& x : parts) total += x;
  return total;
}

Rational require_integer(const Rational& value, const char* what) {
  if (!value.is_integer())
    throw InternalConsistencyError(std::string(what) + " is not an integer: " + value.str());
  return value;
}

std::string poly_str(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k) os << ", ";
    os << p.coefficients()[k].str();
  }
  return os.str();
}

}  // namespace

IdentityReport make_report(std::string name, std::string params, const Rational& computed,
                           const Rational& expected) {
  IdentityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.computed = computed.str();
  r.expected = expected.str();
  r.pass = computed == expected;
  return r;
}

void require_generic(const Polytope& p, const IntVec& z) {
  if (static_cast<int>(z.size()) != p.dim())
    throw InputError("direction z has wrong dimension");
  for (const auto& cone : p.cones())
    for (const IntVec& w : cone.edges())
      if (sgn(dot(w, z)) == 0)
        throw GenericityError("z is orthogonal to an edge vector");
}

GenericDirection pick_generic_z(const Polytope& p, std::uint64_t seed) {
  const int d = p.dim();
  const long radius = 10L * d * p.vertex_count();
  std::uint64_t state = seed;
  while (true) {
    IntVec z(d);
    for (int i = 0; i < d; ++i) {
      std::uint64_t r = splitmix64(state) % static_cast<std::uint64_t>(2 * radius + 1);
      z[i] = static_cast<long>(r) - radius;
    }
    bool ok = true;
    for (const auto& cone : p.cones()) {
      for (const IntVec& w : cone.edges())
        if (sgn(dot(w, z)) == 0) { ok = false; break; }
      if (!ok) break;
    }
    if (ok) return GenericDirection{std::move(z), seed};
  }
}

RatVec linear_forms(const VertexCone& cone, const IntVec& z) {
  RatVec a;
  a.reserve(cone.edges().size());
  for (const IntVec& w : cone.edges()) a.emplace_back(dot(w, z));
  return a;
}

namespace {

Rational vertex_count_contribution(const Polytope& p, int vi, const Rational& t,
                                   const IntVec& z) {
  const int d = p.dim();
  const VertexCone& cone = p.cone(vi);
  RatVec a = linear_forms(cone, z);
  Rational x = t * dot(p.vertex(vi), z);
  Rational contrib;
  for (int k = 0; k <= d; ++k)
    contrib += Rational(binomial(d, k)) * barnes_polynomial(k, a)(x) *
               discrete_moment(cone, t, z, d - k);
  return contrib;
}

}  // namespace

Rational count_via_barnes(const Polytope& p, const Rational& t, const IntVec& z,
                          const EvalOptions& opts) {
  if (!(Rational(0) < t)) throw InputError("dilation t must be positive");
  require_generic(p, z);
  Rational total = sum_over_vertices(
      p, opts.threads, [&](int vi) { return vertex_count_contribution(p, vi, t, z); });
  return require_integer(sign_over_factorial(p.dim()) * total, "lattice point count");
}

EhrhartResult count_with_contributions(const Polytope& p, const Rational& t,
                                       const IntVec& z, const EvalOptions& opts) {
  if (!(Rational(0) < t)) throw InputError("dilation t must be positive");
  require_generic(p, z);
  (void)opts;
  EhrhartResult result;
  result.t = t;
  result.z = z;
  Rational scale = sign_over_factorial(p.dim());
  Rational total;
  for (int vi = 0; vi < p.vertex_count(); ++vi) {
    Rational c = scale * vertex_count_contribution(p, vi, t, z);
    total += c;
    result.vertex_contributions.push_back(std::move(c));
  }
  result.count = require_integer(total, "lattice point count");
  return result;
}

Rational coefficient_c_r(const Polytope& p, unsigned long r, const Rational& t,
                         const IntVec& z, const EvalOptions& opts) {
  const int d = p.dim();
  if (r > static_cast<unsigned long>(d)) throw InputError("coefficient index r exceeds dim");
  if (!(Rational(0) < t)) throw InputError("dilation t must be positive");
  require_generic(p, z);
  Rational total = sum_over_vertices(p, opts.threads, [&](int vi) {
    const VertexCone& cone = p.cone(vi);
    RatVec a = linear_forms(cone, z);
    Rational vz_r = dot(p.vertex(vi), z).pow(static_cast<long>(r));
    Rational contrib;
    for (unsigned long j = 0; j + r <= static_cast<unsigned long>(d); ++j) {
      Rational c(Int(factorial(d) / (factorial(r) * factorial(j) * factorial(d - r - j))));
      contrib += c * barnes_number(j, a) * vz_r *
                 discrete_moment(cone, t, z, d - r - j);
    }
    return contrib;
  });
  return sign_over_factorial(d) * total;
}

QuasiPolynomial integer_quasipolynomial(const Polytope& p, const IntVec& z,
                                        const EvalOptions& opts) {
  require_generic(p, z);
  if (!p.denominator().fits_ulong_p() || p.denominator() > 10000)
    throw ResourceError("vertex denominator too large for residue enumeration");
  const unsigned long period = p.denominator().get_ui();
  const int d = p.dim();
  std::vector<Polynomial> pieces;
  for (unsigned long rho = 0; rho < period; ++rho) {
    Rational t_rep(static_cast<long>(rho == 0 ? period : rho));
    RatVec coeffs(d + 1);
    for (int r = 0; r <= d; ++r) coeffs[r] = coefficient_c_r(p, r, t_rep, z, opts);
    pieces.emplace_back(std::move(coeffs));
  }
  return QuasiPolynomial(period, std::move(pieces));
}

Polynomial ehrhart_polynomial_integer(const Polytope& p, const IntVec& z,
                                      const EvalOptions& opts) {
  if (!p.is_integer())
    throw InputError("polytope has denominator " + p.denominator().get_str() +
                     "; use the quasi-polynomial interface");
  return integer_quasipolynomial(p, z, opts).piece(0);
}

namespace {

// Shared engine for the moment formulas; m = 0 is the counting case.
Rational moment_value(const Polytope& p, unsigned long m, const Rational& t,
                      const IntVec& z, const EvalOptions& opts) {
  const int d = p.dim();
  const unsigned long top = d + m;
  Rational total = sum_over_vertices(p, opts.threads, [&](int vi) {
    const VertexCone& cone = p.cone(vi);
    RatVec a = linear_forms(cone, z);
    Rational x = t * dot(p.vertex(vi), z);
    Rational contrib;
    for (unsigned long k = 0; k <= top; ++k) {
      Rational c(Int(1), factorial(k) * factorial(top - k));
      contrib += c * barnes_polynomial(k, a)(x) * discrete_moment(cone, t, z, top - k);
    }
    return contrib;
  });
  Rational sign = (d % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * Rational(factorial(m)) * total;
}

}  // namespace

Rational polytope_moment(const Polytope& p, unsigned long m, const Rational& t,
                         const IntVec& z, const EvalOptions& opts) {
  if (m == 0) throw InputError("moment order m must be >= 1; use count_via_barnes");
  if (!(Rational(0) < t)) throw InputError("dilation t must be positive");
  require_generic(p, z);
  return moment_value(p, m, t, z, opts);
}

Rational moment_coefficient_d_r(const Polytope& p, unsigned long m, unsigned long r,
                                const Rational& t, const IntVec& z,
                                const EvalOptions& opts) {
  const int d = p.dim();
  const unsigned long top = d + m;
  if (r > top) throw InputError("coefficient index r exceeds d + m");
  if (!(Rational(0) < t)) throw InputError("dilation t must be positive");
  require_generic(p, z);
  Rational total = sum_over_vertices(p, opts.threads, [&](int vi) {
    const VertexCone& cone = p.cone(vi);
    RatVec a = linear_forms(cone, z);
    Rational vz_r = dot(p.vertex(vi), z).pow(static_cast<long>(r));
    Rational contrib;
    for (unsigned long j = 0; j + r <= top; ++j) {
      Rational c(Int(factorial(top) / (factorial(r) * factorial(j) * factorial(top - r - j))));
      contrib += c * barnes_number(j, a) * vz_r * discrete_moment(cone, t, z, top - r - j);
    }
    return contrib;
  });
  Rational sign = (d % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * Rational(factorial(m), factorial(top)) * total;
}

std::vector<Polynomial> moment_coefficient_polynomials(const Polytope& p, unsigned long m,
                                                       const IntVec& z, const Rational& t_mid) {
  require_generic(p, z);
  const int d = p.dim();
  const unsigned long top = d + m;
  // mu_n as a polynomial in t, per cone, from the active set at t_mid
  std::vector<std::vector<Polynomial>> mu(p.vertex_count());
  for (int vi = 0; vi < p.vertex_count(); ++vi) {
    auto active = active_lattice_points(p.cone(vi), t_mid);
    mu[vi].reserve(top + 1);
    for (unsigned long n = 0; n <= top; ++n)
      mu[vi].push_back(moment_polynomial(p.cone(vi), active, z, n));
  }
  Rational sign = (d % 2 == 0) ? Rational(1) : Rational(-1);
  Rational prefactor = sign * Rational(factorial(m), factorial(top));
  std::vector<Polynomial> out;
  for (unsigned long r = 0; r <= top; ++r) {
    Polynomial dr;
    for (int vi = 0; vi < p.vertex_count(); ++vi) {
      RatVec a = linear_forms(p.cone(vi), z);
      Rational vz_r = dot(p.vertex(vi), z).pow(static_cast<long>(r));
      for (unsigned long j = 0; j + r <= top; ++j) {
        Rational c(Int(factorial(top) / (factorial(r) * factorial(j) * factorial(top - r - j))));
        dr += (c * barnes_number(j, a) * vz_r) * mu[vi][top - r - j];
      }
    }
    out.push_back(prefactor * dr);
  }
  return out;
}

IdentityReport ode_check(const Polytope& p, unsigned long m, const IntVec& z,
                         const Rational& t_lo, const Rational& t_hi) {
  require_generic(p, z);
  if (!(Rational(0) < t_lo) || !(t_lo < t_hi))
    throw InputError("ode check needs 0 < t_lo < t_hi");
  const unsigned long top = p.dim() + m;

  std::set<Rational> cuts;
  for (const auto& cone : p.cones())
    for (const Rational& b : moment_breakpoints(cone, t_lo, t_hi)) cuts.insert(b);

  std::ostringstream params;
  params << "m=" << m << ",interval=(" << t_lo.str() << "," << t_hi.str() << "]"
         << ",pieces=" << cuts.size() + 1;

  Rational left = t_lo;
  std::vector<Rational> rights(cuts.begin(), cuts.end());
  rights.push_back(t_hi);
  for (const Rational& right : rights) {
    Rational mid = (left + right) / Rational(2);
    auto dr = moment_coefficient_polynomials(p, m, z, mid);
    for (unsigned long r = 0; r <= top; ++r) {
      Polynomial next = (r + 1 <= top) ? dr[r + 1] : Polynomial();
      Polynomial lhs = dr[r].derivative();
      Polynomial rhs = Rational(-static_cast<long>(r + 1)) * next;
      if (!(lhs == rhs)) {
        IdentityReport rep;
        rep.name = "moment-ode";
        rep.params = params.str() + ",r=" + std::to_string(r) + ",piece_mid=" + mid.str();
        rep.computed = poly_str(lhs);
        rep.expected = poly_str(rhs);
        rep.pass = false;
        return rep;
      }
    }
    left = right;
  }
  IdentityReport rep;
  rep.name = "moment-ode";
  rep.params = params.str();
  rep.computed = "0";
  rep.expected = "0";
  rep.pass = true;
  return rep;
}

std::vector<IdentityReport> vanishing_identities(const Polytope& p, const Rational& t,
                                                 const IntVec& z) {
  if (!(Rational(0) < t)) throw InputError("dilation t must be positive");
  require_generic(p, z);
  const int d = p.dim();
  std::vector<IdentityReport> reports;
  for (int m = 0; m <= d - 1; ++m) {
    Rational total;
    for (int vi = 0; vi < p.vertex_count(); ++vi) {
      const VertexCone& cone = p.cone(vi);
      RatVec a = linear_forms(cone, z);
      Rational x = t * dot(p.vertex(vi), z);
      for (int k = 0; k <= m; ++k)
        total += Rational(binomial(m, k)) * barnes_polynomial(k, a)(x) *
                 discrete_moment(cone, t, z, m - k);
    }
    reports.push_back(make_report("vanishing-sum", "m=" + std::to_string(m) + ",t=" + t.str(),
                                  total, Rational(0)));
    for (int r = 0; r <= m; ++r) {
      Rational coeff_total;
      for (int vi = 0; vi < p.vertex_count(); ++vi) {
        const VertexCone& cone = p.cone(vi);
        RatVec a = linear_forms(cone, z);
        Rational vz_r = dot(p.vertex(vi), z).pow(r);
        for (int j = 0; j + r <= m; ++j) {
          Rational c(Int(1), factorial(j) * factorial(m - r - j));
          coeff_total += vz_r * c * barnes_number(j, a) * discrete_moment(cone, t, z, m - r - j);
        }
      }
      reports.push_back(make_report(
          "vanishing-coefficient",
          "m=" + std::to_string(m) + ",r=" + std::to_string(r) + ",t=" + t.str(), coeff_total,
          Rational(0)));
    }
  }
  return reports;
}

IdentityReport constant_term_identity(const Polytope& p, const IntVec& z) {
  if (!p.is_integer()) throw InputError("constant-term identity needs an integer polytope");
  require_generic(p, z);
  const int d = p.dim();
  Rational total;
  for (int vi = 0; vi < p.vertex_count(); ++vi) {
    const VertexCone& cone = p.cone(vi);
    RatVec a = linear_forms(cone, z);
    auto points = enumerate_shifted_parallelepiped(cone, RatVec(d, Rational(0)));
    for (int k = 0; k <= d; ++k) {
      Rational mu;
      for (const IntVec& q : points)
        mu += Rational(dot(q, z)).pow(static_cast<long>(d - k));
      total += Rational(binomial(d, k)) * barnes_number(k, a) * mu;
    }
  }
  return make_report("constant-term-one", "", sign_over_factorial(d) * total, Rational(1));
}

Rational open_count(const Polytope& p, const Rational& t, const IntVec& z,
                    const EvalOptions& opts) {
  if (!(Rational(0) < t)) throw InputError("dilation t must be positive");
  require_generic(p, z);
  const int d = p.dim();
  Rational total = sum_over_vertices(p, opts.threads, [&](int vi) {
    const VertexCone& cone = p.cone(vi);
    RatVec a = linear_forms(cone, z);
    Rational x = -t * dot(p.vertex(vi), z);
    Rational contrib;
    for (int k = 0; k <= d; ++k)
      contrib += Rational(binomial(d, k)) * barnes_polynomial(k, a)(x) *
                 discrete_moment(cone, t, z, d - k, Orientation::kOpen);
    return contrib;
  });
  return require_integer(Rational(Int(1), factorial(d)) * total, "interior point count");
}

HollowResult is_hollow(const Polytope& p, const std::vector<IntVec>& zs) {
  if (!p.is_integer()) throw InputError("hollowness test needs an integer polytope");
  if (zs.empty()) throw InputError("hollowness test needs at least one direction");
  HollowResult result;
  const int d = p.dim();
  std::vector<Rational> values;
  for (const IntVec& z : zs) {
    require_generic(p, z);
    Rational total;
    for (int vi = 0; vi < p.vertex_count(); ++vi) {
      const VertexCone& cone = p.cone(vi);
      RatVec a = linear_forms(cone, z);
      Rational x = -dot(p.vertex(vi), z);
      auto points = enumerate_shifted_parallelepiped(cone, RatVec(d, Rational(0)));
      for (int k = 0; k <= d; ++k) {
        Rational mu;
        for (const IntVec& q : points)
          mu += Rational(dot(q, z)).pow(static_cast<long>(d - k));
        total += Rational(binomial(d, k)) * barnes_polynomial(k, a)(x) * mu;
      }
    }
    values.push_back(std::move(total));
  }
  bool all_zero = true;
  for (const Rational& v : values)
    if (!v.is_zero()) all_zero = false;
  result.hollow = all_zero;
  // every sample must agree with the consensus verdict
  for (std::size_t i = 0; i < values.size(); ++i) {
    IdentityReport rep;
    rep.name = "hollow-expression";
    rep.params = "z-sample=" + std::to_string(i);
    rep.computed = values[i].str();
    rep.expected = all_zero ? "0" : "nonzero";
    rep.pass = values[i].is_zero() == all_zero;
    result.reports.push_back(std::move(rep));
  }
  Rational interior = open_count(p, Rational(1), zs.front());
  if (interior.is_zero() != all_zero)
    throw InternalConsistencyError("hollowness identity disagrees with the open count");
  return result;
}

HollowResult is_hollow(const Polytope& p, std::uint64_t seed, int num_z_samples) {
  std::vector<IntVec> zs;
  for (int i = 0; i < num_z_samples; ++i)
    zs.push_back(pick_generic_z(p, seed + static_cast<std::uint64_t>(i)).z);
  return is_hollow(p, zs);
}

bool is_smooth(const Polytope& p) {
  if (!p.is_integer()) return false;  // smoothness presumes integer vertices
  for (const auto& cone : p.cones())
    if (cone.volume() != 1) return false;
  return true;
}

Rational count_smooth(const Polytope& p, const Rational& t, const IntVec& z) {
  if (!is_smooth(p)) throw InputError("polytope is not smooth");
  if (!(Rational(0) < t)) throw InputError("dilation t must be positive");
  require_generic(p, z);
  const int d = p.dim();
  Rational total;
  for (int vi = 0; vi < p.vertex_count(); ++vi)
    total += barnes_polynomial(d, linear_forms(p.cone(vi), z))(t * dot(p.vertex(vi), z));
  return sign_over_factorial(d) * total;
}

Rational smooth_moment(const Polytope& p, unsigned long m, const Rational& t, const IntVec& z) {
  if (!is_smooth(p)) throw InputError("polytope is not smooth");
  if (m == 0) throw InputError("moment order m must be >= 1");
  if (!(Rational(0) < t)) throw InputError("dilation t must be positive");
  require_generic(p, z);
  const int d = p.dim();
  const unsigned long top = d + m;
  Rational total;
  for (int vi = 0; vi < p.vertex_count(); ++vi)
    total += barnes_polynomial(top, linear_forms(p.cone(vi), z))(t * dot(p.vertex(vi), z));
  Rational sign = (d % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * Rational(factorial(m), factorial(top)) * total;
}

std::vector<IdentityReport> smooth_identities(const Polytope& p, const IntVec& z) {
  if (!is_smooth(p)) throw InputError("polytope is not smooth");
  require_generic(p, z);
  const int d = p.dim();
  std::vector<IdentityReport> reports;

  for (int m = 0; m <= d - 1; ++m) {
    // sum_v B_m(t<v,z>, a_v) must vanish as a polynomial in t
    Polynomial sum;
    for (int vi = 0; vi < p.vertex_count(); ++vi)
      sum += barnes_polynomial(m, linear_forms(p.cone(vi), z))
                 .scale_argument(dot(p.vertex(vi), z));
    IdentityReport rep;
    rep.name = "smooth-vanishing-sum";
    rep.params = "m=" + std::to_string(m);
    rep.computed = poly_str(sum);
    rep.expected = "0";
    rep.pass = sum.is_zero();
    reports.push_back(std::move(rep));

    for (int r = 0; r <= m; ++r) {
      Rational total;
      for (int vi = 0; vi < p.vertex_count(); ++vi)
        total += dot(p.vertex(vi), z).pow(r) *
                 barnes_number(m - r, linear_forms(p.cone(vi), z));
      reports.push_back(make_report("smooth-vanishing-coefficient",
                                    "m=" + std::to_string(m) + ",r=" + std::to_string(r),
                                    total, Rational(0)));
    }
  }

  {
    Rational total;
    for (int vi = 0; vi < p.vertex_count(); ++vi)
      total += barnes_number(d, linear_forms(p.cone(vi), z));
    reports.push_back(
        make_report("smooth-constant-term", "", sign_over_factorial(d) * total, Rational(1)));
  }

  if (d == 2) {
    Rational total;
    for (int vi = 0; vi < p.vertex_count(); ++vi) {
      RatVec a = linear_forms(p.cone(vi), z);
      total += a[1] / a[0] + a[0] / a[1] + Rational(3);
    }
    reports.push_back(make_report("twelve-identity", "", total, Rational(12)));
  }
  if (d == 3) {
    Rational total;
    for (int vi = 0; vi < p.vertex_count(); ++vi) {
      RatVec a = linear_forms(p.cone(vi), z);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) total += a[i] / a[j];
      total += Rational(3);
    }
    reports.push_back(make_report("twenty-four-identity", "", total, Rational(24)));
  }
  return reports;
}

Rational volume_via_brion(const Polytope& p, const IntVec& z) {
  require_generic(p, z);
  const int d = p.dim();
  Rational total;
  for (int vi = 0; vi < p.vertex_count(); ++vi) {
    const VertexCone& cone = p.cone(vi);
    Rational denom(1);
    for (const IntVec& w : cone.edges()) denom *= Rational(dot(w, z));
    total += Rational(cone.volume()) * dot(p.vertex(vi), z).pow(d) / denom;
  }
  return sign_over_factorial(d) * total;
}

IdentityReport hypercube_barnes_identity(int dim, unsigned long j, const IntVec& z) {
  if (j > static_cast<unsigned long>(dim)) throw InputError("power j exceeds dimension");
  if (static_cast<int>(z.size()) != dim) throw InputError("direction z has wrong dimension");
  for (const Int& c : z)
    if (sgn(c) == 0) throw GenericityError("cube needs all z coordinates nonzero");

  Rational total;
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    Rational linear;
    RatVec a(dim);
    for (int i = 0; i < dim; ++i) {
      int alpha = (mask & (1u << i)) ? 1 : -1;
      linear += Rational(Int(alpha * z[i]));
      a[i] = Rational(Int(-alpha * z[i]));
    }
    total += linear.pow(static_cast<long>(j)) * barnes_number(dim - j, a);
  }
  Rational expected = Rational(2).pow(static_cast<long>(j));
  return make_report("hypercube-power-identity",
                     "d=" + std::to_string(dim) + ",j=" + std::to_string(j),
                     sign_over_factorial(dim) * total, expected);
}

IdentityReport z_independence_check(const Polytope& p, const Rational& t,
                                    const std::vector<std::uint64_t>& seeds) {
  if (seeds.size() < 2) throw InputError("z-independence needs at least two seeds");
  const int d = p.dim();
  std::vector<Rational> counts;
  std::vector<RatVec> coeffs;
  for (std::uint64_t seed : seeds) {
    IntVec z = pick_generic_z(p, seed).z;
    counts.push_back(count_via_barnes(p, t, z));
    RatVec c(d + 1);
    for (int r = 0; r <= d; ++r) c[r] = coefficient_c_r(p, r, t, z);
    coeffs.push_back(std::move(c));
  }
  bool ok = true;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] != counts[0] || coeffs[i] != coeffs[0]) ok = false;

  IdentityReport rep;
  rep.name = "z-independence";
  std::ostringstream params;
  params << "t=" << t.str() << ",seeds=" << seeds.size();
  rep.params = params.str();
  rep.computed = ok ? counts[0].str() : "divergent values across seeds";
  rep.expected = counts[0].str();
  rep.pass = ok;
  return rep;
}

}  // namespace ehrhart

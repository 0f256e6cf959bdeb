#pragma once

#include <cstdint>
#include <vector>

#include "ehrhart/counting.hpp"

namespace ehrhart {

struct VerifyConfig {
  Rational t = Rational(1);
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  int threads = 1;
};

// Runs the complete identity suite for one polytope: the vanishing
// identities, constant-term and hollowness checks, open counts against the
// oracle, smooth specializations, the weighted parallelepiped-sum and
// volume identities, hypercube identities (dims 1..3), the coefficient
// ODE, z-independence, and formula-vs-oracle equivalence. Every report is
// an exact comparison.
std::vector<IdentityReport> run_verify_suite(const Polytope& p, const VerifyConfig& cfg);

}  // namespace ehrhart

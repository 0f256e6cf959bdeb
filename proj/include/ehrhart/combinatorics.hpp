#pragma once

#include <functional>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// k! / (parts_0! * parts_1! * ...); the parts must sum to k.
Int multinomial(unsigned long k, const std::vector<unsigned long>& parts);

// n'th Bernoulli number with the B_1 = -1/2 convention; memoized.
Rational bernoulli_number(unsigned long n);

// Classical Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k},
// evaluated exactly.
Rational bernoulli_polynomial(unsigned long n, const Rational& x);

// Calls fn for every composition of k into `parts` nonnegative integers,
// in lexicographic order.
void for_each_composition(unsigned long k, unsigned long parts,
                          const std::function<void(const std::vector<unsigned long>&)>& fn);

}  // namespace ehrhart

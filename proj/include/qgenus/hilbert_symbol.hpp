#pragma once

#include "qgenus/cyc_int.hpp"
#include "qgenus/primes.hpp"

#include <vector>

namespace qgenus {

// Global sign applied to every symbol exponent. Setting it to -1 inverts
// every symbol, which is the other common normalisation.
inline constexpr int kSymbolConventionSign = 1;

// Exponent in F_5 of the degree-5 Hilbert symbol (a, b) at a prime pi not
// above 5: chi_pi((-1)^{ab} a^beta b^-alpha) with alpha = v(a), beta = v(b).
int tame_hilbert_symbol(const CycInt& a, const CycInt& b, const FPrime& pi);

// Primes of Z[z], other than lambda, dividing a or b. Uses trial division of
// the rational norms.
std::vector<FPrime> support_primes(const CycInt& a, const CycInt& b);

// The symbol at lambda, as minus the sum of all tame symbols (product formula).
int wild_symbol_at_lambda(const CycInt& a, const CycInt& b);

}  // namespace qgenus

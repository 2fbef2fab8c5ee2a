#pragma once

#include "qgenus/fp_linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qgenus {

// How to equip a module with an automorphism sigma (ell = 5 only) that is
// semilinear for z -> z^3.
struct SigmaSpec {
    enum class Kind { None, Natural, Random } kind = Kind::None;
    std::uint64_t seed = 0;
};

// Finite module S = sum R/lambda^{e_i} over R = Z_ell[z_ell], 1 <= e_i <= ell - 1.
// Because ell lies in lambda^{ell-1} R, each summand is F_ell[lambda]/(lambda^{e_i}),
// so S is stored as F_ell^D with D = sum e_i and basis lambda^k of each summand.
struct FiltrationModule {
    int ell = 0;
    std::vector<int> exponents;
    int dim = 0;
    std::vector<int> offsets;      // first coordinate of each summand
    fp::Mat lambda_map;            // multiplication by lambda
    fp::Mat zeta_map;              // multiplication by z = 1 - lambda
    std::optional<fp::Mat> sigma;  // x -> sigma(x), column convention: y = M x

    // Multiplication by the integer ell, computed by repeated addition.
    fp::Vec times_ell(const fp::Vec& x) const;
};

inline constexpr std::int64_t kEnumerationCap = 1000000;

FiltrationModule build_filtration_module(int ell, std::vector<int> exponents, SigmaSpec sigma = {});

// True when ell^dim is small enough for element enumeration.
bool enumerable(const FiltrationModule& S);

struct RankProfile {
    int t = 0;
    std::vector<int> s;             // s[i-1] = s_i for i = 1 .. ell - 1
    int rank = 0;                   // minimal number of generators as abelian group
    std::vector<int> lambda_ranks;  // [i-1] = rank lambda^{i-1} S / lambda^i S, i = 1 .. ell - 1
    bool operator==(const RankProfile&) const = default;
};

enum class OracleEngine { Enumeration, LinearAlgebra };

// Every quantity computed straight from its definition: by listing group
// elements (Enumeration) or by subspace arithmetic over F_ell (LinearAlgebra).
RankProfile brute_rank_profile(const FiltrationModule& S, OracleEngine engine);
RankProfile brute_rank_profile(const FiltrationModule& S);  // enumeration when feasible

// Values predicted from the exponent multiset alone.
RankProfile closed_form_profile(int ell, const std::vector<int>& exponents);
int rank_formula(int ell, int t, const std::vector<int>& s);

struct OracleCheck {
    bool ok = true;
    std::vector<std::string> failures;
    void expect(bool cond, const std::string& what);
};

// Compares the brute-force profile with the rank formula, the two-sided
// bounds, the successive lambda-rank formula and its inequalities, the
// elementary case, and the consequence of lambda^i S = ell S.
OracleCheck verify_rank_identities(const FiltrationModule& S);

struct EigenParts {
    int plus = 0;
    int minus = 0;
    int minus_minus = 0;  // sigma^2 = -1
};

struct SigmaDecomposition {
    EigenParts whole;                   // of S itself
    std::vector<EigenParts> graded;     // of lambda^i S / lambda^{i+1} S, i = 0..3
    std::vector<EigenParts> lambda_kernels;  // kernel of lambda on each part of graded[i]
    int ker_theta1 = 0, ker_theta2 = 0;
    int ker_alpha1 = 0, ker_alpha2 = 0, ker_alpha3 = 0;
    int ker_beta1 = 0, ker_beta2 = 0;
    std::int64_t order_exponent = 0;    // log_5 |S|
};

SigmaDecomposition sigma_decompose(const FiltrationModule& S, OracleEngine engine);
SigmaDecomposition sigma_decompose(const FiltrationModule& S);

// Checks for a sigma-module: group relations, the cardinality partition, the
// kernel-rank identities, the plus-part sum over graded pieces, the upper bound
// rank S^+ <= rank (S/lambda S)^+ + t - s_1, the averaging projector, and the
// congruences sigma^2 lambda = -lambda sigma^2 mod lambda^2 S and
// sigma lambda^2 = -lambda^2 sigma mod lambda^3 S. The closed rank chain that
// expresses rank S^+ through the kernels is reported separately.
struct SigmaCheck {
    OracleCheck check;
    bool rank_chain_holds = false;
    int plus_rank = 0;
    int chain_value = 0;
};

SigmaCheck verify_sigma(const FiltrationModule& S);

// Non-decreasing sequences of length 1..max_t with entries 1..ell-1.
std::vector<std::vector<int>> exponent_multisets(int ell, int max_t);

}  // namespace qgenus

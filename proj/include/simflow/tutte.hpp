#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simflow/bigint.hpp"
#include "simflow/complex.hpp"
#include "simflow/matroid.hpp"
#include "simflow/options.hpp"
#include "simflow/polynomial.hpp"

namespace simflow {

/// sum_X (x-1)^(beta_{d-1}(X) - beta_{d-1}) (y-1)^beta_d(X).
BivariatePolynomial tkr_polynomial(const SimplicialComplex& complex, const ComputeOptions& options = {});

/// The same sum with each term weighted by t_q(X).
BivariatePolynomial q_tkr_polynomial(const SimplicialComplex& complex, std::uint64_t q,
                                     const ComputeOptions& options = {});

/// sum_X (x-1)^(r(F)-r(X)) (y-1)^(|X|-r(X)) from the rank oracle alone.
BivariatePolynomial matroid_tutte(const RankOracle& oracle, const ComputeOptions& options = {});

enum class BottConvention {
    /// sum_X (-1)^|X| lambda^beta_d(X)
    Literal,
    /// sum_X (-1)^(|F|-|X|) lambda^beta_d(X)
    Complemented,
};

Polynomial bott_r_polynomial(const SimplicialComplex& complex, BottConvention convention,
                             const ComputeOptions& options = {});

struct IdentityCheck {
    std::string name;
    std::uint64_t q = 0;
    BigInt lhs;
    BigInt rhs;
    bool pass = false;
    /// False for identities that are only expected under extra hypotheses
    /// (torsion-free plain TKR, the literal Bott sign); they are reported but
    /// do not fail the report.
    bool required = true;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_required_pass() const;
};

/// Flow/coloring specialisations of the q-TKR polynomial, plain TKR and Bott
/// versions, and the graph-case formulas when d = 1.
IdentityReport check_specializations(const SimplicialComplex& complex, const std::vector<std::uint64_t>& q_list,
                                     const ComputeOptions& options = {});

struct DualitySwapReport {
    bool tkr_swap = false;
    /// One entry per q: T^q_A(x, y) == T^q_B(y, x).
    std::vector<std::pair<std::uint64_t, bool>> q_tkr_swap;
    /// (-1)^epsilon q^c Phi_A(q) == X_B(q), with epsilon and c from the
    /// complexes' sizes and Betti numbers.
    long epsilon = 0;
    long c = 0;
    std::vector<IdentityCheck> scalar;
    bool all_pass() const;
};

/// Checks a caller-supplied dual pair (A, B) of complementary skeleta.
DualitySwapReport check_duality_swap(const SimplicialComplex& a, const SimplicialComplex& b,
                                     const std::vector<std::uint64_t>& q_list, const ComputeOptions& options = {});

} // namespace simflow

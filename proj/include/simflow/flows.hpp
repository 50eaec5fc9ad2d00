#pragma once

// Nowhere-zero flows, colorings and tensions; the flow quasipolynomial;
// Z_2^r group flows and their lift to modular 2^r-flows.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "simflow/bigint.hpp"
#include "simflow/complex.hpp"
#include "simflow/matroid.hpp"
#include "simflow/options.hpp"
#include "simflow/polynomial.hpp"

namespace simflow {

enum class FlowMethod {
    /// Subset expansion when |F| fits the subset cap, else kernel enumeration.
    Auto,
    KernelEnum,
    SubsetExpansion,
};

enum class ColoringMethod { Auto, Brute, SubsetExpansion };

struct ModularFlow {
    std::uint64_t q = 2;
    std::vector<std::uint64_t> values;

    bool nowhere_zero() const;
};

/// Values in range and boundary * values = 0 (mod q).
bool is_modular_flow(const SimplicialComplex& complex, const ModularFlow& flow);

struct GroupFlow2r {
    unsigned r = 1;
    /// One r-bit word per facet; bit k is layer k.
    std::vector<std::uint64_t> words;

    bool nowhere_zero() const;
    /// Facet indicator of bit-layer k.
    std::vector<std::uint8_t> layer(unsigned k) const;
};

/// Every bit-layer lies in the kernel of the top boundary mod 2.
bool is_group_flow(const SimplicialComplex& complex, const GroupFlow2r& flow);

/// Phi(q): nowhere-zero q-flows.
BigInt count_nz_flows(const SimplicialComplex& complex, std::uint64_t q, FlowMethod method = FlowMethod::Auto,
                      const ComputeOptions& options = {});

/// X(k): ridge colorings in Z_k whose coboundary is nonzero on every facet.
BigInt count_proper_colorings(const SimplicialComplex& complex, std::uint64_t k,
                              ColoringMethod method = ColoringMethod::Auto, const ComputeOptions& options = {});

/// Nowhere-zero facet weightings summing to zero mod k along every circuit.
/// Cross-checks t_k * C(k) = k^(|F| - beta_d - |R|) * X(k) and throws
/// RelationMismatch if the two disagree.
BigInt count_nz_tensions(const SimplicialComplex& complex, std::uint64_t k, const ComputeOptions& options = {});

/// C(k) from the coloring relation alone; nullopt when it is not an integer.
std::optional<BigInt> tensions_from_colorings(const SimplicialComplex& complex, std::uint64_t k,
                                              const ComputeOptions& options = {});

/// Tensions by direct enumeration against the circuit relations only.
BigInt count_nz_tensions_direct(const SimplicialComplex& complex, std::uint64_t k,
                                const ComputeOptions& options = {});

/// Period = lcm of all torsion factors of H_{d-1}(X); each constituent is
/// interpolated through beta_d + 1 values and checked at two more.
Quasipolynomial flow_quasipolynomial(const SimplicialComplex& complex, const ComputeOptions& options = {});

/// r-tuples of mod-2 flows whose facet words are never all zero.
BigInt count_nz_group_flows_2r(const SimplicialComplex& complex, unsigned r, const ComputeOptions& options = {});

/// Lifts each layer to an integer cycle with odd entries on exactly its
/// support, then combines them as sum_k z_k 2^k mod 2^r. Throws NotAFlow and
/// LiftFailed (a layer is not the reduction of an integral cycle).
ModularFlow lift_z2r_flow(const SimplicialComplex& complex, const GroupFlow2r& flow);

/// Integer cycle supported exactly on `support` with odd entries, reduced
/// towards entries of absolute value 1. Throws LiftFailed.
std::vector<BigInt> odd_integral_lift(const SimplicialComplex& complex, FacetSubset support);

struct JaegerResult {
    /// Coarboricity; the flow is modulo 2^c.
    std::size_t c = 0;
    CoforestCover cover;
    /// Bases F \ B'_i where B'_i extends part i to a cobase.
    std::vector<FacetSubset> bases;
    GroupFlow2r group_flow;
    ModularFlow flow;
};

/// Coforest cover -> fundamental-circuit layers -> Z_2^c flow -> 2^c flow.
/// Throws HasBridge.
JaegerResult jaeger_flow(const SimplicialComplex& complex, const ComputeOptions& options = {});

/// Least q in [2, q_max] with Phi(q) > 0.
std::optional<std::uint64_t> min_flow_number(const SimplicialComplex& complex, std::uint64_t q_max,
                                             const ComputeOptions& options = {});

} // namespace simflow

#pragma once

// Exact integer linear algebra: Smith normal form, rational rank, and
// kernels modulo q.
//
// The public entry points take IntMatrix (GMP entries). Internally every
// routine first runs on checked 64-bit integers and restarts on GMP when an
// intermediate value would overflow, so results never depend on the fast path.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simflow/bigint.hpp"
#include "simflow/int_matrix.hpp"
#include "simflow/options.hpp"

namespace simflow {

struct SNFResult {
    /// d_1 | d_2 | ... | d_r, all positive.
    std::vector<BigInt> diagonal;
    std::size_t rank = 0;
    /// Unimodular transforms with U * A * V = diag(diagonal) padded by zeros.
    std::optional<IntMatrix> U;
    std::optional<IntMatrix> V;
};

SNFResult smith_normal_form(const IntMatrix& a, bool keep_transforms = false);

std::size_t rational_rank(const IntMatrix& a);

BigInt determinant(const IntMatrix& a);

/// Number of v in (Z_q)^cols with A v = 0 (mod q): q^(cols - r) * prod gcd(d_i, q).
BigInt kernel_count_mod_q(const IntMatrix& a, std::uint64_t q);

/// Same count from a precomputed SNF diagonal.
BigInt kernel_count_from_diagonal(std::span<const BigInt> diagonal, std::size_t cols, std::uint64_t q);

/// Streams every kernel vector of A modulo q exactly once.
///
/// The kernel is parametrised through the SNF column transform: v = V y with
/// d_i y_i = 0 (mod q) for i < r and y_i free otherwise.  Successive vectors
/// differ by one generator, so each step costs O(cols).
class KernelEnumerator {
public:
    /// Throws BadModulus for q < 1 and CapExceeded (with the exact count)
    /// when the kernel is larger than `cap`.
    KernelEnumerator(const IntMatrix& a, std::uint64_t q, std::uint64_t cap = kDefaultEnumerationCap);

    /// Advances to the next vector; the first call yields the zero vector.
    bool next();
    const std::vector<std::uint64_t>& current() const noexcept { return current_; }

    const BigInt& size() const noexcept { return size_; }
    std::uint64_t modulus() const noexcept { return q_; }

private:
    void add_generator(std::size_t digit);

    std::uint64_t q_;
    BigInt size_;
    std::vector<std::vector<std::uint64_t>> generators_;
    std::vector<std::uint64_t> radix_;
    std::vector<std::uint64_t> digits_;
    std::vector<std::uint64_t> current_;
    bool started_ = false;
    bool done_ = false;
};

/// Convenience wrapper collecting the whole stream.
std::vector<std::vector<std::uint64_t>> enumerate_kernel_mod_q(const IntMatrix& a, std::uint64_t q,
                                                               std::uint64_t cap = kDefaultEnumerationCap);

/// Z-basis of the integer kernel of A (columns of V past the rank).
std::vector<std::vector<BigInt>> integer_kernel_basis(const IntMatrix& a);

/// Rank and non-unit invariant factors of a small dense matrix.
struct Invariants {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
};

/// Hot-path SNF of a row-major rows x cols matrix, used by subset sweeps.
Invariants snf_invariants(std::span<const std::int64_t> matrix, std::size_t rows, std::size_t cols);

/// Hot-path fraction-free rank of a row-major rows x cols matrix.
std::size_t bareiss_rank(std::span<const std::int64_t> matrix, std::size_t rows, std::size_t cols);

} // namespace simflow

#include "simflow/linalg.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <utility>

#include "simflow/error.hpp"

namespace simflow {
namespace {

struct Overflow {};

// Checked arithmetic on the 64-bit fast path; the BigInt overloads never fail.
// INT64_MIN is treated as overflow so negation and abs stay total.

inline std::int64_t sub_mul(std::int64_t x, std::int64_t q, std::int64_t y)
{
    std::int64_t p = 0;
    std::int64_t r = 0;
    if (__builtin_mul_overflow(q, y, &p) || __builtin_sub_overflow(x, p, &r) || r == INT64_MIN)
        throw Overflow{};
    return r;
}

inline BigInt sub_mul(const BigInt& x, const BigInt& q, const BigInt& y) { return x - q * y; }

inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }

inline bool is_negative(std::int64_t x) { return x < 0; }
inline bool is_negative(const BigInt& x) { return sgn(x) < 0; }

inline bool is_unit(std::int64_t x) { return x == 1 || x == -1; }
inline bool is_unit(const BigInt& x) { return mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0; }

inline bool abs_less(std::int64_t a, std::int64_t b) { return std::llabs(a) < std::llabs(b); }
inline bool abs_less(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

inline std::int64_t trunc_div(std::int64_t a, std::int64_t b) { return a / b; }
inline BigInt trunc_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(std::int64_t d, std::int64_t a) { return a % d == 0; }
inline bool divides(const BigInt& d, const BigInt& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }

inline BigInt to_big(std::int64_t x) { return from_i64(x); }
inline BigInt to_big(const BigInt& x) { return x; }

template <class Int>
Int from_big(const BigInt& x);

template <>
std::int64_t from_big<std::int64_t>(const BigInt& x)
{
    if (!fits_i64(x)) throw Overflow{};
    return to_i64(x);
}

template <>
BigInt from_big<BigInt>(const BigInt& x)
{
    return x;
}

// Row-major elimination to Smith normal form by repeated min-|a| pivoting.
// Row operations are mirrored into U (m x m) and column operations into V
// (n x n) so that U * A * V is diagonal.
template <class Int>
class SnfEngine {
public:
    SnfEngine(std::vector<Int>& a, std::size_t m, std::size_t n, std::vector<Int>* u, std::vector<Int>* v)
        : a_(a), m_(m), n_(n), u_(u), v_(v)
    {
    }

    std::vector<Int> run()
    {
        std::vector<Int> diagonal;
        const std::size_t limit = std::min(m_, n_);
        for (std::size_t t = 0; t < limit; ++t) {
            std::size_t pi = 0;
            std::size_t pj = 0;
            if (!find_pivot(t, pi, pj)) break;
            bring_to(t, pi, pj);

            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < m_; ++i) {
                    if (is_zero(at(i, t))) continue;
                    Int q = trunc_div(at(i, t), at(t, t));
                    row_sub(i, q, t);
                    if (!is_zero(at(i, t))) dirty = true;
                }
                for (std::size_t j = t + 1; j < n_; ++j) {
                    if (is_zero(at(t, j))) continue;
                    Int q = trunc_div(at(t, j), at(t, t));
                    col_sub(j, q, t);
                    if (!is_zero(at(t, j))) dirty = true;
                }
                if (dirty) {
                    std::size_t bi = t;
                    std::size_t bj = t;
                    for (std::size_t i = t + 1; i < m_; ++i)
                        if (!is_zero(at(i, t)) && abs_less(at(i, t), at(bi, bj))) bi = i, bj = t;
                    for (std::size_t j = t + 1; j < n_; ++j)
                        if (!is_zero(at(t, j)) && abs_less(at(t, j), at(bi, bj))) bi = t, bj = j;
                    bring_to(t, bi, bj);
                    continue;
                }
                if (is_unit(at(t, t))) break;

                // Pivot must divide the rest of the block for the divisibility chain.
                std::size_t bad = m_;
                for (std::size_t i = t + 1; i < m_ && bad == m_; ++i)
                    for (std::size_t j = t + 1; j < n_; ++j)
                        if (!divides(at(t, t), at(i, j))) {
                            bad = i;
                            break;
                        }
                if (bad == m_) break;
                row_sub(t, Int(-1), bad);
            }

            if (is_negative(at(t, t))) negate_row(t);
            diagonal.push_back(at(t, t));
        }
        return diagonal;
    }

private:
    Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj)
    {
        bool found = false;
        for (std::size_t i = t; i < m_; ++i) {
            for (std::size_t j = t; j < n_; ++j) {
                const Int& x = at(i, j);
                if (is_zero(x)) continue;
                if (!found || abs_less(x, at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                    if (is_unit(x)) return true;
                }
            }
        }
        return found;
    }

    void bring_to(std::size_t t, std::size_t i, std::size_t j)
    {
        if (i != t) swap_rows(t, i);
        if (j != t) swap_cols(t, j);
    }

    void swap_rows(std::size_t i, std::size_t k)
    {
        for (std::size_t c = 0; c < n_; ++c) std::swap(a_[i * n_ + c], a_[k * n_ + c]);
        if (u_)
            for (std::size_t c = 0; c < m_; ++c) std::swap((*u_)[i * m_ + c], (*u_)[k * m_ + c]);
    }

    void swap_cols(std::size_t j, std::size_t k)
    {
        for (std::size_t r = 0; r < m_; ++r) std::swap(a_[r * n_ + j], a_[r * n_ + k]);
        if (v_)
            for (std::size_t r = 0; r < n_; ++r) std::swap((*v_)[r * n_ + j], (*v_)[r * n_ + k]);
    }

    // row_i -= q * row_k; rows >= the current pivot are zero left of it.
    void row_sub(std::size_t i, const Int& q, std::size_t k)
    {
        for (std::size_t c = std::min(i, k); c < n_; ++c) {
            const Int& y = a_[k * n_ + c];
            if (!is_zero(y)) a_[i * n_ + c] = sub_mul(a_[i * n_ + c], q, y);
        }
        if (u_) {
            auto& u = *u_;
            for (std::size_t c = 0; c < m_; ++c) {
                const Int& y = u[k * m_ + c];
                if (!is_zero(y)) u[i * m_ + c] = sub_mul(u[i * m_ + c], q, y);
            }
        }
    }

    // col_j -= q * col_k
    void col_sub(std::size_t j, const Int& q, std::size_t k)
    {
        for (std::size_t r = std::min(j, k); r < m_; ++r) {
            const Int& y = a_[r * n_ + k];
            if (!is_zero(y)) a_[r * n_ + j] = sub_mul(a_[r * n_ + j], q, y);
        }
        if (v_) {
            auto& v = *v_;
            for (std::size_t r = 0; r < n_; ++r) {
                const Int& y = v[r * n_ + k];
                if (!is_zero(y)) v[r * n_ + j] = sub_mul(v[r * n_ + j], q, y);
            }
        }
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < n_; ++c) a_[i * n_ + c] = -a_[i * n_ + c];
        if (u_)
            for (std::size_t c = 0; c < m_; ++c) (*u_)[i * m_ + c] = -(*u_)[i * m_ + c];
    }

    std::vector<Int>& a_;
    std::size_t m_;
    std::size_t n_;
    std::vector<Int>* u_;
    std::vector<Int>* v_;
};

template <class Int>
std::vector<Int> identity_storage(std::size_t n)
{
    std::vector<Int> out(n * n, Int(0));
    for (std::size_t i = 0; i < n; ++i) out[i * n + i] = Int(1);
    return out;
}

template <class Int>
SNFResult snf_with(const IntMatrix& a, bool keep_transforms)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<Int> work;
    work.reserve(m * n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) work.push_back(from_big<Int>(a(r, c)));

    std::vector<Int> u;
    std::vector<Int> v;
    if (keep_transforms) {
        u = identity_storage<Int>(m);
        v = identity_storage<Int>(n);
    }
    SnfEngine<Int> engine(work, m, n, keep_transforms ? &u : nullptr, keep_transforms ? &v : nullptr);
    std::vector<Int> diagonal = engine.run();

    SNFResult out;
    out.rank = diagonal.size();
    for (const auto& d : diagonal) out.diagonal.push_back(to_big(d));
    if (keep_transforms) {
        IntMatrix um(m, m);
        IntMatrix vm(n, n);
        for (std::size_t i = 0; i < m * m; ++i) um(i / m, i % m) = to_big(u[i]);
        for (std::size_t i = 0; i < n * n; ++i) vm(i / n, i % n) = to_big(v[i]);
        out.U = std::move(um);
        out.V = std::move(vm);
    }
    return out;
}

// Fraction-free Gaussian elimination; every stored entry is a minor of the
// input, so the division by the previous pivot is exact.
template <class Int>
struct Bareiss;

template <>
struct Bareiss<std::int64_t> {
    static std::int64_t step(std::int64_t piv, std::int64_t x, std::int64_t lead, std::int64_t top,
                             std::int64_t prev)
    {
        const __int128 num = static_cast<__int128>(piv) * x - static_cast<__int128>(lead) * top;
        const __int128 q = num / prev;
        if (q > static_cast<__int128>(INT64_MAX / 2) || q < -static_cast<__int128>(INT64_MAX / 2))
            throw Overflow{};
        return static_cast<std::int64_t>(q);
    }
};

template <>
struct Bareiss<BigInt> {
    static BigInt step(const BigInt& piv, const BigInt& x, const BigInt& lead, const BigInt& top,
                       const BigInt& prev)
    {
        BigInt num = piv * x - lead * top;
        BigInt q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        return q;
    }
};

// Returns the rank; `sign` flips on each row swap and `last_pivot` receives
// the final pivot (the determinant for square full-rank input, up to sign).
template <class Int>
std::size_t bareiss_eliminate(std::vector<Int>& a, std::size_t m, std::size_t n, int* sign = nullptr,
                              Int* last_pivot = nullptr)
{
    std::size_t rank = 0;
    Int prev(1);
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && is_zero(a[p * n + c])) ++p;
        if (p == m) continue;
        if (p != rank) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[rank * n + j]);
            if (sign) *sign = -*sign;
        }
        const Int piv = a[rank * n + c];
        for (std::size_t i = rank + 1; i < m; ++i) {
            const Int lead = a[i * n + c];
            for (std::size_t j = c + 1; j < n; ++j)
                a[i * n + j] = Bareiss<Int>::step(piv, a[i * n + j], lead, a[rank * n + j], prev);
            a[i * n + c] = Int(0);
        }
        prev = piv;
        ++rank;
    }
    if (last_pivot) *last_pivot = prev;
    return rank;
}

template <class Int>
std::vector<Int> load(const IntMatrix& a)
{
    std::vector<Int> out;
    out.reserve(a.rows() * a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.push_back(from_big<Int>(a(r, c)));
    return out;
}

} // namespace

SNFResult smith_normal_form(const IntMatrix& a, bool keep_transforms)
{
    try {
        return snf_with<std::int64_t>(a, keep_transforms);
    } catch (const Overflow&) {
        return snf_with<BigInt>(a, keep_transforms);
    }
}

std::size_t rational_rank(const IntMatrix& a)
{
    try {
        auto work = load<std::int64_t>(a);
        return bareiss_eliminate(work, a.rows(), a.cols());
    } catch (const Overflow&) {
        auto work = load<BigInt>(a);
        return bareiss_eliminate(work, a.rows(), a.cols());
    }
}

BigInt determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols()) throw Error(ErrorKind::BadParams, "determinant of a non-square matrix");
    if (a.rows() == 0) return 1;
    auto work = load<BigInt>(a);
    int sign = 1;
    BigInt last;
    const std::size_t rank = bareiss_eliminate(work, a.rows(), a.cols(), &sign, &last);
    if (rank < a.rows()) return 0;
    return sign * last;
}

BigInt kernel_count_from_diagonal(std::span<const BigInt> diagonal, std::size_t cols, std::uint64_t q)
{
    if (q < 1) throw Error(ErrorKind::BadModulus, "modulus must be at least 1");
    const BigInt qq = from_u64(q);
    BigInt count = big_pow(q, static_cast<unsigned long>(cols - diagonal.size()));
    for (const auto& d : diagonal) count *= big_gcd(d, qq);
    return count;
}

BigInt kernel_count_mod_q(const IntMatrix& a, std::uint64_t q)
{
    if (q < 1) throw Error(ErrorKind::BadModulus, "modulus must be at least 1");
    const SNFResult snf = smith_normal_form(a, false);
    return kernel_count_from_diagonal(snf.diagonal, a.cols(), q);
}

KernelEnumerator::KernelEnumerator(const IntMatrix& a, std::uint64_t q, std::uint64_t cap) : q_(q)
{
    if (q < 1) throw Error(ErrorKind::BadModulus, "modulus must be at least 1");
    const SNFResult snf = smith_normal_form(a, true);
    size_ = kernel_count_from_diagonal(snf.diagonal, a.cols(), q);
    if (size_ > from_u64(cap)) {
        throw Error(ErrorKind::CapExceeded,
                    "kernel has " + size_.get_str() + " vectors mod " + std::to_string(q) +
                        ", above the enumeration cap of " + std::to_string(cap),
                    size_);
    }

    const std::size_t n = a.cols();
    const IntMatrix& V = *snf.V;
    const BigInt qq = from_u64(q);
    current_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t radix = q;
        if (i < snf.rank) radix = big_gcd(snf.diagonal[i], qq).get_ui();
        const std::uint64_t step = q / radix;
        if (radix <= 1) continue;
        std::vector<std::uint64_t> gen(n);
        for (std::size_t r = 0; r < n; ++r) {
            const std::uint64_t vr = mod_u64(V(r, i), q);
            gen[r] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(vr) * step) % q);
        }
        generators_.push_back(std::move(gen));
        radix_.push_back(radix);
    }
    digits_.assign(radix_.size(), 0);
}

void KernelEnumerator::add_generator(std::size_t digit)
{
    const auto& gen = generators_[digit];
    for (std::size_t r = 0; r < current_.size(); ++r) {
        std::uint64_t s = current_[r] + gen[r];
        if (s >= q_) s -= q_;
        current_[r] = s;
    }
}

bool KernelEnumerator::next()
{
    if (done_) return false;
    if (!started_) {
        started_ = true;
        return true;
    }
    // radix * generator = 0 (mod q), so a wrapped digit leaves the vector unchanged.
    for (std::size_t d = 0; d < digits_.size(); ++d) {
        add_generator(d);
        if (++digits_[d] < radix_[d]) return true;
        digits_[d] = 0;
    }
    done_ = true;
    return false;
}

std::vector<std::vector<std::uint64_t>> enumerate_kernel_mod_q(const IntMatrix& a, std::uint64_t q,
                                                               std::uint64_t cap)
{
    KernelEnumerator it(a, q, cap);
    std::vector<std::vector<std::uint64_t>> out;
    while (it.next()) out.push_back(it.current());
    return out;
}

std::vector<std::vector<BigInt>> integer_kernel_basis(const IntMatrix& a)
{
    const SNFResult snf = smith_normal_form(a, true);
    const IntMatrix& V = *snf.V;
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t i = snf.rank; i < a.cols(); ++i) {
        std::vector<BigInt> col(a.cols());
        for (std::size_t r = 0; r < a.cols(); ++r) col[r] = V(r, i);
        basis.push_back(std::move(col));
    }
    return basis;
}

Invariants snf_invariants(std::span<const std::int64_t> matrix, std::size_t rows, std::size_t cols)
{
    thread_local std::vector<std::int64_t> scratch;
    scratch.assign(matrix.begin(), matrix.end());
    Invariants out;
    try {
        SnfEngine<std::int64_t> engine(scratch, rows, cols, nullptr, nullptr);
        for (std::int64_t d : engine.run()) {
            ++out.rank;
            if (d > 1) out.torsion.push_back(from_i64(d));
        }
        return out;
    } catch (const Overflow&) {
        std::vector<BigInt> big;
        big.reserve(matrix.size());
        for (auto x : matrix) big.push_back(from_i64(x));
        SnfEngine<BigInt> engine(big, rows, cols, nullptr, nullptr);
        out = Invariants{};
        for (const auto& d : engine.run()) {
            ++out.rank;
            if (d > 1) out.torsion.push_back(d);
        }
        return out;
    }
}

std::size_t bareiss_rank(std::span<const std::int64_t> matrix, std::size_t rows, std::size_t cols)
{
    thread_local std::vector<std::int64_t> scratch;
    scratch.assign(matrix.begin(), matrix.end());
    try {
        return bareiss_eliminate(scratch, rows, cols);
    } catch (const Overflow&) {
        std::vector<BigInt> big;
        big.reserve(matrix.size());
        for (auto x : matrix) big.push_back(from_i64(x));
        return bareiss_eliminate(big, rows, cols);
    }
}

} // namespace simflow

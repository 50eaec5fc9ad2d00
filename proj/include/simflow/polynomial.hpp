#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simflow/bigint.hpp"

namespace simflow {

/// Dense univariate polynomial with integer coefficients; coefficients()[i]
/// multiplies var^i. Trailing zeros are never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coefficients);

    static Polynomial monomial(const BigInt& coefficient, std::size_t degree);

    const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const noexcept { return coefficients_.empty(); }
    BigInt coefficient(std::size_t i) const { return i < coefficients_.size() ? coefficients_[i] : BigInt(0); }

    BigInt evaluate(const BigInt& at) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Descending degree with explicit signs, e.g. "q^3 - 6q^2 + 11q - 6".
    std::string to_string(std::string_view var = "q") const;

private:
    void trim();
    std::vector<BigInt> coefficients_;
};

/// Sparse polynomial in x, y; zero coefficients are never stored.
class BivariatePolynomial {
public:
    using Monomial = std::pair<unsigned, unsigned>; // (i, j) for x^i y^j

    void add(unsigned i, unsigned j, const BigInt& coefficient);
    /// Adds weight * (x - 1)^a * (y - 1)^b.
    void add_shifted(unsigned a, unsigned b, const BigInt& weight);

    BigInt coefficient(unsigned i, unsigned j) const;
    const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    BigInt evaluate(const BigInt& x, const BigInt& y) const;
    /// The polynomial with x and y exchanged.
    BivariatePolynomial swapped() const;

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

    /// Graded lexicographic order with x > y, e.g. "x^2 + x + y".
    std::string to_string() const;

private:
    std::map<Monomial, BigInt> terms_;
};

/// One polynomial per residue class modulo the period.
class Quasipolynomial {
public:
    Quasipolynomial() = default;
    explicit Quasipolynomial(std::vector<Polynomial> constituents);

    std::size_t period() const noexcept { return constituents_.size(); }
    const std::vector<Polynomial>& constituents() const noexcept { return constituents_; }
    const Polynomial& constituent(std::uint64_t q) const { return constituents_[q % period()]; }
    BigInt evaluate(std::uint64_t q) const;
    int degree() const noexcept;

    /// Constituents for residues 0, 1, ... joined by "; ".
    std::string to_string(std::string_view var = "q") const;

private:
    std::vector<Polynomial> constituents_;
};

/// Lagrange interpolation through (xs[i], ys[i]). Sets `integral` to false
/// when some coefficient is not an integer (only its numerator is kept).
Polynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys, bool& integral);

} // namespace simflow

#include "simflow/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "simflow/error.hpp"

namespace simflow {
namespace {

// Appends one signed term; `body` is the monomial text without coefficient.
void append_term(std::string& out, const BigInt& coefficient, const std::string& body)
{
    const bool negative = coefficient < 0;
    const BigInt magnitude = abs(coefficient);
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (body.empty() || magnitude != 1) out += magnitude.get_str();
    out += body;
}

std::string power(std::string_view var, unsigned e)
{
    if (e == 0) return {};
    std::string s(var);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

} // namespace

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const BigInt& coefficient, std::size_t degree)
{
    std::vector<BigInt> c(degree + 1, 0);
    c[degree] = coefficient;
    return Polynomial(std::move(c));
}

void Polynomial::trim()
{
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt Polynomial::evaluate(const BigInt& at) const
{
    BigInt acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0);
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0);
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string(std::string_view var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        if (coefficients_[i] == 0) continue;
        append_term(out, coefficients_[i], power(var, static_cast<unsigned>(i)));
    }
    return out;
}

void BivariatePolynomial::add(unsigned i, unsigned j, const BigInt& coefficient)
{
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

void BivariatePolynomial::add_shifted(unsigned a, unsigned b, const BigInt& weight)
{
    if (weight == 0) return;
    for (unsigned i = 0; i <= a; ++i) {
        BigInt ci = binomial(a, i) * weight;
        if ((a - i) % 2 == 1) ci = -ci;
        for (unsigned j = 0; j <= b; ++j) {
            BigInt cij = ci * binomial(b, j);
            if ((b - j) % 2 == 1) cij = -cij;
            add(i, j, cij);
        }
    }
}

BigInt BivariatePolynomial::coefficient(unsigned i, unsigned j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt BivariatePolynomial::evaluate(const BigInt& x, const BigInt& y) const
{
    BigInt acc = 0;
    for (const auto& [m, c] : terms_) acc += c * big_pow(x, m.first) * big_pow(y, m.second);
    return acc;
}

BivariatePolynomial BivariatePolynomial::swapped() const
{
    BivariatePolynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(BivariatePolynomial::Monomial{m.second, m.first}, c);
    return out;
}

std::string BivariatePolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, BigInt>> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
        const unsigned dl = l.first.first + l.first.second;
        const unsigned dr = r.first.first + r.first.second;
        if (dl != dr) return dl > dr;
        return l.first.first > r.first.first;
    });
    std::string out;
    for (const auto& [m, c] : order) {
        std::string body = power("x", m.first);
        body += power("y", m.second);
        append_term(out, c, body);
    }
    return out;
}

Quasipolynomial::Quasipolynomial(std::vector<Polynomial> constituents) : constituents_(std::move(constituents))
{
    if (constituents_.empty()) throw Error(ErrorKind::BadParams, "quasipolynomial needs at least one constituent");
}

BigInt Quasipolynomial::evaluate(std::uint64_t q) const { return constituent(q).evaluate(from_u64(q)); }

int Quasipolynomial::degree() const noexcept
{
    int d = -1;
    for (const auto& p : constituents_) d = std::max(d, p.degree());
    return d;
}

std::string Quasipolynomial::to_string(std::string_view var) const
{
    std::string out;
    for (std::size_t i = 0; i < constituents_.size(); ++i) {
        if (i) out += "; ";
        out += constituents_[i].to_string(var);
    }
    return out;
}

Polynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys, bool& integral)
{
    const std::size_t n = xs.size();
    std::vector<BigRational> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // Basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j), built in ascending coefficients.
        std::vector<BigRational> basis{1};
        BigRational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<BigRational> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * BigRational(xs[j]);
            }
            basis = std::move(next);
            denom *= BigRational(xs[i] - xs[j]);
        }
        const BigRational scale = BigRational(ys[i]) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
    }
    integral = true;
    std::vector<BigInt> out;
    for (auto& c : acc) {
        c.canonicalize();
        if (c.get_den() != 1) integral = false;
        out.push_back(c.get_num());
    }
    return Polynomial(std::move(out));
}

} // namespace simflow

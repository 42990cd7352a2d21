// Dense univariate polynomials with exact integer coefficients.
//
// Coefficients are stored lowest degree first and trailing zeros are trimmed,
// so the zero polynomial is the empty vector and degree() is -1 for it.

#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace chromapol {

class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs) : coef_(std::move(coeffs)) { trim(); }

    /// c * x^k
    static IntPolynomial monomial(int k, BigInt c = 1) {
        if (k < 0) throw std::invalid_argument("monomial degree must be nonnegative");
        std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
        v.back() = std::move(c);
        return IntPolynomial(std::move(v));
    }

    static IntPolynomial constant(BigInt c) { return monomial(0, std::move(c)); }
    static IntPolynomial one() { return constant(1); }
    static IntPolynomial x() { return monomial(1); }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }

    /// Coefficient of x^k; zero beyond the stored degree.
    const BigInt& coeff(int k) const {
        static const BigInt zero = 0;
        if (k < 0 || k >= static_cast<int>(coef_.size())) return zero;
        return coef_[static_cast<std::size_t>(k)];
    }

    const std::vector<BigInt>& coefficients() const { return coef_; }

    /// Coefficients x^0..x^(size-1), zero padded; size must cover the degree.
    std::vector<BigInt> coefficient_list(int size) const {
        if (size < static_cast<int>(coef_.size()))
            throw std::invalid_argument("coefficient_list size below degree");
        std::vector<BigInt> out(static_cast<std::size_t>(size));
        std::copy(coef_.begin(), coef_.end(), out.begin());
        return out;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> v(std::max(a.coef_.size(), b.coef_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.coef_.size()) v[i] += a.coef_[i];
            if (i < b.coef_.size()) v[i] += b.coef_[i];
        }
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> v(std::max(a.coef_.size(), b.coef_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.coef_.size()) v[i] += a.coef_[i];
            if (i < b.coef_.size()) v[i] -= b.coef_[i];
        }
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator-(const IntPolynomial& a) {
        std::vector<BigInt> v(a.coef_);
        for (auto& c : v) c = -c;
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> v(a.coef_.size() + b.coef_.size() - 1);
        for (std::size_t i = 0; i < a.coef_.size(); ++i) {
            if (a.coef_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coef_.size(); ++j) v[i + j] += a.coef_[i] * b.coef_[j];
        }
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const BigInt& s) {
        std::vector<BigInt> v(a.coef_);
        for (auto& c : v) c *= s;
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) { return a * s; }

    IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
    IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coef_ == b.coef_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    IntPolynomial derivative() const {
        if (coef_.size() <= 1) return {};
        std::vector<BigInt> v(coef_.size() - 1);
        for (std::size_t k = 1; k < coef_.size(); ++k) v[k - 1] = coef_[k] * BigInt(k);
        return IntPolynomial(std::move(v));
    }

    BigInt evaluate(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    BigRational evaluate(const BigRational& x) const {
        BigRational acc = 0;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + BigRational(*it);
        return acc;
    }

    /// Human readable form, highest degree first, e.g. "x^4 - 4*x^3 + 6*x^2 - 3*x".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const BigInt& c = coeff(k);
            if (c == 0) continue;
            const BigInt mag = abs(c);
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (mag != 1 || k == 0) out << mag.str();
            if (k > 0) {
                if (mag != 1) out << "*";
                out << "x";
                if (k > 1) out << "^" << k;
            }
        }
        return out.str();
    }

private:
    void trim() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }

    std::vector<BigInt> coef_;
};

}  // namespace chromapol

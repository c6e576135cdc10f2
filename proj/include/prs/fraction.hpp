#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "prs/errors.hpp"

namespace prs {

// Exact rational number. All probabilities, thresholds and the eta/mu fitness
// values are ratios of small integers (numerators bounded by |U| * #classes),
// so int64 components with __int128 cross-multiplication comparisons are exact
// with room to spare. Stored in lowest terms, denominator > 0.
class Fraction {
public:
    constexpr Fraction() : num_(0), den_(1) {}
    constexpr Fraction(std::int64_t n) : num_(n), den_(1) {}

    Fraction(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw ValidationError("fraction with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num_ == 0) throw ValidationError("fraction division by zero");
        return Fraction(a.num_ * b.den_, a.den_ * b.num_);
    }

    // Comparisons cross-multiply in 128 bits: exact, no overflow, no rounding.
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return static_cast<__int128>(a.num_) * b.den_ ==
               static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Lowest-terms rendering; integers print without the denominator.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses a plain decimal ("0.6", "1", ".25") into the exact rational it
    // denotes (3/5, 1, 1/4). This is the only accepted threshold syntax: the
    // text is the ground truth, never a double round-trip.
    static Fraction parse_decimal(const std::string& text);

private:
    void normalize() {
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Fraction Fraction::parse_decimal(const std::string& text) {
    if (text.empty()) throw ValidationError("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') { neg = text[i] == '-'; ++i; }
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool any_digit = false;
    bool seen_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_dot) throw ValidationError("malformed number: " + text);
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') throw ValidationError("malformed number: " + text);
        if (num > (INT64_MAX - 9) / 10) throw ValidationError("number out of range: " + text);
        num = num * 10 + (c - '0');
        if (seen_dot) {
            if (den > INT64_MAX / 10) throw ValidationError("number out of range: " + text);
            den *= 10;
        }
        any_digit = true;
    }
    if (!any_digit) throw ValidationError("malformed number: " + text);
    return Fraction(neg ? -num : num, den);
}

} // namespace prs

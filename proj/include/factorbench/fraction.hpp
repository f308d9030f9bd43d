#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace factorbench {

/// Exact rational p/q with q > 0 and gcd(p, q) = 1.
///
/// Every threshold and toughness value goes through this type; the
/// workbench never compares floating-point numbers when deciding a
/// premise. Products are formed in 128-bit arithmetic and an overflow of
/// the normalized 64-bit result throws std::overflow_error.
class Fraction {
public:
    constexpr Fraction() = default;
    constexpr Fraction(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
    Fraction(std::int64_t num, std::int64_t den) { assign(num, den); }

    [[nodiscard]] constexpr std::int64_t num() const { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const { return den_; }

    friend Fraction operator+(const Fraction& x, const Fraction& y) {
        return from_wide(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
                         static_cast<__int128>(x.den_) * y.den_);
    }
    friend Fraction operator-(const Fraction& x, const Fraction& y) {
        return from_wide(static_cast<__int128>(x.num_) * y.den_ - static_cast<__int128>(y.num_) * x.den_,
                         static_cast<__int128>(x.den_) * y.den_);
    }
    friend Fraction operator*(const Fraction& x, const Fraction& y) {
        return from_wide(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
    }
    friend Fraction operator/(const Fraction& x, const Fraction& y) {
        if (y.num_ == 0) throw std::domain_error("Fraction: division by zero");
        return from_wide(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
    }
    Fraction operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
        const __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
        const __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", always with an explicit denominator ("4/1").
    [[nodiscard]] std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// Parses "p/q" or "p".
    static Fraction parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

private:
    void assign(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

    static Fraction from_wide(__int128 num, __int128 den) {
        if (den == 0) throw std::domain_error("Fraction: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        constexpr __int128 lo = INT64_MIN;
        constexpr __int128 hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) throw std::overflow_error("Fraction: 64-bit overflow");
        Fraction f;
        f.num_ = static_cast<std::int64_t>(num);
        f.den_ = static_cast<std::int64_t>(den);
        return f;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Fraction Fraction::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const auto v = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Fraction(v);
        }
        const std::string p = text.substr(0, slash);
        const std::string q = text.substr(slash + 1);
        std::size_t used_q = 0;
        const auto pn = std::stoll(p, &used);
        const auto qn = std::stoll(q, &used_q);
        if (used != p.size() || used_q != q.size()) throw std::invalid_argument(text);
        return Fraction(pn, qn);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a fraction: '" + text + "'");
    }
}

}  // namespace factorbench

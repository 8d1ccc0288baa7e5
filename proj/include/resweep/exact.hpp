#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace resweep {

using u128 = unsigned __int128;

/// Exact signed rational for measure values and bound certificates.
using Rational = boost::multiprecision::cpp_rational;

/// Non-negative rational num/den over 128-bit integers, kept in lowest terms.
///
/// Ordering never multiplies num by den: it walks the continued-fraction
/// expansions of both sides, so any pair of representable ratios compares
/// exactly. This matters for the resolution Z*w/(d*d'), where each side can
/// need ~80 bits once Z reaches 2^40.
class ExactRatio {
public:
    constexpr ExactRatio() = default;
    ExactRatio(u128 num, u128 den);

    static ExactRatio from_int(std::uint64_t v) { return ExactRatio(v, 1); }

    /// Parses "3", "1.25", "3/2" or "6e-1" style non-negative literals exactly.
    static ExactRatio parse(std::string_view text);

    u128 num() const noexcept { return num_; }
    u128 den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }

    double to_double() const noexcept;
    Rational to_rational() const;
    std::string to_string() const;

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) noexcept;

private:
    u128 num_ = 0;
    u128 den_ = 1;
};

/// Exact ordering of a/b against c/d (b, d > 0) without cross products.
std::strong_ordering compare_fractions(u128 a, u128 b, u128 c, u128 d) noexcept;

u128 gcd_u128(u128 a, u128 b) noexcept;
std::string u128_to_string(u128 v);
Rational to_rational(u128 v);

}  // namespace resweep

#include "resweep/exact.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace resweep {

u128 gcd_u128(u128 a, u128 b) noexcept {
    while (b != 0) {
        u128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Rational to_rational(u128 v) {
    using boost::multiprecision::cpp_int;
    cpp_int hi = static_cast<std::uint64_t>(v >> 64);
    cpp_int lo = static_cast<std::uint64_t>(v);
    return Rational((hi << 64) | lo);
}

ExactRatio::ExactRatio(u128 num, u128 den) : num_(num), den_(den) {
    if (den == 0) throw std::invalid_argument("ExactRatio: zero denominator");
    u128 g = gcd_u128(num, den);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

std::strong_ordering operator<=>(const ExactRatio& lhs, const ExactRatio& rhs) noexcept {
    return compare_fractions(lhs.num_, lhs.den_, rhs.num_, rhs.den_);
}

std::strong_ordering compare_fractions(u128 a, u128 b, u128 c, u128 d) noexcept {
    bool flipped = false;
    auto result = [&](std::strong_ordering o) {
        if (!flipped || o == std::strong_ordering::equal) return o;
        return o == std::strong_ordering::less ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
    };
    for (;;) {
        u128 qa = a / b, qc = c / d;
        if (qa != qc) return result(qa < qc ? std::strong_ordering::less : std::strong_ordering::greater);
        u128 ra = a % b, rc = c % d;
        if (ra == 0 && rc == 0) return std::strong_ordering::equal;
        if (ra == 0) return result(std::strong_ordering::less);
        if (rc == 0) return result(std::strong_ordering::greater);
        // ra/b < rc/d  <=>  b/ra > d/rc
        const u128 next_a = b, next_c = d;
        a = next_a;
        b = ra;
        c = next_c;
        d = rc;
        flipped = !flipped;
    }
}

double ExactRatio::to_double() const noexcept {
    return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

Rational ExactRatio::to_rational() const {
    return resweep::to_rational(num_) / resweep::to_rational(den_);
}

std::string ExactRatio::to_string() const {
    if (den_ == 1) return u128_to_string(num_);
    return u128_to_string(num_) + "/" + u128_to_string(den_);
}

namespace {

constexpr u128 kMax = std::numeric_limits<u128>::max();

u128 parse_digits(std::string_view s, std::string_view whole) {
    if (s.empty()) throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    u128 v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
        if (v > (kMax - 9) / 10) throw std::out_of_range("number too large: '" + std::string(whole) + "'");
        v = v * 10 + static_cast<unsigned>(ch - '0');
    }
    return v;
}

u128 pow10(int e, std::string_view whole) {
    u128 p = 1;
    for (int i = 0; i < e; ++i) {
        if (p > kMax / 10) throw std::out_of_range("exponent too large: '" + std::string(whole) + "'");
        p *= 10;
    }
    return p;
}

}  // namespace

ExactRatio ExactRatio::parse(std::string_view text) {
    std::string_view s = text;
    if (s.empty()) throw std::invalid_argument("empty number");
    if (s.front() == '+') s.remove_prefix(1);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        u128 n = parse_digits(s.substr(0, slash), text);
        u128 d = parse_digits(s.substr(slash + 1), text);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        return ExactRatio(n, d);
    }
    int exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view es = s.substr(e + 1);
        if (!es.empty() && es.front() == '+') es.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), exponent);
        if (ec != std::errc() || ptr != es.data() + es.size())
            throw std::invalid_argument("bad exponent: '" + std::string(text) + "'");
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
        digits.append(ip).append(fp);
        exponent -= static_cast<int>(fp.size());
    } else {
        digits.assign(s);
    }
    u128 n = parse_digits(digits, text);
    if (exponent >= 0) {
        u128 p = pow10(exponent, text);
        if (n != 0 && n > kMax / p) throw std::out_of_range("number too large: '" + std::string(text) + "'");
        return ExactRatio(n * p, 1);
    }
    return ExactRatio(n, pow10(-exponent, text));
}

}  // namespace resweep

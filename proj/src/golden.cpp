#include "ramsey/golden.hpp"

#include <cmath>
#include <ostream>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw ArithmeticOverflow("golden: add overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw ArithmeticOverflow("golden: sub overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw ArithmeticOverflow("golden: mul overflow");
    return r;
}

// Floor of sqrt(x) for x >= 0, exact.
std::int64_t isqrt(unsigned __int128 x) {
    if (x == 0) return 0;
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (s > 0 && static_cast<unsigned __int128>(s) * static_cast<unsigned __int128>(s) > x) --s;
    while (static_cast<unsigned __int128>(s + 1) * static_cast<unsigned __int128>(s + 1) <= x) ++s;
    return s;
}

std::int64_t floor_div2(std::int64_t x) { return x >= 0 ? x / 2 : (x - 1) / 2; }

}  // namespace

GoldenNumber GoldenNumber::operator+(const GoldenNumber& o) const {
    return {checked_add(a, o.a), checked_add(b, o.b)};
}

GoldenNumber GoldenNumber::operator-(const GoldenNumber& o) const {
    return {checked_sub(a, o.a), checked_sub(b, o.b)};
}

GoldenNumber GoldenNumber::operator-() const { return {checked_sub(0, a), checked_sub(0, b)}; }

GoldenNumber GoldenNumber::operator*(const GoldenNumber& o) const {
    // (a*phi + b)(c*phi + d) = ac*phi^2 + (ad + bc)*phi + bd
    //                        = (ac + ad + bc)*phi + (ac + bd)
    const std::int64_t ac = checked_mul(a, o.a);
    const std::int64_t ad = checked_mul(a, o.b);
    const std::int64_t bc = checked_mul(b, o.a);
    const std::int64_t bd = checked_mul(b, o.b);
    return {checked_add(ac, checked_add(ad, bc)), checked_add(ac, bd)};
}

std::strong_ordering GoldenNumber::operator<=>(const GoldenNumber& o) const {
    const auto da = static_cast<__int128>(a) - o.a;
    const auto db = static_cast<__int128>(b) - o.b;
    // sign(da*phi + db) = sign(da*sqrt5 + (da + 2*db))
    const __int128 s = da + 2 * db;
    if (da == 0) {
        if (s == 0) return std::strong_ordering::equal;
        return s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (da > 0 && s >= 0) return std::strong_ordering::greater;
    if (da < 0 && s <= 0) return std::strong_ordering::less;
    // Opposite signs: compare 5*da^2 with s^2. |da|,|s| stay far below 2^62
    // at game scale; guard anyway so squaring cannot wrap.
    constexpr __int128 kMag = static_cast<__int128>(1) << 62;
    if (da > kMag || -da > kMag || s > kMag || -s > kMag)
        throw ArithmeticOverflow("golden: compare magnitude");
    const __int128 lhs = 5 * da * da;
    const __int128 rhs = s * s;
    // lhs == rhs would force da = s = 0 (sqrt5 is irrational); unreachable here.
    const bool sqrt_term_wins = lhs > rhs;
    if (da > 0) return sqrt_term_wins ? std::strong_ordering::greater : std::strong_ordering::less;
    return sqrt_term_wins ? std::strong_ordering::less : std::strong_ordering::greater;
}

int GoldenNumber::sign() const {
    auto c = *this <=> GoldenNumber{0, 0};
    if (c == std::strong_ordering::equal) return 0;
    return c == std::strong_ordering::greater ? 1 : -1;
}

std::int64_t GoldenNumber::floor_value() const {
    if (a == 0) return b;
    // a*phi = (a + a*sqrt5)/2. With s = floor(|a|*sqrt5), a*sqrt5 lies in
    // (s, s+1) for a > 0 and in (-s-1, -s) for a < 0; it is never an integer.
    const std::int64_t mag = a > 0 ? a : checked_sub(0, a);
    const unsigned __int128 sq =
        5 * static_cast<unsigned __int128>(mag) * static_cast<unsigned __int128>(mag);
    const std::int64_t s = isqrt(sq);
    const std::int64_t lo = a > 0 ? checked_add(a, s) : checked_sub(checked_sub(a, s), 1);
    // a + a*sqrt5 is in the open interval (lo, lo+1), so floor((..)/2) is
    // floor(lo/2) for either parity of lo.
    return checked_add(floor_div2(lo), b);
}

std::int64_t GoldenNumber::ceil_value() const {
    if (a == 0) return b;
    return checked_add(floor_value(), 1);
}

double GoldenNumber::approx() const {
    constexpr double kPhi = 1.6180339887498948482;
    return static_cast<double>(a) * kPhi + static_cast<double>(b);
}

std::string GoldenNumber::str() const {
    if (a == 0) return std::to_string(b);
    std::string out = std::to_string(a) + "*phi";
    if (b > 0) out += "+" + std::to_string(b);
    if (b < 0) out += std::to_string(b);
    return out;
}

std::ostream& operator<<(std::ostream& os, const GoldenNumber& g) { return os << g.str(); }

}  // namespace ramsey

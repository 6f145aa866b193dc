#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ramsey {

// Exact element of Z[phi], the ring of integer combinations a*phi + b where
// phi = (sqrt(5)+1)/2. Multiplication reduces by phi^2 = phi + 1, so the
// representation (a, b) is closed and unique: a*phi + b = c*phi + d forces
// a = c and b = d because phi is irrational. All strategy thresholds in the
// engine are compared in this ring; no floating point is involved anywhere a
// decision is made.
//
// Coefficients are 64-bit and every operation is overflow-checked; an
// overflow throws ArithmeticOverflow instead of wrapping.
struct GoldenNumber {
    std::int64_t a = 0;  // coefficient of phi
    std::int64_t b = 0;  // integer part

    constexpr GoldenNumber() = default;
    constexpr GoldenNumber(std::int64_t phi_coeff, std::int64_t unit) : a(phi_coeff), b(unit) {}

    static constexpr GoldenNumber phi() { return {1, 0}; }
    // phi^2 = phi + 1, phi^3 = 2*phi + 1
    static constexpr GoldenNumber phi_squared() { return {1, 1}; }
    static constexpr GoldenNumber phi_cubed() { return {2, 1}; }
    static constexpr GoldenNumber of_int(std::int64_t n) { return {0, n}; }

    GoldenNumber operator+(const GoldenNumber& o) const;
    GoldenNumber operator-(const GoldenNumber& o) const;
    GoldenNumber operator-() const;
    GoldenNumber operator*(const GoldenNumber& o) const;
    GoldenNumber& operator+=(const GoldenNumber& o) { return *this = *this + o; }
    GoldenNumber& operator-=(const GoldenNumber& o) { return *this = *this - o; }

    bool operator==(const GoldenNumber&) const = default;

    // Exact ordering of the represented reals using integer arithmetic only:
    // sign(da*phi + db) = sign(da*sqrt5 + (da + 2db)), resolved by sign cases
    // and comparing 5*da^2 against (da + 2db)^2.
    std::strong_ordering operator<=>(const GoldenNumber& o) const;

    // -1, 0, +1 of the represented real.
    int sign() const;

    // Smallest integer >= a*phi + b, via exact integer square-root
    // bracketing of a*sqrt5. No floating point.
    std::int64_t ceil_value() const;
    std::int64_t floor_value() const;

    // Approximate double value; for reporting only, never for decisions.
    double approx() const;

    // Rendered as "a*phi+b", e.g. "2*phi-3"; bare integers drop the phi term.
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GoldenNumber& g);

}  // namespace ramsey

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ht {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Field operations shared by both backends. Exact equality for Rational,
// scale-aware tolerance for Complex.
template <class K>
struct Field;

template <>
struct Field<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long v) { return Rational(v); }
    static Rational from_ratio(long num, long den) {
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    static bool is_zero(const Rational& a, double = 0.0) { return sgn(a) == 0; }
    static bool near(const Rational& a, const Rational& b, double = 0.0) { return a == b; }
    static double magnitude(const Rational& a) { return std::fabs(a.get_d()); }
    static Rational inverse(const Rational& a) {
        if (sgn(a) == 0) throw std::domain_error("inverse of zero");
        return Rational(1) / a;
    }
    static std::string str(const Rational& a) { return a.get_str(); }
    static Complex to_complex(const Rational& a) { return Complex(a.get_d(), 0.0); }
};

template <>
struct Field<Complex> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float";
    static Complex zero() { return Complex(0.0, 0.0); }
    static Complex one() { return Complex(1.0, 0.0); }
    static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
    static Complex from_ratio(long num, long den) {
        return Complex(static_cast<double>(num) / static_cast<double>(den), 0.0);
    }
    static bool is_zero(const Complex& a, double tol = 1e-9) { return std::abs(a) <= tol; }
    static bool near(const Complex& a, const Complex& b, double tol = 1e-9) {
        double scale = std::max(std::abs(a), std::abs(b));
        return std::abs(a - b) <= tol * (1.0 + scale);
    }
    static double magnitude(const Complex& a) { return std::abs(a); }
    static Complex inverse(const Complex& a) {
        if (a == Complex(0.0, 0.0)) throw std::domain_error("inverse of zero");
        return Complex(1.0, 0.0) / a;
    }
    static std::string str(const Complex& a);
    static Complex to_complex(const Complex& a) { return a; }
};

// Shared tolerance for float comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

}  // namespace ht

#pragma once

#include <mpfr.h>

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "mellin/errors.hpp"

namespace mellin {

// Decimal digits <-> binary precision.
long digits_to_bits(long digits);
long bits_to_digits(long bits);

// Precision used for newly created values on the calling thread.
long current_bits();
long current_digits();

// Sets the calling thread's working precision for the guard's lifetime.
class PrecisionGuard {
public:
    explicit PrecisionGuard(long digits);
    static PrecisionGuard from_bits(long bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
    PrecisionGuard(PrecisionGuard&& o) noexcept : saved_(o.saved_), active_(o.active_) { o.active_ = false; }

private:
    struct BitsTag {};
    PrecisionGuard(long bits, BitsTag);
    long saved_;
    bool active_ = true;
};

struct PrecisionContext {
    int working_digits = 40;
    int target_digits = 30;
    int guard_digits = 10;

    static PrecisionContext for_target(int target, int guard = 10) {
        return PrecisionContext{target + guard, target, guard};
    }
    PrecisionContext with_working(int w) const {
        PrecisionContext c = *this;
        c.working_digits = w;
        return c;
    }
    // Throws ConfigError when working < target + guard.
    void validate() const;
};

class Real {
public:
    Real();
    Real(int v);
    Real(long v);
    Real(unsigned long v);
    Real(double v);
    explicit Real(const std::string& decimal);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    ~Real();

    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // log10|x| without overflow; -inf for zero.
    double log10_abs() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real operator-() const;

    // Exact p/q or decimal literal at current precision ("1/3", "-0.25", "2e-3").
    static Real parse(const std::string& text);

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real round(const Real& x);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
// sin(πx), cos(πx) with exact zeros at (half-)integers.
Real sin_pi(const Real& x);
Real cos_pi(const Real& x);

Real const_pi();
Real const_euler();
Real const_ln2();
// 10^{-d} at current precision.
Real tenth_power(long d);

// Decimal string with `digits` significant digits, '.' separator.
std::string to_string(const Real& x, int digits);

struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}
    Complex(long r) : re(r), im(0) {}
    Complex(double r) : re(r), im(0) {}

    bool is_real() const { return im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex& operator*=(const Real& o);
    Complex operator-() const { return Complex(-re, -im); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

Complex I_unit();
Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);
Complex tanh(const Complex& z);
Complex coth(const Complex& z);
Complex csch(const Complex& z);
Complex sech(const Complex& z);
Complex atan(const Complex& z);
Complex pow(const Complex& z, const Complex& w);  // principal
Complex pow(const Real& base, const Complex& w);  // base > 0
Complex pow(const Complex& z, long n);
// e^{iθ}
Complex expi(const Real& theta);
// sin(πz) with exact zeros at integers
Complex sin_pi(const Complex& z);
Complex cos_pi(const Complex& z);

std::string to_string(const Complex& z, int digits);

enum class Fn { exp, log, sqrt, sin, cos, sinh, cosh, tanh, coth, csch, sech, arctan };

// Throws DomainError on poles/branch points hit exactly and PrecisionOverflow
// when the result leaves MPFR's exponent range.
Complex eval_elementary(Fn f, const Complex& z, const PrecisionContext& ctx);
Complex eval_power(const Complex& z, const Complex& w, const PrecisionContext& ctx);
Fn fn_from_name(const std::string& name);

// Number of leading decimal digits on which a and b agree, relative to
// max(1, |a|, |b|).
int digits_agreed(const Complex& a, const Complex& b, int cap);

// Runs `eval` at ctx.working_digits and ctx.working_digits + 10; throws
// UnstableEvaluation when the two disagree before target_digits.
Complex refine(const std::function<Complex(const PrecisionContext&)>& eval, const PrecisionContext& ctx);

}  // namespace mellin

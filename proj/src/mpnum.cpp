#include "mellin/mpnum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

namespace mellin {

namespace {

constexpr double kBitsPerDigit = 3.3219280948873623;

thread_local long t_bits = 141;

mpfr_prec_t clamp_prec(long bits) {
    return static_cast<mpfr_prec_t>(std::max<long>(bits, MPFR_PREC_MIN));
}

void check_range(const Real& x, const char* what) {
    if (mpfr_inf_p(x.raw()) || mpfr_nan_p(x.raw())) throw PrecisionOverflow(what);
}

// Append-only constant cache keyed by precision in bits.
class ConstCache {
public:
    using Fill = int (*)(mpfr_ptr, mpfr_rnd_t);
    explicit ConstCache(Fill fill) : fill_(fill) {}

    Real get() {
        long bits = current_bits();
        std::lock_guard<std::mutex> lock(mu_);
        auto it = table_.find(bits);
        if (it == table_.end()) {
            auto v = std::make_unique<Real>();
            fill_(v->raw(), MPFR_RNDN);
            it = table_.emplace(bits, std::move(v)).first;
        }
        return *it->second;
    }

private:
    Fill fill_;
    std::mutex mu_;
    std::map<long, std::unique_ptr<Real>> table_;
};

ConstCache& pi_cache() {
    static ConstCache c(&mpfr_const_pi);
    return c;
}
ConstCache& euler_cache() {
    static ConstCache c(&mpfr_const_euler);
    return c;
}
ConstCache& ln2_cache() {
    static ConstCache c(&mpfr_const_log2);
    return c;
}

}  // namespace

long digits_to_bits(long digits) { return static_cast<long>(std::ceil(digits * kBitsPerDigit)) + 8; }
long bits_to_digits(long bits) { return static_cast<long>(std::floor((bits - 8) / kBitsPerDigit)); }
long current_bits() { return t_bits; }
long current_digits() { return bits_to_digits(t_bits); }

PrecisionGuard::PrecisionGuard(long digits) : saved_(t_bits) { t_bits = digits_to_bits(digits); }
PrecisionGuard::PrecisionGuard(long bits, BitsTag) : saved_(t_bits) { t_bits = bits; }
PrecisionGuard PrecisionGuard::from_bits(long bits) { return PrecisionGuard(bits, BitsTag{}); }
PrecisionGuard::~PrecisionGuard() {
    if (active_) t_bits = saved_;
}

void PrecisionContext::validate() const {
    if (target_digits <= 0 || guard_digits <= 0)
        throw ConfigError("target and guard digits must be positive");
    if (working_digits < target_digits + guard_digits)
        throw ConfigError("working digits below target + guard");
}

// ---- Real ----

Real::Real() {
    mpfr_init2(v_, clamp_prec(t_bits));
    mpfr_set_zero(v_, 1);
}
Real::Real(int v) {
    mpfr_init2(v_, clamp_prec(t_bits));
    mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(long v) {
    mpfr_init2(v_, clamp_prec(t_bits));
    mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(unsigned long v) {
    mpfr_init2(v_, clamp_prec(t_bits));
    mpfr_set_ui(v_, v, MPFR_RNDN);
}
Real::Real(double v) {
    mpfr_init2(v_, clamp_prec(t_bits));
    mpfr_set_d(v_, v, MPFR_RNDN);
}
Real::Real(const std::string& decimal) {
    mpfr_init2(v_, clamp_prec(t_bits));
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(v_))
        throw DomainError("not a number: " + decimal);
}
Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}
Real::~Real() { mpfr_clear(v_); }

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}
Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

double Real::log10_abs() const {
    if (mpfr_zero_p(v_)) return -INFINITY;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

Real& Real::operator+=(const Real& o) {
    *this = *this + o;
    return *this;
}
Real& Real::operator-=(const Real& o) {
    *this = *this - o;
    return *this;
}
Real& Real::operator*=(const Real& o) {
    *this = *this * o;
    return *this;
}
Real& Real::operator/=(const Real& o) {
    *this = *this / o;
    return *this;
}
Real Real::operator-() const {
    Real r;
    mpfr_neg(r.raw(), v_, MPFR_RNDN);
    return r;
}

namespace {
Real parse_atom(std::string t) {
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    Real v;
    if (t == "pi")
        v = const_pi();
    else if (t == "e")
        v = exp(Real(1));
    else {
        if (t.empty()) throw DomainError("empty number");
        char* end = nullptr;
        Real r;
        if (mpfr_strtofr(r.raw(), t.c_str(), &end, 10, MPFR_RNDN), end == t.c_str() || *end != '\0')
            throw DomainError("not a number: " + t);
        v = r;
    }
    return neg ? -v : v;
}
}  // namespace

Real Real::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return parse_atom(text);
    Real den = parse_atom(text.substr(slash + 1));
    if (den.is_zero()) throw DomainError("zero denominator: " + text);
    return parse_atom(text.substr(0, slash)) / den;
}

#define BINOP(op, fn)                                  \
    Real operator op(const Real& a, const Real& b) {   \
        Real r;                                        \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);      \
        return r;                                      \
    }
BINOP(+, mpfr_add)
BINOP(-, mpfr_sub)
BINOP(*, mpfr_mul)
BINOP(/, mpfr_div)
#undef BINOP

Real operator*(const Real& a, long b) {
    Real r;
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, long b) {
    Real r;
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }

#define UNOP(name, fn)                       \
    Real name(const Real& x) {               \
        Real r;                              \
        fn(r.raw(), x.raw(), MPFR_RNDN);     \
        return r;                            \
    }
UNOP(abs, mpfr_abs)
UNOP(exp, mpfr_exp)
UNOP(expm1, mpfr_expm1)
UNOP(sin, mpfr_sin)
UNOP(cos, mpfr_cos)
UNOP(tan, mpfr_tan)
UNOP(sinh, mpfr_sinh)
UNOP(cosh, mpfr_cosh)
UNOP(tanh, mpfr_tanh)
UNOP(atan, mpfr_atan)
#undef UNOP

Real sqrt(const Real& x) {
    if (x.sign() < 0) throw DomainError("sqrt of negative real");
    Real r;
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real log(const Real& x) {
    if (x.sign() <= 0) throw DomainError("log of non-positive real");
    Real r;
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real log1p(const Real& x) {
    if (x <= Real(-1)) throw DomainError("log1p at or below -1");
    Real r;
    mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real atan2(const Real& y, const Real& x) {
    Real r;
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real pow(const Real& x, const Real& y) {
    Real r;
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    if (mpfr_nan_p(r.raw())) throw DomainError("real pow of negative base");
    return r;
}
Real pow(const Real& x, long n) {
    Real r;
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}
Real floor(const Real& x) {
    Real r;
    mpfr_floor(r.raw(), x.raw());
    return r;
}
Real round(const Real& x) {
    Real r;
    mpfr_round(r.raw(), x.raw());
    return r;
}
Real ldexp(const Real& x, long e) {
    Real r;
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return a < b ? a : b; }

Real sin_pi(const Real& x) {
    // reduce to r in [-1, 1]
    Real r = x - ldexp(round(ldexp(x, -1)), 1);
    if (r.is_integer()) return Real(0);
    Real twice = ldexp(r, 1);
    if (twice.is_integer()) return Real(twice.sign() > 0 ? 1 : -1);
    return sin(const_pi() * r);
}
Real cos_pi(const Real& x) { return sin_pi(x + Real(0.5)); }

Real const_pi() { return pi_cache().get(); }
Real const_euler() { return euler_cache().get(); }
Real const_ln2() { return ln2_cache().get(); }
Real tenth_power(long d) {
    Real r;
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(std::labs(d)), MPFR_RNDN);
    return d >= 0 ? Real(1) / r : r;
}

std::string to_string(const Real& x, int digits) {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Rg", std::max(1, digits), x.raw()) < 0) return "nan";
    std::string s(buf);
    mpfr_free_str(buf);
    std::replace(s.begin(), s.end(), ',', '.');
    return s;
}

// ---- Complex ----

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}
Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}
Complex& Complex::operator*=(const Complex& o) {
    *this = *this * o;
    return *this;
}
Complex& Complex::operator/=(const Complex& o) {
    *this = *this / o;
    return *this;
}
Complex& Complex::operator*=(const Real& o) {
    re *= o;
    im *= o;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }
Complex operator*(const Complex& a, const Complex& b) {
    if (b.im.is_zero()) return Complex(a.re * b.re, a.im * b.re);
    if (a.im.is_zero()) return Complex(a.re * b.re, a.re * b.im);
    Real re, im;
    mpfr_fmms(re.raw(), a.re.raw(), b.re.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_fmma(im.raw(), a.re.raw(), b.im.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
    return Complex(std::move(re), std::move(im));
}
Complex operator/(const Complex& a, const Complex& b) {
    if (b.im.is_zero()) {
        if (b.re.is_zero()) throw DomainError("complex division by zero");
        return Complex(a.re / b.re, a.im / b.re);
    }
    Real d = norm(b);
    Real re, im;
    mpfr_fmma(re.raw(), a.re.raw(), b.re.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_fmms(im.raw(), a.im.raw(), b.re.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
    return Complex(re / d, im / d);
}
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator*(const Real& a, const Complex& b) { return Complex(a * b.re, a * b.im); }
Complex operator/(const Complex& a, const Real& b) {
    if (b.is_zero()) throw DomainError("complex division by zero");
    return Complex(a.re / b, a.im / b);
}

Complex I_unit() { return Complex(Real(0), Real(1)); }
Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real abs(const Complex& z) {
    Real r;
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}
Real norm(const Complex& z) {
    Real r;
    mpfr_fmma(r.raw(), z.re.raw(), z.re.raw(), z.im.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex expi(const Real& theta) {
    Real s, c;
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    return Complex(std::move(c), std::move(s));
}

Complex exp(const Complex& z) {
    Real m = exp(z.re);
    check_range(m, "exp overflow");
    if (z.im.is_zero()) return Complex(m);
    Complex u = expi(z.im);
    return Complex(u.re * m, u.im * m);
}

Complex log(const Complex& z) {
    if (z.re.is_zero() && z.im.is_zero()) throw DomainError("log(0)");
    if (z.im.is_zero() && z.re.sign() > 0) return Complex(log(z.re));
    return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex& z) {
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0) return Complex(sqrt(z.re));
        return Complex(Real(0), sqrt(-z.re));
    }
    Real r = abs(z);
    if (z.re.sign() >= 0) {
        Real t = sqrt(ldexp(r + z.re, -1));
        return Complex(t, z.im / ldexp(t, 1));
    }
    Real t = sqrt(ldexp(r - z.re, -1));
    Real re = abs(z.im) / ldexp(t, 1);
    return Complex(re, z.im.sign() < 0 ? -t : t);
}

Complex sin(const Complex& z) {
    if (z.im.is_zero()) return Complex(sin(z.re));
    Real s, c;
    mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
    return Complex(s * cosh(z.im), c * sinh(z.im));
}
Complex cos(const Complex& z) {
    if (z.im.is_zero()) return Complex(cos(z.re));
    Real s, c;
    mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
    return Complex(c * cosh(z.im), -(s * sinh(z.im)));
}
Complex sinh(const Complex& z) {
    if (z.im.is_zero()) return Complex(sinh(z.re));
    Real s, c;
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
    return Complex(sinh(z.re) * c, cosh(z.re) * s);
}
Complex cosh(const Complex& z) {
    if (z.im.is_zero()) return Complex(cosh(z.re));
    Real s, c;
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
    return Complex(cosh(z.re) * c, sinh(z.re) * s);
}
Complex tanh(const Complex& z) { return sinh(z) / cosh(z); }
Complex coth(const Complex& z) {
    Complex s = sinh(z);
    if (s.re.is_zero() && s.im.is_zero()) throw DomainError("coth pole");
    return cosh(z) / s;
}
Complex csch(const Complex& z) {
    Complex s = sinh(z);
    if (s.re.is_zero() && s.im.is_zero()) throw DomainError("csch pole");
    return Complex(1) / s;
}
Complex sech(const Complex& z) {
    Complex c = cosh(z);
    if (c.re.is_zero() && c.im.is_zero()) throw DomainError("sech pole");
    return Complex(1) / c;
}
Complex atan(const Complex& z) {
    if (z.im.is_zero()) return Complex(atan(z.re));
    if (z.re.is_zero() && abs(z.im) == Real(1)) throw DomainError("atan branch point");
    Complex iz = I_unit() * z;
    Complex d = log(Complex(1) - iz) - log(Complex(1) + iz);
    return Complex(ldexp(-d.im, -1), ldexp(d.re, -1));
}

Complex pow(const Complex& z, const Complex& w) {
    if (z.re.is_zero() && z.im.is_zero()) {
        if (w.re.sign() > 0) return Complex(0);
        throw DomainError("0 raised to non-positive power");
    }
    if (z.im.is_zero() && z.re.sign() > 0) return pow(z.re, w);
    return exp(w * log(z));
}
Complex pow(const Real& base, const Complex& w) {
    if (base.sign() <= 0) throw DomainError("pow base must be positive");
    if (w.im.is_zero()) return Complex(pow(base, w.re));
    return exp(w * log(base));
}
Complex pow(const Complex& z, long n) {
    if (n < 0) return Complex(1) / pow(z, -n);
    Complex r(1), b = z;
    while (n > 0) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

Complex sin_pi(const Complex& z) {
    if (z.im.is_zero()) return Complex(sin_pi(z.re));
    Real py = const_pi() * z.im;
    return Complex(sin_pi(z.re) * cosh(py), cos_pi(z.re) * sinh(py));
}
Complex cos_pi(const Complex& z) {
    if (z.im.is_zero()) return Complex(cos_pi(z.re));
    Real py = const_pi() * z.im;
    return Complex(cos_pi(z.re) * cosh(py), -(sin_pi(z.re) * sinh(py)));
}

std::string to_string(const Complex& z, int digits) {
    if (z.im.is_zero()) return to_string(z.re, digits);
    std::string im = to_string(abs(z.im), digits);
    return to_string(z.re, digits) + (z.im.sign() < 0 ? " - " : " + ") + im + "i";
}

Fn fn_from_name(const std::string& name) {
    static const std::map<std::string, Fn> table = {
        {"exp", Fn::exp},   {"log", Fn::log},   {"sqrt", Fn::sqrt}, {"sin", Fn::sin},
        {"cos", Fn::cos},   {"sinh", Fn::sinh}, {"cosh", Fn::cosh}, {"tanh", Fn::tanh},
        {"coth", Fn::coth}, {"csch", Fn::csch}, {"sech", Fn::sech}, {"arctan", Fn::arctan},
    };
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown elementary function: " + name);
    return it->second;
}

Complex eval_elementary(Fn f, const Complex& z, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    Complex r;
    switch (f) {
        case Fn::exp: r = exp(z); break;
        case Fn::log: r = log(z); break;
        case Fn::sqrt: r = sqrt(z); break;
        case Fn::sin: r = sin(z); break;
        case Fn::cos: r = cos(z); break;
        case Fn::sinh: r = sinh(z); break;
        case Fn::cosh: r = cosh(z); break;
        case Fn::tanh: r = tanh(z); break;
        case Fn::coth: r = coth(z); break;
        case Fn::csch: r = csch(z); break;
        case Fn::sech: r = sech(z); break;
        case Fn::arctan: r = atan(z); break;
    }
    if (!r.is_finite()) throw PrecisionOverflow("result outside exponent range");
    return r;
}

Complex eval_power(const Complex& z, const Complex& w, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    Complex r = pow(z, w);
    if (!r.is_finite()) throw PrecisionOverflow("result outside exponent range");
    return r;
}

int digits_agreed(const Complex& a, const Complex& b, int cap) {
    Real d = abs(a - b);
    if (d.is_zero()) return cap;
    Real scale = max(Real(1), max(abs(a), abs(b)));
    double dig = -(d.log10_abs() - scale.log10_abs());
    if (!(dig > 0)) return 0;
    return std::min(cap, static_cast<int>(std::floor(dig)));
}

Complex refine(const std::function<Complex(const PrecisionContext&)>& eval, const PrecisionContext& ctx) {
    Complex base;
    {
        PrecisionGuard g(ctx.working_digits);
        base = eval(ctx);
    }
    PrecisionContext up = ctx.with_working(ctx.working_digits + 10);
    PrecisionGuard g(up.working_digits);
    Complex hi = eval(up);
    int agree = digits_agreed(base, hi, up.working_digits);
    if (agree < ctx.target_digits)
        throw UnstableEvaluation("refinement agreed to " + std::to_string(agree) + " digits, target " +
                                 std::to_string(ctx.target_digits));
    return hi;
}

}  // namespace mellin

#include "mellin/jet.hpp"

#include <algorithm>

namespace mellin {

namespace {

int common_order(const Jet& a, const Jet& b) { return std::min(a.order(), b.order()); }

// exp-type recurrence: a' = f' a
Jet exp_from(const Jet& f, Real a0) {
    int n = f.order();
    Jet a(n, std::move(a0));
    for (int k = 1; k <= n; ++k) {
        Real s(0);
        for (int j = 1; j <= k; ++j) s += f[j] * a[k - j] * static_cast<long>(j);
        a[k] = s / static_cast<long>(k);
    }
    return a;
}

void sin_cos(const Jet& f, Jet& s, Jet& c) {
    int n = f.order();
    s = Jet(n, sin(f[0]));
    c = Jet(n, cos(f[0]));
    for (int k = 1; k <= n; ++k) {
        Real ss(0), cc(0);
        for (int j = 1; j <= k; ++j) {
            Real jf = f[j] * static_cast<long>(j);
            ss += jf * c[k - j];
            cc += jf * s[k - j];
        }
        s[k] = ss / static_cast<long>(k);
        c[k] = -(cc / static_cast<long>(k));
    }
}

}  // namespace

Real Jet::derivative(int k) const {
    Real f(1);
    for (long j = 2; j <= k; ++j) f = f * j;
    return c_[static_cast<size_t>(k)] * f;
}

Jet& Jet::operator+=(const Jet& o) {
    *this = *this + o;
    return *this;
}
Jet& Jet::operator-=(const Jet& o) {
    *this = *this - o;
    return *this;
}
Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Jet operator+(const Jet& a, const Jet& b) {
    int n = common_order(a, b);
    Jet r(n, a[0] + b[0]);
    for (int k = 1; k <= n; ++k) r[k] = a[k] + b[k];
    return r;
}
Jet operator-(const Jet& a, const Jet& b) {
    int n = common_order(a, b);
    Jet r(n, a[0] - b[0]);
    for (int k = 1; k <= n; ++k) r[k] = a[k] - b[k];
    return r;
}
Jet operator*(const Jet& a, const Jet& b) {
    int n = common_order(a, b);
    Jet r(n, Real(0));
    for (int k = 0; k <= n; ++k) {
        Real s(0);
        for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
        r[k] = s;
    }
    return r;
}
Jet operator/(const Jet& a, const Jet& b) {
    if (b[0].is_zero()) throw DomainError("jet division by zero");
    int n = common_order(a, b);
    Jet q(n, a[0] / b[0]);
    for (int k = 1; k <= n; ++k) {
        Real s = a[k];
        for (int j = 1; j <= k; ++j) s -= b[j] * q[k - j];
        q[k] = s / b[0];
    }
    return q;
}
Jet operator+(const Jet& a, const Real& b) {
    Jet r = a;
    r[0] = a[0] + b;
    return r;
}
Jet operator-(const Jet& a, const Real& b) {
    Jet r = a;
    r[0] = a[0] - b;
    return r;
}
Jet operator-(const Real& a, const Jet& b) {
    Jet r = -b;
    r[0] = a - b[0];
    return r;
}
Jet operator*(const Jet& a, const Real& b) {
    Jet r = a;
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] * b;
    return r;
}
Jet operator*(const Real& a, const Jet& b) { return b * a; }
Jet operator/(const Jet& a, const Real& b) {
    Jet r = a;
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] / b;
    return r;
}
Jet operator/(const Real& a, const Jet& b) { return Jet(b.order(), a) / b; }

Jet exp(const Jet& f) { return exp_from(f, exp(f[0])); }

Jet expm1(const Jet& f) {
    // derivatives of expm1 equal those of exp
    Jet e = exp_from(f, exp(f[0]));
    e[0] = expm1(f[0]);
    return e;
}

Jet log(const Jet& f) {
    int n = f.order();
    Jet g(n, log(f[0]));
    for (int k = 1; k <= n; ++k) {
        Real s = f[k] * static_cast<long>(k);
        for (int j = 1; j < k; ++j) s -= g[j] * f[k - j] * static_cast<long>(j);
        g[k] = s / (f[0] * static_cast<long>(k));
    }
    return g;
}

Jet pow(const Jet& f, const Real& p) { return exp(log(f) * p); }

Jet sin(const Jet& f) {
    Jet s, c;
    sin_cos(f, s, c);
    return s;
}
Jet cos(const Jet& f) {
    Jet s, c;
    sin_cos(f, s, c);
    return c;
}
Jet sqrt(const Jet& f) { return pow(f, Real(0.5)); }

}  // namespace mellin

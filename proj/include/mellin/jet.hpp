#pragma once

#include <vector>

#include "mellin/mpnum.hpp"

namespace mellin {

// Truncated Taylor expansion f(t0 + h) = Σ_{k≤order} c_k h^k, used to take
// high-order derivatives of series terms at a point.
class Jet {
public:
    Jet() = default;
    Jet(int order, Real c0) : c_(static_cast<size_t>(order + 1)) { c_[0] = std::move(c0); }
    static Jet variable(int order, const Real& t0) {
        Jet j(order, t0);
        if (order >= 1) j.c_[1] = Real(1);
        return j;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Real& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    Real& operator[](int k) { return c_[static_cast<size_t>(k)]; }
    // k-th derivative at t0
    Real derivative(int k) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet operator-() const;

private:
    std::vector<Real> c_;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(const Jet& a, const Real& b);
Jet operator-(const Jet& a, const Real& b);
Jet operator-(const Real& a, const Jet& b);
Jet operator*(const Jet& a, const Real& b);
Jet operator*(const Real& a, const Jet& b);
Jet operator/(const Jet& a, const Real& b);
Jet operator/(const Real& a, const Jet& b);

Jet exp(const Jet& f);
Jet expm1(const Jet& f);
Jet log(const Jet& f);
Jet pow(const Jet& f, const Real& p);
Jet sin(const Jet& f);
Jet cos(const Jet& f);
Jet sqrt(const Jet& f);

}  // namespace mellin

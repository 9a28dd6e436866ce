// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Used where plain doubles lose too much to cancellation, e.g. evaluating
// the degree-6 sign polynomial at the window endpoints.  ~31 significant
// digits; relies on a correctly rounded fma.

#pragma once

#include <cmath>

namespace jb {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
    dd() = default;
    dd(double h) : hi(h), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}
    double to_double() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - bb) + (b - (s - bb))};
}

inline dd quick_two_sum(double a, double b) {  // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd dd_sqrt(dd a) {
    if (a.hi == 0.0) return {0.0, 0.0};
    double x = 1.0 / std::sqrt(a.hi);
    double y = a.hi * x;
    dd diff = a - two_prod(y, y);
    return quick_two_sum(y, diff.hi * (x * 0.5));
}

}  // namespace jb

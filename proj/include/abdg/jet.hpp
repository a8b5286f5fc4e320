#pragma once

// Truncated bivariate Taylor series in the chart variables (u, v).
//
// A jet of order K carries the Taylor coefficients c_ij, i + j <= K, of a
// function around a chart point; c_ij = (d^i/du^i d^j/dv^j f) / (i! j!).
// Coefficients are stored graded by total degree, so truncation is a prefix.
// Constants built from plain doubles carry the maximal order: they are exact,
// so mixing them into an expression never lowers its order.

#include <array>
#include <span>

#include "abdg/error.hpp"

namespace abdg {

inline constexpr int kMaxJetOrder = 9;

class MultiJet {
public:
    static constexpr int kCapacity = (kMaxJetOrder + 1) * (kMaxJetOrder + 2) / 2;

    MultiJet() = default;
    MultiJet(double value) { c_[0] = value; } // NOLINT: implicit on purpose, constants are exact

    static MultiJet constant(double value, int order);
    // The coordinate function u (axis 0) or v (axis 1) expanded at `at`.
    static MultiJet variable(double at, int axis, int order);

    static constexpr int count(int order) { return (order + 1) * (order + 2) / 2; }
    static constexpr int index(int i, int j) { return (i + j) * (i + j + 1) / 2 + j; }

    int order() const { return order_; }
    double value() const { return c_[0]; }

    // Taylor coefficient; zero beyond the order is not assumed, it throws.
    double coeff(int i, int j) const;
    void set_coeff(int i, int j, double value);
    // Raw partial derivative d^{i+j} f / du^i dv^j at the expansion point.
    double partial(int i, int j) const;

    MultiJet truncated(int order) const;
    // Partial derivative as a jet; the order drops by one.
    MultiJet du() const;
    MultiJet dv() const;
    // Evaluates the polynomial at the offset (du, dv) from the expansion point.
    double eval(double du, double dv) const;

    MultiJet operator-() const;
    MultiJet& operator+=(const MultiJet& other);
    MultiJet& operator-=(const MultiJet& other);
    MultiJet& operator*=(const MultiJet& other);
    MultiJet& operator/=(const MultiJet& other);
    MultiJet& operator+=(double s) { c_[0] += s; return *this; }
    MultiJet& operator-=(double s) { c_[0] -= s; return *this; }
    MultiJet& operator*=(double s);
    MultiJet& operator/=(double s);

    const double* data() const { return c_.data(); }

private:
    int order_ = kMaxJetOrder;
    std::array<double, kCapacity> c_{};
};

inline MultiJet operator+(MultiJet a, const MultiJet& b) { return a += b; }
inline MultiJet operator-(MultiJet a, const MultiJet& b) { return a -= b; }
inline MultiJet operator*(MultiJet a, const MultiJet& b) { return a *= b; }
inline MultiJet operator/(MultiJet a, const MultiJet& b) { return a /= b; }
inline MultiJet operator+(MultiJet a, double s) { return a += s; }
inline MultiJet operator-(MultiJet a, double s) { return a -= s; }
inline MultiJet operator*(MultiJet a, double s) { return a *= s; }
inline MultiJet operator/(MultiJet a, double s) { return a /= s; }
inline MultiJet operator+(double s, MultiJet a) { return a += s; }
inline MultiJet operator-(double s, const MultiJet& a) { return -a + s; }
inline MultiJet operator*(double s, MultiJet a) { return a *= s; }
MultiJet operator/(double s, const MultiJet& a);

// Substitutes the jet into a univariate series: g(a0 + d) = sum_k taylor[k] d^k,
// where a0 is the value of `a`. Needs taylor.size() > a.order().
MultiJet compose(const MultiJet& a, std::span<const double> taylor);

MultiJet sin(const MultiJet& a);
MultiJet cos(const MultiJet& a);
MultiJet exp(const MultiJet& a);
MultiJet log(const MultiJet& a);
MultiJet sinh(const MultiJet& a);
MultiJet cosh(const MultiJet& a);
MultiJet tanh(const MultiJet& a);
MultiJet sech(const MultiJet& a);
MultiJet sqrt(const MultiJet& a);
MultiJet recip(const MultiJet& a);
MultiJet atan(const MultiJet& a);
MultiJet asinh(const MultiJet& a);
MultiJet pow(const MultiJet& a, int n);
MultiJet pow(const MultiJet& a, double p);
// |a| for a jet whose value is nonzero; the sign is constant near the point.
MultiJet abs(const MultiJet& a);

inline double value_of(double x) { return x; }
inline double value_of(const MultiJet& x) { return x.value(); }

double sech(double x);
double recip(double x);

} // namespace abdg

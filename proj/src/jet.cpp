#include "abdg/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace abdg {

namespace {

void check_order(int order) {
    if (order < 0 || order > kMaxJetOrder)
        fail(ErrorKind::OrderExceeded, "jet order " + std::to_string(order) + " outside [0, " +
                                           std::to_string(kMaxJetOrder) + "]");
}

// Univariate truncated series helpers used to build Taylor coefficients of
// elementary functions at a point.
using Series = std::array<double, kMaxJetOrder + 1>;

Series series_mul(const Series& a, const Series& b, int n) {
    Series r{};
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i) r[k] += a[i] * b[k - i];
    return r;
}

Series series_recip(const Series& a, int n) {
    if (a[0] == 0.0) fail(ErrorKind::DegenerateJet, "reciprocal of a series with zero value");
    Series r{};
    r[0] = 1.0 / a[0];
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int i = 1; i <= k; ++i) s += a[i] * r[k - i];
        r[k] = -s / a[0];
    }
    return r;
}

// (a0 + t)^p around t = 0.
Series binomial_series(double a0, double p, int n) {
    Series r{};
    double c = std::pow(a0, p);
    for (int k = 0; k <= n; ++k) {
        r[k] = c;
        c *= (p - k) / ((k + 1) * a0);
    }
    return r;
}

MultiJet compose_series(const MultiJet& a, const Series& s) {
    return compose(a, std::span<const double>(s.data(), static_cast<std::size_t>(a.order()) + 1));
}

} // namespace

MultiJet MultiJet::constant(double value, int order) {
    check_order(order);
    MultiJet j;
    j.order_ = order;
    j.c_[0] = value;
    return j;
}

MultiJet MultiJet::variable(double at, int axis, int order) {
    MultiJet j = constant(at, order);
    if (order >= 1) j.c_[axis == 0 ? index(1, 0) : index(0, 1)] = 1.0;
    return j;
}

double MultiJet::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_)
        fail(ErrorKind::OrderExceeded, "coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") beyond jet order " + std::to_string(order_));
    return c_[index(i, j)];
}

void MultiJet::set_coeff(int i, int j, double value) {
    if (i < 0 || j < 0 || i + j > order_) fail(ErrorKind::OrderExceeded, "coefficient beyond jet order");
    c_[index(i, j)] = value;
}

double MultiJet::partial(int i, int j) const {
    double f = coeff(i, j);
    for (int k = 2; k <= i; ++k) f *= k;
    for (int k = 2; k <= j; ++k) f *= k;
    return f;
}

MultiJet MultiJet::truncated(int order) const {
    if (order > order_) fail(ErrorKind::OrderExceeded, "cannot raise the order of a jet by truncation");
    MultiJet r = constant(0.0, order);
    std::copy_n(c_.begin(), count(order), r.c_.begin());
    return r;
}

MultiJet MultiJet::du() const {
    if (order_ == 0) fail(ErrorKind::OrderExceeded, "derivative of an order-0 jet");
    MultiJet r = constant(0.0, order_ - 1);
    for (int n = 0; n < order_; ++n)
        for (int j = 0; j <= n; ++j) {
            int i = n - j;
            r.c_[index(i, j)] = (i + 1) * c_[index(i + 1, j)];
        }
    return r;
}

MultiJet MultiJet::dv() const {
    if (order_ == 0) fail(ErrorKind::OrderExceeded, "derivative of an order-0 jet");
    MultiJet r = constant(0.0, order_ - 1);
    for (int n = 0; n < order_; ++n)
        for (int j = 0; j <= n; ++j) {
            int i = n - j;
            r.c_[index(i, j)] = (j + 1) * c_[index(i, j + 1)];
        }
    return r;
}

double MultiJet::eval(double du, double dv) const {
    double s = 0.0;
    for (int n = order_; n >= 0; --n) {
        double row = 0.0;
        for (int j = 0; j <= n; ++j) row += c_[index(n - j, j)] * std::pow(du, n - j) * std::pow(dv, j);
        s += row;
    }
    return s;
}

MultiJet MultiJet::operator-() const {
    MultiJet r = *this;
    for (int k = 0; k < count(order_); ++k) r.c_[k] = -r.c_[k];
    return r;
}

MultiJet& MultiJet::operator+=(const MultiJet& other) {
    order_ = std::min(order_, other.order_);
    for (int k = 0; k < count(order_); ++k) c_[k] += other.c_[k];
    for (int k = count(order_); k < kCapacity; ++k) c_[k] = 0.0;
    return *this;
}

MultiJet& MultiJet::operator-=(const MultiJet& other) {
    order_ = std::min(order_, other.order_);
    for (int k = 0; k < count(order_); ++k) c_[k] -= other.c_[k];
    for (int k = count(order_); k < kCapacity; ++k) c_[k] = 0.0;
    return *this;
}

MultiJet& MultiJet::operator*=(const MultiJet& other) {
    const int order = std::min(order_, other.order_);
    std::array<double, kCapacity> r{};
    for (int n = 0; n <= order; ++n)
        for (int j = 0; j <= n; ++j) {
            const int i = n - j;
            double s = 0.0;
            for (int a = 0; a <= i; ++a)
                for (int b = 0; b <= j; ++b) s += c_[index(a, b)] * other.c_[index(i - a, j - b)];
            r[index(i, j)] = s;
        }
    c_ = r;
    order_ = order;
    return *this;
}

MultiJet& MultiJet::operator/=(const MultiJet& other) { return *this *= recip(other); }

MultiJet& MultiJet::operator*=(double s) {
    for (int k = 0; k < count(order_); ++k) c_[k] *= s;
    return *this;
}

MultiJet& MultiJet::operator/=(double s) {
    if (s == 0.0) fail(ErrorKind::DegenerateJet, "division of a jet by zero");
    for (int k = 0; k < count(order_); ++k) c_[k] /= s;
    return *this;
}

MultiJet operator/(double s, const MultiJet& a) { return s * recip(a); }

MultiJet compose(const MultiJet& a, std::span<const double> taylor) {
    const int order = a.order();
    if (static_cast<int>(taylor.size()) <= order)
        fail(ErrorKind::OrderExceeded, "univariate series shorter than the jet order");
    MultiJet delta = a - a.value();
    MultiJet r = MultiJet::constant(taylor[order], order);
    for (int k = order - 1; k >= 0; --k) {
        r *= delta;
        r += taylor[k];
    }
    return r;
}

MultiJet sin(const MultiJet& a) {
    Series s{};
    const double sv = std::sin(a.value()), cv = std::cos(a.value());
    const double cyc[4] = {sv, cv, -sv, -cv};
    double fact = 1.0;
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) fact *= k;
        s[k] = cyc[k % 4] / fact;
    }
    return compose_series(a, s);
}

MultiJet cos(const MultiJet& a) {
    Series s{};
    const double sv = std::sin(a.value()), cv = std::cos(a.value());
    const double cyc[4] = {cv, -sv, -cv, sv};
    double fact = 1.0;
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) fact *= k;
        s[k] = cyc[k % 4] / fact;
    }
    return compose_series(a, s);
}

MultiJet exp(const MultiJet& a) {
    Series s{};
    double c = std::exp(a.value());
    for (int k = 0; k <= a.order(); ++k) {
        s[k] = c;
        c /= (k + 1);
    }
    return compose_series(a, s);
}

MultiJet log(const MultiJet& a) {
    const double a0 = a.value();
    if (a0 == 0.0) fail(ErrorKind::DegenerateJet, "log of a jet with zero value");
    if (a0 < 0.0) fail(ErrorKind::DomainError, "log of a jet with negative value");
    Series s{};
    s[0] = std::log(a0);
    double p = 1.0;
    for (int k = 1; k <= a.order(); ++k) {
        p /= a0;
        s[k] = ((k % 2) ? 1.0 : -1.0) * p / k;
    }
    return compose_series(a, s);
}

MultiJet sinh(const MultiJet& a) {
    Series s{};
    const double sv = std::sinh(a.value()), cv = std::cosh(a.value());
    double fact = 1.0;
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) fact *= k;
        s[k] = ((k % 2) ? cv : sv) / fact;
    }
    return compose_series(a, s);
}

MultiJet cosh(const MultiJet& a) {
    Series s{};
    const double sv = std::sinh(a.value()), cv = std::cosh(a.value());
    double fact = 1.0;
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) fact *= k;
        s[k] = ((k % 2) ? sv : cv) / fact;
    }
    return compose_series(a, s);
}

MultiJet tanh(const MultiJet& a) { return sinh(a) / cosh(a); }

MultiJet sech(const MultiJet& a) { return recip(cosh(a)); }

MultiJet sqrt(const MultiJet& a) {
    const double a0 = a.value();
    if (a0 == 0.0) fail(ErrorKind::DegenerateJet, "sqrt of a jet with zero value");
    if (a0 < 0.0) fail(ErrorKind::DomainError, "sqrt of a jet with negative value");
    return compose_series(a, binomial_series(a0, 0.5, a.order()));
}

MultiJet recip(const MultiJet& a) {
    const double a0 = a.value();
    if (a0 == 0.0) fail(ErrorKind::DegenerateJet, "reciprocal of a jet with zero value");
    Series s{};
    double c = 1.0 / a0;
    for (int k = 0; k <= a.order(); ++k) {
        s[k] = c;
        c *= -1.0 / a0;
    }
    return compose_series(a, s);
}

MultiJet atan(const MultiJet& a) {
    // Integrate the series of 1 / (1 + (a0 + t)^2).
    const int n = a.order();
    const double a0 = a.value();
    Series q{};
    q[0] = 1.0 + a0 * a0;
    if (n >= 1) q[1] = 2.0 * a0;
    if (n >= 2) q[2] = 1.0;
    Series d = series_recip(q, n);
    Series s{};
    s[0] = std::atan(a0);
    for (int k = 1; k <= n; ++k) s[k] = d[k - 1] / k;
    return compose_series(a, s);
}

MultiJet asinh(const MultiJet& a) {
    // Integrate the series of (1 + (a0 + t)^2)^(-1/2).
    const int n = a.order();
    const double a0 = a.value();
    Series q{};
    q[0] = 1.0 + a0 * a0;
    if (n >= 1) q[1] = 2.0 * a0;
    if (n >= 2) q[2] = 1.0;
    // sqrt of the quadratic via the binomial series in its own deviation.
    Series root{};
    {
        Series dev = q;
        dev[0] = 0.0;
        Series coef = binomial_series(q[0], -0.5, n);
        Series power{};
        power[0] = 1.0;
        for (int k = 0; k <= n; ++k) {
            for (int i = 0; i <= n; ++i) root[i] += coef[k] * power[i];
            power = series_mul(power, dev, n);
        }
    }
    Series s{};
    s[0] = std::asinh(a0);
    for (int k = 1; k <= n; ++k) s[k] = root[k - 1] / k;
    return compose_series(a, s);
}

MultiJet pow(const MultiJet& a, int n) {
    if (n < 0) return recip(pow(a, -n));
    MultiJet result = MultiJet::constant(1.0, a.order());
    MultiJet base = a;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

MultiJet pow(const MultiJet& a, double p) {
    const double a0 = a.value();
    if (a0 == 0.0) fail(ErrorKind::DegenerateJet, "real power of a jet with zero value");
    if (a0 < 0.0) fail(ErrorKind::DomainError, "real power of a jet with negative value");
    return compose_series(a, binomial_series(a0, p, a.order()));
}

MultiJet abs(const MultiJet& a) {
    if (a.value() == 0.0) fail(ErrorKind::DegenerateJet, "abs of a jet with zero value");
    return a.value() < 0.0 ? -a : a;
}

double sech(double x) { return 1.0 / std::cosh(x); }

double recip(double x) {
    if (x == 0.0) fail(ErrorKind::DegenerateJet, "reciprocal of zero");
    return 1.0 / x;
}

} // namespace abdg

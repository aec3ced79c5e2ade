#include "hiccup/quadratic.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace hiccup {

namespace {
using i128 = __int128;

long long to_ll(i128 v, const char* what) {
    if (v > i128(9223372036854775807LL) || v < -i128(9223372036854775807LL))
        throw overflow_error(std::string("quadratic arithmetic overflow in ") + what);
    return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// d = s^2 * out, out squarefree
long long squarefree_part(long long d, long long& scale) {
    scale = 1;
    for (long long f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) {
            d /= f * f;
            scale *= f;
        }
    }
    return d;
}

int sign_of_pair(i128 a, i128 b, long long d) {
    // sign of a + b*sqrt(d), d > 0 and sqrt(d) irrational unless b = 0
    if (b == 0) return a > 0 ? 1 : a < 0 ? -1 : 0;
    if (a >= 0 && b > 0) return 1;
    if (a <= 0 && b < 0) return -1;
    // opposite signs: compare a^2 with b^2 d
    i128 a2 = a * a, b2d = b * b * i128(d);
    if (a > 0) return a2 > b2d ? 1 : a2 < b2d ? -1 : 0;
    return a2 < b2d ? 1 : a2 > b2d ? -1 : 0;
}
} // namespace

QuadraticNumber::QuadraticNumber(long long integer) : p_(integer), q_(0), r_(1), d_(0) {}

QuadraticNumber QuadraticNumber::rational(long long num, long long den) {
    return make(num, 0, den, 0);
}

QuadraticNumber QuadraticNumber::sqrt_of(long long m) {
    if (m < 0) throw validation_error("sqrt of a negative integer is not a real quadratic number");
    long long scale = 0;
    long long core = squarefree_part(m, scale);
    if (core == 1) return QuadraticNumber(scale);
    return make(0, scale, 1, core);
}

QuadraticNumber QuadraticNumber::make(long long p, long long q, long long r, long long d) {
    if (r == 0) throw validation_error("quadratic number with zero denominator");
    if (d < 0) throw validation_error("quadratic number with negative radicand");
    QuadraticNumber v;
    v.p_ = p;
    v.q_ = q;
    v.r_ = r;
    v.d_ = d;
    v.normalize();
    return v;
}

void QuadraticNumber::normalize() {
    if (q_ != 0 && d_ > 1) {
        long long scale = 0;
        long long core = squarefree_part(d_, scale);
        d_ = core;
        q_ = to_ll(i128(q_) * scale, "radical reduction");
    }
    if (q_ == 0 || d_ == 1) {
        if (d_ == 1) {
            p_ = to_ll(i128(p_) + q_, "radical collapse");
            q_ = 0;
        }
        d_ = 0;
    }
    if (d_ == 0) q_ = 0;
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    long long g = std::gcd(std::gcd(std::llabs(p_), std::llabs(q_)), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

void QuadraticNumber::check_same_field(const QuadraticNumber& a, const QuadraticNumber& b,
                                       long long& d) {
    if (a.d_ == 0) {
        d = b.d_;
    } else if (b.d_ == 0 || a.d_ == b.d_) {
        d = a.d_;
    } else {
        throw validation_error("mixing distinct quadratic fields (sqrt(" + std::to_string(a.d_) +
                               ") vs sqrt(" + std::to_string(b.d_) + "))");
    }
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
    long long d = 0;
    check_same_field(*this, o, d);
    i128 p = i128(p_) * o.r_ + i128(o.p_) * r_;
    i128 q = i128(q_) * o.r_ + i128(o.q_) * r_;
    i128 r = i128(r_) * o.r_;
    i128 g = gcd128(gcd128(p, q), r);
    if (g > 1) { p /= g; q /= g; r /= g; }
    return make(to_ll(p, "+"), to_ll(q, "+"), to_ll(r, "+"), d);
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const { return *this + (-o); }

QuadraticNumber QuadraticNumber::operator-() const {
    QuadraticNumber v = *this;
    v.p_ = -v.p_;
    v.q_ = -v.q_;
    return v;
}

QuadraticNumber QuadraticNumber::conjugate() const {
    QuadraticNumber v = *this;
    v.q_ = -v.q_;
    return v;
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
    long long d = 0;
    check_same_field(*this, o, d);
    i128 p = i128(p_) * o.p_ + i128(q_) * o.q_ * d;
    i128 q = i128(p_) * o.q_ + i128(q_) * o.p_;
    i128 r = i128(r_) * o.r_;
    i128 g = gcd128(gcd128(p, q), r);
    if (g > 1) { p /= g; q /= g; r /= g; }
    return make(to_ll(p, "*"), to_ll(q, "*"), to_ll(r, "*"), d);
}

QuadraticNumber QuadraticNumber::operator/(const QuadraticNumber& o) const {
    if (o.sign() == 0) throw validation_error("division by zero quadratic number");
    long long d = 0;
    check_same_field(*this, o, d);
    // 1/((p2+q2 sqrt d)/r2) = r2 (p2 - q2 sqrt d) / (p2^2 - q2^2 d)
    i128 norm = i128(o.p_) * o.p_ - i128(o.q_) * o.q_ * d;
    i128 p = (i128(p_) * o.p_ - i128(q_) * o.q_ * d) * o.r_;
    i128 q = (i128(q_) * o.p_ - i128(p_) * o.q_) * o.r_;
    i128 r = i128(r_) * norm;
    i128 g = gcd128(gcd128(p, q), r);
    if (g > 1) { p /= g; q /= g; r /= g; }
    return make(to_ll(p, "/"), to_ll(q, "/"), to_ll(r, "/"), d);
}

int QuadraticNumber::sign() const {
    return sign_of_pair(p_, q_, d_); // r_ > 0
}

int QuadraticNumber::compare(const QuadraticNumber& o) const {
    return (*this - o).sign();
}

long long QuadraticNumber::floor() const {
    if (q_ == 0) {
        long long quot = p_ / r_;
        if (p_ % r_ != 0 && p_ < 0) --quot;
        return quot;
    }
    long long m = static_cast<long long>(std::floor(to_double()));
    // fix up the float estimate by exact comparison with m and m+1
    auto cmp_int = [&](long long k) {
        // sign of value - k = (p - k r + q sqrt d)/r
        return sign_of_pair(i128(p_) - i128(k) * r_, q_, d_);
    };
    while (cmp_int(m) < 0) --m;
    while (cmp_int(m + 1) >= 0) ++m;
    // q != 0 and d squarefree make the value irrational, so no tie is possible
    return m;
}

long long QuadraticNumber::ceil() const { return -(-*this).floor(); }

double QuadraticNumber::to_double() const {
    return (static_cast<double>(p_) + static_cast<double>(q_) * std::sqrt(static_cast<double>(d_))) /
           static_cast<double>(r_);
}

std::string QuadraticNumber::str() const {
    if (q_ == 0) return r_ == 1 ? std::to_string(p_) : std::to_string(p_) + "/" + std::to_string(r_);
    std::string s = "(" + std::to_string(p_) + (q_ >= 0 ? "+" : "-") +
                    (std::llabs(q_) == 1 ? "" : std::to_string(std::llabs(q_)) + "*") + "sqrt(" +
                    std::to_string(d_) + "))";
    if (r_ != 1) s += "/" + std::to_string(r_);
    return s;
}

} // namespace hiccup

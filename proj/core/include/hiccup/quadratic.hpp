#pragma once

#include <string>

#include "hiccup/errors.hpp"

namespace hiccup {

/// Exact element (p + q*sqrt(d))/r of a real quadratic field. Canonical form:
/// r > 0, gcd(p,q,r) = 1, d squarefree, and d = 0 whenever q = 0. Comparisons
/// and floors are decided by integer sign/square analysis; no floating point
/// touches the decision path.
class QuadraticNumber {
  public:
    QuadraticNumber() = default;
    QuadraticNumber(long long integer); // NOLINT: implicit by design
    static QuadraticNumber rational(long long num, long long den);
    /// sqrt(m) for m >= 0, with square factors pulled out of the radical.
    static QuadraticNumber sqrt_of(long long m);
    static QuadraticNumber make(long long p, long long q, long long r, long long d);

    long long p() const { return p_; }
    long long q() const { return q_; }
    long long r() const { return r_; }
    long long d() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    bool is_integer() const { return q_ == 0 && r_ == 1; }

    QuadraticNumber operator+(const QuadraticNumber& o) const;
    QuadraticNumber operator-(const QuadraticNumber& o) const;
    QuadraticNumber operator*(const QuadraticNumber& o) const;
    QuadraticNumber operator/(const QuadraticNumber& o) const;
    QuadraticNumber operator-() const;
    QuadraticNumber conjugate() const; // q -> -q

    QuadraticNumber& operator+=(const QuadraticNumber& o) { return *this = *this + o; }
    QuadraticNumber& operator-=(const QuadraticNumber& o) { return *this = *this - o; }
    QuadraticNumber& operator*=(const QuadraticNumber& o) { return *this = *this * o; }
    QuadraticNumber& operator/=(const QuadraticNumber& o) { return *this = *this / o; }

    /// Exact sign: -1, 0, +1.
    int sign() const;
    int compare(const QuadraticNumber& o) const;
    bool operator==(const QuadraticNumber& o) const { return p_ == o.p_ && q_ == o.q_ && r_ == o.r_ && d_ == o.d_; }
    bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }
    bool operator<(const QuadraticNumber& o) const { return compare(o) < 0; }
    bool operator<=(const QuadraticNumber& o) const { return compare(o) <= 0; }
    bool operator>(const QuadraticNumber& o) const { return compare(o) > 0; }
    bool operator>=(const QuadraticNumber& o) const { return compare(o) >= 0; }

    long long floor() const;
    long long ceil() const;

    double to_double() const;
    std::string str() const;

  private:
    long long p_ = 0, q_ = 0, r_ = 1, d_ = 0;
    void normalize();
    static void check_same_field(const QuadraticNumber& a, const QuadraticNumber& b, long long& d);
};

using QN = QuadraticNumber;

} // namespace hiccup

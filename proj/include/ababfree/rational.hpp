#ifndef ABABFREE_RATIONAL_HPP
#define ABABFREE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace abab {

/** Arbitrary-precision integers backing all exact predicates. */
using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact rational number, always stored reduced with a positive denominator.
 * Comparisons cross-multiply instead of running a gcd per compare, which is
 * what the geometry kernels spend most of their time on.
 */
class Rat {
  public:
    Rat() = default;
    Rat(int v) : num_(v) {}                 // NOLINT(google-explicit-constructor)
    Rat(long long v) : num_(v) {}           // NOLINT(google-explicit-constructor)
    Rat(BigInt v) : num_(std::move(v)) {}   // NOLINT(google-explicit-constructor)
    Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_.sign(); }

    template <class T>
    T convert_to() const {
        return num_.convert_to<T>() / den_.convert_to<T>();
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return add(a, b, false); }
    friend Rat operator-(const Rat& a, const Rat& b) { return add(a, b, true); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        // Cross-cancel first: the product of the reduced parts is reduced.
        BigInt g1 = boost::multiprecision::gcd(a.num_, b.den_);
        BigInt g2 = boost::multiprecision::gcd(b.num_, a.den_);
        Rat r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_.is_zero()) throw std::domain_error("rational division by zero");
        BigInt g1 = boost::multiprecision::gcd(a.num_, b.num_);
        BigInt g2 = boost::multiprecision::gcd(b.den_, a.den_);
        Rat r;
        r.num_ = (a.num_ / g1) * (b.den_ / g2);
        r.den_ = (a.den_ / g2) * (b.num_ / g1);
        if (r.den_.sign() < 0) {
            r.num_ = -r.num_;
            r.den_ = -r.den_;
        }
        return r;
    }
    Rat operator-() const {
        Rat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return compare(a, b) < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return compare(a, b) > 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return compare(a, b) >= 0; }

  private:
    static int compare(const Rat& a, const Rat& b) {
        int sa = a.num_.sign(), sb = b.num_.sign();
        if (sa != sb) return sa < sb ? -1 : 1;
        if (a.den_ == b.den_) return a.num_.compare(b.num_);
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        return lhs.compare(rhs);
    }

    // Knuth's scheme: with d1 = gcd(den, den), the d1 == 1 result is already
    // reduced, and otherwise only a small second gcd is needed.
    static Rat add(const Rat& a, const Rat& b, bool negate) {
        Rat r;
        BigInt d1 = boost::multiprecision::gcd(a.den_, b.den_);
        if (d1 == 1) {
            r.num_ = negate ? BigInt(a.num_ * b.den_ - b.num_ * a.den_)
                            : BigInt(a.num_ * b.den_ + b.num_ * a.den_);
            r.den_ = a.den_ * b.den_;
            return r;
        }
        BigInt bd = b.den_ / d1;
        BigInt t = negate ? BigInt(a.num_ * bd - b.num_ * (a.den_ / d1))
                          : BigInt(a.num_ * bd + b.num_ * (a.den_ / d1));
        BigInt d2 = boost::multiprecision::gcd(t, d1);
        r.num_ = t / d2;
        r.den_ = (a.den_ / d2) * bd;
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_ = 0;
    BigInt den_ = 1;
};

inline const BigInt& numerator(const Rat& r) { return r.num(); }
inline const BigInt& denominator(const Rat& r) { return r.den(); }

/**
 * Parse "p" or "p/q" (optional leading sign on either part) into a reduced
 * rational. Throws Error{Parse} on malformed input or zero denominator.
 */
Rat parse_rational(const std::string& text);

/** Canonical form: reduced, "p" when the denominator is 1, else "p/q". */
std::string format_rational(const Rat& value);

/** Exact sign: -1, 0, or +1. */
inline int sign_of(const Rat& value) {
    return value.sign();
}

} // namespace abab

#endif

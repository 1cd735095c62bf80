#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "maprad/errors.hpp"

namespace maprad {

// Exact rational scalar backed by GMP. Always canonical: lowest terms,
// positive denominator. All arithmetic is exact; conversion to double is
// explicit and only used on the floating-point (Euclidean) paths.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long num, long den) {
        if (den == 0) throw DomainError("ParseError", "zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with arbitrary-precision integers.
    static Rat parse(const std::string& text);

    // "p" when the denominator is 1, else "p/q".
    std::string str() const;

    double to_double() const { return v_.get_d(); }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (sgn(o.v_) == 0) throw DomainError("DivisionByZero", "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class v_;
};

inline Rat rat_abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

} // namespace maprad

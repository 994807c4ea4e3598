#pragma once

#include <compare>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ram {

using BigInt = mpz_class;

// Exact rational in lowest terms, denominator positive.
class Rat {
public:
    Rat() = default;
    Rat(long n) : q_(n) {}
    Rat(int n) : q_(n) {}
    Rat(long n, long d);
    Rat(const BigInt& n) : q_(n) {}
    Rat(const BigInt& n, const BigInt& d);

    // Accepts "a", "-a", "a/b".
    static Rat parse(std::string_view s);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    BigInt floor() const;
    BigInt ceil() const;
    std::string str() const { return q_.get_str(); }
    // Converts an integral value that fits in a long; throws DomainError otherwise.
    long to_long() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

Rat pow(const Rat& base, long e);
BigInt ipow(long base, long e);
Rat abs(const Rat& x);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

// Exponent k with x = p^k, if x is an integral or reciprocal power of p.
bool p_power_exponent(const Rat& x, long p, long& k);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace ram

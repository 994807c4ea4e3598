#include "ramcalc/rat.hpp"

#include "ramcalc/errors.hpp"

#include <cctype>
#include <ostream>

namespace ram {

Rat::Rat(long n, long d) {
    if (d == 0) throw DomainError("zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rat::Rat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw DomainError("zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

static bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rat Rat::parse(std::string_view s) {
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view n = body.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d))
        throw ParseError("not an exact rational: \"" + std::string(s) + "\"");
    BigInt bn{std::string(n)}, bd{std::string(d)};
    if (bd == 0) throw ParseError("zero denominator in \"" + std::string(s) + "\"");
    if (neg) bn = -bn;
    return Rat(bn, bd);
}

BigInt Rat::floor() const {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

BigInt Rat::ceil() const {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

long Rat::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p())
        throw DomainError("not a machine integer: " + str());
    return q_.get_num().get_si();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.q_ == 0) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

BigInt ipow(long base, long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                  static_cast<unsigned long>(e));
    if (base < 0 && e % 2) r = -r;
    return r;
}

Rat pow(const Rat& base, long e) {
    if (e >= 0) {
        BigInt n, d;
        mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rat(n, d);
    }
    return Rat(1) / pow(base, -e);
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }
Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

static bool int_power(BigInt v, long p, long& k) {
    k = 0;
    if (v <= 0) return false;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return v == 1;
}

bool p_power_exponent(const Rat& x, long p, long& k) {
    if (x.sign() <= 0) return false;
    if (x.is_integer()) return int_power(x.num(), p, k);
    if (x.num() != 1) return false;
    if (!int_power(x.den(), p, k)) return false;
    k = -k;
    return true;
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

}  // namespace ram

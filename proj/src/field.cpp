#include "gersten/field.hpp"

namespace gersten {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    /* Deterministic Miller-Rabin for 64-bit. */
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return (std::uint64_t)((__uint128_t)a * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw input_error("FieldSpec: " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

static std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw math_error("division by zero in F_p");
    /* extended Euclid on (a, p) */
    long long t = 0, newt = 1;
    long long r = (long long)p, newr = (long long)a;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) throw internal_error("fp_inv: not invertible");
    if (t < 0) t += (long long)p;
    return (std::uint64_t)t;
}

Scalar Scalar::from_int(FieldSpec f, long long n) {
    Scalar s;
    s.f_ = f;
    if (f.is_rational()) {
        s.q_ = mpq_class((long)n);
        s.r_ = 0;
    } else {
        long long m = n % (long long)f.p;
        if (m < 0) m += (long long)f.p;
        s.r_ = (std::uint64_t)m;
        s.q_ = 0;
    }
    return s;
}

Scalar Scalar::from_mpq(FieldSpec f, const mpq_class& v) {
    if (!f.is_rational()) throw input_error("from_mpq on a prime field");
    Scalar s;
    s.f_ = f;
    s.q_ = v;
    s.q_.canonicalize();
    s.r_ = 0;
    return s;
}

Scalar Scalar::parse(FieldSpec f, const std::string& text) {
    if (text.empty()) throw input_error("empty scalar literal");
    auto check_digits = [&](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!isdigit((unsigned char)t[i])) return false;
        return true;
    };
    auto slash = text.find('/');
    if (f.is_rational()) {
        if (slash == std::string::npos) {
            if (!check_digits(text)) throw input_error("bad rational literal '" + text + "'");
            return from_mpq(f, mpq_class(mpz_class(text)));
        }
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!check_digits(num) || !check_digits(den)) throw input_error("bad rational literal '" + text + "'");
        mpz_class d(den);
        if (d == 0) throw input_error("zero denominator in '" + text + "'");
        mpq_class v(mpz_class(num), d);
        return from_mpq(f, v);
    }
    if (slash != std::string::npos) {
        /* allow a/b over F_p too: b must be invertible */
        Scalar a = parse(f, text.substr(0, slash));
        Scalar b = parse(f, text.substr(slash + 1));
        return a / b;
    }
    if (!check_digits(text)) throw input_error("bad F_p literal '" + text + "'");
    mpz_class z(text);
    mpz_class m = z % (long)f.p;
    if (m < 0) m += (long)f.p;
    Scalar s;
    s.f_ = f;
    s.r_ = m.get_ui();
    return s;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(f_ == o.f_)) throw math_error("scalar field mismatch: " + f_.str() + " vs " + o.f_.str());
}

bool Scalar::is_zero() const { return f_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return f_.is_rational() ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s;
    s.f_ = f_;
    if (f_.is_rational()) s.q_ = q_ + o.q_;
    else s.r_ = (std::uint64_t)(((__uint128_t)r_ + o.r_) % f_.p);
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s;
    s.f_ = f_;
    if (f_.is_rational()) s.q_ = q_ * o.q_;
    else s.r_ = (std::uint64_t)((__uint128_t)r_ * o.r_ % f_.p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s;
    s.f_ = f_;
    if (f_.is_rational()) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : f_.p - r_;
    return s;
}

Scalar Scalar::inverse() const {
    Scalar s;
    s.f_ = f_;
    if (f_.is_rational()) {
        if (q_ == 0) throw math_error("division by zero");
        s.q_ = 1 / q_;
    } else {
        s.r_ = fp_inv(r_, f_.p);
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(f_ == o.f_)) return false;
    return f_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (!f_.is_rational()) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

} // namespace gersten

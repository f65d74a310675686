#include "braidgal/scalar.hpp"

namespace braidgal {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw Error("field modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 62))
        throw Error("field modulus too large");
    return Field(Kind::Prime, p);
}

std::string Field::describe() const {
    return is_rational() ? std::string("rational") : "fp:" + std::to_string(p_);
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    if (sgn(q) == 0)
        return Scalar();
    return Scalar(std::move(q));
}

Scalar Scalar::of(const Field &f, long n) {
    if (f.is_rational())
        return n == 0 ? Scalar() : Scalar(mpq_class(n));
    std::uint64_t p = f.modulus();
    long r = n % static_cast<long>(p);
    if (r < 0)
        r += static_cast<long>(p);
    return r == 0 ? Scalar() : Scalar(Fp{static_cast<std::uint64_t>(r), p});
}

Scalar Scalar::parse(const Field &f, const std::string &text) {
    if (text.empty())
        throw ParseError("empty scalar literal");
    if (f.is_rational()) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw ParseError("bad rational literal '" + text + "'");
        if (q.get_den() == 0)
            throw ParseError("zero denominator in '" + text + "'");
        q.canonicalize();
        if (sgn(q) == 0)
            return Scalar();
        return Scalar(std::move(q));
    }
    mpz_class z;
    if (z.set_str(text, 10) != 0)
        throw ParseError("bad residue literal '" + text + "'");
    mpz_class p(static_cast<unsigned long>(f.modulus()));
    mpz_class r = z % p;
    if (r < 0)
        r += p;
    if (r == 0)
        return Scalar();
    return Scalar(Fp{r.get_ui(), f.modulus()});
}

Field Scalar::field() const {
    if (is_rat())
        return Field::rational();
    if (is_neutral_zero())
        return Field::rational(); // zero belongs to every field
    return Field::prime(fp().p);
}

bool Scalar::same_field(const Scalar &o) const {
    if (is_neutral_zero() || o.is_neutral_zero())
        return true;
    if (v_.index() != o.v_.index())
        return false;
    if (std::holds_alternative<Fp>(v_))
        return fp().p == o.fp().p;
    return true;
}

bool Scalar::is_zero() const {
    if (is_neutral_zero())
        return true;
    if (is_rat())
        return sgn(rat()) == 0;
    return fp().v == 0;
}

bool Scalar::is_one() const {
    if (is_rat())
        return rat() == 1;
    if (is_neutral_zero())
        return false;
    return fp().v == 1 % fp().p;
}

Scalar Scalar::operator+(const Scalar &o) const {
    if (!same_field(o))
        throw FieldMismatch("scalar field mismatch in +");
    if (is_neutral_zero())
        return o;
    if (o.is_neutral_zero())
        return *this;
    if (is_rat())
        return rational(mpq_class(rat() + o.rat()));
    std::uint64_t p = fp().p, s = fp().v + o.fp().v;
    s = s >= p ? s - p : s;
    return s == 0 ? Scalar() : Scalar(Fp{s, p});
}

Scalar &Scalar::operator+=(const Scalar &o) {
    *this = *this + o;
    return *this;
}

Scalar Scalar::operator-(const Scalar &o) const {
    if (!same_field(o))
        throw FieldMismatch("scalar field mismatch in -");
    if (o.is_neutral_zero())
        return *this;
    if (is_neutral_zero())
        return -o;
    if (is_rat())
        return rational(mpq_class(rat() - o.rat()));
    std::uint64_t p = fp().p;
    std::uint64_t s = fp().v >= o.fp().v ? fp().v - o.fp().v : fp().v + p - o.fp().v;
    return s == 0 ? Scalar() : Scalar(Fp{s, p});
}

Scalar Scalar::operator-() const {
    if (is_neutral_zero())
        return *this;
    if (is_rat())
        return rational(mpq_class(-rat()));
    std::uint64_t p = fp().p;
    return Scalar(Fp{p - fp().v, p});
}

Scalar Scalar::operator*(const Scalar &o) const {
    if (!same_field(o))
        throw FieldMismatch("scalar field mismatch in *");
    if (is_neutral_zero() || o.is_neutral_zero())
        return Scalar();
    if (is_rat())
        return rational(mpq_class(rat() * o.rat()));
    std::uint64_t s = mulmod(fp().v, o.fp().v, fp().p);
    return s == 0 ? Scalar() : Scalar(Fp{s, fp().p});
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw NotInvertible("division by zero");
    if (is_rat())
        return Scalar(mpq_class(1 / rat()));
    std::uint64_t p = fp().p;
    return Scalar(Fp{powmod(fp().v, p - 2, p), p}); // Fermat
}

bool Scalar::operator==(const Scalar &o) const {
    if (is_neutral_zero())
        return o.is_zero();
    if (o.is_neutral_zero())
        return is_zero();
    if (!same_field(o))
        return false;
    if (is_rat())
        return rat() == o.rat();
    return fp().v == o.fp().v;
}

std::string Scalar::str() const {
    if (is_neutral_zero())
        return "0";
    if (is_rat())
        return rat().get_str();
    return std::to_string(fp().v);
}

} // namespace braidgal

#include "weier/field.hpp"

#include "weier/error.hpp"

namespace weier {

namespace {

bool is_prime_trial(std::uint64_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

// a^{-1} mod p by the extended Euclidean algorithm; a != 0.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p)
{
    if (p > (std::uint64_t{1} << 31))
        throw Error(ErrorKind::InvalidField, "prime modulus exceeds 2^31: " + std::to_string(p));
    if (!is_prime_trial(p))
        throw Error(ErrorKind::InvalidField, "modulus is not prime: " + std::to_string(p));
    return Field(Kind::Prime, static_cast<std::uint32_t>(p));
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long v) const
{
    if (is_prime()) {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += p_;
        return FieldElem(p_, static_cast<std::uint32_t>(r));
    }
    return FieldElem(mpq_class(v));
}

FieldElem Field::from_integer(const mpz_class& v) const
{
    if (is_prime()) return FieldElem(p_, reduce(v, p_));
    return FieldElem(mpq_class(v));
}

FieldElem Field::from_fraction(const mpz_class& num, const mpz_class& den) const
{
    if (is_prime()) {
        std::uint32_t d = reduce(den, p_);
        if (d == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + describe());
        return from_integer(num) * FieldElem(p_, d).inverse();
    }
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElem(std::move(q));
}

std::string Field::describe() const
{
    return is_prime() ? "Fp:" + std::to_string(p_) : "Q";
}

Field FieldElem::field() const
{
    return modulus_ == 0 ? Field::rationals() : Field::prime(modulus_);
}

bool FieldElem::is_zero() const
{
    if (modulus_ != 0) return std::get<std::uint32_t>(value_) == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElem::is_one() const
{
    if (modulus_ != 0) return std::get<std::uint32_t>(value_) == 1;
    return std::get<mpq_class>(value_) == 1;
}

void FieldElem::require_same(const FieldElem& o) const
{
    if (modulus_ != o.modulus_)
        throw Error(ErrorKind::FieldMismatch, "operands from different coefficient fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const
{
    require_same(o);
    if (modulus_ != 0) {
        std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(o.value_);
        if (s >= modulus_) s -= modulus_;
        return FieldElem(modulus_, static_cast<std::uint32_t>(s));
    }
    return FieldElem(mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_)));
}

FieldElem FieldElem::operator-(const FieldElem& o) const
{
    require_same(o);
    if (modulus_ != 0) {
        std::uint32_t a = std::get<std::uint32_t>(value_), b = std::get<std::uint32_t>(o.value_);
        return FieldElem(modulus_, a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + modulus_ - b));
    }
    return FieldElem(mpq_class(std::get<mpq_class>(value_) - std::get<mpq_class>(o.value_)));
}

FieldElem FieldElem::operator*(const FieldElem& o) const
{
    require_same(o);
    if (modulus_ != 0) {
        std::uint64_t m = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(o.value_);
        return FieldElem(modulus_, static_cast<std::uint32_t>(m % modulus_));
    }
    return FieldElem(mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_)));
}

FieldElem FieldElem::operator/(const FieldElem& o) const
{
    require_same(o);
    return *this * o.inverse();
}

FieldElem FieldElem::operator-() const
{
    if (modulus_ != 0) {
        std::uint32_t a = std::get<std::uint32_t>(value_);
        return FieldElem(modulus_, a == 0 ? 0 : modulus_ - a);
    }
    return FieldElem(mpq_class(-std::get<mpq_class>(value_)));
}

FieldElem FieldElem::inverse() const
{
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (modulus_ != 0) return FieldElem(modulus_, inverse_mod(std::get<std::uint32_t>(value_), modulus_));
    return FieldElem(mpq_class(1 / std::get<mpq_class>(value_)));
}

bool FieldElem::operator==(const FieldElem& o) const
{
    require_same(o);
    if (modulus_ != 0) return std::get<std::uint32_t>(value_) == std::get<std::uint32_t>(o.value_);
    return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
}

std::uint32_t FieldElem::residue() const
{
    if (modulus_ == 0) throw Error(ErrorKind::FieldMismatch, "residue() on a rational");
    return std::get<std::uint32_t>(value_);
}

const mpq_class& FieldElem::rational() const
{
    if (modulus_ != 0) throw Error(ErrorKind::FieldMismatch, "rational() on a residue");
    return std::get<mpq_class>(value_);
}

bool FieldElem::is_negative() const
{
    return modulus_ == 0 && sgn(std::get<mpq_class>(value_)) < 0;
}

std::string FieldElem::to_string() const
{
    if (modulus_ != 0) return std::to_string(std::get<std::uint32_t>(value_));
    return std::get<mpq_class>(value_).get_str();
}

}  // namespace weier

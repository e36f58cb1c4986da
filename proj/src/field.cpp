#include "hm/field.hpp"

namespace hm {

namespace {
bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
}  // namespace

FieldSpec FieldSpec::prime(long p) {
    if (!is_prime(p)) throw hm_error("bad-params", "characteristic must be prime, got " + std::to_string(p));
    return {FieldKind::PrimeField, p};
}

std::string FieldSpec::describe() const {
    return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(characteristic);
}

Field::Field(FieldSpec spec) : spec_(spec) {
    if (spec_.kind == FieldKind::PrimeField && !is_prime(spec_.characteristic))
        throw hm_error("bad-params", "characteristic must be prime");
}

Rat Field::normalize(const Rat& a) const {
    if (is_rationals()) return a;
    // a = num/den with gcd(den, p) = 1 on valid inputs; reduce to num * den^{-1} mod p
    mpz_class p(spec_.characteristic);
    mpz_class num = a.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = a.get_den() % p;
    if (den == 0) throw hm_error("bad-params", "denominator divisible by the characteristic");
    if (den != 1) {
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw hm_error("bad-params", "non-invertible denominator mod p");
        num = (num * dinv) % p;
    }
    return Rat(num);
}

Rat Field::inv(const Rat& a) const {
    Rat v = normalize(a);
    if (v == 0) throw hm_error("bad-params", "division by zero");
    if (is_rationals()) return 1 / v;
    mpz_class p(spec_.characteristic), r;
    mpz_class num = v.get_num();
    mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    return Rat(r);
}

}  // namespace hm

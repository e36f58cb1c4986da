#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hm {

// All scalars are exact: either rationals or elements of a prime field F_p,
// represented canonically as mpq values (for F_p, integers in [0, p)).
using Rat = mpq_class;

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    long characteristic = 0;  // 0 for Q, prime p otherwise

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec prime(long p);

    bool operator==(const FieldSpec&) const = default;
    std::string describe() const;
};

// Arithmetic over a fixed FieldSpec. Values are kept canonical: over F_p
// every scalar is an integer in [0, p) with denominator 1.
class Field {
  public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    bool is_rationals() const { return spec_.kind == FieldKind::Rationals; }
    long p() const { return spec_.characteristic; }

    Rat normalize(const Rat& a) const;
    Rat from_long(long a) const { return normalize(Rat(a)); }

    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }
    Rat inv(const Rat& a) const;
    Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

    bool is_zero(const Rat& a) const { return normalize(a) == 0; }

  private:
    FieldSpec spec_;
};

struct hm_error : std::runtime_error {
    std::string code;
    hm_error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

}  // namespace hm

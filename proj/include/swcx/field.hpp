#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace swcx {

// Canonical integer encoding of a field element: e = sum coeffs[i] * p^i with
// little-endian polynomial coefficients in [0, p).
using Felt = std::uint16_t;

// Defining data of GF(p^k): characteristic, degree, and a monic irreducible
// modulus of degree k given as k+1 little-endian coefficients.
struct FieldSpec {
    int p = 2;
    int k = 1;
    std::vector<int> modulus;

    int q() const;
    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(int n);

// poly holds little-endian coefficients over F_p with a nonzero leading term.
// True iff the polynomial has no monic divisor of degree 1..deg/2.
bool poly_is_irreducible(int p, const std::vector<int>& poly);

// Arithmetic for one finite field, table-driven. Value semantics: copies share
// the immutable tables. Elements are plain Felt values and carry no reference
// back to the field; every operation takes the field explicitly.
class Field {
public:
    // Builds GF(p^k). If modulus is omitted, picks the lexicographically
    // smallest (by little-endian coefficient sequence) monic irreducible of
    // degree k. Throws std::invalid_argument for non-prime p, k < 1, or a
    // supplied modulus that is non-monic or reducible; GuardError if p^k
    // exceeds the table guard (1024).
    Field(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const { return t_->p; }
    int k() const { return t_->k; }
    int q() const { return t_->q; }
    const std::vector<int>& modulus() const { return t_->modulus; }
    FieldSpec spec() const { return FieldSpec{p(), k(), modulus()}; }

    Felt add(Felt a, Felt b) const { return t_->add[static_cast<size_t>(a) * t_->q + b]; }
    Felt mul(Felt a, Felt b) const { return t_->mul[static_cast<size_t>(a) * t_->q + b]; }
    Felt neg(Felt a) const { return t_->neg[a]; }
    Felt sub(Felt a, Felt b) const { return add(a, neg(b)); }
    Felt inv(Felt a) const;  // throws std::invalid_argument on a == 0
    Felt pow(Felt a, long long e) const;

    std::vector<int> coeffs(Felt a) const;  // little-endian digits base p
    Felt from_coeffs(const std::vector<int>& c) const;

    bool operator==(const Field& o) const { return spec() == o.spec(); }

private:
    struct Tables {
        int p, k, q;
        std::vector<int> modulus;
        std::vector<Felt> add, mul, neg, inv;
    };
    std::shared_ptr<const Tables> t_;
};

Field gf_make(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt);

// Resolves a prime power q = p^k to its field (canonical modulus). Throws
// std::invalid_argument if q is not a prime power >= 2.
Field field_for_order(int q);

Felt gf_add(const Field& F, Felt a, Felt b);
Felt gf_mul(const Field& F, Felt a, Felt b);
Felt gf_neg(const Field& F, Felt a);
Felt gf_inv(const Field& F, Felt a);

// Smallest (beta, alpha) in encoding-lexicographic order such that
// x^2 + alpha*x + beta has no root in F. Returns (alpha, beta).
std::pair<Felt, Felt> find_irreducible_quadratic(const Field& F);

// a^2 + alpha*a*b + beta*b^2; nonzero on (a,b) != (0,0) when x^2+alpha*x+beta
// is irreducible.
Felt quadratic_form(const Field& F, Felt a, Felt b, Felt alpha, Felt beta);

}  // namespace swcx

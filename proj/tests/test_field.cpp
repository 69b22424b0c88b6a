#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "swcx/error.hpp"
#include "swcx/field.hpp"

using namespace swcx;

namespace {

// Independent reducibility check by factor multiplication: f (monic, little
// endian) is reducible iff it is a product of two monic factors of positive
// degree. No division involved, unlike the library's check.
std::vector<int> poly_mul(int p, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return out;
}

std::vector<int> monic_of(int p, int deg, int counter) {
    std::vector<int> f(deg + 1, 0);
    f[deg] = 1;
    for (int i = 0; i < deg; ++i) {
        f[i] = counter % p;
        counter /= p;
    }
    return f;
}

int ipow(int b, int e) {
    int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

bool oracle_irreducible(int p, const std::vector<int>& f) {
    int deg = static_cast<int>(f.size()) - 1;
    for (int d1 = 1; d1 <= deg / 2; ++d1) {
        int d2 = deg - d1;
        for (int e1 = 0; e1 < ipow(p, d1); ++e1) {
            for (int e2 = 0; e2 < ipow(p, d2); ++e2) {
                if (poly_mul(p, monic_of(p, d1, e1), monic_of(p, d2, e2)) == f) return false;
            }
        }
    }
    return true;
}

// First irreducible in the canonical order: counter encodes (c_0 most
// significant, then c_1, ...), matching little-endian lexicographic order.
std::vector<int> oracle_canonical_modulus(int p, int k) {
    for (int e = 0;; ++e) {
        std::vector<int> f(k + 1, 0);
        f[k] = 1;
        int x = e;
        for (int i = k - 1; i >= 0; --i) {
            f[i] = x % p;
            x /= p;
        }
        if (oracle_irreducible(p, f)) return f;
    }
}

}  // namespace

TEST_CASE("canonical moduli are the lexicographically first irreducibles") {
    CHECK(gf_make(2, 1).modulus() == std::vector<int>{0, 1});
    CHECK(gf_make(3, 1).modulus() == std::vector<int>{0, 1});
    CHECK(gf_make(2, 2).modulus() == std::vector<int>{1, 1, 1});
    CHECK(gf_make(3, 2).modulus() == std::vector<int>{1, 0, 1});
    CHECK(gf_make(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});
    CHECK(gf_make(2, 4).modulus() == std::vector<int>{1, 0, 0, 1, 1});
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {2, 4}, {5, 2}}) {
        CAPTURE(p);
        CAPTURE(k);
        CHECK(gf_make(p, k).modulus() == oracle_canonical_modulus(p, k));
    }
}

TEST_CASE("irreducibility test agrees with the multiplication oracle") {
    for (int p : {2, 3}) {
        for (int deg = 2; deg <= 4; ++deg) {
            for (int e = 0; e < ipow(p, deg); ++e) {
                std::vector<int> f = monic_of(p, deg, e);
                CAPTURE(p);
                CAPTURE(f);
                CHECK(poly_is_irreducible(p, f) == oracle_irreducible(p, f));
            }
        }
    }
}

TEST_CASE("gf(4) arithmetic") {
    Field F = gf_make(2, 2);
    CHECK(F.q() == 4);
    CHECK(F.mul(2, 2) == 3);  // w * w = w + 1
    CHECK(F.mul(2, 3) == 1);  // w * (w+1) = 1
    CHECK(F.add(2, 3) == 1);
    CHECK(F.inv(2) == 3);
    CHECK(F.inv(3) == 2);
    CHECK(F.pow(2, 3) == 1);
    CHECK(F.neg(2) == 2);  // characteristic 2
}

TEST_CASE("gf(3) arithmetic") {
    Field F = gf_make(3, 1);
    CHECK(F.inv(2) == 2);
    CHECK(F.neg(1) == 2);
    CHECK(F.sub(1, 2) == 2);
    CHECK(F.mul(2, 2) == 1);
    CHECK_THROWS_AS(F.inv(0), std::invalid_argument);
}

TEST_CASE("gf(9) arithmetic") {
    Field F = gf_make(3, 2);
    CHECK(F.mul(3, 3) == 2);  // theta^2 = -1 for modulus x^2 + 1
    for (int a = 1; a < 9; ++a) {
        CHECK(F.mul(static_cast<Felt>(a), F.inv(static_cast<Felt>(a))) == 1);
        CHECK(F.pow(static_cast<Felt>(a), 8) == 1);
    }
}

TEST_CASE("coefficient round trip") {
    for (int q : {4, 8, 9, 16, 25}) {
        Field F = field_for_order(q);
        for (int e = 0; e < q; ++e) {
            CHECK(F.from_coeffs(F.coeffs(static_cast<Felt>(e))) == e);
        }
    }
}

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(gf_make(4, 1), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(gf_make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gf_make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(gf_make(2, 11), GuardError);             // 2048 > 1024
    CHECK_THROWS_AS(gf_make(2, 2, {{1, 0, 1}}), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(gf_make(2, 2, {{1, 1}}), std::invalid_argument);     // wrong degree
    CHECK_THROWS_AS(gf_make(3, 2, {{1, 0, 2}}), std::invalid_argument);  // non-monic
    CHECK_THROWS_AS(gf_make(3, 2, {{3, 0, 1}}), std::invalid_argument);  // bad coefficient
    CHECK_NOTHROW(gf_make(2, 10));  // 1024 is the guard boundary
}

TEST_CASE("field_for_order resolves prime powers") {
    CHECK(field_for_order(4).spec() == gf_make(2, 2).spec());
    CHECK(field_for_order(9).spec() == gf_make(3, 2).spec());
    CHECK(field_for_order(7).spec() == gf_make(7, 1).spec());
    CHECK_THROWS_AS(field_for_order(6), std::invalid_argument);
    CHECK_THROWS_AS(field_for_order(1), std::invalid_argument);
    CHECK_THROWS_AS(field_for_order(0), std::invalid_argument);
}

TEST_CASE("free wrappers match the methods") {
    Field F = gf_make(2, 2);
    CHECK(gf_add(F, 2, 3) == F.add(2, 3));
    CHECK(gf_mul(F, 2, 3) == F.mul(2, 3));
    CHECK(gf_neg(F, 2) == F.neg(2));
    CHECK(gf_inv(F, 2) == F.inv(2));
}

TEST_CASE("smallest irreducible quadratic") {
    // Golden pairs (alpha, beta).
    CHECK(find_irreducible_quadratic(gf_make(2, 1)) == std::pair<Felt, Felt>{1, 1});
    CHECK(find_irreducible_quadratic(gf_make(3, 1)) == std::pair<Felt, Felt>{0, 1});
    CHECK(find_irreducible_quadratic(gf_make(2, 2)) == std::pair<Felt, Felt>{2, 1});
    CHECK(find_irreducible_quadratic(gf_make(5, 1)) == std::pair<Felt, Felt>{1, 1});
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        Field F = field_for_order(q);
        auto no_root = [&](Felt a, Felt b) {
            for (int x = 0; x < q; ++x) {
                Felt fx = static_cast<Felt>(x);
                if (F.add(F.add(F.mul(fx, fx), F.mul(a, fx)), b) == 0) return false;
            }
            return true;
        };
        // Independent scan: beta outer, alpha inner, first rootless pair.
        std::pair<Felt, Felt> expect{0, 0};
        bool found = false;
        for (int b = 0; b < q && !found; ++b) {
            for (int a = 0; a < q && !found; ++a) {
                if (no_root(static_cast<Felt>(a), static_cast<Felt>(b))) {
                    expect = {static_cast<Felt>(a), static_cast<Felt>(b)};
                    found = true;
                }
            }
        }
        CAPTURE(q);
        CHECK(find_irreducible_quadratic(F) == expect);
    }
}

TEST_CASE("quadratic form values and non-degeneracy") {
    Field F3 = gf_make(3, 1);
    CHECK(quadratic_form(F3, 1, 1, 0, 1) == 2);
    CHECK(quadratic_form(F3, 0, 0, 0, 1) == 0);
    for (int q : {2, 3, 4, 5}) {
        Field F = field_for_order(q);
        auto [alpha, beta] = find_irreducible_quadratic(F);
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                bool zero = quadratic_form(F, static_cast<Felt>(a), static_cast<Felt>(b),
                                           alpha, beta) == 0;
                CHECK(zero == (a == 0 && b == 0));
            }
        }
    }
}

#include "swcx/field.hpp"

#include <stdexcept>
#include <string>

#include "swcx/error.hpp"

namespace swcx {

namespace {

constexpr int kMaxFieldOrder = 1024;

// Little-endian polynomial remainder check: true iff den divides num over F_p.
// den must have a nonzero leading coefficient.
bool poly_divides(int p, const std::vector<int>& den, std::vector<int> num) {
    int dd = static_cast<int>(den.size()) - 1;
    int dn = static_cast<int>(num.size()) - 1;
    // Assumes den is monic (all callers pass monic divisors).
    for (int sh = dn - dd; sh >= 0; --sh) {
        int c = num[dd + sh];
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i) {
            num[i + sh] = ((num[i + sh] - c * den[i]) % p + p) % p;
        }
    }
    for (int i = 0; i < dd; ++i) {
        if (num[i] != 0) return false;
    }
    return true;
}

int ipow(int b, int e) {
    int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

int FieldSpec::q() const { return ipow(p, k); }

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool poly_is_irreducible(int p, const std::vector<int>& poly) {
    int deg = static_cast<int>(poly.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    // A reducible polynomial of degree d has a monic factor of degree <= d/2.
    std::vector<int> div;
    for (int d = 1; d <= deg / 2; ++d) {
        div.assign(d + 1, 0);
        div[d] = 1;
        // Enumerate all p^d monic divisors of degree d.
        int total = ipow(p, d);
        for (int e = 0; e < total; ++e) {
            int x = e;
            for (int i = 0; i < d; ++i) {
                div[i] = x % p;
                x /= p;
            }
            if (poly_divides(p, div, poly)) return false;
        }
    }
    return true;
}

Field::Field(int p, int k, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long qll = 1;
    for (int i = 0; i < k; ++i) qll *= p;
    if (qll > kMaxFieldOrder) {
        throw GuardError("field order " + std::to_string(qll) + " exceeds table guard " +
                         std::to_string(kMaxFieldOrder));
    }
    int q = static_cast<int>(qll);

    std::vector<int> mod;
    if (modulus) {
        mod = *modulus;
        if (static_cast<int>(mod.size()) != k + 1 || mod[k] != 1) {
            throw std::invalid_argument("modulus must be monic of degree k");
        }
        for (int c : mod) {
            if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
        }
        if (!poly_is_irreducible(p, mod)) {
            throw std::invalid_argument("supplied modulus is reducible");
        }
    } else {
        // Lexicographically smallest little-endian coefficient sequence
        // (c_0, ..., c_{k-1}, 1): c_0 is the most significant compare slot.
        mod.assign(k + 1, 0);
        mod[k] = 1;
        bool found = false;
        for (int e = 0; e < q && !found; ++e) {
            int x = e;
            for (int i = k - 1; i >= 0; --i) {
                mod[i] = x % p;
                x /= p;
            }
            if (poly_is_irreducible(p, mod)) found = true;
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = k;
    t->q = q;
    t->modulus = mod;
    t->add.resize(static_cast<size_t>(q) * q);
    t->mul.resize(static_cast<size_t>(q) * q);
    t->neg.resize(q);
    t->inv.assign(q, 0);

    std::vector<int> da(k), db(k), prod(2 * k - 1);
    for (int a = 0; a < q; ++a) {
        int x = a;
        for (int i = 0; i < k; ++i) {
            da[i] = x % p;
            x /= p;
        }
        // negation
        int neg = 0;
        for (int i = k - 1; i >= 0; --i) neg = neg * p + (p - da[i]) % p;
        t->neg[a] = static_cast<Felt>(neg);
        for (int b = 0; b < q; ++b) {
            x = b;
            for (int i = 0; i < k; ++i) {
                db[i] = x % p;
                x /= p;
            }
            int sum = 0;
            for (int i = k - 1; i >= 0; --i) sum = sum * p + (da[i] + db[i]) % p;
            t->add[static_cast<size_t>(a) * q + b] = static_cast<Felt>(sum);

            std::fill(prod.begin(), prod.end(), 0);
            for (int i = 0; i < k; ++i) {
                if (da[i] == 0) continue;
                for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
            for (int d = 2 * k - 2; d >= k; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < k; ++i) {
                    prod[d - k + i] = ((prod[d - k + i] - c * mod[i]) % p + p) % p;
                }
            }
            int val = 0;
            for (int i = k - 1; i >= 0; --i) val = val * p + prod[i];
            t->mul[static_cast<size_t>(a) * q + b] = static_cast<Felt>(val);
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (t->mul[static_cast<size_t>(a) * q + b] == 1) {
                t->inv[a] = static_cast<Felt>(b);
                break;
            }
        }
    }
    t_ = std::move(t);
}

Felt Field::inv(Felt a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return t_->inv[a];
}

Felt Field::pow(Felt a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    Felt r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::vector<int> Field::coeffs(Felt a) const {
    std::vector<int> c(k());
    int x = a;
    for (int i = 0; i < k(); ++i) {
        c[i] = x % p();
        x /= p();
    }
    return c;
}

Felt Field::from_coeffs(const std::vector<int>& c) const {
    int v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p() + c[i];
    return static_cast<Felt>(v);
}

Field gf_make(int p, int k, std::optional<std::vector<int>> modulus) {
    return Field(p, k, std::move(modulus));
}

Field field_for_order(int q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself prime
    int k = 0, x = q;
    while (x % p == 0) {
        x /= p;
        ++k;
    }
    if (x != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return Field(p, k);
}

Felt gf_add(const Field& F, Felt a, Felt b) { return F.add(a, b); }
Felt gf_mul(const Field& F, Felt a, Felt b) { return F.mul(a, b); }
Felt gf_neg(const Field& F, Felt a) { return F.neg(a); }
Felt gf_inv(const Field& F, Felt a) { return F.inv(a); }

std::pair<Felt, Felt> find_irreducible_quadratic(const Field& F) {
    int q = F.q();
    for (int beta = 0; beta < q; ++beta) {
        for (int alpha = 0; alpha < q; ++alpha) {
            bool rootless = true;
            for (int x = 0; x < q && rootless; ++x) {
                Felt fx = F.add(F.add(F.mul(static_cast<Felt>(x), static_cast<Felt>(x)),
                                      F.mul(static_cast<Felt>(alpha), static_cast<Felt>(x))),
                                static_cast<Felt>(beta));
                if (fx == 0) rootless = false;
            }
            if (rootless) return {static_cast<Felt>(alpha), static_cast<Felt>(beta)};
        }
    }
    throw std::logic_error("no irreducible quadratic found");
}

Felt quadratic_form(const Field& F, Felt a, Felt b, Felt alpha, Felt beta) {
    Felt t = F.mul(a, a);
    t = F.add(t, F.mul(alpha, F.mul(a, b)));
    t = F.add(t, F.mul(beta, F.mul(b, b)));
    return t;
}

}  // namespace swcx

#include "zdbkit/field.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace zdbkit {

namespace {

// Dense polynomials over GF(p), coefficients low to high, used only while
// building the tables.
using Poly = std::vector<std::int64_t>;

int degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

void trim(Poly& a) { a.resize(static_cast<std::size_t>(degree(a) + 1)); }

Poly poly_mod(Poly a, const Poly& f, std::int64_t p) {
    const int df = degree(f);
    const std::int64_t lead_inv = [&] {
        // f is monic everywhere below; keep the general inverse for gcd use.
        std::int64_t lead = f[static_cast<std::size_t>(df)];
        std::int64_t inv = 1, base = lead, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return inv;
    }();
    for (int i = degree(a); i >= df; --i) {
        std::int64_t c = a[static_cast<std::size_t>(i)] % p;
        if (c == 0) continue;
        std::int64_t factor = c * lead_inv % p;
        for (int j = 0; j <= df; ++j) {
            auto& coeff = a[static_cast<std::size_t>(i - df + j)];
            coeff = ((coeff - factor * f[static_cast<std::size_t>(j)]) % p + p) % p;
        }
    }
    if (static_cast<int>(a.size()) > df) a.resize(static_cast<std::size_t>(df));
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    if (degree(a) < 0 || degree(b) < 0) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, std::int64_t e, const Poly& f, std::int64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (degree(b) >= 0) {
        Poly r = poly_mod(a, b, p);
        trim(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Monic f of degree s has no irreducible factor of degree < s iff
// gcd(f, x^(p^i) - x) is constant for 1 <= i < s; x^(p^s) = x closes the test.
bool is_irreducible(const Poly& f, std::int64_t p, int s) {
    if (s == 1) return true;
    Poly x{0, 1};
    Poly g = x;
    for (int i = 1; i <= s; ++i) {
        g = poly_powmod(std::move(g), p, f, p);
        if (i == s) break;
        Poly diff = g;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        Poly gg = poly_gcd(f, diff, p);
        if (degree(gg) > 0) return false;
    }
    Poly diff = g;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    return degree(diff) < 0;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Encoding-level arithmetic against a fixed modulus; the table builder's
// workhorse before exp/log exist.
struct RawArith {
    std::int64_t p;
    int s;
    const std::vector<int>* modulus;

    std::vector<std::int64_t> digits(std::int64_t x) const {
        std::vector<std::int64_t> d(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) {
            d[static_cast<std::size_t>(i)] = x % p;
            x /= p;
        }
        return d;
    }
    std::int64_t encode(const std::vector<std::int64_t>& d) const {
        std::int64_t x = 0;
        for (int i = s - 1; i >= 0; --i) x = x * p + d[static_cast<std::size_t>(i)];
        return x;
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        if (a == 0 || b == 0) return 0;
        auto da = digits(a), db = digits(b);
        std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * s), 0);
        for (int i = 0; i < s; ++i) {
            if (da[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < s; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    (prod[static_cast<std::size_t>(i + j)] +
                     da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
        }
        for (int i = 2 * s - 2; i >= s; --i) {
            std::int64_t c = prod[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            prod[static_cast<std::size_t>(i)] = 0;
            for (int j = 0; j < s; ++j) {
                auto& coeff = prod[static_cast<std::size_t>(i - s + j)];
                coeff = ((coeff - c * (*modulus)[static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        prod.resize(static_cast<std::size_t>(s));
        return encode(prod);
    }
    std::int64_t pow(std::int64_t base, std::int64_t e) const {
        std::int64_t result = 1;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }
};

} // namespace

FieldTable build_field(std::int64_t p, int s, int k,
                       const std::optional<std::vector<int>>& modulus_opt,
                       std::int64_t size_cap) {
    if (!is_prime(p)) throw PreconditionError("build_field: p = " + std::to_string(p) + " is not prime");
    if (s < 1) throw PreconditionError("build_field: extension degree must be positive");
    if (k < 1 || s % k != 0)
        throw PreconditionError("build_field: base degree k = " + std::to_string(k) +
                                " does not divide s = " + std::to_string(s));

    std::int64_t size = 1;
    for (int i = 0; i < s; ++i) {
        if (size > size_cap / p)
            throw PreconditionError("build_field: p^s exceeds the size cap " + std::to_string(size_cap));
        size *= p;
    }
    if (size > size_cap)
        throw PreconditionError("build_field: p^s exceeds the size cap " + std::to_string(size_cap));

    std::vector<int> modulus;
    if (modulus_opt) {
        modulus = *modulus_opt;
        if (static_cast<int>(modulus.size()) != s + 1 || modulus[static_cast<std::size_t>(s)] != 1)
            throw PreconditionError("build_field: modulus must be monic of degree s");
        for (int& c : modulus) {
            c %= static_cast<int>(p);
            if (c < 0) c += static_cast<int>(p);
        }
        Poly f(modulus.begin(), modulus.end());
        if (!is_irreducible(f, p, s))
            throw PreconditionError("build_field: modulus is reducible over GF(p)");
    } else {
        // Lexicographically smallest monic irreducible: scan the low
        // coefficients as a base-p counter.
        for (std::int64_t low = 0;; ++low) {
            if (low >= size) throw PreconditionError("build_field: no irreducible modulus found");
            std::vector<int> cand(static_cast<std::size_t>(s + 1));
            std::int64_t x = low;
            for (int i = 0; i < s; ++i) {
                cand[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
                x /= p;
            }
            cand[static_cast<std::size_t>(s)] = 1;
            Poly f(cand.begin(), cand.end());
            if (is_irreducible(f, p, s)) {
                modulus = std::move(cand);
                break;
            }
        }
    }

    FieldTable ft;
    ft.spec_ = FieldSpec{p, s, k, modulus};
    ft.m_ = s / k;
    ft.size_ = size;
    ft.order_ = size - 1;
    ft.q_ = 1;
    for (int i = 0; i < k; ++i) ft.q_ *= p;

    RawArith raw{p, s, &ft.spec_.modulus};
    const std::int64_t N = ft.order_;
    const auto primes = prime_factors(N);
    auto is_primitive = [&](std::int64_t enc) {
        if (enc == 0) return false;
        for (std::int64_t f : primes)
            if (raw.pow(enc, N / f) == 1) return false;
        return true;
    };

    // Companion root: residue of x modulo the modulus.
    std::int64_t root_enc;
    if (s >= 2) {
        root_enc = p;
    } else {
        root_enc = ((p - modulus[0]) % p + p) % p;
    }
    std::int64_t theta_enc;
    if (root_enc != 0 && is_primitive(root_enc)) {
        theta_enc = root_enc;
        ft.theta_is_root_ = true;
    } else {
        theta_enc = 0;
        for (std::int64_t cand = 1; cand < size; ++cand) {
            if (is_primitive(cand)) {
                theta_enc = cand;
                break;
            }
        }
        if (theta_enc == 0) throw std::logic_error("build_field: no primitive element found");
    }

    ft.exp_.resize(static_cast<std::size_t>(N));
    ft.log_.assign(static_cast<std::size_t>(size), -1);
    std::int64_t cur = 1;
    for (std::int64_t i = 0; i < N; ++i) {
        ft.exp_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(cur);
        if (ft.log_[static_cast<std::size_t>(cur)] != -1)
            throw std::logic_error("build_field: exp table collision, theta not primitive");
        ft.log_[static_cast<std::size_t>(cur)] = static_cast<std::int32_t>(i);
        cur = raw.mul(cur, theta_enc);
    }
    if (cur != 1) throw std::logic_error("build_field: exp table does not close");

    ft.alpha_log_ = N / (ft.q_ - 1);

    // Trace to GF(q) via the log tables: tr(theta^t) = sum_i theta^(t*q^i).
    std::vector<std::int64_t> qpow(static_cast<std::size_t>(ft.m_));
    for (int i = 0; i < ft.m_; ++i) {
        std::int64_t v = 1;
        for (int j = 0; j < i; ++j) v = v * ft.q_ % (N == 0 ? 1 : N);
        qpow[static_cast<std::size_t>(i)] = N == 0 ? 0 : v;
    }
    ft.trace_enc_.resize(static_cast<std::size_t>(N));
    for (std::int64_t t = 0; t < N; ++t) {
        std::int64_t acc = 0;
        for (int i = 0; i < ft.m_; ++i) {
            std::int64_t lg = (t * qpow[static_cast<std::size_t>(i)]) % N;
            acc = [&] {
                // digit-wise addition of two encodings
                std::int64_t a = acc, b = ft.exp_[static_cast<std::size_t>(lg)], out = 0, mult = 1;
                for (int d = 0; d < s; ++d) {
                    out += (a % p + b % p) % p * mult;
                    a /= p;
                    b /= p;
                    mult *= p;
                }
                return out;
            }();
        }
        ft.trace_enc_[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(acc);
    }

    // Enumerate GF(q) = {0} + powers of theta^((q^m-1)/(q-1)).
    ft.base_elems_.push_back(0);
    for (std::int64_t j = 0; j < ft.q_ - 1; ++j)
        ft.base_elems_.push_back(ft.exp_[static_cast<std::size_t>((j * ft.alpha_log_) % (N == 0 ? 1 : N))]);
    std::sort(ft.base_elems_.begin(), ft.base_elems_.end());
    ft.base_elems_.erase(std::unique(ft.base_elems_.begin(), ft.base_elems_.end()), ft.base_elems_.end());
    if (static_cast<std::int64_t>(ft.base_elems_.size()) != ft.q_)
        throw std::logic_error("build_field: base field enumeration is not of size q");
    ft.base_idx_.assign(static_cast<std::size_t>(size), -1);
    for (std::size_t i = 0; i < ft.base_elems_.size(); ++i)
        ft.base_idx_[static_cast<std::size_t>(ft.base_elems_[i])] = static_cast<std::int32_t>(i);

    for (std::int64_t t = 0; t < N; ++t) {
        std::int64_t enc = ft.trace_enc_[static_cast<std::size_t>(t)];
        if (ft.base_idx_[static_cast<std::size_t>(enc)] < 0)
            throw std::logic_error("build_field: trace value escapes the base field");
    }

    return ft;
}

Fe FieldTable::from_log(std::int64_t lg) const {
    std::int64_t n = order_;
    lg %= n;
    if (lg < 0) lg += n;
    return Fe{static_cast<std::int32_t>(lg)};
}

Fe FieldTable::from_encoding(std::int64_t enc) const {
    if (enc < 0 || enc >= size_) throw PreconditionError("from_encoding: encoding out of range");
    if (enc == 0) return Fe{};
    return Fe{log_[static_cast<std::size_t>(enc)]};
}

Fe FieldTable::mul(Fe x, Fe y) const {
    if (x.is_zero() || y.is_zero()) return Fe{};
    return from_log(static_cast<std::int64_t>(x.lg) + y.lg);
}

Fe FieldTable::inv(Fe x) const {
    if (x.is_zero()) throw PreconditionError("inv: inverse of zero");
    return from_log(-static_cast<std::int64_t>(x.lg));
}

Fe FieldTable::neg(Fe x) const {
    if (x.is_zero() || p() == 2) return x;
    return from_log(x.lg + order_ / 2);
}

Fe FieldTable::add(Fe x, Fe y) const {
    std::int64_t a = encoding(x), b = encoding(y), out = 0, mult = 1;
    const std::int64_t pp = p();
    for (int d = 0; d < s(); ++d) {
        out += (a % pp + b % pp) % pp * mult;
        a /= pp;
        b /= pp;
        mult *= pp;
    }
    return from_encoding(out);
}

Fe FieldTable::sub(Fe x, Fe y) const { return add(x, neg(y)); }

Fe FieldTable::pow(Fe x, std::int64_t e) const {
    if (x.is_zero()) {
        if (e == 0) return one();
        if (e < 0) throw PreconditionError("pow: negative power of zero");
        return Fe{};
    }
    std::int64_t n = order_;
    __int128 lg = static_cast<__int128>(x.lg) * (e % n);
    return from_log(static_cast<std::int64_t>(lg % n));
}

Fe FieldTable::frobenius_q(Fe x) const {
    if (x.is_zero()) return x;
    return from_log(static_cast<std::int64_t>(x.lg) * q() % order_);
}

Fe FieldTable::trace(Fe x) const {
    if (x.is_zero()) return Fe{};
    return from_encoding(trace_enc_[static_cast<std::size_t>(x.lg)]);
}

bool FieldTable::in_base(Fe x) const {
    if (x.is_zero()) return true;
    return x.lg % alpha_log_ == 0;
}

int FieldTable::base_index(Fe x) const {
    std::int64_t enc = encoding(x);
    std::int32_t idx = base_idx_[static_cast<std::size_t>(enc)];
    if (idx < 0) throw PreconditionError("base_index: element not in the base field");
    return idx;
}

Fe FieldTable::base_element(int idx) const {
    if (idx < 0 || idx >= static_cast<int>(base_elems_.size()))
        throw PreconditionError("base_element: index out of range");
    return from_encoding(base_elems_[static_cast<std::size_t>(idx)]);
}

std::string FieldTable::to_string(Fe x) const {
    if (x.is_zero()) return "0";
    if (x.lg == 0) return "1";
    return "theta^" + std::to_string(x.lg);
}

} // namespace zdbkit

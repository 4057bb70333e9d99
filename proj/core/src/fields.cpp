#include "ildpc/fields.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ildpc {
namespace {

// Dense polynomials over F_p, coefficients lowest degree first.
using Poly = std::vector<int>;

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

void poly_trim(Poly& a) { a.resize(static_cast<std::size_t>(poly_deg(a) + 1)); }

int inv_mod_p(int a, int p) {
    // Fermat; p is prime and a != 0.
    int r = 1;
    int b = a % p;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    poly_trim(c);
    return c;
}

Poly poly_mod(Poly a, const Poly& f, int p) {
    const int df = poly_deg(f);
    const int lead_inv = inv_mod_p(f[static_cast<std::size_t>(df)], p);
    int da = poly_deg(a);
    while (da >= df) {
        const int factor = a[static_cast<std::size_t>(da)] * lead_inv % p;
        for (int i = 0; i <= df; ++i) {
            const std::size_t k = static_cast<std::size_t>(da - df + i);
            a[k] = ((a[k] - factor * f[static_cast<std::size_t>(i)]) % p + p) % p;
        }
        da = poly_deg(a);
    }
    poly_trim(a);
    return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, int p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    while (poly_deg(b) >= 0) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic
    const int d = poly_deg(a);
    if (d >= 0) {
        const int s = inv_mod_p(a[static_cast<std::size_t>(d)], p);
        for (auto& c : a) c = c * s % p;
    }
    return a;
}

// A degree-d polynomial is irreducible over F_p iff it shares no factor with
// x^{p^k} - x for any k <= d/2 (that product covers every irreducible
// polynomial of degree <= d/2).
bool poly_irreducible(const Poly& f, int p) {
    const int d = poly_deg(f);
    if (d < 1) return false;
    Poly xq{0, 1};  // x^{p^k} mod f, starting at k=0
    for (int k = 1; k <= d / 2; ++k) {
        xq = poly_powmod(std::move(xq), static_cast<std::uint64_t>(p), f, p);
        Poly diff = xq;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        if (poly_deg(poly_gcd(f, diff, p)) != 0) return false;
    }
    return true;
}

constexpr int kMulTableLimit = 4096;  // tabulate products up to this field order

}  // namespace

bool is_prime_power(int q, int* p_out, int* m_out) {
    if (q < 2) return false;
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself prime
    int m = 0;
    int v = q;
    while (v % p == 0) {
        v /= p;
        ++m;
    }
    if (v != 1) return false;
    if (p_out) *p_out = p;
    if (m_out) *m_out = m;
    return true;
}

int FieldCtx::check(int x) const {
    if (x < 0 || x >= order_)
        throw std::invalid_argument("field element " + std::to_string(x) +
                                    " out of range [0," + std::to_string(order_) + ")");
    return x;
}

FieldCtx FieldCtx::build(int q) {
    int p = 0, m = 0;
    if (!is_prime_power(q, &p, &m))
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power >= 2");

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.m_ = m;
    ctx.q_ = q;

    long long ord = 1;
    for (int i = 0; i < 2 * m; ++i) ord *= p;
    if (ord > (1 << 22))
        throw std::invalid_argument("field order q^2 = " + std::to_string(ord) + " too large");
    ctx.order_ = static_cast<int>(ord);

    // Smallest monic irreducible of degree 2m; scanning codes in ascending
    // integer order visits coefficient vectors in lexicographic order with
    // the highest degree most significant.
    const int deg = 2 * m;
    for (int code = 0; code < ctx.order_; ++code) {
        Poly f(static_cast<std::size_t>(deg + 1), 0);
        int v = code;
        for (int i = 0; i < deg; ++i) {
            f[static_cast<std::size_t>(i)] = v % p;
            v /= p;
        }
        f[static_cast<std::size_t>(deg)] = 1;
        if (poly_irreducible(f, p)) {
            ctx.modulus_ = f;
            break;
        }
    }
    if (ctx.modulus_.empty())
        throw std::logic_error("no irreducible modulus found");  // cannot happen

    if (ctx.order_ <= kMulTableLimit) {
        ctx.mul_tab_.resize(static_cast<std::size_t>(ctx.order_) * ctx.order_);
        for (int a = 0; a < ctx.order_; ++a)
            for (int b = a; b < ctx.order_; ++b) {
                const int r = ctx.mul_raw(a, b);
                ctx.mul_tab_[static_cast<std::size_t>(a) * ctx.order_ + b] = r;
                ctx.mul_tab_[static_cast<std::size_t>(b) * ctx.order_ + a] = r;
            }
    }

    ctx.frob_tab_.resize(static_cast<std::size_t>(ctx.order_));
    for (int x = 0; x < ctx.order_; ++x) ctx.frob_tab_[static_cast<std::size_t>(x)] = ctx.pow(x, static_cast<std::uint64_t>(q));

    ctx.inv_tab_.assign(static_cast<std::size_t>(ctx.order_), 0);
    for (int x = 1; x < ctx.order_; ++x)
        ctx.inv_tab_[static_cast<std::size_t>(x)] = ctx.pow(x, static_cast<std::uint64_t>(ctx.order_ - 2));

    ctx.subfield_index_.assign(static_cast<std::size_t>(ctx.order_), -1);
    for (int x = 0; x < ctx.order_; ++x) {
        if (ctx.frob_tab_[static_cast<std::size_t>(x)] == x) {
            ctx.subfield_index_[static_cast<std::size_t>(x)] = static_cast<int>(ctx.subfield_.size());
            ctx.subfield_.push_back(x);
        }
    }
    if (static_cast<int>(ctx.subfield_.size()) != q)
        throw std::logic_error("subfield of F_{q^2} does not have q elements");

    return ctx;
}

int FieldCtx::add(int a, int b) const {
    check(a);
    check(b);
    int r = 0, mult = 1;
    for (int i = 0; i < 2 * m_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

int FieldCtx::sub(int a, int b) const { return add(a, neg(b)); }

int FieldCtx::neg(int a) const {
    check(a);
    int r = 0, mult = 1;
    for (int i = 0; i < 2 * m_; ++i) {
        r += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

int FieldCtx::mul_raw(int a, int b) const {
    Poly pa(static_cast<std::size_t>(2 * m_)), pb(static_cast<std::size_t>(2 * m_));
    for (int i = 0; i < 2 * m_; ++i) {
        pa[static_cast<std::size_t>(i)] = a % p_;
        a /= p_;
        pb[static_cast<std::size_t>(i)] = b % p_;
        b /= p_;
    }
    Poly pr = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
    int r = 0, mult = 1;
    for (std::size_t i = 0; i < pr.size(); ++i) {
        r += pr[i] * mult;
        mult *= p_;
    }
    return r;
}

int FieldCtx::mul(int a, int b) const {
    check(a);
    check(b);
    if (!mul_tab_.empty()) return mul_tab_[static_cast<std::size_t>(a) * order_ + b];
    return mul_raw(a, b);
}

int FieldCtx::inv(int a) const {
    check(a);
    if (a == 0) throw std::domain_error("inversion of zero");
    return inv_tab_[static_cast<std::size_t>(a)];
}

int FieldCtx::pow(int a, std::uint64_t e) const {
    check(a);
    int r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul_tab_.empty() ? mul_raw(r, base) : mul_tab_[static_cast<std::size_t>(r) * order_ + base];
        base = mul_tab_.empty() ? mul_raw(base, base) : mul_tab_[static_cast<std::size_t>(base) * order_ + base];
        e >>= 1;
    }
    return r;
}

int FieldCtx::trace_term(int a, int y) const {
    check(y);
    if (!in_subfield(a))
        throw std::invalid_argument("trace_term coefficient " + std::to_string(a) +
                                    " is not in the subfield");
    return add(mul(a, y), mul(a, frobenius(y)));
}

}  // namespace ildpc

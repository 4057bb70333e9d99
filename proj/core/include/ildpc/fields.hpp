#pragma once

#include <cstdint>
#include <vector>

namespace ildpc {

/// Arithmetic in F_{q^2} together with its index-q subfield F_q, where
/// q = p^m is a prime power.
///
/// F_{q^2} is realized as F_p[t]/(f) for a monic irreducible f of degree 2m;
/// f is the lexicographically smallest such polynomial (coefficients compared
/// from the highest degree down), so two contexts built for the same q are
/// identical. Elements are encoded as integers in [0, q^2) whose base-p
/// digits are the polynomial coefficients, lowest degree first.
///
/// F_q is not a separate structure: it is the set of elements fixed by the
/// Frobenius map x -> x^q.
class FieldCtx {
public:
    /// Builds the canonical context for a prime power q >= 2.
    /// Throws std::invalid_argument if q is not a prime power.
    static FieldCtx build(int q);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    /// Number of elements of F_{q^2}.
    int order() const { return order_; }
    /// Modulus coefficients, lowest degree first, including the leading 1
    /// (size 2m + 1).
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    /// Multiplicative inverse; throws std::domain_error for 0.
    int inv(int a) const;
    int pow(int a, std::uint64_t e) const;

    /// Frobenius automorphism y -> y^q, computed by square-and-multiply
    /// (cached in a table after construction).
    int frobenius(int y) const { return frob_tab_[check(y)]; }

    /// a*y + a*y^q for a in the subfield; the result lies in the subfield.
    /// Throws std::invalid_argument if a is not fixed by Frobenius.
    int trace_term(int a, int y) const;

    /// Norm to the subfield: x^(q+1) = x * x^q.
    int norm(int x) const { return mul(x, frobenius(x)); }

    bool in_subfield(int x) const { return frob_tab_[check(x)] == x; }

    /// The q elements fixed by Frobenius, ascending by encoding.
    const std::vector<int>& subfield_elements() const { return subfield_; }
    /// Position of an element in subfield_elements(), or -1.
    int subfield_index(int x) const { return subfield_index_[check(x)]; }

private:
    FieldCtx() = default;
    int check(int x) const;
    int mul_raw(int a, int b) const;

    int p_ = 0, m_ = 0, q_ = 0, order_ = 0;
    std::vector<int> modulus_;
    std::vector<int> frob_tab_;
    std::vector<int> inv_tab_;
    std::vector<int> mul_tab_;      // order x order when tabulated, else empty
    std::vector<int> subfield_;
    std::vector<int> subfield_index_;
};

/// Spec-level constructor name; identical to FieldCtx::build.
inline FieldCtx build_field(int q) { return FieldCtx::build(q); }

/// True iff q = p^m for a prime p and m >= 1. Outputs p and m when non-null.
bool is_prime_power(int q, int* p_out = nullptr, int* m_out = nullptr);

}  // namespace ildpc

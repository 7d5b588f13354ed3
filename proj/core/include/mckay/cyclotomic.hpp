#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

/// Coefficient type for cyclotomic integers. All coefficient arithmetic is
/// overflow-checked; an operation whose result does not fit in 64 bits throws
/// std::overflow_error instead of wrapping.
using Coeff = std::int64_t;

/// Overflow-checked coefficient arithmetic; throws std::overflow_error.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// Euler totient of n (n >= 1).
long long euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree.
/// Monic, degree euler_phi(n). Throws std::invalid_argument for n < 1.
std::vector<Coeff> cyclotomic_polynomial(int n);

/// An element of Z[zeta_n], the ring of integers of the n-th cyclotomic
/// field, kept in canonical form: the residue modulo the n-th cyclotomic
/// polynomial. Two values with the same root_order are equal as complex
/// numbers iff their coefficient vectors are identical, so operator== decides
/// equality of the represented numbers.
///
/// coeffs() has length exactly euler_phi(root_order); entry k multiplies
/// zeta_n^k. Values are immutable after construction.
///
/// Mixed root orders are never unified implicitly: combining values with
/// different root_order throws std::invalid_argument. Callers fix one n
/// (typically the exponent of the group at hand) per computation.
class CycloInt {
public:
    static CycloInt zero(int root_order);
    static CycloInt one(int root_order);
    static CycloInt from_integer(int root_order, Coeff value);

    /// zeta_n^k, for any integer k (reduced mod n).
    static CycloInt root_power(int root_order, long long k);

    /// Sum of c * zeta_n^p over the given (c, p) pairs. Powers may be
    /// arbitrary integers (pre-reduction form); the result is canonical.
    static CycloInt from_power_sums(int root_order,
                                    const std::vector<std::pair<Coeff, long long>>& terms);

    /// Value of the polynomial sum coeffs[k] * zeta_n^k, any length.
    static CycloInt from_polynomial(int root_order, const std::vector<Coeff>& coeffs);

    int root_order() const { return root_order_; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    /// The rational integer this value equals, if it is one.
    std::optional<Coeff> as_integer() const;

    /// this / m when every coefficient is divisible by m, nullopt otherwise.
    /// m must be >= 1.
    std::optional<CycloInt> divided_by(Coeff m) const;

    /// Complex conjugate: sends zeta_n^k to zeta_n^(n-k). An involution.
    CycloInt conjugate() const;

    /// Multiplication by a rational integer.
    CycloInt scaled(Coeff m) const;

    friend CycloInt operator+(const CycloInt& a, const CycloInt& b);
    friend CycloInt operator-(const CycloInt& a, const CycloInt& b);
    friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
    CycloInt operator-() const;

    CycloInt& operator+=(const CycloInt& b) { return *this = *this + b; }
    CycloInt& operator*=(const CycloInt& b) { return *this = *this * b; }

    friend bool operator==(const CycloInt& a, const CycloInt& b) = default;
    friend std::strong_ordering operator<=>(const CycloInt& a, const CycloInt& b) = default;

    /// Diagnostic form, e.g. "(1 - z^2 @ n=5)".
    std::string to_string() const;

private:
    CycloInt(int root_order, std::vector<Coeff> canonical)
        : root_order_(root_order), coeffs_(std::move(canonical)) {}

    int root_order_;
    std::vector<Coeff> coeffs_;
};

} // namespace mckay

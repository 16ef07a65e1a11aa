/**
 * @file laurent.hpp
 * @brief Exact arithmetic in Z[q^{±1}] and in the rational function field Q(t).
 *
 * LaurentPoly is the scalar ring for every algebra element in this project;
 * RationalFunc carries Hilbert series and backs the exact linear solver.
 */
#ifndef QASL_LAURENT_HPP
#define QASL_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qasl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sparse Laurent polynomial over the integers. The zero polynomial is the
/// empty map; no stored coefficient is ever zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const BigInt& constant);
    explicit LaurentPoly(long constant);
    LaurentPoly(const BigInt& coeff, int exponent);

    /// q^k (k may be negative).
    static LaurentPoly q_power(int k);
    static const LaurentPoly& zero();
    static const LaurentPoly& one();

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// If this polynomial is exactly q^k, returns k. Otherwise nothing.
    std::optional<int> unit_exponent() const;

    const std::map<int, BigInt>& terms() const { return terms_; }
    int min_exponent() const;  // pre: not zero
    int max_exponent() const;  // pre: not zero

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const = default;

    LaurentPoly pow(unsigned e) const;

    /// Evaluation homomorphism q -> value. Rejects value == 0 (q is a unit).
    Rational specialize(const Rational& value) const;

    /// {"<exponent>": "<coefficient>", ...}
    nlohmann::json to_json() const;
    std::string to_string() const;

private:
    void set(int exponent, BigInt coeff);
    std::map<int, BigInt> terms_;
};

/// Dense integer polynomial, ascending coefficients, no trailing zeros.
/// Support type for RationalFunc; degree of the zero polynomial is -1.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(const BigInt& c0);
    explicit DensePoly(std::vector<BigInt> coeffs);
    static DensePoly monomial(const BigInt& coeff, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    DensePoly& operator+=(const DensePoly& o);
    DensePoly& operator-=(const DensePoly& o);
    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    DensePoly operator-() const;
    bool operator==(const DensePoly& o) const = default;

    BigInt eval_int(const BigInt& x) const;
    Rational eval(const Rational& x) const;

    /// gcd of the coefficients, carrying the sign of the leading one.
    BigInt content() const;
    /// Coefficients reversed: p(1/t) * t^deg(p).
    DensePoly reversed() const;

    /// Exact quotient, or nothing if b does not divide a.
    static std::optional<DensePoly> exact_div(const DensePoly& a, const DensePoly& b);
    /// Full gcd in Z[x] (content times primitive part), positive leading coeff.
    static DensePoly gcd(DensePoly a, DensePoly b);

    nlohmann::json to_json() const;  // ascending-degree coefficient strings
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Reduced fraction of integer polynomials. Canonical form: denominator has
/// positive leading coefficient, numerator and denominator share no factor
/// (polynomial or integer), so equal fractions compare equal field-wise.
class RationalFunc {
public:
    RationalFunc();  // zero
    RationalFunc(DensePoly num, DensePoly den);
    explicit RationalFunc(const BigInt& constant);
    explicit RationalFunc(long constant);
    /// Embeds q^{-k} P(q) as P / q^k.
    explicit RationalFunc(const LaurentPoly& p);
    /// t^k as a fraction (k may be negative).
    static RationalFunc monomial_power(int k);

    const DensePoly& num() const { return num_; }
    const DensePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RationalFunc& operator+=(const RationalFunc& o);
    RationalFunc& operator-=(const RationalFunc& o);
    RationalFunc& operator*=(const RationalFunc& o);
    RationalFunc& operator/=(const RationalFunc& o);  // throws on division by zero
    friend RationalFunc operator+(RationalFunc a, const RationalFunc& b) { return a += b; }
    friend RationalFunc operator-(RationalFunc a, const RationalFunc& b) { return a -= b; }
    friend RationalFunc operator*(RationalFunc a, const RationalFunc& b) { return a *= b; }
    friend RationalFunc operator/(RationalFunc a, const RationalFunc& b) { return a /= b; }
    RationalFunc operator-() const;
    bool operator==(const RationalFunc& o) const = default;

    /// Back to Z[q^{±1}] when the reduced denominator is a power of q.
    std::optional<LaurentPoly> to_laurent() const;

    /// H(t) -> H(1/t), cleared of negative powers.
    RationalFunc substitute_inverse() const;

    /// Power-series coefficients a_0..a_upto. Requires den(0) != 0.
    std::vector<Rational> taylor(int upto) const;

    /// Multiplicity of the root t = 1 in the denominator.
    int pole_order_at_one() const;

    /// {"num": [...], "den": [...]}
    nlohmann::json to_json() const;
    std::string to_string(const std::string& var = "t") const;

private:
    void reduce();
    DensePoly num_, den_;
};

}  // namespace qasl

#endif

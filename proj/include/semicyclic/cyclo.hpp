#pragma once

#include <complex>
#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace semicyclic {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};
struct UnsupportedDivisionError : std::domain_error {
    using std::domain_error::domain_error;
};

using Rational = mpq_class;

/// Coefficients of an element of Q(q) over the power basis 1, q, ..., q^{phi-1}.
using CycCoeffs = std::vector<Rational>;

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/**
 * Ground field data for a fixed odd N >= 3: q is a primitive 2N-th root of
 * unity, realized exactly as Q[x]/(Phi_{2N}(x)) with x standing for q.
 * Phi_{2N} is computed as Phi_N(-x) and cross-checked numerically at
 * x = e^{i pi/N}.
 */
class FieldSpec {
  public:
    static FieldSpecPtr create(int n);

    int n() const { return n_; }
    int phi() const { return phi_; }
    long root_order() const { return 2L * n_; }

    /// Integer coefficients of Phi_{2N}, constant term first; monic of degree phi.
    const std::vector<mpz_class>& modulus() const { return modulus_; }

    /// x^{k mod 2N} reduced mod Phi_{2N}.
    const CycCoeffs& q_power_coeffs(long k) const;

    /// Reduce an arbitrary-degree rational polynomial in x mod Phi_{2N}.
    CycCoeffs reduce(std::vector<Rational> poly) const;

  private:
    FieldSpec() = default;
    int n_ = 0;
    int phi_ = 0;
    std::vector<mpz_class> modulus_;
    std::vector<CycCoeffs> q_pow_; // exponent 0 .. 2N-1
};

bool same_field(const FieldSpecPtr& lhs, const FieldSpecPtr& rhs);

/**
 * Element of Q(q)[a, a^{-1}]: a Laurent polynomial in the formal unit a whose
 * coefficients are exact cyclotomic numbers. Canonical form never stores zero
 * coefficients, so is_zero and operator== are structural.
 */
class CycScalar {
  public:
    /// Unbound exact zero; binds to a field on first use with a bound operand.
    CycScalar() = default;

    static CycScalar zero(const FieldSpecPtr& spec);
    static CycScalar one(const FieldSpecPtr& spec);
    static CycScalar from_rational(const FieldSpecPtr& spec, const Rational& r);
    static CycScalar from_int(const FieldSpecPtr& spec, long v);
    /// q^k for any integer k (reduced mod 2N).
    static CycScalar q_power(const FieldSpecPtr& spec, long k);
    /// a^k for any integer k.
    static CycScalar a_power(const FieldSpecPtr& spec, long k);
    /// The symbolic unit a.
    static CycScalar symbol_a(const FieldSpecPtr& spec);
    /// Single term c(q) * a^k.
    static CycScalar term(const FieldSpecPtr& spec, long a_exp, CycCoeffs coeffs);
    /// q - q^{-1}.
    static CycScalar q_minus_qinv(const FieldSpecPtr& spec);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::map<long, CycCoeffs>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True when the only a-exponent present is zero (or the value is zero).
    bool a_free() const;
    /// True when the scalar is c(q) * a^k for a single k (and nonzero).
    bool is_monomial() const { return terms_.size() == 1; }
    /// Coefficient of a^k, as an a-free scalar.
    CycScalar a_coefficient(long k) const;
    long a_degree_min() const;
    long a_degree_max() const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& rhs);
    CycScalar& operator-=(const CycScalar& rhs);
    CycScalar& operator*=(const CycScalar& rhs);
    friend CycScalar operator+(CycScalar lhs, const CycScalar& rhs) { return lhs += rhs; }
    friend CycScalar operator-(CycScalar lhs, const CycScalar& rhs) { return lhs -= rhs; }
    friend CycScalar operator*(CycScalar lhs, const CycScalar& rhs) { return lhs *= rhs; }
    bool operator==(const CycScalar& rhs) const;
    bool operator!=(const CycScalar& rhs) const { return !(*this == rhs); }

    /**
     * Multiplicative inverse. Only units of the form c(q) * a^k are invertible
     * here (c nonzero); the cyclotomic part is inverted by extended Euclid
     * modulo Phi_{2N}. Zero raises DivisionByZeroError, anything with more
     * than one a-term raises UnsupportedDivisionError.
     */
    CycScalar inverse() const;

    /// Numerical substitution q = e^{i pi / N}, a = a_value. Display/cross-check only.
    std::complex<double> to_complex(std::complex<double> a_value) const;

    std::string to_string() const;

  private:
    FieldSpecPtr spec_;
    std::map<long, CycCoeffs> terms_;

    void drop_zero_terms();
    static void require_compatible(const CycScalar& lhs, const CycScalar& rhs);
};

std::ostream& operator<<(std::ostream& os, const CycScalar& s);

} // namespace semicyclic

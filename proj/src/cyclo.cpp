#include "semicyclic/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

namespace semicyclic {

namespace {

using ZPoly = std::vector<mpz_class>;

void zpoly_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of polynomials with integer coefficients; the divisor must
// divide evenly (it does for cyclotomic factors of x^n - 1).
ZPoly zpoly_div_exact(ZPoly num, const ZPoly& den) {
    ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size() && !num.empty()) {
        mpz_class lead = num.back() / den.back();
        size_t shift = num.size() - den.size();
        quot[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
        zpoly_trim(num);
    }
    return quot;
}

ZPoly cyclotomic_poly(int n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    ZPoly num(static_cast<size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = zpoly_div_exact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

} // namespace

FieldSpecPtr FieldSpec::create(int n) {
    if (n < 3 || n % 2 == 0)
        throw ParameterError("FieldSpec: N must be odd and >= 3, got " + std::to_string(n));

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->n_ = n;

    // Phi_{2N}(x) = Phi_N(-x) for odd N.
    ZPoly phi_n = cyclotomic_poly(n);
    spec->modulus_.resize(phi_n.size());
    for (size_t j = 0; j < phi_n.size(); ++j)
        spec->modulus_[j] = (j % 2 == 0) ? phi_n[j] : -phi_n[j];
    spec->phi_ = static_cast<int>(spec->modulus_.size()) - 1;

    // Numeric sanity: Phi_{2N}(e^{i pi / N}) must vanish.
    const std::complex<double> q = std::polar(1.0, std::numbers::pi / n);
    std::complex<double> acc = 0.0;
    for (size_t j = spec->modulus_.size(); j-- > 0;)
        acc = acc * q + std::complex<double>(spec->modulus_[j].get_d());
    if (std::abs(acc) > 1e-10)
        throw std::logic_error("FieldSpec: cyclotomic modulus failed numeric root check");

    // Reduced powers x^0 .. x^{2N-1}.
    spec->q_pow_.resize(static_cast<size_t>(2 * n));
    CycCoeffs cur(static_cast<size_t>(spec->phi_), Rational(0));
    cur[0] = 1;
    for (long k = 0; k < 2 * n; ++k) {
        spec->q_pow_[static_cast<size_t>(k)] = cur;
        // multiply by x and reduce
        CycCoeffs next(static_cast<size_t>(spec->phi_) + 1, Rational(0));
        for (int j = 0; j < spec->phi_; ++j) next[static_cast<size_t>(j) + 1] = cur[static_cast<size_t>(j)];
        next = spec->reduce(std::move(next));
        cur = std::move(next);
    }
    return spec;
}

const CycCoeffs& FieldSpec::q_power_coeffs(long k) const {
    long m = k % root_order();
    if (m < 0) m += root_order();
    return q_pow_[static_cast<size_t>(m)];
}

CycCoeffs FieldSpec::reduce(std::vector<Rational> poly) const {
    const size_t deg = static_cast<size_t>(phi_);
    for (size_t d = poly.size(); d-- > deg;) {
        if (poly[d] == 0) continue;
        Rational c = poly[d];
        poly[d] = 0;
        // x^phi = -sum_{j<phi} m_j x^j (modulus is monic)
        for (size_t j = 0; j < deg; ++j) poly[d - deg + j] -= c * Rational(modulus_[j]);
    }
    poly.resize(deg, Rational(0));
    return poly;
}

bool same_field(const FieldSpecPtr& lhs, const FieldSpecPtr& rhs) {
    if (!lhs || !rhs) return false;
    return lhs->n() == rhs->n();
}

namespace {

bool coeffs_zero(const CycCoeffs& c) {
    return std::all_of(c.begin(), c.end(), [](const Rational& r) { return r == 0; });
}

} // namespace

CycScalar CycScalar::zero(const FieldSpecPtr& spec) {
    CycScalar s;
    s.spec_ = spec;
    return s;
}

CycScalar CycScalar::one(const FieldSpecPtr& spec) { return from_int(spec, 1); }

CycScalar CycScalar::from_rational(const FieldSpecPtr& spec, const Rational& r) {
    Rational canon = r;
    canon.canonicalize();
    CycScalar s = zero(spec);
    if (canon != 0) {
        CycCoeffs c(static_cast<size_t>(spec->phi()), Rational(0));
        c[0] = canon;
        s.terms_.emplace(0, std::move(c));
    }
    return s;
}

CycScalar CycScalar::from_int(const FieldSpecPtr& spec, long v) {
    return from_rational(spec, Rational(v));
}

CycScalar CycScalar::q_power(const FieldSpecPtr& spec, long k) {
    CycScalar s = zero(spec);
    s.terms_.emplace(0, spec->q_power_coeffs(k));
    return s;
}

CycScalar CycScalar::a_power(const FieldSpecPtr& spec, long k) {
    CycScalar s = zero(spec);
    CycCoeffs c(static_cast<size_t>(spec->phi()), Rational(0));
    c[0] = 1;
    s.terms_.emplace(k, std::move(c));
    return s;
}

CycScalar CycScalar::symbol_a(const FieldSpecPtr& spec) { return a_power(spec, 1); }

CycScalar CycScalar::term(const FieldSpecPtr& spec, long a_exp, CycCoeffs coeffs) {
    if (coeffs.size() != static_cast<size_t>(spec->phi()))
        throw ParameterError("CycScalar::term: coefficient vector of wrong length");
    for (auto& c : coeffs) c.canonicalize();
    CycScalar s = zero(spec);
    if (!coeffs_zero(coeffs)) s.terms_.emplace(a_exp, std::move(coeffs));
    return s;
}

CycScalar CycScalar::q_minus_qinv(const FieldSpecPtr& spec) {
    return q_power(spec, 1) - q_power(spec, -1);
}

bool CycScalar::is_one() const {
    if (!spec_ || terms_.size() != 1) return false;
    auto it = terms_.begin();
    if (it->first != 0) return false;
    if (it->second[0] != 1) return false;
    for (size_t j = 1; j < it->second.size(); ++j)
        if (it->second[j] != 0) return false;
    return true;
}

bool CycScalar::a_free() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

CycScalar CycScalar::a_coefficient(long k) const {
    CycScalar s = zero(spec_);
    auto it = terms_.find(k);
    if (it != terms_.end()) s.terms_.emplace(0, it->second);
    return s;
}

long CycScalar::a_degree_min() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->first;
}

long CycScalar::a_degree_max() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first;
}

void CycScalar::drop_zero_terms() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (coeffs_zero(it->second))
            it = terms_.erase(it);
        else
            ++it;
    }
}

void CycScalar::require_compatible(const CycScalar& lhs, const CycScalar& rhs) {
    if (lhs.spec_ && rhs.spec_ && lhs.spec_->n() != rhs.spec_->n())
        throw ParameterError("CycScalar: mixing different FieldSpecs (N=" +
                             std::to_string(lhs.spec_->n()) + " vs N=" +
                             std::to_string(rhs.spec_->n()) + ")");
}

CycScalar CycScalar::operator-() const {
    CycScalar s = *this;
    for (auto& [k, c] : s.terms_)
        for (auto& r : c) r = -r;
    return s;
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
    require_compatible(*this, rhs);
    if (!spec_) spec_ = rhs.spec_;
    for (const auto& [k, c] : rhs.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            for (size_t j = 0; j < c.size(); ++j) it->second[j] += c[j];
        }
    }
    drop_zero_terms();
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) { return *this += -rhs; }

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
    require_compatible(*this, rhs);
    if (!spec_) spec_ = rhs.spec_;
    if (terms_.empty() || rhs.terms_.empty()) {
        terms_.clear();
        return *this;
    }
    const size_t phi = static_cast<size_t>(spec_->phi());
    std::map<long, CycCoeffs> result;
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : rhs.terms_) {
            std::vector<Rational> conv(2 * phi - 1, Rational(0));
            for (size_t i = 0; i < phi; ++i) {
                if (c1[i] == 0) continue;
                for (size_t j = 0; j < phi; ++j) {
                    if (c2[j] == 0) continue;
                    conv[i + j] += c1[i] * c2[j];
                }
            }
            CycCoeffs red = spec_->reduce(std::move(conv));
            auto it = result.find(k1 + k2);
            if (it == result.end()) {
                result.emplace(k1 + k2, std::move(red));
            } else {
                for (size_t j = 0; j < phi; ++j) it->second[j] += red[j];
            }
        }
    }
    terms_ = std::move(result);
    drop_zero_terms();
    return *this;
}

bool CycScalar::operator==(const CycScalar& rhs) const {
    require_compatible(*this, rhs);
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        for (size_t j = 0; j < it->second.size(); ++j)
            if (it->second[j] != jt->second[j]) return false;
    }
    return true;
}

namespace {

using QPoly = std::vector<Rational>;

void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

QPoly qpoly_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
    qpoly_trim(a);
    return a;
}

// Division with remainder over Q[x].
std::pair<QPoly, QPoly> qpoly_divmod(QPoly num, const QPoly& den) {
    QPoly quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational lead = num.back() / den.back();
        size_t shift = num.size() - den.size();
        quot[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
        qpoly_trim(num);
    }
    return {std::move(quot), std::move(num)};
}

} // namespace

CycScalar CycScalar::inverse() const {
    if (terms_.empty()) throw DivisionByZeroError("CycScalar: division by zero");
    if (terms_.size() > 1)
        throw UnsupportedDivisionError(
            "CycScalar: only monomials c(q)*a^k are invertible here");

    const long a_exp = terms_.begin()->first;
    QPoly c(terms_.begin()->second.begin(), terms_.begin()->second.end());
    qpoly_trim(c);

    // Extended Euclid for u*c + v*Phi = gcd over Q[x]; Phi is irreducible, so
    // the gcd is a nonzero constant and u/gcd is the inverse of c mod Phi.
    QPoly phi(spec_->modulus().size());
    for (size_t j = 0; j < phi.size(); ++j) phi[j] = Rational(spec_->modulus()[j]);

    QPoly r0 = phi, r1 = c;
    QPoly u0 = {}, u1 = {Rational(1)}; // coefficients of c in the combination
    while (!r1.empty() && r1.size() > 1) {
        auto [q, r2] = qpoly_divmod(r0, r1);
        QPoly u2 = qpoly_sub(u0, qpoly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.empty()) throw std::logic_error("CycScalar::inverse: gcd ran to zero");
    const Rational& g = r1[0];
    CycCoeffs inv(static_cast<size_t>(spec_->phi()), Rational(0));
    for (size_t j = 0; j < u1.size(); ++j) inv[j] = u1[j] / g;

    CycScalar s = zero(spec_);
    s.terms_.emplace(-a_exp, spec_->reduce({inv.begin(), inv.end()}));
    s.drop_zero_terms();
    return s;
}

std::complex<double> CycScalar::to_complex(std::complex<double> a_value) const {
    if (terms_.empty()) return {0.0, 0.0};
    const std::complex<double> q = std::polar(1.0, std::numbers::pi / spec_->n());
    std::complex<double> total = 0.0;
    for (const auto& [k, c] : terms_) {
        std::complex<double> cyc = 0.0;
        for (size_t j = c.size(); j-- > 0;) cyc = cyc * q + std::complex<double>(c[j].get_d());
        std::complex<double> a_pow = 1.0;
        for (long t = 0; t < std::labs(k); ++t) a_pow *= a_value;
        if (k < 0) a_pow = 1.0 / a_pow;
        total += cyc * a_pow;
    }
    return total;
}

std::string CycScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [k, c] : terms_) {
        std::ostringstream cyc;
        bool first = true;
        int nonzero = 0;
        for (size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            ++nonzero;
            Rational v = c[j];
            if (!first) {
                cyc << (v < 0 ? " - " : " + ");
                if (v < 0) v = -v;
            }
            first = false;
            const bool unit = (v == 1 && j > 0);
            if (!unit) cyc << v.get_str();
            if (j > 0) {
                if (!unit) cyc << "*";
                cyc << "q";
                if (j > 1) cyc << "^" << j;
            }
        }
        if (!first_term) os << " + ";
        first_term = false;
        if (k == 0) {
            os << cyc.str();
        } else {
            if (nonzero > 1)
                os << "(" << cyc.str() << ")";
            else
                os << cyc.str();
            os << "*a";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.to_string(); }

} // namespace semicyclic

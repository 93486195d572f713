#include "semicyclic/reps.hpp"

namespace semicyclic {

Rep Rep::build(const FieldSpecPtr& spec, RepKind kind, const CycScalar& a, int i,
               const std::vector<CycScalar>& f_override) {
    const int n = spec->n();
    Rep rep;
    rep.spec_ = spec;
    rep.kind_ = kind;
    rep.index_ = ((i % n) + n) % n;
    rep.a_ = a;

    const bool has_corner = kind != RepKind::standard;
    if (has_corner) {
        try {
            a.inverse();
        } catch (const std::domain_error&) {
            throw ParameterError("Rep: a must be a unit (nonzero monomial in a)");
        }
    }

    rep.mat_E_ = Matrix::zero(spec, n, n);
    for (int k = 0; k + 1 < n; ++k) rep.mat_E_.at(k + 1, k) = CycScalar::one(spec);
    if (has_corner) rep.mat_E_.at(0, n - 1) = a;

    rep.mat_F_ = Matrix::zero(spec, n, n);
    const CycScalar a_inv = has_corner ? a.inverse() : CycScalar::zero(spec);
    for (int j = 0; j < n; ++j) {
        CycScalar coeff;
        if (kind == RepKind::custom_f) {
            coeff = f_override[static_cast<size_t>(j)];
        } else {
            const int k = ((j - rep.index_) % n + n) % n;
            coeff = qint(spec, k) * qint(spec, n - k);
        }
        if (j == 0 && has_corner) coeff *= a_inv; // the wrap column carries 1/a
        if (!coeff.is_zero()) rep.mat_F_.at((j - 1 + n) % n, j) = coeff;
    }

    rep.weights_.resize(static_cast<size_t>(n));
    rep.mat_K_ = Matrix::zero(spec, n, n);
    rep.mat_Kinv_ = Matrix::zero(spec, n, n);
    for (int k = 0; k < n; ++k) {
        const long h = 1 - n + 2L * (k - rep.index_);
        if (h % 2 != 0) throw std::logic_error("Rep: weight exponents must be even");
        rep.weights_[static_cast<size_t>(k)] = h;
        rep.mat_K_.at(k, k) = CycScalar::q_power(spec, h);
        rep.mat_Kinv_.at(k, k) = CycScalar::q_power(spec, -h);
    }
    return rep;
}

Rep Rep::semicyclic(const FieldSpecPtr& spec, const CycScalar& a, int i) {
    return build(spec, RepKind::semicyclic, a, i, {});
}

Rep Rep::standard(const FieldSpecPtr& spec) {
    return build(spec, RepKind::standard, CycScalar::zero(spec), 0, {});
}

Rep Rep::custom_f(const FieldSpecPtr& spec, const CycScalar& a,
                  const std::vector<CycScalar>& f) {
    if (f.size() != static_cast<size_t>(spec->n()))
        throw ParameterError("Rep::custom_f: need exactly N coefficients");
    for (const auto& v : f)
        if (!v.a_free()) throw ParameterError("Rep::custom_f: coefficients must live in C[q^±1]");
    return build(spec, RepKind::custom_f, a, 0, f);
}

const Matrix& Rep::generator(const std::string& symbol) const {
    if (symbol == "E") return mat_E_;
    if (symbol == "F") return mat_F_;
    if (symbol == "K") return mat_K_;
    if (symbol == "Kinv" || symbol == "K^-1") return mat_Kinv_;
    throw ParameterError("Rep: unknown generator '" + symbol + "'");
}

Matrix Rep::E_negative_power(int j) const {
    if (kind_ == RepKind::standard)
        throw ParameterError("Rep: E is not invertible in the standard representation");
    const int n = spec_->n();
    if (j < 0 || j > n) throw ParameterError("Rep::E_negative_power: need 0 <= j <= N");
    return a_.inverse() * mat_E_.pow(n - j);
}

bool Rep::operator==(const Rep& rhs) const {
    return kind_ == rhs.kind_ && index_ == rhs.index_ && a_ == rhs.a_ &&
           mat_E_ == rhs.mat_E_ && mat_F_ == rhs.mat_F_ && mat_K_ == rhs.mat_K_;
}

CheckReport check_relations(const Rep& rep) {
    const auto& spec = rep.spec();
    const int n = rep.n();
    const Matrix &E = rep.E(), &F = rep.F(), &K = rep.K(), &Kinv = rep.Kinv();
    const CycScalar q2 = CycScalar::q_power(spec, 2);
    const CycScalar qm2 = CycScalar::q_power(spec, -2);

    CheckReport report;
    report.add("KE = q^2 EK", (K * E - q2 * (E * K)).is_zero());
    report.add("KF = q^-2 FK", (K * F - qm2 * (F * K)).is_zero());
    const CycScalar denom_inv = CycScalar::q_minus_qinv(spec).inverse();
    report.add("EF - FE = (K - K^-1)/(q - q^-1)",
               (E * F - F * E - denom_inv * (K - Kinv)).is_zero());
    if (rep.kind() == RepKind::standard) {
        report.add("E^N = 0", E.pow(n).is_zero());
    } else {
        report.add("E^N = a Id", (E.pow(n) - rep.a() * Matrix::identity(spec, n)).is_zero());
    }
    report.add("F^N = 0", F.pow(n).is_zero());
    report.add("K^N = Id", K.pow(n).is_identity());
    report.add("K K^-1 = Id", (K * Kinv).is_identity());
    return report;
}

namespace {

// Column coefficient of F with the wrap column's 1/a unit divided out.
CycScalar bare_f_coefficient(const Rep& rep, int j) {
    const int n = rep.n();
    CycScalar c = rep.F().at((j - 1 + n) % n, j);
    if (j == 0 && rep.kind() != RepKind::standard && !c.is_zero()) c *= rep.a();
    return c;
}

} // namespace

bool shift_relations(const Rep& rep_a, const Rep& rep_b, int k) {
    if (rep_a.kind() != RepKind::semicyclic || rep_b.kind() != RepKind::semicyclic)
        throw ParameterError("shift_relations: both representations must be semicyclic");
    if (!(rep_a.a() == rep_b.a()))
        throw ParameterError("shift_relations: representations differ in a");
    const int n = rep_a.n();
    if (((rep_a.index() + k) % n + n) % n != rep_b.index())
        throw ParameterError("shift_relations: index offset does not match k");

    if (rep_a.E() != rep_b.E()) return false; // E is independent of i
    for (int j = 0; j < n; ++j) {
        const int js = ((j + k) % n + n) % n;
        if (rep_a.K().at(j, j) != rep_b.K().at(js, js)) return false;
        if (bare_f_coefficient(rep_a, j) != bare_f_coefficient(rep_b, js)) return false;
    }
    return true;
}

bool conjugation_iso(const Rep& rep, int j) {
    if (rep.kind() != RepKind::semicyclic)
        throw ParameterError("conjugation_iso: semicyclic representation required");
    const int n = rep.n();
    const int jj = ((j % n) + n) % n;
    const Matrix Ej = rep.E().pow(jj);
    const Matrix Ejinv = rep.E_negative_power(jj);
    const Rep target = Rep::semicyclic(rep.spec(), rep.a(), rep.index() + jj);
    return (Ej * rep.F() * Ejinv) == target.F() && (Ej * rep.K() * Ejinv) == target.K();
}

} // namespace semicyclic

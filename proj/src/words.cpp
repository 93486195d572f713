#include "semicyclic/words.hpp"

#include <sstream>

namespace semicyclic {

const char* gen_symbol_name(GenSymbol g) {
    switch (g) {
    case GenSymbol::E: return "E";
    case GenSymbol::F: return "F";
    case GenSymbol::K: return "K";
    case GenSymbol::Kinv: return "K^-1";
    }
    return "?";
}

void Word::append(GenSymbol gen, long exp) {
    if (gen != GenSymbol::E && gen != GenSymbol::F)
        throw ParameterError("Word: factors must be E or F");
    if (exp < 0) throw ParameterError("Word: exponents must be nonnegative");
    if (exp == 0) return;
    if (!factors_.empty() && factors_.back().gen == gen)
        factors_.back().exp += exp;
    else
        factors_.push_back({gen, exp});
}

Word Word::parse(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        GenSymbol gen;
        if (tok[0] == 'E')
            gen = GenSymbol::E;
        else if (tok[0] == 'F')
            gen = GenSymbol::F;
        else
            throw ParameterError("Word::parse: expected E or F, got '" + tok + "'");
        long exp = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^') throw ParameterError("Word::parse: expected '^' in '" + tok + "'");
            exp = std::stol(tok.substr(2));
            if (exp < 0) throw ParameterError("Word::parse: negative exponent in '" + tok + "'");
        }
        w.append(gen, exp);
    }
    return w;
}

long Word::degree(GenSymbol gen) const {
    long total = 0;
    for (const auto& f : factors_)
        if (f.gen == gen) total += f.exp;
    return total;
}

std::string Word::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " ";
        os << gen_symbol_name(factors_[i].gen) << "^" << factors_[i].exp;
    }
    return os.str();
}

bool is_balanced(const Word& w) { return w.degree(GenSymbol::E) == w.degree(GenSymbol::F); }

Operator eval_word(const Word& w, const Rep& rep) {
    const int n = rep.n();
    Matrix m = Matrix::identity(rep.spec(), n);
    for (const auto& f : w.factors())
        m = m * (f.gen == GenSymbol::E ? rep.E() : rep.F()).pow(f.exp);

    if (is_balanced(w)) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (r != c && !m.at(r, c).is_zero())
                    throw std::logic_error("eval_word: balanced word gave off-diagonal entries");
                if (!m.at(r, c).a_free())
                    throw std::logic_error("eval_word: balanced word gave a-dependent entries");
            }
    }
    return Operator::on_strands(std::move(m), 1);
}

Matrix eval_diagonal_factor(const DiagonalFactor& factor, const Rep& rep) {
    const auto& spec = rep.spec();
    const int n = rep.n();
    const CycScalar denom = CycScalar::q_minus_qinv(spec);
    switch (factor.kind) {
    case DiagonalFactor::Kind::casimir:
        return casimir(rep).matrix();
    case DiagonalFactor::Kind::bracket_k: {
        const long b = qsign_factor(factor.sign);
        const CycScalar inv_sq = (denom * denom).inverse();
        return inv_sq * (CycScalar::q_power(spec, factor.r + b) * rep.K() +
                         CycScalar::q_power(spec, -factor.r - b) * rep.Kinv());
    }
    case DiagonalFactor::Kind::dk: {
        const CycScalar inv = denom.inverse();
        Matrix prod = Matrix::identity(spec, n);
        for (long k = 0; k < factor.r; ++k) {
            const long t = factor.c - factor.d - k;
            prod = prod * (inv * (CycScalar::q_power(spec, t) * rep.K() -
                                  CycScalar::q_power(spec, -t) * rep.Kinv()));
        }
        return prod;
    }
    }
    throw std::logic_error("eval_diagonal_factor: unreachable");
}

std::vector<CommuteTerm> commute_EF(const FieldSpecPtr& spec, long c, long d) {
    if (!(0 <= c && c < d && d <= spec->n() - 1))
        throw ParameterError("commute_EF: need 0 <= c < d <= N-1");
    std::vector<CommuteTerm> terms;
    for (long r = 0; r <= c; ++r) {
        CycScalar coeff = qfact(spec, c) * qfact(spec, d) *
                          (qfact(spec, r) * qfact(spec, c - r) * qfact(spec, d - r)).inverse();
        terms.push_back({std::move(coeff), d - r, c - r, DiagonalFactor::product_dk(c, d, r)});
    }
    return terms;
}

Operator casimir(const Rep& rep) {
    const Matrix ef_form = rep.E() * rep.F() +
                           eval_diagonal_factor(DiagonalFactor::bracket(0, QSign::minus), rep);
    const Matrix fe_form = rep.F() * rep.E() +
                           eval_diagonal_factor(DiagonalFactor::bracket(0, QSign::plus), rep);
    if (ef_form != fe_form)
        throw std::logic_error("casimir: the two displayed forms disagree");
    return Operator::on_strands(ef_form, 1);
}

CheckReport casimir_factorization(long m, const Rep& rep) {
    if (m < 0 || m > rep.n() - 1)
        throw ParameterError("casimir_factorization: need 0 <= m <= N-1");
    const auto& spec = rep.spec();
    const int n = rep.n();
    const Matrix c_mat = casimir(rep).matrix();

    Matrix ef_rhs = Matrix::identity(spec, n);
    Matrix fe_rhs = Matrix::identity(spec, n);
    for (long i = 1; i <= m; ++i) {
        ef_rhs = ef_rhs * (c_mat - eval_diagonal_factor(
                                       DiagonalFactor::bracket(-2 * (m - i), QSign::minus), rep));
        fe_rhs = fe_rhs * (c_mat - eval_diagonal_factor(
                                       DiagonalFactor::bracket(2 * (m - i), QSign::plus), rep));
    }

    CheckReport report;
    report.add("E^m F^m = prod_i (C - [q^{-2(m-i)}K]_{q^-1}), m=" + std::to_string(m),
               rep.E().pow(m) * rep.F().pow(m) == ef_rhs);
    report.add("F^m E^m = prod_i (C - [q^{2(m-i)}K]_{q}), m=" + std::to_string(m),
               rep.F().pow(m) * rep.E().pow(m) == fe_rhs);
    return report;
}

namespace {

Operator identity_word_op(const Rep& rep) {
    return Operator::on_strands(Matrix::identity(rep.spec(), rep.n()), 1);
}

Matrix eval_word_reduced_impl(std::vector<Word::Factor> factors, const Rep& rep) {
    const auto& spec = rep.spec();
    const int n = rep.n();
    if (factors.empty()) return Matrix::identity(spec, n);
    if (factors.size() == 1)
        return (factors[0].gen == GenSymbol::E ? rep.E() : rep.F()).pow(factors[0].exp);

    const Word::Factor last = factors.back();
    factors.pop_back();
    if (last.gen == GenSymbol::E) {
        // peel trailing E-powers; the induction works on words ending in F
        return eval_word_reduced_impl(std::move(factors), rep) * rep.E().pow(last.exp);
    }

    const Word::Factor prev = factors.back(); // an E-power by alternation
    factors.pop_back();
    const long c = prev.exp, d = last.exp;

    if (c == d) {
        return eval_word_reduced_impl(std::move(factors), rep) *
               (rep.E().pow(c) * rep.F().pow(c));
    }
    if (c > d) {
        auto shorter = factors;
        shorter.push_back({GenSymbol::E, c - d});
        return eval_word_reduced_impl(std::move(shorter), rep) *
               (rep.E().pow(d) * rep.F().pow(d));
    }

    // c < d: commute E^c past F^d and recurse on the strictly shorter words
    Matrix sum = Matrix::zero(spec, n, n);
    for (const auto& term : commute_EF(spec, c, d)) {
        auto shorter = factors;
        if (term.f_power > 0) {
            if (!shorter.empty() && shorter.back().gen == GenSymbol::F)
                shorter.back().exp += term.f_power;
            else
                shorter.push_back({GenSymbol::F, term.f_power});
        }
        if (term.e_power > 0) shorter.push_back({GenSymbol::E, term.e_power});
        sum += term.coeff * (eval_word_reduced_impl(std::move(shorter), rep) *
                             eval_diagonal_factor(term.dk, rep));
    }
    return sum;
}

} // namespace

Operator eval_word_reduced(const Word& w, const Rep& rep) {
    if (w.empty()) return identity_word_op(rep);
    return Operator::on_strands(eval_word_reduced_impl(w.factors(), rep), 1);
}

SymbolicWord antipode(GenSymbol gen) {
    switch (gen) {
    case GenSymbol::K: return {1, {GenSymbol::Kinv}};
    case GenSymbol::Kinv: return {1, {GenSymbol::K}};
    case GenSymbol::E: return {-1, {GenSymbol::E, GenSymbol::Kinv}};
    case GenSymbol::F: return {-1, {GenSymbol::K, GenSymbol::F}};
    }
    throw std::logic_error("antipode: unreachable");
}

SymbolicWord antipode(const SymbolicWord& w) {
    if (w.is_zero()) return w;
    SymbolicWord out;
    out.sign = w.sign;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        SymbolicWord img = antipode(*it);
        out.sign *= img.sign;
        out.factors.insert(out.factors.end(), img.factors.begin(), img.factors.end());
    }
    return out;
}

long counit(GenSymbol gen) {
    return (gen == GenSymbol::K || gen == GenSymbol::Kinv) ? 1 : 0;
}

Matrix eval_symbolic(const SymbolicWord& w, const Rep& rep) {
    Matrix m = Matrix::identity(rep.spec(), rep.n());
    if (w.is_zero()) return Matrix::zero(rep.spec(), rep.n(), rep.n());
    for (GenSymbol g : w.factors) m = m * rep.generator(gen_symbol_name(g));
    if (w.sign < 0) m = -m;
    return m;
}

} // namespace semicyclic

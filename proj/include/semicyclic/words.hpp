#pragma once

#include "semicyclic/braiding.hpp"

namespace semicyclic {

enum class GenSymbol { E, F, K, Kinv };

const char* gen_symbol_name(GenSymbol g);

/// Word in E and F with positive exponents; adjacent factors alternate.
class Word {
  public:
    struct Factor {
        GenSymbol gen; // E or F only
        long exp;
        bool operator==(const Factor&) const = default;
    };

    Word() = default;
    /// Appends a power, merging with the last factor when the generator repeats.
    void append(GenSymbol gen, long exp);
    /// Literal syntax: whitespace-separated caret powers, e.g. "E^2 F^1 E^1 F^2".
    static Word parse(const std::string& text);

    const std::vector<Factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    long degree(GenSymbol gen) const;
    std::string to_string() const;
    bool operator==(const Word&) const = default;

  private:
    std::vector<Factor> factors_;
};

/// Total E-exponent equals total F-exponent.
bool is_balanced(const Word& w);

/**
 * Product of the factor matrices. For a balanced word in a representation with
 * the cyclic E / lowering F shape the result is checked to be diagonal with
 * a-free entries; a violation throws (it would contradict the diagonality
 * proposition this module exists to verify).
 */
Operator eval_word(const Word& w, const Rep& rep);

/// Factors that evaluate to diagonal matrices in every representation here.
struct DiagonalFactor {
    enum class Kind {
        casimir,   // C = EF + [q^0 K]_{q^-1}
        bracket_k, // [q^r K]_b = (q^r b K + q^{-r} b^{-1} K^{-1}) / (q - q^{-1})^2
        dk,        // D(c,d,r) = prod_{k=0}^{r-1} [K; c-d-k], [K;t] = (Kq^t - K^{-1}q^{-t})/(q-q^{-1})
    };
    Kind kind = Kind::casimir;
    long r = 0;
    QSign sign = QSign::plus;
    long c = 0, d = 0;

    static DiagonalFactor casimir() { return {}; }
    static DiagonalFactor bracket(long r, QSign sign) {
        DiagonalFactor f;
        f.kind = Kind::bracket_k;
        f.r = r;
        f.sign = sign;
        return f;
    }
    static DiagonalFactor product_dk(long c, long d, long r) {
        DiagonalFactor f;
        f.kind = Kind::dk;
        f.c = c;
        f.d = d;
        f.r = r;
        return f;
    }
};

Matrix eval_diagonal_factor(const DiagonalFactor& factor, const Rep& rep);

/// One term of the rewritten E^c F^d.
struct CommuteTerm {
    CycScalar coeff;    // [c]![d]! / ([r]![c-r]![d-r]!)
    long f_power;       // d - r
    long e_power;       // c - r
    DiagonalFactor dk;  // D(c,d,r)
};

/**
 * The generalized commutation rule
 * E^c F^d = sum_{r=0}^{c} [c]![d]!/([r]![c-r]![d-r]!) F^{d-r} E^{c-r} D(c,d,r)
 * for 0 <= c < d <= N-1.
 */
std::vector<CommuteTerm> commute_EF(const FieldSpecPtr& spec, long c, long d);

/**
 * The quadratic Casimir C = EF + (q^{-1}K + qK^{-1})/(q-q^{-1})^2; the second
 * form FE + (qK + q^{-1}K^{-1})/(q-q^{-1})^2 is computed too and must agree.
 */
Operator casimir(const Rep& rep);

/**
 * Checks E^m F^m = prod_{i=1}^{m} (C - [q^{-2(m-i)}K]_{q^{-1}}) and
 * F^m E^m = prod_{i=1}^{m} (C - [q^{2(m-i)}K]_{q}) as exact matrix identities.
 * The bracket here is the convention fixed by the matrix oracle:
 * [q^r K]_b = (q^r b K + q^{-r} b^{-1} K^{-1}) / (q - q^{-1})^2, which also
 * reproduces both displayed K-parts of the Casimir at r = 0.
 */
CheckReport casimir_factorization(long m, const Rep& rep);

/**
 * Alternative evaluation of a word that reduces through commute_EF and
 * E^m F^m blocks, realizing the diagonality induction as a computation.
 * Matches eval_word exactly.
 */
Operator eval_word_reduced(const Word& w, const Rep& rep);

/// Image of a generator under the antipode, as a signed symbolic word.
struct SymbolicWord {
    int sign = 1; // +1 or -1; 0 encodes the zero element
    std::vector<GenSymbol> factors;
    bool is_zero() const { return sign == 0; }
    bool operator==(const SymbolicWord&) const = default;
};

SymbolicWord antipode(GenSymbol gen);
/// Anti-multiplicative extension to symbolic words.
SymbolicWord antipode(const SymbolicWord& w);
/// Counit: 1 on the group-likes K, K^{-1}; 0 on E and F.
long counit(GenSymbol gen);
Matrix eval_symbolic(const SymbolicWord& w, const Rep& rep);

} // namespace semicyclic

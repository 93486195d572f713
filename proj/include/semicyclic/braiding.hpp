#pragma once

#include "semicyclic/orientation.hpp"
#include "semicyclic/reps.hpp"

namespace semicyclic {

/**
 * A linear map between tensor powers of V, tagged with the orientations of the
 * strands it consumes and produces. Columns are indexed by the input basis,
 * rows by the output basis; strand 0 is the most significant index digit.
 */
class Operator {
  public:
    Operator() = default;
    Operator(Matrix mat, Signature sig_in, Signature sig_out);
    /// Square operator on m downward strands.
    static Operator on_strands(Matrix mat, int m);

    const Matrix& matrix() const { return mat_; }
    Matrix& matrix() { return mat_; }
    const Signature& sig_in() const { return sig_in_; }
    const Signature& sig_out() const { return sig_out_; }
    /// Strand count of a square operator.
    int arity() const;

    bool is_zero() const { return mat_.is_zero(); }
    bool operator==(const Operator& rhs) const;
    bool operator!=(const Operator& rhs) const { return !(*this == rhs); }
    /// Composition lhs after rhs; signatures must match at the seam.
    friend Operator operator*(const Operator& lhs, const Operator& rhs);
    friend Operator operator-(const Operator& lhs, const Operator& rhs);

  private:
    Matrix mat_;
    Signature sig_in_, sig_out_;
};

/// q^{H (x) H / 2}: diagonal v_j (x) v_k -> q^{h_j h_k / 2} v_j (x) v_k.
Operator cartan(const Rep& rep);
Operator cartan_inverse(const Rep& rep);

/// The R-matrix q^{H(x)H/2} sum_l c_l E^l (x) F^l with c_l = f_coeff(l, plus).
Operator r_matrix(const Rep& rep);

/**
 * Exact inverse of r_matrix: the f_{q^{-1}} series sum_l f_{q^{-1}}(l) E^l (x) F^l
 * composed with the inverse Cartan factor. The product R R^{-1} is asserted to
 * be the identity at construction, so the result is the exact matrix inverse.
 */
Operator r_inverse(const Rep& rep);

/// The flip v (x) w -> w (x) v on V (x) V.
Operator flip(const Rep& rep);

/// R-check = flip after R, the braid-relation solution; and its inverse.
Operator braid(const Rep& rep);
Operator braid_inverse(const Rep& rep);

/// Coproduct of a generator evaluated in rep (x) rep; gen is "E", "F", "K" or "Kinv".
Operator coproduct(const Rep& rep, const std::string& gen);
/// The flipped coproduct (tensor factors swapped in each term).
Operator flipped_coproduct(const Rep& rep, const std::string& gen);

/**
 * Embeds an arity-2 operator into width strands, acting on strand positions
 * (s, t), s < t, by explicit index bookkeeping.
 */
Operator embed_two(const Operator& op, int width, int s, int t);

/// (Delta (x) Id) of the Cartan factor: diagonal q^{(h_j + h_k) h_l / 2}.
Operator cartan_coproduct_left(const Rep& rep);
/// (Id (x) Delta) of the Cartan factor: diagonal q^{h_j (h_k + h_l) / 2}.
Operator cartan_coproduct_right(const Rep& rep);

/// R Delta(Z) = Delta'(Z) R for Z in {E, F, K, Kinv}, exactly.
CheckReport check_intertwiner(const Rep& rep);

/**
 * The fusion dichotomy: (Delta (x) Id)(R) = R13 R23 holds exactly, while
 * (Id (x) Delta)(R) = R13 R12 holds only for the standard representation; for
 * a semicyclic representation the report records the expected failure together
 * with the nonzero image of the witness vector v_0 (x) v_{i+1} (x) v_{i+1}.
 */
CheckReport check_fusion(const Rep& rep);

/// R12 R13 R23 = R23 R13 R12 on V^{(x)3}, exactly.
bool check_ybe(const Rep& rep);

/// Weight-level identities (Delta (x) Id)(q^{H(x)H/2}) = q^{Delta(H)(x)H/2} and its mirror.
bool check_coproduct_cartan(const Rep& rep);
bool check_coproduct_cartan_weights(const FieldSpecPtr& spec, const std::vector<long>& weights);

} // namespace semicyclic

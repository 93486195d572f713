#pragma once

#include "semicyclic/matrix.hpp"
#include "semicyclic/qcalc.hpp"

#include <optional>

namespace semicyclic {

/// Pass/fail entry of a structured identity check.
struct CheckItem {
    std::string name;
    bool holds = false;
    bool expected_to_fail = false; // a recorded negative result, not a defect
    std::string witness;           // optional evidence (vector or entry description)
};

struct CheckReport {
    std::vector<CheckItem> items;
    void add(std::string name, bool holds, std::string witness = "", bool expected_to_fail = false) {
        items.push_back({std::move(name), holds, expected_to_fail, std::move(witness)});
    }
    /// True when every identity behaves as asserted (expected failures must fail).
    bool all_as_expected() const {
        for (const auto& it : items)
            if (it.holds == it.expected_to_fail) return false;
        return true;
    }
    bool all_hold() const {
        for (const auto& it : items)
            if (!it.holds) return false;
        return true;
    }
};

enum class RepKind { semicyclic, standard, custom_f };

/**
 * An N-dimensional representation of U_q(sl_2) given by explicit matrices.
 * K is diagonal with integer weight exponents h_k (K v_k = q^{h_k} v_k); the
 * weights are stored unreduced and are always even, so q^{h_j h_k / 2} is an
 * integer power of q.
 */
class Rep {
  public:
    /// rho_{a,i}: E cycles with corner a, F^N = 0, K^N = Id.
    static Rep semicyclic(const FieldSpecPtr& spec, const CycScalar& a, int i);
    /// rho_0: the standard irreducible, E and F nilpotent.
    static Rep standard(const FieldSpecPtr& spec);
    /// The i = 0 shape with an arbitrary subdiagonal coefficient vector f_0..f_{N-1}
    /// in place of [k][N-k]; used by the balanced-word checks.
    static Rep custom_f(const FieldSpecPtr& spec, const CycScalar& a,
                        const std::vector<CycScalar>& f);

    const FieldSpecPtr& spec() const { return spec_; }
    int n() const { return spec_->n(); }
    RepKind kind() const { return kind_; }
    int index() const { return index_; }
    const CycScalar& a() const { return a_; }

    const Matrix& E() const { return mat_E_; }
    const Matrix& F() const { return mat_F_; }
    const Matrix& K() const { return mat_K_; }
    const Matrix& Kinv() const { return mat_Kinv_; }
    const std::vector<long>& weights() const { return weights_; }

    /// Matrix of a generator by symbol, one of "E", "F", "K", "Kinv".
    const Matrix& generator(const std::string& symbol) const;

    /// E^{-j} = a^{-1} E^{N-j}; defined for semicyclic representations only.
    Matrix E_negative_power(int j) const;

    bool operator==(const Rep& rhs) const;

  private:
    Rep() = default;
    FieldSpecPtr spec_;
    RepKind kind_ = RepKind::standard;
    int index_ = 0;
    CycScalar a_;
    Matrix mat_E_, mat_F_, mat_K_, mat_Kinv_;
    std::vector<long> weights_;

    static Rep build(const FieldSpecPtr& spec, RepKind kind, const CycScalar& a, int i,
                     const std::vector<CycScalar>& f_override);
};

/**
 * Checks the defining relations KE = q^2 EK, KF = q^{-2} FK,
 * EF - FE = (K - K^{-1})/(q - q^{-1}) plus the power conditions E^N, F^N, K^N
 * and K K^{-1} = Id. Failures are report entries, not errors.
 */
CheckReport check_relations(const Rep& rep);

/**
 * Verifies the basis-shift relations between rho_{a,i} and rho_{a,i+k}:
 * E is shared verbatim, K eigenvalues shift by k, and the bare F coefficients
 * (with each representation's own 1/a wrap unit divided out) shift by k.
 */
bool shift_relations(const Rep& rep_a, const Rep& rep_b, int k);

/// E^j F E^{-j} = rho_{a,i+j}(F) and E^j K E^{-j} = rho_{a,i+j}(K).
bool conjugation_iso(const Rep& rep, int j);

} // namespace semicyclic

#pragma once

#include "semicyclic/braiding.hpp"
#include "semicyclic/tangle.hpp"

#include <functional>
#include <optional>

namespace semicyclic {

struct SchurViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Basis multi-index: one index per strand, left to right.
using StateKey = std::vector<uint8_t>;
/// Sparse coefficient map from basis multi-indices to scalars.
using SparseState = std::map<StateKey, CycScalar>;

/// Called after each slice with the slice index, the slice, the state and the
/// signature above the slice; used by the staging instrumentation.
using TraceHook =
    std::function<void(int, const Slice&, const SparseState&, const Signature&)>;

struct Evaluation {
    Operator op;                     // the composed linear map
    std::optional<CycScalar> scalar; // present iff the diagram is (1,1)
    bool schur_ok = false;           // (1,1): all diagonals equal, off-diagonals zero
    std::string diagram_class;
};

/**
 * The operator a single slice induces at a given strand configuration:
 * identity on untouched strands tensored with the elementary map. Dense; meant
 * for narrow widths and cross-checks, the evaluator itself works on sparse
 * states.
 */
Operator slice_operator(const Slice& s, const Rep& rep, const Signature& sig_in);

/// Pushes one basis state through the whole diagram.
SparseState evaluate_state(const Diagram& d, const Rep& rep, const StateKey& input,
                           const TraceHook& hook = {});

/**
 * Evaluates the tangle functor bottom-to-top. For (1,1) diagrams the result
 * must be an exact scalar multiple of the identity (Schur); a violation throws
 * SchurViolationError.
 */
Evaluation evaluate(const Diagram& d, const Rep& rep);

/// The invariant obtained by evaluating in the standard representation rho_0.
CycScalar kashaev(const Diagram& d, const FieldSpecPtr& spec);

struct Compare22Report {
    Operator semicyclic_op;
    Operator standard_op;
    Operator difference;
    bool differs = false;
};

/// Evaluates a (2,2) diagram under rho_{a,i} and rho_0 and reports the difference.
Compare22Report compare_22(const Diagram& d, const FieldSpecPtr& spec, const CycScalar& a, int i);

} // namespace semicyclic

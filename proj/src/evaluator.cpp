#include "semicyclic/evaluator.hpp"

namespace semicyclic {

namespace {

long pow_long(long base, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

long key_to_index(const StateKey& key, int n) {
    long idx = 0;
    for (uint8_t digit : key) idx = idx * n + digit;
    return idx;
}

// Cached crossing matrices; built on first use per evaluation.
struct CrossingCache {
    const Rep& rep;
    std::optional<Matrix> pos, neg;
    const Matrix& get(bool positive) {
        if (positive) {
            if (!pos) pos = braid(rep).matrix();
            return *pos;
        }
        if (!neg) neg = braid_inverse(rep).matrix();
        return *neg;
    }
};

void apply_slice(const Slice& sl, const Rep& rep, CrossingCache& cache, SparseState& state) {
    const auto& spec = rep.spec();
    const int n = rep.n();
    const size_t p = static_cast<size_t>(sl.position);
    SparseState next;

    switch (sl.kind) {
    case SliceKind::id:
        return;
    case SliceKind::cup_plain:
    case SliceKind::cup_twisted: {
        const bool twisted = sl.kind == SliceKind::cup_twisted;
        for (const auto& [key, coeff] : state) {
            for (uint8_t j = 0; j < n; ++j) {
                StateKey k2 = key;
                k2.insert(k2.begin() + static_cast<long>(p), {j, j});
                CycScalar c = coeff;
                if (twisted)
                    c *= CycScalar::q_power(spec, -rep.weights()[static_cast<size_t>(j)]);
                next.emplace(std::move(k2), std::move(c));
            }
        }
        break;
    }
    case SliceKind::cap_plain:
    case SliceKind::cap_twisted: {
        const bool twisted = sl.kind == SliceKind::cap_twisted;
        for (const auto& [key, coeff] : state) {
            if (key[p] != key[p + 1]) continue;
            CycScalar c = coeff;
            if (twisted) c *= CycScalar::q_power(spec, rep.weights()[key[p]]);
            StateKey k2 = key;
            k2.erase(k2.begin() + static_cast<long>(p), k2.begin() + static_cast<long>(p) + 2);
            auto it = next.find(k2);
            if (it == next.end())
                next.emplace(std::move(k2), std::move(c));
            else
                it->second += c;
        }
        break;
    }
    case SliceKind::cross_pos:
    case SliceKind::cross_neg: {
        const Matrix& m = cache.get(sl.kind == SliceKind::cross_pos);
        for (const auto& [key, coeff] : state) {
            const int col = key[p] * n + key[p + 1];
            for (int row = 0; row < n * n; ++row) {
                const CycScalar& v = m.at(row, col);
                if (v.is_zero()) continue;
                StateKey k2 = key;
                k2[p] = static_cast<uint8_t>(row / n);
                k2[p + 1] = static_cast<uint8_t>(row % n);
                CycScalar c = coeff * v;
                auto it = next.find(k2);
                if (it == next.end())
                    next.emplace(std::move(k2), std::move(c));
                else
                    it->second += c;
            }
        }
        break;
    }
    }

    // keep the support canonical: exact cancellations drop out
    for (auto it = next.begin(); it != next.end();) {
        if (it->second.is_zero())
            it = next.erase(it);
        else
            ++it;
    }
    state = std::move(next);
}

} // namespace

Operator slice_operator(const Slice& sl, const Rep& rep, const Signature& sig_in) {
    const auto& spec = rep.spec();
    const int n = rep.n();
    const int w = static_cast<int>(sig_in.size());
    const int p = sl.position;

    // per-slice signature transition, reusing the validator
    Diagram probe{sig_in, {sl}};
    auto report = validate(probe);
    if (!report.valid)
        throw ParameterError("slice_operator: " + report.issues.front().message);
    const Signature& sig_out = report.top;

    Matrix elem;
    int span = 0; // strands consumed by the elementary piece
    switch (sl.kind) {
    case SliceKind::id:
        return Operator(Matrix::identity(spec, static_cast<int>(pow_long(n, w))), sig_in, sig_out);
    case SliceKind::cup_plain:
    case SliceKind::cup_twisted: {
        elem = Matrix::zero(spec, n * n, 1);
        for (int j = 0; j < n; ++j) {
            CycScalar c = CycScalar::one(spec);
            if (sl.kind == SliceKind::cup_twisted)
                c = CycScalar::q_power(spec, -rep.weights()[static_cast<size_t>(j)]);
            elem.at(j * n + j, 0) = c;
        }
        span = 0;
        break;
    }
    case SliceKind::cap_plain:
    case SliceKind::cap_twisted: {
        elem = Matrix::zero(spec, 1, n * n);
        for (int j = 0; j < n; ++j) {
            CycScalar c = CycScalar::one(spec);
            if (sl.kind == SliceKind::cap_twisted)
                c = CycScalar::q_power(spec, rep.weights()[static_cast<size_t>(j)]);
            elem.at(0, j * n + j) = c;
        }
        span = 2;
        break;
    }
    case SliceKind::cross_pos:
        elem = braid(rep).matrix();
        span = 2;
        break;
    case SliceKind::cross_neg:
        elem = braid_inverse(rep).matrix();
        span = 2;
        break;
    }

    const Matrix left = Matrix::identity(spec, static_cast<int>(pow_long(n, p)));
    const Matrix right = Matrix::identity(spec, static_cast<int>(pow_long(n, w - p - span)));
    return Operator(Matrix::kron(Matrix::kron(left, elem), right), sig_in, sig_out);
}

SparseState evaluate_state(const Diagram& d, const Rep& rep, const StateKey& input,
                           const TraceHook& hook) {
    auto report = validate(d);
    if (!report.valid) throw ParameterError("evaluate: " + report.issues.front().message);
    if (input.size() != d.bottom.size())
        throw ParameterError("evaluate_state: input key size does not match the bottom signature");

    CrossingCache cache{rep, {}, {}};
    SparseState state;
    state.emplace(input, CycScalar::one(rep.spec()));
    for (size_t s = 0; s < d.slices.size(); ++s) {
        apply_slice(d.slices[s], rep, cache, state);
        if (hook)
            hook(static_cast<int>(s), d.slices[s], state,
                 report.stages[s + 1]);
    }
    return state;
}

Evaluation evaluate(const Diagram& d, const Rep& rep) {
    auto report = validate(d);
    if (!report.valid) throw ParameterError("evaluate: " + report.issues.front().message);

    const auto& spec = rep.spec();
    const int n = rep.n();
    const int bot = static_cast<int>(d.bottom.size());
    const int top = static_cast<int>(report.top.size());
    const long cols = pow_long(n, bot);
    const long rows = pow_long(n, top);

    Matrix m(spec, static_cast<int>(rows), static_cast<int>(cols));
    CrossingCache cache{rep, {}, {}};
    StateKey key(static_cast<size_t>(bot), 0);
    for (long col = 0; col < cols; ++col) {
        long c = col;
        for (size_t p = key.size(); p-- > 0;) {
            key[p] = static_cast<uint8_t>(c % n);
            c /= n;
        }
        SparseState state;
        state.emplace(key, CycScalar::one(spec));
        for (const auto& sl : d.slices) apply_slice(sl, rep, cache, state);
        for (const auto& [out_key, coeff] : state)
            m.at(static_cast<int>(key_to_index(out_key, n)), static_cast<int>(col)) = coeff;
    }

    Evaluation ev;
    ev.diagram_class = report.diagram_class;
    ev.op = Operator(std::move(m), d.bottom, report.top);

    if (report.diagram_class == "(1,1)") {
        const Matrix& op = ev.op.matrix();
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (r != c && !op.at(r, c).is_zero())
                    throw SchurViolationError("evaluate: (1,1) operator has off-diagonal entries");
                if (r == c && op.at(r, r) != op.at(0, 0))
                    throw SchurViolationError("evaluate: (1,1) operator diagonal is not constant");
            }
        ev.scalar = op.at(0, 0);
        ev.schur_ok = true;
    }
    return ev;
}

CycScalar kashaev(const Diagram& d, const FieldSpecPtr& spec) {
    auto report = validate(d);
    if (!report.valid || report.diagram_class != "(1,1)")
        throw ParameterError("kashaev: a valid (1,1) diagram is required");
    return *evaluate(d, Rep::standard(spec)).scalar;
}

Compare22Report compare_22(const Diagram& d, const FieldSpecPtr& spec, const CycScalar& a,
                           int i) {
    auto report = validate(d);
    if (!report.valid || report.diagram_class != "(2,2)")
        throw ParameterError("compare_22: a valid (2,2) diagram is required");
    Compare22Report out;
    out.semicyclic_op = evaluate(d, Rep::semicyclic(spec, a, i)).op;
    out.standard_op = evaluate(d, Rep::standard(spec)).op;
    out.difference = out.semicyclic_op - out.standard_op;
    out.differs = !out.difference.is_zero();
    return out;
}

} // namespace semicyclic

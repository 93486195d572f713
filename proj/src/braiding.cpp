#include "semicyclic/braiding.hpp"

#include <cmath>

namespace semicyclic {

namespace {

long pow_long(long base, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// q^{h_j h_k / 2} as a diagonal on V (x) V built from a weight vector.
Matrix cartan_matrix(const FieldSpecPtr& spec, const std::vector<long>& h, int sign) {
    const int n = static_cast<int>(h.size());
    Matrix m = Matrix::zero(spec, n * n, n * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const long prod = h[static_cast<size_t>(j)] * h[static_cast<size_t>(k)];
            if (prod % 2 != 0) throw std::logic_error("cartan: odd weight product");
            m.at(j * n + k, j * n + k) = CycScalar::q_power(spec, sign * (prod / 2));
        }
    return m;
}

// sum_l f(l) E^l (x) F^l, the nilpotent part of R (f = f_q) or of its inverse
// (f = f_{q^{-1}}).
Matrix r_series(const Rep& rep, QSign sign) {
    const auto& spec = rep.spec();
    const int n = rep.n();
    Matrix sum = Matrix::zero(spec, n * n, n * n);
    Matrix e_pow = Matrix::identity(spec, n);
    Matrix f_pow = Matrix::identity(spec, n);
    for (long l = 0; l <= n - 1; ++l) {
        if (l > 0) {
            e_pow = e_pow * rep.E();
            f_pow = f_pow * rep.F();
        }
        sum += f_coeff(spec, l, sign) * Matrix::kron(e_pow, f_pow);
    }
    return sum;
}

} // namespace

Operator::Operator(Matrix mat, Signature sig_in, Signature sig_out)
    : mat_(std::move(mat)), sig_in_(std::move(sig_in)), sig_out_(std::move(sig_out)) {
    if (!mat_.spec()) return;
    const long n = mat_.spec()->n();
    if (mat_.cols() != pow_long(n, static_cast<int>(sig_in_.size())) ||
        mat_.rows() != pow_long(n, static_cast<int>(sig_out_.size())))
        throw ParameterError("Operator: matrix shape does not match signatures");
}

Operator Operator::on_strands(Matrix mat, int m) {
    return Operator(std::move(mat), all_down(m), all_down(m));
}

int Operator::arity() const {
    if (sig_in_.size() != sig_out_.size())
        throw ParameterError("Operator::arity: operator is not square");
    return static_cast<int>(sig_in_.size());
}

bool Operator::operator==(const Operator& rhs) const {
    return sig_in_ == rhs.sig_in_ && sig_out_ == rhs.sig_out_ && mat_ == rhs.mat_;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
    if (lhs.sig_in_ != rhs.sig_out_)
        throw ParameterError("Operator: signature mismatch in composition");
    return Operator(lhs.mat_ * rhs.mat_, rhs.sig_in_, lhs.sig_out_);
}

Operator operator-(const Operator& lhs, const Operator& rhs) {
    if (lhs.sig_in_ != rhs.sig_in_ || lhs.sig_out_ != rhs.sig_out_)
        throw ParameterError("Operator: signature mismatch in difference");
    return Operator(lhs.mat_ - rhs.mat_, lhs.sig_in_, lhs.sig_out_);
}

Operator cartan(const Rep& rep) {
    return Operator::on_strands(cartan_matrix(rep.spec(), rep.weights(), +1), 2);
}

Operator cartan_inverse(const Rep& rep) {
    return Operator::on_strands(cartan_matrix(rep.spec(), rep.weights(), -1), 2);
}

Operator r_matrix(const Rep& rep) {
    return Operator::on_strands(
        cartan_matrix(rep.spec(), rep.weights(), +1) * r_series(rep, QSign::plus), 2);
}

Operator r_inverse(const Rep& rep) {
    Matrix inv = r_series(rep, QSign::minus) * cartan_matrix(rep.spec(), rep.weights(), -1);
    if (!(r_matrix(rep).matrix() * inv).is_identity())
        throw std::logic_error("r_inverse: series inverse failed the identity check");
    return Operator::on_strands(std::move(inv), 2);
}

Operator flip(const Rep& rep) {
    const int n = rep.n();
    Matrix p = Matrix::zero(rep.spec(), n * n, n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) p.at(y * n + x, x * n + y) = CycScalar::one(rep.spec());
    return Operator::on_strands(std::move(p), 2);
}

Operator braid(const Rep& rep) { return flip(rep) * r_matrix(rep); }

Operator braid_inverse(const Rep& rep) { return r_inverse(rep) * flip(rep); }

Operator coproduct(const Rep& rep, const std::string& gen) {
    const auto& spec = rep.spec();
    const int n = rep.n();
    Matrix id = Matrix::identity(spec, n);
    Matrix m;
    if (gen == "E")
        m = Matrix::kron(rep.E(), rep.K()) + Matrix::kron(id, rep.E());
    else if (gen == "F")
        m = Matrix::kron(rep.F(), id) + Matrix::kron(rep.Kinv(), rep.F());
    else if (gen == "K")
        m = Matrix::kron(rep.K(), rep.K());
    else if (gen == "Kinv" || gen == "K^-1")
        m = Matrix::kron(rep.Kinv(), rep.Kinv());
    else
        throw ParameterError("coproduct: unknown generator '" + gen + "'");
    return Operator::on_strands(std::move(m), 2);
}

Operator flipped_coproduct(const Rep& rep, const std::string& gen) {
    const auto& spec = rep.spec();
    const int n = rep.n();
    Matrix id = Matrix::identity(spec, n);
    Matrix m;
    if (gen == "E")
        m = Matrix::kron(rep.K(), rep.E()) + Matrix::kron(rep.E(), id);
    else if (gen == "F")
        m = Matrix::kron(id, rep.F()) + Matrix::kron(rep.F(), rep.Kinv());
    else if (gen == "K")
        m = Matrix::kron(rep.K(), rep.K());
    else if (gen == "Kinv" || gen == "K^-1")
        m = Matrix::kron(rep.Kinv(), rep.Kinv());
    else
        throw ParameterError("flipped_coproduct: unknown generator '" + gen + "'");
    return Operator::on_strands(std::move(m), 2);
}

Operator embed_two(const Operator& op, int width, int s, int t) {
    if (op.arity() != 2) throw ParameterError("embed_two: arity-2 operator required");
    if (!(0 <= s && s < t && t < width)) throw ParameterError("embed_two: bad strand positions");
    const auto& spec = op.matrix().spec();
    const int n = spec->n();
    const long dim = pow_long(n, width);
    Matrix out(spec, static_cast<int>(dim), static_cast<int>(dim));

    // Strides of each strand position in the linearized index.
    std::vector<long> stride(static_cast<size_t>(width));
    for (int p = 0; p < width; ++p) stride[static_cast<size_t>(p)] = pow_long(n, width - 1 - p);

    std::vector<int> free_pos;
    for (int p = 0; p < width; ++p)
        if (p != s && p != t) free_pos.push_back(p);
    const long free_count = pow_long(n, width - 2);

    for (int r2 = 0; r2 < n * n; ++r2) {
        for (int c2 = 0; c2 < n * n; ++c2) {
            const CycScalar& v = op.matrix().at(r2, c2);
            if (v.is_zero()) continue;
            const long base_row = (r2 / n) * stride[static_cast<size_t>(s)] +
                                  (r2 % n) * stride[static_cast<size_t>(t)];
            const long base_col = (c2 / n) * stride[static_cast<size_t>(s)] +
                                  (c2 % n) * stride[static_cast<size_t>(t)];
            for (long f = 0; f < free_count; ++f) {
                long rest = 0, fv = f;
                for (size_t u = free_pos.size(); u-- > 0;) {
                    rest += (fv % n) * stride[static_cast<size_t>(free_pos[u])];
                    fv /= n;
                }
                out.at(static_cast<int>(base_row + rest), static_cast<int>(base_col + rest)) = v;
            }
        }
    }
    return Operator::on_strands(std::move(out), width);
}

namespace {

Matrix cartan_coproduct_matrix(const FieldSpecPtr& spec, const std::vector<long>& h,
                               bool delta_on_left) {
    const int n = static_cast<int>(h.size());
    Matrix m = Matrix::zero(spec, n * n * n, n * n * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                const long prod = delta_on_left
                                      ? (h[static_cast<size_t>(j)] + h[static_cast<size_t>(k)]) *
                                            h[static_cast<size_t>(l)]
                                      : h[static_cast<size_t>(j)] *
                                            (h[static_cast<size_t>(k)] + h[static_cast<size_t>(l)]);
                if (prod % 2 != 0) throw std::logic_error("cartan coproduct: odd weight product");
                const int idx = (j * n + k) * n + l;
                m.at(idx, idx) = CycScalar::q_power(spec, prod / 2);
            }
    return m;
}

} // namespace

Operator cartan_coproduct_left(const Rep& rep) {
    return Operator::on_strands(cartan_coproduct_matrix(rep.spec(), rep.weights(), true), 3);
}

Operator cartan_coproduct_right(const Rep& rep) {
    return Operator::on_strands(cartan_coproduct_matrix(rep.spec(), rep.weights(), false), 3);
}

CheckReport check_intertwiner(const Rep& rep) {
    const Matrix r = r_matrix(rep).matrix();
    CheckReport report;
    for (const std::string gen : {"E", "F", "K", "Kinv"}) {
        const Matrix lhs = r * coproduct(rep, gen).matrix();
        const Matrix rhs = flipped_coproduct(rep, gen).matrix() * r;
        report.add("R Delta(" + gen + ") = Delta'(" + gen + ") R", (lhs - rhs).is_zero());
    }
    return report;
}

CheckReport check_fusion(const Rep& rep) {
    const auto& spec = rep.spec();
    const int n = rep.n();
    const Operator r = r_matrix(rep);
    const Operator r13 = embed_two(r, 3, 0, 2);
    const Operator r23 = embed_two(r, 3, 1, 2);
    const Operator r12 = embed_two(r, 3, 0, 1);

    CheckReport report;

    // (Delta (x) Id)(R) against R13 R23.
    {
        Matrix sum = Matrix::zero(spec, n * n * n, n * n * n);
        Matrix de_pow = Matrix::identity(spec, n * n);
        Matrix f_pow = Matrix::identity(spec, n);
        const Matrix de = coproduct(rep, "E").matrix();
        for (long l = 0; l <= n - 1; ++l) {
            if (l > 0) {
                de_pow = de_pow * de;
                f_pow = f_pow * rep.F();
            }
            sum += f_coeff(spec, l, QSign::plus) * Matrix::kron(de_pow, f_pow);
        }
        const Matrix lhs = cartan_coproduct_left(rep).matrix() * sum;
        report.add("(Delta x Id)(R) = R13 R23", (lhs - (r13 * r23).matrix()).is_zero());
    }

    // (Id (x) Delta)(R) against R13 R12; fails off the standard representation.
    {
        Matrix sum = Matrix::zero(spec, n * n * n, n * n * n);
        Matrix e_pow = Matrix::identity(spec, n);
        Matrix df_pow = Matrix::identity(spec, n * n);
        const Matrix df = coproduct(rep, "F").matrix();
        for (long l = 0; l <= n - 1; ++l) {
            if (l > 0) {
                e_pow = e_pow * rep.E();
                df_pow = df_pow * df;
            }
            sum += f_coeff(spec, l, QSign::plus) * Matrix::kron(e_pow, df_pow);
        }
        const Matrix lhs = cartan_coproduct_right(rep).matrix() * sum;
        const Matrix residual = lhs - (r13 * r12).matrix();
        const bool expected_fail = rep.kind() != RepKind::standard;
        report.add("(Id x Delta)(R) = R13 R12", residual.is_zero(), "", expected_fail);

        if (expected_fail) {
            // Every tail term E^{m+n} x K^{-m}F^n x F^m needs a vector that
            // survives F^{N-1}; that is v_{i-1}, the one basis vector whose
            // lowering path reaches the kernel index i only at the last step.
            const int w = ((rep.index() - 1) % n + n) % n;
            const int col = (0 * n + w) * n + w;
            bool nonzero = false;
            std::string entry;
            for (int row = 0; row < residual.rows() && !nonzero; ++row) {
                if (!residual.at(row, col).is_zero()) {
                    nonzero = true;
                    entry = "row " + std::to_string(row) + ": " + residual.at(row, col).to_string();
                }
            }
            report.add("witness v0 x v_{i-1} x v_{i-1} has nonzero image", nonzero, entry);
        }
    }
    return report;
}

bool check_ybe(const Rep& rep) {
    const Operator r = r_matrix(rep);
    const Operator r12 = embed_two(r, 3, 0, 1);
    const Operator r13 = embed_two(r, 3, 0, 2);
    const Operator r23 = embed_two(r, 3, 1, 2);
    return ((r12 * r13 * r23) - (r23 * r13 * r12)).is_zero();
}

bool check_coproduct_cartan_weights(const FieldSpecPtr& spec, const std::vector<long>& weights) {
    const Operator c = Operator::on_strands(cartan_matrix(spec, weights, +1), 2);
    const Operator left = Operator::on_strands(cartan_coproduct_matrix(spec, weights, true), 3);
    const Operator right = Operator::on_strands(cartan_coproduct_matrix(spec, weights, false), 3);
    // Delta(H) = H (x) 1 + 1 (x) H turns the exponentials into products of
    // two-strand Cartan factors on the corresponding strand pairs.
    const bool left_ok = left == embed_two(c, 3, 0, 2) * embed_two(c, 3, 1, 2);
    const bool right_ok = right == embed_two(c, 3, 0, 1) * embed_two(c, 3, 0, 2);
    return left_ok && right_ok;
}

bool check_coproduct_cartan(const Rep& rep) {
    return check_coproduct_cartan_weights(rep.spec(), rep.weights());
}

} // namespace semicyclic

#include "semicyclic/qcalc.hpp"

#include <mutex>
#include <unordered_map>

namespace semicyclic {

CycScalar qint(const FieldSpecPtr& spec, long l) {
    // [l] = q^{l-1} + q^{l-3} + ... + q^{1-l}, a denominator-free form.
    if (l == 0) return CycScalar::zero(spec);
    const bool neg = l < 0;
    const long m = neg ? -l : l;
    CycScalar sum = CycScalar::zero(spec);
    for (long j = 0; j < m; ++j) sum += CycScalar::q_power(spec, m - 1 - 2 * j);
    return neg ? -sum : sum;
}

namespace {

// Per-N memo table; specs with equal N define the same arithmetic.
std::mutex qfact_mutex;
std::unordered_map<int, std::vector<CycScalar>>& qfact_tables() {
    static std::unordered_map<int, std::vector<CycScalar>> tables;
    return tables;
}

} // namespace

CycScalar qfact(const FieldSpecPtr& spec, long n) {
    if (n < 0) throw ParameterError("qfact: negative argument");
    std::lock_guard<std::mutex> lock(qfact_mutex);
    auto& table = qfact_tables()[spec->n()];
    if (table.empty()) table.push_back(CycScalar::one(spec));
    while (static_cast<long>(table.size()) <= n)
        table.push_back(table.back() * qint(spec, static_cast<long>(table.size())));
    return table[static_cast<size_t>(n)];
}

CycScalar qbinom(const FieldSpecPtr& spec, long n, long k) {
    if (k < 0 || n < k || n > spec->n() - 1)
        throw ParameterError("qbinom: need 0 <= k <= n <= N-1");
    return qfact(spec, n) * (qfact(spec, k) * qfact(spec, n - k)).inverse();
}

CycScalar f_coeff(const FieldSpecPtr& spec, long l, QSign sign) {
    if (l < 0 || l > spec->n() - 1) throw ParameterError("f_coeff: need 0 <= l <= N-1");
    const long s = qsign_factor(sign);
    // (b - b^{-1})^l with b = q^s; [l]! is invariant under q -> q^{-1}.
    CycScalar base = CycScalar::q_power(spec, s) - CycScalar::q_power(spec, -s);
    CycScalar num = CycScalar::one(spec);
    for (long j = 0; j < l; ++j) num *= base;
    // l(l-1)/2 is an integer, so b^{l(l-1)/2} stays inside Q(q).
    num *= CycScalar::q_power(spec, s * (l * (l - 1) / 2));
    return num * qfact(spec, l).inverse();
}

} // namespace semicyclic

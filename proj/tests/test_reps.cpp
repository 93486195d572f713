#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semicyclic/reps.hpp"

using namespace semicyclic;

namespace {

std::vector<CycScalar> a_values(const FieldSpecPtr& spec) {
    return {CycScalar::one(spec), CycScalar::from_int(spec, 2), CycScalar::q_power(spec, 1),
            CycScalar::symbol_a(spec)};
}

// The summation form of F from the defining computation:
// F v_{i+k} = sum_{t=0}^{k-1 (mod N)} -[2(k-t)+N-1] v_{i+k-1}, with the 1/a
// factor on the wrap column. Used as an independent oracle for the product form.
Matrix f_summation_form(const FieldSpecPtr& spec, const CycScalar& a, int i) {
    const int n = spec->n();
    Matrix f = Matrix::zero(spec, n, n);
    for (int k = 0; k < n; ++k) {
        const int col = (i + k) % n;
        const int upper = ((k - 1) % n + n) % n;
        CycScalar coeff = CycScalar::zero(spec);
        for (int t = 0; t <= upper; ++t) coeff -= qint(spec, 2 * (k - t) + n - 1);
        if (col == 0) coeff *= a.inverse();
        if (!coeff.is_zero()) f.at((col - 1 + n) % n, col) = coeff;
    }
    return f;
}

} // namespace

TEST_CASE("semicyclic action on the basis") {
    for (int n : {3, 5}) {
        auto spec = FieldSpec::create(n);
        const auto a = CycScalar::symbol_a(spec);

        Rep rep0 = Rep::semicyclic(spec, a, 0);
        // E v_{N-1} = a v_0, E v_k = v_{k+1}
        CHECK(rep0.E().at(0, n - 1) == a);
        for (int k = 0; k + 1 < n; ++k) CHECK(rep0.E().at(k + 1, k).is_one());
        // K v_k = q^{1-N+2k} v_k
        for (int k = 0; k < n; ++k)
            CHECK(rep0.K().at(k, k) == CycScalar::q_power(spec, 1 - n + 2 * k));

        for (int i = 0; i < n; ++i) {
            Rep rep = Rep::semicyclic(spec, a, i);
            // F v_i = 0: the k = 0 column dies with the factor [0]
            for (int r = 0; r < n; ++r) CHECK(rep.F().at(r, i).is_zero());
            // F v_{i+k} = [k][N-k] v_{i+k-1} away from the wrap column
            for (int k = 1; k < n; ++k) {
                const int col = (i + k) % n;
                CycScalar expect = qint(spec, k) * qint(spec, n - k);
                if (col == 0) expect *= a.inverse();
                CHECK(rep.F().at((col - 1 + n) % n, col) == expect);
            }
        }
    }
}

TEST_CASE("standard representation") {
    for (int n : {3, 5, 7}) {
        auto spec = FieldSpec::create(n);
        Rep rep = Rep::standard(spec);
        // rho_0(F) v_k = [k][N-k] v_{k-1}
        for (int k = 1; k < n; ++k)
            CHECK(rep.F().at(k - 1, k) == qint(spec, k) * qint(spec, n - k));
        CHECK(rep.E().pow(n).is_zero());
        CHECK(rep.F().pow(n).is_zero());
        for (int k = 0; k < n; ++k)
            CHECK(rep.K().at(k, k) == CycScalar::q_power(spec, 1 - n + 2 * k));
        // identical to semicyclic(a, 0) except the corner of E
        Rep semi = Rep::semicyclic(spec, CycScalar::one(spec), 0);
        CHECK(rep.F() == semi.F());
        CHECK(rep.K() == semi.K());
        CHECK(rep.E().at(0, n - 1).is_zero());
        CHECK(!semi.E().at(0, n - 1).is_zero());
    }
}

TEST_CASE("defining relations hold for every parameter tuple") {
    for (int n : {3, 5, 7}) {
        auto spec = FieldSpec::create(n);
        CHECK(check_relations(Rep::standard(spec)).all_hold());
        for (const auto& a : a_values(spec))
            for (int i = 0; i < n; ++i) {
                auto report = check_relations(Rep::semicyclic(spec, a, i));
                for (const auto& item : report.items) {
                    INFO("N=", n, " i=", i, " relation: ", item.name);
                    CHECK(item.holds);
                }
            }
    }
}

TEST_CASE("weight exponents are even") {
    for (int n : {3, 5, 7}) {
        auto spec = FieldSpec::create(n);
        for (int i = 0; i < n; ++i) {
            Rep rep = Rep::semicyclic(spec, CycScalar::one(spec), i);
            for (long h : rep.weights()) CHECK(h % 2 == 0);
        }
    }
}

TEST_CASE("corrupted matrix is flagged by check_relations") {
    auto spec = FieldSpec::create(5);
    const int n = 5;
    // semicyclic f-values with one entry perturbed
    std::vector<CycScalar> f;
    for (int j = 0; j < n; ++j) f.push_back(qint(spec, j) * qint(spec, n - j));
    f[2] *= CycScalar::q_power(spec, 1);
    Rep bad = Rep::custom_f(spec, CycScalar::one(spec), f);
    auto report = check_relations(bad);
    bool ef_fe_failed = false;
    for (const auto& item : report.items)
        if (item.name.starts_with("EF - FE")) ef_fe_failed = !item.holds;
    CHECK(ef_fe_failed);
    CHECK(!report.all_hold());
}

TEST_CASE("non-unit a is rejected") {
    auto spec = FieldSpec::create(3);
    CHECK_THROWS_AS(Rep::semicyclic(spec, CycScalar::zero(spec), 0), ParameterError);
    const auto non_monomial = CycScalar::one(spec) + CycScalar::symbol_a(spec);
    CHECK_THROWS_AS(Rep::semicyclic(spec, non_monomial, 0), ParameterError);
}

TEST_CASE("summation and product forms of F agree") {
    for (int n : {3, 5, 7}) {
        auto spec = FieldSpec::create(n);
        const auto a = CycScalar::symbol_a(spec);
        for (int i = 0; i < n; ++i) {
            Rep rep = Rep::semicyclic(spec, a, i);
            CHECK(rep.F() == f_summation_form(spec, a, i));
        }
    }
}

TEST_CASE("basis shift relations") {
    auto spec = FieldSpec::create(3);
    const auto a = CycScalar::symbol_a(spec);
    CHECK(shift_relations(Rep::semicyclic(spec, a, 0), Rep::semicyclic(spec, a, 1), 1));
    CHECK(shift_relations(Rep::semicyclic(spec, a, 1), Rep::semicyclic(spec, a, 1), 0));
    for (int n : {3, 5}) {
        auto sp = FieldSpec::create(n);
        const auto sym = CycScalar::symbol_a(sp);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                CHECK(shift_relations(Rep::semicyclic(sp, sym, i), Rep::semicyclic(sp, sym, i + k), k));
    }
    const auto two = CycScalar::from_int(spec, 2);
    CHECK_THROWS_AS(shift_relations(Rep::semicyclic(spec, a, 0), Rep::semicyclic(spec, two, 1), 1),
                    ParameterError);
    CHECK_THROWS_AS(shift_relations(Rep::semicyclic(spec, a, 0), Rep::semicyclic(spec, a, 2), 1),
                    ParameterError);
    CHECK_THROWS_AS(shift_relations(Rep::standard(spec), Rep::standard(spec), 0), ParameterError);
}

TEST_CASE("conjugation by E realizes the index shift") {
    {
        auto spec = FieldSpec::create(3);
        CHECK(conjugation_iso(Rep::semicyclic(spec, CycScalar::one(spec), 0), 1));
        CHECK(conjugation_iso(Rep::semicyclic(spec, CycScalar::one(spec), 0), 0));
    }
    {
        auto spec = FieldSpec::create(5);
        CHECK(conjugation_iso(Rep::semicyclic(spec, CycScalar::q_power(spec, 1), 2), 3));
        const auto a = CycScalar::symbol_a(spec);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) CHECK(conjugation_iso(Rep::semicyclic(spec, a, i), j));
    }
    auto spec = FieldSpec::create(3);
    CHECK_THROWS_AS(conjugation_iso(Rep::standard(spec), 1), ParameterError);
}

TEST_CASE("E inverse powers") {
    auto spec = FieldSpec::create(5);
    Rep rep = Rep::semicyclic(spec, CycScalar::symbol_a(spec), 2);
    for (int j = 0; j <= 5; ++j)
        CHECK((rep.E().pow(j) * rep.E_negative_power(j)).is_identity());
    CHECK_THROWS_AS(Rep::standard(spec).E_negative_power(1), ParameterError);
}

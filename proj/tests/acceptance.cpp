// Acceptance suite: one pass/fail line per criterion, exact (zero-residual)
// assertions throughout, wall-clock budgets enforced where stated.
// Usage: acceptance [path-to-cli-binary]

#include "semicyclic/evaluator.hpp"
#include "semicyclic/qcalc.hpp"
#include "semicyclic/words.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace semicyclic;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    std::string label;
    double budget_seconds; // <= 0: no budget
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

void run(int number, const std::string& label, double budget,
         const std::function<void(Criterion&)>& body) {
    Criterion crit{label, budget, true, {}};
    const auto t0 = Clock::now();
    try {
        body(crit);
    } catch (const std::exception& e) {
        crit.ok = false;
        crit.notes.push_back(std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget > 0 && dt > budget) {
        crit.ok = false;
        crit.notes.push_back("budget exceeded: " + std::to_string(dt) + " s > " +
                             std::to_string(budget) + " s");
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", crit.ok ? "PASS" : "FAIL", number,
                label.c_str(), dt);
    for (const auto& note : crit.notes) std::printf("         - %s\n", note.c_str());
    if (!crit.ok) ++failures;
}

std::vector<CycScalar> a_values(const FieldSpecPtr& spec) {
    return {CycScalar::one(spec), CycScalar::from_int(spec, 2), CycScalar::q_power(spec, 1),
            CycScalar::symbol_a(spec)};
}

std::string tuple_tag(int n, int i, size_t a_idx) {
    static const char* a_names[] = {"1", "2", "q", "sym"};
    return "N=" + std::to_string(n) + " i=" + std::to_string(i) + " a=" + a_names[a_idx];
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";

    // 1. Representation axioms, all tuples, exactly.
    run(1, "representation axioms (N in {3,5,7}, all i, a in {1,2,q,sym})", 5.0,
        [](Criterion& c) {
            for (int n : {3, 5, 7}) {
                auto spec = FieldSpec::create(n);
                const auto as = a_values(spec);
                for (size_t ai = 0; ai < as.size(); ++ai)
                    for (int i = 0; i < n; ++i) {
                        auto report = check_relations(Rep::semicyclic(spec, as[ai], i));
                        for (const auto& item : report.items)
                            c.require(item.holds, tuple_tag(n, i, ai) + ": " + item.name);
                    }
                for (const auto& item : check_relations(Rep::standard(spec)).items)
                    c.require(item.holds, "rho_0 N=" + std::to_string(n) + ": " + item.name);
            }
        });

    // 2. Intertwiner identity for Z in {E,F,K}, all tuples, exactly.
    run(2, "intertwiner R Delta(Z) R^-1 = Delta'(Z) (all tuples)", 30.0, [](Criterion& c) {
        for (int n : {3, 5, 7}) {
            auto spec = FieldSpec::create(n);
            const auto as = a_values(spec);
            for (size_t ai = 0; ai < as.size(); ++ai)
                for (int i = 0; i < n; ++i) {
                    auto report = check_intertwiner(Rep::semicyclic(spec, as[ai], i));
                    for (const auto& item : report.items)
                        c.require(item.holds, tuple_tag(n, i, ai) + ": " + item.name);
                }
            for (const auto& item : check_intertwiner(Rep::standard(spec)).items)
                c.require(item.holds, "rho_0 N=" + std::to_string(n) + ": " + item.name);
        }
    });

    // 3. Yang-Baxter on V^{(x)3}, exactly; symbolic a included at every N.
    run(3, "Yang-Baxter equation (N in {3,5,7}, i in {0,(N+1)/2}, a in {1,2,q,sym})", 600.0,
        [](Criterion& c) {
            for (int n : {3, 5, 7}) {
                auto spec = FieldSpec::create(n);
                const auto as = a_values(spec);
                for (size_t ai = 0; ai < as.size(); ++ai)
                    for (int i : {0, (n + 1) / 2})
                        c.require(check_ybe(Rep::semicyclic(spec, as[ai], i)),
                                  "YBE " + tuple_tag(n, i, ai));
                c.require(check_ybe(Rep::standard(spec)), "YBE rho_0 N=" + std::to_string(n));
            }
        });

    // 4. Fusion dichotomy: left identity exact; right residual nonzero for every
    //    semicyclic tuple (zero residual there is a FAILURE) and zero for rho_0.
    run(4, "fusion dichotomy with witness (left holds, right fails semicyclically)", 0.0,
        [](Criterion& c) {
            for (int n : {3, 5, 7}) {
                auto spec = FieldSpec::create(n);
                const auto as = a_values(spec);
                for (size_t ai = 0; ai < as.size(); ++ai)
                    for (int i : {0, (n + 1) / 2}) {
                        Rep rep = Rep::semicyclic(spec, as[ai], i);
                        auto report = check_fusion(rep);
                        c.require(report.items[0].holds,
                                  tuple_tag(n, i, ai) + ": (Delta x Id)(R) = R13 R23");
                        c.require(!report.items[1].holds,
                                  tuple_tag(n, i, ai) +
                                      ": residual (Id x Delta)(R) - R13 R12 must be nonzero");
                        c.require(report.items[2].holds,
                                  tuple_tag(n, i, ai) + ": witness v0 x v_{i-1} x v_{i-1} nonzero");
                    }
                auto std_report = check_fusion(Rep::standard(spec));
                c.require(std_report.items[0].holds && std_report.items[1].holds,
                          "rho_0 N=" + std::to_string(n) + ": both fusion identities exact");
            }
            c.notes.push_back("note: the source text names the witness v0 x v_{i+1} x v_{i+1}; "
                              "that column of the residual is exactly zero (F^2 kills v_{i+1}), "
                              "v_{i-1} is the index the linear-independence argument needs");
            // demonstrate the literal index's vanishing rather than hiding it
            auto spec = FieldSpec::create(5);
            Rep rep = Rep::semicyclic(spec, CycScalar::symbol_a(spec), 2);
            const Operator r = r_matrix(rep);
            const Matrix r13r12 = (embed_two(r, 3, 0, 2) * embed_two(r, 3, 0, 1)).matrix();
            Matrix lhs = Matrix::zero(spec, 125, 125);
            {
                Matrix e_pow = Matrix::identity(spec, 5);
                Matrix df_pow = Matrix::identity(spec, 25);
                const Matrix df = coproduct(rep, "F").matrix();
                for (long l = 0; l < 5; ++l) {
                    if (l > 0) {
                        e_pow = e_pow * rep.E();
                        df_pow = df_pow * df;
                    }
                    lhs += f_coeff(spec, l, QSign::plus) * Matrix::kron(e_pow, df_pow);
                }
                lhs = cartan_coproduct_right(rep).matrix() * lhs;
            }
            const Matrix residual = lhs - r13r12;
            const int wrong = (rep.index() + 1) % 5;
            const int col = wrong * 5 + wrong;
            bool literal_zero = true;
            for (int row = 0; row < 125; ++row)
                if (!residual.at(row, col).is_zero()) literal_zero = false;
            c.require(literal_zero,
                      "expected the literal v_{i+1} witness column to vanish (it did not)");
        });

    // 5. Turaev-move invariance, all moves and variants, N in {3,5}.
    run(5, "Turaev move invariance (7 moves x variants, N in {3,5}, a in {1,2,q,sym})", 0.0,
        [](Criterion& c) {
            for (int n : {3, 5}) {
                auto spec = FieldSpec::create(n);
                const auto as = a_values(spec);
                for (size_t ai = 0; ai < as.size(); ++ai) {
                    Rep rep = Rep::semicyclic(spec, as[ai], (n + 1) / 2);
                    for (int move = 1; move <= 7; ++move)
                        for (int v = 0; v < turaev_variant_count(move); ++v) {
                            auto [lhs, rhs] = turaev_pair(move, v);
                            c.require(evaluate(lhs, rep).op == evaluate(rhs, rep).op,
                                      tuple_tag(n, (n + 1) / 2, ai) + ": move " +
                                          std::to_string(move) + " variant " + std::to_string(v));
                        }
                }
            }
        });

    // 6. The f_q lemma: product formula and both vanishing sums, exactly.
    run(6, "f_q / f_{q^-1} product formula and vanishing sums (N in {3,5,7})", 0.0,
        [](Criterion& c) {
            for (int n : {3, 5, 7}) {
                auto spec = FieldSpec::create(n);
                for (long a = 0; a <= n - 1; ++a) {
                    for (long b = 0; b <= a; ++b) {
                        const CycScalar lhs =
                            f_coeff(spec, a - b, QSign::minus) * f_coeff(spec, b, QSign::plus);
                        CycScalar pw = CycScalar::one(spec);
                        for (long j = 0; j < a; ++j) pw *= CycScalar::q_minus_qinv(spec);
                        CycScalar rhs = pw * (qfact(spec, a - b) * qfact(spec, b)).inverse() *
                                        CycScalar::q_power(spec, (a - a * a) / 2) *
                                        CycScalar::q_power(spec, b * (a - 1));
                        if ((a - b) % 2 != 0) rhs = -rhs;
                        c.require(lhs == rhs, "product formula N=" + std::to_string(n) + " a=" +
                                                  std::to_string(a) + " b=" + std::to_string(b));
                    }
                    if (a > 0) {
                        CycScalar s1 = CycScalar::zero(spec), s2 = CycScalar::zero(spec);
                        for (long b = 0; b <= a; ++b) {
                            s1 += f_coeff(spec, a - b, QSign::minus) * f_coeff(spec, b, QSign::plus);
                            s2 += f_coeff(spec, a - b, QSign::plus) * f_coeff(spec, b, QSign::minus);
                        }
                        c.require(s1.is_zero() && s2.is_zero(),
                                  "vanishing sums N=" + std::to_string(n) + " a=" +
                                      std::to_string(a));
                    }
                }
            }
        });

    // 7. Kashaev equivalence on the named builtins, symbolic a, exactly.
    run(7, "Kashaev equivalence (unknot, trefoil, figure_eight; N in {3,5,7}; a sym)", 0.0,
        [](Criterion& c) {
            for (int n : {3, 5, 7}) {
                auto spec = FieldSpec::create(n);
                for (const std::string name : {"unknot", "trefoil", "figure_eight"}) {
                    const Diagram d = builtin(name);
                    const CycScalar standard_value = kashaev(d, spec);
                    for (int i : {0, (n + 1) / 2}) {
                        auto ev =
                            evaluate(d, Rep::semicyclic(spec, CycScalar::symbol_a(spec), i));
                        const std::string tag =
                            name + " N=" + std::to_string(n) + " i=" + std::to_string(i);
                        c.require(ev.scalar.has_value() && ev.schur_ok, tag + ": Schur scalar");
                        c.require(*ev.scalar == standard_value, tag + ": equals rho_0 value");
                        c.require(ev.scalar->a_free(), tag + ": a-degree 0");
                    }
                }
            }
        });

    // 8. Figure-eight staging: support shapes per crossing, cap index relations.
    run(8, "figure-eight trace staging and cap-induced index relations (N in {3,5})", 0.0,
        [](Criterion& c) {
            for (int n : {3, 5}) {
                auto spec = FieldSpec::create(n);
                Rep rep = Rep::semicyclic(spec, CycScalar::symbol_a(spec), (n + 1) / 2);
                const Diagram d = builtin("figure_eight");
                auto md = [n](long x) { return ((x % n) + n) % n; };
                for (long i = 0; i < n; ++i) {
                    std::vector<SparseState> st;
                    evaluate_state(d, rep, {static_cast<uint8_t>(i)},
                                   [&](int, const Slice&, const SparseState& s, const Signature&) {
                                       st.push_back(s);
                                   });
                    const std::string tag = "N=" + std::to_string(n) + " input=" + std::to_string(i);
                    c.require(st.size() == 8, tag + ": eight slices traced");
                    for (const auto& [t, v] : st[1])
                        c.require(t[1] == t[2] && t[0] == t[3] && t[4] == i,
                                  tag + ": cup stage support (j,k,k,j,i)");
                    for (const auto& [t, v] : st[2]) {
                        const long r = md(i - t[3]);
                        c.require(t[1] == t[2] && t[4] == md(t[0] + r),
                                  tag + ": stage 1 support is a sum over r");
                    }
                    for (const auto& [t, v] : st[3]) {
                        const long r = md(t[4] - t[0]), s = md(t[1] - t[3]);
                        c.require(t[2] == md(i - r + s), tag + ": stage 2 support over (r,s)");
                    }
                    for (const auto& [t, v] : st[4])
                        c.require(md((i - t[2]) - (t[3] - t[0])) == md(t[4] - t[1]),
                                  tag + ": stage 3 support over (r,s,t)");
                    for (const auto& [t, v] : st[5])
                        c.require(md(t[2] + t[3] + t[4]) == md(i + t[0] + t[1]),
                                  tag + ": stage 4 support over (r,s,t,u)");
                    // caps: k = j+r-t+u was forced at the first cap, j = i-r+s-u
                    // at the second; survivors satisfy the induced relations
                    for (const auto& [t, v] : st[6])
                        c.require(md(t[1] + t[2]) == md(i + t[0]), tag + ": cap k = j+r-t+u");
                    c.require(!st[7].empty(), tag + ": nonzero final state");
                    for (const auto& [t, v] : st[7])
                        c.require(t.size() == 1 && t[0] == i, tag + ": cap j = i-r+s-u, output e_i");
                }
            }
        });

    // 9. Balanced words: 200 random words per N, diagonal and a-free, including
    //    the generalized F; commute_EF soundness for all 0 <= c < d <= N-1.
    run(9, "balanced-word propositions (200 words per N in {3,5}; commute_EF sound)", 0.0,
        [](Criterion& c) {
            uint64_t seed = 0x5eed5eed;
            if (const char* env = std::getenv("SEMICYCLIC_SEED"))
                seed = std::strtoull(env, nullptr, 10);
            for (int n : {3, 5}) {
                auto spec = FieldSpec::create(n);
                std::mt19937_64 rng(seed ^ static_cast<uint64_t>(n));
                std::uniform_int_distribution<int> idx(0, n - 1);
                std::uniform_int_distribution<long> half(1, n - 1);
                std::uniform_int_distribution<int> qe(0, 2 * n - 1);
                std::uniform_int_distribution<int> coef(1, 3);

                std::vector<Rep> reps;
                reps.push_back(Rep::semicyclic(spec, CycScalar::symbol_a(spec), idx(rng)));
                std::vector<CycScalar> f;
                for (int j = 0; j < n; ++j)
                    f.push_back(CycScalar::from_int(spec, coef(rng)) *
                                CycScalar::q_power(spec, qe(rng)));
                reps.push_back(Rep::custom_f(spec, CycScalar::symbol_a(spec), f));

                for (int trial = 0; trial < 200; ++trial) {
                    Word w;
                    long e_left = half(rng), f_left = e_left;
                    bool on_e = trial % 2 == 0;
                    while (e_left > 0 || f_left > 0) {
                        long& left = on_e ? e_left : f_left;
                        if (left > 0) {
                            std::uniform_int_distribution<long> piece(1, left);
                            const long p = piece(rng);
                            w.append(on_e ? GenSymbol::E : GenSymbol::F, p);
                            left -= p;
                        }
                        on_e = !on_e;
                    }
                    for (const auto& rep : reps) {
                        const Matrix m = eval_word(w, rep).matrix();
                        bool diag = true, afree = true;
                        for (int r = 0; r < n; ++r)
                            for (int cc = 0; cc < n; ++cc) {
                                if (r != cc && !m.at(r, cc).is_zero()) diag = false;
                                if (!m.at(r, cc).a_free()) afree = false;
                            }
                        c.require(diag && afree, "N=" + std::to_string(n) + " word " +
                                                     w.to_string() + ": diagonal and a-free");
                    }
                }

                Rep rep = Rep::semicyclic(spec, CycScalar::symbol_a(spec), idx(rng));
                for (long cc = 0; cc < n - 1; ++cc)
                    for (long dd = cc + 1; dd <= n - 1; ++dd) {
                        const Matrix lhs = rep.E().pow(cc) * rep.F().pow(dd);
                        Matrix rhs = Matrix::zero(spec, n, n);
                        for (const auto& term : commute_EF(spec, cc, dd))
                            rhs += term.coeff *
                                   (rep.F().pow(term.f_power) * rep.E().pow(term.e_power) *
                                    eval_diagonal_factor(term.dk, rep));
                        c.require(lhs == rhs, "commute_EF c=" + std::to_string(cc) + " d=" +
                                                  std::to_string(dd) + " N=" + std::to_string(n));
                    }
            }
        });

    // 10. Casimir factorization with the oracle-fixed bracket convention.
    run(10, "Casimir factorization for all 1 <= m <= N-1 (N in {3,5}, symbolic a)", 0.0,
        [](Criterion& c) {
            for (int n : {3, 5}) {
                auto spec = FieldSpec::create(n);
                for (int i : {0, (n + 1) / 2}) {
                    Rep rep = Rep::semicyclic(spec, CycScalar::symbol_a(spec), i);
                    for (long m = 1; m <= n - 1; ++m) {
                        auto report = casimir_factorization(m, rep);
                        for (const auto& item : report.items)
                            c.require(item.holds, "N=" + std::to_string(n) + " i=" +
                                                      std::to_string(i) + ": " + item.name);
                    }
                }
            }
        });

    // 11. The (2,2) functor carries information beyond rho_0.
    run(11, "(2,2) novelty: single positive crossing differs semicyclic vs standard", 0.0,
        [](Criterion& c) {
            auto spec = FieldSpec::create(3);
            Diagram crossing{all_down(2), {{SliceKind::cross_pos, 0}}};
            auto report = compare_22(crossing, spec, CycScalar::one(spec), 0);
            c.require(report.differs, "difference operator must be nonzero (N=3, a=1)");
        });

    // 12. End-to-end CLI: full verify suite, fusion failure reported as expected.
    run(12, "CLI end-to-end: verify --n 3 --a sym all", 120.0, [&](Criterion& c) {
        if (cli_path.empty()) {
            c.require(false, "CLI path not supplied (run via ctest or pass it as argv[1])");
            return;
        }
        const std::string out_path = "acceptance_cli_output.txt";
        const std::string cmd = "\"" + cli_path + "\" verify --n 3 --a sym all > " + out_path +
                                " 2>&1";
        const int status = std::system(cmd.c_str());
        c.require(status == 0, "CLI exited nonzero");
        std::ifstream in(out_path);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string out = buf.str();
        c.require(out.find("[xfail] fusion: semicyclic: (Id x Delta)(R) = R13 R12") !=
                      std::string::npos,
                  "expected fusion-right reported as an expected failure");
        c.require(out.find("all identities behave as asserted") != std::string::npos,
                  "expected the final success line");
        c.require(out.find("[FAIL") == std::string::npos, "no identity may fail outright");
        std::remove(out_path.c_str());
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                failures);
    return failures == 0 ? 0 : 1;
}

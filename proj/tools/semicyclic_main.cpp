// Command-line front end: compute tangle invariants, run the verification
// suites, and print invariant tables.

#include "semicyclic/evaluator.hpp"
#include "semicyclic/serialize.hpp"
#include "semicyclic/words.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace semicyclic;

namespace {

struct RunConfig {
    int n = 3;
    std::string a_spec = "sym";
    std::string rep_index = "default";
    std::string diagram;
    std::string format = "exact";
    std::string suite = "all";
};

CycScalar parse_a(const FieldSpecPtr& spec, const std::string& text) {
    if (text == "sym" || text == "a") return CycScalar::symbol_a(spec);
    if (text == "q") return CycScalar::q_power(spec, 1);
    if (text.rfind("q^", 0) == 0) return CycScalar::q_power(spec, std::stol(text.substr(2)));
    Rational r(text);
    r.canonicalize();
    if (r == 0) throw ParameterError("a must be nonzero");
    return CycScalar::from_rational(spec, r);
}

int resolve_index(const std::string& text, int n) {
    if (text == "default") return (n + 1) / 2;
    const int i = std::stoi(text);
    return ((i % n) + n) % n;
}

void require_valid_n(int n) {
    if (n < 3 || n % 2 == 0) throw ParameterError("N must be odd and >= 3");
}

Diagram resolve_diagram(const std::string& name_or_path, std::string& label) {
    for (const auto& name : builtin_names()) {
        if (name == name_or_path) {
            label = name;
            return builtin(name);
        }
    }
    std::ifstream in(name_or_path);
    if (!in) throw ParameterError("cannot read diagram file '" + name_or_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::ostringstream hashed;
    hashed << std::hex << std::hash<std::string>{}(text);
    label = "sha:" + hashed.str();
    return parse(text);
}

std::complex<double> a_complex_value(const CycScalar& a) { return a.to_complex(1.0); }

// ---- compute ----------------------------------------------------------

int cmd_compute(const RunConfig& cfg) {
    require_valid_n(cfg.n);
    auto spec = FieldSpec::create(cfg.n);
    const CycScalar a = parse_a(spec, cfg.a_spec);
    const int index = resolve_index(cfg.rep_index, cfg.n);
    std::string label;
    const Diagram d = resolve_diagram(cfg.diagram, label);
    const Rep rep = Rep::semicyclic(spec, a, index);
    const Evaluation ev = evaluate(d, rep);

    const std::complex<double> a_val = a_complex_value(a);
    if (cfg.format == "json") {
        nlohmann::json j{{"diagram", label},
                         {"N", cfg.n},
                         {"rep", {{"kind", "semicyclic"}, {"i", index}, {"a", cfg.a_spec}}},
                         {"class", ev.diagram_class},
                         {"schur_ok", ev.schur_ok}};
        if (ev.scalar) {
            const auto z = ev.scalar->to_complex(a_val);
            j["scalar"] = to_json(*ev.scalar);
            j["complex"] = {z.real(), z.imag()};
        } else {
            j["scalar"] = nullptr;
            nlohmann::json entries = nlohmann::json::array();
            for (int r = 0; r < ev.op.matrix().rows(); ++r)
                for (int c = 0; c < ev.op.matrix().cols(); ++c)
                    entries.push_back(to_json(ev.op.matrix().at(r, c)));
            j["operator"] = std::move(entries);
        }
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "complex") {
        if (!ev.scalar) throw ParameterError("complex format requires a (1,1) diagram");
        const auto z = ev.scalar->to_complex(a_val);
        std::cout << std::setprecision(15) << z.real() << " " << z.imag() << "\n";
    } else if (cfg.format == "exact") {
        if (ev.scalar)
            std::cout << ev.scalar->to_string() << "\n";
        else
            std::cout << ev.op.matrix().to_string();
    } else {
        throw ParameterError("unknown format '" + cfg.format + "'");
    }
    return 0;
}

// ---- verify ------------------------------------------------------------

void print_report(const std::string& suite, const CheckReport& report, bool as_json,
                  nlohmann::json& json_items) {
    if (as_json) {
        for (const auto& item : report.items) {
            auto j = to_json(item);
            j["suite"] = suite;
            json_items.push_back(std::move(j));
        }
        return;
    }
    for (const auto& item : report.items) {
        const char* tag = item.holds ? (item.expected_to_fail ? "UNEX" : " ok ")
                                     : (item.expected_to_fail ? "xfail" : "FAIL");
        std::cout << "[" << std::setw(5) << tag << "] " << suite << ": " << item.name;
        if (!item.holds && item.expected_to_fail) std::cout << "   (fails, as asserted)";
        if (item.holds && item.expected_to_fail)
            std::cout << "   (HOLDS but was asserted to fail)";
        std::cout << "\n";
    }
}

CheckReport suite_relations(const FieldSpecPtr& spec, const CycScalar& a, int index) {
    CheckReport out;
    auto semi = check_relations(Rep::semicyclic(spec, a, index));
    for (auto& item : semi.items) out.add("rho_{a," + std::to_string(index) + "}: " + item.name, item.holds);
    auto std_rep = check_relations(Rep::standard(spec));
    for (auto& item : std_rep.items) out.add("rho_0: " + item.name, item.holds);
    return out;
}

CheckReport suite_rmatrix(const FieldSpecPtr& spec, const CycScalar& a, int index) {
    Rep rep = Rep::semicyclic(spec, a, index);
    CheckReport out = check_intertwiner(rep);
    out.add("R R^-1 = Id", (r_matrix(rep) * r_inverse(rep)).matrix().is_identity());
    const Operator rc = braid(rep);
    const Operator b12 = embed_two(rc, 3, 0, 1);
    const Operator b23 = embed_two(rc, 3, 1, 2);
    out.add("braid relation on V^3", b12 * b23 * b12 == b23 * b12 * b23);
    out.add("(Delta x Id)(q^{HxH/2}) = q^{Delta(H)xH/2}", check_coproduct_cartan(rep));
    return out;
}

CheckReport suite_ybe(const FieldSpecPtr& spec, const CycScalar& a, int index) {
    CheckReport out;
    out.add("YBE for rho_{a," + std::to_string(index) + "}",
            check_ybe(Rep::semicyclic(spec, a, index)));
    out.add("YBE for rho_0", check_ybe(Rep::standard(spec)));
    return out;
}

CheckReport suite_fusion(const FieldSpecPtr& spec, const CycScalar& a, int index) {
    CheckReport out;
    auto semi = check_fusion(Rep::semicyclic(spec, a, index));
    for (auto& item : semi.items)
        out.items.push_back({"semicyclic: " + item.name, item.holds, item.expected_to_fail,
                             item.witness});
    auto std_rep = check_fusion(Rep::standard(spec));
    for (auto& item : std_rep.items)
        out.items.push_back(
            {"rho_0: " + item.name, item.holds, item.expected_to_fail, item.witness});
    return out;
}

CheckReport suite_turaev(const FieldSpecPtr& spec, const CycScalar& a, int index) {
    Rep rep = Rep::semicyclic(spec, a, index);
    CheckReport out;
    for (int move = 1; move <= 7; ++move)
        for (int v = 0; v < turaev_variant_count(move); ++v) {
            auto [lhs, rhs] = turaev_pair(move, v);
            out.add("move " + std::to_string(move) + " variant " + std::to_string(v),
                    evaluate(lhs, rep).op == evaluate(rhs, rep).op);
        }
    return out;
}

CheckReport suite_kashaev(const FieldSpecPtr& spec, const CycScalar& a, int index) {
    CheckReport out;
    for (const auto& name : builtin_names()) {
        const Diagram d = builtin(name);
        const CycScalar standard_value = kashaev(d, spec);
        auto ev = evaluate(d, Rep::semicyclic(spec, a, index));
        out.add(name + ": semicyclic scalar = rho_0 scalar", *ev.scalar == standard_value);
        out.add(name + ": scalar is a-free", ev.scalar->a_free());
    }
    return out;
}

CheckReport suite_words(const FieldSpecPtr& spec, const CycScalar& a, int index) {
    CheckReport out;
    const int n = spec->n();
    Rep rep = Rep::semicyclic(spec, a, index);

    uint64_t seed = 0x5eed5eed;
    if (const char* env = std::getenv("SEMICYCLIC_SEED")) seed = std::strtoull(env, nullptr, 10);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> half(1, n - 1);

    bool diag_ok = true, reduce_ok = true;
    for (int trial = 0; trial < 60 && (diag_ok || reduce_ok); ++trial) {
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
        try {
            const Matrix m = eval_word(w, rep).matrix();
            for (int r = 0; r < n && diag_ok; ++r)
                for (int c = 0; c < n; ++c)
                    if ((r != c && !m.at(r, c).is_zero()) || !m.at(r, c).a_free()) diag_ok = false;
            if (eval_word_reduced(w, rep).matrix() != m) reduce_ok = false;
        } catch (const std::logic_error&) {
            diag_ok = false;
        }
    }
    out.add("random balanced words diagonal and a-free", diag_ok);
    out.add("reduction through commute_EF matches direct evaluation", reduce_ok);

    bool commute_ok = true;
    for (long c = 0; c < n - 1 && commute_ok; ++c)
        for (long d = c + 1; d <= n - 1; ++d) {
            const Matrix lhs = rep.E().pow(c) * rep.F().pow(d);
            Matrix rhs = Matrix::zero(spec, n, n);
            for (const auto& term : commute_EF(spec, c, d))
                rhs += term.coeff * (rep.F().pow(term.f_power) * rep.E().pow(term.e_power) *
                                     eval_diagonal_factor(term.dk, rep));
            if (lhs != rhs) commute_ok = false;
        }
    out.add("commutation rule E^c F^d sound for all 0 <= c < d <= N-1", commute_ok);

    bool fact_ok = true;
    for (long m = 1; m <= n - 1; ++m)
        if (!casimir_factorization(m, rep).all_hold()) fact_ok = false;
    out.add("Casimir factorization for all 1 <= m <= N-1", fact_ok);
    return out;
}

int cmd_verify(const RunConfig& cfg) {
    require_valid_n(cfg.n);
    auto spec = FieldSpec::create(cfg.n);
    const CycScalar a = parse_a(spec, cfg.a_spec);
    const int index = resolve_index(cfg.rep_index, cfg.n);

    using SuiteFn = CheckReport (*)(const FieldSpecPtr&, const CycScalar&, int);
    const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"relations", suite_relations}, {"rmatrix", suite_rmatrix}, {"ybe", suite_ybe},
        {"fusion", suite_fusion},       {"turaev", suite_turaev},   {"kashaev", suite_kashaev},
        {"words", suite_words},
    };

    std::vector<std::pair<std::string, SuiteFn>> selected;
    if (cfg.suite == "all") {
        selected = suites;
    } else {
        for (const auto& entry : suites)
            if (entry.first == cfg.suite) selected.push_back(entry);
        if (selected.empty()) throw ParameterError("unknown suite '" + cfg.suite + "'");
    }

    const bool as_json = cfg.format == "json";
    nlohmann::json json_items = nlohmann::json::array();
    bool ok = true;
    for (const auto& [name, fn] : selected) {
        const CheckReport report = fn(spec, a, index);
        print_report(name, report, as_json, json_items);
        if (!report.all_as_expected()) ok = false;
    }
    if (as_json) std::cout << json_items.dump(2) << "\n";
    if (!as_json)
        std::cout << (ok ? "all identities behave as asserted"
                         : "verification FAILED: an asserted identity did not hold")
                  << "\n";
    return ok ? 0 : 2;
}

// ---- table -------------------------------------------------------------

int cmd_table(const std::vector<int>& ns, const std::vector<std::string>& diagrams,
              const std::string& a_spec, const std::string& rep_index,
              const std::string& format) {
    nlohmann::json rows = nlohmann::json::array();
    const bool as_json = format == "json";
    if (!as_json && !diagrams.empty())
        std::cout << std::left << std::setw(16) << "diagram" << std::setw(4) << "N"
                  << std::setw(34) << "T_{a,N} (exact)" << std::setw(26) << "complex"
                  << "matches rho_0\n";
    for (int n : ns) {
        require_valid_n(n);
        auto spec = FieldSpec::create(n);
        const CycScalar a = parse_a(spec, a_spec);
        const int index = resolve_index(rep_index, n);
        for (const auto& name : diagrams) {
            std::string label;
            const Diagram d = resolve_diagram(name, label);
            auto ev = evaluate(d, Rep::semicyclic(spec, a, index));
            if (!ev.scalar) throw ParameterError("table requires (1,1) diagrams");
            const CycScalar std_value = kashaev(d, spec);
            const auto z = ev.scalar->to_complex(a_complex_value(a));
            const bool match = *ev.scalar == std_value;
            if (as_json) {
                rows.push_back({{"diagram", label},
                                {"N", n},
                                {"scalar", to_json(*ev.scalar)},
                                {"complex", {z.real(), z.imag()}},
                                {"standard_scalar", to_json(std_value)},
                                {"matches_standard", match}});
            } else {
                std::ostringstream zs;
                zs << std::setprecision(10) << z.real() << (z.imag() < 0 ? " - " : " + ")
                   << std::abs(z.imag()) << "i";
                std::cout << std::left << std::setw(16) << label << std::setw(4) << n
                          << std::setw(34) << ev.scalar->to_string() << std::setw(26) << zs.str()
                          << (match ? "yes" : "NO") << "\n";
            }
        }
    }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semicyclic: tangle invariants from semicyclic representations of U_q(sl_2)"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<int> table_ns;
    std::vector<std::string> table_diagrams;

    auto* compute = app.add_subcommand("compute", "evaluate a (1,1)-tangle invariant");
    compute->add_option("--n", cfg.n, "odd N >= 3");
    compute->add_option("--a", cfg.a_spec, "a parameter: sym, a rational, or q^k");
    compute->add_option("--rep-index", cfg.rep_index, "semicyclic index i or 'default'");
    compute->add_option("--diagram", cfg.diagram, "builtin name or path to a .tangle file")
        ->required();
    compute->add_option("--format", cfg.format, "exact | complex | json");

    auto* verify = app.add_subcommand("verify", "run identity verification suites");
    verify->add_option("--n", cfg.n, "odd N >= 3");
    verify->add_option("--a", cfg.a_spec, "a parameter: sym, a rational, or q^k");
    verify->add_option("--rep-index", cfg.rep_index, "semicyclic index i or 'default'");
    verify->add_option("--format", cfg.format, "text | json");
    std::string positional_suite;
    verify->add_option("--suite", cfg.suite,
                       "relations | rmatrix | ybe | fusion | turaev | kashaev | words | all");
    verify->add_option("suite_name", positional_suite, "suite name (positional alternative)");

    auto* table = app.add_subcommand("table", "tabulate invariants per (diagram, N)");
    table->add_option("--n", table_ns, "odd N values (repeatable)");
    table->add_option("--diagram", table_diagrams, "builtin names or files (repeatable)");
    table->add_option("--a", cfg.a_spec, "a parameter");
    table->add_option("--rep-index", cfg.rep_index, "semicyclic index i or 'default'");
    table->add_option("--format", cfg.format, "text | json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(cfg);
        if (verify->parsed()) {
            if (!positional_suite.empty()) cfg.suite = positional_suite;
            return cmd_verify(cfg);
        }
        if (table->parsed()) {
            if (table_ns.empty()) table_ns = {cfg.n};
            return cmd_table(table_ns, table_diagrams, cfg.a_spec, cfg.rep_index, cfg.format);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: diagram parse failed: " << e.what() << "\n";
        return 1;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const SchurViolationError& e) {
        std::cerr << "error: Schur check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

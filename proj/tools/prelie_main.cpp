// prelie: command-line front end.
//
// Exit codes: 0 = every verdict as predicted, 1 = a falsification witness was
// produced, 2 = usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include "prelie/verify.hpp"

namespace {

using prelie::json;

struct Globals {
    std::string field = "q";
    std::size_t n = 0;
    std::string weight = "0";
    std::uint64_t cap = 10'000'000;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::string out;
    std::string algebra;
};

class UsageError : public prelie::Error {
    using prelie::Error::Error;
};

// Accepts a path or inline JSON text.
json read_json(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        return json::parse(arg);
    }
    std::ifstream in(arg);
    if (!in) {
        throw UsageError("cannot read " + arg);
    }
    return json::parse(in);
}

void emit(const Globals& g, const json& j) {
    if (g.out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(g.out);
    if (!out) {
        throw UsageError("cannot write " + g.out);
    }
    out << j.dump(2) << "\n";
}

prelie::Algebra load_algebra(const Globals& g, prelie::Char2 char2 = prelie::Char2::reject) {
    if (!g.algebra.empty()) {
        return prelie::algebra_from_json(read_json(g.algebra));
    }
    if (g.n == 0) {
        throw UsageError("give --algebra FILE or --n N (with --field) for I_N");
    }
    return prelie::build_In(prelie::parse_field_name(g.field, char2), g.n);
}

prelie::ScanOptions scan_options(const Globals& g) {
    prelie::ScanOptions o;
    o.cap = g.cap;
    o.workers = g.workers;
    return o;
}

std::vector<prelie::Scalar> weights(prelie::Field f, const std::string& spec) {
    if (spec == "all") {
        return prelie::enumerate_field(f);
    }
    return {f.parse(spec)};
}

prelie::IdentityKind identity_from_name(const std::string& s) {
    using prelie::IdentityKind;
    static const std::map<std::string, IdentityKind> names{
        {"pre_lie", IdentityKind::pre_lie},
        {"novikov", IdentityKind::novikov},
        {"flexible", IdentityKind::flexible},
        {"commutative", IdentityKind::commutative},
        {"third_power_associative", IdentityKind::third_power_associative},
        {"lie", IdentityKind::lie},
    };
    auto it = names.find(s);
    if (it == names.end()) {
        throw UsageError("unknown identity \"" + s + "\"");
    }
    return it->second;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for the pre-Lie algebras I_n"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--field", g.field, "Field: q, qi, gfP, gf9, gfP(sqrtD), q(sqrtD)");
    app.add_option("--n", g.n, "Dimension of I_n");
    app.add_option("--weight", g.weight, "Weight lambda as a scalar literal, or 'all'");
    app.add_option("--cap", g.cap, "Maximum number of brute-force candidates")->check(CLI::PositiveNumber);
    app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized cross-checks");
    app.add_option("--out", g.out, "Write JSON here instead of stdout");
    app.add_option("--algebra", g.algebra, "Algebra JSON file (or inline JSON)");

    auto* build = app.add_subcommand("build", "Emit the structure constants of a family member");
    std::string family = "in";
    std::string ex1_vector;
    build->add_option("--family", family, "in | ex1 | un | iinf")->check(CLI::IsMember({"in", "ex1", "un", "iinf"}));
    build->add_option("--a", ex1_vector, "Comma-separated coordinates of a for ex1 (default e_n)");

    auto* identity = app.add_subcommand("check-identity", "Check a polynomial identity");
    std::string identity_name = "pre_lie";
    identity->add_option("--identity", identity_name, "pre_lie | novikov | flexible | commutative | "
                                                      "third_power_associative | lie");

    auto* simplicity = app.add_subcommand("simplicity", "Exhaustive simplicity test over a finite field");
    bool plus = false;
    simplicity->add_flag("--plus", plus, "Test the symmetrized algebra (ab + ba)/2 instead");

    auto* derivations = app.add_subcommand("derivations", "Basis of the derivation algebra");

    auto* automorphisms = app.add_subcommand("automorphisms", "Verify or enumerate automorphisms");
    std::string aut_matrix;
    bool aut_enumerate = false;
    automorphisms->add_option("--matrix", aut_matrix, "Matrix JSON to verify");
    automorphisms->add_flag("--enumerate", aut_enumerate, "Enumerate all automorphisms (finite fields)");

    auto* rb_verify = app.add_subcommand("rb-verify", "Check one Rota-Baxter operator");
    std::string op;
    rb_verify->add_option("--op", op, "Operator matrix JSON")->required();

    auto* rb_enumerate = app.add_subcommand("rb-enumerate", "All RB operators over a finite field");
    bool summary_only = false;
    rb_enumerate->add_flag("--counts", summary_only, "Only report counts per weight");

    auto* rb_index = app.add_subcommand("rb-index", "Rota-Baxter lambda-index over a finite field");

    auto* decompose = app.add_subcommand("decompose", "Subalgebra decompositions of I_n, or of a splitting operator");
    std::string decompose_op;
    decompose->add_option("--op", decompose_op, "Operator matrix JSON: report (ker R, ker(R + lambda E))");

    auto* verify = app.add_subcommand("verify-theorems", "Run a verification suite");
    std::string suite = "all";
    std::size_t max_n = 4;
    std::string fields = "q,gf3,gf5,qi";
    bool no_timing = false;
    verify->add_option("--suite", suite, "prelim | t1 | t2 | cor | examples | remarks | all");
    verify->add_option("--max-n", max_n, "Largest n for field-ranged checks")->check(CLI::Range(2, 12));
    verify->add_option("--fields", fields, "Comma-separated field names");
    verify->add_flag("--no-timing", no_timing, "Omit elapsed times (byte-identical reports)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            prelie::Field f = prelie::parse_field_name(g.field);
            if (g.n == 0) {
                throw UsageError("build needs --n");
            }
            if (family == "in") {
                emit(g, prelie::algebra_to_json(prelie::build_In(f, g.n)));
            } else if (family == "ex1") {
                prelie::Vector a = prelie::Vector::unit(f, g.n, g.n - 1);
                if (!ex1_vector.empty()) {
                    auto parts = split_commas(ex1_vector);
                    if (parts.size() != g.n) {
                        throw UsageError("--a needs exactly n coordinates");
                    }
                    for (std::size_t i = 0; i < g.n; ++i) {
                        a[i] = f.parse(parts[i]);
                    }
                }
                emit(g, prelie::algebra_to_json(prelie::build_example1(f, g.n, a)));
            } else if (family == "un") {
                emit(g, prelie::algebra_to_json(prelie::build_Un_circ(f, g.n).algebra));
            } else {
                emit(g, prelie::algebra_to_json(prelie::build_I_infinity_truncation(f, g.n)));
            }
            return 0;
        }
        if (identity->parsed()) {
            const prelie::Algebra a = load_algebra(g);
            const prelie::Report r = prelie::check_identity(a, identity_from_name(identity_name));
            json out = prelie::report_to_json(r);
            out["identity"] = identity_name;
            emit(g, out);
            return 0;
        }
        if (simplicity->parsed()) {
            prelie::Algebra a = load_algebra(g, prelie::Char2::allow);
            if (plus) {
                a = prelie::plus_algebra(a);
            }
            const auto r = prelie::is_simple_finite(a, g.cap, g.workers);
            json out{{"simple", r.report.holds}, {"message", r.report.message}};
            out["witness_ideal"] = r.witness_ideal ? prelie::subspace_to_json(*r.witness_ideal) : json();
            emit(g, out);
            return 0;
        }
        if (derivations->parsed()) {
            const prelie::Algebra a = load_algebra(g);
            json basis = json::array();
            for (const auto& d : prelie::derivation_basis(a)) {
                basis.push_back(prelie::matrix_to_json(d));
            }
            const std::size_t dim = basis.size();
            emit(g, {{"dim", dim}, {"basis", basis}});
            return 0;
        }
        if (automorphisms->parsed()) {
            const prelie::Algebra a = load_algebra(g);
            if (!aut_matrix.empty()) {
                const prelie::Matrix m = prelie::matrix_from_json(a.field(), read_json(aut_matrix));
                json out = prelie::report_to_json(prelie::is_automorphism(a, m));
                if (prelie::burde_dimension(a) && m.rows() == a.dim()) {
                    const auto res = prelie::theorem1_residuals(a, {m, prelie::MapMode::automorphism});
                    const auto* bad = prelie::first_nonzero(res);
                    out["first_nonzero_residual"] = bad ? json{{"name", bad->name}, {"value", bad->value.to_string()}}
                                                        : json();
                }
                emit(g, out);
                return 0;
            }
            if (!a.field().is_finite()) {
                throw UsageError("automorphism enumeration needs a finite field; pass --matrix to verify one map");
            }
            json list = json::array();
            for (const auto& m : prelie::enumerate_automorphisms_finite(a, scan_options(g))) {
                list.push_back(prelie::matrix_to_json(m));
            }
            const std::size_t count = list.size();
            emit(g, {{"count", count}, {"automorphisms", list}});
            return 0;
        }
        if (rb_verify->parsed()) {
            const prelie::Algebra a = load_algebra(g);
            const prelie::Matrix m = prelie::matrix_from_json(a.field(), read_json(op));
            const json out = prelie::rb_summary(a, {m, a.field().parse(g.weight)});
            emit(g, out);
            return prelie::rb_summary_falsifies(out) ? 1 : 0;
        }
        if (rb_enumerate->parsed()) {
            const prelie::Algebra a = load_algebra(g);
            json groups = json::array();
            bool falsified = false;
            for (const auto& lambda : weights(a.field(), g.weight)) {
                json ops = json::array();
                const auto found = prelie::enumerate_rb_finite(a, lambda, scan_options(g));
                for (const auto& r : found) {
                    json s = prelie::rb_summary(a, r);
                    falsified = falsified || prelie::rb_summary_falsifies(s);
                    if (!summary_only) {
                        ops.push_back(std::move(s));
                    }
                }
                json grp{{"weight", lambda.to_string()}, {"count", found.size()}};
                if (!summary_only) {
                    grp["operators"] = std::move(ops);
                }
                groups.push_back(std::move(grp));
            }
            emit(g, {{"field", prelie::field_to_json(a.field())}, {"dim", a.dim()}, {"weights", groups}});
            return falsified ? 1 : 0;
        }
        if (rb_index->parsed()) {
            const prelie::Algebra a = load_algebra(g);
            json out = json::array();
            bool falsified = false;
            for (const auto& lambda : weights(a.field(), g.weight)) {
                const auto idx = prelie::rb_index_finite(a, lambda, scan_options(g));
                out.push_back({{"weight", lambda.to_string()}, {"rb_index", idx ? json(*idx) : json("infinity")}});
                falsified = falsified || (prelie::burde_dimension(a) && (!idx || *idx > 2));
            }
            emit(g, out);
            return falsified ? 1 : 0;
        }
        if (decompose->parsed()) {
            const prelie::Algebra a = load_algebra(g);
            if (!decompose_op.empty()) {
                const prelie::Matrix m = prelie::matrix_from_json(a.field(), read_json(decompose_op));
                const prelie::RBOperator r{m, a.field().parse(g.weight)};
                const prelie::Decomposition d = prelie::kernel_decomposition(r);
                json out = prelie::decomposition_to_json(d);
                out["is_splitting"] = prelie::is_splitting(r);
                emit(g, out);
                return 0;
            }
            json list = json::array();
            bool falsified = false;
            for (const auto& c : prelie::lagrangian_decompositions_finite(a, scan_options(g))) {
                json j = prelie::decomposition_to_json(c.decomposition);
                j["shape"] = prelie::to_string(c.shape);
                falsified = falsified || c.shape == prelie::DecompositionShape::violation;
                list.push_back(std::move(j));
            }
            emit(g, {{"count", list.size()}, {"decompositions", list}});
            return falsified ? 1 : 0;
        }
        if (verify->parsed()) {
            prelie::VerifyConfig cfg;
            cfg.suite = suite;
            cfg.seed = g.seed;
            cfg.max_n = max_n;
            cfg.fields = split_commas(fields);
            cfg.cap = g.cap;
            cfg.workers = g.workers;
            const prelie::VerifyReport rep = prelie::verify_theorems(cfg);
            emit(g, prelie::to_json(rep, !no_timing));
            for (const auto& r : rep.records) {
                std::cerr << (r.passed ? "pass " : "FAIL ") << r.suite << "/" << r.name << "\n";
            }
            return rep.passed() ? 0 : 1;
        }
    } catch (const prelie::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

/* Subcommand dispatch for the branchq tool.  Exit codes: 0 success,
   1 verification failure, 2 usage error. */

#include "branchq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "branchq/appendix.hpp"
#include "branchq/branching.hpp"
#include "branchq/characters.hpp"
#include "branchq/coeffs.hpp"
#include "branchq/dimension.hpp"
#include "branchq/ktheory.hpp"
#include "branchq/linalg.hpp"
#include "branchq/points.hpp"
#include "branchq/quiver.hpp"
#include "branchq/serialize.hpp"

namespace branchq {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FamilyArgs {
    std::string family_text;
    int n = 0;
    int d = -1;
    int p = -1;
    int q = -1;
};

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
    cmd->add_option("--family", a.family_text, "Matrix family: A, B, C, D, or E")->required();
    cmd->add_option("--n", a.n, "Diagonal embedding multiplicity")->required();
    cmd->add_option("--d", a.d, "Degree (families A and B)");
    cmd->add_option("--p", a.p, "First degree parameter (families C, D, E)");
    cmd->add_option("--q", a.q, "Second degree parameter (family C)");
}

Family parse_family(const std::string& text) {
    if (text.size() != 1) throw UsageError("unknown family '" + text + "'");
    return family_from_letter(text[0]);  // throws invalid_argument on bad letter
}

std::string matrix_name(Family f, int n, const std::vector<int>& params) {
    std::ostringstream s;
    s << family_letter(f) << '^' << n << '_';
    s << '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s << ',';
        s << params[i];
    }
    s << ')';
    return s.str();
}

BranchingMatrix build_matrix(const FamilyArgs& a, std::ostream& err) {
    const Family fam = parse_family(a.family_text);
    switch (fam) {
        case Family::A:
        case Family::B: {
            const int d = a.d >= 0 ? a.d : a.p;
            if (d < 0) throw UsageError("families A and B need --d");
            if (d >= 6) err << "computing " << matrix_name(fam, a.n, {d}) << "...\n";
            return type1(a.n, d, fam);
        }
        case Family::C: {
            if (a.p < 0 || a.q < 0) throw UsageError("family C needs --p and --q");
            if (a.p + a.q >= 5)
                err << "computing " << matrix_name(fam, a.n, {a.p, a.q}) << "...\n";
            return type2(a.n, a.p, a.q);
        }
        case Family::D:
        case Family::E: {
            const int p = a.p >= 0 ? a.p : a.d;
            if (p < 0) throw UsageError("families D and E need --p");
            if (p >= 5) err << "computing " << matrix_name(fam, a.n, {p}) << "...\n";
            return fam == Family::D ? sp_matrix(a.n, p) : so_matrix(a.n, p);
        }
    }
    throw UsageError("unknown family '" + a.family_text + "'");
}

std::string resolve_format(const std::string& flag, const char* builtin,
                           const std::vector<std::string>& allowed) {
    auto ok = [&](const std::string& f) {
        return std::find(allowed.begin(), allowed.end(), f) != allowed.end();
    };
    if (!flag.empty()) {
        if (!ok(flag)) throw UsageError("format '" + flag + "' not supported here");
        return flag;
    }
    if (const char* env = std::getenv("BRANCHQ_FORMAT")) {
        // The environment variable only supplies a default; ignore it when
        // this subcommand cannot honor it.
        if (ok(env)) return env;
    }
    return builtin;
}

int emit(const std::string& text, const std::string& path, std::ostream& out,
         std::ostream& err) {
    if (path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "cannot open '" << path << "' for writing\n";
        return 2;
    }
    f << text;
    return 0;
}

IntVector parse_int_vector(const std::string& text) {
    IntVector out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        try {
            out.push_back(Int(item));
        } catch (const std::exception&) {
            throw UsageError("bad integer '" + item + "' in vector");
        }
    }
    if (out.empty()) throw UsageError("empty vector");
    return out;
}

json json_big(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return json(static_cast<long long>(v));
    return json(v.str());
}

CoefficientKind coefficient_kind(const std::string& name) {
    static const std::vector<std::pair<std::string, CoefficientKind>> kinds = {
        {"lr", CoefficientKind::LR},           {"lr-multi", CoefficientKind::LR_MULTI},
        {"c-pair", CoefficientKind::C_PAIR},   {"d-pair", CoefficientKind::D_PAIR},
        {"cap-c", CoefficientKind::CAP_C},     {"cap-d", CoefficientKind::CAP_D},
        {"e-small", CoefficientKind::E_SMALL}, {"f-small", CoefficientKind::F_SMALL},
        {"g-small", CoefficientKind::G_SMALL}, {"cap-e", CoefficientKind::CAP_E},
        {"cap-f", CoefficientKind::CAP_F},     {"cap-g", CoefficientKind::CAP_G},
    };
    for (const auto& [n, k] : kinds)
        if (n == name) return k;
    std::string valid;
    for (const auto& [n, k] : kinds) valid += (valid.empty() ? "" : ", ") + n;
    throw UsageError("unknown coefficient kind '" + name + "' (valid: " + valid + ")");
}

bool pair_kind(CoefficientKind k) {
    return k == CoefficientKind::C_PAIR || k == CoefficientKind::D_PAIR ||
           k == CoefficientKind::CAP_C || k == CoefficientKind::CAP_D;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"branchq: stable branching matrices of diagonal embeddings"};
    app.require_subcommand(1);

    FamilyArgs matrix_args, spectra_args, quiver_args, dimcheck_args, bratteli_args, k0_args;
    std::string matrix_format, chartable_format, quiver_format, dimcheck_format, coeff_format;
    std::string output_path;
    app.add_option("-o,--output", output_path, "Write the result to a file instead of stdout");

    auto* matrix_cmd = app.add_subcommand("matrix", "Emit a stable branching matrix")->fallthrough();
    add_family_options(matrix_cmd, matrix_args);
    matrix_cmd->add_option("--format", matrix_format)
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string coeff_kind_text;
    std::vector<std::string> coeff_args;
    auto* coeff_cmd = app.add_subcommand("coeff", "Evaluate one branching coefficient")->fallthrough();
    coeff_cmd->add_option("--kind", coeff_kind_text, "Coefficient kind, e.g. lr or cap-c")
        ->required();
    coeff_cmd->add_option("args", coeff_args, "Partition or partition-pair arguments");
    coeff_cmd->add_option("--format", coeff_format)->check(CLI::IsMember({"json", "text"}));

    int chartable_d = 0;
    auto* chartable_cmd = app.add_subcommand("chartable", "Emit a symmetric group character table")->fallthrough();
    chartable_cmd->add_option("d", chartable_d, "Degree of the symmetric group")->required();
    chartable_cmd->add_option("--format", chartable_format)
        ->check(CLI::IsMember({"json", "csv"}));

    auto* spectra_cmd = app.add_subcommand("spectra", "Eigenvalue data for a branching matrix")->fallthrough();
    add_family_options(spectra_cmd, spectra_args);

    bool quiver_dot = false;
    auto* quiver_cmd = app.add_subcommand("quiver", "Emit the quiver of a branching matrix")->fallthrough();
    add_family_options(quiver_cmd, quiver_args);
    quiver_cmd->add_flag("--dot", quiver_dot, "Emit Graphviz DOT text");
    quiver_cmd->add_option("--format", quiver_format)->check(CLI::IsMember({"json", "dot"}));

    int dimcheck_k = -1;
    auto* dimcheck_cmd =
        app.add_subcommand("dimcheck", "Check columns against classical Weyl dimensions")->fallthrough();
    add_family_options(dimcheck_cmd, dimcheck_args);
    dimcheck_cmd->add_option("--k", dimcheck_k, "Rank parameter of the small algebra")->required();
    dimcheck_cmd->add_option("--format", dimcheck_format)
        ->check(CLI::IsMember({"json", "text"}));

    int bratteli_stages = -1;
    std::string bratteli_init;
    auto* bratteli_cmd = app.add_subcommand("bratteli", "Unroll the stationary Bratteli diagram")->fallthrough();
    add_family_options(bratteli_cmd, bratteli_args);
    bratteli_cmd->add_option("--stages", bratteli_stages, "Number of transition stages")
        ->required();
    bratteli_cmd->add_option("--init", bratteli_init,
                             "Comma separated initial block sizes (default all ones)");

    std::string k0_vector_text;
    int k0_cap = 64;
    auto* k0_cmd = app.add_subcommand("k0", "Positivity of a K0 class over the quiver")->fallthrough();
    add_family_options(k0_cmd, k0_args);
    k0_cmd->add_option("--vector", k0_vector_text, "Comma separated integer class")->required();
    k0_cmd->add_option("--cap", k0_cap, "Iteration cap for the fallback test");

    std::vector<std::string> points_files;
    auto* points_cmd =
        app.add_subcommand("points-equiv", "Compare two point data sequences (exit 0 iff equivalent)")->fallthrough();
    points_cmd->add_option("files", points_files, "Two JSON sequence files")
        ->expected(2)
        ->check(CLI::ExistingFile);

    auto* verify_cmd =
        app.add_subcommand("verify-appendix", "Recompute the reference tables and compare")->fallthrough();

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            return app.exit(e, out, err) == 0 ? 0 : 2;
        }

        if (matrix_cmd->parsed()) {
            const BranchingMatrix m = build_matrix(matrix_args, err);
            const std::string fmt = resolve_format(matrix_format, "json", {"json", "csv", "text"});
            const std::string text =
                fmt == "json" ? to_json(m) : fmt == "csv" ? to_csv(m) : to_text(m);
            return emit(text, output_path, out, err);
        }

        if (coeff_cmd->parsed()) {
            CoefficientQuery q;
            q.kind = coefficient_kind(coeff_kind_text);
            for (const std::string& a : coeff_args) {
                if (pair_kind(q.kind))
                    q.pairs.push_back(parse_partition_pair(a));
                else
                    q.partitions.push_back(parse_partition(a));
            }
            const long long value = evaluate(q);
            const std::string fmt = resolve_format(coeff_format, "text", {"json", "text"});
            if (fmt == "json") {
                json j;
                j["kind"] = coeff_kind_text;
                j["value"] = value;
                return emit(j.dump(2) + "\n", output_path, out, err);
            }
            return emit(std::to_string(value) + "\n", output_path, out, err);
        }

        if (chartable_cmd->parsed()) {
            const CharacterTable t = character_table(chartable_d);
            const std::string fmt = resolve_format(chartable_format, "csv", {"json", "csv"});
            return emit(fmt == "json" ? to_json(t) : to_csv(t), output_path, out, err);
        }

        if (spectra_cmd->parsed()) {
            const Family fam = parse_family(spectra_args.family_text);
            if (fam == Family::A || fam == Family::B) {
                const int d = spectra_args.d >= 0 ? spectra_args.d : spectra_args.p;
                if (d < 0) throw UsageError("families A and B need --d");
                const SpectralCertificate cert = spectral_verify(spectra_args.n, d);
                const CharacterTable t = character_table(d, std::max(d, 10));
                json j;
                j["family"] = std::string(1, family_letter(fam));
                j["n"] = cert.n;
                j["d"] = cert.d;
                json classes = json::array();
                for (const Partition& c : cert.classes) classes.push_back(c.to_string());
                j["classes"] = std::move(classes);
                json evs = json::array();
                for (const Int& e : cert.eigenvalues) evs.push_back(json_big(e));
                j["eigenvalues"] = std::move(evs);
                json vecs = json::array();
                for (std::size_t col = 0; col < t.cols.size(); ++col) {
                    json v = json::array();
                    for (std::size_t row = 0; row < t.rows.size(); ++row)
                        v.push_back(json_big(t.values[row][col]));
                    vecs.push_back(std::move(v));
                }
                j["eigenvectors"] = std::move(vecs);
                j["identity_holds"] = cert.identity_holds;
                j["invertible"] = cert.invertible;
                const int rc = emit(j.dump(2) + "\n", output_path, out, err);
                return rc != 0 ? rc : (cert.valid() ? 0 : 1);
            }
            const BranchingMatrix m = build_matrix(spectra_args, err);
            json j;
            j["family"] = std::string(1, family_letter(m.family));
            j["n"] = m.n;
            j["params"] = m.params;
            json evs = json::array();
            for (const Int& e : block_eigenvalues(m)) evs.push_back(json_big(e));
            j["eigenvalues"] = std::move(evs);
            return emit(j.dump(2) + "\n", output_path, out, err);
        }

        if (quiver_cmd->parsed()) {
            const Quiver q = quiver_of(build_matrix(quiver_args, err));
            std::string fmt = resolve_format(quiver_format, "json", {"json", "dot"});
            if (quiver_dot) fmt = "dot";
            return emit(fmt == "dot" ? to_dot(q) : to_json(q), output_path, out, err);
        }

        if (dimcheck_cmd->parsed()) {
            const BranchingMatrix m = build_matrix(dimcheck_args, err);
            const DimCheckReport report = dim_check(m, dimcheck_k);
            const std::string fmt = resolve_format(dimcheck_format, "text", {"json", "text"});
            const int rc =
                emit(fmt == "json" ? to_json(report) : to_text(report), output_path, out, err);
            return rc != 0 ? rc : (report.all_ok ? 0 : 1);
        }

        if (bratteli_cmd->parsed()) {
            const BranchingMatrix m = build_matrix(bratteli_args, err);
            const Quiver q = quiver_of(m);
            IntVector init;
            if (bratteli_init.empty())
                init.assign(q.vertices.size(), Int(1));
            else
                init = parse_int_vector(bratteli_init);
            const BratteliDiagram diagram = unroll(q, init, bratteli_stages);
            return emit(to_json(diagram), output_path, out, err);
        }

        if (k0_cmd->parsed()) {
            const BranchingMatrix m = build_matrix(k0_args, err);
            const Quiver q = quiver_of(m);
            K0Class u{0, parse_int_vector(k0_vector_text)};
            const ConeVerdict verdict = k0_verdict(q, u, k0_cap);
            json j;
            json verts = json::array();
            for (const Label& l : q.vertices) verts.push_back(label_text(l));
            j["vertices"] = std::move(verts);
            json vec = json::array();
            for (const Int& v : u.vector) vec.push_back(json_big(v));
            j["vector"] = std::move(vec);
            j["verdict"] = verdict == ConeVerdict::Inside      ? "inside"
                           : verdict == ConeVerdict::Outside   ? "outside"
                                                               : "indeterminate";
            // Iteration trace of the squared arrow matrix, up to the first
            // sign certification or the cap.
            const IntMatrix b = mat_mul(q.arrow_counts, q.arrow_counts);
            json trace = json::array();
            IntVector v = u.vector;
            for (int i = 0; i <= k0_cap; ++i) {
                json row = json::array();
                for (const Int& x : v) row.push_back(json_big(x));
                trace.push_back(std::move(row));
                const bool nonneg = std::all_of(v.begin(), v.end(),
                                                [](const Int& x) { return x >= 0; });
                const bool nonpos = std::all_of(v.begin(), v.end(),
                                                [](const Int& x) { return x <= 0; });
                if (nonneg || nonpos) break;
                v = mat_vec(b, v);
            }
            j["trace"] = std::move(trace);
            return emit(j.dump(2) + "\n", output_path, out, err);
        }

        if (points_cmd->parsed()) {
            std::vector<PointDataSequence> seqs;
            for (const std::string& path : points_files) {
                std::ifstream f(path, std::ios::binary);
                if (!f) {
                    err << "cannot read '" << path << "'\n";
                    return 2;
                }
                std::ostringstream buf;
                buf << f.rdbuf();
                try {
                    seqs.push_back(point_sequence_from_json(buf.str()));
                } catch (const std::invalid_argument& e) {
                    err << path << ": " << e.what() << '\n';
                    return 2;
                }
            }
            bool eq = false;
            try {
                eq = equivalent(seqs[0], seqs[1]);
            } catch (const std::invalid_argument&) {
                // Sequences over different quivers are never equivalent.
                eq = false;
            }
            out << (eq ? "equivalent" : "not equivalent") << '\n';
            return eq ? 0 : 1;
        }

        if (verify_cmd->parsed()) {
            const AppendixReport report = verify_appendix();
            std::ostringstream text;
            for (const AppendixEntry& e : report.entries) {
                const std::string name = matrix_name(e.family, e.n, e.params);
                err << "checked " << name << '\n';
                text << (e.match ? "ok   " : "FAIL ") << name << '\n';
            }
            text << (report.all_match ? "all tables match" : "table mismatch found") << '\n';
            const int rc = emit(text.str(), output_path, out, err);
            return rc != 0 ? rc : (report.all_match ? 0 : 1);
        }

        err << "no subcommand given\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace branchq

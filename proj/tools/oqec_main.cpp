// Copyright 2026 The oqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// oqec: check correction conditions, build recoveries and verify triples
// for problems stored as JSON files.
//
// Exit codes: 0 condition holds, 1 condition fails, 2 usage/parse/I-O error.

#include "oqec/channel.hpp"
#include "oqec/code.hpp"
#include "oqec/conditions.hpp"
#include "oqec/problem_file.hpp"
#include "oqec/recovery.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace oqec;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

enum class Format { Text, Machine };

struct Options {
    std::string file;
    std::optional<double> tol;
    Format format = Format::Text;
};

json complex_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

json lambda_json(const LambdaTensor &lambda) {
    json values = json::array();
    for (const Complex &z : lambda.values()) {
        values.push_back(complex_json(z));
    }
    return {
        {"order", std::string(to_string(lambda.order()))},
        {"shape", lambda.extents()},
        {"values", std::move(values)},
        {"residual", lambda.residual},
        {"hermiticity_defect", lambda.hermiticity_defect()},
    };
}

json report_json(const CheckReport &report) {
    json out = {
        {"condition", std::string(to_string(report.condition))},
        {"verdict", report.verdict},
        {"residual", report.residual},
        {"tol", report.tol},
        {"worst_index", report.worst_index},
        {"worst_term", report.worst_term},
    };
    if (!report.note.empty()) {
        out["note"] = report.note;
    }
    out["lambda"] = report.lambda ? lambda_json(*report.lambda) : json(nullptr);
    return out;
}

std::string format_complex(Complex z) {
    std::ostringstream s;
    s << std::setprecision(6) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return s.str();
}

void print_matrix(std::ostream &out, const ComplexMatrix &m, const std::string &indent) {
    for (Index i = 0; i < m.rows(); ++i) {
        out << indent;
        for (Index j = 0; j < m.cols(); ++j) {
            out << std::setw(22) << format_complex(m(i, j));
        }
        out << "\n";
    }
}

void print_lambda(std::ostream &out, const LambdaTensor &lambda) {
    const auto &ext = lambda.extents();
    switch (lambda.order()) {
        case LambdaOrder::Standard:
            out << "  lambda_ab (" << ext[0] << "x" << ext[1] << "):\n";
            print_matrix(out, lambda.standard_matrix(), "    ");
            break;
        case LambdaOrder::NS:
            for (Index a = 0; a < ext[0]; ++a) {
                ComplexMatrix block(ext[1], ext[2]);
                for (Index k = 0; k < ext[1]; ++k) {
                    for (Index l = 0; l < ext[2]; ++l) {
                        block(k, l) = lambda.at({a, k, l});
                    }
                }
                out << "  lambda_akl, a = " << a << ":\n";
                print_matrix(out, block, "    ");
            }
            break;
        case LambdaOrder::OQEC:
            out << "  lambda_abkl as ((a,k), (b,l)) matrix, row a*m+k:\n";
            print_matrix(out, lambda.oqec_matrix(), "    ");
            break;
    }
}

void print_report_text(std::ostream &out, const std::string &title, const CheckReport &report) {
    out << title << ": " << (report.verdict ? "PASS" : "FAIL") << "\n";
    out << "  condition   " << to_string(report.condition) << "\n";
    out << "  residual    " << std::scientific << std::setprecision(3) << report.residual << " (tol " << report.tol
        << ")" << std::defaultfloat << "\n";
    if (!report.worst_index.empty()) {
        out << "  worst at    (";
        for (std::size_t i = 0; i < report.worst_index.size(); ++i) {
            out << (i ? ", " : "") << report.worst_index[i];
        }
        out << ")  " << report.worst_term << "\n";
    }
    if (!report.note.empty()) {
        out << "  note        " << report.note << "\n";
    }
    if (report.lambda) {
        print_lambda(out, *report.lambda);
    }
}

struct Loaded {
    ProblemFile problem;
    double tol;
};

Loaded load(const Options &opts) {
    Loaded loaded{read_problem(opts.file), 0.0};
    loaded.tol = opts.tol.value_or(loaded.problem.tol);
    return loaded;
}

// No recovery needed: the triple condition already holds with R = id.
bool identity_suffices(const QuantumChannel &ch, const SubsystemDecomposition &dec, double tol) {
    return check_correctable_triple(QuantumChannel::identity(dec.dim()), ch, dec, tol).verdict;
}

std::optional<CodeClass> class_if(bool verdict, const SubsystemDecomposition &dec, bool identity_recovery) {
    if (!verdict) {
        return std::nullopt;
    }
    return classify(dec, identity_recovery);
}

json class_json(const std::optional<CodeClass> &c) {
    return c ? json(std::string(to_string(*c))) : json(nullptr);
}

void print_class_text(std::ostream &out, const std::optional<CodeClass> &c) {
    out << "class: " << (c ? std::string(to_string(*c)) : std::string("none (condition fails)")) << "\n";
}

int cmd_check(const std::string &kind, const Options &opts) {
    const Loaded in = load(opts);
    const QuantumChannel ch = in.problem.channel();
    const SubsystemDecomposition dec = in.problem.decomposition();

    CheckReport report;
    std::optional<CheckReport> secondary;
    std::optional<CodeClass> code_class;
    if (kind == "cptp") {
        report = is_cptp(ch, in.tol);
    } else if (kind == "kl") {
        if (dec.m() != 1) {
            throw std::invalid_argument("check kl needs a subspace code (m = 1); use check oqec");
        }
        report = check_kl(ch, dec, in.tol);
        code_class = class_if(report.verdict, dec, identity_suffices(ch, dec, in.tol));
    } else if (kind == "ns") {
        report = check_ns_algebraic(ch, dec, in.tol);
        secondary = check_ns_operational(ch, dec, in.tol);
        code_class = class_if(report.verdict, dec, true);
    } else if (kind == "oqec") {
        report = check_oqec(ch, dec, in.tol);
        code_class = class_if(report.verdict, dec, identity_suffices(ch, dec, in.tol));
    } else if (kind == "triple") {
        const auto r = in.problem.recovery_channel();
        if (!r) {
            throw std::invalid_argument("check triple needs a \"recovery\" entry in " + opts.file);
        }
        report = check_correctable_triple(*r, ch, dec, in.tol);
        code_class = class_if(report.verdict, dec, identity_suffices(ch, dec, in.tol));
    }

    if (opts.format == Format::Machine) {
        json out = report_json(report);
        out["command"] = "check";
        out["kind"] = kind;
        out["file"] = opts.file;
        if (secondary) {
            out["operational"] = report_json(*secondary);
        }
        if (kind != "cptp") {
            out["classification"] = class_json(code_class);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        print_report_text(std::cout, "check " + kind, report);
        if (secondary) {
            print_report_text(std::cout, "check ns (operational)", *secondary);
        }
        if (kind != "cptp") {
            print_class_text(std::cout, code_class);
        }
    }
    return report.verdict ? kExitPass : kExitFail;
}

int cmd_recover(const Options &opts, const std::string &out_path) {
    const Loaded in = load(opts);
    const QuantumChannel ch = in.problem.channel();
    const SubsystemDecomposition dec = in.problem.decomposition();

    const CheckReport condition = dec.m() == 1 ? check_kl(ch, dec, in.tol) : check_oqec(ch, dec, in.tol);
    json out = {{"command", "recover"}, {"file", opts.file}, {"condition", report_json(condition)}};
    if (!condition.verdict) {
        if (opts.format == Format::Machine) {
            out["recovery_written"] = false;
            std::cout << out.dump(2) << "\n";
        } else {
            print_report_text(std::cout, "recover: condition", condition);
            std::cout << "no recovery built\n";
        }
        return kExitFail;
    }

    const QuantumChannel r =
        dec.m() == 1 ? build_standard_recovery(ch, dec, *condition.lambda, in.tol) : build_oqec_recovery(ch, dec, in.tol);
    ProblemFile written = in.problem;
    written.recovery = r.kraus();
    write_problem(written, out_path);

    const CheckReport verification = check_opalg_correct(r, ch, dec, in.tol);
    const CheckReport cptp = is_cptp(r, in.tol);
    const CheckReport identity_suffices =
        check_correctable_triple(QuantumChannel::identity(dec.dim()), ch, dec, in.tol);
    const CodeClass code_class = classify(dec, identity_suffices.verdict);
    const bool ok = verification.verdict && cptp.verdict;

    if (opts.format == Format::Machine) {
        out["recovery_written"] = true;
        out["out"] = out_path;
        out["num_kraus"] = r.size();
        out["verification"] = report_json(verification);
        out["recovery_cptp"] = report_json(cptp);
        out["identity_recovery"] = report_json(identity_suffices);
        out["classification"] = std::string(to_string(code_class));
        std::cout << out.dump(2) << "\n";
    } else {
        print_report_text(std::cout, "recover: condition", condition);
        std::cout << "wrote " << r.size() << " Kraus operators to " << out_path << "\n";
        print_report_text(std::cout, "recover: verification", verification);
        print_report_text(std::cout, "recover: recovery is CPTP", cptp);
        print_report_text(std::cout, "recover: identity recovery", identity_suffices);
        print_class_text(std::cout, code_class);
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_verify(const Options &opts) {
    const Loaded in = load(opts);
    const auto r = in.problem.recovery_channel();
    if (!r) {
        throw std::invalid_argument("verify needs a \"recovery\" entry in " + opts.file);
    }
    const QuantumChannel ch = in.problem.channel();
    const SubsystemDecomposition dec = in.problem.decomposition();
    const CheckReport triple = check_correctable_triple(*r, ch, dec, in.tol);
    const CheckReport opalg = check_opalg_correct(*r, ch, dec, in.tol);
    const bool ok = triple.verdict && opalg.verdict;

    if (opts.format == Format::Machine) {
        json out = {
            {"command", "verify"},
            {"file", opts.file},
            {"verdict", ok},
            {"triple", report_json(triple)},
            {"opalg", report_json(opalg)},
        };
        std::cout << out.dump(2) << "\n";
    } else {
        print_report_text(std::cout, "verify: correctable triple", triple);
        print_report_text(std::cout, "verify: (R o E)(sigma) = sigma", opalg);
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_classify(const Options &opts) {
    const Loaded in = load(opts);
    const QuantumChannel ch = in.problem.channel();
    const SubsystemDecomposition dec = in.problem.decomposition();

    CheckReport basis;
    if (const auto r = in.problem.recovery_channel()) {
        basis = check_correctable_triple(*r, ch, dec, in.tol);
    } else {
        basis = check_oqec(ch, dec, in.tol);
    }
    const bool identity_recovery = identity_suffices(ch, dec, in.tol);
    const auto code_class = class_if(basis.verdict, dec, identity_recovery);

    if (opts.format == Format::Machine) {
        json out = {
            {"command", "classify"},
            {"file", opts.file},
            {"verdict", basis.verdict},
            {"basis", report_json(basis)},
            {"identity_suffices", identity_recovery},
            {"classification", class_json(code_class)},
        };
        std::cout << out.dump(2) << "\n";
    } else {
        print_report_text(std::cout, "classify", basis);
        print_class_text(std::cout, code_class);
    }
    return basis.verdict ? kExitPass : kExitFail;
}

void add_common(CLI::App *cmd, Options &opts) {
    cmd->add_option("file", opts.file, "Problem file (JSON)")->required();
    cmd->add_option("--tol", opts.tol, "Absolute Frobenius tolerance (default: file value or 1e-9)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "Report format: text (default) or machine (JSON)")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text},
                                                                          {"machine", Format::Machine}},
                                            CLI::ignore_case)
                        .description(""))
        ->type_name("text|machine");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Operator quantum error correction: condition checks and recovery synthesis"};
    app.require_subcommand(1);

    Options opts;
    std::string kind;
    std::string out_path;

    auto *check = app.add_subcommand("check", "Check a correction condition");
    check->add_option("kind", kind, "Condition to check")
        ->required()
        ->check(CLI::IsMember({"cptp", "kl", "ns", "oqec", "triple"}));
    add_common(check, opts);

    auto *recover = app.add_subcommand("recover", "Build a recovery channel and write it out");
    add_common(recover, opts);
    recover->add_option("--out", out_path, "Output problem file including the recovery")->required();

    auto *verify = app.add_subcommand("verify", "Verify the recovery stored in a problem file");
    add_common(verify, opts);

    auto *classify_cmd = app.add_subcommand("classify", "Report the special case of operator QEC");
    add_common(classify_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitError;
    }

    try {
        if (check->parsed()) {
            return cmd_check(kind, opts);
        }
        if (recover->parsed()) {
            return cmd_recover(opts, out_path);
        }
        if (verify->parsed()) {
            return cmd_verify(opts);
        }
        if (classify_cmd->parsed()) {
            return cmd_classify(opts);
        }
    } catch (const ParseError &e) {
        std::cerr << "error: " << opts.file << ": " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

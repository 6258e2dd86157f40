#include "exactla/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "exactla/charpoly.hpp"
#include "exactla/error.hpp"
#include "exactla/json_io.hpp"
#include "exactla/suite.hpp"
#include "exactla/verifier.hpp"

namespace exactla {

using nlohmann::json;

namespace {

struct Flags {
    std::string ring;
    std::string matrix = "-";
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t size = 0;
    bool newton = false;
    bool via_charpoly = false;
    std::optional<std::size_t> imax;
    std::optional<std::uint32_t> k;
    std::optional<std::uint64_t> p;
    std::string derivation;
    std::string out;
    std::string inject_fault;
};

json parse_json(const std::string& text, const std::string& what)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(what + ": invalid JSON: " + e.what());
    }
}

Matrix<Ring> load_matrix(const Flags& f, std::istream& in)
{
    std::string text;
    if (f.matrix == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else if (auto pos = f.matrix.find_first_not_of(" \t\n"); pos != std::string::npos && f.matrix[pos] == '{') {
        text = f.matrix;
    } else {
        std::ifstream file(f.matrix);
        if (!file)
            throw ParseError("matrix: cannot open '" + f.matrix + "'");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    std::optional<Ring> ring;
    if (!f.ring.empty())
        ring = parse_ring(f.ring);
    return matrix_from_json(parse_json(text, "matrix"), ring);
}

SuiteOptions suite_options(const Flags& f)
{
    SuiteOptions o;
    o.k = f.k;
    o.p = f.p;
    o.imax = f.imax;
    if (!f.derivation.empty()) {
        const auto& d = f.derivation;
        o.derivation = d.front() == '{' || d.front() == '"' ? parse_json(d, "derivation") : json(d);
    }
    return o;
}

int emit_reports(const std::vector<VerificationReport>& reports, std::ostream& out, std::ostream& err)
{
    json arr = json::array();
    for (const auto& r : reports)
        arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
    const auto s = summarize(reports);
    err << summary_line(s) << '\n';
    for (const auto& r : reports)
        if (r.outcome == Outcome::failed)
            err << "violation: " << r.identity << ": " << r.note << '\n';
    return s.failed > 0 ? exit_violation : exit_ok;
}

void add_common(CLI::App* cmd, Flags& f)
{
    cmd->add_option("--ring", f.ring, "ring: int, rat, mod:<m>, poly:<ring> or descriptor JSON");
    cmd->add_option("--out", f.out, "write the result here instead of stdout");
}

void add_matrix(CLI::App* cmd, Flags& f)
{
    cmd->add_option("--matrix", f.matrix, "matrix JSON: a path, - for stdin, or inline JSON");
}

void add_suite_params(CLI::App* cmd, Flags& f)
{
    cmd->add_option("--imax", f.imax, "largest i checked by nilpotency_converse (default 2n+1)");
    cmd->add_option("--k", f.k, "exponent for almkvist (default: smallest k with A^(k+1) = 0)");
    cmd->add_option("--p", f.p, "prime for frobenius (default: the characteristic if prime)");
    cmd->add_option("--derivation", f.derivation, "zero, ddt or {\"gddt\": g} (default: cycles through all)");
    cmd->add_option("--inject-fault", f.inject_fault)->group("");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact linear algebra over commutative rings and identity checks.", "exactla"};
    app.require_subcommand(1);
    Flags f;

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial, its coefficients and the D_k matrices");
    add_common(charpoly, f);
    add_matrix(charpoly, f);
    charpoly->add_flag("--newton", f.newton, "use the power-trace recursion when the ring is a Q-algebra");

    auto* adjugate = app.add_subcommand("adjugate", "adjugate matrix");
    add_common(adjugate, f);
    add_matrix(adjugate, f);
    adjugate->add_flag("--via-charpoly", f.via_charpoly, "compute from the characteristic polynomial");

    auto* verify = app.add_subcommand("verify", "check a suite of identities on one matrix");
    add_common(verify, f);
    add_matrix(verify, f);
    verify->add_option("--suite", f.suite, "comma list of identities or groups, or all")->required();
    verify->add_option("--seed", f.seed, "seed for auxiliary inputs");
    add_suite_params(verify, f);

    auto* fuzz = app.add_subcommand("fuzz", "check identities on seeded random inputs");
    add_common(fuzz, f);
    fuzz->get_option("--ring")->required();
    fuzz->add_option("--suite", f.suite, "comma list of identities or groups, or all")->default_val("all");
    fuzz->add_option("--seed", f.seed, "64-bit seed")->required();
    fuzz->add_option("--count", f.count, "number of cases")->required();
    fuzz->add_option("--size", f.size, "largest matrix size")->required();
    add_suite_params(fuzz, f);

    std::vector<const char*> argv{"exactla"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    }

    std::ofstream file;
    if (!f.out.empty()) {
        file.open(f.out);
        if (!file) {
            err << "error: out: cannot write '" << f.out << "'\n";
            return exit_parse;
        }
    }
    std::ostream& dest = f.out.empty() ? out : file;

    try {
        std::optional<testing::ScopedFault> fault;
        if (!f.inject_fault.empty()) {
            const auto& ids = all_identities();
            if (std::find(ids.begin(), ids.end(), f.inject_fault) == ids.end())
                throw ParseError("inject-fault: unknown identity '" + f.inject_fault + "'");
            fault.emplace(f.inject_fault);
        }

        if (charpoly->parsed()) {
            const auto a = load_matrix(f, in);
            if (!a.is_square())
                throw ShapeError("entries: charpoly needs a square matrix");
            const auto cp = f.newton && a.ring().is_q_algebra() ? charpoly_newton(a) : charpoly_direct(a);
            dest << charpoly_to_json(cp).dump() << '\n';
            return exit_ok;
        }
        if (adjugate->parsed()) {
            const auto a = load_matrix(f, in);
            if (!a.is_square())
                throw ShapeError("entries: adjugate needs a square matrix");
            dest << matrix_to_json(f.via_charpoly ? adjugate_via_charpoly(a) : adjugate_cofactor(a)).dump() << '\n';
            return exit_ok;
        }
        if (verify->parsed()) {
            const auto ids = parse_suite(f.suite);
            if (ids.empty())
                throw ParseError("suite: no identities selected");
            const auto a = load_matrix(f, in);
            return emit_reports(run_suite(a, ids, f.seed, suite_options(f)), dest, err);
        }
        FuzzConfig cfg;
        cfg.ring = parse_ring(f.ring);
        cfg.size = f.size;
        cfg.count = f.count;
        cfg.seed = f.seed;
        cfg.ids = parse_suite(f.suite);
        cfg.opts = suite_options(f);
        return emit_reports(run_fuzz(cfg), dest, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_shape;
    }
}

} // namespace exactla

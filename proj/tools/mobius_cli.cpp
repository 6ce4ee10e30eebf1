// mobius: generate, transform and analyze ranked posets.
//
// Exit status 0 on success, 2 on any input or validation error. Results go
// to stdout, diagnostics to stderr.

#include "mobius/constructions.hpp"
#include "mobius/incidence.hpp"
#include "mobius/poset_io.hpp"
#include "mobius/series.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

using namespace mobius;

namespace {

constexpr int kInputError = 2;

struct Failure {
    std::string message;
};

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw Failure{"cannot write '" + out + "'"};
    f << text;
}

RankedPoset load_validated(const std::string& path)
{
    RankedPoset rp = read_poset_file(path);
    auto diags = validate(rp.poset, rp.ranks);
    if (!diags.empty()) {
        for (const auto& d : diags)
            std::cerr << path << ": " << d.message << '\n';
        throw Failure{path + ": invalid ranked poset"};
    }
    return rp;
}

void print_series(const char* name, const RationalSeries& s, std::size_t terms)
{
    std::cout << name << " = " << s.to_string() << '\n';
    std::cout << "coeffs: " << format_coefficients(series_expand(s, terms - 1)) << '\n';
}

int cmd_gen(const std::string& kind, long long param, const std::string& out)
{
    if (param < 0)
        throw Failure{"parameter must be nonnegative"};
    RankedPoset rp;
    if (kind == "chain")
        rp = chain(static_cast<std::size_t>(param));
    else if (kind == "boolean")
        rp = boolean(static_cast<unsigned>(std::min<long long>(param, max_boolean_rank + 1)));
    else if (kind == "divisor")
        rp = divisor_poset(static_cast<std::uint64_t>(param));
    else
        throw Failure{"unknown family '" + kind + "' (expected boolean, chain or divisor)"};
    emit(format_poset(rp), out);
    return 0;
}

int cmd_verify(const std::string& path)
{
    RankedPoset rp = read_poset_file(path);
    bool all = true;
    auto report = [&](const char* name, bool ok, const std::string& detail = {}) {
        all = all && ok;
        std::cout << name << ": " << (ok ? "PASS" : "FAIL");
        if (!detail.empty())
            std::cout << " (" << detail << ")";
        std::cout << '\n';
    };

    auto diags = validate(rp.poset, rp.ranks);
    report("validate", diags.empty(), diags.empty() ? "" : diags.front().message);
    for (std::size_t i = 1; i < diags.size(); ++i)
        std::cerr << path << ": " << diags[i].message << '\n';

    try {
        PolyMatrix zeta = zeta_matrix(rp);
        PolyMatrix mu = mobius_matrix(rp);
        PolyMatrix id = PolyMatrix::identity(rp.size());
        report("zeta*mu=delta", matrix_mul(zeta, mu) == id && matrix_mul(mu, zeta) == id);

        const auto& order = rp.poset.linext();
        bool agree = true;
        for (std::size_t i = 0; i < rp.size() && agree; ++i)
            for (std::size_t j = 0; j < rp.size() && agree; ++j) {
                std::size_t p = order[i], q = order[j];
                long long m = mobius_recursive(rp.poset, p, q);
                IntPolynomial expect = m == 0 ? IntPolynomial{} : IntPolynomial::monomial(static_cast<long>(m), rp.gap(p, q));
                agree = mu(i, j) == expect;
            }
        report("recursion-vs-inversion", agree);

        IntPolynomial M = mu.entry_sum();
        report("M(0)=|P|", M.evaluate(0) == static_cast<unsigned long>(rp.size()),
               "M(0) = " + M.evaluate(0).get_str());
    } catch (const IncidenceError& e) {
        report("zeta*mu=delta", false, e.what());
        report("recursion-vs-inversion", false, e.what());
        report("M(0)=|P|", false, e.what());
    }
    return all ? 0 : kInputError;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Möbius polynomials, Hilbert series and graded traces of ranked posets"};
    app.require_subcommand(1);

    std::string out, file, file_b, aut_file, kind;
    long long param = 0;
    std::size_t terms = 16, factor = 1;

    auto* gen = app.add_subcommand("gen", "Write a poset file for a standard family");
    gen->add_option("kind", kind, "boolean, chain or divisor")->required();
    gen->add_option("parameter", param, "n for boolean/divisor, s for chain")->required();
    gen->add_option("-o,--out", out, "Output path (default stdout)");

    auto* mob = app.add_subcommand("mobius", "Print the Möbius polynomial");
    mob->add_option("file", file)->required();

    auto* hil = app.add_subcommand("hilbert", "Print the Hilbert series of the splitting algebra");
    hil->add_option("file", file)->required();
    hil->add_option("--terms", terms, "Number of coefficients")->check(CLI::PositiveNumber);

    auto* tr = app.add_subcommand("trace", "Print the graded trace generating function of an automorphism");
    tr->add_option("file", file)->required();
    tr->add_option("--aut", aut_file, "Automorphism file")->required();
    tr->add_option("--terms", terms, "Number of coefficients")->check(CLI::PositiveNumber);

    auto* prod = app.add_subcommand("product", "Direct product of two posets");
    prod->add_option("first", file)->required();
    prod->add_option("second", file_b)->required();
    prod->add_option("-o,--out", out, "Output path (default stdout)");

    auto* resc = app.add_subcommand("rescale", "Multiply every rank by n");
    resc->add_option("file", file)->required();
    resc->add_option("n", factor)->required()->check(CLI::PositiveNumber);
    resc->add_option("-o,--out", out, "Output path (default stdout)");

    auto* fix = app.add_subcommand("fixed", "Subposet fixed by an automorphism");
    fix->add_option("file", file)->required();
    fix->add_option("--aut", aut_file, "Automorphism file")->required();
    fix->add_option("-o,--out", out, "Output path (default stdout)");

    auto* ver = app.add_subcommand("verify", "Run consistency checks on a poset file");
    ver->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    try {
        if (*gen)
            return cmd_gen(kind, param, out);
        if (*mob) {
            std::cout << mobius_polynomial(load_validated(file)) << '\n';
            return 0;
        }
        if (*hil) {
            print_series("H", hilbert_series(load_validated(file)), terms);
            return 0;
        }
        if (*tr) {
            auto base = std::make_shared<const RankedPoset>(load_validated(file));
            print_series("Tr", graded_trace(read_automorphism_file(aut_file, base)), terms);
            return 0;
        }
        if (*prod) {
            emit(format_poset(direct_product(load_validated(file), load_validated(file_b))), out);
            return 0;
        }
        if (*resc) {
            emit(format_poset(rescale(load_validated(file), factor)), out);
            return 0;
        }
        if (*fix) {
            auto base = std::make_shared<const RankedPoset>(load_validated(file));
            emit(format_poset(fixed_subposet(read_automorphism_file(aut_file, base))), out);
            return 0;
        }
        if (*ver)
            return cmd_verify(file);
    } catch (const Failure& f) {
        std::cerr << "mobius: " << f.message << '\n';
    } catch (const std::exception& e) {
        std::cerr << "mobius: " << e.what() << '\n';
    }
    return kInputError;
}

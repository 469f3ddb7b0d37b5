// Command-line front end: homology, permutation homology, stratification,
// subdivision invariance, and permutation calculus on builtin or file complexes.

#include <iostream>
#include <optional>
#include <string>
#include <CLI11.hpp>
#include "permhom/commands.hpp"

using namespace permhom;

namespace {

void add_permutation_options(CLI::App* sub, PermutationChoice& choice)
{
    auto* perm = sub->add_option("--perm", choice.perm, "permutation of 0..n, e.g. \"3,1,0,2\"");
    auto* perv = sub->add_option("--perversity", choice.perversity, "perversity p_0..p_n, e.g. \"0,0,1,1\"");
    perm->excludes(perv);
    perv->excludes(perm);
}

int emit(const CommandResult& r, bool json)
{
    bool failed = r.report.results.contains("error");
    if (json)
        r.report.print_json(failed ? std::cerr : std::cout);
    else
        r.report.print_text(failed ? std::cerr : std::cout);
    return r.exit_code;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"permhom: permutation homology and homology stratifications of simplicial complexes"};
    app.require_subcommand(1);
    bool json = false, timing = false;
    RenderOptions render;
    app.add_flag("--json", json, "print the report as JSON");
    app.add_flag("--primes", render.primes, "render torsion as prime powers");
    app.add_flag("--timing", timing, "report elapsed time");

    std::string input;
    auto* homology = app.add_subcommand("homology", "integral homology H_0..H_n");
    homology->add_option("input", input, "builtin name or complex file")->required();

    PermutationChoice choice;
    std::string method = "image";
    bool natural_map = false;
    auto* perm_homology = app.add_subcommand("perm-homology", "permutation homology H^pi_i");
    perm_homology->add_option("input", input, "builtin name or complex file")->required();
    add_permutation_options(perm_homology, choice);
    perm_homology->add_option("--method", method, "image, chain or both")
        ->check(CLI::IsMember({"image", "chain", "both"}));
    perm_homology->add_flag("--natural-map", natural_map, "also describe phi: H^pi_i -> H_i");

    bool strong = false, very_strong = false;
    std::optional<std::string> local_perm;
    auto* stratify_cmd = app.add_subcommand("stratify", "intrinsic homology stratification");
    stratify_cmd->add_option("input", input, "builtin name or complex file")->required();
    stratify_cmd->add_flag("--check-strong", strong, "test the strong condition");
    stratify_cmd->add_flag("--check-very-strong", very_strong, "test the very strong condition");
    stratify_cmd->add_option("--experimental-local-perm", local_perm,
                             "EXPERIMENTAL: local permutation homology per stratum for this permutation");

    int depth = 1;
    std::size_t size_limit = 0;
    auto* invariance = app.add_subcommand("invariance", "compare H^pi(K) with H^pi of the r-th subdivision");
    invariance->add_option("input", input, "builtin name or complex file")->required();
    add_permutation_options(invariance, choice);
    invariance->add_option("--depth", depth, "number of barycentric subdivisions")->check(CLI::Range(1, 8));
    invariance->add_option("--max-simplices", size_limit,
                           "size limit (default: PERMHOM_MAX_SIMPLICES or 2000000)");

    std::string op;
    auto* perm_calc = app.add_subcommand("perm-calc", "permutation calculus");
    perm_calc->add_option("operation", op, "dtable, allowable, vshape, reduce or convert")
        ->required()
        ->check(CLI::IsMember({"dtable", "allowable", "vshape", "reduce", "convert"}));
    add_permutation_options(perm_calc, choice);

    auto* export_cmd = app.add_subcommand("export", "print a complex as a JSON document");
    export_cmd->add_option("input", input, "builtin name or complex file")->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "list the builtin complexes");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e);
        return code == 0 ? ExitOk : ExitInputError;
    }

    CommandResult r;
    if (homology->parsed())
        r = run_command("homology", timing, [&] { return cmd_homology(input, render); });
    else if (perm_homology->parsed())
        r = run_command("perm-homology", timing, [&] {
            return cmd_perm_homology(input, choice, parse_method(method), natural_map, render);
        });
    else if (stratify_cmd->parsed())
        r = run_command("stratify", timing,
                        [&] { return cmd_stratify(input, strong, very_strong, local_perm, render); });
    else if (invariance->parsed())
        r = run_command("invariance", timing, [&] {
            return cmd_invariance(input, choice, depth, size_limit ? size_limit : default_size_limit(), render);
        });
    else if (perm_calc->parsed())
        r = run_command("perm-calc", timing, [&] { return cmd_perm_calc(op, choice); });
    else if (export_cmd->parsed())
        r = run_command("export", timing, [&] { return cmd_export(input); });
    else if (corpus_cmd->parsed())
        r = run_command("corpus", timing, [&] { return cmd_corpus(); });
    return emit(r, json);
}

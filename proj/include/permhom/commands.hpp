/**
 * The subcommands of the command-line tool, as library functions that
 * return a report and an exit code. Exit codes: 0 success, 1 verification
 * mismatch, 2 input error, 3 resource limit.
 */

#ifndef PERMHOM_COMMANDS_HPP
#define PERMHOM_COMMANDS_HPP

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>
#include <json.hpp>
#include "corpus.hpp"
#include "document.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "perm_homology.hpp"
#include "permutation.hpp"
#include "report.hpp"
#include "stratify.hpp"

namespace permhom {

enum ExitCode
{
    ExitOk = 0,
    ExitMismatch = 1,
    ExitInputError = 2,
    ExitResourceLimit = 3
};

struct CommandResult
{
    Report report;
    int exit_code = ExitOk;
};

inline int exit_code_for(ErrorKind kind)
{
    switch (kind)
    {
        case ErrorKind::SizeLimit:
            return ExitResourceLimit;
        case ErrorKind::Internal:
            return ExitMismatch;
        default:
            return ExitInputError;
    }
}

/** A permutation given directly, or as a perversity converted to its V-shaped permutation. */
struct PermutationChoice
{
    std::optional<std::string> perm;
    std::optional<std::string> perversity;

    bool by_perversity() const { return perversity.has_value(); }

    Permutation resolve() const
    {
        if (perm.has_value() == perversity.has_value())
            throw Error(ErrorKind::MalformedPermutation, "give exactly one of --perm and --perversity");
        if (perm)
            return Permutation::parse(*perm);
        return perversity_to_permutation(Perversity::parse(*perversity));
    }
};

namespace detail {

inline std::string join_ints(const std::set<int>& xs)
{
    std::string out = "{";
    bool first = true;
    for (int x : xs)
    {
        out += (first ? "" : ",") + std::to_string(x);
        first = false;
    }
    return out + "}";
}

inline std::string witness_text(const AllowabilityResult& r)
{
    return "witness i=" + std::to_string(r.witness->i) + " j=" + std::to_string(r.witness->j);
}

inline SimplicialComplex load_complex(const std::string& input, Report& report)
{
    ComplexDocument doc = load_input(input);
    report.results["complex"] = doc.name;
    SimplicialComplex K = document_complex(doc);
    if (K.empty())
        throw Error(ErrorKind::UndefinedInput, "the complex is empty");
    return K;
}

/** Warn when pi is not allowable, mentioning whether the intrinsic occupancy still protects it. */
inline void allowability_warning(const SimplicialComplex& K, const Permutation& pi, Report& report)
{
    AllowabilityResult a = is_allowable(pi);
    report.results["allowable"] = a.allowable;
    if (a.allowable)
        return;
    std::set<int> occupancy = intrinsic_stratification(K).occupancy();
    AllowabilityResult f = is_filtration_allowable(pi, occupancy);
    report.results["filtration_allowable"] = f.allowable;
    if (f.allowable)
        report.warn("permutation " + pi.str() + " is not allowable (" + witness_text(a) +
                    ") but satisfies the condition on the occupied strata " + join_ints(occupancy));
    else
        report.warn("permutation " + pi.str() + " is not allowable (" + witness_text(a) +
                    "); results not invariance-protected");
}

}   // namespace detail

inline CommandResult cmd_homology(const std::string& input, const RenderOptions& opt)
{
    CommandResult r;
    r.report.command = "homology " + input;
    SimplicialComplex K = detail::load_complex(input, r.report);
    std::vector<FGAbelianGroup> groups = homology_all(K);
    r.report.line(render_groups("H", groups, opt));
    r.report.results["dimension"] = K.dimension();
    r.report.results["f_vector"] = K.f_vector();
    r.report.results["homology"] = groups_to_json(groups);
    return r;
}

enum class MethodChoice
{
    Image,
    Chain,
    Both
};

inline MethodChoice parse_method(const std::string& s)
{
    if (s == "image")
        return MethodChoice::Image;
    if (s == "chain")
        return MethodChoice::Chain;
    if (s == "both")
        return MethodChoice::Both;
    throw Error(ErrorKind::Parse, "unknown method '" + s + "' (expected image, chain or both)");
}

inline CommandResult cmd_perm_homology(const std::string& input, const PermutationChoice& choice,
                                       MethodChoice method, bool natural_map, const RenderOptions& opt)
{
    CommandResult r;
    r.report.command = "perm-homology " + input;
    SimplicialComplex K = detail::load_complex(input, r.report);
    Permutation pi = choice.resolve();
    std::string label = choice.by_perversity() ? "IH" : "H^pi";
    r.report.results["permutation"] = pi.str();
    if (choice.by_perversity())
        r.report.results["perversity"] = Perversity::parse(*choice.perversity).str();
    PermHomologyEngine engine(K, pi);
    detail::allowability_warning(K, pi, r.report);

    std::optional<PermHomologyResult> image, chain;
    if (method != MethodChoice::Chain)
        image = engine.compute(PermMethod::Image);
    if (method != MethodChoice::Image)
        chain = engine.compute(PermMethod::Chain);
    const PermHomologyResult& main = image ? *image : *chain;
    r.report.line(render_groups(label, main.groups, opt));
    if (image)
        r.report.results["via_image"] = groups_to_json(image->groups);
    if (chain)
        r.report.results["via_chain"] = groups_to_json(chain->groups);
    if (image && chain)
    {
        bool agree = image->groups == chain->groups;
        r.report.results["methods_agree"] = agree;
        if (agree)
            r.report.line("methods agree: yes");
        else
        {
            r.report.line("methods agree: NO");
            r.report.line("via-chain: " + render_groups(label, chain->groups, opt));
            r.exit_code = ExitMismatch;
        }
    }
    if (natural_map)
    {
        nlohmann::json maps = nlohmann::json::array();
        for (int i = 0; i <= K.dimension(); ++i)
        {
            HomologyMap phi = engine.natural_map(i);
            GroupHomomorphism h = phi.homomorphism();
            bool inj = is_injective(h), surj = is_surjective(h);
            std::string kind = inj && surj ? "isomorphism" : inj ? "injective" : surj ? "surjective" : "neither";
            r.report.line("phi_" + std::to_string(i) + ": " + render_group(phi.source_group(), opt) + " -> " +
                          render_group(phi.target_group(), opt) + " (" + kind + ")");
            maps.push_back({{"degree", i}, {"injective", inj}, {"surjective", surj}});
        }
        r.report.results["natural_map"] = maps;
    }
    return r;
}

inline CommandResult cmd_stratify(const std::string& input, bool strong, bool very_strong,
                                  const std::optional<std::string>& local_perm, const RenderOptions& opt)
{
    CommandResult r;
    r.report.command = "stratify " + input;
    ComplexDocument doc = load_input(input);
    r.report.results["complex"] = doc.name;
    SimplicialComplex K = document_complex(doc);
    StratificationReport s = stratify(K, strong, very_strong);
    auto yes = [](bool b) { return b ? std::string("yes") : std::string("no"); };

    for (int j = s.filtration.n(); j >= 0; --j)
        r.report.line("X_" + std::to_string(j) + ": " + render_simplexes(s.filtration.level(j).maximal_simplexes()));
    nlohmann::json strata = nlohmann::json::array();
    for (const StratumSummary& st : s.strata)
    {
        std::string profiles;
        nlohmann::json pj = nlohmann::json::array();
        for (const LocalProfile& p : st.profiles)
        {
            std::string text = "(";
            for (std::size_t k = 0; k < p.size(); ++k)
                text += (k ? ", " : "") + render_group(p[k], opt);
            text += ")";
            profiles += (profiles.empty() ? "" : " ") + text;
            pj.push_back(groups_to_json(p));
        }
        r.report.line("stratum " + std::to_string(st.dimension) + ": " + std::to_string(st.open_simplexes) +
                      " open simplexes, local homology " + profiles + ", homology manifold: " +
                      yes(st.homology_manifold));
        strata.push_back({{"dimension", st.dimension},
                          {"open_simplexes", st.open_simplexes},
                          {"local_homology", pj},
                          {"homology_manifold", st.homology_manifold}});
    }
    r.report.line("h-stratification: " + yes(s.is_h_stratification));
    r.report.line("homology manifold: " + yes(s.is_homology_manifold));
    if (s.is_strong)
        r.report.line("strong: " + yes(*s.is_strong));
    if (s.is_very_strong)
        r.report.line("very strong: " + yes(*s.is_very_strong));

    r.report.results["filtration"] = filtration_to_json(s.filtration);
    r.report.results["strata"] = strata;
    r.report.results["occupancy"] = s.filtration.occupancy();
    r.report.results["is_h_stratification"] = s.is_h_stratification;
    r.report.results["is_homology_manifold"] = s.is_homology_manifold;
    if (s.is_strong)
        r.report.results["is_strong"] = *s.is_strong;
    if (s.is_very_strong)
        r.report.results["is_very_strong"] = *s.is_very_strong;
    if (!s.demoted.empty())
    {
        nlohmann::json demoted = nlohmann::json::array();
        for (const auto& [j, simplex] : s.demoted)
            demoted.push_back({{"level", j}, {"simplex", simplex}});
        r.report.results["demoted"] = demoted;
        r.report.warn(std::to_string(s.demoted.size()) +
                      " simplexes were kept in a lower level because they lie in no top simplex of their level");
    }

    if (std::optional<Filtration> given = document_filtration(doc))
    {
        bool ok = check_h_stratification(K, *given);
        r.report.line("given filtration is an h-stratification: " + yes(ok));
        r.report.results["given_filtration_is_h_stratification"] = ok;
    }

    if (local_perm)
    {
        Permutation pi = Permutation::parse(*local_perm);
        r.report.warn("local permutation homology is experimental");
        nlohmann::json lp = nlohmann::json::array();
        for (const StratumSummary& st : s.strata)
        {
            Simplex witness = s.filtration.stratum(st.dimension).front();
            LocalPermHomology local(K, pi, witness);
            LocalProfile p = local.profile_via_image();
            std::string text = "(";
            for (std::size_t k = 0; k < p.size(); ++k)
                text += (k ? ", " : "") + render_group(p[k], opt);
            r.report.line("EXPERIMENTAL local H^pi at " + to_string(witness) + " (stratum " +
                          std::to_string(st.dimension) + "): " + text + ")");
            lp.push_back({{"simplex", witness}, {"stratum", st.dimension}, {"groups", groups_to_json(p)}});
        }
        r.report.results["experimental_local_perm_homology"] = lp;
    }
    return r;
}

inline CommandResult cmd_invariance(const std::string& input, const PermutationChoice& choice, int depth,
                                    std::size_t size_limit, const RenderOptions& opt)
{
    CommandResult r;
    r.report.command = "invariance " + input;
    SimplicialComplex K = detail::load_complex(input, r.report);
    Permutation pi = choice.resolve();
    r.report.results["permutation"] = pi.str();
    r.report.results["depth"] = depth;
    detail::allowability_warning(K, pi, r.report);
    InvarianceReport inv = subdivision_invariance_check(K, pi, depth, size_limit);
    for (int i = 0; i <= K.dimension(); ++i)
    {
        bool agree = inv.base[i] == inv.subdivided[i];
        r.report.line("degree " + std::to_string(i) + ": " + render_group(inv.base[i], opt) + " vs " +
                      render_group(inv.subdivided[i], opt) + (agree ? " agree" : " DIFFER"));
    }
    r.report.line(inv.agrees() ? "all degrees agree" : "invariance FAILED");
    r.report.results["base"] = groups_to_json(inv.base);
    r.report.results["subdivided"] = groups_to_json(inv.subdivided);
    r.report.results["subdivided_simplexes"] = inv.subdivided_simplexes;
    r.report.results["agrees"] = inv.agrees();
    if (!inv.agrees())
        r.exit_code = ExitMismatch;
    return r;
}

inline CommandResult cmd_perm_calc(const std::string& op, const PermutationChoice& choice)
{
    CommandResult r;
    r.report.command = "perm-calc " + op;
    Permutation pi = choice.resolve();
    r.report.results["permutation"] = pi.str();
    if (op == "dtable")
    {
        DTable d(pi);
        std::string text = d.str();
        std::size_t start = 0;
        while (start < text.size())
        {
            std::size_t end = text.find('\n', start);
            r.report.line(text.substr(start, end - start));
            start = end + 1;
        }
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i <= pi.n(); ++i)
            rows.push_back(d.row(i));
        r.report.results["dtable"] = rows;
    }
    else if (op == "allowable")
    {
        AllowabilityResult a = is_allowable(pi);
        r.report.line(a.allowable ? "true" : "false, " + detail::witness_text(a));
        r.report.results["allowable"] = a.allowable;
        if (a.witness)
            r.report.results["witness"] = {{"i", a.witness->i}, {"j", a.witness->j}};
    }
    else if (op == "vshape")
    {
        std::optional<VShapeData> v = is_v_shaped(pi);
        r.report.results["v_shaped"] = v.has_value();
        if (v)
        {
            r.report.line("true, pivot " + std::to_string(v->pivot) + ", before pivot " +
                          detail::join_ints(v->before_pivot));
            r.report.results["pivot"] = v->pivot;
            r.report.results["before_pivot"] = v->before_pivot;
            r.report.results["q"] = v->q;
        }
        else
            r.report.line("false");
    }
    else if (op == "reduce")
    {
        Permutation red = reduce(pi);
        r.report.line(red.str());
        r.report.results["reduced"] = red.str();
    }
    else if (op == "convert")
    {
        if (choice.by_perversity())
        {
            r.report.line(pi.str());
            r.report.results["converted"] = pi.str();
        }
        else
        {
            Perversity p = permutation_to_perversity(pi);
            r.report.line(p.str());
            r.report.results["converted"] = p.str();
        }
    }
    else
        throw Error(ErrorKind::Parse, "unknown perm-calc operation '" + op +
                                          "' (expected dtable, allowable, vshape, reduce or convert)");
    return r;
}

inline CommandResult cmd_export(const std::string& input)
{
    CommandResult r;
    r.report.command = "export " + input;
    ComplexDocument doc = load_input(input);
    document_complex(doc);
    nlohmann::json j = document_to_json(doc);
    r.report.line(j.dump());
    r.report.results["document"] = j;
    return r;
}

inline CommandResult cmd_corpus()
{
    CommandResult r;
    r.report.command = "corpus";
    nlohmann::json list = nlohmann::json::array();
    for (const std::string& name : corpus::names())
    {
        SimplicialComplex K = corpus::get(name);
        std::string f;
        for (std::size_t x : K.f_vector())
            f += (f.empty() ? "" : ", ") + std::to_string(x);
        r.report.line(name + ": dimension " + std::to_string(K.dimension()) + ", f = (" + f + ")");
        list.push_back({{"name", name}, {"dimension", K.dimension()}, {"f_vector", K.f_vector()}});
    }
    r.report.results["complexes"] = list;
    return r;
}

/** Runs a command body, turning library errors into the exit-code contract. */
template <typename Body>
CommandResult run_command(const std::string& name, bool timing, Body body)
{
    auto start = std::chrono::steady_clock::now();
    CommandResult r;
    try
    {
        r = body();
    }
    catch (const Error& e)
    {
        r.report.command = name;
        r.report.results["error"] = {{"kind", to_string(e.kind())}, {"message", e.message()}};
        r.report.line(std::string("error: ") + e.what());
        r.exit_code = exit_code_for(e.kind());
    }
    if (timing)
        r.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}   // namespace permhom

#endif

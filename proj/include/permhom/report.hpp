/**
 * Reports printed by the command-line tool, as text or as JSON.
 */

#ifndef PERMHOM_REPORT_HPP
#define PERMHOM_REPORT_HPP

#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>
#include <json.hpp>
#include "abelian_group.hpp"
#include "complex.hpp"

namespace permhom {

struct RenderOptions
{
    bool primes = false;
};

inline std::string render_group(const FGAbelianGroup& g, const RenderOptions& opt)
{
    return opt.primes ? g.str_primary() : g.str();
}

/** "H_0 = Z, H_1 = 0, H_2 = Z" style line. */
inline std::string render_groups(const std::string& label, const std::vector<FGAbelianGroup>& groups,
                                 const RenderOptions& opt)
{
    std::string out;
    for (std::size_t i = 0; i < groups.size(); ++i)
        out += (i ? ", " : "") + label + "_" + std::to_string(i) + " = " + render_group(groups[i], opt);
    return out;
}

inline nlohmann::json integer_to_json(const Integer& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

inline nlohmann::json group_to_json(const FGAbelianGroup& g)
{
    nlohmann::json torsion = nlohmann::json::array();
    for (const Integer& t : g.torsion)
        torsion.push_back(integer_to_json(t));
    return {{"rank", g.rank}, {"torsion", torsion}, {"text", g.str()}};
}

inline nlohmann::json groups_to_json(const std::vector<FGAbelianGroup>& groups)
{
    nlohmann::json out = nlohmann::json::array();
    for (const FGAbelianGroup& g : groups)
        out.push_back(group_to_json(g));
    return out;
}

inline std::string render_simplexes(const std::vector<Simplex>& list)
{
    if (list.empty())
        return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i)
        out += (i ? " " : "") + to_string(list[i]);
    return out;
}

struct Report
{
    std::string command;
    std::vector<std::string> lines;
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> warnings;
    std::optional<double> seconds;

    void line(std::string text) { lines.push_back(std::move(text)); }
    void warn(std::string text) { warnings.push_back(std::move(text)); }

    void print_text(std::ostream& out) const
    {
        for (const std::string& l : lines)
            out << l << "\n";
        for (const std::string& w : warnings)
            out << "warning: " << w << "\n";
        if (seconds)
            out << "time: " << *seconds << " s\n";
    }

    void print_json(std::ostream& out) const
    {
        nlohmann::json j;
        j["command"] = command;
        j["results"] = results;
        j["warnings"] = warnings;
        if (seconds)
            j["seconds"] = *seconds;
        out << j.dump(2) << "\n";
    }
};

}   // namespace permhom

#endif

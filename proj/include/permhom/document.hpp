/**
 * Complex documents: the JSON file format, the terse text format (one
 * maximal simplex per line), and conversion to complexes and filtrations.
 */

#ifndef PERMHOM_DOCUMENT_HPP
#define PERMHOM_DOCUMENT_HPP

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>
#include <json.hpp>
#include "complex.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "stratify.hpp"

namespace permhom {

struct ComplexDocument
{
    std::string name;
    std::vector<Simplex> maximal_simplexes;
    std::optional<std::vector<Simplex>> simplexes;   // full list, must already be face-closed
    std::optional<std::vector<std::vector<Simplex>>> filtration;
    nlohmann::json metadata = nlohmann::json::object();
};

namespace detail {

inline std::string position_of(const std::string& text, std::size_t offset)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            column = 1;
        }
        else
            ++column;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

inline Simplex simplex_from_json(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_array())
        throw Error(ErrorKind::Parse, where + ": expected a list of vertex numbers");
    Simplex s;
    for (const auto& v : j)
    {
        if (!v.is_number_integer())
            throw Error(ErrorKind::Parse, where + ": vertex " + v.dump() + " is not an integer");
        long long x = v.get<long long>();
        if (x < 0 || x > 1'000'000'000)
            throw Error(ErrorKind::MalformedSimplex, where + ": vertex " + std::to_string(x) + " out of range");
        s.push_back(static_cast<int>(x));
    }
    return s;
}

inline std::vector<Simplex> simplex_list_from_json(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_array())
        throw Error(ErrorKind::Parse, where + ": expected a list of simplexes");
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(simplex_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline nlohmann::json simplex_list_to_json(const std::vector<Simplex>& list)
{
    nlohmann::json out = nlohmann::json::array();
    for (const Simplex& s : list)
        out.push_back(s);
    return out;
}

}   // namespace detail

inline ComplexDocument parse_json_document(const std::string& text)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw Error(ErrorKind::Parse, "invalid JSON at " + detail::position_of(text, e.byte ? e.byte - 1 : 0) +
                                          " (byte " + std::to_string(e.byte) + ")");
    }
    if (!j.is_object())
        throw Error(ErrorKind::Parse, "document must be a JSON object");
    ComplexDocument doc;
    if (j.contains("name"))
    {
        if (!j["name"].is_string())
            throw Error(ErrorKind::Parse, "name: expected a string");
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("maximal_simplexes"))
        doc.maximal_simplexes = detail::simplex_list_from_json(j["maximal_simplexes"], "maximal_simplexes");
    if (j.contains("simplexes"))
        doc.simplexes = detail::simplex_list_from_json(j["simplexes"], "simplexes");
    if (!j.contains("maximal_simplexes") && !j.contains("simplexes"))
        throw Error(ErrorKind::Parse, "document needs \"maximal_simplexes\" or \"simplexes\"");
    if (j.contains("filtration"))
    {
        const auto& f = j["filtration"];
        if (!f.is_array())
            throw Error(ErrorKind::Parse, "filtration: expected a list of levels");
        std::vector<std::vector<Simplex>> levels;
        for (std::size_t i = 0; i < f.size(); ++i)
            levels.push_back(detail::simplex_list_from_json(f[i], "filtration[" + std::to_string(i) + "]"));
        doc.filtration = levels;
    }
    if (j.contains("metadata"))
        doc.metadata = j["metadata"];
    return doc;
}

/**
 * Text format: one simplex per line, vertices separated by spaces or
 * commas. Blank lines and '#' comments are ignored; a line "name: foo"
 * sets the name.
 */
inline ComplexDocument parse_text_document(const std::string& text)
{
    ComplexDocument doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.rfind("name:", 0) == 0)
        {
            std::string name = line.substr(5);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t\r") + 1);
            doc.name = name;
            continue;
        }
        Simplex s;
        std::size_t pos = 0;
        while (pos < line.size())
        {
            char c = line[pos];
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',')
            {
                ++pos;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ", column " +
                                                  std::to_string(pos + 1) + ": unexpected character '" +
                                                  std::string(1, c) + "'");
            std::size_t end = pos;
            while (end < line.size() && std::isdigit(static_cast<unsigned char>(line[end])))
                ++end;
            if (end - pos > 9)
                throw Error(ErrorKind::MalformedSimplex, "line " + std::to_string(lineno) + ", column " +
                                                             std::to_string(pos + 1) + ": vertex number too large");
            s.push_back(std::stoi(line.substr(pos, end - pos)));
            pos = end;
        }
        if (!s.empty())
            doc.maximal_simplexes.push_back(s);
    }
    if (doc.maximal_simplexes.empty())
        throw Error(ErrorKind::Parse, "no simplexes found");
    return doc;
}

inline ComplexDocument parse_document(const std::string& text)
{
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
        return parse_json_document(text);
    return parse_text_document(text);
}

inline ComplexDocument read_document(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try
    {
        ComplexDocument doc = parse_document(buf.str());
        if (doc.name.empty())
            doc.name = path;
        return doc;
    }
    catch (const Error& e)
    {
        throw Error(e.kind(), path + ": " + e.message());
    }
}

inline SimplicialComplex document_complex(const ComplexDocument& doc)
{
    if (doc.simplexes)
    {
        SimplicialComplex K = SimplicialComplex::from_closed(*doc.simplexes);
        if (!doc.maximal_simplexes.empty() && !(build_complex(doc.maximal_simplexes) == K))
            throw Error(ErrorKind::NotSubcomplex, "\"simplexes\" and \"maximal_simplexes\" describe different complexes");
        return K;
    }
    return build_complex(doc.maximal_simplexes);
}

inline std::optional<Filtration> document_filtration(const ComplexDocument& doc)
{
    if (!doc.filtration)
        return std::nullopt;
    SimplicialComplex K = document_complex(doc);
    std::vector<SimplicialComplex> levels;
    for (const auto& level : *doc.filtration)
        levels.push_back(build_complex(level));
    return Filtration(K, levels);
}

inline ComplexDocument make_document(const std::string& name, const SimplicialComplex& K,
                                     const std::optional<Filtration>& F = std::nullopt)
{
    ComplexDocument doc;
    doc.name = name;
    doc.maximal_simplexes = K.maximal_simplexes();
    if (F)
    {
        std::vector<std::vector<Simplex>> levels;
        for (const SimplicialComplex& L : F->levels())
            levels.push_back(L.maximal_simplexes());
        doc.filtration = levels;
    }
    return doc;
}

inline nlohmann::json filtration_to_json(const Filtration& F)
{
    nlohmann::json out = nlohmann::json::array();
    for (const SimplicialComplex& L : F.levels())
        out.push_back(detail::simplex_list_to_json(L.maximal_simplexes()));
    return out;
}

inline nlohmann::json document_to_json(const ComplexDocument& doc)
{
    nlohmann::json j;
    j["name"] = doc.name;
    j["maximal_simplexes"] = detail::simplex_list_to_json(doc.maximal_simplexes);
    if (doc.simplexes)
        j["simplexes"] = detail::simplex_list_to_json(*doc.simplexes);
    if (doc.filtration)
    {
        nlohmann::json levels = nlohmann::json::array();
        for (const auto& level : *doc.filtration)
            levels.push_back(detail::simplex_list_to_json(level));
        j["filtration"] = levels;
    }
    if (!doc.metadata.empty())
        j["metadata"] = doc.metadata;
    return j;
}

/** A builtin corpus name, or else a path to a document file. */
inline ComplexDocument load_input(const std::string& spec)
{
    if (auto K = corpus::find(spec))
        return make_document(spec, *K);
    return read_document(spec);
}

}   // namespace permhom

#endif

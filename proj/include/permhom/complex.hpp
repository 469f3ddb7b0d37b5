/**
 * Finite abstract simplicial complexes: construction by face closure,
 * skeleta, links, complements of open stars, and labeled barycentric
 * subdivision with full subcomplexes.
 *
 * Simplexes are strictly increasing vertex tuples. Every list a complex
 * exposes is in canonical order (by dimension, then lexicographic), so
 * every downstream computation is deterministic.
 */

#ifndef PERMHOM_COMPLEX_HPP
#define PERMHOM_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>
#include "errors.hpp"

namespace permhom {

using Simplex = std::vector<int>;

struct SimplexHash
{
    std::size_t operator()(const Simplex& s) const noexcept
    {
        std::size_t h = s.size() * 0x9e3779b97f4a7c15ULL;
        for (int v : s)
            h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

inline std::string to_string(const Simplex& s)
{
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? "," : "") << s[i];
    out << "]";
    return out.str();
}

inline int dimension_of(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/** True iff a is a (not necessarily proper) face of b; both sorted. */
inline bool is_face(const Simplex& a, const Simplex& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/** All nonempty faces of a simplex (including itself). */
inline std::vector<Simplex> all_faces(const Simplex& s)
{
    std::vector<Simplex> faces;
    std::size_t k = s.size();
    if (k >= 31)
        throw Error(ErrorKind::MalformedSimplex, "simplex too large: " + to_string(s));
    for (unsigned mask = 1; mask < (1u << k); ++mask)
    {
        Simplex f;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i))
                f.push_back(s[i]);
        faces.push_back(std::move(f));
    }
    return faces;
}

/** Codimension-one faces, the i-th one omitting vertex i. */
inline std::vector<Simplex> facets_of(const Simplex& s)
{
    std::vector<Simplex> out;
    if (s.size() <= 1)
        return out;
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        Simplex f;
        f.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i)
                f.push_back(s[j]);
        out.push_back(std::move(f));
    }
    return out;
}

/**
 * An immutable finite simplicial complex closed under taking faces.
 */
class SimplicialComplex
{
    private:
        std::vector<std::vector<Simplex>> by_dim_;
        std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;

        void build_index()
        {
            index_.assign(by_dim_.size(), {});
            for (std::size_t k = 0; k < by_dim_.size(); ++k)
            {
                index_[k].reserve(by_dim_[k].size());
                for (std::size_t i = 0; i < by_dim_[k].size(); ++i)
                    index_[k].emplace(by_dim_[k][i], i);
            }
        }

        // Takes a set of sorted simplexes already known to be face-closed.
        explicit SimplicialComplex(const std::set<Simplex>& closed)
        {
            for (const Simplex& s : closed)
            {
                std::size_t k = s.size() - 1;
                if (by_dim_.size() <= k)
                    by_dim_.resize(k + 1);
                by_dim_[k].push_back(s);
            }
            for (auto& level : by_dim_)
                std::sort(level.begin(), level.end());
            build_index();
        }

    public:
        SimplicialComplex() = default;

        /**
         * Face closure of a list of simplexes. Tuples are sorted; duplicate
         * vertices inside a tuple are rejected.
         */
        static SimplicialComplex from_maximal(const std::vector<Simplex>& simplexes)
        {
            std::set<Simplex> closed;
            for (Simplex s : simplexes)
            {
                if (s.empty())
                    throw Error(ErrorKind::MalformedSimplex, "empty simplex");
                std::sort(s.begin(), s.end());
                if (std::adjacent_find(s.begin(), s.end()) != s.end())
                    throw Error(ErrorKind::MalformedSimplex, "duplicate vertex in " + to_string(s));
                if (closed.count(s))
                    continue;
                for (Simplex& f : all_faces(s))
                    closed.insert(std::move(f));
            }
            return SimplicialComplex(closed);
        }

        /**
         * A complex from a complete list of simplexes, which must already be
         * closed under faces.
         */
        static SimplicialComplex from_closed(const std::vector<Simplex>& simplexes)
        {
            std::set<Simplex> all;
            for (Simplex s : simplexes)
            {
                if (s.empty())
                    throw Error(ErrorKind::MalformedSimplex, "empty simplex");
                std::sort(s.begin(), s.end());
                if (std::adjacent_find(s.begin(), s.end()) != s.end())
                    throw Error(ErrorKind::MalformedSimplex, "duplicate vertex in " + to_string(s));
                all.insert(std::move(s));
            }
            for (const Simplex& s : all)
                for (const Simplex& f : facets_of(s))
                    if (!all.count(f))
                        throw Error(ErrorKind::NotSubcomplex,
                                    "not face-closed: " + to_string(f) + " missing from " + to_string(s));
            return SimplicialComplex(all);
        }

        /** -1 for the empty complex. */
        int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

        bool empty() const { return by_dim_.empty(); }

        const std::vector<Simplex>& simplexes(int k) const
        {
            static const std::vector<Simplex> none;
            if (k < 0 || k >= static_cast<int>(by_dim_.size()))
                return none;
            return by_dim_[k];
        }

        std::size_t count(int k) const { return simplexes(k).size(); }

        std::size_t size() const
        {
            std::size_t n = 0;
            for (const auto& level : by_dim_)
                n += level.size();
            return n;
        }

        std::vector<int> vertices() const
        {
            std::vector<int> out;
            for (const Simplex& v : simplexes(0))
                out.push_back(v[0]);
            return out;
        }

        std::optional<std::size_t> index_of(const Simplex& s) const
        {
            int k = dimension_of(s);
            if (k < 0 || k > dimension())
                return std::nullopt;
            auto it = index_[k].find(s);
            if (it == index_[k].end())
                return std::nullopt;
            return it->second;
        }

        bool contains(const Simplex& s) const { return index_of(s).has_value(); }

        /** Every simplex in canonical order. */
        std::vector<Simplex> all_simplexes() const
        {
            std::vector<Simplex> out;
            for (const auto& level : by_dim_)
                out.insert(out.end(), level.begin(), level.end());
            return out;
        }

        /** Simplexes that are not a proper face of another simplex. */
        std::vector<Simplex> maximal_simplexes() const
        {
            std::set<Simplex> covered;
            for (int k = 1; k <= dimension(); ++k)
                for (const Simplex& s : by_dim_[k])
                    for (Simplex& f : facets_of(s))
                        covered.insert(std::move(f));
            std::vector<Simplex> out;
            for (const auto& level : by_dim_)
                for (const Simplex& s : level)
                    if (!covered.count(s))
                        out.push_back(s);
            return out;
        }

        std::vector<std::size_t> f_vector() const
        {
            std::vector<std::size_t> f;
            for (const auto& level : by_dim_)
                f.push_back(level.size());
            return f;
        }

        bool operator==(const SimplicialComplex& other) const { return by_dim_ == other.by_dim_; }
};

inline SimplicialComplex build_complex(const std::vector<Simplex>& maximal_simplexes)
{
    return SimplicialComplex::from_maximal(maximal_simplexes);
}

/** The subcomplex of simplexes satisfying a predicate that is closed under faces. */
template <typename Pred>
SimplicialComplex filter_complex(const SimplicialComplex& K, Pred keep)
{
    std::vector<Simplex> kept;
    for (int k = 0; k <= K.dimension(); ++k)
        for (const Simplex& s : K.simplexes(k))
            if (keep(s))
                kept.push_back(s);
    return SimplicialComplex::from_closed(kept);
}

inline SimplicialComplex skeleton(const SimplicialComplex& K, int j)
{
    return filter_complex(K, [j](const Simplex& s) { return dimension_of(s) <= j; });
}

/**
 * True iff every simplex is a face of a top-dimensional simplex.
 */
inline bool is_principal(const SimplicialComplex& K)
{
    if (K.empty())
        throw Error(ErrorKind::UndefinedInput, "principality of the empty complex");
    int n = K.dimension();
    for (const Simplex& s : K.maximal_simplexes())
        if (dimension_of(s) != n)
            return false;
    return true;
}

/**
 * Discard maximal simplexes below the top dimension (and any faces no
 * longer covered). Callers opt in explicitly; nothing principalizes silently.
 */
inline SimplicialComplex principalize(const SimplicialComplex& K)
{
    std::vector<Simplex> top = K.simplexes(K.dimension());
    return build_complex(top);
}

inline bool is_subcomplex(const SimplicialComplex& L, const SimplicialComplex& K)
{
    for (int k = 0; k <= L.dimension(); ++k)
        for (const Simplex& s : L.simplexes(k))
            if (!K.contains(s))
                return false;
    return true;
}

inline void require_subcomplex(const SimplicialComplex& L, const SimplicialComplex& K, const char* what)
{
    if (!is_subcomplex(L, K))
        throw Error(ErrorKind::NotSubcomplex, what);
}

inline void require_simplex(const SimplicialComplex& K, const Simplex& s)
{
    if (!K.contains(s))
        throw Error(ErrorKind::MissingSimplex, to_string(s) + " is not in the complex");
}

inline SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<Simplex> all = a.all_simplexes();
    std::vector<Simplex> more = b.all_simplexes();
    all.insert(all.end(), more.begin(), more.end());
    return SimplicialComplex::from_closed(all);
}

inline SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b)
{
    return filter_complex(a, [&b](const Simplex& s) { return b.contains(s); });
}

/** Disjoint-union merge of two sorted simplexes (caller checks disjointness). */
inline Simplex join_simplexes(const Simplex& a, const Simplex& b)
{
    Simplex out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool disjoint(const Simplex& a, const Simplex& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size())
    {
        if (a[i] == b[j])
            return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

/** Simplexes of K having sigma as a face (the closed-star cells containing sigma). */
inline std::vector<Simplex> cofaces(const SimplicialComplex& K, const Simplex& sigma)
{
    std::vector<Simplex> out;
    for (int k = dimension_of(sigma); k <= K.dimension(); ++k)
        for (const Simplex& t : K.simplexes(k))
            if (is_face(sigma, t))
                out.push_back(t);
    return out;
}

/**
 * lk(sigma, K) = { tau : tau and sigma disjoint, tau u sigma in K }.
 */
inline SimplicialComplex link(const SimplicialComplex& K, const Simplex& sigma)
{
    require_simplex(K, sigma);
    std::vector<Simplex> out;
    for (const Simplex& t : cofaces(K, sigma))
    {
        Simplex rest;
        std::set_difference(t.begin(), t.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
        if (!rest.empty())
            out.push_back(std::move(rest));
    }
    return SimplicialComplex::from_closed(out);
}

/** Closed star: the face closure of all cofaces of sigma. */
inline SimplicialComplex closed_star(const SimplicialComplex& K, const Simplex& sigma)
{
    require_simplex(K, sigma);
    return build_complex(cofaces(K, sigma));
}

/**
 * C(sigma): every simplex of K not containing sigma. Simplicial model of
 * the complement of the open star of sigma.
 */
inline SimplicialComplex complement_of_open_star(const SimplicialComplex& K, const Simplex& sigma)
{
    require_simplex(K, sigma);
    return filter_complex(K, [&sigma](const Simplex& t) { return !is_face(sigma, t); });
}

/**
 * First derived subdivision with provenance. Vertex v of the subdivision
 * is the barycentre of vertex_origin[v], a simplex of the base complex of
 * dimension vertex_dim[v]. Vertices are numbered in the canonical order
 * of the base complex's simplexes, so every flag is an increasing tuple.
 */
struct LabeledSubdivision
{
    SimplicialComplex complex;
    std::vector<Simplex> vertex_origin;
    std::vector<int> vertex_dim;

    int base_dimension() const
    {
        int n = -1;
        for (int d : vertex_dim)
            n = std::max(n, d);
        return n;
    }
};

inline LabeledSubdivision barycentric_subdivision(const SimplicialComplex& K)
{
    if (K.empty())
        throw Error(ErrorKind::UndefinedInput, "subdivision of the empty complex");
    LabeledSubdivision S;
    std::vector<Simplex> all = K.all_simplexes();
    std::unordered_map<Simplex, int, SimplexHash> id;
    for (std::size_t i = 0; i < all.size(); ++i)
    {
        id.emplace(all[i], static_cast<int>(i));
        S.vertex_origin.push_back(all[i]);
        S.vertex_dim.push_back(dimension_of(all[i]));
    }

    // Flags ending at each simplex, built upward by dimension: a flag ending
    // at A is {A} or a flag ending at a facet-descendant B < A, extended by A.
    std::vector<std::vector<Simplex>> ending(all.size());
    std::vector<Simplex> flags;
    for (std::size_t i = 0; i < all.size(); ++i)
    {
        const Simplex& A = all[i];
        int a = static_cast<int>(i);
        std::vector<Simplex>& mine = ending[i];
        mine.push_back({a});
        if (A.size() > 1)
        {
            for (const Simplex& B : all_faces(A))
            {
                if (B.size() == A.size())
                    continue;
                for (const Simplex& f : ending[id.at(B)])
                {
                    Simplex g = f;
                    g.push_back(a);
                    mine.push_back(std::move(g));
                }
            }
        }
        flags.insert(flags.end(), mine.begin(), mine.end());
    }
    S.complex = SimplicialComplex::from_closed(flags);
    return S;
}

/** Carrier in the original complex of each vertex after composing subdivisions. */
inline std::vector<Simplex> compose_origins(const LabeledSubdivision& first, const LabeledSubdivision& second)
{
    // second subdivides first.complex; a vertex of second is the barycentre of a
    // flag in first.complex whose largest member carries it.
    std::vector<Simplex> out;
    out.reserve(second.vertex_origin.size());
    for (const Simplex& flag : second.vertex_origin)
    {
        Simplex carrier;
        for (int v : flag)
            if (first.vertex_origin[v].size() > carrier.size())
                carrier = first.vertex_origin[v];
        out.push_back(carrier);
    }
    return out;
}

/** K^(r) for r >= 1 (r = 0 returns K with itself as provenance). */
inline LabeledSubdivision iterated_subdivision(const SimplicialComplex& K, int r)
{
    if (r <= 0)
    {
        LabeledSubdivision S;
        S.complex = K;
        for (const Simplex& v : K.simplexes(0))
        {
            S.vertex_origin.push_back(v);
            S.vertex_dim.push_back(0);
        }
        return S;
    }
    LabeledSubdivision S = barycentric_subdivision(K);
    for (int step = 1; step < r; ++step)
    {
        LabeledSubdivision next = barycentric_subdivision(S.complex);
        std::vector<Simplex> carriers = compose_origins(S, next);
        next.vertex_origin = carriers;
        for (std::size_t v = 0; v < carriers.size(); ++v)
            next.vertex_dim[v] = dimension_of(carriers[v]);
        S = std::move(next);
    }
    return S;
}

/**
 * Full subcomplex of the subdivision spanned by barycentres whose origin
 * dimension lies in dims.
 */
inline SimplicialComplex full_subcomplex(const LabeledSubdivision& S, const std::set<int>& dims)
{
    return filter_complex(S.complex, [&](const Simplex& s) {
        return std::all_of(s.begin(), s.end(), [&](int v) { return dims.count(S.vertex_dim[v]) > 0; });
    });
}

/** The subdivision of a subcomplex L of the base: flags made of simplexes of L. */
inline SimplicialComplex subdivided_subcomplex(const LabeledSubdivision& S, const SimplicialComplex& L)
{
    return filter_complex(S.complex, [&](const Simplex& s) {
        return std::all_of(s.begin(), s.end(), [&](int v) { return L.contains(S.vertex_origin[v]); });
    });
}

}   // namespace permhom

#endif

/**
 * Permutation skeleta of the first derived complex and the permutation
 * homology groups H^pi_i, computed two independent ways:
 *
 *   image route:  im( H_i(K^pi_i) -> H_i(K^pi_{i+1}) )
 *   chain route:  homology of the complex of relative groups
 *                 H_i(K^pi_i, K^pi_{i-1}) with connecting maps of triples.
 *
 * Intersection homology is the image route at the V-shaped permutation of
 * a perversity.
 */

#ifndef PERMHOM_PERM_HOMOLOGY_HPP
#define PERMHOM_PERM_HOMOLOGY_HPP

#include <cstddef>
#include <cstdlib>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>
#include "abelian_group.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "permutation.hpp"

namespace permhom {

namespace detail {

inline void require_tower_input(const SimplicialComplex& K, const Permutation& pi)
{
    if (K.empty())
        throw Error(ErrorKind::UndefinedInput, "permutation skeleta of the empty complex");
    if (!is_principal(K))
        throw Error(ErrorKind::NotPrincipal, "complex is not principal (every simplex must lie in an " +
                                                 std::to_string(K.dimension()) + "-simplex)");
    if (pi.n() != K.dimension())
        throw Error(ErrorKind::MalformedPermutation, "permutation " + pi.str() + " acts on {0.." +
                                                         std::to_string(pi.n()) + "} but the complex has dimension " +
                                                         std::to_string(K.dimension()));
}

}   // namespace detail

/**
 * K^pi_0 <= K^pi_1 <= ... <= K^pi_n inside the first derived K^(1).
 */
class PermSkeletonTower
{
    private:
        SimplicialComplex base_;
        Permutation pi_;
        LabeledSubdivision derived_;
        std::vector<SimplicialComplex> levels_;

    public:
        PermSkeletonTower(const SimplicialComplex& K, const Permutation& pi) : base_(K), pi_(pi)
        {
            detail::require_tower_input(K, pi);
            derived_ = barycentric_subdivision(K);
            for (int i = 0; i <= K.dimension(); ++i)
                levels_.push_back(full_subcomplex(derived_, pi.prefix_values(i)));
        }

        const SimplicialComplex& base() const { return base_; }
        const Permutation& permutation() const { return pi_; }
        const LabeledSubdivision& derived() const { return derived_; }
        int n() const { return base_.dimension(); }

        /** K^pi_i; empty for i < 0, and K^pi_n for i > n. */
        const SimplicialComplex& level(int i) const
        {
            static const SimplicialComplex empty;
            if (i < 0)
                return empty;
            return levels_[std::min(i, n())];
        }

        /** CK^pi_i: full subcomplex on barycentres of the unused dimensions. */
        SimplicialComplex complement(int i) const
        {
            std::set<int> unused;
            std::set<int> used = pi_.prefix_values(i);
            for (int d = 0; d <= n(); ++d)
                if (!used.count(d))
                    unused.insert(d);
            return full_subcomplex(derived_, unused);
        }

        /**
         * Split a simplex of K^(1) into its K^pi_i part and CK^pi_i part.
         * Either part may be empty.
         */
        std::pair<Simplex, Simplex> split(const Simplex& s, int i) const
        {
            std::set<int> used = pi_.prefix_values(i);
            Simplex inside, outside;
            for (int v : s)
                (used.count(derived_.vertex_dim[v]) ? inside : outside).push_back(v);
            return {inside, outside};
        }
};

inline SimplicialComplex perm_skeleton(const SimplicialComplex& K, const Permutation& pi, int i)
{
    return PermSkeletonTower(K, pi).level(i);
}

/**
 * The same skeleton built by cone attachment: start from the barycentres
 * of pi(0)-simplexes, and for each simplex A of dimension pi(i) attach the
 * cone from its barycentre over (previous level) n lk(a, K^(1)).
 */
inline SimplicialComplex perm_skeleton_by_cones(const SimplicialComplex& K, const Permutation& pi, int i)
{
    detail::require_tower_input(K, pi);
    LabeledSubdivision S = barycentric_subdivision(K);
    std::vector<Simplex> current;
    for (std::size_t v = 0; v < S.vertex_dim.size(); ++v)
        if (S.vertex_dim[v] == pi(0))
            current.push_back({static_cast<int>(v)});
    SimplicialComplex level = SimplicialComplex::from_closed(current);
    for (int step = 1; step <= i; ++step)
    {
        std::vector<Simplex> next = level.all_simplexes();
        for (std::size_t v = 0; v < S.vertex_dim.size(); ++v)
        {
            if (S.vertex_dim[v] != pi(step))
                continue;
            int apex = static_cast<int>(v);
            next.push_back({apex});
            SimplicialComplex lk = link(S.complex, {apex});
            for (const Simplex& b : intersection_of(level, lk).all_simplexes())
                next.push_back(join_simplexes(b, {apex}));
        }
        level = SimplicialComplex::from_closed(next);
    }
    return level;
}

inline SimplicialComplex co_perm_skeleton(const SimplicialComplex& K, const Permutation& pi, int i)
{
    return PermSkeletonTower(K, pi).complement(i);
}

/**
 * Subcomplex of K^pi_i spanned by barycentres of simplexes of dimension
 * at most j (the part of K^pi_i inside the subdivided j-skeleton).
 */
inline SimplicialComplex perm_skeleton_meet_skeleton(const PermSkeletonTower& tower, int i, int j)
{
    std::set<int> dims;
    for (int d : tower.permutation().prefix_values(i))
        if (d <= j)
            dims.insert(d);
    return full_subcomplex(tower.derived(), dims);
}

enum class PermMethod
{
    Image,
    Chain
};

inline const char* to_string(PermMethod m) { return m == PermMethod::Image ? "via-image" : "via-chain"; }

struct PermHomologyResult
{
    Permutation permutation;
    PermMethod method = PermMethod::Image;
    std::vector<FGAbelianGroup> groups;   // degrees 0..n

    FGAbelianGroup operator[](int i) const
    {
        if (i < 0 || i >= static_cast<int>(groups.size()))
            return {};
        return groups[i];
    }
};

/**
 * Shared machinery for one (K, pi): homology computers of every level and
 * of every consecutive pair, built on first use.
 */
class PermHomologyEngine
{
    private:
        PermSkeletonTower tower_;
        mutable std::vector<std::unique_ptr<HomologyComputer>> absolute_;
        mutable std::vector<std::unique_ptr<HomologyComputer>> relative_;

    public:
        PermHomologyEngine(const SimplicialComplex& K, const Permutation& pi)
            : tower_(K, pi), absolute_(K.dimension() + 1), relative_(K.dimension() + 1)
        {
        }

        const PermSkeletonTower& tower() const { return tower_; }
        int n() const { return tower_.n(); }

        const HomologyComputer& level_homology(int i) const
        {
            i = std::min(i, n());
            if (!absolute_[i])
                absolute_[i] = std::make_unique<HomologyComputer>(HomologyComputer::of(tower_.level(i)));
            return *absolute_[i];
        }

        /** H_*(K^pi_i, K^pi_{i-1}). */
        const HomologyComputer& relative_homology(int i) const
        {
            if (!relative_[i])
                relative_[i] = std::make_unique<HomologyComputer>(
                    HomologyComputer::of_pair(tower_.level(i), tower_.level(i - 1)));
            return *relative_[i];
        }

        /** H_i(K^pi_i) -> H_i(K^pi_{i+1}), with K^pi_{n+1} read as K^pi_n. */
        HomologyMap tower_map(int i) const
        {
            return inclusion_map(level_homology(i), level_homology(std::min(i + 1, n())), i);
        }

        /** The image subgroup with its generators in H_i(K^pi_{i+1}) coordinates. */
        Subquotient image(int i) const { return image_of(tower_map(i).homomorphism()); }

        FGAbelianGroup via_image(int i) const
        {
            if (i < 0 || i > n())
                return {};
            return image(i).decomposition.group();
        }

        /** Differential of the relative-group complex, G_i -> G_{i-1}. */
        HomologyMap chain_differential(int i) const
        {
            return connecting_map(relative_homology(i), relative_homology(i - 1), i);
        }

        FGAbelianGroup via_chain(int i) const
        {
            if (i < 0 || i > n())
                return {};
            CyclicDecomposition middle = relative_homology(i).decomposition(i);
            IntMatrix incoming = i < n() ? chain_differential(i + 1).matrix : IntMatrix(middle.size(), 0);
            IntMatrix outgoing = IntMatrix(0, middle.size());
            CyclicDecomposition next;
            if (i > 0)
            {
                HomologyMap d = chain_differential(i);
                outgoing = d.matrix;
                next = d.target;
            }
            return homology_at(middle, incoming, outgoing, next).decomposition.group();
        }

        PermHomologyResult compute(PermMethod method) const
        {
            PermHomologyResult r;
            r.permutation = tower_.permutation();
            r.method = method;
            for (int i = 0; i <= n(); ++i)
                r.groups.push_back(method == PermMethod::Image ? via_image(i) : via_chain(i));
            return r;
        }

        /**
         * phi: H^pi_i -> H_i(K^(1)), obtained by regarding the cycles of
         * K^pi_i as cycles of the whole derived complex.
         */
        HomologyMap natural_map(int i) const
        {
            Subquotient im = image(i);
            const HomologyComputer& middle = level_homology(std::min(i + 1, n()));
            const HomologyComputer& whole = level_homology(n());
            const std::vector<Chain>& middle_gens = middle.generators(i);

            HomologyMap m;
            m.degree = i;
            m.source = im.decomposition;
            m.target = whole.decomposition(i);
            m.target_generators = whole.generators(i);
            m.matrix = IntMatrix(m.target.size(), m.source.size());
            for (std::size_t g = 0; g < im.generators.size(); ++g)
            {
                Chain z;
                z.dim = i;
                for (std::size_t t = 0; t < middle_gens.size(); ++t)
                    for (const auto& [s, c] : middle_gens[t].terms)
                        z.add(s, im.generators[g][t] * c);
                m.source_generators.push_back(z);
                if (m.target.size() == 0)
                    continue;
                IntVector coords = whole.coordinates(z);
                for (std::size_t r = 0; r < coords.size(); ++r)
                    m.matrix(r, g) = coords[r];
            }
            return m;
        }
};

inline PermHomologyResult perm_homology_via_image(const SimplicialComplex& K, const Permutation& pi)
{
    return PermHomologyEngine(K, pi).compute(PermMethod::Image);
}

inline FGAbelianGroup perm_homology_via_image(const SimplicialComplex& K, const Permutation& pi, int i)
{
    return PermHomologyEngine(K, pi).via_image(i);
}

inline PermHomologyResult perm_homology_via_chain(const SimplicialComplex& K, const Permutation& pi)
{
    return PermHomologyEngine(K, pi).compute(PermMethod::Chain);
}

inline FGAbelianGroup perm_homology_via_chain(const SimplicialComplex& K, const Permutation& pi, int i)
{
    return PermHomologyEngine(K, pi).via_chain(i);
}

inline PermHomologyResult intersection_homology(const SimplicialComplex& K, const Perversity& p)
{
    if (p.n() != K.dimension())
        throw Error(ErrorKind::MalformedPermutation, "perversity " + p.str() + " has length " +
                                                         std::to_string(p.n() + 1) + " but the complex has dimension " +
                                                         std::to_string(K.dimension()));
    return perm_homology_via_image(K, perversity_to_permutation(p));
}

inline FGAbelianGroup intersection_homology(const SimplicialComplex& K, const Perversity& p, int i)
{
    return intersection_homology(K, p)[i];
}

inline HomologyMap natural_map_to_ordinary(const SimplicialComplex& K, const Permutation& pi, int i)
{
    return PermHomologyEngine(K, pi).natural_map(i);
}

/**
 * f-vector of the first derived complex computed from an f-vector alone:
 * a k-simplex of K^(1) is a flag of length k+1, counted by its top element.
 */
inline std::vector<std::size_t> derived_f_vector(const std::vector<std::size_t>& f)
{
    int n = static_cast<int>(f.size()) - 1;
    if (n < 0)
        return {};
    // flags[d][k]: flags of length k+1 ending at a fixed d-simplex
    std::vector<std::vector<double>> flags(n + 1, std::vector<double>(n + 1, 0.0));
    auto binom = [](int a, int b) {
        double r = 1;
        for (int t = 1; t <= b; ++t)
            r = r * (a - b + t) / t;
        return r;
    };
    for (int d = 0; d <= n; ++d)
    {
        flags[d][0] = 1;
        for (int e = 0; e < d; ++e)
            for (int k = 0; k < n; ++k)
                flags[d][k + 1] += binom(d + 1, e + 1) * flags[e][k];
    }
    std::vector<std::size_t> out(n + 1, 0);
    for (int d = 0; d <= n; ++d)
        for (int k = 0; k <= n; ++k)
            out[k] += static_cast<std::size_t>(f[d] * flags[d][k]);
    return out;
}

inline std::size_t default_size_limit()
{
    if (const char* env = std::getenv("PERMHOM_MAX_SIMPLICES"))
    {
        try
        {
            return static_cast<std::size_t>(std::stoull(env));
        }
        catch (const std::exception&)
        {
            throw Error(ErrorKind::Parse, std::string("PERMHOM_MAX_SIMPLICES is not a number: ") + env);
        }
    }
    return 2'000'000;
}

struct InvarianceReport
{
    Permutation permutation;
    int depth = 1;
    std::size_t base_simplexes = 0;
    std::size_t subdivided_simplexes = 0;
    std::vector<FGAbelianGroup> base;
    std::vector<FGAbelianGroup> subdivided;
    std::vector<int> mismatched_degrees;

    bool agrees() const { return mismatched_degrees.empty(); }
};

/**
 * Compare H^pi(K) with H^pi(K^(r)). Throws a size-limit error before any
 * heavy work when the complex that would have to be built exceeds the limit.
 */
inline InvarianceReport subdivision_invariance_check(const SimplicialComplex& K, const Permutation& pi, int depth,
                                                     std::size_t size_limit = default_size_limit())
{
    if (depth < 1)
        throw Error(ErrorKind::UndefinedInput, "subdivision depth must be at least 1");
    detail::require_tower_input(K, pi);
    // the image route subdivides K^(r) once more
    std::vector<std::size_t> f = K.f_vector();
    for (int step = 0; step <= depth; ++step)
        f = derived_f_vector(f);
    std::size_t needed = 0;
    for (std::size_t x : f)
        needed += x;
    if (needed > size_limit)
        throw Error(ErrorKind::SizeLimit, "depth " + std::to_string(depth) + " needs " + std::to_string(needed) +
                                              " simplexes, limit is " + std::to_string(size_limit));

    InvarianceReport report;
    report.permutation = pi;
    report.depth = depth;
    report.base_simplexes = K.size();
    SimplicialComplex Kr = iterated_subdivision(K, depth).complex;
    report.subdivided_simplexes = Kr.size();
    report.base = perm_homology_via_image(K, pi).groups;
    report.subdivided = perm_homology_via_image(Kr, pi).groups;
    for (int i = 0; i <= K.dimension(); ++i)
        if (!(report.base[i] == report.subdivided[i]))
            report.mismatched_degrees.push_back(i);
    return report;
}

}   // namespace permhom

#endif

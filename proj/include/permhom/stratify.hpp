/**
 * Local homology, the comparison maps q between nearby points, filtrations
 * and the intrinsic homology stratification, homology-manifold detection,
 * and the strong / very strong stratification checks.
 *
 * Points are represented by the open simplex carrying them. The local
 * homology at a point of the open simplex sigma is H_*(K, C(sigma)) with
 * C(sigma) the complement of the open star; a point of a coface tau is
 * "nearby", and q is the map H_*(K, C(sigma)) -> H_*(K, C(tau)).
 */

#ifndef PERMHOM_STRATIFY_HPP
#define PERMHOM_STRATIFY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>
#include "complex.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "perm_homology.hpp"
#include "permutation.hpp"

namespace permhom {

using LocalProfile = std::vector<FGAbelianGroup>;   // H_k(K, C(sigma)), k = 0..n

inline std::string to_string(const LocalProfile& p)
{
    std::string out = "(";
    for (std::size_t k = 0; k < p.size(); ++k)
        out += (k ? ", " : "") + p[k].str();
    return out + ")";
}

/**
 * Local-homology oracle for one complex, with a vertex-star index and
 * memoized results so that whole-complex sweeps stay cheap.
 */
class LocalHomology
{
    private:
        SimplicialComplex K_;
        std::unordered_map<int, std::vector<Simplex>> star_of_vertex_;
        mutable std::unordered_map<Simplex, LocalProfile, SimplexHash> profiles_;
        mutable std::map<std::pair<Simplex, Simplex>, bool> q_iso_;

    public:
        explicit LocalHomology(SimplicialComplex K) : K_(std::move(K))
        {
            // index every simplex under each of its vertices
            for (int k = 0; k <= K_.dimension(); ++k)
                for (const Simplex& s : K_.simplexes(k))
                    for (int v : s)
                        star_of_vertex_[v].push_back(s);
        }

        const SimplicialComplex& complex() const { return K_; }

        /** Simplexes of K containing sigma (sigma included), canonical order. */
        std::vector<Simplex> cofaces(const Simplex& sigma) const
        {
            require_simplex(K_, sigma);
            std::vector<Simplex> out;
            for (const Simplex& t : star_of_vertex_.at(sigma.front()))
                if (is_face(sigma, t))
                    out.push_back(t);
            return out;
        }

        /** Proper cofaces only. */
        std::vector<Simplex> proper_cofaces(const Simplex& sigma) const
        {
            std::vector<Simplex> out = cofaces(sigma);
            out.erase(std::remove(out.begin(), out.end(), sigma), out.end());
            return out;
        }

        /** H_k(K, C(sigma)) for k = 0..dim K. */
        const LocalProfile& profile(const Simplex& sigma) const
        {
            auto it = profiles_.find(sigma);
            if (it != profiles_.end())
                return it->second;
            HomologyComputer hc(ChainComplex::from_cells(cofaces(sigma)));
            LocalProfile p = hc.groups(K_.dimension());
            return profiles_.emplace(sigma, std::move(p)).first->second;
        }

        /**
         * q: H_*(K, C(sigma)) -> H_*(K, C(tau)) is an isomorphism in every
         * degree iff H_*(C(tau), C(sigma)) = 0; the cells of that pair are
         * the simplexes containing sigma but not tau.
         */
        bool q_is_iso(const Simplex& sigma, const Simplex& tau) const
        {
            require_simplex(K_, tau);
            if (!is_face(sigma, tau))
                throw Error(ErrorKind::NotAFace, to_string(sigma) + " is not a face of " + to_string(tau));
            if (sigma == tau)
                return true;
            auto key = std::make_pair(sigma, tau);
            auto it = q_iso_.find(key);
            if (it != q_iso_.end())
                return it->second;
            std::vector<Simplex> cells;
            for (const Simplex& r : cofaces(sigma))
                if (!is_face(tau, r))
                    cells.push_back(r);
            HomologyComputer hc(ChainComplex::from_cells(cells));
            bool iso = true;
            for (int k = 0; k <= hc.top_degree() && iso; ++k)
                iso = hc.group(k).is_trivial();
            q_iso_.emplace(key, iso);
            return iso;
        }
};

inline LocalProfile local_homology_profile(const SimplicialComplex& K, const Simplex& sigma)
{
    return LocalHomology(K).profile(sigma);
}

inline FGAbelianGroup local_homology(const SimplicialComplex& K, const Simplex& sigma, int k)
{
    LocalProfile p = local_homology_profile(K, sigma);
    if (k < 0 || k >= static_cast<int>(p.size()))
        return {};
    return p[k];
}

/**
 * The link formula H_k(K, C(sigma)) = H~_{k - dim sigma - 1}(lk sigma),
 * evaluated on the link side.
 */
inline LocalProfile local_homology_via_link(const SimplicialComplex& K, const Simplex& sigma)
{
    SimplicialComplex lk = link(K, sigma);
    int shift = dimension_of(sigma) + 1;
    return reduced_homology_range(lk, -shift, K.dimension() - shift);
}

inline bool local_map_is_iso(const SimplicialComplex& K, const Simplex& sigma, const Simplex& tau)
{
    return LocalHomology(K).q_is_iso(sigma, tau);
}

/** Cross-check path: build both induced maps on H_*(K, C(.)) and test them. */
inline bool local_map_is_iso_direct(const SimplicialComplex& K, const Simplex& sigma, const Simplex& tau)
{
    require_simplex(K, tau);
    if (!is_face(sigma, tau))
        throw Error(ErrorKind::NotAFace, to_string(sigma) + " is not a face of " + to_string(tau));
    return pair_map_is_iso_direct(K, complement_of_open_star(K, sigma), complement_of_open_star(K, tau));
}

/**
 * Nested subcomplexes X_0 <= X_1 <= ... <= X_n = K with dim X_j <= j.
 */
class Filtration
{
    private:
        SimplicialComplex base_;
        std::vector<SimplicialComplex> levels_;

    public:
        Filtration() = default;

        Filtration(SimplicialComplex base, std::vector<SimplicialComplex> levels)
            : base_(std::move(base)), levels_(std::move(levels))
        {
            int n = base_.dimension();
            if (static_cast<int>(levels_.size()) != n + 1)
                throw Error(ErrorKind::InvalidFiltration, "expected " + std::to_string(n + 1) + " levels, got " +
                                                              std::to_string(levels_.size()));
            if (!(levels_[n] == base_))
                throw Error(ErrorKind::InvalidFiltration, "top level must be the whole complex");
            for (int j = 0; j <= n; ++j)
            {
                if (levels_[j].dimension() > j)
                    throw Error(ErrorKind::InvalidFiltration, "level " + std::to_string(j) + " has dimension " +
                                                                  std::to_string(levels_[j].dimension()));
                if (!is_subcomplex(levels_[j], base_))
                    throw Error(ErrorKind::InvalidFiltration, "level " + std::to_string(j) + " is not a subcomplex");
                if (j > 0 && !is_subcomplex(levels_[j - 1], levels_[j]))
                    throw Error(ErrorKind::InvalidFiltration, "levels " + std::to_string(j - 1) + " and " +
                                                                  std::to_string(j) + " are not nested");
            }
        }

        /** The one-stratum filtration: X_n = K, everything below empty. */
        static Filtration trivial(const SimplicialComplex& K)
        {
            std::vector<SimplicialComplex> levels(K.dimension() + 1);
            levels.back() = K;
            return Filtration(K, levels);
        }

        /** X_j = j-skeleton. */
        static Filtration skeletal(const SimplicialComplex& K)
        {
            std::vector<SimplicialComplex> levels;
            for (int j = 0; j <= K.dimension(); ++j)
                levels.push_back(skeleton(K, j));
            return Filtration(K, levels);
        }

        const SimplicialComplex& base() const { return base_; }
        int n() const { return base_.dimension(); }
        const SimplicialComplex& level(int j) const { return levels_.at(j); }
        const std::vector<SimplicialComplex>& levels() const { return levels_; }

        /** The j with sigma's interior in X_j - X_{j-1}. */
        int stratum_of(const Simplex& sigma) const
        {
            for (int j = 0; j <= n(); ++j)
                if (levels_[j].contains(sigma))
                    return j;
            throw Error(ErrorKind::MissingSimplex, to_string(sigma) + " is not in the filtered complex");
        }

        std::vector<Simplex> stratum(int j) const
        {
            std::vector<Simplex> out;
            for (const Simplex& s : levels_[j].all_simplexes())
                if (j == 0 || !levels_[j - 1].contains(s))
                    out.push_back(s);
            return out;
        }

        /** { j : X_j - X_{j-1} nonempty }. */
        std::set<int> occupancy() const
        {
            std::set<int> out;
            for (int j = 0; j <= n(); ++j)
                if (!stratum(j).empty())
                    out.insert(j);
            return out;
        }

        bool operator==(const Filtration& other) const
        {
            return base_ == other.base_ && levels_ == other.levels_;
        }
};

/**
 * Local constancy of the ambient local homology at sigma along the level
 * X_j: q is an isomorphism onto every coface of sigma that lies in X_j.
 */
inline bool is_locally_constant(const LocalHomology& lh, const Simplex& sigma, const SimplicialComplex& level)
{
    if (!level.contains(sigma))
        throw Error(ErrorKind::MissingSimplex, to_string(sigma) + " is not in the given level");
    for (const Simplex& tau : lh.proper_cofaces(sigma))
        if (level.contains(tau) && !lh.q_is_iso(sigma, tau))
            return false;
    return true;
}

inline bool is_locally_constant(const SimplicialComplex& K, const Simplex& sigma, const SimplicialComplex& level)
{
    return is_locally_constant(LocalHomology(K), sigma, level);
}

struct IntrinsicStratification
{
    Filtration filtration;
    // Simplexes kept in X_{j-1} only because they lie in no j-simplex of X_j.
    std::vector<std::pair<int, Simplex>> demoted;
};

/**
 * The intrinsic stratification. Starting from X_n = K, the open simplex
 * sigma of X_j is left out of X_{j-1} exactly when sigma lies in a
 * j-simplex of X_j and the local homology of K is locally constant at sigma
 * along X_j. The non-constant locus is checked to be face-closed at every
 * step; a violation is an internal error rather than something repaired.
 */
inline IntrinsicStratification intrinsic_stratification_detailed(const SimplicialComplex& K)
{
    if (K.empty())
        throw Error(ErrorKind::UndefinedInput, "stratification of the empty complex");
    if (!is_principal(K))
        throw Error(ErrorKind::NotPrincipal, "intrinsic stratification requires a principal complex");
    LocalHomology lh(K);
    int n = K.dimension();
    std::vector<SimplicialComplex> levels(n + 1);
    levels[n] = K;
    IntrinsicStratification out;
    for (int j = n; j >= 1; --j)
    {
        const SimplicialComplex& Xj = levels[j];
        std::set<Simplex> in_top;
        for (const Simplex& top : Xj.simplexes(j))
            for (Simplex& f : all_faces(top))
                in_top.insert(std::move(f));
        std::set<Simplex> nonconstant;
        std::vector<Simplex> kept;
        for (const Simplex& s : Xj.all_simplexes())
        {
            bool constant = is_locally_constant(lh, s, Xj);
            if (!constant)
                nonconstant.insert(s);
            if (!constant || !in_top.count(s))
            {
                kept.push_back(s);
                if (constant)
                    out.demoted.emplace_back(j, s);
            }
        }
        for (const Simplex& s : nonconstant)
            for (const Simplex& f : all_faces(s))
                if (!nonconstant.count(f))
                    throw Error(ErrorKind::Internal, "non-constant locus of level " + std::to_string(j) +
                                                         " is not face-closed at " + to_string(f) + " < " + to_string(s));
        levels[j - 1] = SimplicialComplex::from_closed(kept);
        if (levels[j - 1].dimension() > j - 1)
            throw Error(ErrorKind::Internal, "intrinsic level " + std::to_string(j - 1) + " has dimension " +
                                                 std::to_string(levels[j - 1].dimension()));
    }
    out.filtration = Filtration(K, levels);
    return out;
}

inline Filtration intrinsic_stratification(const SimplicialComplex& K)
{
    return intrinsic_stratification_detailed(K).filtration;
}

/**
 * Homology manifold test through links: every lk(sigma) must have the
 * reduced homology of the sphere of dimension n - dim(sigma) - 1.
 */
inline bool is_homology_manifold_by_links(const SimplicialComplex& K)
{
    if (!is_principal(K))
        throw Error(ErrorKind::NotPrincipal, "homology manifold test requires a principal complex");
    int n = K.dimension();
    for (const Simplex& s : K.all_simplexes())
    {
        int sphere_dim = n - dimension_of(s) - 1;
        SimplicialComplex lk = link(K, s);
        int top = std::max(lk.dimension(), sphere_dim);
        std::vector<FGAbelianGroup> h = reduced_homology_range(lk, -1, top);
        for (int k = -1; k <= top; ++k)
        {
            FGAbelianGroup expected = (k == sphere_dim) ? FGAbelianGroup(1) : FGAbelianGroup();
            if (!(h[k + 1] == expected))
                return false;
        }
    }
    return true;
}

/** Same test through local homology: H_k(K, C(sigma)) = Z for k = n, else 0. */
inline bool is_homology_manifold_by_local_homology(const SimplicialComplex& K)
{
    if (!is_principal(K))
        throw Error(ErrorKind::NotPrincipal, "homology manifold test requires a principal complex");
    LocalHomology lh(K);
    int n = K.dimension();
    for (const Simplex& s : K.all_simplexes())
    {
        const LocalProfile& p = lh.profile(s);
        for (int k = 0; k <= n; ++k)
            if (!(p[k] == (k == n ? FGAbelianGroup(1) : FGAbelianGroup())))
                return false;
    }
    return true;
}

inline bool is_homology_manifold(const SimplicialComplex& K)
{
    bool by_links = is_homology_manifold_by_links(K);
    if (by_links != is_homology_manifold_by_local_homology(K))
        throw Error(ErrorKind::Internal, "link and local-homology manifold tests disagree");
    return by_links;
}

namespace detail {

inline void require_filtration_on(const SimplicialComplex& K, const Filtration& F)
{
    if (!(F.base() == K))
        throw Error(ErrorKind::InvalidFiltration, "filtration is over a different complex");
}

/**
 * For every sigma and every proper coface tau in the same stratum, ask
 * each oracle whether q is an isomorphism.
 */
template <typename Check>
bool strata_constant(const Filtration& F, const LocalHomology& ambient, Check check)
{
    const SimplicialComplex& K = F.base();
    std::unordered_map<Simplex, int, SimplexHash> stratum;
    for (const Simplex& s : K.all_simplexes())
        stratum.emplace(s, F.stratum_of(s));
    for (const Simplex& s : K.all_simplexes())
    {
        int j = stratum.at(s);
        for (const Simplex& t : ambient.proper_cofaces(s))
            if (stratum.at(t) == j && !check(j, s, t))
                return false;
    }
    return true;
}

}   // namespace detail

inline bool check_h_stratification(const SimplicialComplex& K, const Filtration& F)
{
    detail::require_filtration_on(K, F);
    LocalHomology lh(K);
    return detail::strata_constant(F, lh, [&](int, const Simplex& s, const Simplex& t) { return lh.q_is_iso(s, t); });
}

/** Local homology of X_j (as a space of its own) constant on its top stratum, plus the ambient condition. */
inline bool check_strong(const SimplicialComplex& K, const Filtration& F)
{
    detail::require_filtration_on(K, F);
    int n = F.n();
    std::vector<LocalHomology> per_level;
    for (int j = 0; j <= n; ++j)
        per_level.emplace_back(F.level(j));
    const LocalHomology& ambient = per_level[n];
    return detail::strata_constant(F, ambient, [&](int j, const Simplex& s, const Simplex& t) {
        return ambient.q_is_iso(s, t) && per_level[j].q_is_iso(s, t);
    });
}

/** Local homology of every X_k, k >= j, constant on the j-th stratum. */
inline bool check_very_strong(const SimplicialComplex& K, const Filtration& F)
{
    detail::require_filtration_on(K, F);
    int n = F.n();
    std::vector<LocalHomology> per_level;
    for (int j = 0; j <= n; ++j)
        per_level.emplace_back(F.level(j));
    return detail::strata_constant(F, per_level[n], [&](int j, const Simplex& s, const Simplex& t) {
        for (int k = j; k <= n; ++k)
            if (!per_level[k].q_is_iso(s, t))
                return false;
        return true;
    });
}

/**
 * Is the j-th stratum X_j - X_{j-1} a homology j-manifold? Local homology
 * at its points is computed in X_j, where the stratum is open.
 */
inline bool stratum_is_homology_manifold(const Filtration& F, int j)
{
    LocalHomology lh(F.level(j));
    for (const Simplex& s : F.stratum(j))
    {
        const LocalProfile& p = lh.profile(s);
        for (int k = 0; k < static_cast<int>(p.size()); ++k)
            if (!(p[k] == (k == j ? FGAbelianGroup(1) : FGAbelianGroup())))
                return false;
    }
    return true;
}

struct StratumSummary
{
    int dimension = 0;
    std::size_t open_simplexes = 0;
    std::vector<LocalProfile> profiles;   // distinct ambient profiles, sorted by first appearance
    bool homology_manifold = false;
};

struct StratificationReport
{
    Filtration filtration;
    std::vector<std::pair<int, Simplex>> demoted;
    std::vector<StratumSummary> strata;   // occupied strata only, increasing dimension
    bool is_h_stratification = false;
    std::optional<bool> is_strong;
    std::optional<bool> is_very_strong;
    bool is_homology_manifold = false;
};

inline std::vector<StratumSummary> summarize_strata(const Filtration& F)
{
    LocalHomology lh(F.base());
    std::vector<StratumSummary> out;
    for (int j = 0; j <= F.n(); ++j)
    {
        std::vector<Simplex> cells = F.stratum(j);
        if (cells.empty())
            continue;
        StratumSummary s;
        s.dimension = j;
        s.open_simplexes = cells.size();
        for (const Simplex& c : cells)
        {
            const LocalProfile& p = lh.profile(c);
            if (std::find(s.profiles.begin(), s.profiles.end(), p) == s.profiles.end())
                s.profiles.push_back(p);
        }
        s.homology_manifold = stratum_is_homology_manifold(F, j);
        out.push_back(std::move(s));
    }
    return out;
}

inline StratificationReport stratify(const SimplicialComplex& K, bool strong, bool very_strong)
{
    StratificationReport r;
    IntrinsicStratification is = intrinsic_stratification_detailed(K);
    r.filtration = is.filtration;
    r.demoted = is.demoted;
    r.strata = summarize_strata(r.filtration);
    r.is_h_stratification = check_h_stratification(K, r.filtration);
    if (strong)
        r.is_strong = check_strong(K, r.filtration);
    if (very_strong)
        r.is_very_strong = check_very_strong(K, r.filtration);
    r.is_homology_manifold = is_homology_manifold(K);
    return r;
}

/**
 * EXPERIMENTAL. Relative permutation homology of (K, C(sigma)): the tower
 * T_i = K^pi_i u C(sigma)^(1) inside K^(1), and the image of
 * H_i(T_i, C(sigma)^(1)) -> H_i(T_{i+1}, C(sigma)^(1)).
 */
class LocalPermHomology
{
    private:
        std::vector<SimplicialComplex> tower_;
        SimplicialComplex floor_;
        int n_ = 0;

    public:
        LocalPermHomology(const SimplicialComplex& K, const Permutation& pi, const Simplex& sigma)
        {
            require_simplex(K, sigma);
            if (!is_allowable(pi).allowable)
                throw Error(ErrorKind::NotAllowable, "local permutation homology needs an allowable permutation");
            PermSkeletonTower T(K, pi);
            n_ = T.n();
            floor_ = subdivided_subcomplex(T.derived(), complement_of_open_star(K, sigma));
            for (int i = 0; i <= n_; ++i)
                tower_.push_back(union_of(T.level(i), floor_));
        }

        int n() const { return n_; }

        FGAbelianGroup via_image(int i) const
        {
            HomologyComputer src = HomologyComputer::of_pair(tower_[i], floor_);
            HomologyComputer dst = HomologyComputer::of_pair(tower_[std::min(i + 1, n_)], floor_);
            return image_subgroup(inclusion_map(src, dst, i));
        }

        /** Homology of the relative groups H_i(T_i, T_{i-1}), T_{-1} = C(sigma)^(1). */
        FGAbelianGroup via_chain(int i) const
        {
            auto level = [&](int t) -> const SimplicialComplex& { return t < 0 ? floor_ : tower_[t]; };
            auto rel = [&](int t) { return HomologyComputer::of_pair(level(t), level(t - 1)); };
            HomologyComputer mid = rel(i);
            CyclicDecomposition middle = mid.decomposition(i);
            IntMatrix incoming(middle.size(), 0);
            if (i < n_)
            {
                HomologyComputer up = rel(i + 1);
                incoming = connecting_map(up, mid, i + 1).matrix;
            }
            IntMatrix outgoing(0, middle.size());
            CyclicDecomposition next;
            if (i > 0)
            {
                HomologyComputer down = rel(i - 1);
                HomologyMap d = connecting_map(mid, down, i);
                outgoing = d.matrix;
                next = d.target;
            }
            return homology_at(middle, incoming, outgoing, next).decomposition.group();
        }

        LocalProfile profile_via_image() const
        {
            LocalProfile p;
            for (int i = 0; i <= n_; ++i)
                p.push_back(via_image(i));
            return p;
        }

        LocalProfile profile_via_chain() const
        {
            LocalProfile p;
            for (int i = 0; i <= n_; ++i)
                p.push_back(via_chain(i));
            return p;
        }
};

inline FGAbelianGroup local_perm_homology(const SimplicialComplex& K, const Permutation& pi, const Simplex& sigma,
                                          int i)
{
    return LocalPermHomology(K, pi, sigma).via_image(i);
}

}   // namespace permhom

#endif

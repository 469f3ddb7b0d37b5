/**
 * Exact integral homology of simplicial complexes and pairs, with explicit
 * generating cycles, inclusion-induced maps, images, and connecting maps.
 */

#ifndef PERMHOM_HOMOLOGY_HPP
#define PERMHOM_HOMOLOGY_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>
#include "abelian_group.hpp"
#include "chain_complex.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "integer_matrix.hpp"

namespace permhom {

/**
 * Dense boundary matrices d_0, ..., d_{n} of a complex (d_0 is the empty
 * map into degree -1). Rows and columns follow the canonical simplex order.
 */
inline std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& K)
{
    ChainComplex cc = ChainComplex::absolute(K);
    std::vector<IntMatrix> out;
    for (int k = 0; k <= cc.top_degree(); ++k)
        out.push_back(cc.boundary_matrix(k));
    return out;
}

/**
 * Homology of one chain complex in every degree. Generators are explicit
 * cycles; coordinates() expresses any cycle in those generators.
 */
class HomologyComputer
{
    private:
        struct Degree
        {
            CyclicDecomposition decomposition;
            std::vector<Chain> generators;
            std::size_t boundary_rank = 0;  // rank of d'_k
            IntMatrix V_inv;                // from SNF of d'_k
            IntMatrix to_generators;        // rows of U2 for kept generators
        };

        ChainComplex cc_;
        std::unique_ptr<ChainReduction> reduction_;
        mutable std::vector<std::optional<Degree>> degrees_;

        const Degree& degree(int k) const
        {
            if (!degrees_[k])
                degrees_[k] = compute(k);
            return *degrees_[k];
        }

        Degree compute(int k) const
        {
            Degree d;
            IntMatrix dk = reduction_->reduced_boundary(k);
            IntMatrix dk1 = reduction_->reduced_boundary(k + 1);
            std::size_t n = reduction_->survivor_count(k);
            SNFResult snf = smith_normal_form(dk);
            d.boundary_rank = snf.rank;
            d.V_inv = snf.V_inv;
            std::size_t z = n - snf.rank;
            if (z == 0)
                return d;
            // relations: images of (k+1)-cells in kernel coordinates
            IntMatrix rel_full = snf.V_inv * dk1;
            std::vector<std::size_t> kernel_rows;
            for (std::size_t i = snf.rank; i < n; ++i)
                kernel_rows.push_back(i);
            IntMatrix rel = rel_full.select_rows(kernel_rows);
            SNFResult snf2 = smith_normal_form(rel);
            std::vector<std::size_t> keep;
            IntMatrix kernel = snf.V.select_cols(kernel_rows);
            IntMatrix gen_survivor = kernel * snf2.U_inv;
            for (std::size_t t = 0; t < z; ++t)
            {
                Integer order = t < snf2.rank ? snf2.diagonal[t] : Integer(0);
                if (order == 1)
                    continue;
                keep.push_back(t);
                d.decomposition.orders.push_back(order);
                d.generators.push_back(cc_.globalize(k, reduction_->lift(k, gen_survivor.column(t))));
            }
            d.to_generators = snf2.U.select_rows(keep);
            return d;
        }

    public:
        explicit HomologyComputer(ChainComplex cc) : cc_(std::move(cc))
        {
            reduction_ = std::make_unique<ChainReduction>(cc_);
            degrees_.resize(cc_.top_degree() < 0 ? 0 : cc_.top_degree() + 1);
        }

        static HomologyComputer of(const SimplicialComplex& K)
        {
            return HomologyComputer(ChainComplex::absolute(K));
        }

        static HomologyComputer of_pair(const SimplicialComplex& K, const SimplicialComplex& L)
        {
            return HomologyComputer(ChainComplex::relative(K, L));
        }

        const ChainComplex& chain_complex() const { return cc_; }

        const ChainReduction& reduction() const { return *reduction_; }

        int top_degree() const { return cc_.top_degree(); }

        CyclicDecomposition decomposition(int k) const
        {
            if (k < 0 || k > top_degree())
                return {};
            return degree(k).decomposition;
        }

        FGAbelianGroup group(int k) const { return decomposition(k).group(); }

        std::vector<FGAbelianGroup> groups(int max_degree) const
        {
            std::vector<FGAbelianGroup> out;
            for (int k = 0; k <= max_degree; ++k)
                out.push_back(group(k));
            return out;
        }

        const std::vector<Chain>& generators(int k) const
        {
            static const std::vector<Chain> none;
            if (k < 0 || k > top_degree())
                return none;
            return degree(k).generators;
        }

        bool is_cycle(const Chain& z) const { return cc_.boundary(z).is_zero(); }

        /**
         * Class of a relative cycle in generator coordinates. Terms on cells
         * outside this complex are ignored (they vanish in the quotient).
         */
        IntVector coordinates(const Chain& z) const
        {
            int k = z.dim;
            if (k < 0 || k > top_degree())
                return {};
            const Degree& d = degree(k);
            if (d.decomposition.size() == 0)
                return {};
            IntVector x = reduction_->project(k, cc_.localize(z));
            IntVector full = d.V_inv * x;
            for (std::size_t i = 0; i < d.boundary_rank; ++i)
                if (full[i] != 0)
                    throw Error(ErrorKind::Internal, "coordinates requested for a non-cycle");
            IntVector kernel_part(full.begin() + d.boundary_rank, full.end());
            return d.decomposition.reduce(d.to_generators * kernel_part);
        }
};

inline FGAbelianGroup homology(const SimplicialComplex& K, int i)
{
    return HomologyComputer::of(K).group(i);
}

/** H_0..H_{dim K}. */
inline std::vector<FGAbelianGroup> homology_all(const SimplicialComplex& K)
{
    return HomologyComputer::of(K).groups(K.dimension());
}

/**
 * Reduced homology with the convention that the empty complex has
 * H~_{-1} = Z, which makes the link formula hold for top simplexes.
 */
inline FGAbelianGroup reduced_homology(const SimplicialComplex& K, int i)
{
    if (K.empty())
        return i == -1 ? FGAbelianGroup(1) : FGAbelianGroup();
    if (i < 0)
        return {};
    FGAbelianGroup g = homology(K, i);
    if (i == 0)
        g.rank -= 1;
    return g;
}

inline std::vector<FGAbelianGroup> reduced_homology_range(const SimplicialComplex& K, int from, int to)
{
    std::vector<FGAbelianGroup> out;
    if (K.empty())
    {
        for (int i = from; i <= to; ++i)
            out.push_back(i == -1 ? FGAbelianGroup(1) : FGAbelianGroup());
        return out;
    }
    HomologyComputer hc = HomologyComputer::of(K);
    for (int i = from; i <= to; ++i)
    {
        FGAbelianGroup g = i < 0 ? FGAbelianGroup() : hc.group(i);
        if (i == 0)
            g.rank -= 1;
        out.push_back(g);
    }
    return out;
}

inline FGAbelianGroup relative_homology(const SimplicialComplex& K, const SimplicialComplex& L, int i)
{
    return HomologyComputer::of_pair(K, L).group(i);
}

inline std::vector<FGAbelianGroup> relative_homology_all(const SimplicialComplex& K, const SimplicialComplex& L)
{
    return HomologyComputer::of_pair(K, L).groups(K.dimension());
}

/**
 * A homomorphism on homology presented on explicit generators: column j of
 * the matrix holds the image of source generator j in target generator
 * coordinates (reduced modulo the target orders).
 */
struct HomologyMap
{
    int degree = 0;
    CyclicDecomposition source;
    CyclicDecomposition target;
    std::vector<Chain> source_generators;
    std::vector<Chain> target_generators;
    IntMatrix matrix;

    GroupHomomorphism homomorphism() const { return GroupHomomorphism{source, target, matrix}; }

    FGAbelianGroup source_group() const { return source.group(); }
    FGAbelianGroup target_group() const { return target.group(); }
};

/**
 * Map induced in degree k by a chain map that sends each source generator
 * through `transform` before reading it in the target.
 */
template <typename Transform>
HomologyMap map_on_homology(const HomologyComputer& source, const HomologyComputer& target, int k,
                            Transform transform, int target_degree)
{
    HomologyMap m;
    m.degree = k;
    m.source = source.decomposition(k);
    m.target = target.decomposition(target_degree);
    m.source_generators = source.generators(k);
    m.target_generators = target.generators(target_degree);
    m.matrix = IntMatrix(m.target.size(), m.source.size());
    for (std::size_t j = 0; j < m.source_generators.size(); ++j)
    {
        Chain image = transform(m.source_generators[j]);
        if (m.target.size() == 0)
            continue;
        IntVector coords = target.coordinates(image);
        for (std::size_t i = 0; i < coords.size(); ++i)
            m.matrix(i, j) = coords[i];
    }
    return m;
}

/** The inclusion chain map: cells are carried over unchanged. */
inline HomologyMap inclusion_map(const HomologyComputer& source, const HomologyComputer& target, int k)
{
    return map_on_homology(source, target, k, [](const Chain& z) { return z; }, k);
}

/**
 * H_i(A) -> H_i(B) for complexes A <= B.
 */
inline HomologyMap induced_map(const SimplicialComplex& A, const SimplicialComplex& B, int i)
{
    require_subcomplex(A, B, "induced map: source is not a subcomplex of the target");
    return inclusion_map(HomologyComputer::of(A), HomologyComputer::of(B), i);
}

/**
 * H_i(K, A) -> H_i(K, B) for A <= B <= K.
 */
inline HomologyMap induced_pair_map(const SimplicialComplex& K, const SimplicialComplex& A,
                                    const SimplicialComplex& B, int i)
{
    require_subcomplex(A, B, "pair map: A is not a subcomplex of B");
    require_subcomplex(B, K, "pair map: B is not a subcomplex of K");
    return inclusion_map(HomologyComputer::of_pair(K, A), HomologyComputer::of_pair(K, B), i);
}

/**
 * Connecting homomorphism H_k(X, Y) -> H_{k-1}(Y, Z) of a triple Z <= Y <= X,
 * given the two homology computers.
 */
inline HomologyMap connecting_map(const HomologyComputer& upper, const HomologyComputer& lower, int k)
{
    return map_on_homology(
        upper, lower, k, [](const Chain& z) { return boundary_of(z); }, k - 1);
}

inline FGAbelianGroup image_subgroup(const HomologyMap& m)
{
    return image_of(m.homomorphism()).decomposition.group();
}

inline bool is_isomorphism(const HomologyMap& m)
{
    return is_isomorphism(m.homomorphism());
}

/**
 * Decide whether H_i(K, A) -> H_i(K, B) is an isomorphism in every degree
 * via the triple criterion H_*(B, A) = 0.
 */
inline bool pair_map_is_iso(const SimplicialComplex& K, const SimplicialComplex& A, const SimplicialComplex& B)
{
    require_subcomplex(A, B, "pair map: A is not a subcomplex of B");
    require_subcomplex(B, K, "pair map: B is not a subcomplex of K");
    HomologyComputer hc = HomologyComputer::of_pair(B, A);
    for (int k = 0; k <= hc.top_degree(); ++k)
        if (!hc.group(k).is_trivial())
            return false;
    return true;
}

/**
 * Same question answered by building every induced map and testing it.
 * Independent of the triple criterion; used as a cross-check.
 */
inline bool pair_map_is_iso_direct(const SimplicialComplex& K, const SimplicialComplex& A,
                                   const SimplicialComplex& B)
{
    require_subcomplex(A, B, "pair map: A is not a subcomplex of B");
    require_subcomplex(B, K, "pair map: B is not a subcomplex of K");
    HomologyComputer src = HomologyComputer::of_pair(K, A);
    HomologyComputer tgt = HomologyComputer::of_pair(K, B);
    for (int k = 0; k <= K.dimension(); ++k)
        if (!is_isomorphism(inclusion_map(src, tgt, k)))
            return false;
    return true;
}

}   // namespace permhom

#endif

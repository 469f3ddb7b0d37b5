/**
 * Finitely generated abelian groups and homomorphisms between them in
 * Smith-diagonal presentation.
 *
 * A "cyclic decomposition" is a list of orders, one per generator, where
 * order 0 stands for an infinite cyclic summand and every other order is
 * at least 2. Elements are integer coordinate vectors, reduced modulo the
 * corresponding orders.
 */

#ifndef PERMHOM_ABELIAN_GROUP_HPP
#define PERMHOM_ABELIAN_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>
#include "errors.hpp"
#include "integer_matrix.hpp"

namespace permhom {

/**
 * Isomorphism type: rank plus torsion coefficients d_1 | d_2 | ... with
 * every d_i >= 2. Two groups are isomorphic iff they compare equal.
 */
struct FGAbelianGroup
{
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    FGAbelianGroup() = default;
    FGAbelianGroup(std::size_t r, std::vector<Integer> t = {}) : rank(r), torsion(std::move(t)) { }

    static FGAbelianGroup trivial() { return {}; }

    /**
     * Canonical form from an arbitrary list of cyclic orders (0 = Z, 1 =
     * trivial). Non-chain torsion such as Z/2 + Z/3 is merged into the
     * divisor chain (Z/6).
     */
    static FGAbelianGroup from_orders(const std::vector<Integer>& orders)
    {
        FGAbelianGroup g;
        std::map<Integer, std::vector<Integer>> prime_powers;   // prime -> exponents as powers
        for (const Integer& raw : orders)
        {
            Integer d = abs(raw);
            if (d == 0)
            {
                ++g.rank;
                continue;
            }
            if (d == 1)
                continue;
            Integer n = d;
            for (Integer p = 2; p * p <= n; ++p)
            {
                if (n % p != 0)
                    continue;
                Integer pk = 1;
                while (n % p == 0)
                {
                    n /= p;
                    pk *= p;
                }
                prime_powers[p].push_back(pk);
            }
            if (n > 1)
                prime_powers[n].push_back(n);
        }
        // Assemble invariant factors from the largest prime powers downward.
        std::size_t count = 0;
        for (auto& [p, powers] : prime_powers)
        {
            std::sort(powers.begin(), powers.end());
            count = std::max(count, powers.size());
        }
        std::vector<Integer> factors(count, Integer(1));
        for (auto& [p, powers] : prime_powers)
        {
            std::size_t offset = count - powers.size();
            for (std::size_t i = 0; i < powers.size(); ++i)
                factors[offset + i] *= powers[i];
        }
        g.torsion = std::move(factors);
        return g;
    }

    bool is_trivial() const { return rank == 0 && torsion.empty(); }

    bool operator==(const FGAbelianGroup& other) const = default;

    /** Canonical rendering: "0", "Z", "Z^2 + Z/2", "Z/2 + Z/4". */
    std::string str() const
    {
        if (is_trivial())
            return "0";
        std::ostringstream out;
        bool first = true;
        if (rank > 0)
        {
            out << "Z";
            if (rank > 1)
                out << "^" << rank;
            first = false;
        }
        for (const Integer& d : torsion)
        {
            out << (first ? "" : " + ") << "Z/" << d;
            first = false;
        }
        return out.str();
    }

    /** Rendering with torsion split into prime-power cyclic summands. */
    std::string str_primary() const
    {
        if (is_trivial())
            return "0";
        std::vector<Integer> powers;
        for (const Integer& d : torsion)
        {
            Integer n = d;
            for (Integer p = 2; p * p <= n; ++p)
            {
                Integer pk = 1;
                while (n % p == 0)
                {
                    n /= p;
                    pk *= p;
                }
                if (pk > 1)
                    powers.push_back(pk);
            }
            if (n > 1)
                powers.push_back(n);
        }
        std::sort(powers.begin(), powers.end());
        std::ostringstream out;
        bool first = true;
        if (rank > 0)
        {
            out << "Z";
            if (rank > 1)
                out << "^" << rank;
            first = false;
        }
        for (const Integer& q : powers)
        {
            out << (first ? "" : " + ") << "Z/" << q;
            first = false;
        }
        return out.str();
    }
};

/**
 * A group as a direct sum of cyclic groups with one generator each.
 */
struct CyclicDecomposition
{
    std::vector<Integer> orders;

    std::size_t size() const { return orders.size(); }

    FGAbelianGroup group() const { return FGAbelianGroup::from_orders(orders); }

    IntVector reduce(IntVector x) const
    {
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = reduce_mod(x[i], orders[i]);
        return x;
    }

    /** Relation matrix: diagonal with the orders, zero columns dropped. */
    IntMatrix relations() const
    {
        std::vector<IntVector> cols;
        for (std::size_t i = 0; i < orders.size(); ++i)
        {
            if (orders[i] == 0)
                continue;
            IntVector c(orders.size(), Integer(0));
            c[i] = orders[i];
            cols.push_back(std::move(c));
        }
        return IntMatrix::from_columns(orders.size(), cols);
    }
};

namespace detail {

inline IntMatrix hcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw Error(ErrorKind::Internal, "hcat row mismatch");
    IntMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
    {
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

}   // namespace detail

/**
 * The quotient L / M of two lattices M <= L <= Z^n, as a cyclic
 * decomposition whose generators are given as vectors of Z^n.
 */
struct Subquotient
{
    CyclicDecomposition decomposition;
    std::vector<IntVector> generators;   // in ambient coordinates

    // Expresses an element of L in generator coordinates (modulo orders).
    IntMatrix basis_L;
    IntMatrix to_generators;   // rows: generators, acting on L-coordinates
};

/**
 * Compute L / M where L and M are given by generating sets (matrix
 * columns) in Z^n and M is contained in L.
 */
inline Subquotient subquotient(std::size_t n, const IntMatrix& gens_L, const IntMatrix& gens_M)
{
    Subquotient out;
    IntMatrix basis = gens_L.cols() ? lattice_basis(gens_L) : IntMatrix(n, 0);
    std::size_t r = basis.cols();
    out.basis_L = basis;
    if (r == 0)
    {
        out.to_generators = IntMatrix(0, 0);
        return out;
    }
    LatticeSolver solver(basis);
    std::vector<IntVector> rel_cols;
    for (std::size_t j = 0; j < gens_M.cols(); ++j)
    {
        auto x = solver.solve(gens_M.column(j));
        if (!x)
            throw Error(ErrorKind::Internal, "subquotient: relation lattice not contained in generator lattice");
        rel_cols.push_back(std::move(*x));
    }
    IntMatrix rel = IntMatrix::from_columns(r, rel_cols);
    SNFResult snf = smith_normal_form(rel);
    // Generator t of the quotient is column t of basis * U^{-1}; its order is
    // diagonal[t] (0 beyond the rank). Unit orders are dropped.
    IntMatrix gen_matrix = basis * snf.U_inv;
    std::vector<std::size_t> keep;
    for (std::size_t t = 0; t < r; ++t)
    {
        Integer order = t < snf.rank ? snf.diagonal[t] : Integer(0);
        if (order == 1)
            continue;
        keep.push_back(t);
        out.decomposition.orders.push_back(order);
        out.generators.push_back(gen_matrix.column(t));
    }
    out.to_generators = snf.U.select_rows(keep);
    return out;
}

/**
 * Coordinates of an element v of L (ambient coordinates) in the subquotient's
 * generators, reduced modulo their orders.
 */
inline IntVector subquotient_coordinates(const Subquotient& sq, const IntVector& v)
{
    if (sq.basis_L.cols() == 0)
        return {};
    LatticeSolver solver(sq.basis_L);
    auto x = solver.solve(v);
    if (!x)
        throw Error(ErrorKind::Internal, "element is not in the subquotient's lattice");
    return sq.decomposition.reduce(sq.to_generators * *x);
}

/**
 * A homomorphism between two cyclic decompositions, given by the images of
 * source generators (matrix columns) in target coordinates.
 */
struct GroupHomomorphism
{
    CyclicDecomposition source;
    CyclicDecomposition target;
    IntMatrix matrix;   // target.size() x source.size()
};

/**
 * Image subgroup of a homomorphism: (im f + R_T) / R_T, with generators
 * expressed in target coordinates.
 */
inline Subquotient image_of(const GroupHomomorphism& f)
{
    std::size_t n = f.target.size();
    IntMatrix rel = f.target.relations();
    return subquotient(n, detail::hcat(f.matrix, rel), rel);
}

/**
 * Kernel lattice {x in Z^source : f x in R_T}, as a basis matrix.
 */
inline IntMatrix kernel_lattice(const GroupHomomorphism& f)
{
    std::size_t ns = f.source.size();
    IntMatrix rel = f.target.relations();
    if (f.target.size() == 0)
        return IntMatrix::identity(ns);
    IntMatrix stacked = detail::hcat(f.matrix, rel);
    IntMatrix kb = kernel_basis(stacked);
    IntMatrix proj(ns, kb.cols());
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < kb.cols(); ++j)
            proj(i, j) = kb(i, j);
    return proj.cols() ? lattice_basis(proj) : proj;
}

inline bool is_injective(const GroupHomomorphism& f)
{
    IntMatrix k = kernel_lattice(f);
    for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < k.rows(); ++i)
        {
            const Integer& order = f.source.orders[i];
            if (order == 0 ? k(i, j) != 0 : k(i, j) % order != 0)
                return false;
        }
    return true;
}

inline bool is_surjective(const GroupHomomorphism& f)
{
    // Surjective iff the image lattice plus relations is all of Z^n.
    std::size_t n = f.target.size();
    if (n == 0)
        return true;
    SNFResult snf = smith_normal_form(detail::hcat(f.matrix, f.target.relations()), false);
    if (snf.rank != n)
        return false;
    return std::all_of(snf.diagonal.begin(), snf.diagonal.begin() + n,
                       [](const Integer& d) { return d == 1; });
}

inline bool is_isomorphism(const GroupHomomorphism& f)
{
    return is_injective(f) && is_surjective(f);
}

/**
 * Homology at the middle group of A --incoming--> B --outgoing--> C.
 * Requires outgoing * incoming = 0 modulo the relations of C.
 */
inline Subquotient homology_at(const CyclicDecomposition& middle, const IntMatrix& incoming,
                               const IntMatrix& outgoing, const CyclicDecomposition& next)
{
    std::size_t n = middle.size();
    GroupHomomorphism out{middle, next, outgoing};
    IntMatrix ker = kernel_lattice(out);
    IntMatrix im = detail::hcat(incoming, middle.relations());
    return subquotient(n, ker, im);
}

}   // namespace permhom

#endif

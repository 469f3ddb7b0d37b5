/**
 * Sparse simplicial chain complexes of pairs and their reduction.
 *
 * A ChainComplex holds the cells of K - L (for a pair L <= K) with the
 * oriented boundary restricted to those cells. Orientation is by ascending
 * vertex order: d[v0..vk] = sum_i (-1)^i [v0..^vi..vk].
 *
 * ChainReduction eliminates pairs (a, b) with <db, a> = +-1 one at a time
 * (algebraic Morse reduction). It records enough to move chains in both
 * directions between the original and the reduced complex:
 *   project: C -> C'   a chain map, a <- a - eps*db, b <- 0
 *   lift:    C' -> C   a chain map, c' = c - (<dc,a>/eps) b
 * with project o lift = id, so homology of C is computed on the small C'.
 */

#ifndef PERMHOM_CHAIN_COMPLEX_HPP
#define PERMHOM_CHAIN_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>
#include "complex.hpp"
#include "errors.hpp"
#include "integer_matrix.hpp"

namespace permhom {

/**
 * A simplicial chain with cells named by their vertex tuples, so chains
 * can be carried between complexes that share simplexes.
 */
struct Chain
{
    int dim = 0;
    std::map<Simplex, Integer> terms;

    bool is_zero() const { return terms.empty(); }

    void add(const Simplex& s, const Integer& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms.emplace(s, c);
        if (!inserted)
        {
            it->second += c;
            if (it->second == 0)
                terms.erase(it);
        }
    }

    bool operator==(const Chain& other) const = default;
};

/** Boundary of a chain in the full simplicial sense (no cells are dropped). */
inline Chain boundary_of(const Chain& c)
{
    Chain out;
    out.dim = c.dim - 1;
    if (c.dim <= 0)
        return out;
    for (const auto& [s, coef] : c.terms)
    {
        std::vector<Simplex> faces = facets_of(s);
        for (std::size_t i = 0; i < faces.size(); ++i)
            out.add(faces[i], (i % 2 == 0) ? coef : Integer(-coef));
    }
    return out;
}

using SparseColumn = std::vector<std::pair<int, Integer>>;   // sorted by row

class ChainComplex
{
    private:
        std::vector<std::vector<Simplex>> cells_;
        std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;
        std::vector<std::vector<std::vector<std::pair<int, int>>>> boundary_;   // [k][cell] -> (row, +-1)

        void finish()
        {
            index_.assign(cells_.size(), {});
            for (std::size_t k = 0; k < cells_.size(); ++k)
            {
                std::sort(cells_[k].begin(), cells_[k].end());
                for (std::size_t i = 0; i < cells_[k].size(); ++i)
                    index_[k].emplace(cells_[k][i], static_cast<int>(i));
            }
            boundary_.assign(cells_.size(), {});
            for (std::size_t k = 0; k < cells_.size(); ++k)
            {
                boundary_[k].resize(cells_[k].size());
                if (k == 0)
                    continue;
                for (std::size_t c = 0; c < cells_[k].size(); ++c)
                {
                    std::vector<Simplex> faces = facets_of(cells_[k][c]);
                    auto& col = boundary_[k][c];
                    for (std::size_t i = 0; i < faces.size(); ++i)
                    {
                        auto it = index_[k - 1].find(faces[i]);
                        if (it != index_[k - 1].end())
                            col.emplace_back(it->second, i % 2 == 0 ? 1 : -1);
                    }
                    std::sort(col.begin(), col.end());
                }
            }
        }

    public:
        ChainComplex() = default;

        /**
         * Cells given directly. The set must be of the form K - L for some
         * pair of complexes; faces outside the set are treated as zero.
         */
        static ChainComplex from_cells(const std::vector<Simplex>& cells)
        {
            ChainComplex cc;
            for (const Simplex& s : cells)
            {
                std::size_t k = s.size() - 1;
                if (cc.cells_.size() <= k)
                    cc.cells_.resize(k + 1);
                cc.cells_[k].push_back(s);
            }
            cc.finish();
            return cc;
        }

        static ChainComplex absolute(const SimplicialComplex& K)
        {
            return from_cells(K.all_simplexes());
        }

        static ChainComplex relative(const SimplicialComplex& K, const SimplicialComplex& L)
        {
            require_subcomplex(L, K, "relative chain complex: L is not a subcomplex of K");
            std::vector<Simplex> cells;
            for (int k = 0; k <= K.dimension(); ++k)
                for (const Simplex& s : K.simplexes(k))
                    if (!L.contains(s))
                        cells.push_back(s);
            return from_cells(cells);
        }

        /** Highest degree holding cells, -1 if none. */
        int top_degree() const { return static_cast<int>(cells_.size()) - 1; }

        std::size_t count(int k) const
        {
            return (k < 0 || k > top_degree()) ? 0 : cells_[k].size();
        }

        const Simplex& cell(int k, int i) const { return cells_[k][i]; }

        std::optional<int> index_of(const Simplex& s) const
        {
            int k = dimension_of(s);
            if (k < 0 || k > top_degree())
                return std::nullopt;
            auto it = index_[k].find(s);
            if (it == index_[k].end())
                return std::nullopt;
            return it->second;
        }

        const std::vector<std::pair<int, int>>& boundary_column(int k, int i) const { return boundary_[k][i]; }

        /** Dense d_k : C_k -> C_{k-1}. */
        IntMatrix boundary_matrix(int k) const
        {
            IntMatrix m(count(k - 1), count(k));
            if (k <= 0)
                return m;
            for (std::size_t c = 0; c < count(k); ++c)
                for (auto [r, v] : boundary_[k][c])
                    m(r, c) = v;
            return m;
        }

        /**
         * Local coordinate vector of a chain. Terms on cells outside the
         * complex are dropped (they are zero in the quotient).
         */
        std::map<int, Integer> localize(const Chain& z) const
        {
            std::map<int, Integer> out;
            for (const auto& [s, c] : z.terms)
                if (auto i = index_of(s))
                    out[*i] += c;
            for (auto it = out.begin(); it != out.end();)
                it = (it->second == 0) ? out.erase(it) : std::next(it);
            return out;
        }

        Chain globalize(int k, const std::map<int, Integer>& local) const
        {
            Chain z;
            z.dim = k;
            for (const auto& [i, c] : local)
                z.add(cells_[k][i], c);
            return z;
        }

        /** Boundary within this (relative) complex. */
        Chain boundary(const Chain& z) const
        {
            Chain out = boundary_of(z);
            Chain kept;
            kept.dim = out.dim;
            for (const auto& [s, c] : out.terms)
                if (index_of(s))
                    kept.add(s, c);
            return kept;
        }
};

/**
 * Elimination of unit pairs with a Markowitz-style pivot choice, keeping
 * the operation log needed for projection and lifting.
 */
class ChainReduction
{
    private:
        struct PairRecord
        {
            int dim_b;          // a lives in dim_b - 1
            int a, b;
            Integer eps;        // <db, a>, a unit
            SparseColumn col_b; // db at elimination time
        };

        int top_ = -1;
        std::vector<std::vector<SparseColumn>> cols_;      // [k][cell] boundary, rows in k-1
        std::vector<std::vector<std::set<int>>> rows_;     // [k][cell] -> (k+1)-cells with nonzero entry
        std::vector<std::vector<char>> alive_;
        std::vector<PairRecord> log_;
        std::vector<std::vector<std::size_t>> relevant_;   // [k] -> indices into log_ touching degree k
        // [k][cell] -> (b, factor): lift(cell) -= factor * lift(b)
        std::vector<std::vector<std::vector<std::pair<int, Integer>>>> updates_;
        mutable std::vector<std::unordered_map<int, std::map<int, Integer>>> lift_memo_;
        std::vector<std::vector<int>> survivors_;
        std::vector<std::unordered_map<int, int>> survivor_pos_;

        static Integer entry(const SparseColumn& col, int row)
        {
            auto it = std::lower_bound(col.begin(), col.end(), std::make_pair(row, Integer(0)),
                                       [](const auto& x, const auto& y) { return x.first < y.first; });
            return (it != col.end() && it->first == row) ? it->second : Integer(0);
        }

        // col <- col - factor * other, maintaining the row index of degree k-1.
        void axpy(int k, int c, const Integer& factor, const SparseColumn& other)
        {
            SparseColumn& col = cols_[k][c];
            SparseColumn out;
            out.reserve(col.size() + other.size());
            std::size_t i = 0, j = 0;
            while (i < col.size() || j < other.size())
            {
                if (j == other.size() || (i < col.size() && col[i].first < other[j].first))
                {
                    out.push_back(std::move(col[i++]));
                }
                else if (i == col.size() || other[j].first < col[i].first)
                {
                    Integer v = -factor * other[j].second;
                    rows_[k - 1][other[j].first].insert(c);
                    out.emplace_back(other[j].first, std::move(v));
                    ++j;
                }
                else
                {
                    Integer v = col[i].second - factor * other[j].second;
                    if (v != 0)
                        out.emplace_back(col[i].first, std::move(v));
                    else
                        rows_[k - 1][col[i].first].erase(c);
                    ++i;
                    ++j;
                }
            }
            col = std::move(out);
        }

        void eliminate(int k, int a, int b)
        {
            // b in degree k, a in degree k-1
            Integer eps = entry(cols_[k][b], a);
            SparseColumn colb = cols_[k][b];
            std::vector<int> others(rows_[k - 1][a].begin(), rows_[k - 1][a].end());
            for (int c : others)
            {
                if (c == b)
                    continue;
                Integer factor = entry(cols_[k][c], a) * eps;   // eps is its own inverse
                axpy(k, c, factor, colb);
                updates_[k][c].emplace_back(b, factor);
            }
            // (k+1)-cells lose their b-coefficient
            if (k + 1 <= top_)
            {
                std::vector<int> up(rows_[k][b].begin(), rows_[k][b].end());
                for (int d : up)
                {
                    SparseColumn& col = cols_[k + 1][d];
                    col.erase(std::remove_if(col.begin(), col.end(), [b](const auto& e) { return e.first == b; }),
                              col.end());
                }
                rows_[k][b].clear();
            }
            for (const auto& [r, v] : cols_[k][b])
                rows_[k - 1][r].erase(b);
            cols_[k][b].clear();
            // a leaves; drop its own boundary from the rows below
            if (k - 1 >= 1)
            {
                for (const auto& [r, v] : cols_[k - 1][a])
                    rows_[k - 2][r].erase(a);
                cols_[k - 1][a].clear();
            }
            rows_[k - 1][a].clear();
            alive_[k][b] = 0;
            alive_[k - 1][a] = 0;
            std::size_t id = log_.size();
            log_.push_back(PairRecord{k, a, b, eps, std::move(colb)});
            relevant_[k].push_back(id);
            relevant_[k - 1].push_back(id);
        }

        void reduce()
        {
            bool progress = true;
            while (progress)
            {
                progress = false;
                for (int k = 1; k <= top_; ++k)
                {
                    // candidate rows by increasing number of nonzeros
                    std::vector<int> order;
                    for (int a = 0; a < static_cast<int>(rows_[k - 1].size()); ++a)
                        if (alive_[k - 1][a] && !rows_[k - 1][a].empty())
                            order.push_back(a);
                    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
                        return rows_[k - 1][x].size() < rows_[k - 1][y].size();
                    });
                    for (int a : order)
                    {
                        if (!alive_[k - 1][a] || rows_[k - 1][a].empty())
                            continue;
                        int best = -1;
                        std::size_t best_size = 0;
                        for (int b : rows_[k - 1][a])
                        {
                            Integer v = entry(cols_[k][b], a);
                            if (v != 1 && v != -1)
                                continue;
                            if (best < 0 || cols_[k][b].size() < best_size)
                            {
                                best = b;
                                best_size = cols_[k][b].size();
                            }
                        }
                        if (best >= 0)
                        {
                            eliminate(k, a, best);
                            progress = true;
                        }
                    }
                }
            }
        }

        const std::map<int, Integer>& lift_cell(int k, int c) const
        {
            auto& memo = lift_memo_[k];
            auto it = memo.find(c);
            if (it != memo.end())
                return it->second;
            std::map<int, Integer> z;
            z[c] = 1;
            for (const auto& [b, factor] : updates_[k][c])
            {
                const std::map<int, Integer>& lb = lift_cell(k, b);
                for (const auto& [i, v] : lb)
                {
                    Integer& slot = z[i];
                    slot -= factor * v;
                    if (slot == 0)
                        z.erase(i);
                }
            }
            return memo.emplace(c, std::move(z)).first->second;
        }

    public:
        explicit ChainReduction(const ChainComplex& cc)
        {
            top_ = cc.top_degree();
            std::size_t levels = top_ < 0 ? 0 : static_cast<std::size_t>(top_ + 1);
            cols_.resize(levels);
            rows_.resize(levels);
            alive_.resize(levels);
            relevant_.resize(levels);
            updates_.resize(levels);
            lift_memo_.resize(levels);
            for (int k = 0; k <= top_; ++k)
            {
                std::size_t n = cc.count(k);
                cols_[k].resize(n);
                rows_[k].resize(n);
                alive_[k].assign(n, 1);
                updates_[k].resize(n);
            }
            for (int k = 1; k <= top_; ++k)
                for (std::size_t c = 0; c < cc.count(k); ++c)
                    for (auto [r, v] : cc.boundary_column(k, static_cast<int>(c)))
                    {
                        cols_[k][c].emplace_back(r, Integer(v));
                        rows_[k - 1][r].insert(static_cast<int>(c));
                    }
            reduce();
            survivors_.resize(levels);
            survivor_pos_.resize(levels);
            for (int k = 0; k <= top_; ++k)
                for (int c = 0; c < static_cast<int>(alive_[k].size()); ++c)
                    if (alive_[k][c])
                    {
                        survivor_pos_[k][c] = static_cast<int>(survivors_[k].size());
                        survivors_[k].push_back(c);
                    }
        }

        int top_degree() const { return top_; }

        std::size_t survivor_count(int k) const
        {
            return (k < 0 || k > top_) ? 0 : survivors_[k].size();
        }

        std::size_t eliminated_pairs() const { return log_.size(); }

        /** Boundary d'_k of the reduced complex, indexed by survivor positions. */
        IntMatrix reduced_boundary(int k) const
        {
            IntMatrix m(survivor_count(k - 1), survivor_count(k));
            if (k <= 0 || k > top_)
                return m;
            for (std::size_t j = 0; j < survivors_[k].size(); ++j)
                for (const auto& [r, v] : cols_[k][survivors_[k][j]])
                {
                    auto it = survivor_pos_[k - 1].find(r);
                    if (it == survivor_pos_[k - 1].end())
                        throw Error(ErrorKind::Internal, "reduced boundary references an eliminated cell");
                    m(it->second, j) = v;
                }
            return m;
        }

        /** Project a local k-chain of the original complex to survivor coordinates. */
        IntVector project(int k, std::map<int, Integer> z) const
        {
            IntVector out(survivor_count(k), Integer(0));
            if (k < 0 || k > top_)
                return out;
            for (std::size_t id : relevant_[k])
            {
                const PairRecord& rec = log_[id];
                if (rec.dim_b == k + 1)
                {
                    auto it = z.find(rec.a);
                    if (it == z.end())
                        continue;
                    Integer coef = it->second * rec.eps;
                    for (const auto& [r, v] : rec.col_b)
                    {
                        Integer& slot = z[r];
                        slot -= coef * v;
                        if (slot == 0)
                            z.erase(r);
                    }
                }
                else
                {
                    z.erase(rec.b);
                }
            }
            for (const auto& [i, v] : z)
            {
                auto it = survivor_pos_[k].find(i);
                if (it == survivor_pos_[k].end())
                    throw Error(ErrorKind::Internal, "projection left mass on an eliminated cell");
                out[it->second] = v;
            }
            return out;
        }

        /** Lift a survivor-coordinate k-chain back to a local chain of the original complex. */
        std::map<int, Integer> lift(int k, const IntVector& x) const
        {
            std::map<int, Integer> z;
            for (std::size_t j = 0; j < x.size(); ++j)
            {
                if (x[j] == 0)
                    continue;
                for (const auto& [i, v] : lift_cell(k, survivors_[k][j]))
                {
                    Integer& slot = z[i];
                    slot += x[j] * v;
                    if (slot == 0)
                        z.erase(i);
                }
            }
            return z;
        }
};

}   // namespace permhom

#endif

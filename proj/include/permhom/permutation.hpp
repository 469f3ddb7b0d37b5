/**
 * Permutations of {0..n} and the dimension-budget calculus around them:
 * d-tables, the allowability condition, V-shaped permutations, perversities
 * and the reduction that drops the value 0.
 */

#ifndef PERMHOM_PERMUTATION_HPP
#define PERMHOM_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>
#include "errors.hpp"

namespace permhom {

namespace detail {

/** Comma-separated integers ("3,1,0,2"), or whitespace-separated when there is no comma. */
inline std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<std::string> fields;
    if (text.find(',') != std::string::npos)
    {
        std::string field;
        std::istringstream in(text);
        while (std::getline(in, field, ','))
            fields.push_back(field);
        if (!text.empty() && text.back() == ',')
            fields.push_back("");
    }
    else
    {
        std::istringstream in(text);
        std::string field;
        while (in >> field)
            fields.push_back(field);
    }
    std::vector<int> out;
    for (std::string f : fields)
    {
        f.erase(0, f.find_first_not_of(" \t"));
        f.erase(f.find_last_not_of(" \t\r\n") + 1);
        std::size_t used = 0;
        int x = 0;
        try
        {
            x = std::stoi(f, &used);
        }
        catch (const std::exception&)
        {
            used = 0;
        }
        if (f.empty() || used != f.size())
            throw Error(ErrorKind::MalformedPermutation, "bad entry '" + f + "' in '" + text + "'");
        out.push_back(x);
    }
    return out;
}

}   // namespace detail

/**
 * A bijection of {0, ..., n}, stored in one-line notation.
 */
class Permutation
{
    private:
        std::vector<int> values_;

    public:
        Permutation() = default;

        explicit Permutation(std::vector<int> values) : values_(std::move(values))
        {
            std::vector<int> sorted = values_;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if (sorted[i] != static_cast<int>(i))
                    throw Error(ErrorKind::MalformedPermutation, "not a permutation of 0.." +
                                                                    std::to_string(values_.size() - 1) + ": " + str());
            if (values_.empty())
                throw Error(ErrorKind::MalformedPermutation, "empty permutation");
        }

        static Permutation identity(int n)
        {
            std::vector<int> v(n + 1);
            std::iota(v.begin(), v.end(), 0);
            return Permutation(v);
        }

        static Permutation reversal(int n)
        {
            std::vector<int> v(n + 1);
            for (int k = 0; k <= n; ++k)
                v[k] = n - k;
            return Permutation(v);
        }

        /** Parse one-line notation such as "3,1,0,2" (or space separated). */
        static Permutation parse(const std::string& text)
        {
            return Permutation(detail::parse_int_list(text));
        }

        /** n, so that the permutation acts on {0..n}. */
        int n() const { return static_cast<int>(values_.size()) - 1; }

        int operator()(int k) const { return values_.at(k); }

        const std::vector<int>& values() const { return values_; }

        int preimage(int value) const
        {
            auto it = std::find(values_.begin(), values_.end(), value);
            return static_cast<int>(it - values_.begin());
        }

        /** The dimension set {pi(0), ..., pi(i)}. */
        std::set<int> prefix_values(int i) const
        {
            std::set<int> out;
            for (int k = 0; k <= i && k <= n(); ++k)
                out.insert(values_[k]);
            return out;
        }

        /** k -> n - pi(k). */
        Permutation complemented() const
        {
            std::vector<int> v(values_.size());
            for (std::size_t k = 0; k < v.size(); ++k)
                v[k] = n() - values_[k];
            return Permutation(v);
        }

        /** k -> pi(n - k). */
        Permutation reversed_order() const
        {
            std::vector<int> v(values_.rbegin(), values_.rend());
            return Permutation(v);
        }

        std::string str() const
        {
            std::ostringstream out;
            for (std::size_t k = 0; k < values_.size(); ++k)
                out << (k ? "," : "") << values_[k];
            return out.str();
        }

        bool operator==(const Permutation&) const = default;
        auto operator<=>(const Permutation&) const = default;
};

/** Every permutation of {0..n} in lexicographic order. */
inline std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> v(n + 1);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do
        out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/**
 * d[i][j] = |pi[0,i] n [0,j]| - 1, for 0 <= i, j <= n.
 */
class DTable
{
    private:
        int n_ = 0;
        std::vector<int> d_;

    public:
        DTable() = default;

        explicit DTable(const Permutation& pi) : n_(pi.n()), d_((pi.n() + 1) * (pi.n() + 1))
        {
            for (int i = 0; i <= n_; ++i)
                for (int j = 0; j <= n_; ++j)
                {
                    int count = 0;
                    for (int k = 0; k <= i; ++k)
                        if (pi(k) <= j)
                            ++count;
                    d_[i * (n_ + 1) + j] = count - 1;
                }
        }

        int n() const { return n_; }

        int operator()(int i, int j) const { return d_.at(i * (n_ + 1) + j); }

        std::vector<int> row(int i) const
        {
            return std::vector<int>(d_.begin() + i * (n_ + 1), d_.begin() + (i + 1) * (n_ + 1));
        }

        bool operator==(const DTable&) const = default;

        std::string str() const
        {
            std::ostringstream out;
            for (int i = 0; i <= n_; ++i)
            {
                for (int j = 0; j <= n_; ++j)
                {
                    std::string cell = std::to_string((*this)(i, j));
                    out << std::string(j ? 4 - cell.size() : 3 - cell.size(), ' ') << cell;
                }
                out << "\n";
            }
            return out.str();
        }
};

inline DTable d_table(const Permutation& pi) { return DTable(pi); }

struct AllowabilityWitness
{
    int i = 0;
    int j = 0;
};

struct AllowabilityResult
{
    bool allowable = true;
    std::optional<AllowabilityWitness> witness;   // first failing (i, j) in row-major order
};

namespace detail {

template <typename ColumnFilter>
AllowabilityResult check_star_condition(const Permutation& pi, ColumnFilter checked)
{
    DTable d(pi);
    int n = pi.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j)
        {
            if (!checked(j))
                continue;
            int dij = d(i, j);
            if (dij >= 0 && dij < j && d(i + 1, j) != dij + 1)
                return {false, AllowabilityWitness{i, j}};
        }
    return {true, std::nullopt};
}

}   // namespace detail

/**
 * Allowable: whenever 0 <= d[i][j] < j, the next row gains one,
 * d[i+1][j] = d[i][j] + 1.
 */
inline AllowabilityResult is_allowable(const Permutation& pi)
{
    return detail::check_star_condition(pi, [](int) { return true; });
}

/**
 * Allowability checked only at the occupied strata dimensions j, i.e. those
 * with X_j - X_{j-1} nonempty.
 */
inline AllowabilityResult is_filtration_allowable(const Permutation& pi, const std::set<int>& occupancy)
{
    return detail::check_star_condition(pi, [&](int j) { return occupancy.count(j) > 0; });
}

/**
 * Data of a V-shaped permutation: pivot u with pi(u) = 0, the set
 * S = pi[0, u-1] of values before the pivot, and q_j = |S n [j+1, n]|.
 */
struct VShapeData
{
    int pivot = 0;
    std::set<int> before_pivot;
    std::vector<int> q;
};

inline std::optional<VShapeData> is_v_shaped(const Permutation& pi)
{
    int n = pi.n();
    int u = pi.preimage(0);
    for (int k = 0; k < u; ++k)
        if (pi(k) < pi(k + 1))
            return std::nullopt;
    for (int k = u; k < n; ++k)
        if (pi(k) > pi(k + 1))
            return std::nullopt;
    VShapeData data;
    data.pivot = u;
    for (int k = 0; k < u; ++k)
        data.before_pivot.insert(pi(k));
    data.q.resize(n + 1);
    for (int j = 0; j <= n; ++j)
        data.q[j] = static_cast<int>(std::count_if(data.before_pivot.begin(), data.before_pivot.end(),
                                                   [j](int s) { return s > j; }));
    return data;
}

/**
 * Perversity p_0, ..., p_n with p_0 = 0 and unit-or-zero increments.
 */
class Perversity
{
    private:
        std::vector<int> values_;

    public:
        Perversity() = default;

        explicit Perversity(std::vector<int> values) : values_(std::move(values))
        {
            if (values_.empty())
                throw Error(ErrorKind::MalformedPermutation, "empty perversity");
            if (values_[0] != 0)
                throw Error(ErrorKind::MalformedPermutation, "perversity must start with p_0 = 0: " + str());
            for (std::size_t i = 1; i < values_.size(); ++i)
            {
                int step = values_[i] - values_[i - 1];
                if (step != 0 && step != 1)
                    throw Error(ErrorKind::MalformedPermutation, "perversity steps must be 0 or 1: " + str());
            }
        }

        static Perversity zero(int n) { return Perversity(std::vector<int>(n + 1, 0)); }

        /** p_c = c. */
        static Perversity top(int n)
        {
            std::vector<int> v(n + 1);
            std::iota(v.begin(), v.end(), 0);
            return Perversity(v);
        }

        static Perversity parse(const std::string& text)
        {
            return Perversity(detail::parse_int_list(text));
        }

        int n() const { return static_cast<int>(values_.size()) - 1; }

        int operator()(int c) const { return values_.at(c); }

        const std::vector<int>& values() const { return values_; }

        std::string str() const
        {
            std::ostringstream out;
            for (std::size_t k = 0; k < values_.size(); ++k)
                out << (k ? "," : "") << values_[k];
            return out.str();
        }

        bool operator==(const Perversity&) const = default;
};

/** All 2^n perversities of length n + 1. */
inline std::vector<Perversity> all_perversities(int n)
{
    std::vector<Perversity> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
    {
        std::vector<int> v(n + 1, 0);
        for (int c = 1; c <= n; ++c)
            v[c] = v[c - 1] + ((mask >> (c - 1)) & 1u);
        out.emplace_back(v);
    }
    return out;
}

/** The V-shaped permutation whose pre-pivot value set is S. */
inline Permutation v_shaped_from_set(int n, const std::set<int>& S)
{
    std::vector<int> v(S.rbegin(), S.rend());
    v.push_back(0);
    for (int x = 1; x <= n; ++x)
        if (!S.count(x))
            v.push_back(x);
    return Permutation(v);
}

/**
 * S = { j : 0 < j <= n, p_{n-j} = p_{n-j+1} }, realized as a V-shaped
 * permutation.
 */
inline Permutation perversity_to_permutation(const Perversity& p)
{
    int n = p.n();
    std::set<int> S;
    for (int j = 1; j <= n; ++j)
        if (p(n - j) == p(n - j + 1))
            S.insert(j);
    return v_shaped_from_set(n, S);
}

/**
 * Inverse of perversity_to_permutation: p_c = c - q_{n-c}.
 */
inline Perversity permutation_to_perversity(const Permutation& pi)
{
    auto v = is_v_shaped(pi);
    if (!v)
        throw Error(ErrorKind::NotAllowable, "permutation " + pi.str() + " is not V-shaped");
    int n = pi.n();
    std::vector<int> p(n + 1);
    for (int c = 0; c <= n; ++c)
        p[c] = c - v->q[n - c];
    return Perversity(p);
}

/**
 * The intersection-homology dimension budget, clamped at -1:
 * max(-1, min(j, i + j - n + p_{n-j})).
 */
inline int perversity_budget(const Perversity& p, int i, int j)
{
    int n = p.n();
    return std::max(-1, std::min(j, i + j - n + p(n - j)));
}

/**
 * Delete the value 0 and its preimage, then reindex both sides
 * order-preservingly. Acts on {0..n-1}.
 */
inline Permutation reduce(const Permutation& pi)
{
    if (pi.n() < 1)
        throw Error(ErrorKind::CannotReduce, "cannot reduce a permutation of {0}");
    std::vector<int> v;
    for (int k = 0; k <= pi.n(); ++k)
        if (pi(k) != 0)
            v.push_back(pi(k) - 1);
    return Permutation(v);
}

}   // namespace permhom

#endif

/**
 * Dense arbitrary-precision integer matrices, Smith normal form with
 * unimodular transforms, and the small lattice routines built on it.
 *
 * These routines only ever see matrices that have already been shrunk by
 * the sparse reduction in chain_complex.hpp, so a dense representation
 * is adequate here.
 */

#ifndef PERMHOM_INTEGER_MATRIX_HPP
#define PERMHOM_INTEGER_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>
#include <boost/multiprecision/cpp_int.hpp>
#include "errors.hpp"

namespace permhom {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/**
 * Floor-style Euclidean remainder in [0, |m|), with m = 0 meaning "no
 * reduction" (the coordinate lives in a free summand).
 */
inline Integer reduce_mod(const Integer& x, const Integer& m)
{
    if (m == 0)
        return x;
    Integer am = abs(m);
    Integer r = x % am;
    if (r < 0)
        r += am;
    return r;
}

class IntMatrix
{
    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<Integer> data_;

    public:
        IntMatrix() = default;

        IntMatrix(std::size_t rows, std::size_t cols)
            : rows_(rows), cols_(cols), data_(rows * cols, Integer(0))
        {
        }

        IntMatrix(std::initializer_list<std::initializer_list<long long>> init)
        {
            rows_ = init.size();
            cols_ = rows_ == 0 ? 0 : init.begin()->size();
            data_.reserve(rows_ * cols_);
            for (const auto& row : init)
            {
                if (row.size() != cols_)
                    throw Error(ErrorKind::UndefinedInput, "ragged matrix literal");
                for (long long v : row)
                    data_.emplace_back(v);
            }
        }

        static IntMatrix identity(std::size_t n)
        {
            IntMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                m(i, i) = 1;
            return m;
        }

        /** Build a matrix whose columns are the given vectors (all of length rows). */
        static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns)
        {
            IntMatrix m(rows, columns.size());
            for (std::size_t j = 0; j < columns.size(); ++j)
            {
                if (columns[j].size() != rows)
                    throw Error(ErrorKind::Internal, "column length mismatch");
                for (std::size_t i = 0; i < rows; ++i)
                    m(i, j) = columns[j][i];
            }
            return m;
        }

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }

        Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
        const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

        IntVector column(std::size_t j) const
        {
            IntVector v(rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                v[i] = (*this)(i, j);
            return v;
        }

        IntVector row(std::size_t i) const
        {
            return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
        }

        bool is_zero() const
        {
            return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
        }

        bool operator==(const IntMatrix& other) const = default;

        void swap_rows(std::size_t a, std::size_t b)
        {
            if (a == b)
                return;
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap((*this)(a, j), (*this)(b, j));
        }

        void swap_cols(std::size_t a, std::size_t b)
        {
            if (a == b)
                return;
            for (std::size_t i = 0; i < rows_; ++i)
                std::swap((*this)(i, a), (*this)(i, b));
        }

        /** row[target] += factor * row[source] */
        void add_row(std::size_t target, std::size_t source, const Integer& factor)
        {
            if (factor == 0)
                return;
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(source, j) != 0)
                    (*this)(target, j) += factor * (*this)(source, j);
        }

        /** col[target] += factor * col[source] */
        void add_col(std::size_t target, std::size_t source, const Integer& factor)
        {
            if (factor == 0)
                return;
            for (std::size_t i = 0; i < rows_; ++i)
                if ((*this)(i, source) != 0)
                    (*this)(i, target) += factor * (*this)(i, source);
        }

        void negate_row(std::size_t i)
        {
            for (std::size_t j = 0; j < cols_; ++j)
                (*this)(i, j) = -(*this)(i, j);
        }

        void negate_col(std::size_t j)
        {
            for (std::size_t i = 0; i < rows_; ++i)
                (*this)(i, j) = -(*this)(i, j);
        }

        IntMatrix select_rows(const std::vector<std::size_t>& idx) const
        {
            IntMatrix m(idx.size(), cols_);
            for (std::size_t r = 0; r < idx.size(); ++r)
                for (std::size_t j = 0; j < cols_; ++j)
                    m(r, j) = (*this)(idx[r], j);
            return m;
        }

        IntMatrix select_cols(const std::vector<std::size_t>& idx) const
        {
            IntMatrix m(rows_, idx.size());
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t c = 0; c < idx.size(); ++c)
                    m(i, c) = (*this)(i, idx[c]);
            return m;
        }

        std::string str() const
        {
            std::ostringstream out;
            out << "[";
            for (std::size_t i = 0; i < rows_; ++i)
            {
                out << (i ? "; " : "");
                for (std::size_t j = 0; j < cols_; ++j)
                    out << (j ? " " : "") << (*this)(i, j);
            }
            out << "]";
            return out.str();
        }
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::Internal, "matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

inline IntVector operator*(const IntMatrix& a, const IntVector& x)
{
    if (a.cols() != x.size())
        throw Error(ErrorKind::Internal, "matrix-vector dimension mismatch");
    IntVector y(a.rows(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (x[k] != 0 && a(i, k) != 0)
                y[i] += a(i, k) * x[k];
    return y;
}

/**
 * Exact determinant by fraction-free (Bareiss) elimination.
 */
inline Integer determinant(IntMatrix m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::UndefinedInput, "determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0)
        return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (m(k, k) == 0)
        {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/**
 * Result of a Smith normal form computation: U * M * V = D where D is
 * diagonal with nonnegative entries d_0 | d_1 | ... and U, V unimodular.
 * The inverses are maintained alongside so that coordinate changes never
 * need a separate inversion.
 */
struct SNFResult
{
    std::vector<Integer> diagonal;   // length min(rows, cols); trailing zeros allowed
    std::size_t rank = 0;
    IntMatrix U, U_inv, V, V_inv;
    bool has_transforms = false;

    IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const
    {
        IntMatrix d(rows, cols);
        for (std::size_t i = 0; i < diagonal.size(); ++i)
            d(i, i) = diagonal[i];
        return d;
    }
};

namespace detail {

class SmithReducer
{
    private:
        IntMatrix& m_;
        bool track_;
        IntMatrix U_, U_inv_, V_, V_inv_;

        void swap_rows(std::size_t a, std::size_t b)
        {
            m_.swap_rows(a, b);
            if (track_)
            {
                U_.swap_rows(a, b);
                U_inv_.swap_cols(a, b);
            }
        }

        void swap_cols(std::size_t a, std::size_t b)
        {
            m_.swap_cols(a, b);
            if (track_)
            {
                V_.swap_cols(a, b);
                V_inv_.swap_rows(a, b);
            }
        }

        void add_row(std::size_t target, std::size_t source, const Integer& f)
        {
            m_.add_row(target, source, f);
            if (track_)
            {
                U_.add_row(target, source, f);
                U_inv_.add_col(source, target, -f);
            }
        }

        void add_col(std::size_t target, std::size_t source, const Integer& f)
        {
            m_.add_col(target, source, f);
            if (track_)
            {
                V_.add_col(target, source, f);
                V_inv_.add_row(source, target, -f);
            }
        }

        void negate_row(std::size_t i)
        {
            m_.negate_row(i);
            if (track_)
            {
                U_.negate_row(i);
                U_inv_.negate_col(i);
            }
        }

        // Smallest nonzero |entry| in the trailing block, or nullopt if it is zero.
        std::optional<std::pair<std::size_t, std::size_t>> min_entry(std::size_t t) const
        {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            Integer best_abs;
            for (std::size_t i = t; i < m_.rows(); ++i)
                for (std::size_t j = t; j < m_.cols(); ++j)
                {
                    const Integer& x = m_(i, j);
                    if (x == 0)
                        continue;
                    Integer ax = abs(x);
                    if (!best || ax < best_abs)
                    {
                        best = {i, j};
                        best_abs = ax;
                        if (best_abs == 1)
                            return best;
                    }
                }
            return best;
        }

    public:
        SmithReducer(IntMatrix& m, bool track) : m_(m), track_(track)
        {
            if (track_)
            {
                U_ = IntMatrix::identity(m.rows());
                U_inv_ = IntMatrix::identity(m.rows());
                V_ = IntMatrix::identity(m.cols());
                V_inv_ = IntMatrix::identity(m.cols());
            }
        }

        SNFResult run()
        {
            std::size_t n = std::min(m_.rows(), m_.cols());
            std::size_t t = 0;
            for (; t < n; ++t)
            {
                auto pivot = min_entry(t);
                if (!pivot)
                    break;
                swap_rows(t, pivot->first);
                swap_cols(t, pivot->second);

                while (true)
                {
                    bool dirty = false;
                    // clear column t below the pivot
                    for (std::size_t i = t + 1; i < m_.rows(); ++i)
                    {
                        if (m_(i, t) == 0)
                            continue;
                        Integer q = m_(i, t) / m_(t, t);
                        add_row(i, t, -q);
                        if (m_(i, t) != 0)
                        {
                            swap_rows(t, i);
                            dirty = true;
                        }
                    }
                    // clear row t right of the pivot
                    for (std::size_t j = t + 1; j < m_.cols(); ++j)
                    {
                        if (m_(t, j) == 0)
                            continue;
                        Integer q = m_(t, j) / m_(t, t);
                        add_col(j, t, -q);
                        if (m_(t, j) != 0)
                        {
                            swap_cols(t, j);
                            dirty = true;
                        }
                    }
                    if (dirty)
                        continue;

                    // divisibility: the pivot must divide the whole trailing block
                    bool fixed = false;
                    for (std::size_t i = t + 1; i < m_.rows() && !fixed; ++i)
                        for (std::size_t j = t + 1; j < m_.cols(); ++j)
                            if (m_(i, j) % m_(t, t) != 0)
                            {
                                add_row(t, i, Integer(1));
                                fixed = true;
                                break;
                            }
                    if (!fixed)
                        break;
                }
                if (m_(t, t) < 0)
                    negate_row(t);
            }

            SNFResult result;
            result.rank = t;
            result.diagonal.assign(n, Integer(0));
            for (std::size_t i = 0; i < t; ++i)
                result.diagonal[i] = m_(i, i);
            if (track_)
            {
                result.U = std::move(U_);
                result.U_inv = std::move(U_inv_);
                result.V = std::move(V_);
                result.V_inv = std::move(V_inv_);
                result.has_transforms = true;
            }
            return result;
        }
};

}   // namespace detail

/**
 * Smith normal form of an integer matrix. The diagonal is returned in
 * divisor-chain order; nonzero entries come first.
 */
inline SNFResult smith_normal_form(IntMatrix m, bool with_transforms = true)
{
    detail::SmithReducer reducer(m, with_transforms);
    return reducer.run();
}

/**
 * Basis (as matrix columns) of the integer kernel {x : M x = 0}.
 */
inline IntMatrix kernel_basis(const IntMatrix& m)
{
    SNFResult snf = smith_normal_form(m);
    std::vector<std::size_t> idx;
    for (std::size_t j = snf.rank; j < m.cols(); ++j)
        idx.push_back(j);
    return snf.V.select_cols(idx);
}

/**
 * Basis of the lattice spanned by the columns of a generating matrix.
 */
inline IntMatrix lattice_basis(const IntMatrix& generators)
{
    SNFResult snf = smith_normal_form(generators);
    IntMatrix basis(generators.rows(), snf.rank);
    for (std::size_t c = 0; c < snf.rank; ++c)
        for (std::size_t i = 0; i < generators.rows(); ++i)
            basis(i, c) = snf.U_inv(i, c) * snf.diagonal[c];
    return basis;
}

/**
 * Solve B x = v over the integers for a basis matrix B of full column rank.
 * Returns nullopt when v is not in the lattice spanned by B.
 */
class LatticeSolver
{
    private:
        SNFResult snf_;
        std::size_t rows_ = 0;

    public:
        explicit LatticeSolver(const IntMatrix& basis) : snf_(smith_normal_form(basis)), rows_(basis.rows())
        {
            if (snf_.rank != basis.cols())
                throw Error(ErrorKind::Internal, "lattice basis is not of full column rank");
        }

        std::optional<IntVector> solve(const IntVector& v) const
        {
            if (v.size() != rows_)
                throw Error(ErrorKind::Internal, "lattice solve dimension mismatch");
            IntVector uv = snf_.U * v;
            IntVector y(snf_.rank);
            for (std::size_t i = 0; i < uv.size(); ++i)
            {
                if (i < snf_.rank)
                {
                    if (uv[i] % snf_.diagonal[i] != 0)
                        return std::nullopt;
                    y[i] = uv[i] / snf_.diagonal[i];
                }
                else if (uv[i] != 0)
                    return std::nullopt;
            }
            return snf_.V * y;
        }
};

}   // namespace permhom

#endif

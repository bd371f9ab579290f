#include "hocolim/intalg.hpp"

#include <sstream>
#include <utility>

#include "hocolim/errors.hpp"

namespace hocolim {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw ValidationError("IntMatrix: ragged initializer");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const
{
    IntMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c)
            out(r, c) = (*this)(r, first + c);
    return out;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const
{
    IntMatrix out(count, cols_);
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(first + r, c);
    return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const
{
    if (other.rows_ != rows_)
        throw ValidationError("IntMatrix::hconcat: row counts differ");
    IntMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c)
            out(r, cols_ + c) = other(r, c);
    }
    return out;
}

bool IntMatrix::is_zero() const
{
    for (const auto& v : data_)
        if (v != 0)
            return false;
    return true;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? "," : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw ValidationError("IntMatrix: dimension mismatch in product");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("IntMatrix: dimension mismatch in difference");
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) - b(i, j);
    return out;
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw ValidationError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<Integer> SmithForm::diagonal() const
{
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank; ++i)
        d.push_back(D(i, i));
    return d;
}

namespace {

// Elementary operations applied to D while keeping U, V and their inverses
// consistent with D = U * M * V.
struct SmithState {
    IntMatrix& D;
    IntMatrix& U;
    IntMatrix& U_inv;
    IntMatrix& V;
    IntMatrix& V_inv;

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t c = 0; c < D.cols(); ++c)
            std::swap(D(a, c), D(b, c));
        for (std::size_t c = 0; c < U.cols(); ++c)
            std::swap(U(a, c), U(b, c));
        for (std::size_t r = 0; r < U_inv.rows(); ++r)
            std::swap(U_inv(r, a), U_inv(r, b));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t r = 0; r < D.rows(); ++r)
            std::swap(D(r, a), D(r, b));
        for (std::size_t r = 0; r < V.rows(); ++r)
            std::swap(V(r, a), V(r, b));
        for (std::size_t c = 0; c < V_inv.cols(); ++c)
            std::swap(V_inv(a, c), V_inv(b, c));
    }
    // row_dst += q * row_src
    void add_row(std::size_t dst, std::size_t src, const Integer& q)
    {
        if (q == 0)
            return;
        for (std::size_t c = 0; c < D.cols(); ++c)
            D(dst, c) += q * D(src, c);
        for (std::size_t c = 0; c < U.cols(); ++c)
            U(dst, c) += q * U(src, c);
        for (std::size_t r = 0; r < U_inv.rows(); ++r)
            U_inv(r, src) -= q * U_inv(r, dst);
    }
    // col_dst += q * col_src
    void add_col(std::size_t dst, std::size_t src, const Integer& q)
    {
        if (q == 0)
            return;
        for (std::size_t r = 0; r < D.rows(); ++r)
            D(r, dst) += q * D(r, src);
        for (std::size_t r = 0; r < V.rows(); ++r)
            V(r, dst) += q * V(r, src);
        for (std::size_t c = 0; c < V_inv.cols(); ++c)
            V_inv(src, c) -= q * V_inv(dst, c);
    }
    void negate_row(std::size_t a)
    {
        for (std::size_t c = 0; c < D.cols(); ++c)
            D(a, c) = -D(a, c);
        for (std::size_t c = 0; c < U.cols(); ++c)
            U(a, c) = -U(a, c);
        for (std::size_t r = 0; r < U_inv.rows(); ++r)
            U_inv(r, a) = -U_inv(r, a);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()),
                IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
    SmithState st{s.D, s.U, s.U_inv, s.V, s.V_inv};
    IntMatrix& d = s.D;
    const std::size_t rows = m.rows(), cols = m.cols();

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        bool found = true;
        for (;;) {
            // Smallest |entry| in the active block, row-major on ties.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (d(r, c) != 0 && (pr == rows || mpz_cmpabs(d(r, c).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0)) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows) {
                found = false;
                break;
            }
            st.swap_rows(t, pr);
            st.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (d(r, t) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
                st.add_row(r, t, -q);
                if (d(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (d(t, c) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
                st.add_col(c, t, -q);
                if (d(t, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Divisibility: fold a row holding a non-multiple into row t.
            std::size_t bad = rows;
            for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
                        bad = r;
                        break;
                    }
            if (bad == rows)
                break;
            st.add_row(t, bad, 1);
        }
        if (!found)
            break;
        if (d(t, t) < 0)
            st.negate_row(t);
        s.rank = t + 1;
    }
    return s;
}

std::string FgAbelianGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::string out;
    if (rank > 0)
        out = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (const auto& t : torsion) {
        if (!out.empty())
            out += " + ";
        out += "Z/" + t.get_str();
    }
    return out;
}

FgAbelianGroup cokernel_group(const IntMatrix& m)
{
    SmithForm s = smith_normal_form(m);
    FgAbelianGroup g;
    g.rank = m.cols() - s.rank;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.D(i, i) != 1)
            g.torsion.push_back(s.D(i, i));
    return g;
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    SmithForm s = smith_normal_form(m);
    return s.V.column_block(s.rank, m.cols() - s.rank);
}

IntMatrix column_hermite_form(const IntMatrix& m)
{
    // Row echelon form of the generators-as-rows matrix, transposed back.
    IntMatrix a = m.transpose();
    const std::size_t n = a.rows(), dim = a.cols();
    auto swap_rows = [&](std::size_t x, std::size_t y) {
        for (std::size_t c = 0; c < dim; ++c)
            std::swap(a(x, c), a(y, c));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t c = 0; c < dim; ++c)
            a(dst, c) += q * a(src, c);
    };

    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < dim && row < n; ++col) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t r = row; r < n; ++r)
                if (a(r, col) != 0 && (best == n || mpz_cmpabs(a(r, col).get_mpz_t(), a(best, col).get_mpz_t()) < 0))
                    best = r;
            if (best == n)
                break;
            swap_rows(row, best);
            bool clean = true;
            for (std::size_t r = row + 1; r < n; ++r) {
                if (a(r, col) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(r, col).get_mpz_t(), a(row, col).get_mpz_t());
                add_row(r, row, -q);
                if (a(r, col) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (row < n && a(row, col) != 0) {
            if (a(row, col) < 0)
                for (std::size_t c = 0; c < dim; ++c)
                    a(row, c) = -a(row, c);
            for (std::size_t r = 0; r < row; ++r) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(r, col).get_mpz_t(), a(row, col).get_mpz_t());
                add_row(r, row, -q);
            }
            pivots.push_back(col);
            ++row;
        }
    }
    return a.row_block(0, row).transpose();
}

bool subgroup_equal(const IntMatrix& gens1, const IntMatrix& gens2)
{
    if (gens1.rows() != gens2.rows())
        throw ValidationError("subgroup_equal: generator sets live in ambient lattices of different dimension");
    return column_hermite_form(gens1) == column_hermite_form(gens2);
}

bool lattice_contains(const IntMatrix& gens, const IntMatrix& sub)
{
    if (gens.rows() != sub.rows())
        throw ValidationError("lattice_contains: ambient dimensions differ");
    return column_hermite_form(gens) == column_hermite_form(gens.hconcat(sub));
}

}  // namespace hocolim

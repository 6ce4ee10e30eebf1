#include "mobius/poly_matrix.hpp"

namespace mobius {

PolyMatrix::PolyMatrix(std::size_t n, std::vector<std::string> basis)
    : n_(n), basis_(std::move(basis)), entries_(n * n)
{
    if (!basis_.empty() && basis_.size() != n_)
        throw MatrixError("basis size does not match matrix dimension");
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::vector<std::string> basis)
{
    PolyMatrix m(n, std::move(basis));
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = IntPolynomial{1};
    return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<IntPolynomial>>& rows)
{
    PolyMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw MatrixError("from_rows: matrix is not square");
        for (std::size_t j = 0; j < rows.size(); ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

bool PolyMatrix::is_upper_triangular() const
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(*this)(i, j).is_zero())
                return false;
    return true;
}

bool PolyMatrix::is_unitriangular() const
{
    if (!is_upper_triangular())
        return false;
    for (std::size_t i = 0; i < n_; ++i)
        if (!(*this)(i, i).is_one())
            return false;
    return true;
}

IntPolynomial PolyMatrix::entry_sum() const
{
    IntPolynomial sum;
    for (const auto& e : entries_)
        sum += e;
    return sum;
}

std::vector<std::vector<mpz_class>> PolyMatrix::evaluate(const mpz_class& value) const
{
    std::vector<std::vector<mpz_class>> out(n_, std::vector<mpz_class>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out[i][j] = (*this)(i, j).evaluate(value);
    return out;
}

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.dim() != b.dim())
        throw MatrixError("matrix_mul: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()) + ")");
    if (!a.basis().empty() && !b.basis().empty() && a.basis() != b.basis())
        throw MatrixError("matrix_mul: basis mismatch");
    const std::size_t n = a.dim();
    PolyMatrix out(n, a.basis().empty() ? b.basis() : a.basis());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const IntPolynomial& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += aik * b(k, j);
        }
    return out;
}

PolyMatrix invert_unitriangular(const PolyMatrix& m)
{
    if (!m.is_unitriangular())
        throw MatrixError("not unitriangular");
    const std::size_t n = m.dim();
    PolyMatrix inv = PolyMatrix::identity(n, m.basis());
    // Nonzero strictly-upper entries by column; incidence matrices are sparse.
    std::vector<std::vector<std::size_t>> above(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            if (!m(i, k).is_zero())
                above[k].push_back(i);
    // Column j of the inverse: x_i = -sum_{i<k<=j} m_ik x_k. Once x_k is final
    // (all larger k done) push its contribution up to every row above it.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k-- > 0;) {
            if (inv(k, j).is_zero())
                continue;
            for (std::size_t i : above[k])
                inv(i, j) -= m(i, k) * inv(k, j);
        }
    return inv;
}

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b)
{
    const std::size_t na = a.dim(), nb = b.dim();
    std::vector<std::string> basis;
    if (!a.basis().empty() && !b.basis().empty()) {
        basis.reserve(na * nb);
        for (const auto& x : a.basis())
            for (const auto& y : b.basis())
                basis.push_back("(" + x + "," + y + ")");
    }
    PolyMatrix out(na * nb, std::move(basis));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    if (!b(k, l).is_zero())
                        out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
        }
    return out;
}

}  // namespace mobius

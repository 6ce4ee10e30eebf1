#pragma once

#include "mobius/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobius {

class MatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Square matrix of IntPolynomial. Rows and columns are indexed by `basis`,
// normally the labels of a poset in linear-extension order. An empty basis
// means "unlabelled" and is compatible with any basis of the same size.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n, std::vector<std::string> basis = {});

    static PolyMatrix identity(std::size_t n, std::vector<std::string> basis = {});
    static PolyMatrix from_rows(const std::vector<std::vector<IntPolynomial>>& rows);

    std::size_t dim() const noexcept { return n_; }
    const std::vector<std::string>& basis() const noexcept { return basis_; }

    IntPolynomial& operator()(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }
    const IntPolynomial& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }

    bool is_upper_triangular() const;
    bool is_unitriangular() const;

    // Sum of all entries, i.e. 1^T M 1.
    IntPolynomial entry_sum() const;

    // Entrywise evaluation at z = value.
    std::vector<std::vector<mpz_class>> evaluate(const mpz_class& value) const;

    bool operator==(const PolyMatrix& other) const { return n_ == other.n_ && entries_ == other.entries_; }

private:
    std::size_t n_ = 0;
    std::vector<std::string> basis_;
    std::vector<IntPolynomial> entries_;
};

// Throws MatrixError on dimension or basis mismatch.
PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b);

// Inverse of an upper unitriangular matrix by back substitution. Throws
// MatrixError("not unitriangular") otherwise.
PolyMatrix invert_unitriangular(const PolyMatrix& m);

// Kronecker product with row/column (i, k) of the result at i * b.dim() + k.
// Basis labels, when both present, are "(a,b)".
PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace mobius

#pragma once

#include <vector>

#include "gaudin/types.hpp"

namespace gaudin {

// Dense exact-rational matrix, just enough linear algebra for module
// construction: products, brackets, and Gaussian elimination.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RatMat&) const = default;

    static RatMat identity(int n);
    static RatMat zero(int n) { return RatMat(n, n); }

    RatMat operator*(const RatMat& other) const;
    RatMat operator+(const RatMat& other) const;
    RatMat operator-(const RatMat& other) const;
    RatMat operator*(const Rat& c) const;

    bool is_zero() const;
    bool is_scalar_multiple_of_identity(Rat* scalar_out) const;

    MatrixXcd to_complex() const;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;  // matrix * column vector

private:
    int rows_;
    int cols_;
    std::vector<Rat> a_;
};

RatMat bracket(const RatMat& a, const RatMat& b);

// Row basis with incremental exact elimination; used to grow a module
// basis one lowering word at a time and to express vectors in that basis.
class RowBasis {
public:
    explicit RowBasis(int ambient_dim) : dim_(ambient_dim) {}

    int size() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return dim_; }

    // Adds v if independent of the current rows; returns true when added.
    bool add(const std::vector<Rat>& v);

    // Coordinates of v in the stored (unreduced) basis rows; throws
    // inconsistency_error if v is outside the span.
    std::vector<Rat> coordinates(const std::vector<Rat>& v) const;

    const std::vector<Rat>& row(int i) const { return rows_[static_cast<size_t>(i)]; }

private:
    int dim_;
    std::vector<std::vector<Rat>> rows_;      // basis vectors as given
    std::vector<std::vector<Rat>> reduced_;   // row-echelon copies
    std::vector<int> pivot_;                  // pivot column of each reduced row
    std::vector<std::vector<Rat>> t_;         // reduction coefficients per row
};

}  // namespace gaudin

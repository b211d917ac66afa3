#include "gaudin/ratmat.hpp"

namespace gaudin {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("RatMat product shape mismatch");
    RatMat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Rat& bkj = other(k, j);
                if (bkj != 0) out(i, j) += aik * bkj;
            }
        }
    return out;
}

RatMat RatMat::operator+(const RatMat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("RatMat sum shape mismatch");
    RatMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
    return out;
}

RatMat RatMat::operator-(const RatMat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("RatMat difference shape mismatch");
    RatMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
    return out;
}

RatMat RatMat::operator*(const Rat& c) const {
    RatMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

bool RatMat::is_zero() const {
    for (const Rat& v : a_)
        if (v != 0) return false;
    return true;
}

bool RatMat::is_scalar_multiple_of_identity(Rat* scalar_out) const {
    if (rows_ != cols_ || rows_ == 0) return false;
    const Rat c = (*this)(0, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? c : Rat(0))) return false;
    if (scalar_out) *scalar_out = c;
    return true;
}

MatrixXcd RatMat::to_complex() const {
    MatrixXcd out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = Cplx(rat_to_double((*this)(i, j)), 0.0);
    return out;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RatMat apply shape mismatch");
    std::vector<Rat> out(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (int j = 0; j < cols_; ++j) {
            const Rat& aij = (*this)(i, j);
            if (aij != 0 && v[static_cast<size_t>(j)] != 0) acc += aij * v[static_cast<size_t>(j)];
        }
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

RatMat bracket(const RatMat& a, const RatMat& b) {
    return a * b - b * a;
}

// Reduction bookkeeping: reduced_i = rows_i - sum_{j<i} t_[i][j] * reduced_j,
// recorded as each row is added, so coordinates() can convert elimination
// coefficients (against reduced rows) back to the original rows.
bool RowBasis::add(const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("RowBasis dimension mismatch");
    std::vector<Rat> r = v;
    std::vector<Rat> trow(reduced_.size());
    for (size_t j = 0; j < reduced_.size(); ++j) {
        const int p = pivot_[j];
        if (r[static_cast<size_t>(p)] == 0) continue;
        Rat c = r[static_cast<size_t>(p)] / reduced_[j][static_cast<size_t>(p)];
        trow[j] = c;
        for (int col = 0; col < dim_; ++col)
            r[static_cast<size_t>(col)] -= c * reduced_[j][static_cast<size_t>(col)];
    }
    int p = -1;
    for (int j = 0; j < dim_; ++j)
        if (r[static_cast<size_t>(j)] != 0) { p = j; break; }
    if (p < 0) return false;
    rows_.push_back(v);
    reduced_.push_back(std::move(r));
    pivot_.push_back(p);
    t_.push_back(std::move(trow));
    return true;
}

std::vector<Rat> RowBasis::coordinates(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("RowBasis dimension mismatch");
    std::vector<Rat> r = v;
    std::vector<Rat> coeff(reduced_.size());
    for (size_t i = 0; i < reduced_.size(); ++i) {
        const int p = pivot_[i];
        if (r[static_cast<size_t>(p)] == 0) continue;
        Rat c = r[static_cast<size_t>(p)] / reduced_[i][static_cast<size_t>(p)];
        coeff[i] = c;
        for (int col = 0; col < dim_; ++col)
            r[static_cast<size_t>(col)] -= c * reduced_[i][static_cast<size_t>(col)];
    }
    for (const Rat& x : r)
        if (x != 0) throw inconsistency_error("vector outside the module basis span");
    // v = sum_i coeff_i reduced_i and rows_i = reduced_i + sum_{j<i} t_ij reduced_j,
    // so the original-row coefficients solve the unit upper-triangular system
    // out_j + sum_{i>j} t_ij out_i = coeff_j.
    std::vector<Rat> out(coeff);
    for (size_t i = out.size(); i-- > 0;)
        for (size_t j = 0; j < i; ++j) out[j] -= out[i] * t_[i][j];
    return out;
}

}  // namespace gaudin

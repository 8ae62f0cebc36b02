#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "dlchi/errors.hpp"
#include "dlchi/gf.hpp"

namespace dlchi {

/* Dense matrix over a finite field. Entries are element indices; the field
   object is borrowed and must outlive the matrix. */
class MatrixGF {
public:
    MatrixGF(const FiniteField& f, int rows, int cols)
        : f_(&f), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

    static MatrixGF identity(const FiniteField& f, int n) {
        MatrixGF m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const FiniteField& field() const { return *f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint16_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    uint16_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const std::vector<uint16_t>& data() const { return a_; }
    std::vector<uint16_t>& data() { return a_; }

    MatrixGF operator*(const MatrixGF& o) const {
        if (cols_ != o.rows_) throw usage_error("matrix dimensions do not match");
        MatrixGF r(*f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                uint16_t v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    uint16_t w = o.at(k, j);
                    if (w == 0) continue;
                    r.at(i, j) = f_->add(r.at(i, j), f_->mul(v, w));
                }
            }
        }
        return r;
    }

    bool operator==(const MatrixGF& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    int rank() const {
        MatrixGF m = *this;
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int pivot = -1;
            for (int i = rank; i < rows_; ++i)
                if (m.at(i, col) != 0) { pivot = i; break; }
            if (pivot < 0) continue;
            for (int j = 0; j < cols_; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
            uint16_t piv_inv = f_->inv(m.at(rank, col));
            for (int i = rank + 1; i < rows_; ++i) {
                uint16_t factor = f_->mul(m.at(i, col), piv_inv);
                if (factor == 0) continue;
                for (int j = col; j < cols_; ++j)
                    m.at(i, j) = f_->sub(m.at(i, j), f_->mul(factor, m.at(rank, j)));
            }
            ++rank;
        }
        return rank;
    }

    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    MatrixGF inverse() const {
        if (rows_ != cols_) throw usage_error("inverting a non-square matrix");
        int n = rows_;
        MatrixGF m = *this;
        MatrixGF inv = identity(*f_, n);
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int i = col; i < n; ++i)
                if (m.at(i, col) != 0) { pivot = i; break; }
            if (pivot < 0) throw usage_error("matrix is singular");
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(col, j), m.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
            uint16_t piv_inv = f_->inv(m.at(col, col));
            for (int j = 0; j < n; ++j) {
                m.at(col, j) = f_->mul(m.at(col, j), piv_inv);
                inv.at(col, j) = f_->mul(inv.at(col, j), piv_inv);
            }
            for (int i = 0; i < n; ++i) {
                if (i == col) continue;
                uint16_t factor = m.at(i, col);
                if (factor == 0) continue;
                for (int j = 0; j < n; ++j) {
                    m.at(i, j) = f_->sub(m.at(i, j), f_->mul(factor, m.at(col, j)));
                    inv.at(i, j) = f_->sub(inv.at(i, j), f_->mul(factor, inv.at(col, j)));
                }
            }
        }
        return inv;
    }

    /* Columns 0..k-1 as a separate matrix. */
    MatrixGF column_prefix(int k) const {
        MatrixGF r(*f_, rows_, k);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < k; ++j) r.at(i, j) = at(i, j);
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            os << '[';
            for (int j = 0; j < cols_; ++j) {
                if (j) os << ' ';
                os << at(i, j);
            }
            os << "]";
            if (i + 1 < rows_) os << '\n';
        }
        return os.str();
    }

private:
    const FiniteField* f_;
    int rows_, cols_;
    std::vector<uint16_t> a_;
};

/* dim(span(U) intersect span(W)) for column span matrices with equal row
   count, via rank(U) + rank(W) - rank([U | W]). */
inline int intersection_dim(const MatrixGF& u, const MatrixGF& w) {
    if (u.rows() != w.rows()) throw usage_error("subspaces live in different ambient spaces");
    MatrixGF joint(u.field(), u.rows(), u.cols() + w.cols());
    for (int i = 0; i < u.rows(); ++i) {
        for (int j = 0; j < u.cols(); ++j) joint.at(i, j) = u.at(i, j);
        for (int j = 0; j < w.cols(); ++j) joint.at(i, u.cols() + j) = w.at(i, j);
    }
    return u.rank() + w.rank() - joint.rank();
}

/* Upper triangular Jordan block J_m(eigenvalue). */
inline MatrixGF jordan_block(const FiniteField& f, int size, uint16_t eigenvalue) {
    MatrixGF m(f, size, size);
    for (int i = 0; i < size; ++i) {
        m.at(i, i) = eigenvalue;
        if (i + 1 < size) m.at(i, i + 1) = 1;
    }
    return m;
}

inline MatrixGF block_diagonal(const FiniteField& f, const std::vector<MatrixGF>& blocks) {
    int n = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) throw usage_error("diagonal blocks must be square");
        n += b.rows();
    }
    MatrixGF m(f, n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

} // namespace dlchi

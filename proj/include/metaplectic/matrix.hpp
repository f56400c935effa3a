#pragma once

#include <cstddef>
#include <vector>

#include "metaplectic/rational.hpp"

namespace metaplectic {

// Dense exact rational matrix. Small sizes only (2n x 2n with n <= 4 or so).
class RatMat {
  public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMat identity(std::size_t n) {
        RatMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    // J_{2n} = [[0, I_n], [-I_n, 0]]
    static RatMat symplectic_form(std::size_t n) {
        RatMat j(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            j(i, n + i) = 1;
            j(n + i, i) = -1;
        }
        return j;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const RatMat& o) const { return !(*this == o); }

    RatMat operator*(const RatMat& o) const {
        RatMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Rat& y = o(k, j);
                    if (y != 0) r(i, j) += x * y;
                }
            }
        return r;
    }

    RatMat operator+(const RatMat& o) const {
        RatMat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    RatMat operator-() const {
        RatMat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    RatMat scaled(const Rat& c) const {
        RatMat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }

    RatMat transpose() const {
        RatMat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    RatMat block(std::size_t i0, std::size_t j0, std::size_t h, std::size_t w) const {
        RatMat r(h, w);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }

    void set_block(std::size_t i0, std::size_t j0, const RatMat& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    std::size_t rank() const {
        RatMat m = *this;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && m(piv, col) == 0) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(r, j));
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (m(i, col) == 0) continue;
                Rat f = m(i, col) / m(r, col);
                for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(r, j);
            }
            ++r;
        }
        return r;
    }

    Rat det() const {
        RatMat m = *this;
        Rat d = 1;
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && m(piv, col) == 0) ++piv;
            if (piv == rows_) return 0;
            if (piv != col) {
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(col, j));
                d = -d;
            }
            d *= m(col, col);
            for (std::size_t i = col + 1; i < rows_; ++i) {
                if (m(i, col) == 0) continue;
                Rat f = m(i, col) / m(col, col);
                for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return d;
    }

    // Gauss-Jordan inverse; throws on singular input.
    RatMat inverse() const {
        std::size_t n = rows_;
        RatMat m = *this;
        RatMat inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && m(piv, col) == 0) ++piv;
            if (piv == n) throw std::domain_error("RatMat::inverse: singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(m(piv, j), m(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            Rat pv = m(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(col, j) /= pv;
                inv(col, j) /= pv;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || m(i, col) == 0) continue;
                Rat f = m(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    m(i, j) -= f * m(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

} // namespace metaplectic

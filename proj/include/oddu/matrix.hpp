#pragma once

#include <string>
#include <vector>

#include "oddu/ring.hpp"

namespace oddu {

/// Dense exact matrix over a Ring, row-major. Sizes here are a few dozen at
/// most, so no attempt at sparsity.
class Matrix {
public:
    Matrix(Ring ring, int rows, int cols);

    static Matrix identity(const Ring& ring, int k);

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, Scalar v) {
        e_[static_cast<std::size_t>(i) * cols_ + j] = ring_.normalize(std::move(v));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    Ring ring_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> e_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

Matrix neg(const Matrix& a);
Matrix scalar_mul(const Scalar& s, const Matrix& a);
Matrix transpose(const Matrix& a);

/// result[j][i] = bar(a[i][j]).
Matrix bar_transpose(const Matrix& a);

/// Identity with r added at 1-based position (i, j), i != j.
Matrix elem_matrix(const Ring& ring, int k, int i, int j, const Scalar& r);

/// Drop the first `drop` rows and columns of a square matrix.
Matrix trailing_submatrix(const Matrix& a, int drop);

/// Block diagonal [[a, 0], [0, b]].
Matrix block_diag(const Matrix& a, const Matrix& b);

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& x);

std::string to_pretty_string(const Matrix& a);

/// Ordered product of elementary factors, certifying membership in E_k(R).
struct ElementaryWord {
    struct Factor {
        int i = 0; // 1-based row
        int j = 0; // 1-based column
        Scalar r;
    };

    Ring ring;
    int size = 0;
    std::vector<Factor> factors;
};

/// Multiply the word out; the empty word gives the identity.
Matrix word_product(const ElementaryWord& w);

} // namespace oddu

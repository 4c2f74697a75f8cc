#include "oddu/matrix.hpp"

#include <algorithm>

namespace oddu {

namespace {

void require_same_ring(const Matrix& a, const Matrix& b) {
    if (a.ring() != b.ring())
        throw RingMismatch("matrices over different rings: " + a.ring().to_string() + " vs " +
                           b.ring().to_string());
}

} // namespace

Matrix::Matrix(Ring ring, int rows, int cols) : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * cols, Scalar{});
}

Matrix Matrix::identity(const Ring& ring, int k) {
    Matrix m(ring, k, k);
    for (int i = 0; i < k; ++i) m.set(i, i, ring.one());
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    if (a.cols() != b.rows())
        throw DimensionMismatch("product of " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    const Ring& ring = a.ring();
    Matrix out(ring, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            Scalar acc = ring.zero();
            for (int k = 0; k < a.cols(); ++k)
                acc = ring.add(acc, ring.mul(a.at(i, k), b.at(k, j)));
            out.set(i, j, acc);
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("sum of differently sized matrices");
    Matrix out(a.ring(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.set(i, j, a.ring().add(a.at(i, j), b.at(i, j)));
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + neg(b); }

Matrix neg(const Matrix& a) {
    Matrix out(a.ring(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.set(i, j, a.ring().neg(a.at(i, j)));
    return out;
}

Matrix scalar_mul(const Scalar& s, const Matrix& a) {
    Matrix out(a.ring(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.set(i, j, a.ring().mul(s, a.at(i, j)));
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.ring(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.set(j, i, a.at(i, j));
    return out;
}

Matrix bar_transpose(const Matrix& a) {
    Matrix out(a.ring(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.set(j, i, a.ring().bar(a.at(i, j)));
    return out;
}

Matrix elem_matrix(const Ring& ring, int k, int i, int j, const Scalar& r) {
    if (i < 1 || j < 1 || i > k || j > k || i == j)
        throw BadIndex("elem_matrix(" + std::to_string(i) + "," + std::to_string(j) +
                       ") for size " + std::to_string(k));
    Matrix m = Matrix::identity(ring, k);
    m.set(i - 1, j - 1, ring.normalize(r));
    return m;
}

Matrix trailing_submatrix(const Matrix& a, int drop) {
    if (a.rows() != a.cols() || drop < 0 || drop >= a.rows())
        throw DimensionMismatch("trailing_submatrix: drop " + std::to_string(drop) + " of " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    int k = a.rows() - drop;
    Matrix out(a.ring(), k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            out.set(i, j, a.at(i + drop, j + drop));
    return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    Matrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            out.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return out;
}

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& x) {
    if (static_cast<int>(x.size()) != a.cols())
        throw DimensionMismatch("mat_vec: vector length " + std::to_string(x.size()));
    std::vector<Scalar> out(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        Scalar acc = a.ring().zero();
        for (int j = 0; j < a.cols(); ++j)
            acc = a.ring().add(acc, a.ring().mul(a.at(i, j), x[static_cast<std::size_t>(j)]));
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::string to_pretty_string(const Matrix& a) {
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            cells.push_back(print_scalar(a.at(i, j)));
            width = std::max(width, cells.back().size());
        }
    std::string out;
    for (int i = 0; i < a.rows(); ++i) {
        out += "[ ";
        for (int j = 0; j < a.cols(); ++j) {
            const std::string& c = cells[static_cast<std::size_t>(i) * a.cols() + j];
            out += std::string(width - c.size(), ' ') + c;
            if (j + 1 < a.cols()) out += "  ";
        }
        out += " ]\n";
    }
    return out;
}

Matrix word_product(const ElementaryWord& w) {
    Matrix acc = Matrix::identity(w.ring, w.size);
    for (const auto& f : w.factors)
        acc = acc * elem_matrix(w.ring, w.size, f.i, f.j, f.r);
    return acc;
}

} // namespace oddu

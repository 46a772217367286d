#include "arecip/centext/rational_matrix.hpp"

#include <sstream>
#include <utility>

#include "arecip/error.hpp"

namespace arecip::centext {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

QMatrix QMatrix::col(int c) const { return select_cols({c}); }

QMatrix QMatrix::select_cols(const std::vector<int>& idx) const {
    QMatrix m(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m(i, static_cast<int>(j)) = (*this)(i, idx[j]);
    return m;
}

QMatrix QMatrix::block(int r0, int c0, int nr, int nc) const {
    QMatrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch in product");
    QMatrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const mpq_class& x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
        }
    return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
    QMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
    QMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

QMatrix operator*(const mpq_class& s, const QMatrix& a) {
    QMatrix m = a;
    for (auto& v : m.data_) v *= s;
    return m;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    }
    os << "]";
    return os.str();
}

QMatrix hcat(const QMatrix& a, const QMatrix& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw Error(ErrorKind::InvalidArgument, "hcat row mismatch");
    QMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Echelon rref(QMatrix m) {
    Echelon e;
    int row = 0;
    for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const mpq_class inv = 1 / m(row, c);
        for (int j = c; j < m.cols(); ++j) m(row, j) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c) == 0) continue;
            const mpq_class k = m(r, c);
            for (int j = c; j < m.cols(); ++j) m(r, j) -= k * m(row, j);
        }
        e.pivots.push_back(c);
        ++row;
    }
    e.r = std::move(m);
    return e;
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

QMatrix column_basis(const QMatrix& m) { return m.select_cols(rref(m).pivots); }

QMatrix kernel(const QMatrix& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    QMatrix k(m.cols(), static_cast<int>(free.size()));
    for (std::size_t j = 0; j < free.size(); ++j) {
        const int fc = free[j];
        k(fc, static_cast<int>(j)) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            k(e.pivots[i], static_cast<int>(j)) = -e.r(static_cast<int>(i), fc);
    }
    return k;
}

mpq_class det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    QMatrix a = m;
    mpq_class d = 1;
    const int n = a.rows();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) continue;
            const mpq_class k = a(r, c) / a(c, c);
            for (int j = c; j < n; ++j) a(r, j) -= k * a(c, j);
        }
    }
    return d;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
    const int n = m.rows();
    const Echelon e = rref(hcat(m, QMatrix::identity(n)));
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
        throw Error(ErrorKind::InvalidArgument, "singular matrix");
    return e.r.block(0, n, n, n);
}

QMatrix solve(const QMatrix& basis, const QMatrix& x) {
    const int k = basis.cols();
    const Echelon e = rref(hcat(basis, x));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= k) throw Error(ErrorKind::NotExact, "vector outside the span");
        if (e.pivots[i] != static_cast<int>(i)) throw Error(ErrorKind::InvalidArgument, "dependent basis columns");
    }
    if (static_cast<int>(e.pivots.size()) != k) throw Error(ErrorKind::InvalidArgument, "dependent basis columns");
    return e.r.block(0, k, k, x.cols());
}

}  // namespace arecip::centext

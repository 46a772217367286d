#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace arecip::centext {

// Dense matrix over Q. Small sizes only; every operation is exact.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols);
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpq_class& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const mpq_class& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

    QMatrix col(int c) const;
    QMatrix select_cols(const std::vector<int>& idx) const;
    QMatrix block(int r0, int c0, int nr, int nc) const;
    QMatrix transpose() const;
    bool is_zero() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const mpq_class& s, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b);

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpq_class> data_;
};

QMatrix hcat(const QMatrix& a, const QMatrix& b);

// Reduced row echelon form and the pivot columns.
struct Echelon {
    QMatrix r;
    std::vector<int> pivots;
};
Echelon rref(QMatrix m);

int rank(const QMatrix& m);
// The pivot columns of m, i.e. the first maximal independent subfamily.
QMatrix column_basis(const QMatrix& m);
// Columns spanning the null space of m.
QMatrix kernel(const QMatrix& m);
mpq_class det(const QMatrix& m);
QMatrix inverse(const QMatrix& m);
// S with basis * S = x; basis has independent columns. Throws NotExact when a
// column of x lies outside the span.
QMatrix solve(const QMatrix& basis, const QMatrix& x);

}  // namespace arecip::centext

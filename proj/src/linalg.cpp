#include "qschur/linalg.hpp"

namespace qschur {

int bareiss_rank(Mat<LaurentPoly> m) {
    const int rows = int(m.rows());
    const int cols = int(m.cols());
    if (rows == 0 || cols == 0) return 0;
    const int nq = [&] {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!m(i, j).is_zero()) return m(i, j).num_q_vars();
        return 0;
    }();
    LaurentPoly prev = LaurentPoly::constant(nq, 1);
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i) {
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                LaurentPoly t = m(row, col) * m(i, j) - m(i, col) * m(row, j);
                auto d = t.divided_exactly_by(prev);
                if (!d) throw internal_error("Bareiss division not exact");
                m(i, j) = *d;
            }
            m(i, col) = LaurentPoly(nq);
        }
        prev = m(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

int rank_generic(const Mat<Fraction>& m) {
    const int rows = int(m.rows());
    const int cols = int(m.cols());
    if (rows == 0 || cols == 0) return 0;
    int nq = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!m(i, j).is_zero()) nq = m(i, j).num_q_vars();
    Mat<LaurentPoly> cleared(rows, cols);
    for (int i = 0; i < rows; ++i) {
        LaurentPoly row_clear = LaurentPoly::constant(nq, 1);
        for (int j = 0; j < cols; ++j) {
            if (!m(i, j).den_is_one()) row_clear *= m(i, j).den();
        }
        for (int j = 0; j < cols; ++j) {
            Fraction f = Fraction(row_clear) * m(i, j);
            auto p = f.as_polynomial();
            if (!p) throw internal_error("row clearing failed in rank_generic");
            cleared(i, j) = *p;
        }
    }
    return bareiss_rank(std::move(cleared));
}

int rank_over_field(Mat<FieldElem> m) {
    const int rows = int(m.rows());
    const int cols = int(m.cols());
    if (rows == 0 || cols == 0) return 0;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i) {
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        FieldElem inv = m(row, col).inverse();
        for (int i = row + 1; i < rows; ++i) {
            if (m(i, col).is_zero()) continue;
            FieldElem factor = m(i, col) * inv;
            for (int j = col; j < cols; ++j) m(i, j) -= factor * m(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

int corank(Mat<FieldElem> m) {
    int cols = int(m.cols());
    return cols - rank_over_field(std::move(m));
}

std::optional<Vec<Fraction>> solve_fraction_linear(Mat<Fraction> a, Vec<Fraction> b) {
    const int rows = int(a.rows());
    const int cols = int(a.cols());
    int nq = 0;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j)
            if (!a(i, j).is_zero()) nq = a(i, j).num_q_vars();
        if (!b(i).is_zero()) nq = b(i).num_q_vars();
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i) {
            if (!a(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            a.row(pivot).swap(a.row(row));
            std::swap(b(pivot), b(row));
        }
        Fraction inv = Fraction::one(nq) / a(row, col);
        for (int j = col; j < cols; ++j) a(row, j) *= inv;
        b(row) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            Fraction factor = a(i, col);
            for (int j = col; j < cols; ++j) a(i, j) -= factor * a(row, j);
            b(i) -= factor * b(row);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < rows; ++i) {
        if (!b(i).is_zero()) return std::nullopt;
    }
    Vec<Fraction> x(cols);
    for (int j = 0; j < cols; ++j) x(j) = Fraction::zero(nq);
    for (size_t k = 0; k < pivot_col.size(); ++k) x(pivot_col[k]) = b(int(k));
    return x;
}

} // namespace qschur

#include "symchev/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace symchev {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix::operator*: shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (symchev::is_zero(v)) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix::operator+: shape mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix::operator-: shape mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

QMatrix QMatrix::scaled(const Rat& c) const {
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("QMatrix::apply: size mismatch");
    std::vector<Rat> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!symchev::is_zero(at(i, j))) r[i] += at(i, j) * v[j];
    return r;
}

bool QMatrix::is_zero() const {
    for (const Rat& x : a_)
        if (!symchev::is_zero(x)) return false;
    return true;
}

bool QMatrix::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !symchev::is_zero(at(i, j))) return false;
    return true;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << symchev::to_string(at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<int> rref(QMatrix& m, Exec exec) {
    std::vector<int> pivot_cols;
    const int rows = m.rows(), cols = m.cols();
    int piv_row = 0;
    for (int col = 0; col < cols && piv_row < rows; ++col) {
        int sel = -1;
        for (int i = piv_row; i < rows; ++i)
            if (!is_zero(m.at(i, col))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != piv_row)
            for (int j = col; j < cols; ++j) std::swap(m.at(sel, j), m.at(piv_row, j));
        {
            Rat inv = 1 / m.at(piv_row, col);
            m.at(piv_row, col) = 1;
            for (int j = col + 1; j < cols; ++j)
                if (!is_zero(m.at(piv_row, j))) m.at(piv_row, j) *= inv;
        }
        // Eliminate the pivot column from every other row. Rows are
        // independent work items, so the parallel path is exact and
        // bitwise identical to the serial one.
        if (exec == Exec::Omp) {
#pragma omp parallel for schedule(dynamic, 8)
            for (int i = 0; i < rows; ++i) {
                if (i == piv_row || is_zero(m.at(i, col))) continue;
                Rat f = m.at(i, col);
                m.at(i, col) = 0;
                for (int j = col + 1; j < cols; ++j)
                    if (!is_zero(m.at(piv_row, j))) m.at(i, j) -= f * m.at(piv_row, j);
            }
        } else {
            for (int i = 0; i < rows; ++i) {
                if (i == piv_row || is_zero(m.at(i, col))) continue;
                Rat f = m.at(i, col);
                m.at(i, col) = 0;
                for (int j = col + 1; j < cols; ++j)
                    if (!is_zero(m.at(piv_row, j))) m.at(i, j) -= f * m.at(piv_row, j);
            }
        }
        pivot_cols.push_back(col);
        ++piv_row;
    }
    return pivot_cols;
}

int rank(QMatrix m, Exec exec) { return static_cast<int>(rref(m, exec).size()); }

std::vector<std::vector<Rat>> rat_kernel(const QMatrix& m, Exec exec) {
    QMatrix r = m;
    std::vector<int> pivots = rref(r, exec);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols);
        v[free_col] = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -r.at(static_cast<int>(pi), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> rat_solve(const QMatrix& m, const std::vector<Rat>& b, Exec exec) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("rat_solve: rhs size mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug, exec);
    for (int c : pivots)
        if (c == m.cols()) return std::nullopt;  // pivot in rhs column: inconsistent
    std::vector<Rat> x(m.cols());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(static_cast<int>(pi), m.cols());
    return x;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const int n = m.rows();
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(aug, Exec::Serial);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) throw std::domain_error("inverse: singular matrix");
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Rat determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const int n = m.rows();
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int i = col; i < n; ++i)
            if (!is_zero(m.at(i, col))) {
                sel = i;
                break;
            }
        if (sel < 0) return Rat(0);
        if (sel != col) {
            for (int j = col; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        Rat inv = 1 / m.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (is_zero(m.at(i, col))) continue;
            Rat f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

// ---------------------------------------------------------------------------

namespace {

// Column-reduce [m over identity] by unimodular column operations until the
// top block has echelon shape; kernel basis columns are those whose top block
// vanished. Euclidean reduction per row keeps everything over Z, which is
// what makes the result a saturated lattice basis.
struct ColumnReducer {
    int n;                                // columns of m = ambient dim
    std::vector<std::vector<Int>> work;   // rows of m (mutated)
    std::vector<std::vector<Int>> trans;  // rows of the n x n transformation

    explicit ColumnReducer(const ZMatrix& m) : n(m.cols()) {
        work.assign(m.rows(), std::vector<Int>(n));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < n; ++j) work[i][j] = m.at(i, j);
        trans.assign(n, std::vector<Int>(n));
        for (int j = 0; j < n; ++j) trans[j][j] = 1;
    }

    void swap_cols(int a, int b) {
        for (auto& row : work) std::swap(row[a], row[b]);
        for (auto& row : trans) std::swap(row[a], row[b]);
    }
    void addmul_col(int dst, int src, const Int& f) {  // col dst += f * col src
        for (auto& row : work) row[dst] += f * row[src];
        for (auto& row : trans) row[dst] += f * row[src];
    }
    void negate_col(int c) {
        for (auto& row : work) row[c] = -row[c];
        for (auto& row : trans) row[c] = -row[c];
    }
};

}  // namespace

IntLatticeBasis int_kernel(const ZMatrix& m) {
    ColumnReducer red(m);
    const int n = m.cols();
    int done_cols = 0;
    for (int row = 0; row < m.rows() && done_cols < n; ++row) {
        // Euclidean GCD sweep across the not-yet-fixed columns of this row.
        while (true) {
            int nz = -1;
            Int best;
            for (int c = done_cols; c < n; ++c) {
                const Int& v = red.work[row][c];
                if (v == 0) continue;
                if (nz < 0 || cmp(abs(v), best) < 0) {
                    nz = c;
                    best = abs(v);
                }
            }
            if (nz < 0) break;  // row already zero on remaining columns
            bool others = false;
            for (int c = done_cols; c < n; ++c) {
                if (c == nz || red.work[row][c] == 0) continue;
                Int q = red.work[row][c] / red.work[row][nz];
                if (q != 0) red.addmul_col(c, nz, -q);
                if (red.work[row][c] != 0) others = true;
            }
            if (!others) {
                red.swap_cols(done_cols, nz);
                if (red.work[row][done_cols] < 0) red.negate_col(done_cols);
                ++done_cols;
                break;
            }
        }
    }
    IntLatticeBasis out;
    out.ambient_dim = n;
    for (int c = done_cols; c < n; ++c) {
        std::vector<Int> v(n);
        for (int j = 0; j < n; ++j) v[j] = red.trans[j][c];
        out.basis.push_back(std::move(v));
    }
    return out;
}

bool IntLatticeBasis::contains(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != ambient_dim) return false;
    if (basis.empty()) {
        for (const Int& x : v)
            if (x != 0) return false;
        return true;
    }
    // Solve B^T c = v over Q and check integrality; the basis is independent
    // so the solution is unique if it exists.
    QMatrix bt(ambient_dim, static_cast<int>(basis.size()));
    for (int j = 0; j < static_cast<int>(basis.size()); ++j)
        for (int i = 0; i < ambient_dim; ++i) bt.at(i, j) = Rat(basis[j][i]);
    std::vector<Rat> rhs(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) rhs[i] = Rat(v[i]);
    auto sol = rat_solve(bt, rhs, Exec::Serial);
    if (!sol) return false;
    // rat_solve ignores redundant consistent rows only when they are truly
    // consistent; verify the product to be safe.
    std::vector<Rat> chk = bt.apply(*sol);
    for (int i = 0; i < ambient_dim; ++i)
        if (chk[i] != rhs[i]) return false;
    for (const Rat& c : *sol)
        if (!is_integer(c)) return false;
    return true;
}

ZMatrix zmatrix_from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return ZMatrix(0, 0);
    ZMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols()) throw std::invalid_argument("zmatrix_from_rows: ragged rows");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QMatrix qmatrix_from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return QMatrix(0, 0);
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols()) throw std::invalid_argument("qmatrix_from_rows: ragged rows");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace symchev

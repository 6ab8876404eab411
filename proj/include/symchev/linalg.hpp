#pragma once

#include <optional>
#include <vector>

#include "symchev/parallel.hpp"
#include "symchev/rational.hpp"

namespace symchev {

// Dense matrix over Q. Row-major.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rat& c) const;
    bool operator==(const QMatrix& o) const = default;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;  // m * v

    bool is_zero() const;
    bool is_diagonal() const;
    std::string to_string() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// In-place reduced row echelon form with deterministic pivoting (first row
// with a nonzero entry in the leftmost unfinished column). Returns the pivot
// column indices. The parallel path distributes the row updates; results are
// identical to the serial path.
std::vector<int> rref(QMatrix& m, Exec exec = default_exec());

int rank(QMatrix m, Exec exec = default_exec());

// Basis of the right kernel {v : m v = 0}, echelonized, deterministic order.
// Size = cols - rank.
std::vector<std::vector<Rat>> rat_kernel(const QMatrix& m, Exec exec = default_exec());

// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<std::vector<Rat>> rat_solve(const QMatrix& m, const std::vector<Rat>& b,
                                          Exec exec = default_exec());

QMatrix inverse(const QMatrix& m);  // throws std::domain_error if singular

Rat determinant(QMatrix m);

// ---------------------------------------------------------------------------
// Integer lattices.

class ZMatrix {
  public:
    ZMatrix() = default;
    ZMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    bool operator==(const ZMatrix& o) const = default;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Basis of a sublattice of Z^n; vectors are linearly independent over Q and
// generate the lattice over Z (saturated when produced by int_kernel).
struct IntLatticeBasis {
    int ambient_dim = 0;
    std::vector<std::vector<Int>> basis;

    // Whether v is an integer combination of the basis vectors.
    bool contains(const std::vector<Int>& v) const;
};

// Saturated kernel lattice {u in Z^cols : m u = 0}: every integer solution is
// an integer combination of the returned basis. Unimodular column reduction
// with first-nonzero pivot selection, so the output is deterministic.
IntLatticeBasis int_kernel(const ZMatrix& m);

ZMatrix zmatrix_from_rows(const std::vector<std::vector<long>>& rows);
QMatrix qmatrix_from_rows(const std::vector<std::vector<Rat>>& rows);

}  // namespace symchev

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hm/field.hpp"

namespace hm {

// Sparse row: sorted (column, nonzero value) pairs.
using SparseVec = std::vector<std::pair<long, Rat>>;
using Vec = std::vector<Rat>;  // small dense vectors (structure constants)

SparseVec to_sparse(const Vec& v, const Field& f);
Vec to_dense(const SparseVec& v, long n);

// Exact sparse matrix in triplet/row form. Zero entries are never stored,
// so equal matrices have equal representations.
class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(rows) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    // Accumulate into (r, c); drops the entry if the sum cancels.
    void add(long r, long c, const Rat& v, const Field& f);
    void set(long r, long c, const Rat& v, const Field& f);
    Rat get(long r, long c) const;

    const SparseVec& row(long r) const { return data_[r]; }
    long nnz() const;

    SparseMatrix transpose() const;
    bool is_zero() const;

    // this * other, dims must agree
    SparseMatrix multiply(const SparseMatrix& other, const Field& f) const;
    static SparseMatrix identity(long n);

    bool operator==(const SparseMatrix&) const = default;

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<SparseVec> data_;
};

struct Subspace {
    long ambient = 0;
    std::vector<SparseVec> basis;  // linearly independent
    long dim() const { return (long)basis.size(); }
};

// Incremental exact row-echelon accumulator. Rows are reduced against the
// pivots seen so far; pivot choice is deterministic (leftmost column).
class Echelon {
  public:
    explicit Echelon(const Field& f) : field_(&f) {}

    // Reduces v against the current pivot rows; returns the residual.
    SparseVec reduce(SparseVec v) const;
    // Reduce and, if the residual is nonzero, insert it as a new pivot row.
    // Returns true if the rank grew.
    bool insert(SparseVec v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    long rank() const { return (long)rows_.size(); }
    const std::map<long, SparseVec>& pivot_rows() const { return rows_; }

  private:
    const Field* field_;
    std::map<long, SparseVec> rows_;  // pivot column -> normalized row
};

long rank(const SparseMatrix& m, const Field& f);
Subspace kernel_basis(const SparseMatrix& m, const Field& f);
Subspace row_space(const SparseMatrix& m, const Field& f);
Subspace column_space(const SparseMatrix& m, const Field& f);

// dim(outer) - dim(inner); throws inclusion-violation unless inner <= outer.
long quotient_dim(const Subspace& outer, const Subspace& inner, const Field& f);

// Solve A x = b; nullopt when inconsistent. Deterministic choice (free
// variables set to zero).
std::optional<Vec> solve(const SparseMatrix& a, const Vec& b, const Field& f);

// Coordinates of v in the given independent spanning set, if v lies in it.
std::optional<Vec> coords_in(const std::vector<SparseVec>& span, const SparseVec& v,
                             long ambient, const Field& f);

SparseVec sv_add(const SparseVec& a, const SparseVec& b, const Field& f);
SparseVec sv_scale(const SparseVec& a, const Rat& c, const Field& f);

}  // namespace hm

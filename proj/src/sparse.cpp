#include "hm/sparse.hpp"

#include <algorithm>

namespace hm {

SparseVec to_sparse(const Vec& v, const Field& f) {
    SparseVec out;
    for (long i = 0; i < (long)v.size(); ++i) {
        Rat x = f.normalize(v[i]);
        if (x != 0) out.emplace_back(i, x);
    }
    return out;
}

Vec to_dense(const SparseVec& v, long n) {
    Vec out(n, Rat(0));
    for (auto& [i, x] : v) out[i] = x;
    return out;
}

void SparseMatrix::add(long r, long c, const Rat& v, const Field& f) {
    Rat x = f.normalize(v);
    if (x == 0) return;
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, long col) { return p.first < col; });
    if (it != row.end() && it->first == c) {
        it->second = f.add(it->second, x);
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, {c, x});
    }
}

void SparseMatrix::set(long r, long c, const Rat& v, const Field& f) {
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, long col) { return p.first < col; });
    if (it != row.end() && it->first == c) row.erase(it);
    Rat x = f.normalize(v);
    if (x == 0) return;
    add(r, c, x, f);
}

Rat SparseMatrix::get(long r, long c) const {
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, long col) { return p.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rat(0);
}

long SparseMatrix::nnz() const {
    long n = 0;
    for (auto& r : data_) n += (long)r.size();
    return n;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
        for (auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
    return t;
}

bool SparseMatrix::is_zero() const {
    for (auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other, const Field& f) const {
    SparseMatrix out(rows_, other.cols_);
    for (long r = 0; r < rows_; ++r) {
        std::map<long, Rat> acc;
        for (auto& [k, v] : data_[r])
            for (auto& [c, w] : other.data_[k]) {
                auto [it, fresh] = acc.try_emplace(c, Rat(0));
                it->second = f.add(it->second, f.mul(v, w));
            }
        for (auto& [c, v] : acc)
            if (v != 0) out.data_[r].emplace_back(c, v);
    }
    return out;
}

SparseMatrix SparseMatrix::identity(long n) {
    SparseMatrix m(n, n);
    Field q(FieldSpec::rationals());
    for (long i = 0; i < n; ++i) m.set(i, i, Rat(1), q);
    return m;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b, const Field& f) {
    SparseVec out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Rat s = f.add(a[i].second, b[j].second);
            if (s != 0) out.emplace_back(a[i].first, s);
            ++i, ++j;
        }
    }
    return out;
}

SparseVec sv_scale(const SparseVec& a, const Rat& c, const Field& f) {
    Rat cc = f.normalize(c);
    if (cc == 0) return {};
    SparseVec out;
    out.reserve(a.size());
    for (auto& [i, v] : a) out.emplace_back(i, f.mul(v, cc));
    return out;
}

SparseVec Echelon::reduce(SparseVec v) const {
    // Stored rows are mutually back-substituted, so each cancellation
    // removes one pivot coordinate and introduces none.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [c, val] : v) {
            auto it = rows_.find(c);
            if (it == rows_.end()) continue;
            v = sv_add(v, sv_scale(it->second, field_->neg(val), *field_), *field_);
            changed = true;
            break;
        }
    }
    return v;
}

bool Echelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rat lead = v.front().second;
    v = sv_scale(v, field_->inv(lead), *field_);
    long piv = v.front().first;
    // back-substitute into existing rows
    for (auto& [p, row] : rows_) {
        for (auto& [c, val] : row)
            if (c == piv) {
                row = sv_add(row, sv_scale(v, field_->neg(val), *field_), *field_);
                break;
            }
    }
    rows_.emplace(piv, std::move(v));
    return true;
}

long rank(const SparseMatrix& m, const Field& f) {
    Echelon e(f);
    for (long r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    return e.rank();
}

Subspace row_space(const SparseMatrix& m, const Field& f) {
    Echelon e(f);
    for (long r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    Subspace s;
    s.ambient = m.cols();
    for (auto& [p, row] : e.pivot_rows()) s.basis.push_back(row);
    return s;
}

Subspace column_space(const SparseMatrix& m, const Field& f) {
    return row_space(m.transpose(), f);
}

Subspace kernel_basis(const SparseMatrix& m, const Field& f) {
    Echelon e(f);
    for (long r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    const auto& pivots = e.pivot_rows();
    Subspace s;
    s.ambient = m.cols();
    for (long c = 0; c < m.cols(); ++c) {
        if (pivots.count(c)) continue;
        // free column c: x_c = 1, pivot variables from the reduced rows
        SparseVec v;
        v.emplace_back(c, Rat(1));
        for (auto& [p, row] : pivots) {
            // row has leading 1 at p; coefficient of column c gives -x_p
            for (auto& [cc, val] : row)
                if (cc == c) {
                    v = sv_add(v, {{p, f.neg(val)}}, f);
                    break;
                }
        }
        std::sort(v.begin(), v.end());
        s.basis.push_back(std::move(v));
    }
    return s;
}

long quotient_dim(const Subspace& outer, const Subspace& inner, const Field& f) {
    Echelon e(f);
    for (auto& v : outer.basis) e.insert(v);
    if (e.rank() != (long)outer.basis.size())
        throw hm_error("inclusion-violation", "outer basis is not independent");
    for (auto& v : inner.basis)
        if (!e.contains(v)) throw hm_error("inclusion-violation", "inner vector outside outer span");
    Echelon ei(f);
    for (auto& v : inner.basis) ei.insert(v);
    return e.rank() - ei.rank();
}

std::optional<Vec> solve(const SparseMatrix& a, const Vec& b, const Field& f) {
    // eliminate on [A^T | I] rows: we solve via augmented columns instead:
    // reduce b against the column space while tracking coefficients.
    std::vector<SparseVec> cols;
    SparseMatrix at = a.transpose();
    for (long c = 0; c < at.rows(); ++c) cols.push_back(at.row(c));
    auto r = coords_in(cols, to_sparse(b, f), a.rows(), f);
    return r;
}

std::optional<Vec> coords_in(const std::vector<SparseVec>& span, const SparseVec& v,
                             long ambient, const Field& f) {
    // Augment each spanning vector with an indicator coordinate past the
    // ambient range, eliminate, then read v's residual coefficients.
    Echelon e(f);
    long n = (long)span.size();
    for (long i = 0; i < n; ++i) {
        SparseVec w = span[i];
        w.emplace_back(ambient + i, Rat(1));
        e.insert(std::move(w));
    }
    SparseVec red = e.reduce(v);
    Vec coeffs(n, Rat(0));
    for (auto& [c, val] : red) {
        if (c < ambient) return std::nullopt;  // not in the span
        coeffs[c - ambient] = f.neg(val);
    }
    return coeffs;
}

}  // namespace hm

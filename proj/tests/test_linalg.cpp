#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hm/sparse.hpp"

using namespace hm;

namespace {

SparseMatrix dense_to_sparse(const std::vector<std::vector<long>>& rows, const Field& f) {
    long r = (long)rows.size(), c = rows.empty() ? 0 : (long)rows[0].size();
    SparseMatrix m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j)
            if (rows[(size_t)i][(size_t)j] != 0)
                m.set(i, j, f.from_long(rows[(size_t)i][(size_t)j]), f);
    return m;
}

// plain dense row-reduction oracle
long dense_rank(std::vector<std::vector<Rat>> a, const Field& f) {
    long rows = (long)a.size();
    if (rows == 0) return 0;
    long cols = (long)a[0].size();
    long rank = 0;
    for (long c = 0; c < cols && rank < rows; ++c) {
        long piv = -1;
        for (long r = rank; r < rows; ++r)
            if (!f.is_zero(a[(size_t)r][(size_t)c])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[(size_t)piv], a[(size_t)rank]);
        Rat inv = f.inv(a[(size_t)rank][(size_t)c]);
        for (long j = c; j < cols; ++j)
            a[(size_t)rank][(size_t)j] = f.mul(a[(size_t)rank][(size_t)j], inv);
        for (long r = 0; r < rows; ++r) {
            if (r == rank || f.is_zero(a[(size_t)r][(size_t)c])) continue;
            Rat coef = a[(size_t)r][(size_t)c];
            for (long j = c; j < cols; ++j)
                a[(size_t)r][(size_t)j] =
                    f.sub(a[(size_t)r][(size_t)j], f.mul(coef, a[(size_t)rank][(size_t)j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("field arithmetic over F5") {
    Field f(FieldSpec::prime(5));
    CHECK(f.add(f.from_long(3), f.from_long(4)) == 2);
    CHECK(f.inv(f.from_long(2)) == 3);
    CHECK(f.normalize(Rat(1, 2)) == 3);  // 2^-1 mod 5
    CHECK(f.is_zero(f.from_long(10)));
}

TEST_CASE("field rejects composite characteristic") {
    CHECK_THROWS_WITH_AS(FieldSpec::prime(6), doctest::Contains("prime"), hm_error);
    try {
        FieldSpec::prime(6);
    } catch (const hm_error& e) {
        CHECK(e.code == "bad-params");
    }
}

TEST_CASE("rank of [[1,2],[2,4]] over F5 is 1") {
    Field f(FieldSpec::prime(5));
    auto m = dense_to_sparse({{1, 2}, {2, 4}}, f);
    CHECK(rank(m, f) == 1);
}

TEST_CASE("kernel of [[1,1,0],[0,1,1]] over Q is span (1,-1,1)") {
    Field f(FieldSpec::rationals());
    auto m = dense_to_sparse({{1, 1, 0}, {0, 1, 1}}, f);
    auto ker = kernel_basis(m, f).basis;
    REQUIRE(ker.size() == 1);
    Vec v = to_dense(ker[0], 3);
    // normalize so first entry is 1
    Rat s = f.inv(v[0]);
    CHECK(f.mul(v[0], s) == 1);
    CHECK(f.mul(v[1], s) == -1);
    CHECK(f.mul(v[2], s) == 1);
    // kernel vectors are actual kernel vectors
    SparseMatrix kt(1, 3);
    for (auto& [i, val] : ker[0]) kt.set(0, i, val, f);
    CHECK(m.multiply(kt.transpose(), f).is_zero());
}

TEST_CASE("quotient dimension and inclusion violations") {
    Field f(FieldSpec::rationals());
    Subspace outer{3, {{{0, Rat(1)}}, {{1, Rat(1)}}}};
    Subspace inner{3, {{{0, Rat(1)}, {1, Rat(1)}}}};
    CHECK(quotient_dim(outer, inner, f) == 1);
    Subspace notin{3, {{{2, Rat(1)}}}};
    CHECK_THROWS_AS(quotient_dim(outer, notin, f), hm_error);
    try {
        quotient_dim(outer, notin, f);
    } catch (const hm_error& e) {
        CHECK(e.code == "inclusion-violation");
    }
}

TEST_CASE("solve recovers solutions and detects inconsistency") {
    Field f(FieldSpec::prime(7));
    auto m = dense_to_sparse({{1, 2}, {3, 4}}, f);
    Vec b = {f.from_long(5), f.from_long(6)};
    auto x = solve(m, b, f);
    REQUIRE(x.has_value());
    // check m x == b
    for (long r = 0; r < 2; ++r) {
        Rat acc(0);
        for (long c = 0; c < 2; ++c) acc = f.add(acc, f.mul(m.get(r, c), (*x)[(size_t)c]));
        CHECK(acc == b[(size_t)r]);
    }
    auto sing = dense_to_sparse({{1, 2}, {2, 4}}, f);
    Vec bad = {f.from_long(1), f.from_long(3)};
    CHECK_FALSE(solve(sing, bad, f).has_value());
}

TEST_CASE("rank-nullity and permutation invariance on random matrices") {
    std::mt19937 rng(12345);
    for (const auto& spec : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(5)}) {
        Field f(spec);
        for (int trial = 0; trial < 20; ++trial) {
            long r = 1 + (long)(rng() % 8), c = 1 + (long)(rng() % 8);
            std::vector<std::vector<long>> rows((size_t)r, std::vector<long>((size_t)c));
            for (auto& row : rows)
                for (auto& v : row) v = (long)(rng() % 7) - 3;
            auto m = dense_to_sparse(rows, f);
            long rk = rank(m, f);
            CHECK(rk + (long)kernel_basis(m, f).basis.size() == c);
            CHECK(rank(m.transpose(), f) == rk);
            // permute rows: rank unchanged
            std::shuffle(rows.begin(), rows.end(), rng);
            CHECK(rank(dense_to_sparse(rows, f), f) == rk);
            // dense oracle agreement
            std::vector<std::vector<Rat>> dense((size_t)r, std::vector<Rat>((size_t)c));
            for (long i = 0; i < r; ++i)
                for (long j = 0; j < c; ++j)
                    dense[(size_t)i][(size_t)j] = f.from_long(rows[(size_t)i][(size_t)j]);
            CHECK(dense_rank(dense, f) == rank(dense_to_sparse(rows, f), f));
        }
    }
}

TEST_CASE("coords_in expresses vectors in dependent spanning sets") {
    Field f(FieldSpec::rationals());
    std::vector<SparseVec> span = {{{0, Rat(1)}, {1, Rat(1)}},
                                   {{1, Rat(1)}, {2, Rat(1)}},
                                   {{0, Rat(1)}, {2, Rat(-1)}},
                                   {{0, Rat(2)}, {1, Rat(2)}}};
    SparseVec v = {{0, Rat(3)}, {1, Rat(1)}, {2, Rat(-2)}};
    auto coords = coords_in(span, v, 3, f);
    REQUIRE(coords.has_value());
    // recombine
    std::map<long, Rat> acc;
    for (size_t i = 0; i < span.size(); ++i)
        for (auto& [j, val] : span[i]) acc[j] = f.add(acc[j], f.mul((*coords)[i], val));
    for (auto& [j, val] : v) CHECK(acc[j] == val);
    SparseVec outside = {{0, Rat(1)}};
    CHECK_FALSE(coords_in(span, outside, 3, f).has_value());
}

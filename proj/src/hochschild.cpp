#include "hm/hochschild.hpp"

#include <algorithm>
#include <functional>

namespace hm {

namespace {

// basis morphism indices usable in tuple position for hom(x -> y)
std::vector<int> available(const KCategory& c, int y, int x, bool normalized) {
    std::vector<int> out;
    const Hom* h = c.hom(y, x);
    if (!h) return out;
    for (int i = 0; i < h->dim(); ++i)
        if (!(normalized && i == h->id_index)) out.push_back(i);
    return out;
}

void check_budget(long dim, long budget) {
    if (dim > budget)
        throw hm_error("dimension-overflow", "complex degree dimension " + std::to_string(dim) +
                                                 " exceeds budget " + std::to_string(budget));
}

// Enumerate object tuples (t_0..t_deg) where consecutive pairs admit tuple
// morphisms (direction handled by caller through `arrow`), then all morphism
// index combinations. arrow(a, b) lists usable indices for slot between
// positions a (earlier object) and b.
void enumerate_degree(const KCategory& c, int deg,
                      const std::function<std::vector<int>(int, int)>& arrow,
                      const std::function<long(const std::vector<int>&)>& module_dim,
                      const std::function<void(const std::vector<int>&,
                                               const std::vector<int>&, long)>& emit) {
    long n = c.n_objects();
    std::vector<int> objs;
    std::function<void(int)> rec_obj = [&](int pos) {
        if (pos == deg + 1) {
            long md = module_dim(objs);
            if (md == 0) return;
            std::vector<int> morphs((size_t)deg);
            std::function<void(int)> rec_m = [&](int slot) {
                if (slot == deg) {
                    emit(objs, morphs, md);
                    return;
                }
                for (int i : arrow(objs[(size_t)slot], objs[(size_t)slot + 1])) {
                    morphs[(size_t)slot] = i;
                    rec_m(slot + 1);
                }
            };
            rec_m(0);
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (pos > 0 && arrow(objs[(size_t)pos - 1], x).empty()) continue;
            objs.push_back(x);
            rec_obj(pos + 1);
            objs.pop_back();
        }
    };
    rec_obj(0);
}

void assert_square_zero(const Complex& cx) {
    Field F(cx.cat->field);
    for (int n = 0; n + 1 <= cx.nmax; ++n) {
        const SparseMatrix& a = cx.cochain ? cx.diff[(size_t)n + 1] : cx.diff[(size_t)n];
        const SparseMatrix& b = cx.cochain ? cx.diff[(size_t)n] : cx.diff[(size_t)n + 1];
        if (!a.multiply(b, F).is_zero())
            throw hm_error("internal-error", "differential does not square to zero");
    }
}

}  // namespace

Complex build_cochain_complex(std::shared_ptr<const KCategory> c, const Bimodule& m, int nmax,
                              bool normalized, long budget) {
    if (nmax < 0) throw hm_error("bad-params", "max degree must be >= 0");
    Complex cx;
    cx.cochain = true;
    cx.normalized = normalized;
    cx.cat = c;
    cx.module = &m;
    cx.nmax = nmax;
    Field F(c->field);
    const KCategory& C = *c;
    // degree n tuples: objects (x0..xn), morph slot between positions i-1, i is
    // hom(x_i -> x_{i-1}); module space M(x0, xn)
    auto arrow = [&](int a, int b) { return available(C, a, b, normalized); };
    for (int deg = 0; deg <= nmax + 1; ++deg) {
        DegreeBasis db;
        enumerate_degree(
            C, deg, arrow,
            [&](const std::vector<int>& objs) { return m.dim(objs.front(), objs.back()); },
            [&](const std::vector<int>& objs, const std::vector<int>& morphs, long md) {
                std::vector<int> key = objs;
                key.insert(key.end(), morphs.begin(), morphs.end());
                db.offset[key] = db.dim();
                for (long mi = 0; mi < md; ++mi)
                    db.elems.push_back({objs, morphs, (int)mi});
                check_budget(db.dim(), budget);
            });
        cx.basis.push_back(std::move(db));
    }
    // d^n : C^n -> C^{n+1}, assembled by scattering over rows (degree n+1 tuples)
    for (int n = 0; n <= nmax; ++n) {
        const DegreeBasis& rows = cx.basis[(size_t)n + 1];
        const DegreeBasis& cols = cx.basis[(size_t)n];
        SparseMatrix D(rows.dim(), cols.dim());
        for (const auto& [key, row_off] : rows.offset) {
            std::vector<int> S(key.begin(), key.begin() + n + 2);
            std::vector<int> h(key.begin() + n + 2, key.end());
            int x0 = S[0], x1 = S[1], xn = S[(size_t)n], xl = S[(size_t)n + 1];
            // term 0: h1 . f(h2..h_{n+1})
            {
                std::vector<int> ck(S.begin() + 1, S.end());
                ck.insert(ck.end(), h.begin() + 1, h.end());
                auto it = cols.offset.find(ck);
                if (it != cols.offset.end()) {
                    long md = m.dim(x1, xl);
                    for (long mi = 0; mi < md; ++mi) {
                        Vec e(md, Rat(0));
                        e[(size_t)mi] = 1;
                        Vec v = m.act_left(x0, x1, xl, h[0], e);
                        for (long j = 0; j < (long)v.size(); ++j)
                            if (v[(size_t)j] != 0)
                                D.add(row_off + j, it->second + mi, v[(size_t)j], F);
                    }
                }
            }
            // inner terms: compose adjacent tuple morphisms
            for (int i = 1; i <= n; ++i) {
                Rat sign((i % 2) ? -1 : 1);
                int za = S[(size_t)i - 1], ya = S[(size_t)i], xa = S[(size_t)i + 1];
                Vec comp = C.compose(za, ya, xa, h[(size_t)i - 1], h[(size_t)i]);
                const Hom* th = C.hom(za, xa);
                for (long e = 0; e < (long)comp.size(); ++e) {
                    if (comp[(size_t)e] == 0) continue;
                    if (normalized && th && (int)e == th->id_index) continue;
                    std::vector<int> cobjs;
                    for (int j = 0; j <= n + 1; ++j)
                        if (j != i) cobjs.push_back(S[(size_t)j]);
                    std::vector<int> cm;
                    for (int j = 0; j < i - 1; ++j) cm.push_back(h[(size_t)j]);
                    cm.push_back((int)e);
                    for (int j = i + 1; j <= n; ++j) cm.push_back(h[(size_t)j]);
                    std::vector<int> ck = cobjs;
                    ck.insert(ck.end(), cm.begin(), cm.end());
                    auto it = cols.offset.find(ck);
                    if (it == cols.offset.end()) continue;
                    long md = m.dim(x0, xl);
                    Rat coef = F.mul(sign, comp[(size_t)e]);
                    for (long mi = 0; mi < md; ++mi)
                        D.add(row_off + mi, it->second + mi, coef, F);
                }
            }
            // last term: f(h1..hn) . h_{n+1}
            {
                Rat sign(((n + 1) % 2) ? -1 : 1);
                std::vector<int> ck(S.begin(), S.end() - 1);
                ck.insert(ck.end(), h.begin(), h.end() - 1);
                auto it = cols.offset.find(ck);
                if (it != cols.offset.end()) {
                    long md = m.dim(x0, xn);
                    for (long mi = 0; mi < md; ++mi) {
                        Vec e(md, Rat(0));
                        e[(size_t)mi] = 1;
                        Vec v = m.act_right(x0, xn, xl, e, h[(size_t)n]);
                        for (long j = 0; j < (long)v.size(); ++j)
                            if (v[(size_t)j] != 0)
                                D.add(row_off + j, it->second + mi, F.mul(sign, v[(size_t)j]), F);
                    }
                }
            }
        }
        cx.diff.push_back(std::move(D));
    }
    assert_square_zero(cx);
    return cx;
}

Complex build_chain_complex(std::shared_ptr<const KCategory> c, const Bimodule& m, int nmax,
                            bool normalized, long budget) {
    if (nmax < 0) throw hm_error("bad-params", "max degree must be >= 0");
    Complex cx;
    cx.cochain = false;
    cx.normalized = normalized;
    cx.cat = c;
    cx.module = &m;
    cx.nmax = nmax;
    Field F(c->field);
    const KCategory& C = *c;
    // degree n tuples: objects (x1..x_{n+1}), f_i in hom(x_i -> x_{i+1}),
    // module space M(x1, x_{n+1})
    auto arrow = [&](int a, int b) { return available(C, b, a, normalized); };
    for (int deg = 0; deg <= nmax + 1; ++deg) {
        DegreeBasis db;
        enumerate_degree(
            C, deg, arrow,
            [&](const std::vector<int>& objs) { return m.dim(objs.front(), objs.back()); },
            [&](const std::vector<int>& objs, const std::vector<int>& morphs, long md) {
                std::vector<int> key = objs;
                key.insert(key.end(), morphs.begin(), morphs.end());
                db.offset[key] = db.dim();
                for (long mi = 0; mi < md; ++mi)
                    db.elems.push_back({objs, morphs, (int)mi});
                check_budget(db.dim(), budget);
            });
        cx.basis.push_back(std::move(db));
    }
    // diff[n] : C_{n+1} -> C_n, assembled column by column
    for (int n = 0; n <= nmax; ++n) {
        const DegreeBasis& rows = cx.basis[(size_t)n];
        const DegreeBasis& cols = cx.basis[(size_t)n + 1];
        int deg = n + 1;
        SparseMatrix D(rows.dim(), cols.dim());
        for (const auto& [key, col_off] : cols.offset) {
            std::vector<int> T(key.begin(), key.begin() + deg + 1);
            std::vector<int> f(key.begin() + deg + 1, key.end());
            int x1 = T[0], xl = T[(size_t)deg];
            long md = m.dim(x1, xl);
            // slot 0: m . f_deg, dropping the last tuple morphism
            {
                std::vector<int> rk(T.begin(), T.end() - 1);
                rk.insert(rk.end(), f.begin(), f.end() - 1);
                auto it = rows.offset.find(rk);
                if (it != rows.offset.end()) {
                    int xp = T[(size_t)deg - 1];
                    for (long mi = 0; mi < md; ++mi) {
                        Vec e(md, Rat(0));
                        e[(size_t)mi] = 1;
                        Vec v = m.act_right(x1, xl, xp, e, f[(size_t)deg - 1]);
                        for (long j = 0; j < (long)v.size(); ++j)
                            if (v[(size_t)j] != 0)
                                D.add(it->second + j, col_off + mi, v[(size_t)j], F);
                    }
                }
            }
            // slots k = 1..deg-1: compose f_{i+1} . f_i with i = deg - k (1-based f)
            for (int k = 1; k <= deg - 1; ++k) {
                int i = deg - k;  // merge f[i-1] (x_i -> x_{i+1}) and f[i] (x_{i+1} -> x_{i+2})
                Rat sign((k % 2) ? -1 : 1);
                int xa = T[(size_t)i - 1], ya = T[(size_t)i], za = T[(size_t)i + 1];
                Vec comp = C.compose(za, ya, xa, f[(size_t)i], f[(size_t)i - 1]);
                const Hom* th = C.hom(za, xa);
                for (long e = 0; e < (long)comp.size(); ++e) {
                    if (comp[(size_t)e] == 0) continue;
                    if (normalized && th && (int)e == th->id_index) continue;
                    std::vector<int> robjs;
                    for (int j = 0; j <= deg; ++j)
                        if (j != i) robjs.push_back(T[(size_t)j]);
                    std::vector<int> rm;
                    for (int j = 0; j < i - 1; ++j) rm.push_back(f[(size_t)j]);
                    rm.push_back((int)e);
                    for (int j = i + 1; j < deg; ++j) rm.push_back(f[(size_t)j]);
                    std::vector<int> rk = robjs;
                    rk.insert(rk.end(), rm.begin(), rm.end());
                    auto it = rows.offset.find(rk);
                    if (it == rows.offset.end()) continue;
                    Rat coef = F.mul(sign, comp[(size_t)e]);
                    for (long mi = 0; mi < md; ++mi)
                        D.add(it->second + mi, col_off + mi, coef, F);
                }
            }
            // slot deg: f_1 . m, dropping the first tuple morphism
            {
                Rat sign((deg % 2) ? -1 : 1);
                std::vector<int> rk(T.begin() + 1, T.end());
                rk.insert(rk.end(), f.begin() + 1, f.end());
                auto it = rows.offset.find(rk);
                if (it != rows.offset.end()) {
                    int x2 = T[1];
                    for (long mi = 0; mi < md; ++mi) {
                        Vec e(md, Rat(0));
                        e[(size_t)mi] = 1;
                        Vec v = m.act_left(x2, x1, xl, f[0], e);
                        for (long j = 0; j < (long)v.size(); ++j)
                            if (v[(size_t)j] != 0)
                                D.add(it->second + j, col_off + mi, F.mul(sign, v[(size_t)j]), F);
                    }
                }
            }
        }
        cx.diff.push_back(std::move(D));
    }
    assert_square_zero(cx);
    return cx;
}

HomologyResult homology_dims(const Complex& cx, bool with_reps) {
    Field F(cx.cat->field);
    HomologyResult res;
    std::vector<long> ranks((size_t)cx.nmax + 1);
    for (int n = 0; n <= cx.nmax; ++n) ranks[(size_t)n] = rank(cx.diff[(size_t)n], F);
    for (int n = 0; n <= cx.nmax; ++n) {
        long kernel_cut, image_rank;
        if (cx.cochain) {
            kernel_cut = ranks[(size_t)n];
            image_rank = n > 0 ? ranks[(size_t)n - 1] : 0;
        } else {
            kernel_cut = n > 0 ? ranks[(size_t)n - 1] : 0;
            image_rank = ranks[(size_t)n];
        }
        res.dims.push_back(cx.dim(n) - kernel_cut - image_rank);
    }
    if (with_reps) {
        res.reps.resize((size_t)cx.nmax + 1);
        res.images.resize((size_t)cx.nmax + 1);
        for (int n = 0; n <= cx.nmax; ++n) {
            std::vector<SparseVec> cycles;
            if (cx.cochain)
                cycles = kernel_basis(cx.diff[(size_t)n], F).basis;
            else if (n > 0)
                cycles = kernel_basis(cx.diff[(size_t)n - 1], F).basis;
            else {
                for (long i = 0; i < cx.dim(0); ++i) cycles.push_back({{i, Rat(1)}});
            }
            const SparseMatrix& img_mat = cx.cochain
                                              ? cx.diff[(size_t)(n > 0 ? n - 1 : 0)]
                                              : cx.diff[(size_t)n];
            std::vector<SparseVec> img;
            if (!cx.cochain || n > 0) img = column_space(img_mat, F).basis;
            res.images[(size_t)n] = img;
            Echelon ech(F);
            for (const auto& b : img) ech.insert(b);
            for (const auto& z : cycles) {
                if (ech.insert(z)) res.reps[(size_t)n].push_back(z);
                if ((long)res.reps[(size_t)n].size() == res.dims[(size_t)n]) break;
            }
            if ((long)res.reps[(size_t)n].size() != res.dims[(size_t)n])
                throw hm_error("internal-error", "representative count mismatch");
        }
    }
    return res;
}

std::vector<long> cohomology_dims(std::shared_ptr<const KCategory> c, const Bimodule& m,
                                  int nmax, bool normalized, long budget) {
    Complex cx = build_cochain_complex(c, m, nmax, normalized, budget);
    return homology_dims(cx, false).dims;
}

std::vector<long> homology_dims(std::shared_ptr<const KCategory> c, const Bimodule& m, int nmax,
                                bool normalized, long budget) {
    Complex cx = build_chain_complex(c, m, nmax, normalized, budget);
    return homology_dims(cx, false).dims;
}

CenterResult center(std::shared_ptr<const KCategory> c, const Bimodule& m) {
    const KCategory& C = *c;
    Field F(C.field);
    long n = C.n_objects();
    std::vector<long> off((size_t)n + 1, 0);
    for (int x = 0; x < n; ++x) off[(size_t)x + 1] = off[(size_t)x] + m.dim(x, x);
    long total = off[(size_t)n];
    // rows: for each basis f: x -> y and each coordinate of M(y, x),
    // the equation f.m_x - m_y.f = 0
    long rcount = 0;
    std::vector<std::map<long, Rat>> rowdata;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            const Hom* h = C.hom(y, x);
            if (!h || m.dim(y, x) == 0) continue;
            for (int f = 0; f < h->dim(); ++f) {
                long tgt = m.dim(y, x);
                std::vector<std::map<long, Rat>> eq((size_t)tgt);
                for (long mi = 0; mi < m.dim(x, x); ++mi) {
                    Vec e(m.dim(x, x), Rat(0));
                    e[(size_t)mi] = 1;
                    Vec v = m.act_left(y, x, x, f, e);
                    for (long j = 0; j < tgt; ++j)
                        if (v[(size_t)j] != 0) eq[(size_t)j][off[(size_t)x] + mi] = v[(size_t)j];
                }
                for (long mi = 0; mi < m.dim(y, y); ++mi) {
                    Vec e(m.dim(y, y), Rat(0));
                    e[(size_t)mi] = 1;
                    Vec v = m.act_right(y, y, x, e, f);
                    for (long j = 0; j < tgt; ++j)
                        if (v[(size_t)j] != 0) {
                            auto& cell = eq[(size_t)j][off[(size_t)y] + mi];
                            cell = F.sub(cell, v[(size_t)j]);
                        }
                }
                for (long j = 0; j < tgt; ++j) {
                    rowdata.push_back(eq[(size_t)j]);
                    ++rcount;
                }
            }
        }
    SparseMatrix M2(rcount, total);
    for (long r = 0; r < rcount; ++r)
        for (const auto& [cix, val] : rowdata[(size_t)r]) M2.add(r, cix, val, F);
    auto ker = kernel_basis(M2, F).basis;
    CenterResult res;
    res.dim = (long)ker.size();
    for (const auto& kv : ker) {
        std::vector<Vec> fam;
        Vec dense = to_dense(kv, total);
        for (int x = 0; x < n; ++x)
            fam.push_back(Vec(dense.begin() + off[(size_t)x], dense.begin() + off[(size_t)x + 1]));
        res.basis.push_back(fam);
    }
    return res;
}

SparseVec cup_product(const Complex& cx, int p, const SparseVec& a, int q, const SparseVec& b) {
    if (!cx.cochain) throw hm_error("bad-params", "cup product needs a cochain complex");
    if (p + q > cx.nmax + 1) throw hm_error("bad-params", "cup product degree out of range");
    const KCategory& C = *cx.cat;
    Field F(C.field);
    Vec da = to_dense(a, cx.dim(p)), db = to_dense(b, cx.dim(q));
    const DegreeBasis& pa = cx.basis[(size_t)p];
    const DegreeBasis& pb = cx.basis[(size_t)q];
    const DegreeBasis& tgt = cx.basis[(size_t)(p + q)];
    std::map<long, Rat> out;
    for (const auto& [key, row_off] : tgt.offset) {
        std::vector<int> S(key.begin(), key.begin() + p + q + 1);
        std::vector<int> h(key.begin() + p + q + 1, key.end());
        std::vector<int> ka(S.begin(), S.begin() + p + 1);
        ka.insert(ka.end(), h.begin(), h.begin() + p);
        std::vector<int> kb(S.begin() + p, S.end());
        kb.insert(kb.end(), h.begin() + p, h.end());
        auto ia = pa.offset.find(ka);
        auto ib = pb.offset.find(kb);
        if (ia == pa.offset.end() || ib == pb.offset.end()) continue;
        int x0 = S[0], xp = S[(size_t)p], xl = S.back();
        long dima = C.dim(x0, xp), dimb = C.dim(xp, xl);
        for (long i = 0; i < dima; ++i) {
            Rat av = da[(size_t)(ia->second + i)];
            if (av == 0) continue;
            for (long j = 0; j < dimb; ++j) {
                Rat bv = db[(size_t)(ib->second + j)];
                if (bv == 0) continue;
                Vec comp = C.compose(x0, xp, xl, (int)i, (int)j);
                Rat coef = F.mul(av, bv);
                for (long e = 0; e < (long)comp.size(); ++e)
                    if (comp[(size_t)e] != 0) {
                        auto& cell = out[row_off + e];
                        cell = F.add(cell, F.mul(coef, comp[(size_t)e]));
                    }
            }
        }
    }
    SparseVec res;
    for (const auto& [i, v] : out)
        if (v != 0) res.push_back({i, v});
    return res;
}

SparseVec cup_unit(const Complex& cx) {
    SparseVec u;
    const DegreeBasis& d0 = cx.basis[0];
    for (long i = 0; i < d0.dim(); ++i) {
        const TupleBasisElem& e = d0.elems[(size_t)i];
        int x = e.objects[0];
        if (e.module_index == cx.cat->identity_index(x)) u.push_back({i, Rat(1)});
    }
    return u;
}

std::vector<long> order_complex_cohomology(const PosetSpec& p, FieldSpec field, int nmax) {
    auto leq = poset_leq(p);
    Field F(field);
    long n = (long)p.elements.size();
    std::vector<std::vector<std::vector<int>>> simplices((size_t)nmax + 2);
    std::vector<std::map<std::vector<int>, long>> index((size_t)nmax + 2);
    std::vector<int> chain;
    std::function<void(int)> rec = [&](int last) {
        int k = (int)chain.size() - 1;
        if (k >= 0 && k <= nmax + 1) {
            index[(size_t)k][chain] = (long)simplices[(size_t)k].size();
            simplices[(size_t)k].push_back(chain);
        }
        if (k == nmax + 1) return;
        for (int v = 0; v < n; ++v) {
            if (last >= 0 && !(leq[(size_t)last][(size_t)v] && last != v)) continue;
            chain.push_back(v);
            rec(v);
            chain.pop_back();
        }
    };
    rec(-1);
    std::vector<long> ranks((size_t)nmax + 1);
    std::vector<long> dims;
    std::vector<SparseMatrix> delta;
    for (int k = 0; k <= nmax; ++k) {
        SparseMatrix D((long)simplices[(size_t)k + 1].size(), (long)simplices[(size_t)k].size());
        for (long s = 0; s < (long)simplices[(size_t)k + 1].size(); ++s) {
            const auto& sigma = simplices[(size_t)k + 1][(size_t)s];
            for (int i = 0; i <= k + 1; ++i) {
                std::vector<int> face;
                for (int j = 0; j <= k + 1; ++j)
                    if (j != i) face.push_back(sigma[(size_t)j]);
                auto it = index[(size_t)k].find(face);
                if (it == index[(size_t)k].end())
                    throw hm_error("internal-error", "missing simplex face");
                D.add(s, it->second, Rat((i % 2) ? -1 : 1), F);
            }
        }
        ranks[(size_t)k] = rank(D, F);
        delta.push_back(std::move(D));
    }
    for (int k = 0; k <= nmax; ++k)
        dims.push_back((long)simplices[(size_t)k].size() - ranks[(size_t)k] -
                       (k > 0 ? ranks[(size_t)k - 1] : 0));
    return dims;
}

}  // namespace hm

#include "hm/gsmash.hpp"

#include <algorithm>
#include <set>

namespace hm {

namespace {

const std::vector<Vec> kEmptyComp;

Vec dense_compose(const KCategory& c, int z, int y, int x, const Vec& f, const Vec& g) {
    Field F(c.field);
    Vec out(c.dim(z, x), Rat(0));
    for (long i = 0; i < (long)f.size(); ++i) {
        if (f[(size_t)i] == 0) continue;
        for (long j = 0; j < (long)g.size(); ++j) {
            if (g[(size_t)j] == 0) continue;
            Vec cc = c.compose(z, y, x, (int)i, (int)j);
            Rat coef = F.mul(f[(size_t)i], g[(size_t)j]);
            for (long e = 0; e < (long)cc.size(); ++e)
                out[(size_t)e] = F.add(out[(size_t)e], F.mul(coef, cc[(size_t)e]));
        }
    }
    return out;
}

SparseVec vec_to_sparse(const Vec& v) {
    SparseVec s;
    for (long i = 0; i < (long)v.size(); ++i)
        if (v[(size_t)i] != 0) s.push_back({i, v[(size_t)i]});
    return s;
}

}  // namespace

const std::vector<Vec>& GradedCategory::component(int y, int x, int g) const {
    auto it = comps.find({y, x});
    if (it == comps.end()) return kEmptyComp;
    return it->second[(size_t)g];
}

long GradedCategory::comp_dim(int y, int x, int g) const {
    return (long)component(y, x, g).size();
}

std::vector<Vec> GradedCategory::graded_parts(int y, int x, const Vec& v) const {
    Field F(base->field);
    int ng = group.order();
    long d = base->dim(y, x);
    std::vector<Vec> parts((size_t)ng, Vec((size_t)d, Rat(0)));
    auto it = comps.find({y, x});
    if (it == comps.end()) {
        if (d > 0) throw hm_error("bad-params", "grading misses a hom space");
        return parts;
    }
    std::vector<SparseVec> span;
    std::vector<int> degree_of;
    for (int g = 0; g < ng; ++g)
        for (const auto& b : it->second[(size_t)g]) {
            span.push_back(vec_to_sparse(b));
            degree_of.push_back(g);
        }
    auto coords = coords_in(span, vec_to_sparse(v), d, F);
    if (!coords) throw hm_error("bad-params", "grading components do not span a hom space");
    for (size_t i = 0; i < span.size(); ++i) {
        if ((*coords)[i] == 0) continue;
        int g = degree_of[i];
        for (const auto& [j, val] : span[i])
            parts[(size_t)g][(size_t)j] =
                F.add(parts[(size_t)g][(size_t)j], F.mul((*coords)[i], val));
    }
    return parts;
}

ValidationReport validate_grading(const GradedCategory& g) {
    ValidationReport rep;
    const KCategory& c = *g.base;
    Field F(c.field);
    int ng = g.group.order();
    for (const auto& [key, h] : c.homs) {
        auto it = g.comps.find(key);
        if (it == g.comps.end()) {
            rep.failures.push_back("no components given for a nonzero hom space");
            continue;
        }
        if ((int)it->second.size() != ng) {
            rep.failures.push_back("component list has wrong number of degrees");
            continue;
        }
        Echelon ech(F);
        long total = 0;
        for (int s = 0; s < ng; ++s)
            for (const auto& b : it->second[(size_t)s]) {
                ++total;
                if (!ech.insert(vec_to_sparse(b)))
                    rep.failures.push_back("grading components are linearly dependent");
            }
        if (total != h.dim() || ech.rank() != h.dim())
            rep.failures.push_back("grading components do not decompose a hom space");
    }
    if (!rep.passed()) return rep;
    // identities in degree 1
    for (long x = 0; x < c.n_objects(); ++x) {
        Vec id(c.dim((int)x, (int)x), Rat(0));
        id[(size_t)c.identity_index((int)x)] = 1;
        auto parts = g.graded_parts((int)x, (int)x, id);
        for (int s = 1; s < ng; ++s)
            for (const auto& v : parts[(size_t)s])
                if (v != 0) rep.failures.push_back("identity is not homogeneous of degree one");
    }
    // composition adds degrees
    for (const auto& [kf, hf] : c.homs)
        for (const auto& [kg, hg] : c.homs) {
            if (kg.first != kf.second) continue;
            int z = kf.first, y = kf.second, x = kg.second;
            for (int s = 0; s < ng; ++s)
                for (int t = 0; t < ng; ++t) {
                    int st = g.group.mul(s, t);
                    for (const auto& a : g.component(z, y, s))
                        for (const auto& b : g.component(y, x, t)) {
                            Vec ab = dense_compose(c, z, y, x, a, b);
                            auto parts = g.graded_parts(z, x, ab);
                            for (int u = 0; u < ng; ++u) {
                                if (u == st) continue;
                                for (const auto& v : parts[(size_t)u])
                                    if (v != 0)
                                        rep.failures.push_back(
                                            "composition does not add degrees");
                            }
                        }
                }
        }
    return rep;
}

SmashResult smash_product(const GroupAction& action) {
    const KCategory& c = *action.base;
    const FiniteGroup& G = action.group;
    Field F(c.field);
    int ng = G.order();
    long n = c.n_objects();
    auto d = std::make_shared<KCategory>();
    d->field = c.field;
    d->objects = c.objects;
    SmashResult res;
    // hom_D(x -> y) = sum_s hom_C(s.x -> y), block of degree s
    std::map<std::pair<int, int>, std::vector<long>> offset;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            std::vector<long> offs((size_t)ng, -1);
            Hom h;
            for (int s = 0; s < ng; ++s) {
                const Hom* hc = c.hom(y, action.obj(s, x));
                if (!hc || hc->dim() == 0) continue;
                offs[(size_t)s] = h.dim();
                for (const auto& nm : hc->names) h.names.push_back(nm + "#" + G.names[(size_t)s]);
                if (x == y && s == 0) h.id_index = (int)(offs[0] + hc->id_index);
            }
            if (h.dim() > 0) {
                d->homs[{y, x}] = h;
                offset[{y, x}] = offs;
            }
        }
    // (f, t) o (g, s) = (f o t(g), ts)
    for (int z = 0; z < n; ++z)
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                auto of = offset.find({z, y});
                auto og = offset.find({y, x});
                auto oz = offset.find({z, x});
                if (of == offset.end() || og == offset.end() || oz == offset.end()) continue;
                long dzx = d->dim(z, x);
                for (int t = 0; t < ng; ++t) {
                    if (of->second[(size_t)t] < 0) continue;
                    int ty = action.obj(t, y);
                    long df = c.dim(z, ty);
                    for (int s = 0; s < ng; ++s) {
                        if (og->second[(size_t)s] < 0) continue;
                        int sx = action.obj(s, x);
                        long dg = c.dim(y, sx);
                        int ts = G.mul(t, s);
                        long otz = oz->second[(size_t)ts];
                        for (int fi = 0; fi < df; ++fi)
                            for (int gi = 0; gi < dg; ++gi) {
                                Vec eg(dg, Rat(0));
                                eg[(size_t)gi] = 1;
                                Vec tg = action.apply(t, y, sx, eg);  // hom(ts.x -> t.y)
                                Vec comp(c.dim(z, action.obj(t, sx)), Rat(0));
                                for (long i = 0; i < (long)tg.size(); ++i) {
                                    if (tg[(size_t)i] == 0) continue;
                                    Vec cc = c.compose(z, ty, action.obj(t, sx), fi, (int)i);
                                    for (long e = 0; e < (long)cc.size(); ++e)
                                        comp[(size_t)e] =
                                            F.add(comp[(size_t)e],
                                                  F.mul(tg[(size_t)i], cc[(size_t)e]));
                                }
                                bool nz = false;
                                for (const auto& v : comp)
                                    if (v != 0) nz = true;
                                if (!nz) continue;
                                if (otz < 0)
                                    throw hm_error("internal-error",
                                                   "smash composite misses its block");
                                Vec full(dzx, Rat(0));
                                for (long e = 0; e < (long)comp.size(); ++e)
                                    full[(size_t)(otz + e)] = comp[(size_t)e];
                                d->set_comp(z, y, x, (int)(of->second[(size_t)t] + fi),
                                            (int)(og->second[(size_t)s] + gi), full);
                            }
                    }
                }
            }
    res.cat = d;
    res.offset = offset;
    res.grading.base = d;
    res.grading.group = G;
    for (const auto& [key, offs] : offset) {
        long total = d->dim(key.first, key.second);
        std::vector<std::vector<Vec>> comps((size_t)ng);
        for (int s = 0; s < ng; ++s) {
            if (offs[(size_t)s] < 0) continue;
            long end = total;
            for (int u = s + 1; u < ng; ++u)
                if (offs[(size_t)u] >= 0) {
                    end = offs[(size_t)u];
                    break;
                }
            for (long i = offs[(size_t)s]; i < end; ++i) {
                Vec v(total, Rat(0));
                v[(size_t)i] = 1;
                comps[(size_t)s].push_back(v);
            }
        }
        res.grading.comps[key] = comps;
    }
    return res;
}

KCategory coinvariants(const GradedCategory& g) {
    const KCategory& d = *g.base;
    Field F(d.field);
    long n = d.n_objects();
    KCategory c;
    c.field = d.field;
    c.objects = d.objects;
    // basis of each hom: the degree-1 component basis, with the identity
    // swapped in as an honest basis vector for endo homs
    std::map<std::pair<int, int>, std::vector<Vec>> basis;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            std::vector<Vec> b = g.component(y, x, 0);
            if (b.empty()) continue;
            Hom h;
            int idi = -1;
            if (x == y) {
                Vec id(d.dim(y, x), Rat(0));
                id[(size_t)d.identity_index(x)] = 1;
                std::vector<SparseVec> span;
                for (const auto& v : b) span.push_back(vec_to_sparse(v));
                auto coords = coords_in(span, vec_to_sparse(id), d.dim(y, x), F);
                if (!coords)
                    throw hm_error("bad-params", "identity is not in the degree-one component");
                for (size_t i = 0; i < b.size(); ++i)
                    if ((*coords)[i] != 0) {
                        b[i] = id;
                        idi = (int)i;
                        break;
                    }
            }
            for (size_t i = 0; i < b.size(); ++i)
                h.names.push_back("u" + std::to_string(i) + "[" + c.objects[(size_t)x] + ">" +
                                  c.objects[(size_t)y] + "]");
            h.id_index = idi;
            c.homs[{y, x}] = h;
            basis[{y, x}] = b;
        }
    for (int z = 0; z < n; ++z)
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                auto bf = basis.find({z, y});
                auto bg = basis.find({y, x});
                auto bt = basis.find({z, x});
                if (bf == basis.end() || bg == basis.end()) continue;
                for (size_t f = 0; f < bf->second.size(); ++f)
                    for (size_t gi = 0; gi < bg->second.size(); ++gi) {
                        Vec comp = dense_compose(d, z, y, x, bf->second[f], bg->second[gi]);
                        bool nz = false;
                        for (const auto& v : comp)
                            if (v != 0) nz = true;
                        if (!nz) continue;
                        if (bt == basis.end())
                            throw hm_error("bad-params",
                                           "degree-one composite misses its component");
                        std::vector<SparseVec> span;
                        for (const auto& v : bt->second) span.push_back(vec_to_sparse(v));
                        auto coords = coords_in(span, vec_to_sparse(comp), d.dim(z, x), F);
                        if (!coords)
                            throw hm_error("bad-params",
                                           "degree-one composite misses its component");
                        c.set_comp(z, y, x, (int)f, (int)gi, *coords);
                    }
            }
    return c;
}

namespace {

// span of all degree-s x degree-t products at (z, x) through every middle y
long product_rank(const GradedCategory& g, int z, int x, int s, int t, Echelon& ech) {
    const KCategory& d = *g.base;
    for (long y = 0; y < d.n_objects(); ++y)
        for (const auto& a : g.component(z, (int)y, s))
            for (const auto& b : g.component((int)y, x, t))
                ech.insert(vec_to_sparse(dense_compose(d, z, (int)y, x, a, b)));
    return ech.rank();
}

}  // namespace

StronglyGradedReport strongly_graded_full(const GradedCategory& g) {
    const KCategory& d = *g.base;
    Field F(d.field);
    int ng = g.group.order();
    for (long z = 0; z < d.n_objects(); ++z)
        for (long x = 0; x < d.n_objects(); ++x)
            for (int s = 0; s < ng; ++s)
                for (int t = 0; t < ng; ++t) {
                    Echelon ech(F);
                    long got = product_rank(g, (int)z, (int)x, s, t, ech);
                    long want = g.comp_dim((int)z, (int)x, g.group.mul(s, t));
                    if (got != want)
                        return {false, "degree (" + g.group.names[(size_t)s] + "," +
                                           g.group.names[(size_t)t] + ") products at (" +
                                           d.objects[(size_t)x] + " -> " + d.objects[(size_t)z] +
                                           ") span " + std::to_string(got) + " of " +
                                           std::to_string(want)};
                }
    return {true, ""};
}

StronglyGradedReport strongly_graded_check(const GradedCategory& g) {
    const KCategory& d = *g.base;
    Field F(d.field);
    int ng = g.group.order();
    for (long x = 0; x < d.n_objects(); ++x)
        for (int s = 0; s < ng; ++s) {
            Echelon ech(F);
            long got = product_rank(g, (int)x, (int)x, g.group.inv(s), s, ech);
            long want = g.comp_dim((int)x, (int)x, 0);
            if (got != want)
                return {false, "degree " + g.group.names[(size_t)s] +
                                   " inverse products at object " + d.objects[(size_t)x] +
                                   " span " + std::to_string(got) + " of " +
                                   std::to_string(want)};
        }
    return {true, ""};
}

Vec TensorQuot::project(const SparseVec& v, const Field& f) const {
    Echelon ech(f);
    for (const auto& r : relation_rows) ech.insert(r);
    SparseVec red = ech.reduce(v);
    Vec out((size_t)quot_cols.size(), Rat(0));
    for (const auto& [i, val] : red) {
        auto it = quot_index.find(i);
        if (it == quot_index.end())
            throw hm_error("internal-error", "tensor quotient reduction left a pivot column");
        out[(size_t)it->second] = val;
    }
    return out;
}

namespace {

TensorQuot build_tensor_quot(const GradedCategory& g, int x, int y) {
    const KCategory& d = *g.base;
    Field F(d.field);
    long n = d.n_objects();
    TensorQuot tq;
    tq.slot_offset.assign((size_t)n, -1);
    long off = 0;
    for (int z = 0; z < n; ++z) {
        long blk = d.dim(x, z) * d.dim(z, y);
        if (blk > 0) tq.slot_offset[(size_t)z] = off;
        off += blk;
    }
    tq.ambient = off;
    // relations (m.f) (x) n - m (x) (f.n) for degree-one f
    Echelon ech(F);
    std::vector<SparseVec> rows;
    for (int z = 0; z < n; ++z) {
        if (d.dim(x, z) == 0) continue;
        for (int w = 0; w < n; ++w) {
            if (d.dim(w, y) == 0) continue;
            for (const auto& f : g.component(z, w, 0)) {
                for (int a = 0; a < d.dim(x, z); ++a) {
                    Vec ea(d.dim(x, z), Rat(0));
                    ea[(size_t)a] = 1;
                    Vec mf = dense_compose(d, x, z, w, ea, f);  // in hom(w -> x)
                    for (int b = 0; b < d.dim(w, y); ++b) {
                        std::map<long, Rat> row;
                        if (tq.slot_offset[(size_t)w] >= 0)
                            for (long i = 0; i < (long)mf.size(); ++i)
                                if (mf[(size_t)i] != 0)
                                    row[tq.slot_offset[(size_t)w] + i * d.dim(w, y) + b] =
                                        mf[(size_t)i];
                        Vec eb(d.dim(w, y), Rat(0));
                        eb[(size_t)b] = 1;
                        Vec fn = dense_compose(d, z, w, y, f, eb);  // in hom(y -> z)
                        if (tq.slot_offset[(size_t)z] >= 0)
                            for (long j = 0; j < (long)fn.size(); ++j)
                                if (fn[(size_t)j] != 0) {
                                    long cix =
                                        tq.slot_offset[(size_t)z] + (long)a * d.dim(z, y) + j;
                                    auto& cell = row[cix];
                                    cell = F.sub(cell, fn[(size_t)j]);
                                }
                        SparseVec sv;
                        for (const auto& [i, val] : row)
                            if (val != 0) sv.push_back({i, val});
                        if (!sv.empty() && ech.insert(sv)) rows.push_back(sv);
                    }
                }
            }
        }
    }
    // store mutually reduced rows for stable projection
    for (const auto& [piv, row] : ech.pivot_rows()) {
        (void)piv;
        tq.relation_rows.push_back(row);
    }
    std::set<long> pivots;
    for (const auto& [piv, row] : ech.pivot_rows()) {
        (void)row;
        pivots.insert(piv);
    }
    for (long i = 0; i < tq.ambient; ++i)
        if (!pivots.count(i)) {
            tq.quot_index[i] = (long)tq.quot_cols.size();
            tq.quot_cols.push_back(i);
        }
    return tq;
}

}  // namespace

GaloisCertificate galois_check(const GradedCategory& g) {
    const KCategory& d = *g.base;
    Field F(d.field);
    int ng = g.group.order();
    long n = d.n_objects();
    GaloisCertificate cert;
    // r/l decompositions of every identity in every degree
    for (int x = 0; x < n; ++x) {
        for (int h = 0; h < ng; ++h) {
            int hinv = g.group.inv(h);
            // unknowns: (y, a, b) with a in degree h^-1 comp of hom(y->x),
            // b in degree h comp of hom(x->y)
            struct Unknown {
                int y;
                Vec c, dd;
            };
            std::vector<Unknown> unknowns;
            for (int y = 0; y < n; ++y)
                for (const auto& a : g.component(x, y, hinv))
                    for (const auto& b : g.component(y, x, h)) unknowns.push_back({y, a, b});
            long endo = d.dim(x, x);
            SparseMatrix A(endo, (long)unknowns.size());
            for (size_t u = 0; u < unknowns.size(); ++u) {
                Vec prod = dense_compose(d, x, unknowns[u].y, x, unknowns[u].c, unknowns[u].dd);
                for (long i = 0; i < (long)prod.size(); ++i)
                    if (prod[(size_t)i] != 0) A.add(i, (long)u, prod[(size_t)i], F);
            }
            Vec idvec(endo, Rat(0));
            idvec[(size_t)d.identity_index(x)] = 1;
            auto sol = solve(A, idvec, F);
            if (!sol) {
                cert.galois = false;
                cert.witness = "identity of " + d.objects[(size_t)x] +
                               " has no inverse-pair decomposition in degree " +
                               g.group.names[(size_t)h];
                return cert;
            }
            std::vector<RLPair> pairs;
            for (size_t u = 0; u < unknowns.size(); ++u) {
                if ((*sol)[u] == 0) continue;
                RLPair p;
                p.y = unknowns[u].y;
                p.r = unknowns[u].c;
                for (auto& v : p.r) v = F.mul(v, (*sol)[u]);
                p.l = unknowns[u].dd;
                pairs.push_back(p);
            }
            cert.rl[{x, h}] = pairs;
        }
    }
    // beta and its inverse per object pair
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            long dxy = d.dim(x, y);
            TensorQuot tq = build_tensor_quot(g, x, y);
            long qd = (long)tq.quot_cols.size();
            if (qd != dxy * ng) {
                cert.galois = false;
                cert.witness = "tensor square at (" + d.objects[(size_t)y] + " -> " +
                               d.objects[(size_t)x] + ") has dimension " + std::to_string(qd) +
                               ", expected " + std::to_string(dxy * ng);
                cert.tensors[{x, y}] = std::move(tq);
                return cert;
            }
            // beta on the quotient basis (pure tensors at non-pivot coordinates)
            SparseMatrix B(dxy * ng, qd);
            for (long q = 0; q < qd; ++q) {
                long amb = tq.quot_cols[(size_t)q];
                int z = -1;
                for (int zz = (int)n - 1; zz >= 0; --zz)
                    if (tq.slot_offset[(size_t)zz] >= 0 && tq.slot_offset[(size_t)zz] <= amb &&
                        amb < tq.slot_offset[(size_t)zz] + d.dim(x, zz) * d.dim(zz, y)) {
                        z = zz;
                        break;
                    }
                long loc = amb - tq.slot_offset[(size_t)z];
                long a = loc / d.dim(z, y), b = loc % d.dim(z, y);
                Vec ea(d.dim(x, z), Rat(0));
                ea[(size_t)a] = 1;
                Vec eb(d.dim(z, y), Rat(0));
                eb[(size_t)b] = 1;
                auto parts = g.graded_parts(z, y, eb);
                for (int s = 0; s < ng; ++s) {
                    Vec prod = dense_compose(d, x, z, y, ea, parts[(size_t)s]);
                    for (long j = 0; j < (long)prod.size(); ++j)
                        if (prod[(size_t)j] != 0) B.add((long)s * dxy + j, q, prod[(size_t)j], F);
                }
            }
            // beta' from the r/l decompositions at the source object y
            SparseMatrix Bp(qd, dxy * ng);
            for (int s = 0; s < ng; ++s) {
                const auto& pairs = cert.rl.at({y, s});
                for (long j = 0; j < dxy; ++j) {
                    Vec ef(dxy, Rat(0));
                    ef[(size_t)j] = 1;
                    std::map<long, Rat> acc;
                    for (const auto& p : pairs) {
                        if (tq.slot_offset[(size_t)p.y] < 0)
                            throw hm_error("internal-error", "missing tensor slot");
                        Vec fr = dense_compose(d, x, y, p.y, ef, p.r);  // hom(p.y -> x)
                        for (long i = 0; i < (long)fr.size(); ++i) {
                            if (fr[(size_t)i] == 0) continue;
                            for (long k = 0; k < (long)p.l.size(); ++k) {
                                if (p.l[(size_t)k] == 0) continue;
                                long cix = tq.slot_offset[(size_t)p.y] +
                                           i * d.dim(p.y, y) + k;
                                auto& cell = acc[cix];
                                cell = F.add(cell, F.mul(fr[(size_t)i], p.l[(size_t)k]));
                            }
                        }
                    }
                    SparseVec amb;
                    for (const auto& [i, val] : acc)
                        if (val != 0) amb.push_back({i, val});
                    Vec q = tq.project(amb, F);
                    for (long i = 0; i < qd; ++i)
                        if (q[(size_t)i] != 0) Bp.add(i, (long)s * dxy + j, q[(size_t)i], F);
                }
            }
            SparseMatrix id1 = SparseMatrix::identity(dxy * ng);
            SparseMatrix id2 = SparseMatrix::identity(qd);
            if (!(B.multiply(Bp, F) == id1) || !(Bp.multiply(B, F) == id2)) {
                cert.galois = false;
                cert.witness = "beta is not invertible at (" + d.objects[(size_t)y] + " -> " +
                               d.objects[(size_t)x] + ")";
            }
            cert.tensors[{x, y}] = std::move(tq);
            cert.beta[{x, y}] = std::move(B);
            cert.beta_prime[{x, y}] = std::move(Bp);
            if (!cert.galois) return cert;
        }
    return cert;
}

bool PropertyReport::all_hold() const {
    for (const auto& [name, ok] : properties)
        if (!ok) return false;
    return true;
}

PropertyReport properties_check(const GradedCategory& g, const GaloisCertificate& cert) {
    const KCategory& d = *g.base;
    Field F(d.field);
    int ng = g.group.order();
    long n = d.n_objects();
    PropertyReport rep;
    auto outer = [&](const TensorQuot& tq, int slot, const Vec& left, const Vec& right,
                     std::map<long, Rat>& acc) {
        if (tq.slot_offset[(size_t)slot] < 0) {
            for (const auto& v : left)
                for (const auto& w : right)
                    if (v != 0 && w != 0)
                        throw hm_error("internal-error", "tensor term misses its slot");
            return;
        }
        long cols = (long)right.size();
        for (long i = 0; i < (long)left.size(); ++i) {
            if (left[(size_t)i] == 0) continue;
            for (long k = 0; k < cols; ++k) {
                if (right[(size_t)k] == 0) continue;
                auto& cell = acc[tq.slot_offset[(size_t)slot] + i * cols + k];
                cell = F.add(cell, F.mul(left[(size_t)i], right[(size_t)k]));
            }
        }
    };
    auto finish = [&](std::map<long, Rat>& acc) {
        SparseVec out;
        for (const auto& [i, val] : acc)
            if (val != 0) out.push_back({i, val});
        return out;
    };

    // 1. beta sends sum_i r_i (x) l_i to 1_x (x) h
    bool p1 = true;
    for (int x = 0; x < n && p1; ++x)
        for (int h = 0; h < ng && p1; ++h) {
            const TensorQuot& tq = cert.tensors.at({x, x});
            std::map<long, Rat> acc;
            for (const auto& p : cert.rl.at({x, h})) outer(tq, p.y, p.r, p.l, acc);
            Vec q = tq.project(finish(acc), F);
            const SparseMatrix& B = cert.beta.at({x, x});
            Vec img(B.rows(), Rat(0));
            for (long r = 0; r < B.rows(); ++r)
                for (const auto& [c, v] : B.row(r))
                    img[(size_t)r] = F.add(img[(size_t)r], F.mul(v, q[(size_t)c]));
            Vec want(B.rows(), Rat(0));
            want[(size_t)((long)h * d.dim(x, x) + d.identity_index(x))] = 1;
            if (img != want) p1 = false;
        }
    rep.properties.push_back({"beta-maps-unit-decomposition-to-unit-tensor-group-element", p1});

    // 2. coherence: rl(hk) agrees with the composite decomposition through rl(k), rl(h)
    bool p2 = true;
    for (int x = 0; x < n && p2; ++x)
        for (int h = 0; h < ng && p2; ++h)
            for (int k = 0; k < ng && p2; ++k) {
                int hk = g.group.mul(h, k);
                const TensorQuot& tq = cert.tensors.at({x, x});
                std::map<long, Rat> acc;
                for (const auto& p : cert.rl.at({x, hk})) outer(tq, p.y, p.r, p.l, acc);
                for (const auto& pi : cert.rl.at({x, k}))
                    for (const auto& pj : cert.rl.at({pi.y, h})) {
                        Vec rr = dense_compose(d, x, pi.y, pj.y, pi.r, pj.r);
                        Vec ll = dense_compose(d, pj.y, pi.y, x, pj.l, pi.l);
                        for (auto& v : ll) v = F.neg(v);
                        outer(tq, pj.y, rr, ll, acc);
                    }
                Vec q = tq.project(finish(acc), F);
                for (const auto& v : q)
                    if (v != 0) p2 = false;
            }
    rep.properties.push_back({"unit-decompositions-are-coherent-across-the-group-law", p2});

    // 3. centrality over the coinvariant category: a.rl(h) = rl(h).a in D (x)_C D
    bool p3 = true;
    for (int x = 0; x < n && p3; ++x)
        for (int w = 0; w < n && p3; ++w) {
            if (d.dim(w, x) == 0) continue;
            const TensorQuot& tq = cert.tensors.at({w, x});
            for (const auto& a : g.component(w, x, 0))
                for (int h = 0; h < ng && p3; ++h) {
                    std::map<long, Rat> acc;
                    for (const auto& p : cert.rl.at({x, h})) {
                        Vec ar = dense_compose(d, w, x, p.y, a, p.r);
                        outer(tq, p.y, ar, p.l, acc);
                    }
                    for (const auto& p : cert.rl.at({w, h})) {
                        Vec la = dense_compose(d, p.y, w, x, p.l, a);
                        for (auto& v : la) v = F.neg(v);
                        outer(tq, p.y, p.r, la, acc);
                    }
                    Vec q = tq.project(finish(acc), F);
                    for (const auto& v : q)
                        if (v != 0) p3 = false;
                }
        }
    rep.properties.push_back({"unit-decomposition-is-central-over-degree-one-morphisms", p3});

    // 4. degree purity: the right factors of rl(h) are pure of degree h
    bool p4 = true;
    for (int x = 0; x < n && p4; ++x)
        for (int h = 0; h < ng && p4; ++h)
            for (const auto& p : cert.rl.at({x, h})) {
                auto parts = g.graded_parts(p.y, x, p.l);
                for (int s = 0; s < ng; ++s) {
                    if (s == h) continue;
                    for (const auto& v : parts[(size_t)s])
                        if (v != 0) p4 = false;
                }
                auto rparts = g.graded_parts(x, p.y, p.r);
                for (int s = 0; s < ng; ++s) {
                    if (s == g.group.inv(h)) continue;
                    for (const auto& v : rparts[(size_t)s])
                        if (v != 0) p4 = false;
                }
            }
    rep.properties.push_back({"unit-decomposition-factors-are-homogeneous", p4});

    // 5. comodule compatibility: sum_s f_s.rl(s) recovers f (x) 1
    bool p5 = true;
    for (int x = 0; x < n && p5; ++x)
        for (int y = 0; y < n && p5; ++y) {
            long dxy = d.dim(x, y);
            if (dxy == 0) continue;
            const TensorQuot& tq = cert.tensors.at({x, y});
            for (long j = 0; j < dxy && p5; ++j) {
                Vec ef(dxy, Rat(0));
                ef[(size_t)j] = 1;
                auto parts = g.graded_parts(x, y, ef);
                std::map<long, Rat> acc;
                for (int s = 0; s < ng; ++s) {
                    bool zero = true;
                    for (const auto& v : parts[(size_t)s])
                        if (v != 0) zero = false;
                    if (zero) continue;
                    for (const auto& p : cert.rl.at({y, s})) {
                        Vec fr = dense_compose(d, x, y, p.y, parts[(size_t)s], p.r);
                        outer(tq, p.y, fr, p.l, acc);
                    }
                }
                // subtract 1_x (x) f
                Vec idx(d.dim(x, x), Rat(0));
                idx[(size_t)d.identity_index(x)] = 1;
                Vec nef = ef;
                for (auto& v : nef) v = F.neg(v);
                outer(tq, x, idx, nef, acc);
                Vec q = tq.project(finish(acc), F);
                for (const auto& v : q)
                    if (v != 0) p5 = false;
            }
        }
    rep.properties.push_back({"unit-decomposition-reproduces-the-grading-coaction", p5});

    // 6. counit: sum_i r_i(h) . l_i(h) = 1_x
    bool p6 = true;
    for (int x = 0; x < n && p6; ++x)
        for (int h = 0; h < ng && p6; ++h) {
            Vec acc(d.dim(x, x), Rat(0));
            for (const auto& p : cert.rl.at({x, h})) {
                Vec prod = dense_compose(d, x, p.y, x, p.r, p.l);
                for (long i = 0; i < (long)prod.size(); ++i)
                    acc[(size_t)i] = F.add(acc[(size_t)i], prod[(size_t)i]);
            }
            Vec want(d.dim(x, x), Rat(0));
            want[(size_t)d.identity_index(x)] = 1;
            if (acc != want) p6 = false;
        }
    rep.properties.push_back({"unit-decomposition-composes-to-the-identity", p6});

    // 7. the r/l formula inverts beta on both sides
    bool p7 = true;
    for (int x = 0; x < n && p7; ++x)
        for (int y = 0; y < n && p7; ++y) {
            const SparseMatrix& B = cert.beta.at({x, y});
            const SparseMatrix& Bp = cert.beta_prime.at({x, y});
            if (!(B.multiply(Bp, F) == SparseMatrix::identity(B.rows())) ||
                !(Bp.multiply(B, F) == SparseMatrix::identity(Bp.rows())))
                p7 = false;
        }
    rep.properties.push_back({"inverse-pair-formula-inverts-beta", p7});
    return rep;
}

}  // namespace hm

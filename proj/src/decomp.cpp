#include "hm/decomp.hpp"

#include <algorithm>

namespace hm {

namespace {

SparseVec vec_to_sparse(const Vec& v) {
    SparseVec s;
    for (long i = 0; i < (long)v.size(); ++i)
        if (v[(size_t)i] != 0) s.push_back({i, v[(size_t)i]});
    return s;
}

void axpy(Vec& acc, const Rat& c, const Vec& v, const Field& f) {
    for (long i = 0; i < (long)v.size(); ++i)
        acc[(size_t)i] = f.add(acc[(size_t)i], f.mul(c, v[(size_t)i]));
}

}  // namespace

Vec EquivariantBimodule::apply(int g, int y, int x, const Vec& m) const {
    int gy = action.obj(g, y), gx = action.obj(g, x);
    Vec out((size_t)mod.dim(gy, gx), Rat(0));
    auto it = tau.find({g, y, x});
    if (it == tau.end()) {
        if (mod.dim(y, x) != 0 && mod.dim(gy, gx) != 0)
            throw hm_error("bad-params", "missing equivariant structure map");
        return out;
    }
    Field F(mod.base->field);
    for (long j = 0; j < (long)m.size(); ++j)
        if (m[(size_t)j] != 0) axpy(out, m[(size_t)j], it->second[(size_t)j], F);
    return out;
}

ValidationReport validate_equivariant(const EquivariantBimodule& m) {
    ValidationReport rep;
    const KCategory& c = *m.mod.base;
    Field F(c.field);
    int ng = m.action.group.order();
    long n = c.n_objects();
    for (const auto& [key, names] : m.mod.spaces) {
        auto [y, x] = key;
        long d = (long)names.size();
        for (int g = 0; g < ng; ++g) {
            auto it = m.tau.find({g, y, x});
            if (it == m.tau.end() || (long)it->second.size() != d) {
                rep.failures.push_back("equivariant structure map missing or mis-sized");
                continue;
            }
            for (const auto& col : it->second)
                if ((long)col.size() != m.mod.dim(m.action.obj(g, y), m.action.obj(g, x)))
                    rep.failures.push_back("equivariant structure map has wrong target");
        }
    }
    if (!rep.passed()) return rep;
    for (const auto& [key, names] : m.mod.spaces) {
        auto [y, x] = key;
        for (long j = 0; j < (long)names.size(); ++j) {
            Vec e((size_t)names.size(), Rat(0));
            e[(size_t)j] = 1;
            if (m.apply(0, y, x, e) != e)
                rep.failures.push_back("unit structure map is not the identity");
            for (int g = 0; g < ng; ++g) {
                Vec ge = m.apply(g, y, x, e);
                int gy = m.action.obj(g, y), gx = m.action.obj(g, x);
                for (int h = 0; h < ng; ++h)
                    if (m.apply(h, gy, gx, ge) != m.apply(m.action.group.mul(h, g), y, x, e))
                        rep.failures.push_back("structure maps are not a group action");
                // compatibility with the left and right actions
                for (int y2 = 0; y2 < n && g < ng; ++y2) {
                    long df = c.dim(y2, y);
                    for (int f = 0; f < df; ++f) {
                        Vec ef((size_t)df, Rat(0));
                        ef[(size_t)f] = 1;
                        Vec lhs = m.apply(g, y2, x, m.mod.act_left(y2, y, x, f, e));
                        Vec gf = m.action.apply(g, y2, y, ef);
                        Vec rhs((size_t)m.mod.dim(m.action.obj(g, y2), gx), Rat(0));
                        for (long i = 0; i < (long)gf.size(); ++i)
                            if (gf[(size_t)i] != 0)
                                axpy(rhs, gf[(size_t)i],
                                     m.mod.act_left(m.action.obj(g, y2), gy, gx, (int)i, ge), F);
                        if (lhs != rhs)
                            rep.failures.push_back(
                                "structure maps do not intertwine the left action");
                    }
                }
                for (int x2 = 0; x2 < n && g < ng; ++x2) {
                    long df = c.dim(x, x2);
                    for (int f = 0; f < df; ++f) {
                        Vec ef((size_t)df, Rat(0));
                        ef[(size_t)f] = 1;
                        Vec lhs = m.apply(g, y, x2, m.mod.act_right(y, x, x2, e, f));
                        Vec gf = m.action.apply(g, x, x2, ef);
                        int gx2 = m.action.obj(g, x2);
                        Vec rhs((size_t)m.mod.dim(gy, gx2), Rat(0));
                        for (long i = 0; i < (long)gf.size(); ++i)
                            if (gf[(size_t)i] != 0)
                                axpy(rhs, gf[(size_t)i],
                                     m.mod.act_right(gy, gx, gx2, ge, (int)i), F);
                        if (lhs != rhs)
                            rep.failures.push_back(
                                "structure maps do not intertwine the right action");
                    }
                }
            }
        }
    }
    return rep;
}

EquivariantBimodule regular_equivariant(const GroupAction& a) {
    EquivariantBimodule m;
    m.mod = regular_bimodule(a.base);
    m.action = a;
    int ng = a.group.order();
    for (const auto& [key, names] : m.mod.spaces) {
        auto [y, x] = key;
        for (int g = 0; g < ng; ++g) {
            std::vector<Vec> cols;
            for (long j = 0; j < (long)names.size(); ++j) {
                Vec e((size_t)names.size(), Rat(0));
                e[(size_t)j] = 1;
                cols.push_back(a.apply(g, y, x, e));
            }
            m.tau[{g, y, x}] = cols;
        }
    }
    return m;
}

GroupAction restrict_action(const GroupAction& a, const SubgroupResult& z) {
    GroupAction r;
    r.base = a.base;
    r.group = z.group;
    for (int i = 0; i < z.group.order(); ++i) {
        r.obj_perm.push_back(a.obj_perm[(size_t)z.elem_map[(size_t)i]]);
        r.hom_maps.push_back(a.hom_maps[(size_t)z.elem_map[(size_t)i]]);
    }
    return r;
}

int SmashBimodule::block_of(int y, int x, long index) const {
    const auto& offs = offset.at({y, x});
    int best = -1;
    for (int s = 0; s < (int)offs.size(); ++s)
        if (offs[(size_t)s] >= 0 && offs[(size_t)s] <= index) best = s;
    if (best < 0) throw hm_error("internal-error", "coordinate outside every block");
    return best;
}

namespace {

// generic block-sum bimodule over the base: blocks M(y, s.x) for s in elems,
// with the adjoint structure over the acting group of m
SmashBimodule block_sum(const EquivariantBimodule& m, const std::vector<int>& elems) {
    const KCategory& c = *m.mod.base;
    const GroupAction& a = m.action;
    const FiniteGroup& G = a.group;
    Field F(c.field);
    long n = c.n_objects();
    int nb = (int)elems.size();
    std::map<int, int> pos;  // group element -> block position
    for (int i = 0; i < nb; ++i) pos[elems[(size_t)i]] = i;

    SmashBimodule sb;
    sb.total.action = a;
    Bimodule& b = sb.total.mod;
    b.base = m.mod.base;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            std::vector<long> offs((size_t)G.order(), -1);
            std::vector<std::string> names;
            for (int i = 0; i < nb; ++i) {
                int s = elems[(size_t)i];
                int sx = a.obj(s, x);
                auto it = m.mod.spaces.find({y, sx});
                if (it == m.mod.spaces.end() || it->second.empty()) continue;
                offs[(size_t)s] = (long)names.size();
                for (const auto& nm : it->second)
                    names.push_back(nm + "#" + G.names[(size_t)s]);
            }
            if (!names.empty()) {
                b.spaces[{y, x}] = names;
                sb.offset[{y, x}] = offs;
            }
        }
    auto bdim = [&](int y, int x) { return b.dim(y, x); };
    // left action: f.(m, s) = (f.m, s)
    for (int y2 = 0; y2 < n; ++y2)
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                long df = c.dim(y2, y), dm = bdim(y, x), dt = bdim(y2, x);
                if (!df || !dm || !dt) continue;
                auto& tab = b.left[{y2, y, x}];
                tab.assign((size_t)df, std::vector<Vec>((size_t)dm, Vec((size_t)dt, Rat(0))));
                const auto& offs = sb.offset.at({y, x});
                const auto& toffs = sb.offset.at({y2, x});
                for (int s : elems) {
                    if (offs[(size_t)s] < 0 || toffs[(size_t)s] < 0) continue;
                    int sx = a.obj(s, x);
                    long dloc = m.mod.dim(y, sx);
                    for (int f = 0; f < df; ++f)
                        for (long j = 0; j < dloc; ++j) {
                            Vec e((size_t)dloc, Rat(0));
                            e[(size_t)j] = 1;
                            Vec fm = m.mod.act_left(y2, y, sx, f, e);
                            for (long i = 0; i < (long)fm.size(); ++i)
                                tab[(size_t)f][(size_t)(offs[(size_t)s] + j)]
                                   [(size_t)(toffs[(size_t)s] + i)] = fm[(size_t)i];
                        }
                }
            }
    // right action: (m, s).f = (m.s(f), s)
    for (int y = 0; y < n; ++y)
        for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2) {
                long df = c.dim(x1, x2), dm = bdim(y, x1), dt = bdim(y, x2);
                if (!df || !dm || !dt) continue;
                auto& tab = b.right[{y, x1, x2}];
                tab.assign((size_t)dm, std::vector<Vec>((size_t)df, Vec((size_t)dt, Rat(0))));
                const auto& offs = sb.offset.at({y, x1});
                const auto& toffs = sb.offset.at({y, x2});
                for (int s : elems) {
                    if (offs[(size_t)s] < 0 || toffs[(size_t)s] < 0) continue;
                    int sx1 = a.obj(s, x1), sx2 = a.obj(s, x2);
                    long dloc = m.mod.dim(y, sx1);
                    for (int f = 0; f < df; ++f) {
                        Vec ef((size_t)df, Rat(0));
                        ef[(size_t)f] = 1;
                        Vec sf = a.apply(s, x1, x2, ef);  // hom(s.x2 -> s.x1)
                        for (long j = 0; j < dloc; ++j) {
                            Vec e((size_t)dloc, Rat(0));
                            e[(size_t)j] = 1;
                            Vec acc((size_t)m.mod.dim(y, sx2), Rat(0));
                            for (long k = 0; k < (long)sf.size(); ++k)
                                if (sf[(size_t)k] != 0)
                                    axpy(acc, sf[(size_t)k],
                                         m.mod.act_right(y, sx1, sx2, e, (int)k), F);
                            for (long i = 0; i < (long)acc.size(); ++i)
                                tab[(size_t)(offs[(size_t)s] + j)][(size_t)f]
                                   [(size_t)(toffs[(size_t)s] + i)] = acc[(size_t)i];
                        }
                    }
                }
            }
    // adjoint structure: t sends block s at (y,x) into block tst^-1 at (ty,tx)
    // via tau_t; only elements whose conjugation stabilizes the block set
    // carry structure maps (all of G for unions of conjugacy classes)
    for (int t = 0; t < G.order(); ++t) {
        bool stabilizes = true;
        for (int s : elems)
            if (!pos.count(G.conj(t, s))) stabilizes = false;
        if (!stabilizes) continue;
        for (const auto& [key, names] : b.spaces) {
            auto [y, x] = key;
            int ty = a.obj(t, y), tx = a.obj(t, x);
            long dt = bdim(ty, tx);
            std::vector<Vec> cols((size_t)names.size(), Vec((size_t)dt, Rat(0)));
            const auto& offs = sb.offset.at({y, x});
            const auto& toffs = sb.offset.at({ty, tx});
            for (int s : elems) {
                if (offs[(size_t)s] < 0) continue;
                int u = G.conj(t, s);
                if (!pos.count(u))
                    throw hm_error("internal-error", "adjoint action leaves the block set");
                int sx = a.obj(s, x);
                long dloc = m.mod.dim(y, sx);
                for (long j = 0; j < dloc; ++j) {
                    Vec e((size_t)dloc, Rat(0));
                    e[(size_t)j] = 1;
                    Vec im = m.apply(t, y, sx, e);  // in M(ty, t.s.x) = block u
                    if (toffs[(size_t)u] < 0 && !im.empty()) {
                        for (const auto& v : im)
                            if (v != 0)
                                throw hm_error("internal-error",
                                               "adjoint image misses its block");
                        continue;
                    }
                    for (long i = 0; i < (long)im.size(); ++i)
                        cols[(size_t)(offs[(size_t)s] + j)][(size_t)(toffs[(size_t)u] + i)] =
                            im[(size_t)i];
                }
            }
            sb.total.tau[{t, y, x}] = cols;
        }
    }
    return sb;
}

}  // namespace

SmashBimodule smash_bimodule(const EquivariantBimodule& m) {
    std::vector<int> all;
    for (int s = 0; s < m.action.group.order(); ++s) all.push_back(s);
    return block_sum(m, all);
}

Bimodule smash_dbimodule(const EquivariantBimodule& m, const SmashResult& sp) {
    const KCategory& c = *m.mod.base;
    const KCategory& d = *sp.cat;
    const GroupAction& a = m.action;
    const FiniteGroup& G = a.group;
    Field F(c.field);
    long n = c.n_objects();
    SmashBimodule sb = smash_bimodule(m);
    Bimodule out;
    out.base = sp.cat;
    out.spaces = sb.total.mod.spaces;
    // left action by hom_D(y -> y2): (f, t).(m, s) = (f . tau_t(m), ts)
    for (int y2 = 0; y2 < n; ++y2)
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                long df = d.dim(y2, y), dm = out.dim(y, x), dt = out.dim(y2, x);
                if (!df || !dm || !dt) continue;
                auto& tab = out.left[{y2, y, x}];
                tab.assign((size_t)df, std::vector<Vec>((size_t)dm, Vec((size_t)dt, Rat(0))));
                const auto& foffs = sp.offset.at({y2, y});
                const auto& offs = sb.offset.at({y, x});
                const auto& toffs = sb.offset.at({y2, x});
                for (int t = 0; t < G.order(); ++t) {
                    if (foffs[(size_t)t] < 0) continue;
                    int ty = a.obj(t, y);
                    long dfl = c.dim(y2, ty);
                    for (int s = 0; s < G.order(); ++s) {
                        if (offs[(size_t)s] < 0) continue;
                        int ts = G.mul(t, s);
                        if (toffs[(size_t)ts] < 0) continue;
                        int sx = a.obj(s, x);
                        long dloc = m.mod.dim(y, sx);
                        for (int f = 0; f < dfl; ++f)
                            for (long j = 0; j < dloc; ++j) {
                                Vec e((size_t)dloc, Rat(0));
                                e[(size_t)j] = 1;
                                Vec tm = m.apply(t, y, sx, e);  // M(ty, tsx)
                                Vec fm = Vec((size_t)m.mod.dim(y2, a.obj(t, sx)), Rat(0));
                                for (long i = 0; i < (long)tm.size(); ++i)
                                    if (tm[(size_t)i] != 0) {
                                        Vec ei((size_t)tm.size(), Rat(0));
                                        ei[(size_t)i] = 1;
                                        axpy(fm, tm[(size_t)i],
                                             m.mod.act_left(y2, ty, a.obj(t, sx), f, ei), F);
                                    }
                                for (long i = 0; i < (long)fm.size(); ++i)
                                    tab[(size_t)(foffs[(size_t)t] + f)]
                                       [(size_t)(offs[(size_t)s] + j)]
                                       [(size_t)(toffs[(size_t)ts] + i)] = fm[(size_t)i];
                            }
                    }
                }
            }
    // right action by hom_D(x2 -> x1): (m, s).(g, u) = (m . s(g), su)
    for (int y = 0; y < n; ++y)
        for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2) {
                long df = d.dim(x1, x2), dm = out.dim(y, x1), dt = out.dim(y, x2);
                if (!df || !dm || !dt) continue;
                auto& tab = out.right[{y, x1, x2}];
                tab.assign((size_t)dm, std::vector<Vec>((size_t)df, Vec((size_t)dt, Rat(0))));
                const auto& goffs = sp.offset.at({x1, x2});
                const auto& offs = sb.offset.at({y, x1});
                const auto& toffs = sb.offset.at({y, x2});
                for (int u = 0; u < G.order(); ++u) {
                    if (goffs[(size_t)u] < 0) continue;
                    int ux2 = a.obj(u, x2);
                    long dgl = c.dim(x1, ux2);
                    for (int s = 0; s < G.order(); ++s) {
                        if (offs[(size_t)s] < 0) continue;
                        int su = G.mul(s, u);
                        if (toffs[(size_t)su] < 0) continue;
                        int sx1 = a.obj(s, x1);
                        long dloc = m.mod.dim(y, sx1);
                        for (int gi = 0; gi < dgl; ++gi) {
                            Vec eg((size_t)dgl, Rat(0));
                            eg[(size_t)gi] = 1;
                            // s(g): hom(s.u.x2 -> s.x1)
                            Vec sg = a.apply(s, x1, ux2, eg);
                            for (long j = 0; j < dloc; ++j) {
                                Vec e((size_t)dloc, Rat(0));
                                e[(size_t)j] = 1;
                                Vec acc((size_t)m.mod.dim(y, a.obj(s, ux2)), Rat(0));
                                for (long k = 0; k < (long)sg.size(); ++k)
                                    if (sg[(size_t)k] != 0)
                                        axpy(acc, sg[(size_t)k],
                                             m.mod.act_right(y, sx1, a.obj(s, ux2), e, (int)k),
                                             F);
                                for (long i = 0; i < (long)acc.size(); ++i)
                                    tab[(size_t)(offs[(size_t)s] + j)]
                                       [(size_t)(goffs[(size_t)u] + gi)]
                                       [(size_t)(toffs[(size_t)su] + i)] = acc[(size_t)i];
                            }
                        }
                    }
                }
            }
    return out;
}

Bimodule g_component(const EquivariantBimodule& m, int g) {
    if (g < 0 || g >= m.action.group.order()) throw hm_error("unknown-element", "no such group element");
    return block_sum(m, {g}).total.mod;
}

EquivariantBimodule g_component_equivariant(const EquivariantBimodule& m, int g) {
    if (g < 0 || g >= m.action.group.order()) throw hm_error("unknown-element", "no such group element");
    const FiniteGroup& G = m.action.group;
    SubgroupResult z = subgroup(G, G.centralizers[(size_t)g]);
    SmashBimodule sb = block_sum(m, {g});
    EquivariantBimodule out;
    out.mod = sb.total.mod;
    out.action = restrict_action(m.action, z);
    for (int i = 0; i < z.group.order(); ++i) {
        int t = z.elem_map[(size_t)i];
        for (const auto& [key, names] : out.mod.spaces) {
            auto [y, x] = key;
            out.tau[{i, y, x}] = sb.total.tau.at({t, y, x});
        }
    }
    return out;
}

EquivariantBimodule class_component(const EquivariantBimodule& m, int cls) {
    const FiniteGroup& G = m.action.group;
    if (cls < 0 || cls >= (int)G.conj_classes.size())
        throw hm_error("unknown-element", "no such conjugacy class");
    return block_sum(m, G.conj_classes[(size_t)cls]).total;
}

namespace {

// image of a cochain under conjugation by g, as a dense vector of C^q
Vec conj_cochain(const Complex& cx, const EquivariantBimodule& em, int q, int g,
                 const Vec& f) {
    const KCategory& c = *cx.cat;
    Field F(c.field);
    const GroupAction& a = em.action;
    int ginv = a.group.inv(g);
    Vec out((size_t)cx.dim(q), Rat(0));
    for (const auto& [key, off] : cx.basis[(size_t)q].offset) {
        std::vector<int> objs(key.begin(), key.begin() + q + 1);
        std::vector<int> morphs(key.begin() + q + 1, key.end());
        std::vector<int> gobjs;
        for (int o : objs) gobjs.push_back(a.obj(ginv, o));
        // expand the product of g^-1 images of the tuple morphisms
        std::vector<std::pair<std::vector<int>, Rat>> states = {{{}, Rat(1)}};
        for (int i = 0; i < q; ++i) {
            Vec e((size_t)c.dim(objs[(size_t)i], objs[(size_t)i + 1]), Rat(0));
            e[(size_t)morphs[(size_t)i]] = 1;
            Vec w = a.apply(ginv, objs[(size_t)i], objs[(size_t)i + 1], e);
            std::vector<std::pair<std::vector<int>, Rat>> next;
            for (const auto& [ds, cf] : states)
                for (long dd = 0; dd < (long)w.size(); ++dd) {
                    if (w[(size_t)dd] == 0) continue;
                    auto ds2 = ds;
                    ds2.push_back((int)dd);
                    next.push_back({ds2, F.mul(cf, w[(size_t)dd])});
                }
            states = std::move(next);
        }
        long mdim_out = em.mod.dim(objs[0], objs[(size_t)q]);
        for (const auto& [ds, cf] : states) {
            std::vector<int> inkey = gobjs;
            inkey.insert(inkey.end(), ds.begin(), ds.end());
            auto it = cx.basis[(size_t)q].offset.find(inkey);
            if (it == cx.basis[(size_t)q].offset.end()) continue;
            long mdim_in = em.mod.dim(gobjs[0], gobjs[(size_t)q]);
            for (long j = 0; j < mdim_in; ++j) {
                const Rat& fv = f[(size_t)(it->second + j)];
                if (fv == 0) continue;
                Vec e((size_t)mdim_in, Rat(0));
                e[(size_t)j] = 1;
                Vec tv = em.apply(g, gobjs[0], gobjs[(size_t)q], e);
                if ((long)tv.size() != mdim_out)
                    throw hm_error("internal-error", "conjugation lands in the wrong space");
                for (long i = 0; i < mdim_out; ++i)
                    if (tv[(size_t)i] != 0)
                        out[(size_t)(off + i)] =
                            F.add(out[(size_t)(off + i)], F.mul(F.mul(cf, fv), tv[(size_t)i]));
            }
        }
    }
    return out;
}

}  // namespace

GModule cohomology_gmodule(const EquivariantBimodule& m, int q, long budget) {
    Field F(m.mod.base->field);
    Complex cx = build_cochain_complex(m.mod.base, m.mod, q, /*normalized=*/false, budget);
    HomologyResult h = homology_dims(cx, /*with_reps=*/true);
    const auto& reps = h.reps[(size_t)q];
    const auto& imgs = h.images[(size_t)q];
    std::vector<SparseVec> span = reps;
    span.insert(span.end(), imgs.begin(), imgs.end());
    GModule out;
    out.field = m.mod.base->field;
    out.group = m.action.group;
    out.dim = (long)reps.size();
    out.act.assign((size_t)out.group.order(), {});
    for (int g = 0; g < out.group.order(); ++g) {
        for (const auto& r : reps) {
            Vec dense = to_dense(r, cx.dim(q));
            Vec img = conj_cochain(cx, m, q, g, dense);
            auto coords = coords_in(span, to_sparse(img, F), cx.dim(q), F);
            if (!coords)
                throw hm_error("internal-error", "conjugation does not preserve cocycles");
            Vec col((size_t)out.dim, Rat(0));
            for (long i = 0; i < out.dim; ++i) col[(size_t)i] = (*coords)[(size_t)i];
            out.act[(size_t)g].push_back(col);
        }
    }
    return out;
}

GModule h0_action(const SmashBimodule& sb, const SmashResult& sp, const Bimodule& dmod,
                  const GaloisCertificate& cert) {
    const KCategory& c = *sb.total.mod.base;
    Field F(c.field);
    const FiniteGroup& G = sb.total.action.group;
    long n = c.n_objects();
    Complex cx = build_cochain_complex(sb.total.mod.base, sb.total.mod, 0, false);
    HomologyResult h = homology_dims(cx, true);
    const auto& reps = h.reps[0];
    GModule out;
    out.field = c.field;
    out.group = G;
    out.dim = (long)reps.size();
    out.right_module = true;
    out.act.assign((size_t)G.order(), {});
    for (int hh = 0; hh < G.order(); ++hh) {
        for (const auto& r : reps) {
            Vec dense = to_dense(r, cx.dim(0));
            Vec img((size_t)cx.dim(0), Rat(0));
            for (int y = 0; y < n; ++y) {
                long dy = dmod.dim(y, y);
                if (!dy) continue;
                long offy = cx.basis[0].offset.at({y});
                Vec acc((size_t)dy, Rat(0));
                for (const auto& p : cert.rl.at({y, hh})) {
                    long dyi = dmod.dim(p.y, p.y);
                    if (!dyi) continue;
                    long offyi = cx.basis[0].offset.at({p.y});
                    Vec myi(dense.begin() + offyi, dense.begin() + offyi + dyi);
                    // m . l : N(p.y, p.y) x hom_D(y -> p.y) -> N(p.y, y)
                    Vec ml((size_t)dmod.dim(p.y, y), Rat(0));
                    for (long k = 0; k < (long)p.l.size(); ++k)
                        if (p.l[(size_t)k] != 0)
                            axpy(ml, p.l[(size_t)k], dmod.act_right(p.y, p.y, y, myi, (int)k),
                                 F);
                    // r . (m . l) : hom_D(p.y -> y) x N(p.y, y) -> N(y, y)
                    for (long j = 0; j < (long)p.r.size(); ++j)
                        if (p.r[(size_t)j] != 0)
                            axpy(acc, p.r[(size_t)j], dmod.act_left(y, p.y, y, (int)j, ml), F);
                }
                for (long i = 0; i < dy; ++i) img[(size_t)(offy + i)] = acc[(size_t)i];
            }
            auto coords = coords_in(reps, to_sparse(img, F), cx.dim(0), F);
            if (!coords)
                throw hm_error("not-invariant",
                               "inverse-pair action left the invariant families");
            out.act[(size_t)hh].push_back(*coords);
        }
    }
    return out;
}

bool CheckReport::passed() const {
    for (const auto& r : rows)
        if (!r.ok) return false;
    return true;
}

namespace {

CheckReport three_columns(const EquivariantBimodule& m, int nmax, long budget, bool cochain) {
    const FiniteGroup& G = m.action.group;
    auto dims_of = [&](const Bimodule& b) {
        return cochain ? cohomology_dims(m.mod.base, b, nmax, true, budget)
                       : homology_dims(m.mod.base, b, nmax, true, budget);
    };
    SmashBimodule sb = smash_bimodule(m);
    auto total = dims_of(sb.total.mod);
    std::vector<long> by_class((size_t)nmax + 1, 0), by_centralizer((size_t)nmax + 1, 0);
    for (int cls = 0; cls < (int)G.conj_classes.size(); ++cls) {
        auto cc = class_component(m, cls);
        auto d1 = dims_of(cc.mod);
        int g = G.conj_classes[(size_t)cls][0];
        long index = (long)G.order() / (long)G.centralizers[(size_t)g].size();
        auto d2 = dims_of(g_component(m, g));
        for (int q = 0; q <= nmax; ++q) {
            by_class[(size_t)q] += d1[(size_t)q];
            by_centralizer[(size_t)q] += index * d2[(size_t)q];
        }
    }
    CheckReport rep;
    for (int q = 0; q <= nmax; ++q) {
        CheckRow row;
        row.degree = q;
        row.values = {total[(size_t)q], by_class[(size_t)q], by_centralizer[(size_t)q]};
        row.ok = total[(size_t)q] == by_class[(size_t)q] &&
                 total[(size_t)q] == by_centralizer[(size_t)q];
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace

CheckReport decomposition_check(const EquivariantBimodule& m, int nmax, long budget) {
    return three_columns(m, nmax, budget, true);
}

CheckReport homology_decomposition_check(const EquivariantBimodule& m, int nmax, long budget) {
    return three_columns(m, nmax, budget, false);
}

E2Page e2_page(const EquivariantBimodule& m, int pmax, int qmax, long budget) {
    E2Page page;
    page.pmax = pmax;
    page.qmax = qmax;
    page.dims.assign((size_t)pmax + 1, std::vector<long>((size_t)qmax + 1, 0));
    for (int q = 0; q <= qmax; ++q) {
        GModule v = cohomology_gmodule(m, q, budget);
        auto hp = group_cohomology(v, pmax);
        for (int p = 0; p <= pmax; ++p) page.dims[(size_t)p][(size_t)q] = hp[(size_t)p];
    }
    return page;
}

namespace {

std::vector<long> smash_side_dims(const EquivariantBimodule& m, int nmax, long budget) {
    SmashResult sp = smash_product(m.action);
    Bimodule dmod = smash_dbimodule(m, sp);
    return cohomology_dims(sp.cat, dmod, nmax, true, budget);
}

}  // namespace

CheckReport collapse_check(const EquivariantBimodule& m, int nmax, long budget) {
    long p = m.mod.base->field.characteristic;
    if (p != 0 && m.action.group.order() % p == 0)
        throw hm_error("char-divides-order",
                       "the field characteristic divides the group order; use the E2 bound");
    auto lhs = smash_side_dims(m, nmax, budget);
    SmashBimodule sb = smash_bimodule(m);
    CheckReport rep;
    for (int n = 0; n <= nmax; ++n) {
        long inv = invariants_dim(cohomology_gmodule(sb.total, n, budget));
        CheckRow row;
        row.degree = n;
        row.values = {lhs[(size_t)n], inv};
        row.ok = lhs[(size_t)n] == inv;
        rep.rows.push_back(row);
    }
    return rep;
}

CheckReport bound_check(const EquivariantBimodule& m, int nmax, long budget) {
    auto lhs = smash_side_dims(m, nmax, budget);
    SmashBimodule sb = smash_bimodule(m);
    E2Page page = e2_page(sb.total, nmax, nmax, budget);
    CheckReport rep;
    for (int n = 0; n <= nmax; ++n) {
        long bound = 0;
        for (int p = 0; p <= n; ++p) bound += page.dims[(size_t)p][(size_t)(n - p)];
        CheckRow row;
        row.degree = n;
        row.values = {lhs[(size_t)n], bound};
        row.ok = lhs[(size_t)n] <= bound;
        rep.rows.push_back(row);
    }
    return rep;
}

PhiReport phi_check(const EquivariantBimodule& m, int g, long budget) {
    const FiniteGroup& G = m.action.group;
    Field F(m.mod.base->field);
    if (g < 0 || g >= G.order()) throw hm_error("unknown-element", "no such group element");
    int cls = G.class_of(g);
    SmashBimodule bc = block_sum(m, G.conj_classes[(size_t)cls]);  // M_[g] with offsets
    EquivariantBimodule mg = g_component_equivariant(m, g);        // M.g over Z(g)
    SubgroupResult z = subgroup(G, G.centralizers[(size_t)g]);
    std::vector<int> cosets = G.coset_reps(g);
    long n = m.mod.base->n_objects();

    Complex cxd = build_cochain_complex(m.mod.base, bc.total.mod, 0, false, budget);
    auto hd = homology_dims(cxd, true);
    const auto& repsD = hd.reps[0];
    Complex cxv = build_cochain_complex(m.mod.base, mg.mod, 0, false, budget);
    auto hv = homology_dims(cxv, true);
    const auto& repsV = hv.reps[0];

    long dimD = (long)repsD.size(), dimV = (long)repsV.size();
    long nj = (long)cosets.size();
    PhiReport rep;
    rep.domain_dim = dimD;
    rep.codomain_dim = nj * dimV;

    // phi(m)(s_j) at object x = block-g part of tau_{s_j}(m at s_j^-1 x)
    std::vector<Vec> phi;  // columns, length nj * dimV
    for (const auto& r : repsD) {
        Vec dense = to_dense(r, cxd.dim(0));
        Vec col((size_t)(nj * dimV), Rat(0));
        for (long j = 0; j < nj; ++j) {
            int sj = cosets[(size_t)j];
            Vec w((size_t)cxv.dim(0), Rat(0));
            for (int x = 0; x < n; ++x) {
                long dgx = mg.mod.dim(x, x);  // dim M(x, gx)
                if (!dgx) continue;
                int px = m.action.obj(G.inv(sj), x);
                long dbx = bc.total.mod.dim(px, px);
                if (!dbx) continue;
                long offb = cxd.basis[0].offset.at({px});
                Vec fam(dense.begin() + offb, dense.begin() + offb + dbx);
                Vec a = bc.total.apply(sj, px, px, fam);  // in B_[g](x, x)
                const auto& offs = bc.offset.at({x, x});
                if (offs[(size_t)g] < 0) continue;
                long offv = cxv.basis[0].offset.at({x});
                for (long i = 0; i < dgx; ++i) w[(size_t)(offv + i)] = a[(size_t)(offs[(size_t)g] + i)];
            }
            auto coords = coords_in(repsV, to_sparse(w, F), cxv.dim(0), F);
            if (!coords)
                throw hm_error("internal-error", "phi image is not an invariant family");
            for (long i = 0; i < dimV; ++i) col[(size_t)(j * dimV + i)] = (*coords)[(size_t)i];
        }
        phi.push_back(col);
    }

    Echelon ech(F);
    for (const auto& col : phi) ech.insert(vec_to_sparse(col));
    rep.bijective = (dimD == nj * dimV) && ech.rank() == dimD;

    // left G-action on the domain and Z(g)-action on V by family transport
    auto transported = [&](const Complex& cx, const EquivariantBimodule& em,
                           const std::vector<SparseVec>& reps, int h) {
        std::vector<Vec> cols;
        for (const auto& r : reps) {
            Vec img = conj_cochain(cx, em, 0, h, to_dense(r, cx.dim(0)));
            auto coords = coords_in(reps, to_sparse(img, F), cx.dim(0), F);
            if (!coords)
                throw hm_error("internal-error", "transport left the invariant families");
            cols.push_back(*coords);
        }
        return cols;
    };
    GModule vmod;
    vmod.field = m.mod.base->field;
    vmod.group = z.group;
    vmod.dim = dimV;
    for (int zi = 0; zi < z.group.order(); ++zi)
        vmod.act.push_back(transported(cxv, mg, repsV, zi));
    GModule coind = coinduced_module(vmod, z.elem_map, G);

    bool linear = true;
    for (int h = 0; h < G.order() && linear; ++h) {
        auto lh = transported(cxd, bc.total, repsD, h);
        for (long k = 0; k < dimD && linear; ++k) {
            Vec lhs((size_t)(nj * dimV), Rat(0));
            for (long i = 0; i < dimD; ++i)
                if (lh[(size_t)k][(size_t)i] != 0) axpy(lhs, lh[(size_t)k][(size_t)i], phi[(size_t)i], F);
            Vec rhs = coind.apply(h, phi[(size_t)k]);
            if (lhs != rhs) linear = false;
        }
    }
    rep.kg_linear = linear;
    return rep;
}

}  // namespace hm

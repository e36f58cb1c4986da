#include "hm/group.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hm {

int FiniteGroup::elem_index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return (int)i;
    throw hm_error("unknown-element", "no group element named '" + name + "'");
}

int FiniteGroup::class_of(int g) const {
    for (size_t i = 0; i < conj_classes.size(); ++i)
        for (int h : conj_classes[i])
            if (h == g) return (int)i;
    throw hm_error("unknown-element", "element out of range");
}

std::vector<int> FiniteGroup::coset_reps(int g) const {
    const auto& z = centralizers[(size_t)g];
    std::set<int> zset(z.begin(), z.end());
    std::vector<int> reps;
    std::vector<bool> covered((size_t)order(), false);
    for (int s = 0; s < order(); ++s) {
        if (covered[(size_t)s]) continue;
        reps.push_back(s);
        for (int zz : z) covered[(size_t)mul(zz, s)] = true;
    }
    return reps;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    std::vector<std::vector<int>> table) {
    FiniteGroup g;
    g.names = std::move(names);
    g.table = std::move(table);
    int n = g.order();
    if ((int)g.table.size() != n)
        throw hm_error("bad-params", "group table has wrong number of rows");
    for (const auto& row : g.table) {
        if ((int)row.size() != n)
            throw hm_error("bad-params", "group table has wrong number of columns");
        for (int v : row)
            if (v < 0 || v >= n) throw hm_error("bad-params", "group table entry out of range");
    }
    std::set<std::string> seen(g.names.begin(), g.names.end());
    if ((int)seen.size() != n) throw hm_error("bad-params", "duplicate group element names");
    // unit, associativity, inverses
    for (int a = 0; a < n; ++a)
        if (g.mul(0, a) != a || g.mul(a, 0) != a)
            throw hm_error("bad-params", "element 0 is not a two-sided unit");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw hm_error("bad-params", "group table is not associative");
    g.inverse.assign((size_t)n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0) g.inverse[(size_t)a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inverse[(size_t)a] < 0 || g.mul(g.inverse[(size_t)a], a) != 0)
            throw hm_error("bad-params", "group table lacks inverses");
    // conjugacy classes and centralizers
    std::vector<bool> done((size_t)n, false);
    for (int a = 0; a < n; ++a) {
        if (done[(size_t)a]) continue;
        std::set<int> cls;
        for (int s = 0; s < n; ++s) cls.insert(g.conj(s, a));
        std::vector<int> cv(cls.begin(), cls.end());
        for (int e : cv) done[(size_t)e] = true;
        g.conj_classes.push_back(cv);
    }
    std::sort(g.conj_classes.begin(), g.conj_classes.end());
    for (int a = 0; a < n; ++a) {
        std::vector<int> z;
        for (int s = 0; s < n; ++s)
            if (g.mul(s, a) == g.mul(a, s)) z.push_back(s);
        g.centralizers.push_back(z);
    }
    return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table({"1"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw hm_error("bad-params", "cyclic group order must be >= 1");
    std::vector<std::string> names;
    std::vector<std::vector<int>> table((size_t)n, std::vector<int>((size_t)n));
    for (int i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1" : "g" + std::to_string(i));
        for (int j = 0; j < n; ++j) table[(size_t)i][(size_t)j] = (i + j) % n;
    }
    return from_table(names, table);
}

FiniteGroup FiniteGroup::symmetric3() {
    // permutations of {0,1,2} in one-line notation
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                             {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::string> names = {"e", "s01", "s12", "s02", "c120", "c201"};
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> ab;
            for (int i = 0; i < 3; ++i) ab[(size_t)i] = perms[(size_t)a][(size_t)perms[(size_t)b][(size_t)i]];
            for (int c = 0; c < 6; ++c)
                if (perms[(size_t)c] == ab) table[(size_t)a][(size_t)b] = c;
        }
    return from_table(names, table);
}

SubgroupResult subgroup(const FiniteGroup& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements[0] != 0)
        throw hm_error("bad-params", "subgroup must contain the unit");
    std::map<int, int> back;
    for (size_t i = 0; i < elements.size(); ++i) back[elements[i]] = (int)i;
    int n = (int)elements.size();
    std::vector<std::string> names;
    std::vector<std::vector<int>> table((size_t)n, std::vector<int>((size_t)n));
    for (int i = 0; i < n; ++i) names.push_back(g.names[(size_t)elements[(size_t)i]]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int p = g.mul(elements[(size_t)i], elements[(size_t)j]);
            auto it = back.find(p);
            if (it == back.end())
                throw hm_error("bad-params", "subgroup element list is not closed");
            table[(size_t)i][(size_t)j] = it->second;
        }
    return {FiniteGroup::from_table(names, table), elements};
}

Vec GroupAction::apply(int g, int y, int x, const Vec& v) const {
    Field F(base->field);
    int gy = obj(g, y), gx = obj(g, x);
    Vec out(base->dim(gy, gx), Rat(0));
    auto it = hom_maps[(size_t)g].find({y, x});
    if (it == hom_maps[(size_t)g].end()) {
        if (!v.empty()) throw hm_error("internal-error", "missing action hom matrix");
        return out;
    }
    for (long i = 0; i < (long)v.size(); ++i) {
        if (v[(size_t)i] == 0) continue;
        const Vec& col = it->second[(size_t)i];
        for (long j = 0; j < (long)col.size(); ++j)
            out[(size_t)j] = F.add(out[(size_t)j], F.mul(v[(size_t)i], col[(size_t)j]));
    }
    return out;
}

ValidationReport validate_action(const GroupAction& a) {
    ValidationReport rep;
    const KCategory& c = *a.base;
    Field F(c.field);
    long n = c.n_objects();
    int ng = a.group.order();
    if ((int)a.obj_perm.size() != ng || (int)a.hom_maps.size() != ng) {
        rep.failures.push_back("action tables missing for some group elements");
        return rep;
    }
    // unit acts as identity
    for (int x = 0; x < n; ++x)
        if (a.obj(0, x) != x) rep.failures.push_back("unit permutes objects");
    for (const auto& [key, h] : c.homs) {
        auto [y, x] = key;
        for (int i = 0; i < h.dim(); ++i) {
            Vec e(h.dim(), Rat(0));
            e[(size_t)i] = 1;
            if (a.apply(0, y, x, e) != e)
                rep.failures.push_back("unit does not act as identity on homs");
        }
    }
    for (int g = 0; g < ng; ++g) {
        // object map is a permutation
        std::vector<bool> hit((size_t)n, false);
        for (int x = 0; x < n; ++x) {
            int gx = a.obj(g, x);
            if (gx < 0 || gx >= n || hit[(size_t)gx]) {
                rep.failures.push_back("object map of '" + a.group.names[(size_t)g] +
                                       "' is not a permutation");
                break;
            }
            hit[(size_t)gx] = true;
        }
        // hom maps: dimensions match, identities preserved, composition preserved
        for (const auto& [key, h] : c.homs) {
            auto [y, x] = key;
            int gy = a.obj(g, y), gx = a.obj(g, x);
            if (c.dim(gy, gx) != h.dim()) {
                rep.failures.push_back("hom dimension changes under '" +
                                       a.group.names[(size_t)g] + "'");
                continue;
            }
            if (x == y) {
                Vec e(h.dim(), Rat(0));
                e[(size_t)h.id_index] = 1;
                Vec img = a.apply(g, y, x, e);
                Vec unit(c.dim(gy, gx), Rat(0));
                unit[(size_t)c.identity_index(gx)] = 1;
                if (img != unit)
                    rep.failures.push_back("identity not preserved under '" +
                                           a.group.names[(size_t)g] + "'");
            }
        }
        // g(f.h) = g(f).g(h)
        for (const auto& [kf, hf] : c.homs) {
            auto [z, y] = kf;
            for (const auto& [kg, hg] : c.homs) {
                if (kg.first != y) continue;
                int x = kg.second;
                for (int f = 0; f < hf.dim(); ++f)
                    for (int h2 = 0; h2 < hg.dim(); ++h2) {
                        Vec comp = c.compose(z, y, x, f, h2);
                        Vec lhs = a.apply(g, z, x, comp);
                        Vec ef(hf.dim(), Rat(0));
                        ef[(size_t)f] = 1;
                        Vec eh(hg.dim(), Rat(0));
                        eh[(size_t)h2] = 1;
                        Vec gf = a.apply(g, z, y, ef), gh = a.apply(g, y, x, eh);
                        int gz = a.obj(g, z), gy = a.obj(g, y), gx = a.obj(g, x);
                        Vec rhs(c.dim(gz, gx), Rat(0));
                        for (long i = 0; i < (long)gf.size(); ++i) {
                            if (gf[(size_t)i] == 0) continue;
                            for (long j = 0; j < (long)gh.size(); ++j) {
                                if (gh[(size_t)j] == 0) continue;
                                Vec cc = c.compose(gz, gy, gx, (int)i, (int)j);
                                Rat coef = F.mul(gf[(size_t)i], gh[(size_t)j]);
                                for (long e = 0; e < (long)cc.size(); ++e)
                                    rhs[(size_t)e] =
                                        F.add(rhs[(size_t)e], F.mul(coef, cc[(size_t)e]));
                            }
                        }
                        if (lhs != rhs)
                            rep.failures.push_back("functoriality fails under '" +
                                                   a.group.names[(size_t)g] + "'");
                    }
            }
        }
    }
    // group law: (gh).v = g.(h.v) on every hom
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) {
            int gh = a.group.mul(g, h);
            for (const auto& [key, hom] : c.homs) {
                auto [y, x] = key;
                for (int i = 0; i < hom.dim(); ++i) {
                    Vec e(hom.dim(), Rat(0));
                    e[(size_t)i] = 1;
                    Vec lhs = a.apply(gh, y, x, e);
                    Vec rhs = a.apply(g, a.obj(h, y), a.obj(h, x), a.apply(h, y, x, e));
                    if (lhs != rhs) {
                        rep.failures.push_back("action is not a group homomorphism at '" +
                                               a.group.names[(size_t)g] + "','" +
                                               a.group.names[(size_t)h] + "'");
                    }
                }
            }
        }
    return rep;
}

GroupAction permutation_action_any(std::shared_ptr<const KCategory> c, FiniteGroup g,
                                   const std::vector<std::vector<int>>& obj_perm);

GroupAction trivial_action(std::shared_ptr<const KCategory> c, FiniteGroup g) {
    std::vector<std::vector<int>> perm;
    for (int i = 0; i < g.order(); ++i) {
        std::vector<int> id;
        for (long x = 0; x < c->n_objects(); ++x) id.push_back((int)x);
        perm.push_back(id);
    }
    return permutation_action_any(c, std::move(g), perm);
}

// shared helper: hom matrices are identity matrices w.r.t. basis order
GroupAction permutation_action_any(std::shared_ptr<const KCategory> c, FiniteGroup g,
                                   const std::vector<std::vector<int>>& obj_perm) {
    GroupAction a;
    a.base = c;
    a.group = std::move(g);
    a.obj_perm = obj_perm;
    for (int e = 0; e < a.group.order(); ++e) {
        std::map<std::pair<int, int>, std::vector<Vec>> maps;
        for (const auto& [key, h] : c->homs) {
            auto [y, x] = key;
            int gy = a.obj(e, y), gx = a.obj(e, x);
            if (c->dim(gy, gx) != h.dim())
                throw hm_error("bad-params",
                               "object permutation does not preserve hom dimensions");
            std::vector<Vec> cols;
            for (int i = 0; i < h.dim(); ++i) {
                Vec v(h.dim(), Rat(0));
                v[(size_t)i] = 1;
                cols.push_back(v);
            }
            maps[key] = cols;
        }
        a.hom_maps.push_back(std::move(maps));
    }
    return a;
}

GroupAction permutation_action(std::shared_ptr<const KCategory> c, FiniteGroup g,
                               const std::vector<std::vector<int>>& obj_perm) {
    for (const auto& [key, h] : c->homs)
        if (h.dim() > 1)
            throw hm_error("bad-params",
                           "permutation action requires hom spaces of dimension <= 1");
    return permutation_action_any(c, std::move(g), obj_perm);
}

Vec GModule::apply(int g, const Vec& v) const {
    Field F(field);
    Vec out((size_t)dim, Rat(0));
    for (long i = 0; i < (long)v.size(); ++i) {
        if (v[(size_t)i] == 0) continue;
        const Vec& col = act[(size_t)g][(size_t)i];
        for (long j = 0; j < dim; ++j)
            out[(size_t)j] = F.add(out[(size_t)j], F.mul(v[(size_t)i], col[(size_t)j]));
    }
    return out;
}

ValidationReport validate_gmodule(const GModule& m) {
    ValidationReport rep;
    Field F(m.field);
    int n = m.group.order();
    if ((int)m.act.size() != n) {
        rep.failures.push_back("module lacks action matrices");
        return rep;
    }
    for (int g = 0; g < n; ++g)
        if ((long)m.act[(size_t)g].size() != m.dim)
            rep.failures.push_back("action matrix has wrong size");
    if (!rep.passed()) return rep;
    for (long j = 0; j < m.dim; ++j) {
        Vec e((size_t)m.dim, Rat(0));
        e[(size_t)j] = 1;
        if (m.apply(0, e) != e) rep.failures.push_back("unit does not act as identity");
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                int gh = m.right_module ? m.group.mul(h, g) : m.group.mul(g, h);
                if (m.apply(gh, e) != m.apply(g, m.apply(h, e)))
                    rep.failures.push_back("module action is not a group homomorphism");
            }
    }
    return rep;
}

GModule trivial_gmodule(FieldSpec f, FiniteGroup g, long dim) {
    GModule m;
    m.field = f;
    m.group = std::move(g);
    m.dim = dim;
    for (int e = 0; e < m.group.order(); ++e) {
        std::vector<Vec> id;
        for (long j = 0; j < dim; ++j) {
            Vec v((size_t)dim, Rat(0));
            v[(size_t)j] = 1;
            id.push_back(v);
        }
        m.act.push_back(id);
    }
    return m;
}

GModule right_to_left(const GModule& r) {
    GModule m = r;
    for (int g = 0; g < m.group.order(); ++g) m.act[(size_t)g] = r.act[(size_t)r.group.inv(g)];
    m.right_module = false;
    return m;
}

std::vector<long> group_cohomology(const GModule& v, int pmax) {
    Field F(v.field);
    int n = v.group.order();
    // C^p = maps G^p -> V; dimension |G|^p * dim V. Standard differential:
    // (df)(g1..g_{p+1}) = g1.f(g2..) + sum (-1)^i f(..g_i g_{i+1}..) + (-1)^{p+1} f(g1..gp)
    auto cdim = [&](int p) {
        long d = v.dim;
        for (int i = 0; i < p; ++i) d *= n;
        return d;
    };
    // tuple offsets: index = ((g1*n + g2)*n + ...)*dimV + module index
    std::vector<SparseMatrix> diff;
    for (int p = 0; p <= pmax; ++p) {
        SparseMatrix D(cdim(p + 1), cdim(p));
        long ntup = 1;
        for (int i = 0; i < p + 1; ++i) ntup *= n;
        for (long t = 0; t < ntup; ++t) {
            std::vector<int> g((size_t)p + 1);
            long tt = t;
            for (int i = p; i >= 0; --i) {
                g[(size_t)i] = (int)(tt % n);
                tt /= n;
            }
            long row_off = t * v.dim;
            // term 0
            {
                long col = 0;
                for (int i = 1; i <= p; ++i) col = col * n + g[(size_t)i];
                col *= v.dim;
                for (long mi = 0; mi < v.dim; ++mi) {
                    Vec e((size_t)v.dim, Rat(0));
                    e[(size_t)mi] = 1;
                    Vec img = v.apply(g[0], e);
                    for (long j = 0; j < v.dim; ++j)
                        if (img[(size_t)j] != 0) D.add(row_off + j, col + mi, img[(size_t)j], F);
                }
            }
            // inner terms
            for (int i = 1; i <= p; ++i) {
                Rat sign((i % 2) ? -1 : 1);
                long col = 0;
                for (int j = 0; j <= p; ++j) {
                    if (j == i) continue;
                    int gj = (j == i - 1) ? v.group.mul(g[(size_t)i - 1], g[(size_t)i])
                                          : g[(size_t)j];
                    col = col * n + gj;
                }
                col *= v.dim;
                for (long mi = 0; mi < v.dim; ++mi) D.add(row_off + mi, col + mi, sign, F);
            }
            // last term
            {
                Rat sign(((p + 1) % 2) ? -1 : 1);
                long col = 0;
                for (int i = 0; i < p; ++i) col = col * n + g[(size_t)i];
                col *= v.dim;
                for (long mi = 0; mi < v.dim; ++mi) D.add(row_off + mi, col + mi, sign, F);
            }
        }
        diff.push_back(std::move(D));
    }
    std::vector<long> ranks;
    for (const auto& d : diff) ranks.push_back(rank(d, F));
    std::vector<long> dims;
    for (int p = 0; p <= pmax; ++p)
        dims.push_back(cdim(p) - ranks[(size_t)p] - (p > 0 ? ranks[(size_t)p - 1] : 0));
    return dims;
}

GModule coinduced_module(const GModule& v, const std::vector<int>& z_elements,
                         const FiniteGroup& g) {
    // representatives s_i of Z\G; a function f is the tuple (f(s_1)..f(s_r));
    // (h.f)(s_i) = f(s_i h) = z.f(s_j) where s_i h = z s_j
    std::set<int> zset(z_elements.begin(), z_elements.end());
    std::vector<int> reps;
    std::vector<int> rep_of((size_t)g.order(), -1);
    std::vector<bool> covered((size_t)g.order(), false);
    for (int s = 0; s < g.order(); ++s) {
        if (covered[(size_t)s]) continue;
        int r = (int)reps.size();
        reps.push_back(s);
        for (int z : z_elements) {
            covered[(size_t)g.mul(z, s)] = true;
            rep_of[(size_t)g.mul(z, s)] = r;
        }
    }
    std::map<int, int> zidx;
    for (size_t i = 0; i < z_elements.size(); ++i) zidx[z_elements[i]] = (int)i;
    GModule m;
    m.field = v.field;
    m.group = g;
    m.dim = (long)reps.size() * v.dim;
    Field F(v.field);
    for (int h = 0; h < g.order(); ++h) {
        std::vector<Vec> cols((size_t)m.dim);
        for (size_t i = 0; i < reps.size(); ++i) {
            int sh = g.mul(reps[i], h);
            int j = rep_of[(size_t)sh];
            int z = g.mul(sh, g.inv(reps[(size_t)j]));  // sh = z * s_j
            auto it = zidx.find(z);
            if (it == zidx.end()) throw hm_error("internal-error", "coset decomposition failed");
            // block i of the result reads block j of the argument through z
            for (long mj = 0; mj < v.dim; ++mj) {
                Vec e((size_t)v.dim, Rat(0));
                e[(size_t)mj] = 1;
                Vec img = v.apply(it->second, e);
                Vec& col = cols[(size_t)j * (size_t)v.dim + (size_t)mj];
                if (col.empty()) col.assign((size_t)m.dim, Rat(0));
                for (long k = 0; k < v.dim; ++k)
                    col[i * (size_t)v.dim + (size_t)k] =
                        F.add(col[i * (size_t)v.dim + (size_t)k], img[(size_t)k]);
            }
        }
        for (auto& col : cols)
            if (col.empty()) col.assign((size_t)m.dim, Rat(0));
        m.act.push_back(std::move(cols));
    }
    return m;
}

long invariants_dim(const GModule& v) {
    Field F(v.field);
    int n = v.group.order();
    SparseMatrix A((long)n * v.dim, v.dim);
    for (int g = 0; g < n; ++g)
        for (long j = 0; j < v.dim; ++j) {
            Vec e((size_t)v.dim, Rat(0));
            e[(size_t)j] = 1;
            Vec img = v.apply(g, e);
            img[(size_t)j] = F.sub(img[(size_t)j], Rat(1));
            for (long i = 0; i < v.dim; ++i)
                if (img[(size_t)i] != 0) A.add((long)g * v.dim + i, j, img[(size_t)i], F);
        }
    return (long)kernel_basis(A, F).basis.size();
}

}  // namespace hm

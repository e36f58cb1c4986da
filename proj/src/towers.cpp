#include "hm/towers.hpp"

#include <algorithm>
#include <set>

namespace hm {

ValidationReport validate_family(const FilteredFamily& fam) {
    ValidationReport rep;
    if (!fam.full) {
        rep.failures.push_back("no ambient category");
        return rep;
    }
    if (fam.stages.size() < 2) rep.failures.push_back("fewer than two stages");
    std::set<std::string> prev;
    for (const auto& stage : fam.stages) {
        std::set<std::string> cur(stage.begin(), stage.end());
        if (cur.size() != stage.size()) rep.failures.push_back("stage has duplicate objects");
        for (const auto& name : stage)
            if (std::find(fam.full->objects.begin(), fam.full->objects.end(), name) ==
                fam.full->objects.end())
                rep.failures.push_back("stage object missing from the ambient category");
        if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()))
            rep.failures.push_back("stages are not nested");
        else if (cur.size() <= prev.size() && !prev.empty())
            rep.failures.push_back("stage does not strictly grow");
        prev = std::move(cur);
    }
    return rep;
}

FilteredFamily family_from_corpus(Family f, const CorpusParams& p, FieldSpec field) {
    CorpusResult res = corpus_generate(f, p, field);
    FilteredFamily fam;
    fam.full = std::make_shared<KCategory>(std::move(res.cat));
    fam.stages = res.filtration;
    fam.family = family_name(f);
    return fam;
}

namespace {

struct Stage {
    std::shared_ptr<KCategory> cat;
    Bimodule mod;
    Complex cx;
    HomologyResult h;
};

}  // namespace

Tower build_hh_tower(const FilteredFamily& fam, int nmax, int stages, long budget) {
    if (stages < 2) throw hm_error("bad-params", "a tower needs at least two stages");
    int ns = std::min<int>(stages, (int)fam.stages.size());
    if (ns < 2) throw hm_error("bad-params", "the family provides fewer than two stages");
    Field F(fam.full->field);
    std::vector<Stage> st((size_t)ns);
    for (int i = 0; i < ns; ++i) {
        auto [sub, incl] = full_subcategory(*fam.full, fam.stages[(size_t)i]);
        st[(size_t)i].cat = std::make_shared<KCategory>(std::move(sub));
        st[(size_t)i].mod = regular_bimodule(st[(size_t)i].cat);
        st[(size_t)i].cx = build_cochain_complex(st[(size_t)i].cat, st[(size_t)i].mod, nmax,
                                                 /*normalized=*/true, budget);
        st[(size_t)i].h = homology_dims(st[(size_t)i].cx, /*with_reps=*/true);
    }
    Tower t;
    t.nmax = nmax;
    t.field = fam.full->field;
    for (int i = 0; i < ns; ++i) t.dims.push_back(st[(size_t)i].h.dims);
    // restriction maps: stage i+1 representatives pulled back to stage i
    for (int i = 0; i + 1 < ns; ++i) {
        const Stage& small = st[(size_t)i];
        const Stage& big = st[(size_t)i + 1];
        std::vector<int> omap;  // small object index -> big object index
        for (const auto& name : small.cat->objects) omap.push_back(big.cat->obj_index(name));
        std::vector<std::vector<Vec>> per_degree;
        for (int n = 0; n <= nmax; ++n) {
            std::vector<Vec> cols;
            std::vector<SparseVec> span = small.h.reps[(size_t)n];
            span.insert(span.end(), small.h.images[(size_t)n].begin(),
                        small.h.images[(size_t)n].end());
            for (const auto& rep : big.h.reps[(size_t)n]) {
                Vec dense = to_dense(rep, big.cx.dim(n));
                // restrict: read the value at each small tuple through the
                // inclusion (hom bases of full subcategories coincide)
                Vec v((size_t)small.cx.dim(n), Rat(0));
                for (const auto& [key, off] : small.cx.basis[(size_t)n].offset) {
                    std::vector<int> bigkey = key;
                    for (int j = 0; j <= n; ++j)
                        bigkey[(size_t)j] = omap[(size_t)key[(size_t)j]];
                    auto it = big.cx.basis[(size_t)n].offset.find(bigkey);
                    if (it == big.cx.basis[(size_t)n].offset.end())
                        throw hm_error("internal-error",
                                       "restricted tuple is missing upstairs");
                    long mdim = small.mod.dim(key[0], key[(size_t)n]);
                    for (long m = 0; m < mdim; ++m)
                        v[(size_t)(off + m)] = dense[(size_t)(it->second + m)];
                }
                // the restriction of a cocycle must be a cocycle
                SparseVec sv = to_sparse(v, F);
                const SparseMatrix& d = small.cx.diff[(size_t)n];
                for (long r = 0; r < d.rows(); ++r) {
                    Rat acc(0);
                    for (const auto& [cc, val] : d.row(r))
                        acc = F.add(acc, F.mul(val, v[(size_t)cc]));
                    if (acc != 0)
                        throw hm_error("internal-error",
                                       "restriction of a cocycle is not a cocycle");
                }
                auto coords = coords_in(span, sv, small.cx.dim(n), F);
                if (!coords)
                    throw hm_error("internal-error",
                                   "restricted cocycle escapes the cohomology basis");
                Vec col((size_t)small.h.dims[(size_t)n], Rat(0));
                for (long j = 0; j < small.h.dims[(size_t)n]; ++j)
                    col[(size_t)j] = (*coords)[(size_t)j];
                cols.push_back(col);
            }
            per_degree.push_back(cols);
        }
        t.trans.push_back(per_degree);
    }
    return t;
}

namespace {

// columns of the composed transition H^n(stage j) -> H^n(stage i), j >= i
std::vector<Vec> composed(const Tower& t, int n, int i, int j, const Field& F) {
    // fold from the top: start with the stage-j basis, apply trans[j-1], ... trans[i]
    std::vector<Vec> cur;
    for (long c = 0; c < t.dims[(size_t)j][(size_t)n]; ++c) {
        Vec e((size_t)t.dims[(size_t)j][(size_t)n], Rat(0));
        e[(size_t)c] = 1;
        cur.push_back(e);
    }
    for (int k = j - 1; k >= i; --k) {
        const auto& m = t.trans[(size_t)k][(size_t)n];
        std::vector<Vec> next;
        for (const auto& v : cur) {
            Vec w((size_t)t.dims[(size_t)k][(size_t)n], Rat(0));
            for (long c = 0; c < (long)v.size(); ++c)
                if (v[(size_t)c] != 0)
                    for (long r = 0; r < (long)w.size(); ++r)
                        w[(size_t)r] =
                            F.add(w[(size_t)r], F.mul(v[(size_t)c], m[(size_t)c][(size_t)r]));
            next.push_back(w);
        }
        cur = std::move(next);
    }
    return cur;
}

long rank_of(const std::vector<Vec>& cols, const Field& F) {
    Echelon ech(F);
    for (const auto& c : cols) ech.insert(to_sparse(c, F));
    return ech.rank();
}

}  // namespace

bool MLReport::all_stabilized() const {
    for (const auto& s : stages)
        if (!s.stabilized) return false;
    return true;
}

MLReport ml_check(const Tower& t, int n) {
    Field F(t.field);
    MLReport rep;
    int ns = (int)t.dims.size();
    for (int i = 0; i < ns; ++i) {
        MLStage s;
        s.stage = i;
        for (int j = i; j < ns; ++j)
            s.image_dims.push_back(rank_of(composed(t, n, i, j, F), F));
        // first index from which the (nonincreasing) image dims stay constant
        int k = (int)s.image_dims.size() - 1;
        while (k > 0 && s.image_dims[(size_t)k - 1] == s.image_dims.back()) --k;
        s.stable_at = i + k;
        // certified when the constant tail was confirmed at least once, or
        // when it bottoms out at zero (images cannot shrink further)
        s.stabilized = (int)s.image_dims.size() - k >= 2 || s.image_dims.size() == 1 ||
                       s.image_dims.back() == 0;
        rep.stages.push_back(s);
    }
    return rep;
}

LimReport truncated_lim_and_lim1(const Tower& t, int n, int trailing) {
    Field F(t.field);
    int ns = (int)t.dims.size();
    LimReport rep;
    // stable image dimension into the first stage
    std::vector<long> into_first;
    for (int j = 0; j < ns; ++j) into_first.push_back(rank_of(composed(t, n, 0, j, F), F));
    rep.lim = into_first.back();
    rep.certified = trailing >= 2 && ns >= trailing;
    for (int j = ns - trailing; rep.certified && j < ns; ++j)
        if (into_first[(size_t)(j < 0 ? 0 : j)] != rep.lim) rep.certified = false;
    // lim^1 as the literal cokernel of the shift-difference map on the window
    long dom = 0, cod = 0;
    std::vector<long> off((size_t)ns, 0);
    for (int i = 0; i < ns; ++i) {
        off[(size_t)i] = (i == 0) ? 0 : off[(size_t)i - 1] + t.dims[(size_t)i - 1][(size_t)n];
        dom += t.dims[(size_t)i][(size_t)n];
        if (i + 1 < ns) cod += t.dims[(size_t)i][(size_t)n];
    }
    SparseMatrix d(cod, dom);
    for (int i = 0; i + 1 < ns; ++i) {
        for (long c = 0; c < t.dims[(size_t)i][(size_t)n]; ++c)
            d.add(off[(size_t)i] + c, off[(size_t)i] + c, Rat(1), F);
        const auto& m = t.trans[(size_t)i][(size_t)n];
        for (long c = 0; c < t.dims[(size_t)i + 1][(size_t)n]; ++c)
            for (long r = 0; r < t.dims[(size_t)i][(size_t)n]; ++r)
                if (m[(size_t)c][(size_t)r] != 0)
                    d.add(off[(size_t)i] + r, off[(size_t)i + 1] + c,
                          F.neg(m[(size_t)c][(size_t)r]), F);
    }
    rep.lim1 = cod - rank(d, F);
    return rep;
}

SesReport ses_report(const FilteredFamily& fam, int nmax, int stages, long budget,
                     int trailing) {
    SesReport rep;
    rep.tower = build_hh_tower(fam, nmax, stages, budget);
    std::vector<LimReport> lims;
    for (int q = 0; q <= nmax; ++q)
        lims.push_back(truncated_lim_and_lim1(rep.tower, q, trailing));
    for (int q = 0; q <= nmax; ++q) {
        SesRow row;
        row.degree = q;
        row.lim = lims[(size_t)q].lim;
        row.lim1_prev = q > 0 ? lims[(size_t)q - 1].lim1 : 0;
        row.inferred = row.lim + row.lim1_prev;
        row.certified =
            lims[(size_t)q].certified && (q == 0 || lims[(size_t)q - 1].certified);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace hm

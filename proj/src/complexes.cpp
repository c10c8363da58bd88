#include "gersten/complexes.hpp"

#include <algorithm>

namespace gersten {

/* ------------------------------- CohBasis ------------------------------- */

std::optional<Vec> CohBasis::express(const Vec& cocycle) const {
    if ((int)cocycle.size() != comp_dim) throw internal_error("express: wrong length");
    Vec r = image.reduce(cocycle);
    Vec lambda = zero_vec(field, reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const Scalar& c = r[rep_pivots[i]];
        if (c.is_zero()) continue;
        lambda[i] = c;
        for (int j = 0; j < comp_dim; ++j)
            if (!reps[i][j].is_zero()) r[j] = r[j] - c * reps[i][j];
    }
    if (!is_zero_vec(r)) return std::nullopt;
    return lambda;
}

/* ----------------------------- ComplexWindow ---------------------------- */

void ComplexWindow::build_basis(int p, int q) {
    ComponentBasis b;
    int arity = p + arity_offset();
    if (h_->kind() == OperadHandle::Kind::Generic) {
        const FiniteOperad& op = h_->op();
        if (arity > op.max_arity())
            throw math_error("window arity exceeds the operad's carried range");
        const GradedSpace& sp = op.space(arity);
        for (int i = 0; i < sp.dim(); ++i) {
            if (sp.degree(i) != q) continue;
            if (kind_ == CxKind::IdealCx) {
                const auto& sel = ideal_->selector[arity];
                if (std::find(sel.begin(), sel.end(), i) == sel.end()) continue;
            }
            b.gen.push_back(i);
        }
    } else {
        KeyFilter filt = kind_ == CxKind::BimoduleCx ? KeyFilter::Ideal : KeyFilter::All;
        b.keys = enumerate_keys(*h_, arity, q, filt);
    }
    auto& ki = key_index_[{p, q}];
    for (int i = 0; i < (int)b.keys.size(); ++i) ki[b.keys[i]] = i;
    auto& gi = gen_index_[{p, q}];
    for (int i = 0; i < (int)b.gen.size(); ++i) gi[b.gen[i]] = i;
    bases_[{p, q}] = std::move(b);
}

ComplexWindow ComplexWindow::assemble(CxKind kind, HandlePtr h, const Multiplication& m2,
                                      DegreeWindow win, std::optional<OperadIdeal> ideal) {
    ComplexWindow cx;
    cx.kind_ = kind;
    cx.shifted_ = kind == CxKind::IdealCx || kind == CxKind::BimoduleCx;
    cx.h_ = std::move(h);
    cx.m2_ = m2;
    cx.ideal_ = std::move(ideal);
    cx.win_ = win;
    if (m2.m2.handle() != cx.h_) throw math_error("multiplication over a different handle");
    switch (kind) {
    case CxKind::HochschildCx:
        if (cx.h_->kind() != OperadHandle::Kind::Endo)
            throw input_error("Hochschild complex needs an Endo handle");
        break;
    case CxKind::BimoduleCx:
    case CxKind::BimoduleHochschildCx:
        if (cx.h_->kind() != OperadHandle::Kind::LinEndo)
            throw input_error("bimodule complexes need a LinEndo handle");
        break;
    case CxKind::OperadCx:
        if (cx.h_->kind() != OperadHandle::Kind::Generic)
            throw input_error("operad complex needs a generic handle");
        break;
    case CxKind::IdealCx:
        if (cx.h_->kind() != OperadHandle::Kind::Generic || !cx.ideal_)
            throw input_error("ideal complex needs a generic handle and an ideal");
        break;
    }

    for (int p = win.p_min; p <= win.p_max; ++p)
        for (int q = win.q_min; q <= win.q_max; ++q) cx.build_basis(p, q);

    for (int p = win.p_min; p < win.p_max; ++p)
        for (int q = win.q_min; q <= win.q_max; ++q) {
            const ComponentBasis& src = cx.bases_.at({p, q});
            SparseMatrix d((int)cx.bases_.at({p + 1, q}).dim(), src.dim(), cx.h_->field());
            for (int j = 0; j < src.dim(); ++j) {
                Cochain e = j < (int)src.keys.size()
                                ? elementary_cochain(cx.h_, p + cx.arity_offset(), q, src.keys[j])
                                : elementary_generic(cx.h_, p + cx.arity_offset(), q,
                                                     src.gen[j - src.keys.size()]);
                Vec col = cx.coords(cx.apply_d(e), p + 1, q);
                for (int i = 0; i < (int)col.size(); ++i)
                    if (!col[i].is_zero()) d.set(i, j, col[i]);
            }
            cx.diff_[{p, q}] = std::move(d);
        }

    /* d o d = 0 on the assembled matrices */
    for (int p = win.p_min; p + 1 < win.p_max; ++p)
        for (int q = win.q_min; q <= win.q_max; ++q)
            if (!cx.diff_.at({p + 1, q}).mul(cx.diff_.at({p, q})).is_zero())
                throw internal_error("assembled differential does not square to zero");
    return cx;
}

const ComponentBasis& ComplexWindow::basis(int p, int q) const {
    auto it = bases_.find({p, q});
    if (it == bases_.end()) throw math_error("bidegree outside the assembled window");
    return it->second;
}

bool ComplexWindow::has_diff(int p, int q) const { return diff_.count({p, q}) > 0; }

const SparseMatrix& ComplexWindow::diff(int p, int q) const {
    auto it = diff_.find({p, q});
    if (it == diff_.end()) throw math_error("differential outside the assembled window");
    return it->second;
}

bool ComplexWindow::interior(int p, int q) const {
    if (!win_.contains(p, q) || p + 1 > win_.p_max) return false;
    return p > win_.p_min || win_.p_min == 0;
}

std::optional<long> ComplexWindow::cohomology_dim(int p, int q) const {
    if (!interior(p, q)) return std::nullopt;
    return coh_basis(p, q).dim();
}

Vec ComplexWindow::coords(const Cochain& x, int p, int q) const {
    if (x.handle() != h_) throw math_error("cochain over a different handle");
    if (x.arity() != p + arity_offset() || x.vdeg() != q)
        throw math_error("cochain bidegree does not match the component");
    const ComponentBasis& b = basis(p, q);
    const auto& ki = key_index_.at({p, q});
    const auto& gi = gen_index_.at({p, q});
    Vec v = zero_vec(h_->field(), b.dim());
    for (const auto& [k, c] : x.table()) {
        auto it = ki.find(k);
        if (it == ki.end()) throw math_error("cochain entry outside this complex's component");
        v[it->second] = c;
    }
    for (const auto& [i, c] : x.generic_coeffs()) {
        auto it = gi.find(i);
        if (it == gi.end()) throw math_error("cochain entry outside this complex's component");
        v[(int)b.keys.size() + it->second] = c;
    }
    return v;
}

Cochain ComplexWindow::from_coords(int p, int q, const Vec& v) const {
    const ComponentBasis& b = basis(p, q);
    if ((int)v.size() != b.dim()) throw internal_error("from_coords: wrong length");
    if (h_->kind() == OperadHandle::Kind::Generic) {
        std::map<int, Scalar> coeffs;
        for (int i = 0; i < b.dim(); ++i)
            if (!v[i].is_zero()) coeffs[b.gen[i]] = v[i];
        return Cochain::from_generic(h_, p + arity_offset(), q, std::move(coeffs));
    }
    std::map<EKey, Scalar> tab;
    for (int i = 0; i < b.dim(); ++i)
        if (!v[i].is_zero()) tab[b.keys[i]] = v[i];
    return Cochain::from_table(h_, p + arity_offset(), q, std::move(tab));
}

std::pair<int, int> ComplexWindow::locate(const Cochain& x) const {
    int p = x.arity() - arity_offset(), q = x.vdeg();
    if (!win_.contains(p, q)) throw math_error("cochain bidegree outside the assembled window");
    return {p, q};
}

Cochain ComplexWindow::apply_d(const Cochain& x) const { return g_bracket(m2_.m2, x); }

bool ComplexWindow::is_cocycle(const Cochain& x) const { return apply_d(x).is_zero(); }

std::optional<Cochain> ComplexWindow::is_coboundary(const Cochain& x) const {
    auto [p, q] = locate(x);
    if (!is_cocycle(x)) throw math_error("is_coboundary: input is not a cocycle");
    if (p == 0) {
        if (x.is_zero()) return Cochain::zero(h_, arity_offset(), q);
        return std::nullopt;
    }
    if (p - 1 < win_.p_min) throw math_error("is_coboundary: window too small");
    auto sol = solve_particular(diff(p - 1, q), coords(x, p, q));
    if (!sol) return std::nullopt;
    return from_coords(p - 1, q, *sol);
}

const CohBasis& ComplexWindow::coh_basis(int p, int q) const {
    auto it = coh_cache_.find({p, q});
    if (it != coh_cache_.end()) return it->second;
    if (!interior(p, q)) throw math_error("cohomology requested at a partial bidegree");

    CohBasis cb;
    cb.comp_dim = (int)basis(p, q).dim();
    cb.field = h_->field();
    std::vector<Vec> image_rows;
    if (p > win_.p_min) {
        const SparseMatrix& din = diff(p - 1, q);
        for (int j = 0; j < din.cols(); ++j) {
            Vec col = zero_vec(cb.field, din.rows());
            for (const auto& [rc, v] : din.entries())
                if (rc.second == j) col[rc.first] = v;
            image_rows.push_back(std::move(col));
        }
    }
    cb.image = rref_rows(cb.field, cb.comp_dim, image_rows);
    std::vector<Vec> all = cb.image.rows;
    for (Vec& k : kernel_basis(diff(p, q))) all.push_back(std::move(k));
    Echelon e_all = rref_rows(cb.field, cb.comp_dim, all);
    for (std::size_t i = 0; i < e_all.rows.size(); ++i) {
        if (cb.image.is_pivot_col(e_all.pivots[i])) continue;
        cb.reps.push_back(e_all.rows[i]);
        cb.rep_pivots.push_back(e_all.pivots[i]);
    }
    return coh_cache_.emplace(std::make_pair(p, q), std::move(cb)).first->second;
}

/* --------------------------- cohomology classes ------------------------- */

CohomologyClass make_class(const ComplexWindow& cx, const Cochain& rep) {
    auto [p, q] = cx.locate(rep);
    if (!cx.is_cocycle(rep)) throw math_error("class representative is not a cocycle");
    return CohomologyClass{&cx, p, q, rep};
}

bool class_is_zero(const CohomologyClass& a) {
    return a.cx->is_coboundary(a.rep).has_value();
}

bool class_equal(const CohomologyClass& a, const CohomologyClass& b) {
    if (a.cx != b.cx || a.p != b.p || a.q != b.q) return false;
    return a.cx->is_coboundary(a.rep - b.rep).has_value();
}

/* ------------------------------ pair assembly --------------------------- */

BimodulePair assemble_bimodule_complexes(const GradedSpace& A, const GradedSpace& M,
                                         const Cochain& m2_total, DegreeWindow win) {
    BimodulePair pr;
    pr.A = A;
    pr.M = M;
    pr.linendo = m2_total.handle();
    if (pr.linendo->kind() != OperadHandle::Kind::LinEndo ||
        !(pr.linendo->alg_space() == A) || !(pr.linendo->mod_space() == M))
        throw input_error("m2_total must live over LinEndo(A, M)");
    Cochain residual = brace(m2_total, {m2_total});
    if (!residual.is_zero()) {
        const auto& [k, v] = *residual.table().begin();
        std::string msg = k.mod_pos < 0 ? "associativity fails" : "bimodule axiom fails";
        throw math_error(msg + " at entry " +
                         elementary_cochain(m2_total.handle(), 3, -1 + m2_total.vdeg() * 2, k).str());
    }
    pr.m2_total = m2_total;
    pr.idM = id_mod_cochain(pr.linendo);
    pr.endo = OperadHandle::endomorphism(A);
    std::map<EKey, Scalar> alg_tab;
    for (const auto& [k, v] : m2_total.pure_part().table()) alg_tab[k] = v;
    pr.m2_alg_endo = Cochain::from_table(pr.endo, 2, 0, std::move(alg_tab));

    Multiplication m_endo = Multiplication::make(pr.m2_alg_endo);
    Multiplication m_tot = Multiplication::make(pr.m2_total);
    pr.HC = ComplexWindow::assemble(CxKind::HochschildCx, pr.endo, m_endo, win);
    pr.BC = ComplexWindow::assemble(CxKind::BimoduleCx, pr.linendo, m_tot, win);
    pr.HCE = ComplexWindow::assemble(CxKind::BimoduleHochschildCx, pr.linendo, m_tot, win);
    return pr;
}

Cochain embed_pure(const BimodulePair& pr, const Cochain& hc) {
    if (hc.handle() != pr.endo) throw math_error("embed_pure: not an HC cochain");
    std::map<EKey, Scalar> tab;
    for (const auto& [k, v] : hc.table()) tab[k] = v;
    return Cochain::from_table(pr.linendo, hc.arity(), hc.vdeg(), std::move(tab));
}

Cochain project_pure(const BimodulePair& pr, const Cochain& hce) {
    if (hce.handle() != pr.linendo) throw math_error("project_pure: not an HCE cochain");
    std::map<EKey, Scalar> tab;
    for (const auto& [k, v] : hce.pure_part().table()) tab[k] = v;
    return Cochain::from_table(pr.endo, hce.arity(), hce.vdeg(), std::move(tab));
}

CohomologyClass connecting_delta(const BimodulePair& pr, const CohomologyClass& a) {
    if (a.cx != &pr.HC) throw math_error("connecting_delta: class must live in HC");
    Multiplication mt = Multiplication::make(pr.m2_total);
    Cochain alpha = embed_pure(pr, a.rep);
    Cochain d = cup(mt, pr.idM, alpha) - cup(mt, alpha, pr.idM);
    if (!d.is_ideal_element()) throw internal_error("connecting_delta: result not in the ideal");
    return make_class(pr.BC, d);
}

/* ------------------------------ induced maps ---------------------------- */

SparseMatrix induced_map(const ComplexWindow& src, int sp, int sq, const ComplexWindow& dst,
                         int dp, int dq, const std::function<Cochain(const Cochain&)>& F) {
    const CohBasis& scb = src.coh_basis(sp, sq);
    const CohBasis& dcb = dst.coh_basis(dp, dq);
    SparseMatrix m((int)dcb.dim(), (int)scb.dim(), scb.field);
    for (int j = 0; j < (int)scb.dim(); ++j) {
        Cochain fx = F(src.from_coords(sp, sq, scb.reps[j]));
        auto lam = dcb.express(dst.coords(fx, dp, dq));
        if (!lam) throw math_error("induced_map: image of a cocycle is not a cocycle");
        for (int i = 0; i < (int)lam->size(); ++i)
            if (!(*lam)[i].is_zero()) m.set(i, j, (*lam)[i]);
    }
    /* well-definedness: coboundaries must map to coboundaries */
    for (const Vec& img : scb.image.rows) {
        Cochain fx = F(src.from_coords(sp, sq, img));
        auto lam = dcb.express(dst.coords(fx, dp, dq));
        if (!lam) throw math_error("induced_map: image of a coboundary is not a cocycle");
        if (!is_zero_vec(*lam)) throw math_error("induced_map: not well defined on cohomology");
    }
    return m;
}

/* ----------------------------- LES exactness ---------------------------- */

LesReport les_exactness_audit(const BimodulePair& pr) {
    LesReport rep;
    const DegreeWindow& w = pr.HCE.window();
    auto ident = [&pr](const Cochain& c) { return c; };
    auto proj = [&pr](const Cochain& c) { return project_pure(pr, c); };
    Multiplication mt = Multiplication::make(pr.m2_total);
    auto delta = [&pr, &mt](const Cochain& c) {
        Cochain alpha = embed_pure(pr, c);
        return cup(mt, pr.idM, alpha) - cup(mt, alpha, pr.idM);
    };
    for (int q = w.q_min; q <= w.q_max; ++q)
        for (int p = w.p_min; p <= w.p_max; ++p) {
            if (!pr.BC.interior(p - 1, q) || !pr.HCE.interior(p, q) || !pr.HC.interior(p, q) ||
                !pr.BC.interior(p, q) || !pr.HCE.interior(p + 1, q))
                continue;
            LesNode node;
            node.p = p;
            node.q = q;
            node.dim_ext_in = pr.BC.coh_basis(p - 1, q).dim();
            node.dim_hhe = pr.HCE.coh_basis(p, q).dim();
            node.dim_hh = pr.HC.coh_basis(p, q).dim();
            node.dim_ext_out = pr.BC.coh_basis(p, q).dim();
            SparseMatrix i1 = induced_map(pr.BC, p - 1, q, pr.HCE, p, q, ident);
            SparseMatrix p1 = induced_map(pr.HCE, p, q, pr.HC, p, q, proj);
            SparseMatrix d1 = induced_map(pr.HC, p, q, pr.BC, p, q, delta);
            SparseMatrix i2 = induced_map(pr.BC, p, q, pr.HCE, p + 1, q, ident);
            node.exact_at_hhe = p1.mul(i1).is_zero() && rank(i1) + rank(p1) == node.dim_hhe;
            node.exact_at_hh = d1.mul(p1).is_zero() && rank(p1) + rank(d1) == node.dim_hh;
            node.exact_at_ext = i2.mul(d1).is_zero() && rank(d1) + rank(i2) == node.dim_ext_out;
            rep.exact = rep.exact && node.exact_at_hhe && node.exact_at_hh && node.exact_at_ext;
            rep.nodes.push_back(node);
        }
    return rep;
}

} // namespace gersten

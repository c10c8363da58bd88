#include "gersten/operad.hpp"

#include <algorithm>
#include <sstream>

namespace gersten {

/* ----------------------------- FiniteOperad ----------------------------- */

FiniteOperad FiniteOperad::make(FieldSpec f, std::vector<GradedSpace> arity_spaces,
                                int unit_index, CompTable comp) {
    FiniteOperad o;
    o.field_ = f;
    o.spaces_ = std::move(arity_spaces);
    o.unit_ = unit_index;
    o.comp_ = std::move(comp);
    if (o.spaces_.size() < 2) throw input_error("operad must carry arities 0 and 1");
    for (const auto& sp : o.spaces_)
        if (!(sp.field() == f)) throw input_error("operad arity space over the wrong field");
    if (unit_index < 0 || unit_index >= o.spaces_[1].dim())
        throw input_error("operad unit index out of range");
    if (o.spaces_[1].degree(unit_index) != 0)
        throw input_error("operad unit must have degree 0");

    /* fill in unit compositions when omitted, then validate everything */
    for (int p = 0; p <= o.max_arity(); ++p) {
        for (int a = 0; a < o.space(p).dim(); ++a) {
            for (int i = 1; i <= p; ++i) {
                auto& cell = o.comp_[{p, i, 1}][{a, o.unit_}];
                if (cell.empty()) cell = {{a, Scalar::one(f)}};
            }
            if (p <= o.max_arity()) {
                auto& cell = o.comp_[{1, 1, p}][{o.unit_, a}];
                if (cell.empty()) cell = {{a, Scalar::one(f)}};
            }
        }
    }
    o.validate();
    return o;
}

const GradedSpace& FiniteOperad::space(int arity) const {
    if (arity < 0 || arity > max_arity())
        throw math_error("operad arity " + std::to_string(arity) + " outside the carried range");
    return spaces_[arity];
}

const std::vector<std::pair<int, Scalar>>& FiniteOperad::compose_basis(int p, int i, int q,
                                                                       int a, int b) const {
    static const std::vector<std::pair<int, Scalar>> empty;
    if (p + q - 1 > max_arity() || p + q - 1 < 0)
        throw math_error("operad composition lands outside the carried arity range");
    auto it = comp_.find({p, i, q});
    if (it == comp_.end()) return empty;
    auto jt = it->second.find({a, b});
    return jt == it->second.end() ? empty : jt->second;
}

namespace {

using Combo = std::map<int, Scalar>;

Combo combo_of(const std::vector<std::pair<int, Scalar>>& v) {
    Combo c;
    for (const auto& [i, s] : v) {
        if (s.is_zero()) continue;
        auto it = c.find(i);
        if (it == c.end()) c.emplace(i, s);
        else {
            it->second = it->second + s;
            if (it->second.is_zero()) c.erase(it);
        }
    }
    return c;
}

void combo_add(Combo& c, int i, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = c.find(i);
    if (it == c.end()) c.emplace(i, s);
    else {
        it->second = it->second + s;
        if (it->second.is_zero()) c.erase(it);
    }
}

} // namespace

void FiniteOperad::validate() const {
    FieldSpec f = field_;
    /* degree additivity and index sanity */
    for (const auto& [key, cells] : comp_) {
        auto [p, i, q] = key;
        if (p < 0 || q < 0 || i < 1 || i > p) throw input_error("operad comp: bad (p,i,q) key");
        if (p > max_arity() || q > max_arity() || p + q - 1 > max_arity())
            throw input_error("operad comp: arity outside the carried range");
        for (const auto& [ab, terms] : cells) {
            auto [a, b] = ab;
            if (a < 0 || a >= space(p).dim() || b < 0 || b >= space(q).dim())
                throw input_error("operad comp: basis index out of range");
            for (const auto& [out, s] : terms) {
                if (out < 0 || out >= space(p + q - 1).dim())
                    throw input_error("operad comp: output index out of range");
                if (space(p + q - 1).degree(out) != space(p).degree(a) + space(q).degree(b))
                    throw input_error("operad comp: composition does not add degrees");
                if (!(s.field() == f)) throw input_error("operad comp: scalar over wrong field");
            }
        }
    }
    /* unit axioms */
    for (int p = 0; p <= max_arity(); ++p) {
        for (int a = 0; a < space(p).dim(); ++a) {
            for (int i = 1; i <= p; ++i) {
                Combo c = combo_of(compose_basis(p, i, 1, a, unit_));
                if (c.size() != 1 || c.begin()->first != a || !c.begin()->second.is_one())
                    throw input_error("operad unit axiom x o_i 1 = x fails");
            }
            Combo c = combo_of(compose_basis(1, 1, p, unit_, a));
            if (c.size() != 1 || c.begin()->first != a || !c.begin()->second.is_one())
                throw input_error("operad unit axiom 1 o_1 x = x fails");
        }
    }
    /* associativity on basis triples within the carried range */
    auto compose_combo = [&](int p, int i, int q, const Combo& xs, const Combo& ys) {
        Combo out;
        for (const auto& [a, ca] : xs)
            for (const auto& [b, cb] : ys)
                for (const auto& [o, co] : compose_basis(p, i, q, a, b))
                    combo_add(out, o, ca * cb * co);
        return out;
    };
    for (int p = 1; p <= max_arity(); ++p)
        for (int q = 0; q <= max_arity(); ++q)
            for (int r = 0; r <= max_arity(); ++r) {
                if (p + q + r - 2 > max_arity() || p + q - 1 < 1) continue;
                for (int a = 0; a < space(p).dim(); ++a)
                    for (int b = 0; b < space(q).dim(); ++b)
                        for (int c = 0; c < space(r).dim(); ++c) {
                            Combo xa{{a, Scalar::one(f)}}, xb{{b, Scalar::one(f)}}, xc{{c, Scalar::one(f)}};
                            /* sequential: (a o_i b) o_{i+j-1} c = a o_i (b o_j c);
                             * checkable only when both intermediates fit */
                            if (p + q - 1 <= max_arity() && q + r - 1 <= max_arity())
                                for (int i = 1; i <= p; ++i)
                                    for (int j = 1; j <= q; ++j) {
                                        Combo lhs = compose_combo(p + q - 1, i + j - 1, r,
                                                                  compose_combo(p, i, q, xa, xb), xc);
                                        Combo rhs = compose_combo(p, i, q + r - 1, xa,
                                                                  compose_combo(q, j, r, xb, xc));
                                        if (lhs != rhs)
                                            throw input_error("operad associativity (sequential) fails");
                                    }
                            /* parallel: (a o_i b) o_{j+q-1} c = (-1)^{|b||c|} (a o_j c) o_i b;
                             * both intermediates must fit in the carried range */
                            if (p + q - 1 > max_arity() || p + r - 1 > max_arity()) continue;
                            for (int i = 1; i <= p; ++i)
                                for (int j = i + 1; j <= p; ++j) {
                                    Combo lhs = compose_combo(p + q - 1, j + q - 1, r,
                                                              compose_combo(p, i, q, xa, xb), xc);
                                    Combo rhs = compose_combo(p + r - 1, i, q,
                                                              compose_combo(p, j, r, xa, xc), xb);
                                    Scalar sg = sign_pow(f, (long)space(q).degree(b) * space(r).degree(c));
                                    Combo rhs2;
                                    for (const auto& [o, co] : rhs) combo_add(rhs2, o, co * sg);
                                    if (lhs != rhs2)
                                        throw input_error("operad associativity (parallel) fails");
                                }
                        }
            }
}

/* ----------------------------- OperadHandle ----------------------------- */

HandlePtr OperadHandle::endomorphism(GradedSpace v) {
    auto h = std::make_shared<OperadHandle>();
    h->kind_ = Kind::Endo;
    h->field_ = v.field();
    h->A_ = std::move(v);
    return h;
}

HandlePtr OperadHandle::linear_endomorphism(GradedSpace v, GradedSpace w) {
    if (!(v.field() == w.field())) throw input_error("linear endomorphism operad: field mismatch");
    auto h = std::make_shared<OperadHandle>();
    h->kind_ = Kind::LinEndo;
    h->field_ = v.field();
    h->A_ = std::move(v);
    h->M_ = std::move(w);
    return h;
}

HandlePtr OperadHandle::generic(FiniteOperad op) {
    auto h = std::make_shared<OperadHandle>();
    h->kind_ = Kind::Generic;
    h->field_ = op.field();
    h->op_ = std::move(op);
    return h;
}

/* ------------------------------- Cochain -------------------------------- */

namespace {

void check_key(const OperadHandle& h, int p, int q, const EKey& k) {
    if ((int)k.in.size() != p) throw input_error("cochain key arity mismatch");
    if (k.mod_pos >= 0 && h.kind() != OperadHandle::Kind::LinEndo)
        throw input_error("module slot on a non-LinEndo handle");
    if (k.mod_pos >= p) throw input_error("module slot out of range");
    long s = 0;
    for (int j = 0; j < p; ++j) {
        if (j == k.mod_pos) {
            if (k.in[j] < 0 || k.in[j] >= h.mod_space().dim())
                throw input_error("module input index out of range");
            s += h.sdeg_mod(k.in[j]);
        } else {
            if (k.in[j] < 0 || k.in[j] >= h.alg_space().dim())
                throw input_error("algebra input index out of range");
            s += h.sdeg_alg(k.in[j]);
        }
    }
    int outdim = k.mod_pos >= 0 ? h.mod_space().dim() : h.alg_space().dim();
    if (k.out < 0 || k.out >= outdim) throw input_error("output index out of range");
    long sout = k.mod_pos >= 0 ? h.sdeg_mod(k.out) : h.sdeg_alg(k.out);
    if (sout != s + (p + q - 1))
        throw input_error("cochain entry is not degree-homogeneous for bidegree (" +
                          std::to_string(p) + "," + std::to_string(q) + ")");
}

long skey_in_sdeg(const OperadHandle& h, const EKey& k, int j) {
    return j == k.mod_pos ? h.sdeg_mod(k.in[j]) : h.sdeg_alg(k.in[j]);
}

} // namespace

Cochain Cochain::zero(HandlePtr h, int p, int q) {
    if (!h) throw internal_error("null operad handle");
    if (p < 0) throw math_error("negative cochain arity");
    Cochain c;
    c.h_ = std::move(h);
    c.p_ = p;
    c.q_ = q;
    return c;
}

Cochain Cochain::from_table(HandlePtr h, int p, int q, std::map<EKey, Scalar> table) {
    if (h->kind() == OperadHandle::Kind::Generic)
        throw input_error("from_table on a generic handle");
    Cochain c = zero(std::move(h), p, q);
    for (auto& [k, v] : table) {
        if (v.is_zero()) continue;
        check_key(*c.h_, p, q, k);
        c.tab_.emplace(k, v);
    }
    return c;
}

Cochain Cochain::from_generic(HandlePtr h, int p, int q, std::map<int, Scalar> coeffs) {
    if (h->kind() != OperadHandle::Kind::Generic)
        throw input_error("from_generic on a non-generic handle");
    const FiniteOperad& op = h->op();
    const GradedSpace& sp = op.space(p); // throws when p is outside the range
    Cochain c = zero(std::move(h), p, q);
    for (auto& [i, v] : coeffs) {
        if (v.is_zero()) continue;
        if (i < 0 || i >= sp.dim()) throw input_error("generic cochain index out of range");
        if (sp.degree(i) != q)
            throw input_error("generic cochain entry of wrong degree for bidegree");
        c.gen_.emplace(i, v);
    }
    return c;
}

bool Cochain::is_ideal_element() const {
    for (const auto& [k, v] : tab_)
        if (k.mod_pos < 0) return false;
    return gen_.empty();
}

bool Cochain::is_pure() const {
    for (const auto& [k, v] : tab_)
        if (k.mod_pos >= 0) return false;
    return true;
}

void Cochain::add_entry(const EKey& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = tab_.find(k);
    if (it == tab_.end()) tab_.emplace(k, v);
    else {
        it->second = it->second + v;
        if (it->second.is_zero()) tab_.erase(it);
    }
}

void Cochain::add_generic(int idx, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = gen_.find(idx);
    if (it == gen_.end()) gen_.emplace(idx, v);
    else {
        it->second = it->second + v;
        if (it->second.is_zero()) gen_.erase(it);
    }
}

static void check_compatible(const Cochain& a, const Cochain& b) {
    if (a.handle() != b.handle()) throw math_error("cochains over different operad handles");
    if (a.arity() != b.arity() || a.vdeg() != b.vdeg())
        throw math_error("cochain bidegree mismatch in linear operation");
}

Cochain Cochain::operator+(const Cochain& o) const {
    check_compatible(*this, o);
    Cochain r = *this;
    for (const auto& [k, v] : o.tab_) r.add_entry(k, v);
    for (const auto& [i, v] : o.gen_) r.add_generic(i, v);
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + (-o); }

Cochain Cochain::scaled(const Scalar& c) const {
    Cochain r = zero(h_, p_, q_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : tab_) r.tab_.emplace(k, v * c);
    for (const auto& [i, v] : gen_) r.gen_.emplace(i, v * c);
    return r;
}

Cochain Cochain::operator-() const { return scaled(-Scalar::one(h_->field())); }

bool Cochain::operator==(const Cochain& o) const {
    return h_ == o.h_ && p_ == o.p_ && q_ == o.q_ && tab_ == o.tab_ && gen_ == o.gen_;
}

Cochain Cochain::pure_part() const {
    Cochain r = zero(h_, p_, q_);
    for (const auto& [k, v] : tab_)
        if (k.mod_pos < 0) r.tab_.emplace(k, v);
    return r;
}

Cochain Cochain::ideal_part() const {
    Cochain r = zero(h_, p_, q_);
    for (const auto& [k, v] : tab_)
        if (k.mod_pos >= 0) r.tab_.emplace(k, v);
    return r;
}

std::string Cochain::str() const {
    std::ostringstream os;
    os << "(" << p_ << "," << q_ << ")[";
    bool first = true;
    for (const auto& [k, v] : tab_) {
        if (!first) os << ", ";
        first = false;
        os << v.str() << "*(";
        for (int j = 0; j < (int)k.in.size(); ++j) {
            if (j) os << ",";
            if (j == k.mod_pos)
                os << "M:" << h_->mod_space().label(k.in[j]);
            else
                os << h_->alg_space().label(k.in[j]);
        }
        os << ";";
        if (k.mod_pos >= 0) os << "M:" << h_->mod_space().label(k.out);
        else os << h_->alg_space().label(k.out);
        os << ")";
    }
    for (const auto& [i, v] : gen_) {
        if (!first) os << ", ";
        first = false;
        os << v.str() << "*" << h_->op().space(p_).label(i);
    }
    os << "]";
    return os.str();
}

/* ------------------------------ composition ----------------------------- */

Cochain compose_at(const Cochain& x, const Cochain& y, int i) {
    if (x.handle() != y.handle()) throw math_error("compose_at: cochains over different handles");
    const OperadHandle& h = *x.handle();
    if (i < 1 || i > x.arity()) throw math_error("compose_at: slot index out of range");
    int p = x.arity() + y.arity() - 1;
    int q = x.vdeg() + y.vdeg();
    Cochain r = Cochain::zero(x.handle(), p, q);
    int jpos = i - 1;

    if (h.kind() == OperadHandle::Kind::Generic) {
        if (p > h.op().max_arity())
            throw math_error("operad composition lands outside the carried arity range");
        /* suspension twist for structure-constant operads */
        long expo = (long)(y.vdeg() + y.arity() - 1) * (x.arity() - i) + (long)y.vdeg() * (i - 1);
        Scalar twist = sign_pow(h.field(), expo);
        for (const auto& [a, ca] : x.generic_coeffs())
            for (const auto& [b, cb] : y.generic_coeffs())
                for (const auto& [out, co] :
                     h.op().compose_basis(x.arity(), i, y.arity(), a, b))
                    r.add_generic(out, ca * cb * co * twist);
        return r;
    }

    long ydeg = y.arity() + y.vdeg() - 1; // degree of y as a shifted-space map
    for (const auto& [kx, cx] : x.table()) {
        bool slot_mod = kx.mod_pos == jpos;
        long crossing = 0;
        for (int l = 0; l < jpos; ++l) crossing += skey_in_sdeg(h, kx, l);
        Scalar sgn = sign_pow(h.field(), ydeg * crossing);
        for (const auto& [ky, cy] : y.table()) {
            bool y_mod_out = ky.mod_pos >= 0;
            if (slot_mod != y_mod_out) continue;
            if (kx.in[jpos] != ky.out) continue;
            EKey k;
            k.out = kx.out;
            k.in.reserve(p);
            k.in.insert(k.in.end(), kx.in.begin(), kx.in.begin() + jpos);
            k.in.insert(k.in.end(), ky.in.begin(), ky.in.end());
            k.in.insert(k.in.end(), kx.in.begin() + jpos + 1, kx.in.end());
            if (slot_mod)
                k.mod_pos = jpos + ky.mod_pos;
            else if (kx.mod_pos >= 0)
                k.mod_pos = kx.mod_pos < jpos ? kx.mod_pos : kx.mod_pos + y.arity() - 1;
            else
                k.mod_pos = -1;
            r.add_entry(k, cx * cy * sgn);
        }
    }
    return r;
}

/* ------------------------------ identities ------------------------------ */

Cochain identity_cochain(HandlePtr h) {
    switch (h->kind()) {
    case OperadHandle::Kind::Endo: {
        std::map<EKey, Scalar> t;
        for (int i = 0; i < h->alg_space().dim(); ++i)
            t[EKey{-1, {i}, i}] = Scalar::one(h->field());
        return Cochain::from_table(h, 1, 0, std::move(t));
    }
    case OperadHandle::Kind::LinEndo:
        return id_alg_cochain(h) + id_mod_cochain(h);
    case OperadHandle::Kind::Generic:
        return Cochain::from_generic(h, 1, 0, {{h->op().unit_index(), Scalar::one(h->field())}});
    }
    throw internal_error("unreachable");
}

Cochain id_alg_cochain(HandlePtr h) {
    std::map<EKey, Scalar> t;
    for (int i = 0; i < h->alg_space().dim(); ++i)
        t[EKey{-1, {i}, i}] = Scalar::one(h->field());
    return Cochain::from_table(h, 1, 0, std::move(t));
}

Cochain id_mod_cochain(HandlePtr h) {
    if (h->kind() != OperadHandle::Kind::LinEndo)
        throw math_error("id_mod_cochain needs a LinEndo handle");
    std::map<EKey, Scalar> t;
    for (int i = 0; i < h->mod_space().dim(); ++i)
        t[EKey{0, {i}, i}] = Scalar::one(h->field());
    return Cochain::from_table(h, 1, 0, std::move(t));
}

Cochain elementary_cochain(HandlePtr h, int p, int q, const EKey& k) {
    std::map<EKey, Scalar> t;
    t[k] = Scalar::one(h->field());
    return Cochain::from_table(std::move(h), p, q, std::move(t));
}

Cochain elementary_generic(HandlePtr h, int p, int q, int idx) {
    Scalar one = Scalar::one(h->field());
    return Cochain::from_generic(std::move(h), p, q, {{idx, one}});
}

std::vector<EKey> enumerate_keys(const OperadHandle& h, int p, int q, KeyFilter filt) {
    if (h.kind() == OperadHandle::Kind::Generic)
        throw internal_error("enumerate_keys on a generic handle");
    std::vector<EKey> keys;
    const GradedSpace& A = h.alg_space();
    const GradedSpace& M = h.mod_space();
    int mp_lo = filt == KeyFilter::Ideal ? 0 : -1;
    int mp_hi = (h.kind() == OperadHandle::Kind::LinEndo && filt != KeyFilter::Pure) ? p - 1 : -1;
    for (int mp = mp_lo; mp <= mp_hi; ++mp) {
        const GradedSpace& osp = mp >= 0 ? M : A;
        if (p == 0) {
            if (mp >= 0) continue;
            for (int o = 0; o < osp.dim(); ++o)
                if (osp.degree(o) - 1 == q - 1) keys.push_back(EKey{-1, {}, o});
            continue;
        }
        std::vector<int> in(p, 0);
        bool any_dim = true;
        for (int j = 0; j < p; ++j)
            if ((j == mp ? M : A).dim() == 0) any_dim = false;
        if (!any_dim || osp.dim() == 0) continue;
        while (true) {
            long s = 0;
            for (int j = 0; j < p; ++j)
                s += (j == mp ? M.degree(in[j]) : A.degree(in[j])) - 1;
            for (int o = 0; o < osp.dim(); ++o)
                if (osp.degree(o) - 1 == s + (p + q - 1)) keys.push_back(EKey{mp, in, o});
            int j = p - 1;
            while (j >= 0) {
                const GradedSpace& sp = j == mp ? M : A;
                if (++in[j] < sp.dim()) break;
                in[j] = 0;
                --j;
            }
            if (j < 0) break;
        }
    }
    return keys;
}

/* ---------------------------- (de)suspension ---------------------------- */

namespace {

long suspension_sign_exp(const OperadHandle& h, int arity, const MapRow& r) {
    long e = 0;
    for (int j = 0; j + 1 < arity; ++j) {
        long sd = (j == r.mod_pos) ? h.sdeg_mod(r.in[j]) : h.sdeg_alg(r.in[j]);
        e += (long)(arity - 1 - j) * sd;
    }
    return e;
}

} // namespace

Cochain suspend_multilinear(HandlePtr h, int arity, const std::vector<MapRow>& rows) {
    if (h->kind() == OperadHandle::Kind::Generic)
        throw input_error("suspend_multilinear needs an Endo or LinEndo handle");
    std::optional<int> q;
    std::map<EKey, Scalar> tab;
    for (const MapRow& r : rows) {
        if ((int)r.in.size() != arity) throw input_error("map row arity mismatch");
        long s = 0;
        for (int j = 0; j < arity; ++j) {
            const GradedSpace& sp = j == r.mod_pos ? h->mod_space() : h->alg_space();
            if (r.in[j] < 0 || r.in[j] >= sp.dim()) throw input_error("map row input index out of range");
            s += sp.degree(r.in[j]);
        }
        const GradedSpace& osp = r.mod_pos >= 0 ? h->mod_space() : h->alg_space();
        if (r.out < 0 || r.out >= osp.dim()) throw input_error("map row output index out of range");
        int rq = (int)(osp.degree(r.out) - s);
        if (q && *q != rq) throw input_error("map rows are not degree-homogeneous");
        q = rq;
        Scalar v = r.coef * sign_pow(h->field(), suspension_sign_exp(*h, arity, r));
        EKey k{r.mod_pos, r.in, r.out};
        auto it = tab.find(k);
        if (it == tab.end()) tab.emplace(k, v);
        else it->second = it->second + v;
    }
    if (!q) throw input_error("cannot infer the degree of an empty map table");
    return Cochain::from_table(std::move(h), arity, *q, std::move(tab));
}

std::vector<MapRow> desuspend_multilinear(const Cochain& x) {
    const OperadHandle& h = *x.handle();
    std::vector<MapRow> rows;
    for (const auto& [k, v] : x.table()) {
        MapRow r;
        r.mod_pos = k.mod_pos;
        r.in = k.in;
        r.out = k.out;
        r.coef = v * sign_pow(h.field(), suspension_sign_exp(h, x.arity(), r));
        rows.push_back(std::move(r));
    }
    return rows;
}

/* ------------------------------ ideals ---------------------------------- */

OperadIdeal OperadIdeal::linendo_canonical(HandlePtr h) {
    if (h->kind() != OperadHandle::Kind::LinEndo)
        throw input_error("canonical ideal needs a LinEndo handle");
    return OperadIdeal{Kind::LinEndoCanonical, std::move(h), {}};
}

OperadIdeal OperadIdeal::whole(HandlePtr h) { return OperadIdeal{Kind::Whole, std::move(h), {}}; }

OperadIdeal OperadIdeal::generic_sub(HandlePtr h, std::vector<std::vector<int>> selector) {
    if (h->kind() != OperadHandle::Kind::Generic)
        throw input_error("sub-basis ideal needs a generic handle");
    const FiniteOperad& op = h->op();
    if ((int)selector.size() != op.max_arity() + 1)
        throw input_error("ideal selector must cover every carried arity");
    for (int p = 0; p < (int)selector.size(); ++p)
        for (int i : selector[p])
            if (i < 0 || i >= op.space(p).dim())
                throw input_error("ideal selector index out of range");
    OperadIdeal ideal{Kind::GenericSub, h, std::move(selector)};
    /* closure under composition against arbitrary basis elements */
    auto in_sel = [&](int p, int idx) {
        const auto& v = ideal.selector[p];
        return std::find(v.begin(), v.end(), idx) != v.end();
    };
    for (int p = 1; p <= op.max_arity(); ++p)
        for (int q = 0; q <= op.max_arity(); ++q) {
            if (p + q - 1 > op.max_arity()) continue;
            for (int i = 1; i <= p; ++i)
                for (int a = 0; a < op.space(p).dim(); ++a)
                    for (int b = 0; b < op.space(q).dim(); ++b) {
                        bool ideal_in = in_sel(p, a) || in_sel(q, b);
                        if (!ideal_in) continue;
                        for (const auto& [out, s] : op.compose_basis(p, i, q, a, b))
                            if (!in_sel(p + q - 1, out))
                                throw input_error("ideal selector is not closed under composition");
                    }
        }
    return ideal;
}

bool OperadIdeal::contains(const Cochain& x) const {
    if (x.handle() != parent) return false;
    switch (kind) {
    case Kind::Whole:
        return true;
    case Kind::LinEndoCanonical:
        return x.is_ideal_element();
    case Kind::GenericSub: {
        for (const auto& [i, v] : x.generic_coeffs()) {
            const auto& sel = selector[x.arity()];
            if (std::find(sel.begin(), sel.end(), i) == sel.end()) return false;
        }
        return x.table().empty();
    }
    }
    return false;
}

} // namespace gersten

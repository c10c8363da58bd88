#include "gersten/braces.hpp"

namespace gersten {

Cochain brace(const Cochain& x0, const std::vector<Cochain>& args) {
    const HandlePtr& h = x0.handle();
    int n = (int)args.size();
    int p0 = x0.arity();
    int rp = p0 - n, rq = x0.vdeg();
    for (const Cochain& a : args) {
        if (a.handle() != h) throw math_error("brace: cochains over different handles");
        rp += a.arity();
        rq += a.vdeg();
    }
    if (n == 0) return x0;
    /* n > p0: the brace is zero; clamp the formal arity so the zero cochain
     * is representable even when p0 + sum(p_i) - n < 0 */
    if (n > p0) return Cochain::zero(h, std::max(rp, 0), rq);
    if (rp < 0) throw math_error("brace: negative result arity");

    Cochain result = Cochain::zero(h, rp, rq);
    /* strictly increasing insertion positions i_1 < ... < i_n in 1..p0 */
    std::vector<int> pos(n);
    for (int j = 0; j < n; ++j) pos[j] = j + 1;
    while (true) {
        Cochain acc = x0;
        int shift = 0;
        for (int j = 0; j < n; ++j) {
            acc = compose_at(acc, args[j], pos[j] + shift);
            shift += args[j].arity() - 1;
        }
        result = result + acc;
        /* next combination */
        int j = n - 1;
        while (j >= 0 && pos[j] == p0 - (n - 1 - j)) --j;
        if (j < 0) break;
        ++pos[j];
        for (int l = j + 1; l < n; ++l) pos[l] = pos[l - 1] + 1;
    }
    return result;
}

Cochain g_bracket(const Cochain& x, const Cochain& y) {
    Scalar sg = sign_pow(x.handle()->field(),
                         (long)(x.total_deg() - 1) * (y.total_deg() - 1));
    return brace(x, {y}) - brace(y, {x}).scaled(sg);
}

Multiplication Multiplication::make(Cochain m2) {
    if (m2.arity() != 2 || m2.vdeg() != 0)
        throw math_error("multiplication must have bidegree (2,0)");
    if (!brace(m2, {m2}).is_zero())
        throw math_error("m2{m2} != 0: not a multiplication");
    return Multiplication{std::move(m2)};
}

Cochain differential(const Multiplication& m, const Cochain& x) {
    return g_bracket(m.m2, x);
}

Cochain cup(const Multiplication& m, const Cochain& x, const Cochain& y) {
    Scalar sg = sign_pow(x.handle()->field(), x.total_deg() - 1);
    return brace(m.m2, {x, y}).scaled(sg);
}

Cochain gerstenhaber_square(const Cochain& x) {
    if (x.handle()->field().characteristic() != 2 && x.total_deg() % 2 != 0)
        throw math_error("Gerstenhaber square needs char 2 or even total degree");
    return brace(x, {x});
}

Cochain circle(const OperadIdeal& ideal, const Cochain& x, const Cochain& y) {
    if (!ideal.contains(x) || !ideal.contains(y))
        throw math_error("circle product: input not in the ideal");
    return brace(x, {y});
}

/* ------------------------ associative ideal check ----------------------- */

namespace {

std::vector<Cochain> elementary_all(const HandlePtr& h, int arity, bool ideal_only,
                                    const OperadIdeal& ideal) {
    std::vector<Cochain> out;
    if (h->kind() == OperadHandle::Kind::Generic) {
        const GradedSpace& sp = h->op().space(arity);
        for (int i = 0; i < sp.dim(); ++i) {
            Cochain c = elementary_generic(h, arity, sp.degree(i), i);
            if (!ideal_only || ideal.contains(c)) out.push_back(std::move(c));
        }
        return out;
    }
    const GradedSpace& A = h->alg_space();
    const GradedSpace& M = h->mod_space();
    int mp_max = h->kind() == OperadHandle::Kind::LinEndo && arity >= 1 ? arity - 1 : -1;
    for (int mp = -1; mp <= mp_max; ++mp) {
        std::vector<int> in(arity, 0);
        bool done = arity == 0 && mp >= 0; // no arity-0 module keys
        while (!done) {
            long s = 0;
            bool ok = true;
            for (int j = 0; j < arity && ok; ++j) {
                const GradedSpace& sp = j == mp ? M : A;
                if (in[j] >= sp.dim()) { ok = false; break; }
                s += sp.degree(in[j]) - 1;
            }
            if (ok) {
                const GradedSpace& osp = mp >= 0 ? M : A;
                for (int o = 0; o < osp.dim(); ++o) {
                    int q = (int)(osp.degree(o) - 1 - s) - arity + 1;
                    EKey k{mp, in, o};
                    Cochain c = elementary_cochain(h, arity, q, k);
                    if (!ideal_only || ideal.contains(c)) out.push_back(std::move(c));
                }
            }
            /* odometer over mixed radices */
            int j = arity - 1;
            while (j >= 0) {
                const GradedSpace& sp = j == mp ? M : A;
                if (++in[j] < sp.dim()) break;
                in[j] = 0;
                --j;
            }
            if (j < 0) done = true;
            if (arity == 0) done = true;
        }
        if (arity == 0) break; // mp loop is irrelevant at arity 0
    }
    return out;
}

} // namespace

AssociativityCheck is_associative_ideal(const OperadIdeal& ideal, int max_arity) {
    const HandlePtr& h = ideal.parent;
    bool generic = h->kind() == OperadHandle::Kind::Generic;
    int cap = generic ? std::min(max_arity, h->op().max_arity()) : max_arity;
    /* argument arity caps keep the Endo/LinEndo sweeps at desk scale; for
     * generic handles the carried range is the bound */
    int acap2 = generic ? cap : std::min(cap, 2);
    int acap3 = generic ? cap : 1;

    /* n = 2: x0{x1,x2} with both arguments in the ideal */
    for (int p0 = 2; p0 <= cap; ++p0) {
        auto base = elementary_all(h, p0, false, ideal);
        for (int p1 = 0; p1 <= acap2; ++p1) {
            auto args1 = elementary_all(h, p1, true, ideal);
            for (int p2 = 0; p2 <= acap2; ++p2) {
                if (generic && p0 + p1 + p2 - 2 > h->op().max_arity()) continue;
                auto args2 = elementary_all(h, p2, true, ideal);
                for (const auto& x0 : base)
                    for (const auto& x1 : args1)
                        for (const auto& x2 : args2) {
                            Cochain v = brace(x0, {x1, x2});
                            if (!v.is_zero())
                                return {false, IdealWitness{x0, x1, x2, v}};
                        }
            }
        }
    }
    /* n = 3: two ideal arguments, the third arbitrary */
    for (int p0 = 3; p0 <= cap; ++p0) {
        auto base = elementary_all(h, p0, false, ideal);
        for (int pa = 0; pa <= acap3; ++pa) {
            auto free_args = elementary_all(h, pa, false, ideal);
            for (int p1 = 0; p1 <= acap3; ++p1) {
                auto args1 = elementary_all(h, p1, true, ideal);
                for (int p2 = 0; p2 <= acap3; ++p2) {
                    if (generic && p0 + pa + p1 + p2 - 3 > h->op().max_arity()) continue;
                    auto args2 = elementary_all(h, p2, true, ideal);
                    for (const auto& x0 : base)
                        for (const auto& xf : free_args)
                            for (const auto& x1 : args1)
                                for (const auto& x2 : args2)
                                    for (int slot = 0; slot < 3; ++slot) {
                                        std::vector<Cochain> args;
                                        if (slot == 0) args = {xf, x1, x2};
                                        else if (slot == 1) args = {x1, xf, x2};
                                        else args = {x1, x2, xf};
                                        Cochain v = brace(x0, args);
                                        if (!v.is_zero())
                                            return {false, IdealWitness{x0, args[0], args[1], v}};
                                    }
                }
            }
        }
    }
    return {true, std::nullopt};
}

} // namespace gersten

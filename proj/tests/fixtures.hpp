#pragma once

/* Shared desk-scale fixtures: small graded algebras and bimodules. */

#include <random>

#include "gersten/braces.hpp"
#include "gersten/operad.hpp"

namespace fx {

using namespace gersten;

struct Algebra {
    GradedSpace A;
    HandlePtr h;  // Endo(A)
    Cochain m2;   // suspended multiplication
};

struct Pair {
    GradedSpace A, M;
    HandlePtr h;      // LinEndo(A, M)
    Cochain m2;       // m2^A + m2^M, suspended
    Cochain m2_alg;   // pure part
    Cochain m2_mod;   // ideal part
};

/* rows: (a, b, out, coef) as indices into A */
inline Cochain mult_cochain(HandlePtr h, const std::vector<std::tuple<int, int, int, long>>& rows) {
    std::vector<MapRow> mr;
    for (auto [a, b, o, c] : rows)
        mr.push_back(MapRow{-1, {a, b}, o, Scalar::from_int(h->field(), c)});
    return suspend_multilinear(h, 2, mr);
}

/* k[e1]/(e1^2), |e1| = 1, unital */
inline Algebra lambda(FieldSpec f) {
    Algebra r;
    r.A = GradedSpace::make(f, {{"e0", 0}, {"e1", 1}});
    r.h = OperadHandle::endomorphism(r.A);
    r.m2 = mult_cochain(r.h, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
    return r;
}

/* k[v]/(v^2), |v| = -1 */
inline Algebra lambda_neg(FieldSpec f) {
    Algebra r;
    r.A = GradedSpace::make(f, {{"u", 0}, {"v", -1}});
    r.h = OperadHandle::endomorphism(r.A);
    r.m2 = mult_cochain(r.h, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
    return r;
}

/* k[x]/(x^2), |x| = 2: the 2-sparse fixture */
inline Algebra dsparse(FieldSpec f) {
    Algebra r;
    r.A = GradedSpace::make(f, {{"u", 0}, {"x", 2}});
    r.h = OperadHandle::endomorphism(r.A);
    r.m2 = mult_cochain(r.h, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
    return r;
}

/* k[x]/(x^3), |x| = 2: 2-sparse, dim 3 */
inline Algebra dsparse3(FieldSpec f) {
    Algebra r;
    r.A = GradedSpace::make(f, {{"u", 0}, {"x", 2}, {"y", 4}});
    r.h = OperadHandle::endomorphism(r.A);
    r.m2 = mult_cochain(r.h, {{0, 0, 0, 1},
                              {0, 1, 1, 1},
                              {1, 0, 1, 1},
                              {0, 2, 2, 1},
                              {2, 0, 2, 1},
                              {1, 1, 2, 1}});
    return r;
}

/* the ground field as an algebra */
inline Algebra unit_alg(FieldSpec f) {
    Algebra r;
    r.A = GradedSpace::make(f, {{"e", 0}});
    r.h = OperadHandle::endomorphism(r.A);
    r.m2 = mult_cochain(r.h, {{0, 0, 0, 1}});
    return r;
}

/* path algebra of the A2 quiver: a, b idempotents in degree 0, the arrow n
 * in degree 1; noncommutative (an = n = nb, na = bn = 0) */
inline Algebra triangular(FieldSpec f) {
    Algebra r;
    r.A = GradedSpace::make(f, {{"a", 0}, {"b", 0}, {"n", 1}});
    r.h = OperadHandle::endomorphism(r.A);
    r.m2 = mult_cochain(r.h, {{0, 0, 0, 1}, {1, 1, 1, 1}, {0, 2, 2, 1}, {2, 1, 2, 1}});
    return r;
}

/* exterior algebra on two degree-1 generators, dim 4 */
inline Algebra exterior2(FieldSpec f) {
    Algebra r;
    r.A = GradedSpace::make(f, {{"1", 0}, {"x", 1}, {"y", 1}, {"xy", 2}});
    r.h = OperadHandle::endomorphism(r.A);
    r.m2 = mult_cochain(r.h, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1},
                              {0, 2, 2, 1}, {2, 0, 2, 1}, {0, 3, 3, 1}, {3, 0, 3, 1},
                              {1, 2, 3, 1}, {2, 1, 3, -1}});
    return r;
}

inline Cochain pair_m2(HandlePtr h,
                       const std::vector<std::tuple<int, int, int, long>>& alg_rows,
                       const std::vector<std::tuple<int, int, int, long>>& right_rows,
                       const std::vector<std::tuple<int, int, int, long>>& left_rows) {
    std::vector<MapRow> mr;
    for (auto [a, b, o, c] : alg_rows)
        mr.push_back(MapRow{-1, {a, b}, o, Scalar::from_int(h->field(), c)});
    for (auto [m, a, o, c] : right_rows) // M (x) A -> M
        mr.push_back(MapRow{0, {m, a}, o, Scalar::from_int(h->field(), c)});
    for (auto [a, m, o, c] : left_rows)  // A (x) M -> M
        mr.push_back(MapRow{1, {a, m}, o, Scalar::from_int(h->field(), c)});
    return suspend_multilinear(h, 2, mr);
}

/* M = A as the diagonal bimodule */
inline Pair diagonal_pair(const Algebra& base,
                          const std::vector<std::tuple<int, int, int, long>>& rows) {
    Pair r;
    r.A = base.A;
    r.M = base.A;
    r.h = OperadHandle::linear_endomorphism(r.A, r.M);
    r.m2 = pair_m2(r.h, rows, rows, rows);
    r.m2_alg = r.m2.pure_part();
    r.m2_mod = r.m2.ideal_part();
    return r;
}

inline std::vector<std::tuple<int, int, int, long>> lambda_rows() {
    return {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}};
}

inline Pair lambda_diagonal(FieldSpec f) { return diagonal_pair(lambda(f), lambda_rows()); }
inline Pair lambda_neg_diagonal(FieldSpec f) { return diagonal_pair(lambda_neg(f), lambda_rows()); }
inline Pair dsparse_diagonal(FieldSpec f) { return diagonal_pair(dsparse(f), lambda_rows()); }

/* A = Lambda, M = Lambda with the left action of e1 killed: a valid but
 * non-symmetric bimodule */
inline Pair asym_pair(FieldSpec f) {
    Pair r;
    Algebra base = lambda(f);
    r.A = base.A;
    r.M = GradedSpace::make(f, {{"f0", 0}, {"f1", 1}});
    r.h = OperadHandle::linear_endomorphism(r.A, r.M);
    r.m2 = pair_m2(r.h, lambda_rows(),
                   {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, // right = Lambda action
                   {{0, 0, 0, 1}, {0, 1, 1, 1}});              // left: e0 acts, e1 kills
    r.m2_alg = r.m2.pure_part();
    r.m2_mod = r.m2.ideal_part();
    return r;
}

/* M = 0 */
inline Pair zero_module_pair(const Algebra& base,
                             const std::vector<std::tuple<int, int, int, long>>& rows) {
    Pair r;
    r.A = base.A;
    r.M = GradedSpace::make(base.A.field(), {});
    r.h = OperadHandle::linear_endomorphism(r.A, r.M);
    r.m2 = pair_m2(r.h, rows, {}, {});
    r.m2_alg = r.m2.pure_part();
    r.m2_mod = r.m2.ideal_part();
    return r;
}

/* deterministic random scalars / cochains */
inline Scalar random_scalar(std::mt19937& rng, FieldSpec f, bool nonzero = false) {
    for (;;) {
        Scalar s = Scalar::zero(f);
        if (f.is_rational()) {
            std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
            s = Scalar::from_int(f, num(rng)) / Scalar::from_int(f, den(rng));
        } else {
            std::uniform_int_distribution<long long> d(0, (long long)f.p - 1);
            s = Scalar::from_int(f, d(rng));
        }
        if (!nonzero || !s.is_zero()) return s;
    }
}

inline Cochain random_cochain(std::mt19937& rng, HandlePtr h, int p, int q,
                              KeyFilter filt = KeyFilter::All) {
    auto keys = enumerate_keys(*h, p, q, filt);
    std::map<EKey, Scalar> t;
    for (const auto& k : keys) t[k] = random_scalar(rng, h->field());
    return Cochain::from_table(h, p, q, std::move(t));
}

inline std::vector<FieldSpec> three_fields() {
    return {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
}

} // namespace fx

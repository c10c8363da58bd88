#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gersten/braces.hpp"
#include "gersten/operad.hpp"

using namespace gersten;

namespace {

/* E(V) as a structure-constant operad with plain Koszul composition on the
 * unshifted space, plus a formal adjoined unit in arity 1; used to
 * cross-check the suspension sign regime against the shifted-space route. */
struct EndoAsGeneric {
    HandlePtr h;                                  // generic handle
    std::vector<std::map<EKey, int>> key_index;   // arity -> key -> basis index
    std::vector<std::vector<EKey>> keys;          // arity -> index -> key

    static EndoAsGeneric build(const GradedSpace& V, int max_arity) {
        EndoAsGeneric r;
        FieldSpec f = V.field();
        r.key_index.resize(max_arity + 1);
        r.keys.resize(max_arity + 1);
        std::vector<GradedSpace> spaces;
        for (int p = 0; p <= max_arity; ++p) {
            std::vector<std::pair<std::string, int>> basis;
            std::vector<int> in(p, 0);
            bool done = V.dim() == 0 && p > 0;
            while (!done) {
                long s = 0;
                for (int j = 0; j < p; ++j) s += V.degree(in[j]);
                for (int o = 0; o < V.dim(); ++o) {
                    EKey k{-1, in, o};
                    std::string lab = "k" + std::to_string(p) + "_";
                    for (int j : in) lab += std::to_string(j);
                    lab += "_" + std::to_string(o);
                    r.key_index[p][k] = (int)basis.size();
                    r.keys[p].push_back(k);
                    basis.push_back({lab, (int)(V.degree(o) - s)});
                }
                if (p == 0) break;
                int j = p - 1;
                while (j >= 0 && ++in[j] == V.dim()) { in[j] = 0; --j; }
                if (j < 0) done = true;
            }
            spaces.push_back(GradedSpace::make(f, basis));
        }

        FiniteOperad::CompTable comp;
        for (int p = 1; p <= max_arity; ++p)
            for (int q = 0; q <= max_arity; ++q) {
                if (p + q - 1 > max_arity) continue;
                for (int i = 1; i <= p; ++i) {
                    auto& cell = comp[{p, i, q}];
                    for (const EKey& kx : r.keys[p])
                        for (const EKey& ky : r.keys[q]) {
                            if (kx.in[i - 1] != ky.out) continue;
                            EKey k;
                            k.mod_pos = -1;
                            k.out = kx.out;
                            k.in.insert(k.in.end(), kx.in.begin(), kx.in.begin() + (i - 1));
                            k.in.insert(k.in.end(), ky.in.begin(), ky.in.end());
                            k.in.insert(k.in.end(), kx.in.begin() + i, kx.in.end());
                            long ydeg = spaces[q].degree(r.key_index[q].at(ky));
                            long crossing = 0;
                            for (int l = 0; l < i - 1; ++l) crossing += V.degree(kx.in[l]);
                            Scalar c = sign_pow(f, ydeg * crossing);
                            cell[{r.key_index[p].at(kx), r.key_index[q].at(ky)}] = {
                                {r.key_index[p + q - 1].at(k), c}};
                        }
                }
            }

        /* adjoin a formal unit (the identity of V is a sum of keys, not a
         * basis vector); FiniteOperad::make fills in its compositions */
        int id_idx = spaces[1].dim();
        auto basis1 = spaces[1].basis();
        basis1.push_back({"id", 0});
        spaces[1] = GradedSpace::make(f, basis1);
        comp[{1, 1, 1}][{id_idx, id_idx}] = {{id_idx, Scalar::one(f)}};

        r.h = OperadHandle::generic(FiniteOperad::make(f, std::move(spaces), id_idx, std::move(comp)));
        return r;
    }

    /* generic cochain matching an Endo cochain under desuspension */
    Cochain to_generic(const Cochain& endo) const {
        auto rows = desuspend_multilinear(endo);
        std::map<int, Scalar> coeffs;
        for (const auto& row : rows) {
            EKey k{-1, row.in, row.out};
            coeffs[key_index[endo.arity()].at(k)] = row.coef;
        }
        return Cochain::from_generic(h, endo.arity(), endo.vdeg(), std::move(coeffs));
    }
};

} // namespace

TEST_CASE("endomorphism handle components") {
    FieldSpec q = FieldSpec::rationals();
    auto lam = fx::lambda(q);
    CHECK(enumerate_keys(*lam.h, 2, 0, KeyFilter::All).size() == 3);
    /* degenerate space */
    auto zero = OperadHandle::endomorphism(GradedSpace::make(q, {}));
    CHECK(identity_cochain(zero).is_zero());
}

TEST_CASE("unit axioms survive suspension") {
    for (FieldSpec f : fx::three_fields()) {
        auto lam = fx::lambda(f);
        Cochain id = identity_cochain(lam.h);
        CHECK(compose_at(id, id, 1) == id);
        CHECK(compose_at(lam.m2, id, 1) == lam.m2);
        CHECK(compose_at(lam.m2, id, 2) == lam.m2);
        CHECK(compose_at(id, lam.m2, 1) == lam.m2);
        Cochain z = Cochain::zero(lam.h, 2, 1);
        CHECK(compose_at(lam.m2, z, 1).is_zero());
    }
}

TEST_CASE("composition respects nilpotency") {
    FieldSpec q = FieldSpec::rationals();
    auto lam = fx::lambda(q);
    Cochain c = compose_at(lam.m2, lam.m2, 1);
    for (const auto& [k, v] : c.table()) {
        CHECK(k.in != std::vector<int>{1, 1, 0}); // (e1 e1) e0 = 0
    }
    CHECK_THROWS_AS(compose_at(lam.m2, lam.m2, 3), Error);
}

TEST_CASE("linear endomorphism operad and its ideal") {
    FieldSpec q = FieldSpec::rationals();
    auto pr = fx::lambda_diagonal(q);
    CHECK(enumerate_keys(*pr.h, 2, 0, KeyFilter::Ideal).size() == 6);
    CHECK(enumerate_keys(*pr.h, 2, 0, KeyFilter::Pure).size() == 3);

    /* W = 0: ideal is zero, quotient is E(V) */
    auto z = fx::zero_module_pair(fx::lambda(q), fx::lambda_rows());
    CHECK(enumerate_keys(*z.h, 2, 0, KeyFilter::Ideal).empty());
    CHECK(z.m2.ideal_part().is_zero());

    /* ideal o ideal in incompatible slots vanishes */
    Cochain idM = id_mod_cochain(pr.h);
    Cochain m2mod = pr.m2.ideal_part();
    /* inserting a module-output cochain into an algebra slot gives zero */
    for (const auto& [k, v] : compose_at(pr.m2.pure_part(), idM, 1).table()) CHECK(false);
}

TEST_CASE("projection to the pure part is an operad map") {
    std::mt19937 rng(23);
    for (FieldSpec f : fx::three_fields()) {
        auto pr = fx::lambda_diagonal(f);
        for (int t = 0; t < 20; ++t) {
            std::uniform_int_distribution<int> ar(1, 3), vd(-1, 1);
            int p1 = ar(rng), p2 = ar(rng), q1 = vd(rng), q2 = vd(rng);
            Cochain x = fx::random_cochain(rng, pr.h, p1, q1);
            Cochain y = fx::random_cochain(rng, pr.h, p2, q2);
            std::uniform_int_distribution<int> slot(1, p1);
            int i = slot(rng);
            CHECK(compose_at(x, y, i).pure_part() ==
                  compose_at(x.pure_part(), y.pure_part(), i));
        }
        CHECK(identity_cochain(pr.h).pure_part() == id_alg_cochain(pr.h));
    }
}

TEST_CASE("associative ideal checks") {
    FieldSpec q = FieldSpec::rationals();
    auto pr = fx::lambda_diagonal(q);
    auto canonical = OperadIdeal::linendo_canonical(pr.h);
    auto res = is_associative_ideal(canonical, 3);
    CHECK(res.associative);

    auto lam = fx::lambda(q);
    auto whole = OperadIdeal::whole(lam.h);
    auto bad = is_associative_ideal(whole, 3);
    CHECK(!bad.associative);
    REQUIRE(bad.witness.has_value());
    CHECK(!brace(bad.witness->x0, {bad.witness->x1, bad.witness->x2}).is_zero());
}

TEST_CASE("generic operad validation") {
    FieldSpec q = FieldSpec::rationals();
    /* truncated associative operad: one operation per arity, degree 0 */
    std::vector<GradedSpace> spaces;
    for (int n = 0; n <= 3; ++n)
        spaces.push_back(GradedSpace::make(
            q, n == 0 ? std::vector<std::pair<std::string, int>>{}
                      : std::vector<std::pair<std::string, int>>{{"mu" + std::to_string(n), 0}}));
    FiniteOperad::CompTable comp;
    for (int p = 1; p <= 3; ++p)
        for (int qq = 1; qq <= 3; ++qq) {
            if (p + qq - 1 > 3) continue;
            for (int i = 1; i <= p; ++i) comp[{p, i, qq}][{0, 0}] = {{0, Scalar::one(q)}};
        }
    auto ass = FiniteOperad::make(q, spaces, 0, comp);
    CHECK(ass.max_arity() == 3);

    /* broken tables must be rejected */
    auto bad = comp;
    bad[{2, 1, 1}][{0, 0}] = {{0, Scalar::from_int(q, 2)}}; // mu2 o_1 id = 2 mu2
    CHECK_THROWS_AS(FiniteOperad::make(q, spaces, 0, bad), Error);
    auto bad2 = comp;
    bad2[{2, 1, 2}][{0, 5}] = {{0, Scalar::one(q)}}; // index out of range
    CHECK_THROWS_AS(FiniteOperad::make(q, spaces, 0, bad2), Error);

    /* zero sub-ideal of the associative operad */
    auto h = OperadHandle::generic(ass);
    auto zero_ideal = OperadIdeal::generic_sub(h, {{}, {}, {}, {}});
    CHECK(is_associative_ideal(zero_ideal, 3).associative);
}

TEST_CASE("suspension twist agrees with shifted-space composition") {
    std::mt19937 rng(31);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
        auto lam = fx::lambda(f);
        auto gen = EndoAsGeneric::build(lam.A, 4);
        std::uniform_int_distribution<int> ar(1, 2), vd(-1, 1);
        for (int t = 0; t < 40; ++t) {
            int p1 = ar(rng), p2 = ar(rng), q1 = vd(rng), q2 = vd(rng);
            Cochain x = fx::random_cochain(rng, lam.h, p1, q1);
            Cochain y = fx::random_cochain(rng, lam.h, p2, q2);
            std::uniform_int_distribution<int> slot(1, p1);
            int i = slot(rng);
            Cochain via_endo = gen.to_generic(compose_at(x, y, i));
            Cochain via_generic = compose_at(gen.to_generic(x), gen.to_generic(y), i);
            CHECK(via_endo == via_generic);
        }
        /* out-of-range rejection, not silent truncation */
        Cochain a = fx::random_cochain(rng, lam.h, 2, 0);
        Cochain ga = gen.to_generic(a);
        Cochain gb = gen.to_generic(fx::random_cochain(rng, lam.h, 2, 1));
        Cochain big = compose_at(ga, gb, 1); // arity 3 <= 4, fine
        CHECK(big.arity() == 3);
        Cochain gc = gen.to_generic(fx::random_cochain(rng, lam.h, 2, 0));
        CHECK_THROWS_AS(compose_at(compose_at(big, gb, 1), gc, 1), Error);
    }
}

TEST_CASE("suspend/desuspend round trip") {
    std::mt19937 rng(37);
    auto pr = fx::asym_pair(FieldSpec::rationals());
    for (int t = 0; t < 20; ++t) {
        std::uniform_int_distribution<int> ar(0, 3), vd(-2, 1);
        int p = ar(rng), q = vd(rng);
        Cochain x = fx::random_cochain(rng, pr.h, p, q);
        if (x.is_zero()) continue;
        auto rows = desuspend_multilinear(x);
        CHECK(suspend_multilinear(pr.h, p, rows) == x);
    }
}

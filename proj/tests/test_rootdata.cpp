#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wsf/context.hpp"
#include "wsf/modchar.hpp"
#include "wsf/roots.hpp"
#include "wsf/weyl.hpp"

using namespace wsf;

namespace {
auto inv = [](const RatFunc& x) { return x.pow(-1); };
}

TEST_CASE("build_case derived ranks") {
    auto s31 = build_case(FieldKind::Split, 3, 1);
    CHECK(s31.kind == CaseKind::Split);
    CHECK(s31.r == 1);
    CHECK(s31.rprime == 2);
    CHECK(s31.n_minus == 3);
    CHECK(s31.m_minus == 1);

    auto i42 = build_case(FieldKind::Inert, 4, 2);
    CHECK(i42.kind == CaseKind::InertEven);
    CHECK(i42.r == 1);
    CHECK(i42.n_minus == 2);
    CHECK(i42.n_plus == 2);
    CHECK(i42.m_minus == 1);
    CHECK(i42.m_plus == 1);

    auto i31 = build_case(FieldKind::Inert, 3, 1);
    CHECK(i31.kind == CaseKind::InertOdd);
    CHECK(i31.r == 1);
    CHECK(i31.n_minus == 1);
    CHECK(i31.n_plus == 2);
    CHECK(i31.m_minus == 0);
    CHECK(i31.m_plus == 1);

    CHECK_THROWS_AS(build_case(FieldKind::Split, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_case(FieldKind::Split, 1, 3), std::invalid_argument);
}

TEST_CASE("weyl_elements enumerates the group once") {
    auto s3 = build_case(FieldKind::Split, 3, 1);
    CHECK(weyl_elements(s3, GroupTag::V).size() == 6);

    auto i4 = build_case(FieldKind::Inert, 4, 2);
    CHECK(weyl_elements(i4, GroupTag::V).size() == 8);

    auto i3 = build_case(FieldKind::Inert, 3, 1);
    CHECK(weyl_elements(i3, GroupTag::V).size() == 2);

    // identity and longest element are present; w0 is an involution
    for (auto cs : {s3, i4, i3}) {
        auto all = weyl_elements(cs, GroupTag::V);
        auto w0 = weyl_longest(cs, GroupTag::V);
        bool has_id = false, has_w0 = false;
        for (const auto& w : all) {
            if (w.is_identity()) has_id = true;
            if (w == w0) has_w0 = true;
        }
        CHECK(has_id);
        CHECK(has_w0);
        CHECK((w0 * w0).is_identity());
    }
}

TEST_CASE("weyl_act on character tuples") {
    auto cs = build_case(FieldKind::Split, 2, 2);
    auto ctx = symbolic_context(cs);
    WeylElement swap = WeylElement::identity(2, GroupTag::V);
    swap.perm = {1, 0};
    auto out = weyl_act(swap, ctx.chi, inv);
    CHECK(out[0] == ctx.chi[1]);
    CHECK(out[1] == ctx.chi[0]);

    auto ci = build_case(FieldKind::Inert, 3, 1);
    auto ctxi = symbolic_context(ci);
    WeylElement flip = WeylElement::identity(1, GroupTag::V);
    flip.signs = {-1};
    auto outi = weyl_act(flip, ctxi.chi, inv);
    CHECK(outi[0] == ctxi.chi[0].pow(-1));

    WeylElement id = WeylElement::identity(2, GroupTag::V);
    CHECK(weyl_act(id, ctx.chi, inv) == ctx.chi);
}

TEST_CASE("weyl composition is a group action") {
    auto cs = build_case(FieldKind::Inert, 6, 2);
    auto ctx = symbolic_context(cs);
    auto all = weyl_elements(cs, GroupTag::V);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 25; ++t) {
        const auto& w1 = all[pick(rng)];
        const auto& w2 = all[pick(rng)];
        CHECK(weyl_act(w1 * w2, ctx.chi, inv) == weyl_act(w1, weyl_act(w2, ctx.chi, inv), inv));
        CHECK(weyl_act(w1.inverse(), weyl_act(w1, ctx.chi, inv), inv) == ctx.chi);
    }
}

TEST_CASE("longest element in the inert case inverts every coordinate") {
    for (auto [n, m] : {std::pair{4, 2}, {6, 2}, {3, 1}, {5, 3}}) {
        auto cs = build_case(FieldKind::Inert, n, m);
        auto ctx = symbolic_context(cs);
        auto w0 = weyl_longest(cs, GroupTag::V);
        auto img = weyl_act(w0, ctx.chi, inv);
        for (int i = 0; i < cs.n_minus; ++i) {
            bool found = false;
            for (int j = 0; j < cs.n_minus; ++j)
                if (img[j] == ctx.chi[i].pow(-1)) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("coroot pairings") {
    auto cs = build_case(FieldKind::Split, 3, 1);
    auto ctx = symbolic_context(cs);
    Root ab{RootForm::AminusB, 0, 1};
    CHECK(coroot_pairing(ctx.chi, ab, inv) == ctx.chi[0] * ctx.chi[1].pow(-1));

    auto ce = build_case(FieldKind::Inert, 4, 2);
    auto ctxe = symbolic_context(ce);
    Root two{RootForm::TwoA, 0, 0};
    CHECK(coroot_pairing(ctxe.chi, two, inv) == ctxe.chi[0]);

    auto co = build_case(FieldKind::Inert, 3, 1);
    auto ctxo = symbolic_context(co);
    Root sh{RootForm::A, 0, 0};
    CHECK(coroot_pairing(ctxo.chi, sh, inv) == ctxo.chi[0] * ctxo.chi[0]);
}

TEST_CASE("coroot pairing is Weyl equivariant") {
    for (auto fk : {FieldKind::Split, FieldKind::Inert}) {
        for (auto [n, m] : {std::pair{3, 1}, {2, 2}, {6, 2}, {5, 3}}) {
            if (fk == FieldKind::Split && n > 3) continue;
            if (fk == FieldKind::Inert && (n - m) % 2 != 0) continue;
            auto cs = build_case(fk, n, m);
            auto ctx = symbolic_context(cs);
            auto roots = positive_nd_roots(cs, GroupTag::V);
            for (const auto& w : weyl_elements(cs, GroupTag::V)) {
                auto wchi = weyl_act(w, ctx.chi, inv);
                for (const auto& r : roots) {
                    auto [r2, sgn] =
                        classify_root_vector(weyl_act_cochar(w.inverse(), root_vector(r, w.rank())));
                    RatFunc lhs = coroot_pairing(wchi, r, inv);
                    RatFunc rhs = coroot_pairing(ctx.chi, r2, inv);
                    if (sgn < 0) rhs = rhs.pow(-1);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("dominance order") {
    auto cs = build_case(FieldKind::Split, 2, 2);
    CHECK(dominance_leq(cs, GroupTag::V, {1, 1}, {2, 0}));
    CHECK_FALSE(dominance_leq(cs, GroupTag::V, {2, 0}, {1, 1}));
    CHECK(dominance_leq(cs, GroupTag::V, {1, 0}, {1, 0}));

    auto ce = build_case(FieldKind::Inert, 4, 0);
    CHECK(dominance_leq(ce, GroupTag::V, {0, 0}, {1, 1}));   // e_2 coroot reachable
    auto codd = build_case(FieldKind::Inert, 5, 1);
    CHECK(dominance_leq(codd, GroupTag::V, {0, 0}, {1, 1})); // 2e_2 needs even total
    CHECK_FALSE(dominance_leq(codd, GroupTag::V, {0, 0}, {1, 0}));
}

TEST_CASE("project_lambda_X") {
    auto cs = build_case(FieldKind::Split, 3, 1);
    CHECK(project_lambda_X(cs, {{2, 1, 0}, {1}}) == std::vector<int>{2, 0, 0});
    CHECK(project_lambda_X(cs, {{2, 1, 0}, {0}}) == std::vector<int>{2, 1, 0});

    auto c22 = build_case(FieldKind::Split, 2, 2);
    CHECK(project_lambda_X(c22, {{1, 0}, {0, -1}}) == std::vector<int>{1, 1});

    CHECK_THROWS_AS(project_lambda_X(cs, {{0, 1, 2}, {0}}), std::domain_error);
}

TEST_CASE("modular character examples") {
    auto cs = build_case(FieldKind::Split, 3, 1);
    CHECK(delta_v_exponent(cs, DeltaSel::B_J, {{0, 0, 0}, {1}}) == -2);
    CHECK(delta_v_exponent(cs, DeltaSel::B_V, {{0, 0, 0}, {0}}) == 0);
    CHECK(delta_v_exponent(cs, DeltaSel::B_J, {{0, 0, 0}, {0}}) == 0);

    auto c2 = build_case(FieldKind::Split, 2, 2);
    CHECK(delta_v_exponent(c2, DeltaSel::B_V, {{1, 0}, {0, 0}}) == -2);
}

TEST_CASE("delta_B_plus factors through w0 on the V side") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-3, 3);
    for (auto fk : {FieldKind::Split, FieldKind::Inert}) {
        for (auto [n, m] : {std::pair{3, 1}, {4, 2}, {2, 2}}) {
            if ((n - m) % 2 != 0) continue;
            auto cs = build_case(fk, n, m);
            for (int t = 0; t < 50; ++t) {
                Cocharacter lam;
                lam.lambda_V.resize(cs.n_minus);
                lam.lambda_W.resize(cs.m_minus);
                for (auto& x : lam.lambda_V) x = d(rng);
                for (auto& x : lam.lambda_W) x = d(rng);
                Cocharacter w0lam = lam;
                w0lam.lambda_V = weyl_act_cochar(weyl_longest(cs, GroupTag::V), lam.lambda_V);
                CHECK(delta_v_exponent(cs, DeltaSel::B_plus, lam) ==
                      delta_v_exponent(cs, DeltaSel::B_V, w0lam) +
                          delta_v_exponent(cs, DeltaSel::B_W, lam));
            }
        }
    }
}

TEST_CASE("half-density identity on Lambda_r") {
    // delta_{B_V}^{1/2} delta_{B_r}^{1/2} delta_{P(X)}^{1/2} delta_P^{-1} = 1
    for (auto fk : {FieldKind::Split, FieldKind::Inert}) {
        for (auto [n, m] : {std::pair{3, 1}, {4, 2}, {5, 1}, {6, 2}}) {
            if ((n - m) % 2 != 0) continue;
            auto cs = build_case(fk, n, m);
            const int dim = cs.split() ? 2 * cs.r : cs.r;
            std::vector<int> lam(dim, 0);
            // iterate the box |entries| <= 3
            long total = 1;
            for (int i = 0; i < dim; ++i) total *= 7;
            for (long code = 0; code < total; ++code) {
                long c0 = code;
                for (int i = 0; i < dim; ++i) {
                    lam[i] = static_cast<int>(c0 % 7) - 3;
                    c0 /= 7;
                }
                Cocharacter emb{embed_lambda_r(cs, lam), std::vector<int>(cs.m_minus, 0)};
                long e = delta_v_exponent(cs, DeltaSel::B_V, emb) / 2 +
                         delta_r_v_exponent(cs, DeltaSel::B_r, lam) / 2 +
                         delta_r_v_exponent(cs, DeltaSel::P_X, lam) / 2 -
                         delta_r_v_exponent(cs, DeltaSel::P, lam);
                CHECK(e == 0);
            }
        }
    }
}

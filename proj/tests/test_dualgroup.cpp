#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wsf/reps.hpp"

using namespace wsf;

namespace {

// Collects lambda partitions (dominant, nonnegative) with at most r parts and
// given total size.
void partitions_of(int total, int r, int maxpart, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int p = std::min(total, maxpart); p >= 0; --p) {
        cur.push_back(p);
        partitions_of(total - p, r, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> dominant_weights_up_to(int D, int r) {
    std::vector<std::vector<int>> out;
    for (int d = 0; d <= D; ++d) {
        std::vector<int> cur;
        partitions_of(d, r, d, cur, out);
    }
    return out;
}

// Symplectic pairing of basis lines of C^n (x) C^m (+) C^n (x) C^m
// (1-based index math; returns an integer coefficient).
int symp_pair(int n, int m, int c1, int i1, int j1, int c2, int i2, int j2) {
    if (c1 == c2) return 0;
    auto half = [&](int i, int k, int j, int l) {
        // (t e_i J_n^{-1} e_k)(t e_j J_m^{-1} e_l)
        if (k != n + 1 - i || l != m + 1 - j) return 0;
        int s = ((k - 1) + (l - 1)) % 2 == 0 ? 1 : -1;
        return s;
    };
    if (c1 == 0) return half(i1, i2, j1, j2);
    return -half(i2, i1, j2, j1);
}

} // namespace

TEST_CASE("inert diagonal completion resolved by the Satake identities") {
    CHECK(resolve_inert_filling() == InertFilling::Ones);
    CHECK(inert_filling_candidate_ok(InertFilling::Ones));
    CHECK_FALSE(inert_filling_candidate_ok(InertFilling::SymmetricInverse));
}

TEST_CASE("star involution") {
    auto cs = build_case(FieldKind::Split, 2, 2);
    auto ctx = symbolic_context(cs);
    std::vector<RatFunc> d = {ctx.chi[0], ctx.chi[1]};
    auto sd = star_diag(d);
    CHECK(sd[0] == ctx.chi[1].pow(-1));
    CHECK(sd[1] == ctx.chi[0].pow(-1));
    CHECK(star_diag(star_diag(d)) == d);

    auto cs4 = build_case(FieldKind::Split, 4, 2);
    auto ctx4 = symbolic_context(cs4);
    SatakeG<RatFunc> g{2, false, {ctx4.chi[0], ctx4.chi[1]}, {ctx4.chi[2], ctx4.chi[3]}};
    auto ss = star(star(g));
    CHECK(ss.A == g.A);
    CHECK(ss.B == g.B);
}

TEST_CASE("twisted tensor dimensions and small blocks") {
    auto cs = build_case(FieldKind::Split, 2, 2);
    auto ctx = symbolic_context(cs);
    SatakeG<RatFunc> s2{2, false, {ctx.chi[0], ctx.chi[1]}, {ctx.chi[0], ctx.chi[1]}};
    SatakeG<RatFunc> s3{3, false, {ctx.one, ctx.one, ctx.one}, {ctx.one, ctx.one, ctx.one}};
    CHECK(rep_tensor_I(s2, s3).dim == 12);

    // split 1x1 blocks: (A,A*) (x) (B,B*) = diag(ab, a^{-1}b^{-1})
    auto c11 = build_case(FieldKind::Split, 1, 1);
    auto x11 = symbolic_context(c11);
    auto sv = satake_V(x11);
    auto sw = satake_W(x11);
    auto M = rep_tensor_I(rep_BC(sv), rep_BC(sw));
    REQUIRE(M.dim == 2);
    CHECK(M.w[0] == x11.chi[0] * x11.eta[0]);
    CHECK(M.w[1] == x11.chi[0].pow(-1) * x11.eta[0].pow(-1));
    CHECK(M.to == std::vector<int>{0, 1});

    // inert 1x1 with swap: det(1 - X M) has only even X-powers
    auto ci = build_case(FieldKind::Inert, 3, 1);
    auto xi = symbolic_context(ci);
    SatakeG<RatFunc> a{1, true, {xi.chi[0]}, {xi.one}};
    SatakeG<RatFunc> b{1, true, {xi.one}, {xi.chi[0]}};
    auto Mi = rep_tensor_I(a, b);
    RatFunc f = l_factor_from_rep(xi, Mi);
    for (const auto& [e, cf] : f.num().terms()) {
        (void)cf;
        CHECK(e[xi.vt.iX()] % 2 == 0);
    }
}

TEST_CASE("Frobenius wiring: rep of the squared element") {
    auto ci = build_case(FieldKind::Inert, 4, 2);
    auto xi = symbolic_context(ci);
    SatakeG<RatFunc> s{2, true, {xi.chi[0], xi.chi[1]}, {xi.eta[0], xi.one}};
    SatakeG<RatFunc> t{1, true, {xi.eta[0]}, {xi.chi[1]}};
    auto M = rep_tensor_I(s, t);
    // (S.Fr)^2 = (S c(S), id) with c the factor swap
    SatakeG<RatFunc> s2{2, false, {s.A[0] * s.B[0], s.A[1] * s.B[1]},
                        {s.B[0] * s.A[0], s.B[1] * s.A[1]}};
    SatakeG<RatFunc> t2{1, false, {t.A[0] * t.B[0]}, {t.B[0] * t.A[0]}};
    auto M2 = rep_tensor_I_free(s2, t2);
    auto MM = M * M;
    CHECK(MM.to == M2.to);
    for (int j = 0; j < MM.dim; ++j) CHECK(MM.w[j] == M2.w[j]);
}

TEST_CASE("identity-component multiplicativity") {
    auto cs = build_case(FieldKind::Split, 3, 3);
    auto ctx = symbolic_context(cs);
    std::mt19937_64 rng(5);
    auto rnd = [&]() {
        std::uniform_int_distribution<int> d(0, 2);
        return ctx.chi[d(rng)] * ctx.eta[d(rng)].pow(d(rng) - 1);
    };
    for (int trial = 0; trial < 5; ++trial) {
        SatakeG<RatFunc> a{2, false, {rnd(), rnd()}, {rnd(), rnd()}};
        SatakeG<RatFunc> b{2, false, {rnd(), rnd()}, {rnd(), rnd()}};
        SatakeG<RatFunc> c{3, false, {rnd(), rnd(), rnd()}, {rnd(), rnd(), rnd()}};
        SatakeG<RatFunc> ab{2, false,
                            {a.A[0] * b.A[0], a.A[1] * b.A[1]},
                            {a.B[0] * b.B[0], a.B[1] * b.B[1]}};
        auto lhs = rep_tensor_I_free(ab, c);
        auto rhs = rep_tensor_I_free(a, c) * rep_tensor_I_free(b, c);
        CHECK(lhs.to == rhs.to);
        for (int j = 0; j < lhs.dim; ++j) CHECK(lhs.w[j] == rhs.w[j]);
    }
}

TEST_CASE("Rankin-Selberg representation and the isotropic subspaces") {
    auto c31 = build_case(FieldKind::Split, 3, 1);
    auto x31 = symbolic_context(c31);
    CHECK(rep_R_mu(x31, satake_V(x31), satake_W(x31)).dim == 6);
    CHECK(v_minus_indices(3, 1, c31.rprime).size() == 2);

    auto ci = build_case(FieldKind::Inert, 4, 2);
    auto xi = symbolic_context(ci);
    CHECK_THROWS_AS(y_lagrangian_indices(xi), std::domain_error);

    // Y is Lagrangian: dimension nm and isotropic
    for (auto [n, m] : {std::pair{2, 2}, {3, 1}, {4, 2}, {4, 4}}) {
        auto cs = build_case(FieldKind::Split, n, m);
        auto ctx = symbolic_context(cs);
        auto y = y_lagrangian_indices(ctx);
        CHECK(static_cast<int>(y.size()) == n * m);
        const int nm = n * m;
        for (int a : y)
            for (int b : y) {
                int c1 = a / nm, i1 = (a % nm) / m + 1, j1 = (a % nm) % m + 1;
                int c2 = b / nm, i2 = (b % nm) / m + 1, j2 = (b % nm) % m + 1;
                CHECK(symp_pair(n, m, c1, i1, j1, c2, i2, j2) == 0);
            }
    }
}

TEST_CASE("torus elements preserve the symplectic pairing") {
    auto cs = build_case(FieldKind::Split, 3, 2);
    auto ctx = symbolic_context(cs);
    auto sv = satake_V(ctx);
    auto sw = satake_W(ctx);
    auto M = rep_tensor_I_free(rep_BC(sv), rep_BC(sw));
    const int n = cs.n, m = cs.m, nm = n * m;
    for (int a = 0; a < M.dim; ++a)
        for (int b = 0; b < M.dim; ++b) {
            int c1 = a / nm, i1 = (a % nm) / m + 1, j1 = (a % nm) % m + 1;
            int c2 = b / nm, i2 = (b % nm) / m + 1, j2 = (b % nm) % m + 1;
            int p = symp_pair(n, m, c1, i1, j1, c2, i2, j2);
            int ia = M.to[a], ib = M.to[b];
            int d1 = ia / nm, k1 = (ia % nm) / m + 1, l1 = (ia % nm) % m + 1;
            int d2 = ib / nm, k2 = (ib % nm) / m + 1, l2 = (ib % nm) % m + 1;
            int q = symp_pair(n, m, d1, k1, l1, d2, k2, l2);
            RatFunc lhs = M.w[a] * M.w[b] * RatFunc::constant(ctx.one.arity(), q);
            RatFunc rhs = RatFunc::constant(ctx.one.arity(), p);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("Asai representation") {
    auto ci = build_case(FieldKind::Inert, 3, 1);
    auto xi = symbolic_context(ci);
    SatakeG<RatFunc> s{1, true, {xi.chi[0]}, {xi.one + xi.one}};
    auto modd = rep_asai(xi, s, 1);
    REQUIRE(modd.dim == 1);
    CHECK(modd.w[0] == -(xi.chi[0] * (xi.one + xi.one)));
    auto meven = rep_asai(xi, s, 0);
    CHECK(meven.w[0] == xi.chi[0] * (xi.one + xi.one));
}

TEST_CASE("d_quotient basics") {
    auto cs = build_case(FieldKind::Split, 2, 2);
    auto ctx = symbolic_context(cs);
    auto sv = satake_V(ctx);
    CHECK(d_quotient_U(ctx, sv, ParabolicSel::B) ==
          ctx.one - ctx.chi[1] * ctx.chi[0].pow(-1));
    CHECK(d_quotient_U(ctx, sv, ParabolicSel::G) == ctx.one);

    // partial fractions: sum over the Weyl group of 1/D is 1
    SatakeU<RatFunc> sv2 = sv;
    std::swap(sv2.d[0], sv2.d[1]);
    CHECK(d_quotient_U(ctx, sv, ParabolicSel::B).pow(-1) +
              d_quotient_U(ctx, sv2, ParabolicSel::B).pow(-1) ==
          ctx.one);
}

TEST_CASE("ch_lambda examples and the Weyl-sum definition") {
    auto cs = build_case(FieldKind::Split, 4, 2);
    auto ctx = symbolic_context(cs);
    SatakeG<RatFunc> s{2, false, {ctx.chi[0], ctx.chi[1]}, {ctx.chi[2], ctx.chi[3]}};
    CHECK(ch_lambda(ctx, s, {0, 0}) == ctx.one);
    CHECK(ch_lambda(ctx, s, {1, 0}) == ctx.chi[0] + ctx.chi[1]);
    CHECK(ch_lambda(ctx, s, {1, 1}) == ctx.chi[0] * ctx.chi[1]);
    CHECK_THROWS_AS(ch_lambda(ctx, s, {0, 1}), std::domain_error);

    // Weyl-sum route equals the Jacobi-Trudi route
    for (const auto& lam : dominant_weights_up_to(3, 2)) {
        CHECK(ch_lambda_weyl(ctx, s, lam) == ch_lambda(ctx, s, lam));
    }
    auto ci = build_case(FieldKind::Inert, 4, 0);
    auto xi = symbolic_context(ci);
    SatakeG<RatFunc> si{2, true, {xi.chi[0], xi.chi[1]}, {xi.one, xi.chi[0]}};
    for (const auto& lam : dominant_weights_up_to(3, 2)) {
        CHECK(ch_lambda_weyl(xi, si, lam) == ch_lambda(xi, si, lam));
    }
    // negative dominant weights via the determinant twist
    CHECK(ch_lambda(ctx, s, {0, -1}) ==
          (ctx.chi[0].pow(-1) + ctx.chi[1].pow(-1)));
}

TEST_CASE("l_factor_from_rep") {
    auto c11 = build_case(FieldKind::Split, 1, 1);
    auto x11 = symbolic_context(c11);

    MonoMat<RatFunc> zero = MonoMat<RatFunc>::identity(3, x11.one);
    for (auto& w : zero.w) w = RatFunc::zero(x11.one.arity());
    CHECK(det_one_minus(x11.X, zero, x11.one) == x11.one);

    auto M = rep_R_mu(x11, satake_V(x11), satake_W(x11));
    RatFunc expect = (x11.one - x11.X * x11.chi[0] * x11.eta[0] * x11.u.pow(-1)) *
                     (x11.one - x11.X * x11.chi[0].pow(-1) * x11.eta[0].pow(-1) * x11.u);
    CHECK(l_factor_from_rep(x11, M) == expect);
}

TEST_CASE("RL factorization against brute-force determinants") {
    for (auto [fk, n, m] : {std::tuple{FieldKind::Split, 3, 1}, {FieldKind::Split, 4, 2},
                            {FieldKind::Inert, 4, 2}, {FieldKind::Inert, 3, 1},
                            {FieldKind::Inert, 4, 4}}) {
        auto cs = build_case(fk, n, m);
        auto ctx = symbolic_context(cs);
        auto M = rep_R_mu(ctx, satake_V(ctx), satake_W(ctx));
        RatFunc cyc = l_factor_from_rep(ctx, M);
        RFMatrix dense(M.dim, M.dim, RatFunc::zero(ctx.one.arity()));
        for (int j = 0; j < M.dim; ++j) dense(M.to[j], j) = ctx.X * M.w[j];
        for (int j = 0; j < M.dim; ++j) dense(j, j) = dense(j, j) + ctx.one;
        for (int j = 0; j < M.dim; ++j)
            for (int k = 0; k < M.dim; ++k)
                if (j != k) dense(j, k) = -dense(j, k);
        // dense = 1 - X*M entrywise with signs: rebuild cleanly
        RFMatrix dm(M.dim, M.dim, RatFunc::zero(ctx.one.arity()));
        for (int j = 0; j < M.dim; ++j) dm(M.to[j], j) = -(ctx.X * M.w[j]);
        for (int j = 0; j < M.dim; ++j) dm(j, j) = dm(j, j) + ctx.one;
        CHECK(rf_det(dm) == cyc);
    }
}

TEST_CASE("truncated Cauchy identity") {
    const int D = 4;
    for (int r = 1; r <= 3; ++r) {
        auto cs = build_case(FieldKind::Split, 3, 3);
        auto ctx = symbolic_context(cs);
        std::vector<RatFunc> a(ctx.chi.begin(), ctx.chi.begin() + r);
        std::vector<RatFunc> b(ctx.eta.begin(), ctx.eta.begin() + r);
        RatFunc sum = RatFunc::zero(ctx.one.arity());
        for (const auto& lam : dominant_weights_up_to(D, r)) {
            int tot = 0;
            for (int x : lam) tot += x;
            sum += ctx.X.pow(tot) * schur(a, lam, ctx.one) * schur(b, lam, ctx.one);
        }
        RatFunc det = ctx.one;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) det *= (ctx.one - ctx.X * a[i] * b[j]);
        RatFunc residue = sum * det - ctx.one;
        REQUIRE(residue.is_polynomial());
        for (const auto& [e, cf] : residue.num().terms()) {
            (void)cf;
            CHECK(e[ctx.vt.iX()] > D);
        }
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sepcore/kcd.hpp"

using namespace sepcore;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
double rel(const Matrix& a, const Matrix& b) { return (a - b).norm() / b.norm(); }

Matrix counterexample_S() {
    Matrix S(4, 4);
    S << .5, 0, 0, .5, 0, .5, -.5, 0, 0, -.5, .5, 0, .5, 0, 0, .5;
    return S;
}

Matrix invertible(int d, oracle::Rng& rng) {
    Matrix g = oracle::gaussian(d, d, rng);
    g.diagonal().array() += 3.0;
    return g;
}

// Σ1 - (1/(n p2)) Σ Y_i Σ2^{-1} Y_iᵀ and its column counterpart, relative.
std::pair<double, double> data_residuals(const Matrix& y, const SeparableFactor& k) {
    const int p1 = k.shape.p1, p2 = k.shape.p2;
    Matrix o1 = k.K1.inverse(), o2 = k.K2.inverse();
    Matrix a = Matrix::Zero(p1, p1), b = Matrix::Zero(p2, p2);
    for (int i = 0; i < y.rows(); ++i) {
        Matrix z(p1, p2);
        for (int c = 0; c < p2; ++c)
            for (int r = 0; r < p1; ++r) z(r, c) = y(i, c * p1 + r);
        a += z * o2 * z.transpose();
        b += z.transpose() * o1 * z;
    }
    a /= double(y.rows()) * p2;
    b /= double(y.rows()) * p1;
    return {(a - k.K1).norm() / k.K1.norm(), (b - k.K2).norm() / k.K2.norm()};
}

}  // namespace

TEST_CASE("counterexample fixed point and core") {
    const Shape s(2, 2);
    KcdResult r = kcd::decompose(counterexample_S(), 2, s, RootKind::Cholesky);
    CHECK(max_abs(r.K.full() - 0.5 * Matrix::Identity(4, 4)) < 1e-8);
    Matrix C(4, 4);
    C << 1, 0, 0, 1, 0, 1, -1, 0, 0, -1, 1, 0, 1, 0, 0, 1;
    CHECK(max_abs(r.C - C) < 1e-8);
    CHECK(r.converged);

    CoreResult c = kcd::core(counterexample_S(), r.K, RootKind::Cholesky);
    CHECK(max_abs(c.C - C) < 1e-8);
}

TEST_CASE("separable input is its own Kronecker component") {
    oracle::Rng rng(21);
    for (Shape s : {Shape(2, 3), Shape(3, 3), Shape(4, 2)}) {
        Matrix S = oracle::kron(oracle::random_spd(s.p2, rng), oracle::random_spd(s.p1, rng));
        for (RootKind rk : {RootKind::Cholesky, RootKind::Symmetric}) {
            KcdResult r = kcd::decompose(S, 50, s, rk);
            CHECK(rel(r.K.full(), S) < 1e-8);
            CHECK(max_abs(r.C - Matrix::Identity(s.p(), s.p())) < 1e-8);
        }
    }
}

TEST_CASE("flip-flop equivariance under Kronecker transforms") {
    oracle::Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        const Shape s = t % 2 ? Shape(2, 3) : Shape(4, 4);
        Matrix sigma = oracle::random_spd(s.p(), rng);
        Matrix g = oracle::kron(invertible(s.p2, rng), invertible(s.p1, rng));
        Matrix k0 = kcd::kronecker_mle(sigma, s.p() + 2, s).K.full();
        Matrix gs = g * sigma * g.transpose();
        gs = (gs + gs.transpose()) / 2;
        Matrix k1 = kcd::kronecker_mle(gs, s.p() + 2, s).K.full();
        CHECK(rel(k1, g * k0 * g.transpose()) < 1e-7);
    }
}

TEST_CASE("objective trace is non-increasing and matches the direct objective") {
    oracle::Rng rng(23);
    const Shape s(3, 4);
    Matrix y = oracle::gaussian(20, s.p(), rng) * oracle::random_spd(s.p(), rng);
    Matrix S = y.transpose() * y / 20.0;
    FlipFlopConfig cfg;
    cfg.record_trace = true;
    MleResult r = kcd::kronecker_mle(S, 20, s, cfg);
    REQUIRE(r.converged);
    REQUIRE(r.objective_trace.size() >= 2);
    for (std::size_t i = 1; i < r.objective_trace.size(); ++i) {
        CHECK(r.objective_trace[i] <= r.objective_trace[i - 1] + 1e-12 * std::abs(r.objective_trace[i - 1]));
    }
    // tr(K^{-1}S) + log|K| from scratch
    Matrix K = oracle::kron(r.K.K2, r.K.K1);
    const double direct = (K.inverse() * S).trace() + std::log(oracle::det(K));
    CHECK(kcd::objective(r.K, S) == Catch::Approx(direct).epsilon(1e-10));
    CHECK(r.objective == Catch::Approx(direct).epsilon(1e-8));
}

TEST_CASE("converged factors satisfy both fixed-point equations") {
    oracle::Rng rng(24);
    for (Shape s : {Shape(3, 2), Shape(4, 4), Shape(5, 3)}) {
        const int n = 3 * s.p();
        Matrix y = oracle::gaussian(n, s.p(), rng) * oracle::random_spd(s.p(), rng);
        FlipFlopConfig cfg;
        MleResult r = kcd::kronecker_mle_data(y, s, cfg);
        REQUIRE(r.converged);
        auto [r1, r2] = data_residuals(y, r.K);
        CHECK(r1 <= 10 * cfg.rel_tol);
        CHECK(r2 <= 10 * cfg.rel_tol);
        auto [q1, q2] = kcd::fixed_point_residuals(r.K, y.transpose() * y / double(n));
        CHECK(q1 <= 10 * cfg.rel_tol);
        CHECK(q2 <= 10 * cfg.rel_tol);
    }
}

TEST_CASE("data and covariance forms agree") {
    oracle::Rng rng(25);
    const Shape s(3, 4);
    for (int n : {6, 40}) {
        Matrix y = oracle::gaussian(n, s.p(), rng);
        MleResult a = kcd::kronecker_mle_data(y, s);
        MleResult b = kcd::kronecker_mle(y.transpose() * y / double(n), n, s);
        CHECK(rel(a.K.full(), b.K.full()) < 1e-8);
    }
}

TEST_CASE("identification, root reconstruction and core constraints") {
    oracle::Rng rng(26);
    for (Shape s : {Shape(2, 3), Shape(4, 4), Shape(4, 2)}) {
        for (int n : {s.p() / 2 + 2, 3 * s.p()}) {
            Matrix y = oracle::gaussian(n, s.p(), rng) * oracle::random_spd(s.p(), rng);
            Matrix S = y.transpose() * y / double(n);
            for (RootKind rk : {RootKind::Cholesky, RootKind::Symmetric}) {
                KcdResult r = kcd::decompose(S, n, s, rk);
                REQUIRE(r.converged);
                const double g1 = std::pow(oracle::det(r.K.K1), 1.0 / s.p1);
                const double g2 = std::pow(oracle::det(r.K.K2), 1.0 / s.p2);
                CHECK(std::abs(g1 - g2) <= 1e-8 * g2);
                CHECK(rel(r.H * r.H.transpose(), r.K.full()) < 1e-8);
                if (rk == RootKind::Cholesky) CHECK(r.H.isLowerTriangular());
                if (rk == RootKind::Symmetric) CHECK(max_abs(r.H - r.H.transpose()) < 1e-12);
                // C is H^{-1} S H^{-T} computed directly
                Matrix hinv = r.H.inverse();
                CHECK(max_abs(r.C - hinv * S * hinv.transpose()) < 1e-8 * std::max(1.0, max_abs(r.C)));
                CHECK(std::abs(r.C.trace() - s.p()) <= 1e-6 * s.p());
                CHECK(max_abs(oracle::partial_trace_1(r.C, s.p1, s.p2) - s.p2 * Matrix::Identity(s.p1, s.p1)) < 1e-6);
                CHECK(max_abs(oracle::partial_trace_2(r.C, s.p1, s.p2) - s.p1 * Matrix::Identity(s.p2, s.p2)) < 1e-6);
                Spectrum sv = matcore::singular_values(oracle::rearrange(r.C, s.p1, s.p2));
                CHECK(std::abs(sv(0) - std::sqrt(double(s.p()))) < 1e-7);
                // k(C) = I
                MleResult kc = kcd::kronecker_mle(r.C, n, s);
                CHECK(max_abs(kc.K.full() - Matrix::Identity(s.p(), s.p())) < 1e-6);
            }
        }
    }
}

TEST_CASE("core spectrum does not depend on the separable component") {
    oracle::Rng rng(27);
    for (Shape s : {Shape(3, 3), Shape(2, 4)}) {
        const int n = 2 * s.p();
        Matrix y = oracle::gaussian(n, s.p(), rng);
        Matrix S0 = y.transpose() * y / double(n);
        for (int t = 0; t < 5; ++t) {
            Matrix h = oracle::kron(matcore::cholesky(oracle::random_spd(s.p2, rng)),
                                    matcore::cholesky(oracle::random_spd(s.p1, rng)));
            Matrix S1 = h * S0 * h.transpose();
            S1 = (S1 + S1.transpose()) / 2;
            for (RootKind rk : {RootKind::Cholesky, RootKind::Symmetric}) {
                Spectrum e0 = matcore::eigvals_sym(kcd::decompose(S0, n, s, rk).C);
                Spectrum e1 = matcore::eigvals_sym(kcd::decompose(S1, n, s, rk).C);
                CHECK((e0 - e1).norm() <= 1e-8 * e0.norm());
            }
        }
    }
}

TEST_CASE("existence condition and failure modes") {
    const Shape tall(4, 1);  // p1/p2 + p2/p1 = 4.25
    Matrix S = Matrix::Identity(4, 4);
    try {
        kcd::kronecker_mle(S, 4, tall);
        FAIL("expected InsufficientSamples");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InsufficientSamples);
    }
    CHECK_NOTHROW(kcd::kronecker_mle(S, 5, tall));
    CHECK_THROWS_AS(kcd::kronecker_mle(Matrix::Identity(5, 5), 10, Shape(2, 2)), Error);

    oracle::Rng rng(28);
    Matrix y = oracle::gaussian(30, 6, rng) * oracle::random_spd(6, rng);
    FlipFlopConfig one;
    one.max_iter = 1;
    MleResult r = kcd::kronecker_mle(y.transpose() * y / 30.0, 30, Shape(2, 3), one);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 1);
    CHECK(r.K.K1.allFinite());

    FlipFlopConfig bad;
    bad.max_iter = 0;
    CHECK_THROWS_AS(kcd::kronecker_mle(S, 10, Shape(2, 2), bad), Error);

    FlipFlopConfig user;
    user.init = FlipFlopConfig::Init::UserSupplied;
    user.init_K2 = oracle::random_spd(3, rng);
    MleResult a = kcd::kronecker_mle(y.transpose() * y / 30.0, 30, Shape(2, 3), user);
    MleResult b = kcd::kronecker_mle(y.transpose() * y / 30.0, 30, Shape(2, 3));
    CHECK(rel(a.K.full(), b.K.full()) < 1e-8);
}

TEST_CASE("rank-deficient sample covariance is accepted") {
    oracle::Rng rng(29);
    const Shape s(4, 4);
    Matrix y = oracle::gaussian(5, s.p(), rng);
    KcdResult r = kcd::decompose(y.transpose() * y / 5.0, 5, s);
    CHECK(r.converged);
    CHECK(std::abs(r.C.trace() - 16.0) < 1e-6 * 16);
    CHECK(matcore::numerical_rank(matcore::eigvals_sym(r.C).cwiseAbs()) <= 5);
}

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sepcore/generators.hpp"

using namespace sepcore;
using Catch::Approx;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Matrix factor(const Matrix& a, int i, int p1, int p2) {
    return Eigen::Map<const Matrix>(a.col(i).data(), p1, p2);
}

// Σ A_i A_iᵀ = p2 I and Σ A_iᵀ A_i = p1 I
double factor_constraint_error(const Matrix& a, int p1, int p2) {
    Matrix left = Matrix::Zero(p1, p1), right = Matrix::Zero(p2, p2);
    for (int i = 0; i < a.cols(); ++i) {
        Matrix ai = factor(a, i, p1, p2);
        left += ai * ai.transpose();
        right += ai.transpose() * ai;
    }
    return std::max(max_abs(left - p2 * Matrix::Identity(p1, p1)), max_abs(right - p1 * Matrix::Identity(p2, p2)));
}

double core_constraint_error(const Matrix& c, int p1, int p2) {
    return std::max(max_abs(oracle::partial_trace_1(c, p1, p2) - p2 * Matrix::Identity(p1, p1)),
                    max_abs(oracle::partial_trace_2(c, p1, p2) - p1 * Matrix::Identity(p2, p2)));
}

std::vector<double> sorted_desc(const Vector& v) {
    std::vector<double> out(v.data(), v.data() + v.size());
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace

TEST_CASE("rank feasibility trichotomy") {
    auto f = generators::rank_feasible(20, 20, 2);
    CHECK(f.kind == generators::Feasibility::Case::Zero);
    CHECK(f.construction == Construction::Square2);

    f = generators::rank_feasible(3, 2, 2);
    CHECK(f.kind == generators::Feasibility::Case::GcdSquared);
    CHECK(f.construction == Construction::Ladder2);
    CHECK(f.k == 2);
    CHECK(f.m == 1);

    f = generators::rank_feasible(4, 2, 2);
    CHECK(f.kind == generators::Feasibility::Case::GcdSquared);
    CHECK(f.construction == Construction::OrthoBlock);

    CHECK(generators::rank_feasible(2, 4, 2).construction == Construction::OrthoBlock);
    CHECK(generators::rank_feasible(6, 9, 2).construction == Construction::Ladder2);
    CHECK(generators::rank_feasible(36, 6, 6).construction == Construction::OrthoBlock);
    CHECK(generators::rank_feasible(5, 5, 3).kind == generators::Feasibility::Case::StrictInequality);
    CHECK(generators::rank_feasible(5, 2, 1).kind == generators::Feasibility::Case::Infeasible);
    CHECK(generators::rank_feasible(4, 3, 1).kind == generators::Feasibility::Case::Infeasible);
}

TEST_CASE("rank-r constructions satisfy the factor constraints") {
    oracle::Rng rng(41);
    struct Case {
        int p1, p2, r;
        Construction c;
    };
    for (Case k : {Case{4, 2, 2, Construction::OrthoBlock}, Case{2, 4, 2, Construction::OrthoBlock},
                   Case{6, 2, 3, Construction::OrthoBlock}, Case{3, 2, 2, Construction::Ladder2},
                   Case{2, 3, 2, Construction::Ladder2}, Case{6, 4, 2, Construction::Ladder2},
                   Case{4, 6, 2, Construction::Ladder2}, Case{5, 5, 2, Construction::Square2},
                   Case{1, 1, 2, Construction::Square2}}) {
        if (k.p1 == 1) continue;  // no room for two orthogonal directions
        CAPTURE(k.p1, k.p2, k.r, generators::construction_name(k.c));
        Matrix a = generators::make_rank_r_core(k.p1, k.p2, k.r, k.c, rng);
        REQUIRE(a.rows() == k.p1 * k.p2);
        REQUIRE(a.cols() == k.r);
        CHECK(factor_constraint_error(a, k.p1, k.p2) < 1e-9);
        CHECK(matcore::numerical_rank(matcore::singular_values(a)) == k.r);
        CHECK((a * a.transpose()).trace() == Approx(k.p1 * k.p2).epsilon(1e-12));
        CHECK(core_constraint_error(a * a.transpose(), k.p1, k.p2) < 1e-9);
    }
    Matrix lad = generators::make_rank_r_core(3, 2, 2, Construction::Ladder2, rng);
    CHECK(std::abs(lad.col(0).dot(lad.col(1))) < 1e-12);

    CHECK_THROWS_AS(generators::make_rank_r_core(5, 2, 2, Construction::OrthoBlock, rng), Error);
    CHECK_THROWS_AS(generators::make_rank_r_core(4, 3, 2, Construction::Square2, rng), Error);
    CHECK_THROWS_AS(generators::make_rank_r_core(5, 2, 2, Construction::Ladder2, rng), Error);
    try {
        generators::make_rank_r_core(4, 4, 3, Construction::Square2, rng);
        FAIL("expected IncompatibleParameters");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IncompatibleParameters);
    }
}

TEST_CASE("square construction stays full rank") {
    oracle::Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        Matrix a = generators::make_rank_r_core(2, 2, 2, Construction::Square2, rng);
        Matrix a1 = factor(a, 0, 2, 2), a2 = factor(a, 1, 2, 2);
        // A2 is never a multiple of A1
        const double cosang = std::abs(a.col(0).dot(a.col(1))) / (a.col(0).norm() * a.col(1).norm());
        CHECK(cosang < 1.0 - 1e-8);
        CHECK((a1 * a1.transpose() + a2 * a2.transpose() - 2 * Matrix::Identity(2, 2)).norm() < 1e-9);
    }
}

TEST_CASE("predicted spikes match the eigendecomposition") {
    oracle::Rng rng(43);
    const Shape s(4, 2);
    Matrix a = generators::make_rank_r_core(4, 2, 2, Construction::OrthoBlock, rng);
    Spectrum pred = generators::predicted_spikes(a, 0.5, Construction::OrthoBlock, s);
    CHECK(pred(0) == Approx(2.5));
    CHECK(pred(1) == Approx(2.5));
    for (int i = 2; i < 8; ++i) CHECK(pred(i) == 0.5);
    CHECK(max_abs(generators::predicted_spikes(a, 1.0, Construction::OrthoBlock, s) - Vector::Ones(8)) == 0.0);

    struct Case {
        int p1, p2, r;
        Construction c;
        double lambda;
    };
    for (Case k : {Case{4, 2, 2, Construction::OrthoBlock, 0.5}, Case{2, 6, 3, Construction::OrthoBlock, 0.2},
                   Case{3, 2, 2, Construction::Ladder2, 0.7}, Case{4, 6, 2, Construction::Ladder2, 0.4},
                   Case{3, 3, 2, Construction::Square2, 0.6}, Case{5, 5, 2, Construction::Square2, 0.1}}) {
        CAPTURE(k.p1, k.p2, generators::construction_name(k.c));
        const Shape sh(k.p1, k.p2);
        Matrix ak = generators::make_rank_r_core(k.p1, k.p2, k.r, k.c, rng);
        CoreModel m = CoreModel::partial_isotropy(sh, ak, k.lambda, k.c);
        REQUIRE(m.predicted_spikes.has_value());
        Matrix c = m.materialize();
        std::vector<double> eig = oracle::jacobi_eigenvalues(c);
        std::vector<double> pr = sorted_desc(*m.predicted_spikes);
        for (int i = 0; i < sh.p(); ++i) CHECK(pr[i] == Approx(eig[i]).margin(1e-8));
        CHECK(core_constraint_error(c, k.p1, k.p2) < 1e-8);
        CHECK(eig[0] >= 1.0 - 1e-8);
    }
}

TEST_CASE("rearrangement spectrum of orthoblock cores") {
    oracle::Rng rng(44);
    for (auto [p1, p2, r, lam] : {std::tuple{4, 2, 2, 0.5}, {6, 2, 3, 0.3}, {2, 6, 3, 0.8}}) {
        Matrix a = generators::make_rank_r_core(p1, p2, r, Construction::OrthoBlock, rng);
        Matrix c = CoreModel::partial_isotropy(Shape(p1, p2), a, lam).materialize();
        Spectrum sv = matcore::singular_values(oracle::rearrange(c, p1, p2));
        const double rp = std::sqrt(double(p1 * p2));
        CHECK(sv(0) == Approx(rp).epsilon(1e-10));
        const int m = std::min(p1 * p1, p2 * p2);
        for (int j = 1; j < m; ++j) CHECK(std::abs(sv(j) - (1 - lam) * rp) < 1e-8);
        for (int j = m; j < sv.size(); ++j) CHECK(sv(j) < 1e-8);
    }
}

TEST_CASE("core models") {
    oracle::Rng rng(45);
    const Shape s(2, 3);
    CHECK_THROWS_AS(CoreModel::explicit_core(s, Matrix::Identity(5, 5)), Error);
    Matrix a = generators::make_rank_r_core(2, 3, 2, Construction::Ladder2, rng);
    CHECK_THROWS_AS(CoreModel::partial_isotropy(s, a, 0.0), Error);
    Matrix dup(6, 2);
    dup << a.col(0), a.col(0);
    CHECK_THROWS_AS(CoreModel::partial_isotropy(s, dup, 0.5), Error);

    CoreModel pi = CoreModel::partial_isotropy(s, a, 0.25);
    CoreModel sh = CoreModel::shrunk(pi, 0.4);
    Matrix expect = 0.4 * pi.materialize() + 0.6 * Matrix::Identity(6, 6);
    CHECK(max_abs(sh.materialize() - expect) < 1e-15);
    CHECK(sh.describe().find("shrunk") != std::string::npos);
    CHECK_THROWS_AS(CoreModel::shrunk(pi, 1.5), Error);
}

TEST_CASE("random cores from spectra") {
    oracle::Rng rng(46);
    const Shape s(3, 4);
    Matrix c = generators::random_core(s, std::vector<double>(12, 2.5), rng);
    CHECK(max_abs(c - Matrix::Identity(12, 12)) < 1e-8);

    std::vector<double> hint = generators::preset_spectrum("paper-C2", 12);
    CHECK(hint.size() == 12);
    CHECK(hint.front() == 4.0);
    CHECK(hint.back() == 2.0);
    for (RootKind rk : {RootKind::Cholesky, RootKind::Symmetric}) {
        Matrix r = generators::random_core(s, hint, rng, rk);
        CHECK(r.trace() == Approx(12.0).epsilon(1e-10));
        CHECK(core_constraint_error(r, 3, 4) < 1e-7);
        CHECK(oracle::jacobi_eigenvalues(r)[0] >= 1.0 - 1e-8);
    }
    CHECK_THROWS_AS(generators::preset_spectrum("paper-C3", 12), Error);
    CHECK_THROWS_AS(generators::random_core(s, std::vector<double>(11, 1.0), rng), Error);
}

TEST_CASE("C1 preset recipe at p = 512 has a leading core eigenvalue near 3.9") {
    const Shape s(16, 32);
    for (std::uint64_t seed : {1u, 2u}) {
        oracle::Rng rng(seed);
        Matrix c = generators::random_core(s, generators::preset_spectrum("paper-C1", 512), rng);
        const double top = matcore::eigvals_sym(c)(0);
        CHECK(top == Approx(3.9).margin(0.3));
    }
}

TEST_CASE("shrinkage toward the identity core") {
    oracle::Rng rng(47);
    const Shape s(2, 3);
    Matrix c = generators::random_core(s, generators::preset_spectrum("paper-C1", 6), rng);
    CHECK(max_abs(generators::shrink_core(c, 0.0) - Matrix::Identity(6, 6)) == 0.0);
    CHECK(max_abs(generators::shrink_core(c, 1.0) - c) == 0.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 5; ++t) {
        const double w = u(rng);
        Matrix cw = generators::shrink_core(c, w);
        CHECK(max_abs(oracle::partial_trace_1(cw, 2, 3) - (w * oracle::partial_trace_1(c, 2, 3) + (1 - w) * 3 * Matrix::Identity(2, 2))) < 1e-12);
        CHECK(core_constraint_error(cw, 2, 3) < 1e-8);
    }
    CHECK_THROWS_AS(generators::shrink_core(c, -0.1), Error);
}

TEST_CASE("samplers") {
    SamplerSpec g;
    g.seed = 3;
    Matrix y = generators::sample_data(20000, Matrix::Identity(4, 4), g);
    Matrix S = generators::covariance_of(y, false);
    CHECK(max_abs(S - Matrix::Identity(4, 4)) < 5.0 / std::sqrt(20000.0));

    // E[S] = Σ over replicates, within 3 standard errors per entry
    oracle::Rng rng(48);
    Matrix sigma = oracle::random_spd(4, rng);
    Matrix root = matcore::cholesky(sigma);
    const int reps = 500;
    Matrix sum = Matrix::Zero(4, 4), sumsq = Matrix::Zero(4, 4);
    for (int r = 0; r < reps; ++r) {
        Matrix Sr = generators::covariance_of(generators::sample_data(8, 4, root, g, rng), false);
        sum += Sr;
        sumsq += Sr.cwiseProduct(Sr);
    }
    Matrix mean = sum / reps;
    Matrix se = ((sumsq / reps - mean.cwiseProduct(mean)) / (reps - 1)).cwiseSqrt();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::abs(mean(i, j) - sigma(i, j)) <= 3 * se(i, j));

    // standardized gamma: mean 0, variance 1, kurtosis 3 + 6/alpha
    SamplerSpec gam;
    gam.dist = SamplerSpec::Dist::GammaStd;
    gam.alpha = 4;
    gam.beta = 2;
    oracle::Rng grng(49);
    Matrix z = generators::sample_data(250000, 4, Matrix(), gam, grng);
    const double m1 = z.mean();
    const double m2 = z.array().square().mean();
    const double m4 = z.array().pow(4).mean();
    CHECK(std::abs(m1) < 0.01);
    CHECK(m2 == Approx(1.0).margin(0.01));
    CHECK(m4 / (m2 * m2) == Approx(3.0 + 6.0 / 4.0).margin(0.1));

    SamplerSpec t;
    t.dist = SamplerSpec::Dist::StudentT;
    t.nu = 6;
    oracle::Rng trng(50);
    Matrix zt = generators::sample_data(100000, 2, Matrix(), t, trng);
    CHECK(zt.array().square().mean() == Approx(6.0 / 4.0).margin(0.05));
    t.nu = 2;
    CHECK_THROWS_AS(generators::sample_data(10, 2, Matrix(), t, trng), Error);

    Matrix yc = generators::sample_data(50, Matrix::Identity(3, 3), g);
    Matrix centered = yc.rowwise() - yc.colwise().mean();
    CHECK(max_abs(generators::covariance_of(yc, true) - centered.transpose() * centered / 50.0) < 1e-14);

    CHECK(parse_dist("normal") == SamplerSpec::Dist::Gaussian);
    CHECK(parse_dist("student-t") == SamplerSpec::Dist::StudentT);
    CHECK_FALSE(parse_dist("cauchy").has_value());
}

TEST_CASE("Haar orthogonal matrices") {
    oracle::Rng rng(51);
    bool plus = false, minus = false;
    for (int t = 0; t < 50; ++t) {
        Matrix o = generators::haar_orthogonal(1, rng);
        CHECK(std::abs(o(0, 0)) == 1.0);
        (o(0, 0) > 0 ? plus : minus) = true;
    }
    CHECK(plus);
    CHECK(minus);
    Matrix o = generators::haar_orthogonal(7, rng);
    CHECK(max_abs(o.transpose() * o - Matrix::Identity(7, 7)) < 1e-10);

    Vector mean = Vector::Zero(3);
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) mean += generators::haar_orthogonal(3, rng).col(0);
    mean /= draws;
    // each coordinate has variance 1/3
    CHECK(mean.cwiseAbs().maxCoeff() < 5.0 * std::sqrt(1.0 / 3.0 / draws));
}

TEST_CASE("generation is reproducible from the seed") {
    for (int rep = 0; rep < 2; ++rep) {
        oracle::Rng a(77), b(77);
        CHECK(generators::haar_orthogonal(5, a) == generators::haar_orthogonal(5, b));
        CHECK(generators::make_rank_r_core(4, 4, 2, Construction::Square2, a) ==
              generators::make_rank_r_core(4, 4, 2, Construction::Square2, b));
        CHECK(generators::random_core(Shape(2, 2), {3, 2, 1, 1}, a) == generators::random_core(Shape(2, 2), {3, 2, 1, 1}, b));
    }
    SamplerSpec s;
    s.seed = 99;
    s.dist = SamplerSpec::Dist::GammaStd;
    CHECK(generators::sample_data(30, Matrix::Identity(6, 6), s) == generators::sample_data(30, Matrix::Identity(6, 6), s));
}

TEST_CASE("separable presets are identified") {
    for (const char* name : {"B1", "B2"}) {
        SeparableFactor k = generators::separable_preset(name, Shape(40, 20));
        const double g1 = matcore::logdet_spd(k.K1) / 40, g2 = matcore::logdet_spd(k.K2) / 20;
        CHECK(g1 == Approx(g2).margin(1e-10));
    }
    SeparableFactor b1 = generators::separable_preset("B1", Shape(4, 2));
    CHECK(b1.K1(0, 0) / b1.K1(3, 3) == Approx(4.0));
    CHECK(b1.K2(0, 0) / b1.K2(1, 1) == Approx(1.5));
    CHECK_THROWS_AS(generators::separable_preset("B3", Shape(4, 2)), Error);
}

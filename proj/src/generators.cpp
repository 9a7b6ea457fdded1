#include "sepcore/generators.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace sepcore {

CoreModel CoreModel::explicit_core(const Shape& s, Matrix c) {
    if (c.rows() != s.p() || c.cols() != s.p()) {
        throw Error(ErrorCode::DimensionMismatch, "explicit core does not match shape");
    }
    CoreModel m;
    m.shape = s;
    m.kind = Kind::Explicit;
    m.C = std::move(c);
    return m;
}

CoreModel CoreModel::partial_isotropy(const Shape& s, Matrix a, double lambda,
                                      std::optional<Construction> construction) {
    if (a.rows() != s.p()) throw Error(ErrorCode::DimensionMismatch, "A has wrong row count");
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "lambda must lie in (0, 1]");
    }
    if (matcore::numerical_rank(matcore::singular_values(a)) < a.cols()) {
        throw Error(ErrorCode::IncompatibleParameters, "A must have full column rank");
    }
    CoreModel m;
    m.shape = s;
    m.kind = Kind::PartialIsotropy;
    m.lambda = lambda;
    if (construction) m.predicted_spikes = generators::predicted_spikes(a, lambda, *construction, s);
    m.A = std::move(a);
    return m;
}

CoreModel CoreModel::shrunk(const CoreModel& base, double w) {
    if (!(w >= 0.0 && w <= 1.0)) throw Error(ErrorCode::InvalidArgument, "w must lie in [0, 1]");
    CoreModel m;
    m.shape = base.shape;
    m.kind = Kind::Shrunk;
    m.base = std::make_shared<const CoreModel>(base);
    m.w = w;
    return m;
}

Matrix CoreModel::materialize() const {
    switch (kind) {
        case Kind::Explicit: return C;
        case Kind::PartialIsotropy: {
            Matrix c = (1.0 - lambda) * (A * A.transpose());
            c.diagonal().array() += lambda;
            return matcore::symmetrize(c);
        }
        case Kind::Shrunk: return generators::shrink_core(base->materialize(), w);
    }
    return {};
}

std::string CoreModel::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Explicit: os << "explicit"; break;
        case Kind::PartialIsotropy: os << "partial-isotropy(r=" << A.cols() << ",lambda=" << lambda << ")"; break;
        case Kind::Shrunk: os << "shrunk(" << base->describe() << ",w=" << w << ")"; break;
    }
    return os.str();
}

std::string SamplerSpec::describe() const {
    std::ostringstream os;
    switch (dist) {
        case Dist::Gaussian: os << "gaussian"; break;
        case Dist::GammaStd: os << "gamma(" << alpha << "," << beta << ")"; break;
        case Dist::StudentT: os << "t(" << nu << ")"; break;
    }
    if (centered) os << ",centered";
    return os.str();
}

bool SamplerSpec::same_distribution(const SamplerSpec& o) const {
    if (dist != o.dist || centered != o.centered) return false;
    if (dist == Dist::GammaStd) return alpha == o.alpha && beta == o.beta;
    if (dist == Dist::StudentT) return nu == o.nu;
    return true;
}

std::optional<SamplerSpec::Dist> parse_dist(const std::string& name) {
    if (name == "gaussian" || name == "normal") return SamplerSpec::Dist::Gaussian;
    if (name == "gamma") return SamplerSpec::Dist::GammaStd;
    if (name == "t" || name == "student-t") return SamplerSpec::Dist::StudentT;
    return std::nullopt;
}

namespace generators {

const char* case_name(Feasibility::Case c) {
    switch (c) {
        case Feasibility::Case::StrictInequality: return "strict";
        case Feasibility::Case::Zero: return "zero";
        case Feasibility::Case::GcdSquared: return "gcd-squared";
        case Feasibility::Case::Infeasible: return "infeasible";
    }
    return "?";
}

const char* construction_name(Construction c) {
    switch (c) {
        case Construction::Square2: return "square2";
        case Construction::Ladder2: return "ladder2";
        case Construction::OrthoBlock: return "orthoblock";
    }
    return "?";
}

std::optional<Construction> parse_construction(const std::string& s) {
    if (s == "square2") return Construction::Square2;
    if (s == "ladder2") return Construction::Ladder2;
    if (s == "orthoblock") return Construction::OrthoBlock;
    return std::nullopt;
}

Feasibility rank_feasible(int p1, int p2, int r) {
    Feasibility f;
    if (p1 < 1 || p2 < 1 || r < 1) return f;
    const long long a = p1, b = p2;
    const long long v = a * a + b * b - r * a * b;
    const long long d = std::gcd(a, b);
    if (v < 0) {
        f.kind = Feasibility::Case::StrictInequality;
    } else if (v == 0) {
        f.kind = Feasibility::Case::Zero;
        f.construction = Construction::Square2;
    } else if (v == d * d) {
        f.kind = Feasibility::Case::GcdSquared;
        const long long hi = std::max(a, b), lo = std::min(a, b);
        if (lo * r == hi) {
            f.construction = Construction::OrthoBlock;
        } else if (r == 2 && hi - lo == d) {
            f.construction = Construction::Ladder2;
            f.m = static_cast<int>(d);
            f.k = static_cast<int>(lo / d);
        }
    }
    return f;
}

Matrix haar_orthogonal(int dim, Rng& rng) {
    std::normal_distribution<double> nd;
    Matrix g(dim, dim);
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
        for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = nd(rng);
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix& r = qr.matrixQR();
    for (int j = 0; j < dim; ++j) {
        if (r(j, j) < 0.0) q.col(j) *= -1.0;
    }
    return q;
}

namespace {

// Builds the factor matrices for p1 >= p2; the caller transposes for the mirrored shape.
std::vector<Matrix> build_factors(int p1, int p2, int r, Construction c, Rng& rng) {
    std::vector<Matrix> out;
    switch (c) {
        case Construction::OrthoBlock: {
            if (p1 != p2 * r) throw Error(ErrorCode::IncompatibleParameters, "orthoblock needs p1 = r*p2");
            Matrix o = haar_orthogonal(p1, rng);
            for (int i = 0; i < r; ++i) out.push_back(std::sqrt(double(p2)) * o.middleCols(i * p2, p2));
            break;
        }
        case Construction::Square2: {
            if (p1 != p2 || r != 2) throw Error(ErrorCode::IncompatibleParameters, "square2 needs p1 = p2, r = 2");
            Matrix u = haar_orthogonal(p1, rng);
            Matrix v = haar_orthogonal(p1, rng);
            std::uniform_real_distribution<double> ud(0.2, 0.8);
            const double d1 = ud(rng);
            Matrix o1;
            const Matrix id = Matrix::Identity(p1, p1);
            do {
                o1 = haar_orthogonal(p1, rng);
            } while ((o1 - id).norm() < 1e-6 || (o1 + id).norm() < 1e-6);
            const double s = std::sqrt(double(p1));
            out.push_back(s * d1 * u * v.transpose());
            out.push_back(s * std::sqrt(1.0 - d1 * d1) * u * o1 * v.transpose());
            break;
        }
        case Construction::Ladder2: {
            const int m = p1 - p2;
            if (r != 2 || m < 1 || p2 % m != 0) {
                throw Error(ErrorCode::IncompatibleParameters, "ladder2 needs (p1,p2) = ((k+1)m, km), r = 2");
            }
            const int k = p2 / m;
            Matrix u = haar_orthogonal(p1, rng);
            Matrix v = haar_orthogonal(p2, rng);
            Matrix w1 = Matrix::Zero(p1, p2), w2 = Matrix::Zero(p1, p2);
            for (int j = 1; j <= k; ++j) {
                w1 += std::sqrt(double(k + 1 - j) / (k + 1)) * u.middleCols((j - 1) * m, m) *
                      v.middleCols((j - 1) * m, m).transpose();
            }
            for (int j = 2; j <= k + 1; ++j) {
                Matrix oj = haar_orthogonal(m, rng);
                w2 += std::sqrt(double(j - 1) / (k + 1)) * u.middleCols((j - 1) * m, m) * oj *
                      v.middleCols((j - 2) * m, m).transpose();
            }
            const double s = std::sqrt(double(p1));
            out.push_back(s * w1);
            out.push_back(s * w2);
            break;
        }
    }
    return out;
}

}  // namespace

Matrix make_rank_r_core(int p1, int p2, int r, Construction c, Rng& rng) {
    if (p1 < 1 || p2 < 1 || r < 1) throw Error(ErrorCode::IncompatibleParameters, "dimensions must be positive");
    const bool mirrored = p1 < p2;
    std::vector<Matrix> f = mirrored ? build_factors(p2, p1, r, c, rng) : build_factors(p1, p2, r, c, rng);
    Matrix a(p1 * p2, r);
    for (int i = 0; i < r; ++i) {
        Matrix ai = mirrored ? Matrix(f[i].transpose()) : f[i];
        a.col(i) = Eigen::Map<const Vector>(ai.data(), ai.size());
    }
    return a;
}

Spectrum predicted_spikes(const Matrix& a, double lambda, Construction c, const Shape& s) {
    const int p = s.p();
    const int r = static_cast<int>(a.cols());
    Spectrum out = Spectrum::Constant(p, lambda);
    if (c == Construction::Square2) {
        const double p1sq = double(s.p1) * s.p1;
        const double beta = (a.transpose() * a).determinant() / p1sq;
        const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * beta / p1sq));
        out(0) = (1.0 - lambda) * p1sq * 0.5 * (1.0 + disc) + lambda;
        out(1) = (1.0 - lambda) * p1sq * 0.5 * (1.0 - disc) + lambda;
    } else {
        for (int i = 0; i < r; ++i) out(i) = (1.0 - lambda) * double(p) / r + lambda;
    }
    return out;
}

std::vector<double> preset_spectrum(const std::string& name, int p) {
    if (p < 2 || p % 2 != 0) throw Error(ErrorCode::InvalidArgument, "preset spectra need even p");
    double top, mid, low;
    if (name == "paper-C1") {
        top = 10, mid = 4, low = 1;
    } else if (name == "paper-C2") {
        top = 4, mid = 3, low = 2;
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown preset '" + name + "'");
    }
    std::vector<double> v;
    v.push_back(top);
    v.insert(v.end(), p / 2 - 1, mid);
    v.insert(v.end(), p / 2, low);
    return v;
}

Matrix random_core(const Shape& s, const std::vector<double>& spectrum_hint, Rng& rng, RootKind root) {
    const int p = s.p();
    if (static_cast<int>(spectrum_hint.size()) != p) {
        throw Error(ErrorCode::DimensionMismatch, "spectrum hint length != p");
    }
    Vector lam(p);
    for (int i = 0; i < p; ++i) {
        if (!(spectrum_hint[i] > 0.0)) throw Error(ErrorCode::InvalidArgument, "spectrum hint must be positive");
        lam(i) = spectrum_hint[i];
    }
    Matrix g = haar_orthogonal(p, rng);
    Matrix sigma = matcore::symmetrize(g * lam.asDiagonal() * g.transpose());
    MleResult mle = kcd::kronecker_mle(sigma, p + 2, s);
    return kcd::core_matrix(sigma, mle.K, root);
}

Matrix shrink_core(const Matrix& c, double w) {
    if (!(w >= 0.0 && w <= 1.0)) throw Error(ErrorCode::InvalidArgument, "w must lie in [0, 1]");
    Matrix out = w * c;
    out.diagonal().array() += 1.0 - w;
    return out;
}

SeparableFactor separable_preset(const std::string& name, const Shape& s) {
    double a1, b1, a2, b2;
    if (name == "B1") {
        a1 = 4, b1 = 1, a2 = 3, b2 = 2;
    } else if (name == "B2") {
        a1 = 8, b1 = 3, a2 = 5, b2 = 1;
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown separable preset '" + name + "'");
    }
    auto half = [](int d, double hi, double lo) {
        Vector v(d);
        for (int i = 0; i < d; ++i) v(i) = i < d / 2 ? hi : lo;
        return Matrix(v.asDiagonal());
    };
    SeparableFactor k{half(s.p1, a1, b1), half(s.p2, a2, b2), s};
    k.normalize();
    return k;
}

Matrix sample_data(int n, int p, const Matrix& root, const SamplerSpec& sampler, Rng& rng) {
    Matrix z(n, p);
    switch (sampler.dist) {
        case SamplerSpec::Dist::Gaussian: {
            std::normal_distribution<double> d;
            for (Eigen::Index j = 0; j < z.cols(); ++j)
                for (Eigen::Index i = 0; i < z.rows(); ++i) z(i, j) = d(rng);
            break;
        }
        case SamplerSpec::Dist::GammaStd: {
            if (!(sampler.alpha > 0.0 && sampler.beta > 0.0)) {
                throw Error(ErrorCode::InvalidArgument, "gamma sampler needs alpha, beta > 0");
            }
            std::gamma_distribution<double> d(sampler.alpha, 1.0 / sampler.beta);
            const double mean = sampler.alpha / sampler.beta;
            const double sd = std::sqrt(sampler.alpha) / sampler.beta;
            for (Eigen::Index j = 0; j < z.cols(); ++j)
                for (Eigen::Index i = 0; i < z.rows(); ++i) z(i, j) = (d(rng) - mean) / sd;
            break;
        }
        case SamplerSpec::Dist::StudentT: {
            if (!(sampler.nu > 2.0)) throw Error(ErrorCode::InvalidArgument, "t sampler needs nu > 2");
            std::student_t_distribution<double> d(sampler.nu);
            for (Eigen::Index j = 0; j < z.cols(); ++j)
                for (Eigen::Index i = 0; i < z.rows(); ++i) z(i, j) = d(rng);
            break;
        }
    }
    if (root.size() == 0) return z;
    if (root.rows() != p || root.cols() != p) throw Error(ErrorCode::DimensionMismatch, "root is not p x p");
    return z * root.transpose();
}

Matrix sample_data(int n, const Matrix& root, const SamplerSpec& sampler) {
    if (root.size() == 0) throw Error(ErrorCode::InvalidArgument, "sample_data: root needed to infer p");
    Rng rng(sampler.seed);
    return sample_data(n, static_cast<int>(root.rows()), root, sampler, rng);
}

Matrix covariance_of(const Matrix& y, bool centered) {
    const Eigen::Index n = y.rows(), p = y.cols();
    Matrix s = Matrix::Zero(p, p);
    if (centered) {
        if (n < 2) throw Error(ErrorCode::InvalidArgument, "centering needs n >= 2");
        Matrix yc = y.rowwise() - y.colwise().mean();
        s.selfadjointView<Eigen::Lower>().rankUpdate(yc.transpose(), 1.0 / double(n));
    } else {
        s.selfadjointView<Eigen::Lower>().rankUpdate(y.transpose(), 1.0 / double(n));
    }
    return s.selfadjointView<Eigen::Lower>();
}

Matrix sample_covariance(int n, const Matrix& root, const SamplerSpec& sampler) {
    return covariance_of(sample_data(n, root, sampler), sampler.centered);
}

}  // namespace generators
}  // namespace sepcore

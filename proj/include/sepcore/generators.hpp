#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sepcore/kcd.hpp"

namespace sepcore {

using Rng = std::mt19937_64;

enum class Construction { Square2, Ladder2, OrthoBlock };

struct CoreModel {
    enum class Kind { Explicit, PartialIsotropy, Shrunk };

    Shape shape;
    Kind kind = Kind::Explicit;
    Matrix C;                  // Explicit
    Matrix A;                  // PartialIsotropy, p x r
    double lambda = 1.0;       // PartialIsotropy
    std::shared_ptr<const CoreModel> base;  // Shrunk
    double w = 1.0;            // Shrunk
    std::optional<Spectrum> predicted_spikes;

    static CoreModel explicit_core(const Shape& s, Matrix c);
    static CoreModel partial_isotropy(const Shape& s, Matrix a, double lambda,
                                      std::optional<Construction> construction = std::nullopt);
    static CoreModel shrunk(const CoreModel& base, double w);

    Matrix materialize() const;
    std::string describe() const;
};

struct SamplerSpec {
    enum class Dist { Gaussian, GammaStd, StudentT };

    Dist dist = Dist::Gaussian;
    double alpha = 4.0;  // GammaStd shape
    double beta = 2.0;   // GammaStd rate
    double nu = 6.0;     // StudentT degrees of freedom
    std::uint64_t seed = 0;
    bool centered = false;

    std::string describe() const;
    bool same_distribution(const SamplerSpec& o) const;
};

std::optional<SamplerSpec::Dist> parse_dist(const std::string& name);

namespace generators {

struct Feasibility {
    enum class Case { StrictInequality, Zero, GcdSquared, Infeasible };

    Case kind = Case::Infeasible;
    std::optional<Construction> construction;
    int k = 0;  // ladder parameters when construction == Ladder2
    int m = 0;
};

const char* case_name(Feasibility::Case c);
const char* construction_name(Construction c);
std::optional<Construction> parse_construction(const std::string& s);

Feasibility rank_feasible(int p1, int p2, int r);

// Columns are vec(A_i), each A_i of size p1 x p2.
Matrix make_rank_r_core(int p1, int p2, int r, Construction c, Rng& rng);

// r spiked eigenvalues followed by p - r copies of lambda.
Spectrum predicted_spikes(const Matrix& a, double lambda, Construction c, const Shape& s);

Matrix haar_orthogonal(int dim, Rng& rng);

std::vector<double> preset_spectrum(const std::string& name, int p);
Matrix random_core(const Shape& s, const std::vector<double>& spectrum_hint, Rng& rng,
                   RootKind root = RootKind::Cholesky);
Matrix shrink_core(const Matrix& c, double w);

// Diagonal separable factors used for the non-identity K contrast study.
SeparableFactor separable_preset(const std::string& name, const Shape& s);

// n x p matrix whose rows are root * z_i; an empty root means identity.
Matrix sample_data(int n, const Matrix& root, const SamplerSpec& sampler);
Matrix sample_data(int n, int p, const Matrix& root, const SamplerSpec& sampler, Rng& rng);

// S = Yᵀ Y / n, or the centered variant.
Matrix covariance_of(const Matrix& y, bool centered);
Matrix sample_covariance(int n, const Matrix& root, const SamplerSpec& sampler);

}  // namespace generators
}  // namespace sepcore

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ldhull/rng.hpp"
#include "ldhull/vec.hpp"

namespace ldhull {

class DistributionModel;

struct GaussianSpec {
    Vec2 mean;
    Mat22 cov;  // symmetric PSD
};

struct DiscreteAtomsSpec {
    std::vector<Vec2> points;
    std::vector<double> probs;
};

enum class RadialLawKind { UniformDisk, UniformCircle, IsotropicGaussian };

struct RotInvShiftedSpec {
    RadialLawKind law;
    double param;  // radius for disk/circle, scale for gaussian
    Vec2 shift;
    Mat22 linear_map = Mat22::identity();
};

struct LineAtoms {
    std::vector<double> positions;
    std::vector<double> probs;
};

struct LineGaussian {
    double mean;
    double stddev;
};

struct OneDimensionalSpec {
    Vec2 direction;  // unit
    Vec2 offset;
    std::variant<LineAtoms, LineGaussian> law;
};

struct MixtureSpec {
    std::vector<double> weights;
    std::vector<DistributionModel> components;
};

enum class SupportShape { Full, Line, Point };

struct SupportMeta {
    Vec2 mean;
    Mat22 covariance;
    double r_min = 0.0;
    double r_max = 0.0;  // +inf for unbounded support
    std::optional<std::vector<std::pair<Vec2, double>>> atoms;
    SupportShape shape = SupportShape::Full;
    Vec2 line_direction{1.0, 0.0};  // unit; meaningful when shape == Line
};

/// A walk-increment law with exact cumulant generating function, sampler,
/// and support metadata. All evaluation methods are pure; the sampler takes
/// an explicit RNG state so parallel callers own disjoint streams.
class DistributionModel {
  public:
    using Kind = std::variant<GaussianSpec, DiscreteAtomsSpec, RotInvShiftedSpec,
                              MixtureSpec, OneDimensionalSpec>;

    explicit DistributionModel(Kind kind);  // validates invariants, throws ConfigError

    static DistributionModel gaussian(Vec2 mean, Mat22 cov);
    static DistributionModel atoms(std::vector<Vec2> points, std::vector<double> probs);
    static DistributionModel rotinv_shifted(RadialLawKind law, double param, Vec2 shift,
                                            Mat22 linear_map = Mat22::identity());
    static DistributionModel mixture(std::vector<double> weights,
                                     std::vector<DistributionModel> components);
    static DistributionModel one_dimensional(Vec2 direction, Vec2 offset,
                                             std::variant<LineAtoms, LineGaussian> law);

    /// K(u) = log E exp(u . X). Finite everywhere; K(0) = 0 exactly.
    double cumulant(Vec2 u) const;
    /// grad K(u); grad K(0) = mean exactly.
    Vec2 cumulant_gradient(Vec2 u) const;
    /// Hessian of K at u; symmetric PSD, equals the covariance at u = 0.
    Mat22 cumulant_hessian(Vec2 u) const;

    Vec2 sample_increment(Rng& rng) const;
    /// Draw from the exponentially tilted law dQ/dP = exp(u . x - K(u)).
    Vec2 sample_tilted(Vec2 u, Rng& rng) const;

    const SupportMeta& support() const { return meta_; }
    Vec2 mean() const { return meta_.mean; }
    Mat22 covariance() const { return meta_.covariance; }

    /// True when the law is invariant under rotations about the origin
    /// (hypothesis of the area theorem).
    bool is_rotationally_invariant() const;

    const Kind& kind() const { return kind_; }

  private:
    void validate_and_fill_meta();

    Kind kind_;
    SupportMeta meta_;
};

// Spec-surface free functions.
inline double cumulant(const DistributionModel& m, Vec2 u) { return m.cumulant(u); }
inline Vec2 cumulant_gradient(const DistributionModel& m, Vec2 u) { return m.cumulant_gradient(u); }
inline Mat22 cumulant_hessian(const DistributionModel& m, Vec2 u) { return m.cumulant_hessian(u); }
inline Vec2 sample_increment(const DistributionModel& m, Rng& rng) { return m.sample_increment(rng); }
inline SupportMeta support_metadata(const DistributionModel& m) { return m.support(); }

/// Parse a distribution from plain-text keys (kind, mu, sigma, atoms, probs,
/// radial_law, radius, scale, shift, linear_map, direction, offset,
/// line_atoms, line_probs, line_mean, line_std, weights, component.<i>.<key>).
DistributionModel parse_distribution(const std::map<std::string, std::string>& kv);

/// Inverse of parse_distribution for config round-tripping.
std::map<std::string, std::string> distribution_to_keys(const DistributionModel& model);

}  // namespace ldhull

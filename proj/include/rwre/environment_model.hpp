#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rwre/environment.hpp"
#include "rwre/rng.hpp"

namespace rwre {

/// Site-marginal distributions for iid models.
struct Uniform {
    double a, b;
};
struct LogUniform {
    double a, b;
};
struct Discrete {
    std::vector<double> values;
    std::vector<double> weights;
};
using Distribution = std::variant<Uniform, LogUniform, Discrete>;

double sample(const Distribution& dist, SubstreamRng& rng);
void validate_probability_support(const Distribution& dist);
void validate_positive_support(const Distribution& dist);
nlohmann::json to_json(const Distribution& dist);
Distribution distribution_from_json(const nlohmann::json& j);

/// A shift-stationary law for site sequences. Constant, iid and
/// periodic-with-uniform-random-phase are stationary ergodic; a mixture of
/// two distinct components is stationary but not ergodic.
class EnvironmentModel {
public:
    struct Constant {
        double value;
    };
    struct Iid {
        Distribution dist;
    };
    struct Periodic {
        std::vector<double> pattern;
    };
    struct Mixture {
        double weight; // probability of the first component
        std::shared_ptr<const EnvironmentModel> first;
        std::shared_ptr<const EnvironmentModel> second;
    };
    using Node = std::variant<Constant, Iid, Periodic, Mixture>;

    static EnvironmentModel constant(double value);
    static EnvironmentModel iid(Distribution dist);
    static EnvironmentModel periodic(std::vector<double> pattern);
    static EnvironmentModel mixture(double weight, EnvironmentModel first,
                                    EnvironmentModel second);

    const Node& node() const noexcept { return *node_; }

    /// All possible sampled values lie in (0,1): required when the model
    /// drives a probability environment. Throws ConfigError otherwise.
    void validate_probability_support() const;
    /// All possible sampled values are > 0: required for c-sequences.
    void validate_positive_support() const;

    nlohmann::json to_json() const;
    static EnvironmentModel from_json(const nlohmann::json& j);

    /// Canonical one-line description, used in report provenance.
    std::string describe() const;

private:
    explicit EnvironmentModel(Node node);
    std::shared_ptr<const Node> node_;
};

/// Draws the window [lo, hi] from the model. Deterministic for a fixed
/// (model, lo, hi, seed); the rng overload consumes the stream in site
/// order so callers can batch independent draws over substreams.
EnvironmentWindow sample_environment(const EnvironmentModel& model, site_t lo,
                                     site_t hi, std::uint64_t seed);
EnvironmentWindow sample_environment(const EnvironmentModel& model, site_t lo,
                                     site_t hi, SubstreamRng& rng);

/// Same sampling path, but for positive c-sequences (support must be > 0,
/// not necessarily inside (0,1)).
CWindow sample_c_window(const EnvironmentModel& model, site_t lo, site_t hi,
                        std::uint64_t seed);
CWindow sample_c_window(const EnvironmentModel& model, site_t lo, site_t hi,
                        SubstreamRng& rng);

/// Parses a model document {"kind": ..., "params": {...}, "seed": ...};
/// the optional seed rides along for CLI defaulting.
struct ModelDocument {
    EnvironmentModel model;
    std::optional<std::uint64_t> seed;
};
ModelDocument parse_model_document(const nlohmann::json& j);

} // namespace rwre

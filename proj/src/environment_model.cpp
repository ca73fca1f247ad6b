#include "rwre/environment_model.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace rwre {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw ConfigError(std::string(what) + " must be finite");
}

double sample_uniform(const Uniform& d, SubstreamRng& rng) {
    return rng.uniform(d.a, d.b);
}

double sample_loguniform(const LogUniform& d, SubstreamRng& rng) {
    return std::exp(rng.uniform(std::log(d.a), std::log(d.b)));
}

double sample_discrete(const Discrete& d, SubstreamRng& rng) {
    const double total =
        std::accumulate(d.weights.begin(), d.weights.end(), 0.0);
    double t = rng.uniform01() * total;
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        t -= d.weights[i];
        if (t < 0.0) return d.values[i];
    }
    return d.values.back();
}

void validate_discrete_shape(const Discrete& d) {
    if (d.values.empty() || d.values.size() != d.weights.size())
        throw ConfigError("discrete distribution needs matching nonempty values/weights");
    double total = 0.0;
    for (double w : d.weights) {
        require_finite(w, "discrete weight");
        if (w < 0.0) throw ConfigError("discrete weights must be nonnegative");
        total += w;
    }
    if (total <= 0.0) throw ConfigError("discrete weights must have positive sum");
}

} // namespace

double sample(const Distribution& dist, SubstreamRng& rng) {
    return std::visit(
        [&rng](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Uniform>)
                return sample_uniform(d, rng);
            else if constexpr (std::is_same_v<T, LogUniform>)
                return sample_loguniform(d, rng);
            else
                return sample_discrete(d, rng);
        },
        dist);
}

void validate_probability_support(const Distribution& dist) {
    std::visit(
        [](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Uniform> ||
                          std::is_same_v<T, LogUniform>) {
                require_finite(d.a, "distribution bound");
                require_finite(d.b, "distribution bound");
                if (!(0.0 < d.a && d.a <= d.b && d.b < 1.0))
                    throw ConfigError("distribution support [" +
                                      std::to_string(d.a) + ", " +
                                      std::to_string(d.b) +
                                      "] not inside (0,1)");
            } else {
                validate_discrete_shape(d);
                for (double v : d.values)
                    if (!(v > 0.0 && v < 1.0))
                        throw ConfigError("discrete value " + std::to_string(v) +
                                          " not inside (0,1)");
            }
        },
        dist);
}

void validate_positive_support(const Distribution& dist) {
    std::visit(
        [](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Uniform> ||
                          std::is_same_v<T, LogUniform>) {
                require_finite(d.a, "distribution bound");
                require_finite(d.b, "distribution bound");
                if (!(0.0 < d.a && d.a <= d.b))
                    throw ConfigError("distribution support must be positive");
            } else {
                validate_discrete_shape(d);
                for (double v : d.values)
                    if (!(v > 0.0))
                        throw ConfigError("discrete value " + std::to_string(v) +
                                          " must be positive");
            }
        },
        dist);
}

nlohmann::json to_json(const Distribution& dist) {
    return std::visit(
        [](const auto& d) -> nlohmann::json {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Uniform>)
                return {{"kind", "uniform"}, {"a", d.a}, {"b", d.b}};
            else if constexpr (std::is_same_v<T, LogUniform>)
                return {{"kind", "loguniform"}, {"a", d.a}, {"b", d.b}};
            else
                return {{"kind", "discrete"},
                        {"values", d.values},
                        {"weights", d.weights}};
        },
        dist);
}

Distribution distribution_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("distribution: expected object with key 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "uniform")
            return Uniform{j.at("a").get<double>(), j.at("b").get<double>()};
        if (kind == "loguniform")
            return LogUniform{j.at("a").get<double>(), j.at("b").get<double>()};
        if (kind == "discrete")
            return Discrete{j.at("values").get<std::vector<double>>(),
                            j.at("weights").get<std::vector<double>>()};
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("distribution '" + kind + "': " + e.what());
    }
    throw ConfigError("distribution: unknown kind '" + kind + "'");
}

EnvironmentModel::EnvironmentModel(Node node)
    : node_(std::make_shared<const Node>(std::move(node))) {}

EnvironmentModel EnvironmentModel::constant(double value) {
    require_finite(value, "constant value");
    return EnvironmentModel(Constant{value});
}

EnvironmentModel EnvironmentModel::iid(Distribution dist) {
    return EnvironmentModel(Iid{std::move(dist)});
}

EnvironmentModel EnvironmentModel::periodic(std::vector<double> pattern) {
    if (pattern.empty()) throw ConfigError("periodic model: empty pattern");
    for (double v : pattern) require_finite(v, "pattern value");
    return EnvironmentModel(Periodic{std::move(pattern)});
}

EnvironmentModel EnvironmentModel::mixture(double weight, EnvironmentModel first,
                                           EnvironmentModel second) {
    require_finite(weight, "mixture weight");
    if (weight < 0.0 || weight > 1.0)
        throw ConfigError("mixture weight must be in [0,1]");
    return EnvironmentModel(
        Mixture{weight, std::make_shared<const EnvironmentModel>(std::move(first)),
                std::make_shared<const EnvironmentModel>(std::move(second))});
}

void EnvironmentModel::validate_probability_support() const {
    std::visit(
        [](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Constant>) {
                if (!(n.value > 0.0 && n.value < 1.0))
                    throw ConfigError("constant value " + std::to_string(n.value) +
                                      " not inside (0,1)");
            } else if constexpr (std::is_same_v<T, Iid>) {
                rwre::validate_probability_support(n.dist);
            } else if constexpr (std::is_same_v<T, Periodic>) {
                for (double v : n.pattern)
                    if (!(v > 0.0 && v < 1.0))
                        throw ConfigError("pattern value " + std::to_string(v) +
                                          " not inside (0,1)");
            } else {
                n.first->validate_probability_support();
                n.second->validate_probability_support();
            }
        },
        node());
}

void EnvironmentModel::validate_positive_support() const {
    std::visit(
        [](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Constant>) {
                if (!(n.value > 0.0))
                    throw ConfigError("constant value must be positive");
            } else if constexpr (std::is_same_v<T, Iid>) {
                rwre::validate_positive_support(n.dist);
            } else if constexpr (std::is_same_v<T, Periodic>) {
                for (double v : n.pattern)
                    if (!(v > 0.0))
                        throw ConfigError("pattern values must be positive");
            } else {
                n.first->validate_positive_support();
                n.second->validate_positive_support();
            }
        },
        node());
}

nlohmann::json EnvironmentModel::to_json() const {
    return std::visit(
        [](const auto& n) -> nlohmann::json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Constant>)
                return {{"kind", "constant"}, {"params", {{"p", n.value}}}};
            else if constexpr (std::is_same_v<T, Iid>)
                return {{"kind", "iid"},
                        {"params", {{"dist", rwre::to_json(n.dist)}}}};
            else if constexpr (std::is_same_v<T, Periodic>)
                return {{"kind", "periodic"},
                        {"params", {{"pattern", n.pattern}}}};
            else
                return {{"kind", "mixture"},
                        {"params",
                         {{"weight", n.weight},
                          {"first", n.first->to_json()},
                          {"second", n.second->to_json()}}}};
        },
        node());
}

EnvironmentModel EnvironmentModel::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("model: expected object with key 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    const nlohmann::json params =
        j.contains("params") ? j.at("params") : nlohmann::json::object();
    try {
        if (kind == "constant") return constant(params.at("p").get<double>());
        if (kind == "iid")
            return iid(distribution_from_json(params.at("dist")));
        if (kind == "periodic")
            return periodic(params.at("pattern").get<std::vector<double>>());
        if (kind == "mixture")
            return mixture(params.at("weight").get<double>(),
                           from_json(params.at("first")),
                           from_json(params.at("second")));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("model '" + kind + "': " + e.what());
    }
    throw ConfigError("model: unknown kind '" + kind + "'");
}

std::string EnvironmentModel::describe() const {
    return to_json().dump();
}

namespace {

// One site draw; mixture/periodic decisions are drawn once per window by
// the callers below, so this is only reached for constant and iid nodes.
double sample_site(const EnvironmentModel& m, SubstreamRng& rng) {
    const auto& n = m.node();
    if (const auto* c = std::get_if<EnvironmentModel::Constant>(&n))
        return c->value;
    if (const auto* i = std::get_if<EnvironmentModel::Iid>(&n))
        return sample(i->dist, rng);
    throw ConfigError("internal: sample_site on structured model");
}

std::vector<double> sample_values(const EnvironmentModel& model, site_t lo,
                                  site_t hi, SubstreamRng& rng) {
    if (lo > hi) throw ConfigError("sample window: lo > hi");
    const auto& n = model.node();
    if (const auto* mix = std::get_if<EnvironmentModel::Mixture>(&n)) {
        const bool first = rng.bernoulli(mix->weight);
        return sample_values(first ? *mix->first : *mix->second, lo, hi, rng);
    }
    if (const auto* per = std::get_if<EnvironmentModel::Periodic>(&n)) {
        const auto len = static_cast<std::uint64_t>(per->pattern.size());
        const auto phase = static_cast<site_t>(rng.below(len));
        std::vector<double> vals;
        vals.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (site_t k = lo; k <= hi; ++k) {
            site_t idx = (k + phase) % static_cast<site_t>(len);
            if (idx < 0) idx += static_cast<site_t>(len);
            vals.push_back(per->pattern[static_cast<std::size_t>(idx)]);
        }
        return vals;
    }
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (site_t k = lo; k <= hi; ++k) vals.push_back(sample_site(model, rng));
    return vals;
}

} // namespace

EnvironmentWindow sample_environment(const EnvironmentModel& model, site_t lo,
                                     site_t hi, SubstreamRng& rng) {
    model.validate_probability_support();
    return EnvironmentWindow(lo, sample_values(model, lo, hi, rng));
}

EnvironmentWindow sample_environment(const EnvironmentModel& model, site_t lo,
                                     site_t hi, std::uint64_t seed) {
    SubstreamRng rng(seed);
    return sample_environment(model, lo, hi, rng);
}

CWindow sample_c_window(const EnvironmentModel& model, site_t lo, site_t hi,
                        SubstreamRng& rng) {
    model.validate_positive_support();
    return CWindow(lo, sample_values(model, lo, hi, rng));
}

CWindow sample_c_window(const EnvironmentModel& model, site_t lo, site_t hi,
                        std::uint64_t seed) {
    SubstreamRng rng(seed);
    return sample_c_window(model, lo, hi, rng);
}

ModelDocument parse_model_document(const nlohmann::json& j) {
    ModelDocument doc{EnvironmentModel::from_json(j), std::nullopt};
    if (j.contains("seed")) doc.seed = j.at("seed").get<std::uint64_t>();
    return doc;
}

} // namespace rwre

#include "voigt/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <stdexcept>

namespace voigt {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(s.substr(start)));
            return out;
        }
        out.push_back(trim(s.substr(start, pos - start)));
        start = pos + 1;
    }
}

long long parse_integer(std::string_view token, const char* what) {
    long long value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                    std::string(token) + "'");
    return value;
}

}  // namespace

double parse_number(std::string_view token) {
    token = trim(token);
    if (token.empty()) throw std::invalid_argument("malformed number: empty token");
    const std::size_t slash = token.find('/');
    if (slash != std::string_view::npos) {
        const long long num = parse_integer(trim(token.substr(0, slash)), "rational numerator");
        const long long den =
            parse_integer(trim(token.substr(slash + 1)), "rational denominator");
        if (den == 0) throw std::invalid_argument("malformed rational: zero denominator");
        return static_cast<double>(num) / static_cast<double>(den);
    }
    double value = 0.0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("malformed number: '" + std::string(token) + "'");
    return value;
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    for (auto item : split(text, ','))
        out.push_back(parse_number(item));
    return out;
}

std::vector<double> parse_number_grid(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() == 3) {
        const double start = parse_number(parts[0]);
        const double step = parse_number(parts[1]);
        const double stop = parse_number(parts[2]);
        if (!(step > 0.0) || stop < start - 1e-12)
            throw std::invalid_argument("malformed range: '" + std::string(text) + "'");
        std::vector<double> out;
        const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
        for (long long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
        return out;
    }
    return parse_number_list(text);
}

namespace {

std::vector<double> default_horizons(VoigtParams::Model model, double t_end) {
    const bool bbm = model == VoigtParams::Model::BBM1D;
    const double start = bbm ? 0.65 : 0.0;
    const double step = bbm ? 0.01 : 0.1;
    const double stop = std::min(bbm ? 1.25 : 5.0, t_end);
    std::vector<double> out;
    const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
    for (long long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

}  // namespace

GridSpec RunConfig::grid() const {
    return model == VoigtParams::Model::BBM1D ? GridSpec::line(n) : GridSpec::cube(n);
}

VoigtParams RunConfig::params(double alpha, double nu) const {
    return {alpha, nu, model};
}

StepperConfig RunConfig::stepper(double nu) const {
    StepperConfig s;
    s.cfl = cfl;
    s.t_end = t_end;
    s.sample_interval = sample_interval;
    s.scheme = (model == VoigtParams::Model::BBM1D && nu > 0.0) ? StepperConfig::Scheme::IFRK4
                                                                : StepperConfig::Scheme::RK4;
    return s;
}

void RunConfig::validate() const {
    grid().validate();
    if (alphas.empty()) throw std::invalid_argument("config: alpha list must be nonempty");
    for (double a : alphas)
        if (!(a > 0.0)) throw std::invalid_argument("config: alpha values must be positive");
    for (double v : nus) {
        if (v < 0.0) throw std::invalid_argument("config: nu values must be >= 0");
        if (v > 0.0 && model != VoigtParams::Model::BBM1D)
            throw std::invalid_argument("config: nu > 0 requires the bbm model");
    }
    if (nus.empty()) throw std::invalid_argument("config: nu list must be nonempty");
    stepper(0.0).validate();
    for (double h : horizons)
        if (h < -1e-12 || h > t_end + 1e-9)
            throw std::invalid_argument("config: horizons must lie within [0, t_end]");
    if (checkpoint_cadence < 0 || spectrum_cadence < 0)
        throw std::invalid_argument("config: cadences must be >= 0");
}

std::map<std::string, std::string, std::less<>> config_pairs(std::string_view text) {
    std::map<std::string, std::string, std::less<>> pairs;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key or value");
        pairs[key] = value;
    }
    return pairs;
}

RunConfig build_config(const std::map<std::string, std::string, std::less<>>& pairs) {
    static const char* known[] = {"model",          "n",
                                  "alpha",          "nu",
                                  "cfl",            "t_end",
                                  "sample_interval", "horizons",
                                  "output",         "checkpoint_cadence",
                                  "spectrum_cadence", "smin_mode"};
    for (const auto& [key, value] : pairs) {
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return key == k; }) == std::end(known))
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    auto require = [&](const char* key) -> const std::string& {
        auto it = pairs.find(key);
        if (it == pairs.end())
            throw std::invalid_argument("config: missing required key '" + std::string(key) +
                                        "'");
        return it->second;
    };
    auto optional = [&](const char* key) -> const std::string* {
        auto it = pairs.find(key);
        return it == pairs.end() ? nullptr : &it->second;
    };

    RunConfig cfg;
    const std::string& model = require("model");
    if (model == "ev3d")
        cfg.model = VoigtParams::Model::EulerVoigt3D;
    else if (model == "bbm")
        cfg.model = VoigtParams::Model::BBM1D;
    else
        throw std::invalid_argument("config: model must be 'ev3d' or 'bbm', got '" + model + "'");

    cfg.n = static_cast<int>(parse_integer(require("n"), "n"));
    cfg.alphas = parse_number_list(require("alpha"));
    cfg.t_end = parse_number(require("t_end"));
    cfg.sample_interval = parse_number(require("sample_interval"));
    if (const auto* v = optional("nu")) cfg.nus = parse_number_list(*v);
    if (const auto* v = optional("cfl")) cfg.cfl = parse_number(*v);
    if (const auto* v = optional("horizons"))
        cfg.horizons = parse_number_grid(*v);
    else
        cfg.horizons = default_horizons(cfg.model, cfg.t_end);
    if (const auto* v = optional("output")) cfg.output_dir = *v;
    if (const auto* v = optional("checkpoint_cadence"))
        cfg.checkpoint_cadence = static_cast<int>(parse_integer(*v, "checkpoint_cadence"));
    if (const auto* v = optional("spectrum_cadence"))
        cfg.spectrum_cadence = static_cast<int>(parse_integer(*v, "spectrum_cadence"));
    if (const auto* v = optional("smin_mode")) {
        if (*v == "loglog")
            cfg.smin_mode = SminMode::LogLog;
        else if (*v == "literal")
            cfg.smin_mode = SminMode::Literal;
        else
            throw std::invalid_argument("config: smin_mode must be 'loglog' or 'literal'");
    }

    cfg.validate();
    return cfg;
}

RunConfig parse_config(std::string_view text) { return build_config(config_pairs(text)); }

}  // namespace voigt

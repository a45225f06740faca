#include "bactlink/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <system_error>

#include "bactlink/units.hpp"

namespace bactlink {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// an inline comment starts at a ';' or '#' preceded by whitespace
std::string strip_inline_comment(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if ((s[i] == ';' || s[i] == '#') &&
            (s[i - 1] == ' ' || s[i - 1] == '\t'))
            return s.substr(0, i);
    return s;
}

double to_double(const std::string& v, const std::string& where) {
    double out{};
    const char* last = v.data() + v.size();
    const auto [p, ec] = std::from_chars(v.data(), last, out);
    if (ec != std::errc{} || p != last)
        fail("invalid number '" + v + "' for " + where);
    return out;
}

long long to_int(const std::string& v, const std::string& where) {
    long long out{};
    const char* last = v.data() + v.size();
    const auto [p, ec] = std::from_chars(v.data(), last, out);
    if (ec != std::errc{} || p != last)
        fail("invalid integer '" + v + "' for " + where);
    return out;
}

std::uint64_t to_u64(const std::string& v, const std::string& where) {
    std::uint64_t out{};
    const char* last = v.data() + v.size();
    const auto [p, ec] = std::from_chars(v.data(), last, out);
    if (ec != std::errc{} || p != last)
        fail("invalid unsigned integer '" + v + "' for " + where);
    return out;
}

bool to_bool(const std::string& v, const std::string& where) {
    if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "off" || v == "no") return false;
    fail("invalid boolean '" + v + "' for " + where);
}

template <typename T, typename Fn>
std::vector<T> to_list(const std::string& v, const std::string& where,
                       Fn convert) {
    std::vector<T> out;
    std::string item;
    std::istringstream ss(v);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) fail("empty list element for " + where);
        out.push_back(convert(item, where));
    }
    if (out.empty()) fail("empty list for " + where);
    return out;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Values that can only be resolved once the rest of the file is known
// (relative variances scale by the final gamma/kappa/r0).
struct Pending {
    std::optional<double> rel_gamma_var;
    std::optional<double> rel_kappa_var;
    std::optional<double> rel_distance_var;
    std::optional<double> distance_um;
};

void apply_key(ExperimentConfig& c, Pending& pend, const std::string& sec,
               const std::string& key, const std::string& val,
               const std::string& origin) {
    const std::string where = sec + "." + key;
    const auto unknown = [&]() -> void {
        fail("unknown key '" + where + "' in " + origin);
    };
    if (sec == "kinetics") {
        KineticParams& k = c.node.kinetics;
        if (key == "gamma") k.gamma = to_double(val, where);
        else if (key == "kappa") k.kappa = to_double(val, where);
        else if (key == "a0") k.a0 = to_double(val, where);
        else if (key == "a1") k.a1 = to_double(val, where);
        else if (key == "b0") k.b0 = to_double(val, where);
        else if (key == "b1") k.b1 = to_double(val, where);
        else if (key == "b2") k.b2 = to_double(val, where);
        else if (key == "receptors")
            k.receptors = static_cast<int>(to_int(val, where));
        else if (key == "alpha") {
            if (val == "auto") {
                c.alpha_auto = true;
            } else {
                c.alpha_auto = false;
                k.alpha = to_double(val, where);
            }
        } else if (key == "alpha_headroom")
            c.alpha_headroom = to_double(val, where);
        else unknown();
    } else if (sec == "node") {
        if (key == "bacteria")
            c.node.bacteria = static_cast<int>(to_int(val, where));
        else if (key == "rel_gamma_var") pend.rel_gamma_var = to_double(val, where);
        else if (key == "rel_kappa_var") pend.rel_kappa_var = to_double(val, where);
        else unknown();
    } else if (sec == "channel") {
        if (key == "diffusion_cm2_s") c.channel.diffusion = to_double(val, where);
        else if (key == "distance_um") pend.distance_um = to_double(val, where);
        else if (key == "rel_distance_var")
            pend.rel_distance_var = to_double(val, where);
        else unknown();
    } else if (sec == "capacity") {
        CapacityConfig& cc = c.capacity;
        if (key == "a_max_nM") cc.a_max_nM = to_double(val, where);
        else if (key == "sweep_nM")
            cc.sweep_nM = to_list<double>(val, where, to_double);
        else if (key == "k_in") cc.k_in = static_cast<int>(to_int(val, where));
        else if (key == "k_out") cc.k_out = static_cast<int>(to_int(val, where));
        else if (key == "tol_bits") cc.tol_bits = to_double(val, where);
        else if (key == "max_iter")
            cc.max_iter = static_cast<int>(to_int(val, where));
        else unknown();
    } else if (sec == "timing") {
        TimingConfig& tc = c.timing;
        if (key == "reception_nM") tc.reception_nM = to_double(val, where);
        else if (key == "rise_threshold") tc.rise_threshold = to_double(val, where);
        else if (key == "fall_threshold") tc.fall_threshold = to_double(val, where);
        else if (key == "r_um") tc.r_um = to_list<double>(val, where, to_double);
        else if (key == "n") {
            tc.n_values.clear();
            for (long long n : to_list<long long>(val, where, to_int))
                tc.n_values.push_back(static_cast<int>(n));
        } else unknown();
    } else if (sec == "modulation") {
        ModulationConfig& mc = c.modulation;
        if (key == "m") {
            mc.m_values.clear();
            for (long long m : to_list<long long>(val, where, to_int))
                mc.m_values.push_back(static_cast<int>(m));
        } else if (key == "sweep_nM")
            mc.sweep_nM = to_list<double>(val, where, to_double);
        else if (key == "one_sided_endpoints")
            mc.one_sided_endpoints = to_bool(val, where);
        else if (key == "k_out") mc.k_out = static_cast<int>(to_int(val, where));
        else if (key == "tol_bits") mc.tol_bits = to_double(val, where);
        else if (key == "max_iter")
            mc.max_iter = static_cast<int>(to_int(val, where));
        else unknown();
    } else if (sec == "montecarlo") {
        MonteCarloSettings& ms = c.montecarlo;
        if (key == "target_nM") ms.target_nM = to_double(val, where);
        else if (key == "trials") ms.sim.trials = to_int(val, where);
        else if (key == "seed") ms.sim.seed = to_u64(val, where);
        else if (key == "threads")
            ms.sim.threads = static_cast<int>(to_int(val, where));
        else if (key == "model") {
            if (val == "exact") ms.sim.model = NoiseModel::exact;
            else if (val == "linearized") ms.sim.model = NoiseModel::linearized;
            else fail("invalid model '" + val + "' for " + where +
                      " (expected exact or linearized)");
        } else if (key == "truncate") ms.sim.truncate = to_bool(val, where);
        else if (key == "sample_receptors")
            ms.sim.sample_receptors = to_bool(val, where);
        else if (key == "transmitter_noise")
            ms.sim.stages.transmitter_noise = to_bool(val, where);
        else if (key == "distance_noise")
            ms.sim.stages.distance_noise = to_bool(val, where);
        else if (key == "receiver_noise")
            ms.sim.stages.receiver_noise = to_bool(val, where);
        else unknown();
    } else {
        fail("unknown section '[" + sec + "]' in " + origin);
    }
}

}  // namespace

void ExperimentConfig::finalize() {
    warnings.clear();
    try {
        node.kinetics.validate();
        channel.validate();
        if (alpha_auto) {
            if (!(alpha_headroom > 1.0))
                fail("kinetics.alpha_headroom must be > 1");
            if (!(capacity.a_max_nM > 0.0))
                fail("capacity.a_max_nM must be > 0 to calibrate alpha");
            const double a_sat = alpha_headroom * capacity.a_max_nM;
            node.kinetics.alpha =
                a_sat * 4.0 * std::numbers::pi * channel.diffusion *
                channel.distance /
                (static_cast<double>(node.bacteria) * node.kinetics.receptors);
        }
        node.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        fail(std::string("invalid configuration: ") + e.what());
    }

    if (capacity.k_in < 2) fail("capacity.k_in must be >= 2");
    if (capacity.k_out < 2) fail("capacity.k_out must be >= 2");
    if (!(capacity.tol_bits > 0.0)) fail("capacity.tol_bits must be > 0");
    if (capacity.max_iter < 1) fail("capacity.max_iter must be >= 1");
    if (!(capacity.a_max_nM > 0.0)) fail("capacity.a_max_nM must be > 0");
    for (double a : capacity.sweep_nM)
        if (!(a >= 0.0)) fail("capacity.sweep_nM entries must be >= 0");
    sort_unique(capacity.sweep_nM);

    if (!(timing.reception_nM > 0.0)) fail("timing.reception_nM must be > 0");
    for (double thr : {timing.rise_threshold, timing.fall_threshold})
        if (!(thr > 0.0 && thr < 1.0))
            fail("timing thresholds must lie in (0, 1)");
    for (double r : timing.r_um)
        if (!(r > 0.0)) fail("timing.r_um entries must be > 0");
    for (int n : timing.n_values)
        if (n < 1) fail("timing.n entries must be >= 1");
    sort_unique(timing.r_um);
    sort_unique(timing.n_values);

    for (int m : modulation.m_values)
        if (m < 2) fail("modulation.m entries must be >= 2");
    for (double a : modulation.sweep_nM)
        if (!(a > 0.0)) fail("modulation.sweep_nM entries must be > 0");
    sort_unique(modulation.m_values);
    sort_unique(modulation.sweep_nM);
    if (modulation.k_out < 2) fail("modulation.k_out must be >= 2");
    if (!(modulation.tol_bits > 0.0)) fail("modulation.tol_bits must be > 0");
    if (modulation.max_iter < 1) fail("modulation.max_iter must be >= 1");

    if (montecarlo.sim.trials < 1) fail("montecarlo.trials must be >= 1");
    if (montecarlo.sim.threads < 1) fail("montecarlo.threads must be >= 1");
    if (!(montecarlo.target_nM >= 0.0)) fail("montecarlo.target_nM must be >= 0");
    const double a_sat = saturation_concentration(node, channel);
    if (montecarlo.target_nM >= a_sat) {
        std::ostringstream os;
        os << "montecarlo.target_nM (" << montecarlo.target_nM
           << ") must stay below the channel saturation level (" << a_sat
           << " nM)";
        fail(os.str());
    }

    const double rho = node.relative_noise_sq();
    if (rho >= 0.5) {
        std::ostringstream os;
        os << "relative parameter noise " << rho
           << " >= 0.5: outside the first-order (small-noise) regime, "
              "closed-form moments may be inaccurate";
        warnings.push_back(os.str());
    }
    const double rel_r = channel.relative_distance_noise_sq();
    if (rel_r >= 0.25) {
        std::ostringstream os;
        os << "relative distance variance " << rel_r
           << " >= 0.25: first-order distance-noise propagation may be "
              "inaccurate";
        warnings.push_back(os.str());
    }
}

ExperimentConfig default_config() {
    ExperimentConfig c;
    c.finalize();
    return c;
}

ExperimentConfig parse_config(std::istream& in, const std::string& origin) {
    ExperimentConfig c;
    Pending pend;
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        t = trim(strip_inline_comment(t));
        if (t.front() == '[') {
            if (t.back() != ']')
                fail(origin + ":" + std::to_string(lineno) +
                     ": malformed section header '" + t + "'");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty())
                fail(origin + ":" + std::to_string(lineno) + ": empty section name");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            fail(origin + ":" + std::to_string(lineno) +
                 ": expected key = value, got '" + t + "'");
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        if (key.empty())
            fail(origin + ":" + std::to_string(lineno) + ": empty key");
        if (section.empty())
            fail(origin + ":" + std::to_string(lineno) + ": key '" + key +
                 "' outside any section");
        apply_key(c, pend, section, key, val, origin);
    }

    if (pend.distance_um) c.channel.distance = um_to_cm(*pend.distance_um);
    const KineticParams& k = c.node.kinetics;
    if (pend.rel_gamma_var) {
        if (!(*pend.rel_gamma_var >= 0.0)) fail("node.rel_gamma_var must be >= 0");
        c.node.sigma_gamma_sq = *pend.rel_gamma_var * k.gamma * k.gamma;
    }
    if (pend.rel_kappa_var) {
        if (!(*pend.rel_kappa_var >= 0.0)) fail("node.rel_kappa_var must be >= 0");
        c.node.sigma_kappa_sq = *pend.rel_kappa_var * k.kappa * k.kappa;
    }
    if (pend.rel_distance_var) {
        if (!(*pend.rel_distance_var >= 0.0))
            fail("channel.rel_distance_var must be >= 0");
        c.channel.sigma_r_sq =
            *pend.rel_distance_var * c.channel.distance * c.channel.distance;
    }
    c.finalize();
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail("cannot open config file '" + path + "'");
    return parse_config(f, path);
}

}  // namespace bactlink

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bactlink/capacity.hpp"
#include "bactlink/channel.hpp"
#include "bactlink/config.hpp"
#include "bactlink/core.hpp"
#include "bactlink/kinetics.hpp"
#include "bactlink/modulation.hpp"
#include "bactlink/montecarlo.hpp"
#include "bactlink/receiver.hpp"
#include "bactlink/timing.hpp"
#include "bactlink/transmitter.hpp"
#include "bactlink/units.hpp"
#include "bactlink/validate.hpp"

namespace py = pybind11;
using namespace bactlink;

PYBIND11_MODULE(_bactlink, m) {
    m.doc() = "Diffusion-based molecular communication link between two "
              "bacterial populations: binding kinetics, channel physics, "
              "capacity, timing, modulation, and Monte-Carlo validation.";

    // --- special functions ---
    m.def("erf", &bactlink::erf, py::arg("x"));
    m.def("erfc", &bactlink::erfc, py::arg("x"));
    m.def("inverse_erfc", &inverse_erfc, py::arg("q"));
    m.def("gaussian_cdf", &gaussian_cdf, py::arg("x"), py::arg("mean"),
          py::arg("std_dev"));

    // --- kinetics ---
    py::class_<KineticParams>(m, "KineticParams")
        .def(py::init<>())
        .def_readwrite("gamma", &KineticParams::gamma)
        .def_readwrite("kappa", &KineticParams::kappa)
        .def_readwrite("a0", &KineticParams::a0)
        .def_readwrite("a1", &KineticParams::a1)
        .def_readwrite("b0", &KineticParams::b0)
        .def_readwrite("b1", &KineticParams::b1)
        .def_readwrite("b2", &KineticParams::b2)
        .def_readwrite("receptors", &KineticParams::receptors)
        .def_readwrite("alpha", &KineticParams::alpha)
        .def("cascade_gain", &KineticParams::cascade_gain)
        .def("validate", &KineticParams::validate);

    py::class_<ExpressionState>(m, "ExpressionState")
        .def_readonly("s1", &ExpressionState::s1)
        .def_readonly("s2", &ExpressionState::s2);

    m.def("steady_binding_probability", &steady_binding_probability,
          py::arg("concentration"), py::arg("k"));
    m.def("binding_time_constant", &binding_time_constant,
          py::arg("concentration"), py::arg("k"));
    m.def("binding_transient", &binding_transient, py::arg("concentration"),
          py::arg("k"), py::arg("p_init"), py::arg("t_min"));
    m.def("expression_transient", &expression_transient, py::arg("p"),
          py::arg("k"), py::arg("t_min"));
    m.def("gfp_steady", &gfp_steady, py::arg("p"), py::arg("k"));

    // --- nodes ---
    py::class_<NodeParams>(m, "NodeParams")
        .def(py::init<>())
        .def_readwrite("bacteria", &NodeParams::bacteria)
        .def_readwrite("sigma_gamma_sq", &NodeParams::sigma_gamma_sq)
        .def_readwrite("sigma_kappa_sq", &NodeParams::sigma_kappa_sq)
        .def_readwrite("kinetics", &NodeParams::kinetics)
        .def("relative_noise_sq", &NodeParams::relative_noise_sq)
        .def("small_noise_regime", &NodeParams::small_noise_regime)
        .def("validate", &NodeParams::validate);

    py::class_<OutputMoments>(m, "OutputMoments")
        .def_readonly("mean", &OutputMoments::mean)
        .def_readonly("variance", &OutputMoments::variance)
        .def_readonly("exact_variance", &OutputMoments::exact_variance);

    py::class_<RateStats>(m, "RateStats")
        .def_readonly("mean_rate", &RateStats::mean_rate)
        .def_readonly("var_rate", &RateStats::var_rate);

    m.def("transmitter_moments", &transmitter_moments, py::arg("p_star"),
          py::arg("node"));
    m.def("output_rate_stats", &output_rate_stats, py::arg("p_star"),
          py::arg("node"));

    // --- channel ---
    py::class_<ChannelParams>(m, "ChannelParams")
        .def(py::init<>())
        .def_readwrite("diffusion", &ChannelParams::diffusion)
        .def_readwrite("distance", &ChannelParams::distance)
        .def_readwrite("sigma_r_sq", &ChannelParams::sigma_r_sq)
        .def_readwrite("pulse_s", &ChannelParams::pulse_s)
        .def("relative_distance_noise_sq",
             &ChannelParams::relative_distance_noise_sq)
        .def("validate", &ChannelParams::validate);

    py::class_<ReceiverConcentrationStats>(m, "ReceiverConcentrationStats")
        .def_readonly("mean", &ReceiverConcentrationStats::mean)
        .def_readonly("sigma_t_sq", &ReceiverConcentrationStats::sigma_t_sq)
        .def_readonly("sigma_r_rel_sq",
                      &ReceiverConcentrationStats::sigma_r_rel_sq)
        .def_readonly("p_s_star", &ReceiverConcentrationStats::p_s_star);

    m.def("green_impulse", &green_impulse, py::arg("r_cm"), py::arg("t_s"),
          py::arg("ch"));
    m.def("step_response", &step_response, py::arg("r_cm"), py::arg("t_s"),
          py::arg("beta"), py::arg("ch"));
    m.def("steady_concentration", &steady_concentration, py::arg("beta"),
          py::arg("r_cm"), py::arg("ch"));
    m.def("saturation_concentration", &saturation_concentration,
          py::arg("node"), py::arg("ch"));
    m.def("receiver_concentration_stats", &receiver_concentration_stats,
          py::arg("stimulus_nM"), py::arg("node"), py::arg("ch"));
    m.def("required_stimulus", &required_stimulus, py::arg("target_nM"),
          py::arg("node"), py::arg("ch"));

    // --- receiver ---
    py::class_<EntrapmentSensitivity>(m, "EntrapmentSensitivity")
        .def_readonly("p0", &EntrapmentSensitivity::p0)
        .def_readonly("c_gamma", &EntrapmentSensitivity::c_gamma)
        .def_readonly("c_kappa", &EntrapmentSensitivity::c_kappa)
        .def_readonly("c_distance", &EntrapmentSensitivity::c_distance)
        .def_readonly("c_transmitter", &EntrapmentSensitivity::c_transmitter);

    py::class_<ReceiverMoments>(m, "ReceiverMoments")
        .def_readonly("p0", &ReceiverMoments::p0)
        .def_readonly("mean", &ReceiverMoments::mean)
        .def_readonly("variance", &ReceiverMoments::variance)
        .def_readonly("sigma0_sq", &ReceiverMoments::sigma0_sq)
        .def_readonly("variance_reception", &ReceiverMoments::variance_reception)
        .def_readonly("variance_distance", &ReceiverMoments::variance_distance)
        .def_readonly("variance_transmitter",
                      &ReceiverMoments::variance_transmitter)
        .def_readonly("exact_variance", &ReceiverMoments::exact_variance);

    m.def("receiver_entrapment", &receiver_entrapment,
          py::arg("concentration_nM"), py::arg("node"));
    m.def("sigma0_sq", &sigma0_sq, py::arg("node"), py::arg("ch"));
    m.def("p0_to_concentration", &p0_to_concentration, py::arg("p0"),
          py::arg("k"));
    m.def("receiver_moments", &receiver_moments, py::arg("p0"),
          py::arg("node"), py::arg("ch"),
          py::arg("include_transmitter_noise") = false);
    m.def("snr_ratio", &snr_ratio, py::arg("p0"), py::arg("node"),
          py::arg("sigma0_sq"));

    // --- capacity ---
    py::class_<DiscreteChannel>(m, "DiscreteChannel")
        .def_readonly("input_levels", &DiscreteChannel::input_levels)
        .def_readonly("output_edges", &DiscreteChannel::output_edges)
        .def("num_inputs", &DiscreteChannel::num_inputs)
        .def("num_outputs", &DiscreteChannel::num_outputs)
        .def("w", &DiscreteChannel::w, py::arg("i"), py::arg("j"));

    py::class_<CapacityResult>(m, "CapacityResult")
        .def_readonly("capacity_bits", &CapacityResult::capacity_bits)
        .def_readonly("gap_bits", &CapacityResult::gap_bits)
        .def_readonly("iterations", &CapacityResult::iterations)
        .def_readonly("converged", &CapacityResult::converged)
        .def_readonly("input_levels", &CapacityResult::input_levels)
        .def_readonly("input_distribution", &CapacityResult::input_distribution)
        .def_readonly("lower_bound_history",
                      &CapacityResult::lower_bound_history);

    py::class_<CapacityPoint>(m, "CapacityPoint")
        .def_readonly("a_max_nM", &CapacityPoint::a_max_nM)
        .def_readonly("p_max", &CapacityPoint::p_max)
        .def_readonly("capacity_bits", &CapacityPoint::capacity_bits)
        .def_readonly("gap_bits", &CapacityPoint::gap_bits)
        .def_readonly("iterations", &CapacityPoint::iterations)
        .def_readonly("converged", &CapacityPoint::converged);

    m.def("output_spread", &output_spread, py::arg("p"), py::arg("node"),
          py::arg("sigma0_sq"));
    m.def("build_discrete_channel", &build_discrete_channel, py::arg("p_max"),
          py::arg("k_in"), py::arg("k_out"), py::arg("node"),
          py::arg("sigma0_sq"));
    m.def("blahut_arimoto", &blahut_arimoto, py::arg("channel"),
          py::arg("tol_bits") = 1e-6, py::arg("max_iter") = 2000,
          py::call_guard<py::gil_scoped_release>());
    m.def("mutual_information_bits", &mutual_information_bits,
          py::arg("channel"), py::arg("input_dist"));
    m.def("capacity_vs_amax", &capacity_vs_amax, py::arg("a_max_nM"),
          py::arg("node"), py::arg("sigma0_sq"), py::arg("k_in") = 201,
          py::arg("k_out") = 2001, py::arg("tol_bits") = 1e-6,
          py::arg("max_iter") = 2000,
          py::call_guard<py::gil_scoped_release>());

    // --- timing ---
    py::class_<DelayThresholds>(m, "DelayThresholds")
        .def(py::init<>())
        .def_readwrite("rise", &DelayThresholds::rise)
        .def_readwrite("fall", &DelayThresholds::fall);

    py::class_<DelayBreakdown>(m, "DelayBreakdown")
        .def_readonly("t_rise_s", &DelayBreakdown::t_rise_s)
        .def_readonly("t_reception_min", &DelayBreakdown::t_reception_min)
        .def_readonly("t_fall_s", &DelayBreakdown::t_fall_s)
        .def_readonly("t0_s", &DelayBreakdown::t0_s)
        .def_readonly("t_total_s", &DelayBreakdown::t_total_s)
        .def_readonly("thresholds", &DelayBreakdown::thresholds);

    m.def("rise_ratio", &rise_ratio, py::arg("r_cm"), py::arg("t_s"),
          py::arg("ch"));
    m.def("rise_time", &rise_time, py::arg("r_cm"), py::arg("ch"),
          py::arg("threshold") = 0.9);
    m.def("fall_time", &fall_time, py::arg("r_cm"), py::arg("t_on_s"),
          py::arg("ch"), py::arg("threshold") = 0.1);
    m.def("reception_delay", &reception_delay, py::arg("concentration_nM"),
          py::arg("k"));
    m.def("link_delays", &link_delays, py::arg("reception_nM"), py::arg("k"),
          py::arg("ch"), py::arg("thr") = DelayThresholds{});
    m.def("bits_per_hour", &bits_per_hour, py::arg("bits_per_symbol"),
          py::arg("total_delay_s"));

    // --- modulation ---
    py::class_<MarySpec>(m, "MarySpec")
        .def(py::init<>())
        .def_readwrite("m", &MarySpec::m)
        .def_readwrite("a_max_nM", &MarySpec::a_max_nM)
        .def_readwrite("one_sided_endpoints", &MarySpec::one_sided_endpoints);

    py::class_<MaryResult>(m, "MaryResult")
        .def_readonly("m", &MaryResult::m)
        .def_readonly("a_max_nM", &MaryResult::a_max_nM)
        .def_readonly("p_max", &MaryResult::p_max)
        .def_readonly("levels", &MaryResult::levels)
        .def_readonly("symbol_errors", &MaryResult::symbol_errors)
        .def_readonly("weights", &MaryResult::weights)
        .def_readonly("total_error", &MaryResult::total_error)
        .def_readonly("rate_bits", &MaryResult::rate_bits)
        .def_readonly("log2_m", &MaryResult::log2_m)
        .def_readonly("gap_bits", &MaryResult::gap_bits)
        .def_readonly("iterations", &MaryResult::iterations)
        .def_readonly("converged", &MaryResult::converged);

    m.def("symbol_error_probs", &symbol_error_probs, py::arg("spec"),
          py::arg("node"), py::arg("sigma0_sq"));
    m.def("total_error", &total_error, py::arg("symbol_errors"),
          py::arg("weights"));
    m.def("mary_performance", &mary_performance, py::arg("spec"),
          py::arg("node"), py::arg("sigma0_sq"), py::arg("k_out") = 2001,
          py::arg("tol_bits") = 1e-6, py::arg("max_iter") = 2000,
          py::call_guard<py::gil_scoped_release>());
    m.def("error_vs_amax", &error_vs_amax, py::arg("spec"),
          py::arg("a_max_nM"), py::arg("node"), py::arg("sigma0_sq"),
          py::arg("k_out") = 2001, py::arg("tol_bits") = 1e-6,
          py::arg("max_iter") = 2000,
          py::call_guard<py::gil_scoped_release>());

    // --- simulation ---
    py::enum_<NoiseModel>(m, "NoiseModel")
        .value("exact", NoiseModel::exact)
        .value("linearized", NoiseModel::linearized);

    py::class_<StageToggles>(m, "StageToggles")
        .def(py::init<>())
        .def_readwrite("transmitter_noise", &StageToggles::transmitter_noise)
        .def_readwrite("distance_noise", &StageToggles::distance_noise)
        .def_readwrite("receiver_noise", &StageToggles::receiver_noise);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("trials", &SimConfig::trials)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("model", &SimConfig::model)
        .def_readwrite("stages", &SimConfig::stages)
        .def_readwrite("truncate", &SimConfig::truncate)
        .def_readwrite("sample_receptors", &SimConfig::sample_receptors)
        .def_readwrite("threads", &SimConfig::threads);

    py::class_<SimResult>(m, "SimResult")
        .def_readonly("x", &SimResult::x)
        .def_readonly("a_r", &SimResult::a_r)
        .def_readonly("y", &SimResult::y)
        .def_readonly("clamp_events", &SimResult::clamp_events)
        .def_readonly("distance_redraws", &SimResult::distance_redraws)
        .def_readonly("stimulus_nM", &SimResult::stimulus_nM)
        .def_readonly("p_s_star", &SimResult::p_s_star)
        .def_readonly("a0_nM", &SimResult::a0_nM)
        .def_readonly("p0", &SimResult::p0);

    py::class_<Moments>(m, "Moments")
        .def_readonly("mean", &Moments::mean)
        .def_readonly("variance", &Moments::variance);

    m.def("simulate_link", &simulate_link, py::arg("stimulus_nM"),
          py::arg("node"), py::arg("ch"), py::arg("cfg"),
          py::call_guard<py::gil_scoped_release>());
    m.def("empirical_moments", &empirical_moments, py::arg("samples"));
    m.def("empirical_symbol_error", &empirical_symbol_error,
          py::arg("normalized_outputs"), py::arg("levels"),
          py::arg("true_index"));

    // --- validation ---
    py::class_<ValidationCheck>(m, "ValidationCheck")
        .def_readonly("name", &ValidationCheck::name)
        .def_readonly("analytic", &ValidationCheck::analytic)
        .def_readonly("empirical", &ValidationCheck::empirical)
        .def_readonly("rel_error", &ValidationCheck::rel_error)
        .def_readonly("tolerance", &ValidationCheck::tolerance)
        .def_readonly("status", &ValidationCheck::status);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("checks", &ValidationReport::checks)
        .def_readonly("all_passed", &ValidationReport::all_passed)
        .def_readonly("trials", &ValidationReport::trials)
        .def_readonly("stimulus_nM", &ValidationReport::stimulus_nM)
        .def_readonly("target_nM", &ValidationReport::target_nM)
        .def_readonly("p_s_star", &ValidationReport::p_s_star)
        .def_readonly("p0", &ValidationReport::p0)
        .def_readonly("text", &ValidationReport::text);

    m.def("run_validate", &run_validate, py::arg("target_received_nM"),
          py::arg("node"), py::arg("ch"), py::arg("cfg"),
          py::call_guard<py::gil_scoped_release>());

    // --- configuration ---
    py::register_exception<ConfigError>(m, "ConfigError");

    py::class_<CapacityConfig>(m, "CapacityConfig")
        .def(py::init<>())
        .def_readwrite("a_max_nM", &CapacityConfig::a_max_nM)
        .def_readwrite("sweep_nM", &CapacityConfig::sweep_nM)
        .def_readwrite("k_in", &CapacityConfig::k_in)
        .def_readwrite("k_out", &CapacityConfig::k_out)
        .def_readwrite("tol_bits", &CapacityConfig::tol_bits)
        .def_readwrite("max_iter", &CapacityConfig::max_iter);

    py::class_<TimingConfig>(m, "TimingConfig")
        .def(py::init<>())
        .def_readwrite("reception_nM", &TimingConfig::reception_nM)
        .def_readwrite("rise_threshold", &TimingConfig::rise_threshold)
        .def_readwrite("fall_threshold", &TimingConfig::fall_threshold)
        .def_readwrite("r_um", &TimingConfig::r_um)
        .def_readwrite("n_values", &TimingConfig::n_values);

    py::class_<ModulationConfig>(m, "ModulationConfig")
        .def(py::init<>())
        .def_readwrite("m_values", &ModulationConfig::m_values)
        .def_readwrite("sweep_nM", &ModulationConfig::sweep_nM)
        .def_readwrite("one_sided_endpoints",
                       &ModulationConfig::one_sided_endpoints)
        .def_readwrite("k_out", &ModulationConfig::k_out)
        .def_readwrite("tol_bits", &ModulationConfig::tol_bits)
        .def_readwrite("max_iter", &ModulationConfig::max_iter);

    py::class_<MonteCarloSettings>(m, "MonteCarloSettings")
        .def(py::init<>())
        .def_readwrite("target_nM", &MonteCarloSettings::target_nM)
        .def_readwrite("sim", &MonteCarloSettings::sim);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("node", &ExperimentConfig::node)
        .def_readwrite("channel", &ExperimentConfig::channel)
        .def_readwrite("alpha_auto", &ExperimentConfig::alpha_auto)
        .def_readwrite("alpha_headroom", &ExperimentConfig::alpha_headroom)
        .def_readwrite("capacity", &ExperimentConfig::capacity)
        .def_readwrite("timing", &ExperimentConfig::timing)
        .def_readwrite("modulation", &ExperimentConfig::modulation)
        .def_readwrite("montecarlo", &ExperimentConfig::montecarlo)
        .def_readonly("warnings", &ExperimentConfig::warnings)
        .def("finalize", &ExperimentConfig::finalize);

    m.def("default_config", &default_config);
    m.def("load_config", &load_config, py::arg("path"));

    // --- units ---
    m.def("um_to_cm", &um_to_cm, py::arg("um"));
    m.def("cm_to_um", &cm_to_um, py::arg("cm"));
    m.def("minutes_to_seconds", &minutes_to_seconds, py::arg("minutes"));
    m.def("seconds_to_minutes", &seconds_to_minutes, py::arg("seconds"));
    m.def("seconds_to_hours", &seconds_to_hours, py::arg("seconds"));
}

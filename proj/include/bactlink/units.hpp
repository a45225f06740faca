#pragma once

namespace bactlink {

// Internal convention: concentrations in nM, distances in cm, channel time in
// seconds, reaction kinetics in minutes. Micrometres and hours only appear at
// interfaces (config keys, CSV columns); convert on the way in/out.

constexpr double um_to_cm(double um) { return um * 1e-4; }
constexpr double cm_to_um(double cm) { return cm * 1e4; }
constexpr double minutes_to_seconds(double m) { return m * 60.0; }
constexpr double seconds_to_minutes(double s) { return s / 60.0; }
constexpr double seconds_to_hours(double s) { return s / 3600.0; }

}  // namespace bactlink

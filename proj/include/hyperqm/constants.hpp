#pragma once

namespace hyperqm::constants {

inline constexpr double pi = 3.14159265358979323846;

// CODATA 2018 exact values
inline constexpr double planck_h = 6.62607015e-34;     // J s
inline constexpr double boltzmann_kb = 1.380649e-23;   // J / K

}  // namespace hyperqm::constants

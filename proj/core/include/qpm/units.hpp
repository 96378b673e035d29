#pragma once

#include <numbers>
#include <string_view>

namespace qpm {

namespace constants {
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kHbar = 1.054571817e-34;              // J s
inline constexpr double kEpsilon0 = 8.8541878128e-12;         // F/m
inline constexpr double kMu0 = 1.25663706212e-6;              // H/m
inline constexpr double kPi = std::numbers::pi;
}  // namespace constants

/// Energy in meV to the equivalent angular frequency E/hbar in rad/s.
constexpr double mev_to_rad_per_s(double mev) {
  return mev * 1e-3 * constants::kElementaryCharge / constants::kHbar;
}

/// Ordinary frequency in THz to angular frequency in rad/s.
constexpr double thz_to_rad_per_s(double thz) { return 2.0 * constants::kPi * thz * 1e12; }

constexpr double rad_per_s_to_thz(double omega) { return omega / (2.0 * constants::kPi * 1e12); }

/// Parses a frequency literal: a bare number (rad/s), "<x> rad/s" or "<x> THz"
/// (ordinary frequency). Throws DomainError on anything else.
double parse_frequency(std::string_view text);

}  // namespace qpm

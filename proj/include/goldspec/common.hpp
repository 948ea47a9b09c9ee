#pragma once

#include <cstdio>
#include <numbers>
#include <string>

namespace goldspec {

/// Golden ratio (1 + sqrt(5)) / 2.
inline constexpr double kPhi = std::numbers::phi;

inline constexpr int kMaxGraphNodes = 20000;  // dense adjacency cap
inline constexpr int kMaxEigOrder = 5000;     // dense eigensolver cap, O(n^3)

inline constexpr double kGroupTol = 1e-6;         // eigenvalue multiplicity grouping
inline constexpr double kRatioDefinedTol = 1e-10; // gap/bulk below this => ratio undefined
inline constexpr double kGoldenTol = 1e-8;        // exact golden verdict
inline constexpr double kAlmostGoldenTol = 0.05;  // "almost golden" scan default

// 12 significant digits, '.' decimal separator.
inline std::string fmt12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace goldspec

#pragma once

// Frozen pre-run measurements for the acceptance gate. Regenerate with
// `acceptance --emit-pins`, paste the block below, rebuild.

namespace pins {

inline constexpr bool kHavePins = true;

inline constexpr double kC4MaxGaussOverHbk = 0.96165953966286055;

inline constexpr double kC6Ratios[4] = {0.00011901574268289393, 7.5282254761348819e-05,
                                        4.2576312005211266e-05, 2.2650755783636807e-05};

inline constexpr double kC7FractionX1000 = 0;
inline constexpr double kC7FractionX3000 = 0;

inline constexpr unsigned long long kC9EbarCount = 35;

inline constexpr double kC10Ratios[3] = {1.804, 1.9069, 1.9159299999999999};

}  // namespace pins

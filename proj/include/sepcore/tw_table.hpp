#pragma once

namespace sepcore::stats::detail {

inline constexpr int kTw1Count = 1601;
inline constexpr double kTw1Lo = -10.0;
inline constexpr double kTw1Step = 0.01;

extern const double kTw1Cdf[kTw1Count];

}  // namespace sepcore::stats::detail

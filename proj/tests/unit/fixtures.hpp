#pragma once

#include "wfatlas/fan.hpp"

namespace fixtures {

using wfatlas::Fan;
using wfatlas::IntVector;
using wfatlas::make_fan;

inline IntVector v(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Fan p1() { return make_fan(1, {v({1}), v({-1})}, {{0}, {1}}); }

inline Fan p2() {
  return make_fan(2, {v({1, 0}), v({0, 1}), v({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
}

inline Fan p1xp1() {
  return make_fan(2, {v({1, 0}), v({0, 1}), v({-1, 0}), v({0, -1})},
                  {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Hirzebruch surface F_2.
inline Fan f2() {
  return make_fan(2, {v({1, 0}), v({0, 1}), v({-1, 2}), v({0, -1})},
                  {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Blowup of P^1×P^1 at a torus-fixed point: rays x1..x5 around the circle.
inline Fan ex23() {
  return make_fan(2, {v({1, 0}), v({0, 1}), v({-1, 0}), v({-1, -1}), v({0, -1})},
                  {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

inline Fan p112() {
  return make_fan(2, {v({1, 0}), v({0, 1}), v({-1, -2})}, {{0, 1}, {1, 2}, {0, 2}});
}

inline Fan p3() {
  return make_fan(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({-1, -1, -1})},
                  {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Complete non-projective threefold of Picard rank 4 and its flop.
inline std::vector<IntVector> sigma_rays() {
  return {v({-1, -1, -1}), v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}),
          v({0, -1, -1}),  v({-1, 0, -1}), v({-1, -1, 0})};
}

inline Fan sigma1() {
  return make_fan(3, sigma_rays(),
                  {{0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {1, 2, 3}, {1, 2, 4},
                   {1, 3, 6}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6}});
}

inline Fan sigma2() {
  return make_fan(3, sigma_rays(),
                  {{0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {1, 2, 3}, {1, 2, 4},
                   {1, 3, 6}, {1, 4, 6}, {2, 3, 5}, {2, 4, 5}, {3, 5, 6}});
}

}  // namespace fixtures

#pragma once

#include <optional>
#include <random>
#include <vector>

#include <json.hpp>

#include "clusterlab/rational.hpp"

namespace clusterlab {

enum class Denominator { inverse, literal };
enum class YInit { full, parity };

/// Values Y_{i,i'} at two consecutive times, 1 <= i <= p, 1 <= i' <= q,
/// stored row-major at (i-1)*q + (i'-1).
struct YState {
  int p = 0;
  int q = 0;
  std::vector<Rational> prev;
  std::vector<Rational> cur;

  YState() = default;
  YState(int p, int q);
  Rational& at(std::vector<Rational>& level, int i, int ip) const;
  const Rational& at(const std::vector<Rational>& level, int i, int ip) const;
  friend bool operator==(const YState& a, const YState& b) { return a.prev == b.prev && a.cur == b.cur; }
};

/// One step of Y_{t-1} Y_{t+1} = prod_j (1+Y_{j,i'})^{a_ij} / prod_j' D_{i,j'},
/// D = 1 + Y^{-1} (inverse) or 1 + Y (literal). Throws ArithmeticError on a
/// non-positive value.
YState y_step(const YState& s, Denominator d = Denominator::inverse);

/// Full: both levels random. Parity: the class i+i'+t even is random at
/// t = 0, 1 and the odd class at time t copies the even class at t + 1.
YState y_initial(int p, int q, YInit init, std::mt19937_64& rng);

struct YTrial {
  std::optional<int> period;
  bool divides = false;
};

struct YReport {
  int p = 0;
  int q = 0;
  int bound = 0;  // 2(h + h') = 2(p + q + 2)
  YInit init = YInit::parity;
  Denominator denominator = Denominator::inverse;
  std::vector<YTrial> trials;
  bool all_divide() const;
};

/// Minimal T <= max_steps with state_T == state_0, or none. Orbits whose
/// values outgrow 65536 bits are cut off as non-periodic.
std::optional<int> y_orbit_period(const YState& s0, int max_steps, Denominator d = Denominator::inverse);

YReport y_period(int p, int q, YInit init, int trials, int max_steps, std::mt19937_64& rng,
                 Denominator d = Denominator::inverse);

nlohmann::json to_json(const YReport& r);

}  // namespace clusterlab

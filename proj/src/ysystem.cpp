#include "clusterlab/ysystem.hpp"

#include "clusterlab/errors.hpp"

namespace clusterlab {

YState::YState(int p_, int q_)
    : p(p_), q(q_), prev(static_cast<std::size_t>(p_ * q_), Rational(1)), cur(prev) {
  if (p < 1 || q < 1) throw InputError("Y-system ranks must be positive");
}

Rational& YState::at(std::vector<Rational>& level, int i, int ip) const {
  return level[static_cast<std::size_t>((i - 1) * q + (ip - 1))];
}

const Rational& YState::at(const std::vector<Rational>& level, int i, int ip) const {
  return level[static_cast<std::size_t>((i - 1) * q + (ip - 1))];
}

YState y_step(const YState& s, Denominator d) {
  YState next = s;
  next.prev = s.cur;
  for (int i = 1; i <= s.p; ++i)
    for (int ip = 1; ip <= s.q; ++ip) {
      Rational num = 1, den = 1;
      for (int j : {i - 1, i + 1})
        if (j >= 1 && j <= s.p) num *= 1 + s.at(s.cur, j, ip);
      for (int jp : {ip - 1, ip + 1})
        if (jp >= 1 && jp <= s.q) {
          const Rational& y = s.at(s.cur, i, jp);
          den *= d == Denominator::inverse ? Rational(1 + 1 / y) : Rational(1 + y);
        }
      Rational v = num / den / s.at(s.prev, i, ip);
      if (sgn(v) <= 0) throw ArithmeticError("Y-system value left the positive cone");
      next.at(next.cur, i, ip) = v;
    }
  return next;
}

namespace {

constexpr std::size_t kHeightLimitBits = 1 << 16;

Rational random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, 9);
  return make_rational(dist(rng), dist(rng));
}

}  // namespace

YState y_initial(int p, int q, YInit init, std::mt19937_64& rng) {
  YState s(p, q);
  if (init == YInit::full) {
    for (auto& v : s.prev) v = random_positive(rng);
    for (auto& v : s.cur) v = random_positive(rng);
    return s;
  }
  // Even class (i + i' + t even) at t = 0 and t = 1.
  for (int i = 1; i <= p; ++i)
    for (int ip = 1; ip <= q; ++ip) {
      bool even = (i + ip) % 2 == 0;
      (even ? s.at(s.prev, i, ip) : s.at(s.cur, i, ip)) = random_positive(rng);
    }
  // The even class is closed under the recurrence, so its t = 2 values are
  // already determined. The odd class at t is the even class at t + 1.
  YState two = y_step(s);
  for (int i = 1; i <= p; ++i)
    for (int ip = 1; ip <= q; ++ip) {
      if ((i + ip) % 2 == 0)
        s.at(s.cur, i, ip) = two.at(two.cur, i, ip);
      else
        s.at(s.prev, i, ip) = s.at(s.cur, i, ip);
    }
  return s;
}

bool YReport::all_divide() const {
  for (const auto& t : trials)
    if (!t.divides) return false;
  return true;
}

std::optional<int> y_orbit_period(const YState& s0, int max_steps, Denominator d) {
  YState s = s0;
  for (int t = 1; t <= max_steps; ++t) {
    s = y_step(s, d);
    if (s == s0) return t;
    // A non-periodic orbit grows in height geometrically; stop early.
    for (const auto& v : s.cur)
      if (mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2) > kHeightLimitBits)
        return std::nullopt;
  }
  return std::nullopt;
}

YReport y_period(int p, int q, YInit init, int trials, int max_steps, std::mt19937_64& rng, Denominator d) {
  YReport r;
  r.p = p;
  r.q = q;
  r.bound = 2 * (p + q + 2);
  r.init = init;
  r.denominator = d;
  if (max_steps < r.bound) throw InputError("max_steps must be at least 2(h + h')");
  for (int k = 0; k < trials; ++k) {
    YTrial t;
    t.period = y_orbit_period(y_initial(p, q, init, rng), max_steps, d);
    t.divides = t.period && r.bound % *t.period == 0;
    r.trials.push_back(t);
  }
  return r;
}

nlohmann::json to_json(const YReport& r) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : r.trials)
    trials.push_back({{"period", t.period ? nlohmann::json(*t.period) : nlohmann::json(nullptr)},
                      {"divides_bound", t.divides}});
  return {{"p", r.p},
          {"q", r.q},
          {"bound", r.bound},
          {"init", r.init == YInit::full ? "full" : "parity"},
          {"denominator", r.denominator == Denominator::inverse ? "inverse" : "literal"},
          {"trials", trials},
          {"all_divide", r.all_divide()}};
}

}  // namespace clusterlab

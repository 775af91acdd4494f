#include "ecgroup/curve_reduce.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "ecgroup/fp_curve.hpp"

namespace ecgroup {

const VarList& curve_vars() {
  static const VarList vars(std::vector<std::string>{"Y0", "Y1", "Y2", "X0", "X1", "X2"});
  return vars;
}

const Shf& theta() {
  static const Shf t = Shf::pop_raw(
      3, Shf::pow_raw(1,
                      Shf::pow_raw(1, Shf::pow_raw(1, Shf::integer(1), Shf::integer(kCurveA)),
                                   Shf::integer(1)),
                      Shf::integer(0)));
  return t;
}

Shf theta_power(std::uint64_t k) {
  static std::mutex lock;
  static std::vector<Shf> table{Shf::integer(1), theta()};
  std::scoped_lock guard(lock);
  while (table.size() <= k) table.push_back(mul(theta(), table.back()));
  return table[k];
}

std::pair<Shf, Shf> split(const Shf& h, unsigned j, std::uint64_t k) {
  if (j > 2) throw std::domain_error("split: j must be 0, 1 or 2");
  if (h.is_integer() || j < k) return {h, Shf::integer(0)};

  if (h.is_pop()) {
    std::uint64_t i = h.skip();
    auto [p0, p1] = split(h.pop_body(), j, k + i);
    return {norm_pop(i, p0), norm_pop(i, p1)};
  }

  std::uint64_t i = h.exponent();
  auto [p0, p1] = split(h.pow_lead(), j, k);
  auto [q0, q1] = split(h.pow_tail(), j, k + 1);
  if (j > k) {
    return {norm_pow(i, p0, q0), norm_pow(i, p1, q1)};
  }
  if (i % 2 == 0) {
    // Yj^i = theta^(i/2) mod the curve equation.
    Shf th = theta_power(i / 2);
    return {add(mul(th, p0), norm_pop(1, q0)), add(mul(th, p1), norm_pop(1, q1))};
  }
  // Odd power: Yj^i = theta^((i+1)/2) / Yj = theta^((i-1)/2) * Yj, so
  // the lead's even part crosses over to the linear cofactor and back.
  return {add(mul(theta_power((i + 1) / 2), p1), norm_pop(1, q0)),
          add(mul(theta_power((i - 1) / 2), p0), norm_pop(1, q1))};
}

Shf rewrite(const Shf& h, unsigned j) {
  auto [h0, h1] = split(h, j, 0);
  Shf yj = norm_pop(j, Shf::pow_raw(1, Shf::integer(1), Shf::integer(0)));
  return add(h0, mul(h1, yj));
}

Shf reduce(const Term& sigma) {
  return rewrite(rewrite(rewrite(norm(sigma, curve_vars()), 0), 1), 2);
}

}  // namespace ecgroup

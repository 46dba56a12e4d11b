#include "quiver_cones/zoo.hpp"

namespace qcones::zoo {

namespace {

void link(std::map<std::string, std::string>& m, const std::string& x, const std::string& y) {
  m[x] = y;
  m[y] = x;
}

}  // namespace

QuiverBundle make_line(int n) {
  if (n < 1) throw QuiverError(ErrorKind::BadParameter, "line quiver needs n >= 1");
  QuiverDesc d{"line" + std::to_string(n), {}, {}};
  for (int i = 1; i <= n; ++i) d.vertices.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) d.arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  Quiver q(std::move(d));

  InvolutionDesc tau{"tau", {}, {}};
  for (int i = 1; i <= n; ++i) link(tau.vmap, std::to_string(i), std::to_string(n + 1 - i));
  for (int i = 1; i < n; ++i) link(tau.amap, "a" + std::to_string(i), "a" + std::to_string(n - i));
  Involution inv(q, tau);
  return {std::move(q), {std::move(inv)}};
}

QuiverBundle make_kronecker(int n) {
  if (n < 1) throw QuiverError(ErrorKind::BadParameter, "Kronecker quiver needs n >= 1");
  QuiverDesc d{"kronecker" + std::to_string(n), {"1", "2"}, {}};
  for (int i = 1; i <= n; ++i) d.arrows.push_back({"a" + std::to_string(i), "1", "2"});
  Quiver q(std::move(d));
  InvolutionDesc tau{"tau", {}, {}};
  link(tau.vmap, "1", "2");
  Involution inv(q, tau);
  return {std::move(q), {std::move(inv)}};
}

QuiverBundle make_sun(int k, int n) {
  if (k < 2 || n < 1) throw QuiverError(ErrorKind::BadParameter, "Sun quiver needs k >= 2 and n >= 1");
  const int m = 2 * k;
  auto mod = [m](int i) { return ((i % m) + m) % m; };
  auto v = [&](int i, int j) { return std::to_string(mod(i)) + "." + std::to_string(j); };
  auto a = [&](int i, int j) { return "a" + v(i, j); };

  QuiverDesc d{"sun" + std::to_string(m) + "_" + std::to_string(n), {}, {}};
  for (int i = 0; i < m; ++i)
    for (int j = 1; j <= n; ++j) d.vertices.push_back(v(i, j));
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j <= n; ++j) {
      bool odd = i % 2 == 1;
      if (j == n) {
        // Ring arrow between (i, n) and (i+1, n); even i is the tail.
        d.arrows.push_back(odd ? ArrowDesc{a(i, j), v(i + 1, n), v(i, n)} : ArrowDesc{a(i, j), v(i, n), v(i + 1, n)});
      } else {
        // Spoke between (i, j) and (i, j+1).
        d.arrows.push_back(odd ? ArrowDesc{a(i, j), v(i, j + 1), v(i, j)} : ArrowDesc{a(i, j), v(i, j), v(i, j + 1)});
      }
    }
  }
  Quiver q(std::move(d));

  std::vector<Involution> invs;
  InvolutionDesc tau{"tau", {}, {}};
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j <= n; ++j) {
      tau.vmap[v(i, j)] = v(1 - i, j);
      tau.amap[a(i, j)] = j == n ? a(-i, j) : a(1 - i, j);
    }
  }
  invs.emplace_back(q, tau);

  if (k % 2 == 1) {
    InvolutionDesc rho{"rho", {}, {}};
    for (int i = 0; i < m; ++i) {
      for (int j = 1; j <= n; ++j) {
        rho.vmap[v(i, j)] = v(i + k, j);
        rho.amap[a(i, j)] = a(i + k, j);
      }
    }
    invs.emplace_back(q, rho);
  }
  return {std::move(q), std::move(invs)};
}

QuiverBundle make_d5hat() {
  QuiverDesc d{"d5hat",
               {"x1", "x2", "x3", "x4", "x5", "x6"},
               {{"a1", "x1", "x3"}, {"a2", "x2", "x3"}, {"a3", "x3", "x4"}, {"a4", "x4", "x5"}, {"a5", "x4", "x6"}}};
  Quiver q(std::move(d));
  InvolutionDesc tau{"tau", {}, {}};
  link(tau.vmap, "x1", "x6");
  link(tau.vmap, "x2", "x5");
  link(tau.vmap, "x3", "x4");
  link(tau.amap, "a1", "a5");
  link(tau.amap, "a2", "a4");
  Involution inv(q, tau);
  return {std::move(q), {std::move(inv)}};
}

}  // namespace qcones::zoo

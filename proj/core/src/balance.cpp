#include "pathdec/balance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace pathdec {

namespace {

void validate_request(const BalanceRequest& req) {
  const int n = req.universe;
  if (n < 1) throw std::invalid_argument("universe must be nonempty");
  if (req.t < 1 || req.m < 1) throw std::invalid_argument("t, m must be >= 1");
  if (req.t * req.m > n || 2 * req.t > n)
    throw std::invalid_argument("need tm <= |V| and 2t <= |V|");
  if (static_cast<int>(req.f.size()) != n)
    throw std::invalid_argument("f must assign a value to every element");
  int max_f = 0;
  for (int v = 0; v < n; ++v) {
    if (req.f[v] < 0 || req.f[v] > req.m)
      throw std::invalid_argument("f values must lie in [0, m]");
    max_f = std::max(max_f, req.f[v]);
  }
  if (max_f != req.m)
    throw std::invalid_argument("max f must equal m");
  const int tm = req.t * req.m;
  if (static_cast<int>(req.anchors.size()) != 2 * tm)
    throw std::invalid_argument("need exactly 2tm anchor pairs");
  for (const auto& [x, y] : req.anchors)
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("anchor out of range");
  for (int i = 0; i < tm; ++i) {
    std::set<int> four{req.anchors[i].first, req.anchors[i].second,
                       req.anchors[tm + i].first, req.anchors[tm + i].second};
    if (four.size() != 4)
      throw std::invalid_argument(
          "anchors x_i, y_i, x_{tm+i}, y_{tm+i} not distinct at i = " +
          std::to_string(i));
  }
}

}  // namespace

BalanceFamily balance_sets(const BalanceRequest& req) {
  validate_request(req);
  const int n = req.universe;
  const int t = req.t;
  const int m = req.m;
  const int tm = t * m;
  const int part_cap = n / t;  // non-anchor elements per part

  // f == sum of indicators of its level sets.
  std::vector<std::vector<char>> level(m, std::vector<char>(n, 0));
  for (int i = 0; i < m; ++i)
    for (int v = 0; v < n; ++v) level[i][v] = req.f[v] >= i + 1;

  // parts[g]: the set A removed to form S_g = V \ A; global index g pairs
  // block i, slot j as g = i*t + j.
  std::vector<std::vector<char>> in_part(tm, std::vector<char>(n, 0));
  for (int block = 0; block < m; ++block) {
    const auto& in_u = level[block];
    std::vector<int> anchor_load(t, 0);
    std::vector<int> other_load(t, 0);
    std::vector<char> placed(n, 0);

    // Anchors of this block ride in their own part, where they do not count
    // against the n/t cap.
    for (int j = 0; j < t; ++j) {
      const int g = block * t + j;
      for (int a : {req.anchors[g].first, req.anchors[g].second}) {
        if (in_u[a] || placed[a]) continue;
        in_part[g][a] = 1;
        placed[a] = 1;
        ++anchor_load[j];
      }
    }
    for (int v = 0; v < n; ++v) {
      if (in_u[v] || placed[v]) continue;
      int best = -1;
      for (int j = 0; j < t; ++j) {
        if (other_load[j] >= part_cap) continue;
        if (best == -1 || other_load[j] < other_load[best]) best = j;
      }
      if (best == -1)
        throw std::runtime_error(
            "cannot split the level-set complement into parts of size <= n/t; "
            "the request is too lopsided for the construction");
      in_part[block * t + best][v] = 1;
      ++other_load[best];
    }
  }

  BalanceFamily family;
  family.sets.resize(2 * tm);
  for (int g = 0; g < tm; ++g) {
    const auto [x, y] = req.anchors[g];
    // T_g = S_g u {x, y} with S_g = V \ A_g.
    for (int v = 0; v < n; ++v)
      if (!in_part[g][v] || v == x || v == y) family.sets[g].push_back(v);
    // T_{tm+g} = V \ ({x, y} \ S_g).
    for (int v = 0; v < n; ++v) {
      bool excluded = (v == x || v == y) && in_part[g][v];
      if (!excluded) family.sets[tm + g].push_back(v);
    }
  }

  if (CheckResult check = check_balance_family(req, family); !check)
    throw std::logic_error("balance family failed verification: " + check.detail);
  return family;
}

CheckResult check_balance_family(const BalanceRequest& req,
                                 const BalanceFamily& family) {
  const int n = req.universe;
  const int tm = req.t * req.m;
  if (static_cast<int>(family.sets.size()) != 2 * tm)
    return {false, "family has " + std::to_string(family.sets.size()) +
                       " sets, want " + std::to_string(2 * tm)};

  std::vector<int> count(n, 0);
  for (const auto& s : family.sets)
    for (int v : s) ++count[v];
  for (int v = 0; v < n; ++v) {
    int want = req.f[v] + (2 * req.t - 1) * req.m;
    if (count[v] != want)
      return {false, "element " + std::to_string(v) + " occurs " +
                         std::to_string(count[v]) + " times, want " +
                         std::to_string(want)};
  }
  for (int i = 0; i < 2 * tm; ++i) {
    //|T_i| >= (1 - 1/t) n, i.e. t|T_i| >= (t-1) n.
    if (static_cast<long long>(req.t) *
            static_cast<long long>(family.sets[i].size()) <
        static_cast<long long>(req.t - 1) * n)
      return {false, "set " + std::to_string(i) + " of size " +
                         std::to_string(family.sets[i].size()) +
                         " below (1 - 1/t) n"};
    const auto [x, y] = req.anchors[i];
    if (!std::binary_search(family.sets[i].begin(), family.sets[i].end(), x) ||
        !std::binary_search(family.sets[i].begin(), family.sets[i].end(), y))
      return {false, "anchors missing from set " + std::to_string(i)};
  }
  return {};
}

}  // namespace pathdec

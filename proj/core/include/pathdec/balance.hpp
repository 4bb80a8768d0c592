#pragma once

#include <utility>
#include <vector>

#include "pathdec/partial_ops.hpp"

namespace pathdec {

// Request for a family of 2tm subsets T_1..T_2tm of {0..n-1} with prescribed
// per-element occurrence counts f(v) + (2t-1)m, sizes >= (1 - 1/t)n, and
// anchors x_i, y_i in T_i. Anchor quadruples (x_i, y_i, x_{tm+i}, y_{tm+i})
// must be four distinct elements for each i in [tm]; max f must equal m.
struct BalanceRequest {
  int universe = 0;  // n, elements 0..n-1
  std::vector<int> f;
  int t = 1;
  int m = 1;
  std::vector<std::pair<int, int>> anchors;  // size 2tm, (x_i, y_i)
};

struct BalanceFamily {
  std::vector<std::vector<int>> sets;  // sorted members
};

// Level-set construction: f decomposes into indicators of U_1..U_m; each
// complement V \ U_i splits into t parts no bigger than n/t (anchors may ride
// along in their own part), giving sets S as complements; then
// T_i = S_i u {x_i, y_i} and T_{tm+i} = V \ ({x_i, y_i} \ S_i).
BalanceFamily balance_sets(const BalanceRequest& request);

// Direct recount of all three conclusions; used by tests and callers.
CheckResult check_balance_family(const BalanceRequest& request,
                                 const BalanceFamily& family);

}  // namespace pathdec

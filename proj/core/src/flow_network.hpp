#pragma once

#include <utility>
#include <vector>

namespace pathdec::detail {

// Max-flow by shortest augmenting paths (BFS). Deterministic for a fixed
// insertion order of edges.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count);

  int node_count() const { return static_cast<int>(adj_.size()); }

  // Returns an edge id usable with flow_on().
  int add_edge(int from, int to, long long capacity);

  long long max_flow(int source, int sink);

  long long flow_on(int edge_id) const;

  // Nodes reachable from `source` in the residual network; call after
  // max_flow to extract the minimum cut.
  std::vector<char> residual_reachable(int source) const;

 private:
  struct Arc {
    int to;
    long long cap;
    int rev;  // index of the reverse arc in adj_[to]
  };

  std::vector<std::vector<Arc>> adj_;
  std::vector<std::pair<int, int>> edges_;  // id -> (node, arc index)
  std::vector<long long> original_cap_;
};

}  // namespace pathdec::detail

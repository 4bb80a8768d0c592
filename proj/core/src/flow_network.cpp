#include "flow_network.hpp"

#include <limits>
#include <queue>

namespace pathdec::detail {

FlowNetwork::FlowNetwork(int node_count) : adj_(node_count) {}

int FlowNetwork::add_edge(int from, int to, long long capacity) {
  int id = static_cast<int>(edges_.size());
  edges_.emplace_back(from, static_cast<int>(adj_[from].size()));
  original_cap_.push_back(capacity);
  adj_[from].push_back({to, capacity, static_cast<int>(adj_[to].size())});
  adj_[to].push_back({from, 0, static_cast<int>(adj_[from].size()) - 1});
  return id;
}

long long FlowNetwork::max_flow(int source, int sink) {
  long long total = 0;
  std::vector<int> prev_node(node_count());
  std::vector<int> prev_arc(node_count());
  while (true) {
    std::fill(prev_node.begin(), prev_node.end(), -1);
    prev_node[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && prev_node[sink] == -1) {
      int u = q.front();
      q.pop();
      for (size_t i = 0; i < adj_[u].size(); ++i) {
        const Arc& a = adj_[u][i];
        if (a.cap > 0 && prev_node[a.to] == -1) {
          prev_node[a.to] = u;
          prev_arc[a.to] = static_cast<int>(i);
          q.push(a.to);
        }
      }
    }
    if (prev_node[sink] == -1) break;
    long long push = std::numeric_limits<long long>::max();
    for (int v = sink; v != source; v = prev_node[v])
      push = std::min(push, adj_[prev_node[v]][prev_arc[v]].cap);
    for (int v = sink; v != source; v = prev_node[v]) {
      Arc& a = adj_[prev_node[v]][prev_arc[v]];
      a.cap -= push;
      adj_[a.to][a.rev].cap += push;
    }
    total += push;
  }
  return total;
}

long long FlowNetwork::flow_on(int edge_id) const {
  auto [node, idx] = edges_[edge_id];
  return original_cap_[edge_id] - adj_[node][idx].cap;
}

std::vector<char> FlowNetwork::residual_reachable(int source) const {
  std::vector<char> seen(node_count(), 0);
  std::queue<int> q;
  seen[source] = 1;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (const Arc& a : adj_[u]) {
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        q.push(a.to);
      }
    }
  }
  return seen;
}

}  // namespace pathdec::detail

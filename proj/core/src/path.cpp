#include "pathdec/path.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace pathdec {

namespace {

void check_distinct(const std::vector<Vertex>& verts, const char* what) {
  std::unordered_set<Vertex> seen;
  for (Vertex v : verts)
    if (!seen.insert(v).second)
      throw std::invalid_argument(std::string(what) + " repeats vertex " +
                                  std::to_string(v));
}

std::string join_arrows(const std::vector<Vertex>& verts) {
  std::ostringstream out;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i) out << "->";
    out << verts[i];
  }
  return out.str();
}

}  // namespace

Path::Path(std::vector<Vertex> vertices) : verts_(std::move(vertices)) {
  if (verts_.empty()) throw std::invalid_argument("path must be non-empty");
  check_distinct(verts_, "path");
}

bool Path::contains(Vertex v) const {
  return std::find(verts_.begin(), verts_.end(), v) != verts_.end();
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> result;
  result.reserve(verts_.size() - 1);
  for (size_t i = 0; i + 1 < verts_.size(); ++i)
    result.push_back({verts_[i], verts_[i + 1]});
  return result;
}

bool Path::validate_against(const Digraph& host, std::string* why) const {
  for (Vertex v : verts_) {
    if (v < 0 || v >= host.vertex_count()) {
      if (why) *why = "vertex " + std::to_string(v) + " out of range";
      return false;
    }
  }
  for (size_t i = 0; i + 1 < verts_.size(); ++i) {
    if (!host.has_edge(verts_[i], verts_[i + 1])) {
      if (why)
        *why = "missing edge " + std::to_string(verts_[i]) + "->" +
               std::to_string(verts_[i + 1]);
      return false;
    }
  }
  return true;
}

Path Path::joined_with(const Path& next) const {
  if (target() != next.source())
    throw std::invalid_argument("cannot join: " + to_string() + " ends at " +
                                std::to_string(target()) + ", " +
                                next.to_string() + " starts at " +
                                std::to_string(next.source()));
  std::vector<Vertex> verts = verts_;
  verts.insert(verts.end(), next.verts_.begin() + 1, next.verts_.end());
  return Path(std::move(verts));
}

std::string Path::to_string() const { return join_arrows(verts_); }

Cycle::Cycle(std::vector<Vertex> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 2)
    throw std::invalid_argument("cycle needs at least two vertices");
  check_distinct(verts_, "cycle");
}

bool Cycle::contains(Vertex v) const {
  return std::find(verts_.begin(), verts_.end(), v) != verts_.end();
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> result;
  result.reserve(verts_.size());
  for (size_t i = 0; i < verts_.size(); ++i)
    result.push_back({verts_[i], verts_[(i + 1) % verts_.size()]});
  return result;
}

bool Cycle::validate_against(const Digraph& host, std::string* why) const {
  for (const Edge& e : edges()) {
    if (e.from < 0 || e.from >= host.vertex_count() || e.to < 0 ||
        e.to >= host.vertex_count()) {
      if (why) *why = "cycle vertex out of range";
      return false;
    }
    if (!host.has_edge(e.from, e.to)) {
      if (why)
        *why = "missing edge " + std::to_string(e.from) + "->" +
               std::to_string(e.to);
      return false;
    }
  }
  return true;
}

Path Cycle::arc(Vertex from, Vertex to) const {
  auto it_from = std::find(verts_.begin(), verts_.end(), from);
  auto it_to = std::find(verts_.begin(), verts_.end(), to);
  if (it_from == verts_.end() || it_to == verts_.end())
    throw std::invalid_argument("arc endpoints must lie on the cycle");
  std::vector<Vertex> verts;
  size_t i = static_cast<size_t>(it_from - verts_.begin());
  verts.push_back(verts_[i]);
  while (verts_[i] != to) {
    i = (i + 1) % verts_.size();
    verts.push_back(verts_[i]);
  }
  return Path(std::move(verts));
}

Cycle Cycle::rotated_to_min() const {
  auto it = std::min_element(verts_.begin(), verts_.end());
  std::vector<Vertex> verts(it, verts_.end());
  verts.insert(verts.end(), verts_.begin(), it);
  return Cycle(std::move(verts));
}

std::string Cycle::to_string() const {
  return join_arrows(verts_) + "->" + std::to_string(verts_.front());
}

}  // namespace pathdec

#include "kac/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace kac {

WeightDiagram WeightDiagram::of(const Weight& w) {
  require_dominant(w);
  RhoWeight rw = rho_shift(w);
  WeightDiagram d;
  d.m_ = w.m;
  d.n_ = w.n;
  for (int v : rw.left) d.symbols_[v] = Symbol::Greater;
  for (int v : rw.right) {
    auto it = d.symbols_.find(v);
    if (it != d.symbols_.end()) {
      it->second = Symbol::Cross;
    } else {
      d.symbols_[v] = Symbol::Less;
    }
  }
  return d;
}

Weight WeightDiagram::weight() const {
  std::vector<int> left_rho, right_rho;
  for (const auto& [v, s] : symbols_) {
    if (s == Symbol::Cross || s == Symbol::Greater) left_rho.push_back(v);
    if (s == Symbol::Cross || s == Symbol::Less) right_rho.push_back(v);
  }
  RhoWeight rw{static_cast<int>(left_rho.size()),
               static_cast<int>(right_rho.size()), std::move(left_rho),
               std::move(right_rho)};
  return from_rho(rw);
}

Symbol WeightDiagram::at(int vertex) const {
  auto it = symbols_.find(vertex);
  return it == symbols_.end() ? Symbol::Empty : it->second;
}

int WeightDiagram::count_ell(int s, int t) const {
  if (s >= t) throw domain_error("count_ell requires s < t");
  int crosses = 0;
  int nonempty = 0;
  for (auto it = symbols_.lower_bound(s + 1); it != symbols_.end() && it->first < t;
       ++it) {
    ++nonempty;
    if (it->second == Symbol::Cross) ++crosses;
  }
  int empties = (t - s - 1) - nonempty;
  return crosses - empties;
}

std::vector<int> WeightDiagram::cross_positions() const {
  std::vector<int> out;
  for (const auto& [v, s] : symbols_) {
    if (s == Symbol::Cross) out.push_back(v);
  }
  return out;
}

int WeightDiagram::min_vertex() const {
  return symbols_.empty() ? 0 : symbols_.begin()->first;
}

int WeightDiagram::max_vertex() const {
  return symbols_.empty() ? 0 : symbols_.rbegin()->first;
}

std::string WeightDiagram::to_string() const {
  if (symbols_.empty()) return "@0:";
  std::ostringstream os;
  int lo = min_vertex();
  int hi = max_vertex();
  os << "@" << lo << ":";
  for (int v = lo; v <= hi; ++v) os << static_cast<char>(at(v));
  return os.str();
}

WeightDiagram WeightDiagram::parse(std::string_view text) {
  if (text.empty() || text.front() != '@') {
    throw domain_error("diagram text must start with '@'");
  }
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw domain_error("diagram text missing ':'");
  }
  int start = 0;
  try {
    start = std::stoi(std::string(text.substr(1, colon - 1)));
  } catch (const std::exception&) {
    throw domain_error("bad diagram start index");
  }
  WeightDiagram d;
  int v = start;
  for (char c : text.substr(colon + 1)) {
    switch (c) {
      case 'x': d.symbols_[v] = Symbol::Cross; break;
      case '<': d.symbols_[v] = Symbol::Less; break;
      case '>': d.symbols_[v] = Symbol::Greater; break;
      case '.': break;
      default:
        throw domain_error(std::string("bad diagram symbol '") + c + "'");
    }
    ++v;
  }
  int crosses = 0, less = 0, greater = 0;
  for (const auto& [_, s] : d.symbols_) {
    if (s == Symbol::Cross) ++crosses;
    if (s == Symbol::Less) ++less;
    if (s == Symbol::Greater) ++greater;
  }
  d.m_ = crosses + greater;
  d.n_ = crosses + less;
  return d;
}

WeightDiagram diagram_of(const Weight& w) { return WeightDiagram::of(w); }
Weight weight_of(const WeightDiagram& d) { return d.weight(); }

}  // namespace kac

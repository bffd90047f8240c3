#include "kac/weight.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace kac {

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) {
      throw domain_error("empty coordinate in " + std::string(what));
    }
    int value = 0;
    auto [p, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || p != token.data() + token.size()) {
      throw domain_error("bad coordinate '" + token + "' in " +
                         std::string(what));
    }
    out.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

}  // namespace

RhoWeight rho_shift(const Weight& w) {
  RhoWeight rw{w.m, w.n, w.left, w.right};
  for (int a = 1; a <= w.m; ++a) rw.left[a - 1] += a - 1;
  for (int b = 1; b <= w.n; ++b) rw.right[b - 1] += b - 1;
  return rw;
}

Weight from_rho(const RhoWeight& rw) {
  Weight w{rw.m, rw.n, rw.left, rw.right};
  for (int a = 1; a <= w.m; ++a) w.left[a - 1] -= a - 1;
  for (int b = 1; b <= w.n; ++b) w.right[b - 1] -= b - 1;
  return w;
}

bool is_dominant(const Weight& w) {
  RhoWeight rw = rho_shift(w);
  for (int a = 1; a < w.m; ++a) {
    if (rw.left[a] <= rw.left[a - 1]) return false;
  }
  for (int b = 1; b < w.n; ++b) {
    if (rw.right[b] <= rw.right[b - 1]) return false;
  }
  return true;
}

void require_dominant(const Weight& w) {
  if (!is_dominant(w)) {
    throw domain_error("weight " + format_weight(w) + " is not dominant");
  }
}

AtypicalityData atypicality(const Weight& w) {
  require_dominant(w);
  RhoWeight rw = rho_shift(w);
  AtypicalityData data;
  // Rho-values are strictly increasing on both sides, so a shared value
  // picks out a unique (a, b) pair.
  for (int a = 1; a <= w.m; ++a) {
    for (int b = 1; b <= w.n; ++b) {
      if (rw.left[a - 1] == rw.right[b - 1]) {
        data.pairs.emplace_back(a, b);
        data.shared_values.push_back(rw.left[a - 1]);
      }
    }
  }
  // Increasing rho-value <=> increasing delta-index, so pairs are already
  // ordered by shared value.
  data.r = static_cast<int>(data.pairs.size());
  return data;
}

int atypicality_via_chi0(const Weight& w) {
  require_dominant(w);
  // Coordinates of lambda+rho over the basis eps_{-m},...,eps_{-1},
  // eps_1,...,eps_n with (eps_a, eps_b) = sign(a) delta_ab.
  const int dim = w.m + w.n;
  std::vector<long long> coords(dim, 0);
  std::vector<int> sign(dim, 0);
  for (int i = 1; i <= w.m; ++i) {
    // delta_i = eps_{-i}; lambda+rho has delta_i coefficient lambda_i + i - 1.
    coords[w.m - i] = w.left[i - 1] + i - 1;
    sign[w.m - i] = -1;
  }
  for (int j = 1; j <= w.n; ++j) {
    coords[w.m + j - 1] = -(w.right[j - 1] + j - 1);
    sign[w.m + j - 1] = 1;
  }
  int vanishing = 0;
  for (int i = 1; i <= w.m; ++i) {
    for (int j = 1; j <= w.n; ++j) {
      // alpha = delta_i - eps_j; (lambda+rho, alpha) via the signature form.
      long long pairing = coords[w.m - i] * sign[w.m - i] -
                          coords[w.m + j - 1] * sign[w.m + j - 1];
      if (pairing == 0) ++vanishing;
    }
  }
  return vanishing;
}

std::optional<long long> leq(const Weight& mu, const Weight& lam) {
  if (mu.m != lam.m || mu.n != lam.n) {
    throw domain_error("leq: shape mismatch");
  }
  long long level = 0;
  for (int a = 0; a < mu.m; ++a) {
    if (mu.left[a] > lam.left[a]) return std::nullopt;
    level += lam.left[a] - mu.left[a];
  }
  return level;
}

Weight translate(const Weight& w, int c) {
  Weight out = w;
  for (auto& v : out.left) v += c;
  // The eps-coefficients are -lambda'_b, so subtracting c from them adds c
  // to the stored coordinate.
  for (auto& v : out.right) v += c;
  return out;
}

Weight dual_weight(const Weight& w) {
  require_dominant(w);
  Weight out{w.m, w.n, std::vector<int>(w.m), std::vector<int>(w.n)};
  for (int a = 1; a <= w.m; ++a) out.left[a - 1] = w.n - w.left[w.m - a];
  for (int b = 1; b <= w.n; ++b) out.right[b - 1] = w.m - w.right[w.n - b];
  return out;
}

Weight parse_weight(std::string_view text) {
  bool rho = false;
  auto stripped = text;
  while (!stripped.empty() && (stripped.front() == ' ' || stripped.front() == '\t'))
    stripped.remove_prefix(1);
  if (stripped.substr(0, 4) == "rho:") {
    rho = true;
    stripped.remove_prefix(4);
  }
  auto bar = stripped.find('|');
  if (bar == std::string_view::npos) {
    throw domain_error("weight text missing '|' separator");
  }
  auto left_desc = parse_int_list(stripped.substr(0, bar), "left block");
  auto right = parse_int_list(stripped.substr(bar + 1), "right block");
  // Text lists the left block as l_m,...,l_1.
  std::reverse(left_desc.begin(), left_desc.end());
  Weight w{static_cast<int>(left_desc.size()), static_cast<int>(right.size()),
           std::move(left_desc), std::move(right)};
  if (w.m == 0 || w.n == 0) throw domain_error("weight needs m,n >= 1");
  if (rho) {
    RhoWeight rw{w.m, w.n, std::move(w.left), std::move(w.right)};
    return from_rho(rw);
  }
  return w;
}

namespace {
std::string format_blocks(const std::vector<int>& left,
                          const std::vector<int>& right) {
  std::ostringstream os;
  for (size_t a = left.size(); a-- > 0;) {
    os << left[a];
    if (a != 0) os << ",";
  }
  os << "|";
  for (size_t b = 0; b < right.size(); ++b) {
    if (b != 0) os << ",";
    os << right[b];
  }
  return os.str();
}
}  // namespace

std::string format_weight(const Weight& w) {
  return format_blocks(w.left, w.right);
}

std::string format_weight_rho(const Weight& w) {
  RhoWeight rw = rho_shift(w);
  return "rho:" + format_blocks(rw.left, rw.right);
}

bool weight_order_before(const Weight& a, const Weight& b) {
  long long sa = std::accumulate(a.left.begin(), a.left.end(), 0LL);
  long long sb = std::accumulate(b.left.begin(), b.left.end(), 0LL);
  if (sa != sb) return sa > sb;
  if (a.left != b.left) return a.left > b.left;
  return a.right > b.right;
}

}  // namespace kac

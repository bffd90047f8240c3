#include "kac/osp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kac {

namespace {

// Coordinate vector over (eps, delta_1, ..., delta_n); the supertrace
// form is (eps,eps) = 1, (delta_i,delta_j) = -delta_ij.
struct Vec {
  long long eps = 0;
  std::vector<long long> d;
};

long long pair_form(const Vec& u, const Vec& v) {
  long long out = u.eps * v.eps;
  for (size_t i = 0; i < u.d.size(); ++i) out -= u.d[i] * v.d[i];
  return out;
}

Vec to_vec(const OspWeight& w) {
  Vec v;
  v.eps = w.eps;
  v.d.assign(w.deltas.begin(), w.deltas.end());
  return v;
}

Vec rho_vec(int n) {
  // rho = rho_0 - rho_1 = -n*eps + sum_i (n-i+1) delta_i.
  Vec v;
  v.eps = -n;
  v.d.resize(n);
  for (int i = 1; i <= n; ++i) v.d[i - 1] = n - i + 1;
  return v;
}

// Positive roots of the Levi sp(2n).
std::vector<Vec> levi_positive_roots(int n) {
  std::vector<Vec> roots;
  auto base = [&](int j, long long c) {
    Vec v;
    v.d.assign(n, 0);
    v.d[j] = c;
    return v;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vec a = base(i, 1);
      a.d[j] = -1;
      roots.push_back(a);
      Vec b = base(i, 1);
      b.d[j] = 1;
      roots.push_back(b);
    }
    roots.push_back(base(i, 2));
  }
  return roots;
}

bool l_regular(const Vec& mu_rho, int n) {
  for (const Vec& a : levi_positive_roots(n)) {
    if (pair_form(mu_rho, a) == 0) return false;
  }
  return true;
}

}  // namespace

bool osp_is_dominant(const OspWeight& w) {
  Vec lam = to_vec(w);
  for (const Vec& a : levi_positive_roots(w.n)) {
    long long num = 2 * pair_form(lam, a);
    long long den = pair_form(a, a);
    if (num % den != 0) return false;
    if (num / den < 0) return false;
  }
  return true;
}

void osp_require_dominant(const OspWeight& w) {
  if (!osp_is_dominant(w)) {
    throw domain_error("osp weight " + format_osp_weight(w) +
                       " is not dominant");
  }
}

std::optional<OspRoot> osp_atypical_root(const OspWeight& w) {
  osp_require_dominant(w);
  Vec lr = to_vec(w);
  Vec rho = rho_vec(w.n);
  lr.eps += rho.eps;
  for (int i = 0; i < w.n; ++i) lr.d[i] += rho.d[i];
  std::optional<OspRoot> found;
  for (int j = 1; j <= w.n; ++j) {
    for (int sign : {-1, 1}) {
      Vec gamma;
      gamma.eps = 1;
      gamma.d.assign(w.n, 0);
      gamma.d[j - 1] = sign;
      if (pair_form(lr, gamma) == 0) {
        if (found) {
          throw domain_error("osp weight with more than one atypical root");
        }
        found = OspRoot{sign, j};
      }
    }
  }
  return found;
}

namespace {

OspWeight subtract_root(const OspWeight& w, const OspRoot& gamma, int k) {
  OspWeight mu = w;
  mu.eps -= k;
  mu.deltas[gamma.j - 1] -= k * gamma.sign;
  return mu;
}

Vec plus_rho(const OspWeight& w) {
  Vec v = to_vec(w);
  Vec rho = rho_vec(w.n);
  v.eps += rho.eps;
  for (int i = 0; i < w.n; ++i) v.d[i] += rho.d[i];
  return v;
}

OspWeight minus_rho(const Vec& v, int n) {
  Vec rho = rho_vec(n);
  OspWeight w;
  w.n = n;
  w.eps = static_cast<int>(v.eps - rho.eps);
  for (int i = 0; i < n; ++i)
    w.deltas.push_back(static_cast<int>(v.d[i] - rho.d[i]));
  return w;
}

}  // namespace

OspWeight osp_lambda_one(const OspWeight& w) {
  auto gamma = osp_atypical_root(w);
  if (!gamma) throw domain_error("osp_lambda_one: typical weight");
  for (int k = 1;; ++k) {
    OspWeight mu = subtract_root(w, *gamma, k);
    Vec mr = plus_rho(mu);
    if (!l_regular(mr, w.n)) continue;
    // The unique dominant-regular representative: absolute values of the
    // delta coordinates, sorted decreasingly, all signs positive.
    Vec nu = mr;
    for (auto& x : nu.d) x = std::abs(x);
    std::sort(nu.d.begin(), nu.d.end(), std::greater<>());
    OspWeight out = minus_rho(nu, w.n);
    osp_require_dominant(out);
    return out;
  }
}

OspWeight osp_lambda_one_bruteforce(const OspWeight& w, int max_k) {
  auto gamma = osp_atypical_root(w);
  if (!gamma) throw domain_error("osp_lambda_one_bruteforce: typical weight");
  for (int k = 1; k <= max_k; ++k) {
    OspWeight mu = subtract_root(w, *gamma, k);
    Vec mr = plus_rho(mu);
    if (!l_regular(mr, w.n)) continue;
    std::vector<int> perm(w.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<OspWeight> hits;
    do {
      for (unsigned signs = 0; signs < (1u << w.n); ++signs) {
        Vec nu;
        nu.eps = mr.eps;
        for (int i = 0; i < w.n; ++i) {
          long long x = mr.d[perm[i]];
          if ((signs >> i) & 1) x = -x;
          nu.d.push_back(x);
        }
        OspWeight cand = minus_rho(nu, w.n);
        if (osp_is_dominant(cand)) hits.push_back(cand);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(hits.begin(), hits.end(),
              [](const OspWeight& a, const OspWeight& b) {
                return std::tie(a.eps, a.deltas) < std::tie(b.eps, b.deltas);
              });
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.size() != 1) {
      throw domain_error("expected a unique Weyl element, found " +
                         std::to_string(hits.size()));
    }
    return hits.front();
  }
  throw domain_error("osp_lambda_one_bruteforce: no l-regular mu within bound");
}

OspStructure osp_structure(const OspWeight& w, int depth) {
  osp_require_dominant(w);
  OspStructure st;
  st.chain.push_back(w);
  if (!osp_atypical_root(w)) {
    st.factors = {w};
    st.a_polys = {QPoly::one()};
    st.p_polys = {QPoly::one()};
    return st;
  }
  st.atypical = true;
  st.jantzen_length = 1;
  for (int i = 0; i < depth; ++i) {
    const OspWeight& cur = st.chain.back();
    if (!osp_atypical_root(cur)) break;
    st.chain.push_back(osp_lambda_one(cur));
  }
  st.factors = {w, st.chain[1]};
  const int len = static_cast<int>(st.chain.size());
  // A along the chain: unitriangular with a_{i,i+1} = q; invert the top
  // row by forward substitution.
  std::vector<std::vector<QPoly>> a(len, std::vector<QPoly>(len));
  for (int i = 0; i < len; ++i) {
    a[i][i] = QPoly::one();
    if (i + 1 < len && osp_atypical_root(st.chain[i])) {
      a[i][i + 1] = QPoly::monomial(1, 1);
    }
  }
  st.a_polys.assign(len, QPoly::zero());
  st.a_polys[0] = QPoly::one();
  if (len > 1) st.a_polys[1] = QPoly::monomial(1, 1);
  st.p_polys.assign(len, QPoly::zero());
  st.p_polys[0] = QPoly::one();
  for (int k = 1; k < len; ++k) {
    QPoly acc;
    for (int t = 0; t < k; ++t) {
      if (!st.p_polys[t].is_zero() && !a[t][k].is_zero()) {
        acc = acc + st.p_polys[t] * a[t][k];
      }
    }
    st.p_polys[k] = -acc;
  }
  return st;
}

OspWeight parse_osp_weight(int n, std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw domain_error("osp weight text missing ';'");
  }
  OspWeight w;
  w.n = n;
  try {
    w.eps = std::stoi(std::string(text.substr(0, semi)));
  } catch (const std::exception&) {
    throw domain_error("bad osp eps coordinate");
  }
  std::string token;
  auto rest = text.substr(semi + 1);
  auto flush = [&] {
    try {
      w.deltas.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw domain_error("bad osp delta coordinate '" + token + "'");
    }
    token.clear();
  };
  for (char c : rest) {
    if (c == ' ') continue;
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) flush();
  if (static_cast<int>(w.deltas.size()) != n) {
    throw domain_error("osp weight needs exactly " + std::to_string(n) +
                       " delta coordinates");
  }
  return w;
}

std::string format_osp_weight(const OspWeight& w) {
  std::ostringstream os;
  os << w.eps << ";";
  for (int i = 0; i < w.n; ++i) {
    if (i) os << ",";
    os << w.deltas[i];
  }
  return os.str();
}

}  // namespace kac

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kac {

/// Raised for inputs that violate an operation's domain (non-dominant
/// weight, malformed text, shape mismatch, ...).
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integral gl(m|n) weight in coordinate form.
///
/// left[a-1] holds the coefficient of delta_a (a = 1..m), right[b-1]
/// the lambda'_b coordinate (b = 1..n).  The text form prints the left
/// block in descending index order, "l_m,...,l_1|r_1,...,r_n".
struct Weight {
  int m = 0;
  int n = 0;
  std::vector<int> left;
  std::vector<int> right;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Same shape as Weight, values rho-shifted: left[a-1] = lambda_a + a - 1,
/// right[b-1] = lambda'_b + b - 1.
struct RhoWeight {
  int m = 0;
  int n = 0;
  std::vector<int> left;
  std::vector<int> right;

  friend bool operator==(const RhoWeight&, const RhoWeight&) = default;
};

struct AtypicalityData {
  int r = 0;
  // (i_s, j_s): delta-index and epsilon-index of the s-th atypical root,
  // ordered by increasing shared rho-value.
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> shared_values;  // increasing
};

RhoWeight rho_shift(const Weight& w);
Weight from_rho(const RhoWeight& rw);

/// Both rho-shifted coordinate sequences strictly increasing.
bool is_dominant(const Weight& w);
void require_dominant(const Weight& w);

AtypicalityData atypicality(const Weight& w);

/// Independent route: counts vanishing supertrace pairings (lambda+rho,
/// delta_a - eps_b) over all odd positive roots, evaluated on explicit
/// coordinate vectors with the signature form.
int atypicality_via_chi0(const Weight& w);

/// mu <= lam iff mu_a <= lam_a on every left coordinate; returns the
/// relative level sum(lam_a - mu_a) when true.  Throws on (m,n) mismatch.
std::optional<long long> leq(const Weight& mu, const Weight& lam);

/// Twist by the root-orthogonal one-dimensional weight; shifts the
/// diagram by c vertices.
Weight translate(const Weight& w, int c);

/// Dual highest weight 2*rho_1 - bar(lambda); an involution on dominant
/// weights.
Weight dual_weight(const Weight& w);

/// "l_m,...,l_1|r_1,...,r_n" or "rho:..." for rho-shifted input.
Weight parse_weight(std::string_view text);
std::string format_weight(const Weight& w);
std::string format_weight_rho(const Weight& w);

/// Strict total order refining <= (descending left-coordinate sum, then
/// lexicographic); used for poset orderings and deterministic output.
bool weight_order_before(const Weight& a, const Weight& b);

}  // namespace kac

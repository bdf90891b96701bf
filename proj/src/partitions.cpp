#include "symmono/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "symmono/errors.hpp"

namespace symmono {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] >= 1, "partition parts must be positive");
    require(i == 0 || parts_[i] <= parts_[i - 1], "partition parts must be nonincreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    c.resize(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[j];
  }
  return Partition(std::move(c));
}

std::vector<double> Partition::normalized() const {
  std::vector<double> out;
  for (int p : parts_) out.push_back(static_cast<double>(p) / n_);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

CycleType CycleType::identity(int n) { return CycleType(Partition(std::vector<int>(n, 1))); }

CycleType CycleType::of(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::vector<int> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      require(j >= 0 && j < n, "permutation image out of range");
      seen[j] = 1;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return CycleType(Partition(std::move(cycles)));
}

BigInt CycleType::class_size() const {
  BigInt denom = 1;
  const auto& p = cycles_.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const int m = static_cast<int>(j - i);
    for (int r = 0; r < m; ++r) denom *= p[i];
    denom *= factorial(m);
    i = j;
  }
  return factorial(cycles_.size()) / denom;
}

double CycleType::class_fraction() const {
  return static_cast<double>(class_size()) / static_cast<double>(factorial(size()));
}

std::vector<int> CycleType::representative() const {
  std::vector<int> perm(size());
  int start = 0;
  for (int c : cycles_.parts()) {
    for (int j = 0; j < c; ++j) perm[start + j] = start + (j + 1) % c;
    start += c;
  }
  return perm;
}

ProbVector::ProbVector(std::vector<double> weights) : w_(std::move(weights)) {
  for (double x : w_) require(std::isfinite(x) && x >= 0.0, "probability weights must be finite and nonnegative");
}

ProbVector ProbVector::normalize(std::vector<double> weights) {
  ProbVector p(std::move(weights));
  const double t = p.total();
  require(t > 0.0, "cannot normalize a zero vector");
  for (double& x : p.w_) x /= t;
  return p;
}

ProbVector ProbVector::uniform(int r) {
  require(r >= 1, "uniform distribution needs r >= 1");
  return ProbVector(std::vector<double>(r, 1.0 / r));
}

double ProbVector::total() const { return std::accumulate(w_.begin(), w_.end(), 0.0); }

bool ProbVector::is_normalized() const { return std::abs(total() - 1.0) <= 1e-12; }

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out,
                    std::optional<int> max_len) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len && static_cast<int>(cur.size()) >= *max_len) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out, max_len);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_len) {
  require(n >= 0, "partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out, max_len);
  std::reverse(out.begin(), out.end());
  return out;
}

BigInt factorial(int n) {
  require(n >= 0, "factorial of negative number");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double shannon_entropy(const ProbVector& p) {
  require(p.is_normalized(), "shannon_entropy needs a normalized distribution");
  double h = 0.0;
  for (double x : p.weights())
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

double renyi_entropy(const ProbVector& p, double alpha) {
  require(alpha > 0.0, "Renyi order must be positive");
  if (alpha == 1.0) return shannon_entropy(p);
  if (std::isinf(alpha)) {
    const double m = p.size() ? *std::max_element(p.weights().begin(), p.weights().end()) : 0.0;
    require(m > 0.0, "min-entropy of a zero vector");
    return -std::log2(m);
  }
  // factor out the max for stability at large alpha
  const double m = p.size() ? *std::max_element(p.weights().begin(), p.weights().end()) : 0.0;
  require(m > 0.0, "Renyi entropy of a zero vector");
  double s = 0.0;
  for (double x : p.weights())
    if (x > 0.0) s += std::pow(x / m, alpha);
  return (std::log2(s) + alpha * std::log2(m)) / (1.0 - alpha);
}

double binary_entropy(double q) {
  require(q >= 0.0 && q <= 1.0, "binary entropy argument must lie in [0,1]");
  if (q == 0.0 || q == 1.0) return 0.0;
  return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

double relative_entropy(const ProbVector& p, const ProbVector& q) {
  require(p.size() <= q.size() || std::all_of(p.weights().begin() + q.size(), p.weights().end(),
                                               [](double x) { return x == 0.0; }),
          "relative entropy support mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    const double qi = i < q.size() ? q[i] : 0.0;
    if (qi == 0.0) return kInfinity;
    d += p[i] * std::log2(p[i] / qi);
  }
  return d;
}

double entropy(const Partition& lam) {
  if (lam.size() == 0) return 0.0;
  return shannon_entropy(ProbVector(lam.normalized()));
}

namespace {

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterCache {
  std::shared_mutex mu;
  std::map<CharKey, BigInt> table;
};

CharacterCache& character_cache() {
  static CharacterCache cache;
  return cache;
}

// Beta-set recursion: strip the first cycle length from rho as a rim hook.
BigInt mn_rec(const std::vector<int>& lam, const std::vector<int>& rho) {
  if (rho.empty()) return lam.empty() ? 1 : 0;
  CharKey key{lam, rho};
  auto& cache = character_cache();
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  const int r = rho.front();
  const std::vector<int> rest(rho.begin() + 1, rho.end());
  const int l = static_cast<int>(lam.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lam[i] + (l - 1 - i);  // strictly decreasing
  BigInt total = 0;
  for (int i = 0; i < l; ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> mu(l);
    for (int j = 0; j < l; ++j) mu[j] = nb[j] - (l - 1 - j);
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    BigInt v = mn_rec(mu, rest);
    if (between % 2) v = -v;
    total += v;
  }
  std::unique_lock lock(cache.mu);
  cache.table.emplace(std::move(key), total);
  return total;
}

std::vector<int> merge_cycles(const Partition& a, const Partition& b) {
  std::vector<int> c = a.parts();
  c.insert(c.end(), b.parts().begin(), b.parts().end());
  std::sort(c.rbegin(), c.rend());
  return c;
}

}  // namespace

BigInt mn_character(const Partition& lam, const CycleType& cls) {
  require(lam.size() == cls.size(), "character: partition and class sizes differ");
  return mn_rec(lam.parts(), cls.shape().parts());
}

BigInt irrep_dim(const Partition& lam) {
  const Partition c = lam.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam[i]; ++j) hooks *= (lam[i] - j) + (c[j] - i) - 1;
  return factorial(lam.size()) / hooks;
}

BigInt kronecker(const Partition& lam, const Partition& mu, const Partition& nu) {
  require(lam.size() == mu.size() && mu.size() == nu.size(), "kronecker: sizes differ");
  const int n = lam.size();
  BigInt s = 0;
  for (const Partition& c : enumerate_partitions(n)) {
    const CycleType cls(c);
    s += cls.class_size() * mn_character(lam, cls) * mn_character(mu, cls) * mn_character(nu, cls);
  }
  const BigInt f = factorial(n);
  if (s % f != 0) throw NumericalError("kronecker: character sum not divisible by n!");
  return s / f;
}

BigInt littlewood_richardson(const Partition& lam, const Partition& mu, const Partition& nu) {
  require(lam.size() == mu.size() + nu.size(), "littlewood_richardson: |lam| must equal |mu|+|nu|");
  const int m = mu.size();
  const int n = nu.size();
  BigInt s = 0;
  for (const Partition& c1 : enumerate_partitions(m)) {
    const CycleType k1(c1);
    const BigInt a = k1.class_size() * mn_character(mu, k1);
    if (a == 0) continue;
    for (const Partition& c2 : enumerate_partitions(n)) {
      const CycleType k2(c2);
      const CycleType joint(Partition(merge_cycles(c1, c2)));
      s += a * k2.class_size() * mn_character(nu, k2) * mn_character(lam, joint);
    }
  }
  const BigInt f = factorial(m) * factorial(n);
  if (s % f != 0) throw NumericalError("littlewood_richardson: character sum not divisible");
  return s / f;
}

BigInt weyl_dim(const Partition& lam, int d) {
  require(d >= 1, "weyl_dim needs d >= 1");
  if (lam.length() > d) return 0;
  const Partition c = lam.conjugate();
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      num *= d + j - i;
      den *= (lam[i] - j) + (c[j] - i) - 1;
    }
  return num / den;
}

}  // namespace symmono

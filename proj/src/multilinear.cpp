#include "symmono/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "symmono/errors.hpp"

namespace symmono {

SpaceSpec::SpaceSpec(std::vector<int> dims) : dims_(std::move(dims)) {
  require(!dims_.empty(), "space needs at least one party");
  total_ = 1;
  for (int d : dims_) {
    require(d >= 1, "local dimensions must be >= 1");
    total_ *= d;
    require(total_ <= (std::int64_t{1} << 40), "total dimension too large");
  }
}

std::int64_t SpaceSpec::group_dim(std::span<const int> side) const {
  std::int64_t g = 1;
  for (int j : side) g *= dims_.at(j);
  return g;
}

std::vector<int> SpaceSpec::digits(std::int64_t flat) const {
  std::vector<int> out(dims_.size());
  for (int j = parties() - 1; j >= 0; --j) {
    out[j] = static_cast<int>(flat % dims_[j]);
    flat /= dims_[j];
  }
  return out;
}

std::int64_t SpaceSpec::flat(std::span<const int> digits) const {
  std::int64_t f = 0;
  for (int j = 0; j < parties(); ++j) f = f * dims_[j] + digits[j];
  return f;
}

SpaceSpec SpaceSpec::tensor(const SpaceSpec& h, const SpaceSpec& k) {
  require(h.parties() == k.parties(), "tensor: part counts differ");
  std::vector<int> d(h.parties());
  for (int j = 0; j < h.parties(); ++j) d[j] = h.dims_[j] * k.dims_[j];
  return SpaceSpec(std::move(d));
}

SpaceSpec SpaceSpec::direct_sum(const SpaceSpec& h, const SpaceSpec& k) {
  require(h.parties() == k.parties(), "direct sum: part counts differ");
  std::vector<int> d(h.parties());
  for (int j = 0; j < h.parties(); ++j) d[j] = h.dims_[j] + k.dims_[j];
  return SpaceSpec(std::move(d));
}

std::string SpaceSpec::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
  os << ')';
  return os.str();
}

MultipartiteState::MultipartiteState(SpaceSpec space, Eigen::VectorXcd amplitudes)
    : space_(std::move(space)), amp_(std::move(amplitudes)) {
  require(amp_.size() == space_.total_dim(), "amplitude count does not match the product of dims");
  require(amp_.allFinite(), "amplitudes must be finite");
}

MultipartiteState MultipartiteState::normalized() const {
  require(!is_zero(), "cannot normalize the zero state");
  return {space_, amp_ / amp_.norm()};
}

Bipartition::Bipartition(int parties, std::vector<int> side) : k_(parties), side_(std::move(side)) {
  require(k_ >= 2, "bipartitions need at least two parties");
  std::sort(side_.begin(), side_.end());
  side_.erase(std::unique(side_.begin(), side_.end()), side_.end());
  for (int j : side_) require(j >= 0 && j < k_, "bipartition party out of range");
  require(!side_.empty() && static_cast<int>(side_.size()) < k_, "bipartition sides must be nonempty");
  if (side_.front() != 0) side_ = complement();
}

std::vector<int> Bipartition::complement() const {
  std::vector<int> c;
  for (int j = 0; j < k_; ++j)
    if (!contains(j)) c.push_back(j);
  return c;
}

bool Bipartition::contains(int party) const {
  return std::binary_search(side_.begin(), side_.end(), party);
}

bool Bipartition::noncrossing(const Bipartition& other) const {
  require(k_ == other.k_, "bipartitions over different party counts");
  bool blocks[2][2] = {{false, false}, {false, false}};
  for (int j = 0; j < k_; ++j) blocks[contains(j)][other.contains(j)] = true;
  return !(blocks[0][0] && blocks[0][1] && blocks[1][0] && blocks[1][1]);
}

namespace {

std::vector<int> parse_side(const std::string& s) {
  std::vector<int> out;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      require(!tok.empty() && std::all_of(tok.begin(), tok.end(), ::isdigit), "bad bipartition party '" + tok + "'");
      out.push_back(std::stoi(tok) - 1);
    }
  } else {
    for (char c : s) {
      require(c >= '1' && c <= '9', std::string("bad bipartition party '") + c + "'");
      out.push_back(c - '1');
    }
  }
  return out;
}

std::string side_string(const std::vector<int>& side, bool commas) {
  std::string s;
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (commas && i) s += ',';
    s += std::to_string(side[i] + 1);
  }
  return s;
}

}  // namespace

Bipartition Bipartition::parse(const std::string& text) {
  const auto bar = text.find('|');
  require(bar != std::string::npos && text.find('|', bar + 1) == std::string::npos,
          "bipartition must look like '1|23'");
  std::vector<int> a = parse_side(text.substr(0, bar));
  std::vector<int> b = parse_side(text.substr(bar + 1));
  require(!a.empty() && !b.empty(), "bipartition sides must be nonempty");
  std::vector<int> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    require(all[i] == static_cast<int>(i), "bipartition sides must partition 1..k");
  return Bipartition(static_cast<int>(all.size()), a);
}

std::vector<Bipartition> Bipartition::elementary(int parties) {
  std::vector<Bipartition> out;
  for (int j = 0; j < parties; ++j) {
    Bipartition b(parties, {j});
    if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
  }
  return out;
}

std::vector<Bipartition> Bipartition::all(int parties) {
  require(parties >= 2 && parties <= 20, "party count out of range");
  std::vector<Bipartition> out;
  const std::uint32_t full = (1u << (parties - 1)) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::vector<int> side{0};
    for (int j = 1; j < parties; ++j)
      if (mask & (1u << (j - 1))) side.push_back(j);
    out.emplace_back(parties, side);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Bipartition::to_string() const {
  const bool commas = k_ > 9;
  return side_string(side_, commas) + "|" + side_string(complement(), commas);
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  require(m_.rows() == m_.cols(), "density matrix must be square");
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  require((m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale, "density matrix must be Hermitian");
}

std::vector<double> DensityMatrix::spectrum() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

namespace states {

MultipartiteState unit(int r, int k) {
  require(r >= 1, "unit tensor needs r >= 1");
  require(k >= 1, "unit tensor needs k >= 1");
  SpaceSpec space(std::vector<int>(k, r));
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(space.total_dim());
  for (int i = 0; i < r; ++i) a[space.flat(std::vector<int>(k, i))] = 1.0;
  return {space, a};
}

MultipartiteState ghz(int level, int k) {
  MultipartiteState u = unit(level, k);
  return u.scaled(1.0 / std::sqrt(static_cast<double>(level)));
}

MultipartiteState w(int k) {
  require(k >= 1, "W state needs k >= 1");
  SpaceSpec space(std::vector<int>(k, 2));
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(space.total_dim());
  for (int j = 0; j < k; ++j) {
    std::vector<int> d(k, 0);
    d[j] = 1;
    a[space.flat(d)] = 1.0 / std::sqrt(static_cast<double>(k));
  }
  return {space, a};
}

MultipartiteState random(const std::vector<int>& dims, std::uint64_t seed) {
  SpaceSpec space(dims);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXcd a(space.total_dim());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double re = g(rng);
    const double im = g(rng);
    a[i] = cplx(re, im);
  }
  return {space, a / a.norm()};
}

MultipartiteState explicit_state(const std::vector<int>& dims, const std::vector<cplx>& amplitudes) {
  SpaceSpec space(dims);
  require(static_cast<std::int64_t>(amplitudes.size()) == space.total_dim(),
          "explicit state: expected " + std::to_string(space.total_dim()) + " amplitudes, got " +
              std::to_string(amplitudes.size()));
  Eigen::VectorXcd a(amplitudes.size());
  for (std::size_t i = 0; i < amplitudes.size(); ++i) a[i] = amplitudes[i];
  return {space, a};
}

MultipartiteState zero(const std::vector<int>& dims) {
  SpaceSpec space(dims);
  return {space, Eigen::VectorXcd::Zero(space.total_dim())};
}

}  // namespace states

MultipartiteState tensor_product(const MultipartiteState& a, const MultipartiteState& b) {
  const SpaceSpec out = SpaceSpec::tensor(a.space(), b.space());
  const int k = out.parties();
  Eigen::VectorXcd amp(out.total_dim());
  std::vector<int> d(k);
  for (std::int64_t i = 0; i < a.space().total_dim(); ++i) {
    const auto da = a.space().digits(i);
    for (std::int64_t j = 0; j < b.space().total_dim(); ++j) {
      const auto db = b.space().digits(j);
      for (int p = 0; p < k; ++p) d[p] = da[p] * b.space().dim(p) + db[p];
      amp[out.flat(d)] = a.amplitudes()[i] * b.amplitudes()[j];
    }
  }
  return {out, amp};
}

MultipartiteState direct_sum(const MultipartiteState& a, const MultipartiteState& b) {
  const SpaceSpec out = SpaceSpec::direct_sum(a.space(), b.space());
  const int k = out.parties();
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(out.total_dim());
  for (std::int64_t i = 0; i < a.space().total_dim(); ++i) amp[out.flat(a.space().digits(i))] += a.amplitudes()[i];
  std::vector<int> d(k);
  for (std::int64_t j = 0; j < b.space().total_dim(); ++j) {
    const auto db = b.space().digits(j);
    for (int p = 0; p < k; ++p) d[p] = a.space().dim(p) + db[p];
    amp[out.flat(d)] += b.amplitudes()[j];
  }
  return {out, amp};
}

MultipartiteState apply_local(std::span<const Eigen::MatrixXcd> maps, const MultipartiteState& psi) {
  const int k = psi.space().parties();
  require(static_cast<int>(maps.size()) == k, "apply_local: need one map per party");
  std::vector<int> dims = psi.space().dims();
  Eigen::VectorXcd cur = psi.amplitudes();
  for (int j = 0; j < k; ++j) {
    const Eigen::MatrixXcd& m = maps[j];
    require(m.cols() == dims[j], "apply_local: map " + std::to_string(j + 1) + " has wrong input dimension");
    require(m.rows() >= 1, "apply_local: empty output dimension");
    std::int64_t pre = 1, post = 1;
    for (int p = 0; p < j; ++p) pre *= dims[p];
    for (int p = j + 1; p < k; ++p) post *= dims[p];
    const int din = dims[j];
    const int dout = static_cast<int>(m.rows());
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(pre * dout * post);
    for (std::int64_t a = 0; a < pre; ++a)
      for (int i = 0; i < din; ++i)
        for (int o = 0; o < dout; ++o) {
          const cplx c = m(o, i);
          if (c == cplx(0.0)) continue;
          const std::int64_t src = (a * din + i) * post;
          const std::int64_t dst = (a * dout + o) * post;
          for (std::int64_t b = 0; b < post; ++b) next[dst + b] += c * cur[src + b];
        }
    cur = std::move(next);
    dims[j] = dout;
  }
  return {SpaceSpec(dims), cur};
}

Eigen::MatrixXcd flattening(const MultipartiteState& psi, std::span<const int> side) {
  const SpaceSpec& sp = psi.space();
  const int k = sp.parties();
  std::vector<char> in(k, 0);
  for (int j : side) {
    require(j >= 0 && j < k, "flattening: party out of range");
    in[j] = 1;
  }
  std::int64_t rows = 1, cols = 1;
  for (int j = 0; j < k; ++j) (in[j] ? rows : cols) *= sp.dim(j);
  Eigen::MatrixXcd m(rows, cols);
  for (std::int64_t f = 0; f < sp.total_dim(); ++f) {
    const auto d = sp.digits(f);
    std::int64_t r = 0, c = 0;
    for (int j = 0; j < k; ++j) {
      if (in[j]) r = r * sp.dim(j) + d[j];
      else c = c * sp.dim(j) + d[j];
    }
    m(r, c) = psi.amplitudes()[f];
  }
  return m;
}

DensityMatrix marginal(const MultipartiteState& psi, std::span<const int> side) {
  std::vector<int> s(side.begin(), side.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  require(!s.empty() && static_cast<int>(s.size()) < psi.space().parties(), "marginal: subset must be proper and nonempty");
  const Eigen::MatrixXcd f = flattening(psi, s);
  Eigen::MatrixXcd rho = f * f.adjoint();
  rho = (rho + rho.adjoint()).eval() * 0.5;
  return DensityMatrix(std::move(rho));
}

namespace {

std::vector<double> squared_singular_values(const MultipartiteState& psi, const Bipartition& b) {
  require(b.parties() == psi.space().parties(), "bipartition and state have different party counts");
  const Eigen::MatrixXcd f = flattening(psi, b.side());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(f);
  std::vector<double> s;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) s.push_back(svd.singularValues()[i] * svd.singularValues()[i]);
  std::sort(s.rbegin(), s.rend());
  if (!s.empty()) {
    const double cut = 1e-10 * s.front();
    while (!s.empty() && s.back() <= cut) s.pop_back();
  }
  return s;
}

}  // namespace

ProbVector schmidt_spectrum(const MultipartiteState& psi, const Bipartition& b) {
  require(!psi.is_zero(), "schmidt_spectrum of the zero state");
  std::vector<double> s = squared_singular_values(psi, b);
  return ProbVector::normalize(std::move(s));
}

int flattening_rank(const MultipartiteState& psi, const Bipartition& b) {
  if (psi.is_zero()) return 0;
  return static_cast<int>(squared_singular_values(psi, b).size());
}

double sandwiched_divergence_rank1(const MultipartiteState& psi, const Eigen::MatrixXcd& sigma, double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "sandwiched_divergence_rank1 needs alpha in (0,1)");
  require(sigma.rows() == sigma.cols() && sigma.rows() == psi.space().total_dim(), "sigma has the wrong dimension");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (sigma + sigma.adjoint()));
  const double scale = std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
  require(es.eigenvalues().minCoeff() >= -1e-10 * scale, "sigma is not positive semidefinite");
  const double p = (1.0 - alpha) / alpha;
  const Eigen::VectorXcd c = es.eigenvectors().adjoint() * psi.amplitudes();
  double v = 0.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double lam = std::max(es.eigenvalues()[i], 0.0);
    if (lam > 0.0) v += std::norm(c[i]) * std::pow(lam, p);
  }
  return alpha / (alpha - 1.0) * std::log2(v);
}

}  // namespace symmono

#include "topoctrl/numeric.hpp"

#include <Eigen/SVD>
#include <random>
#include <sstream>

namespace topoctrl {

std::string to_string(SampleMode m) {
  return m == SampleMode::ContinuousUniform ? "continuous" : "integer";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double draw_magnitude(std::mt19937_64& rng, SampleMode mode) {
  if (mode == SampleMode::IntegerUniform) {
    std::uniform_int_distribution<int> dist(1, 5);
    return static_cast<double>(dist(rng));
  }
  std::uniform_real_distribution<double> dist(0.5, 5.0);
  return dist(rng);
}

std::map<EdgeKey, double> draw_weights(const SignedNetwork& net, std::mt19937_64& rng,
                                       SampleMode mode) {
  std::map<EdgeKey, double> w;
  for (const auto& [e, s] : net.state_edge_signs)
    w[e] = static_cast<double>(static_cast<int>(s)) * draw_magnitude(rng, mode);
  return w;
}

Eigen::MatrixXd laplacian_from_weights(const SignedNetwork& net,
                                       const std::map<EdgeKey, double>& w) {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(net.n, net.n);
  for (const auto& [e, v] : w) {
    L(e.first - 1, e.second - 1) = v;
    L(e.second - 1, e.first - 1) = v;
  }
  for (int i = 0; i < net.n; ++i) {
    double row = 0.0;
    for (int j = 0; j < net.n; ++j)
      if (j != i) row += L(i, j);
    L(i, i) = -row;
  }
  return L;
}

Eigen::MatrixXd input_matrix(const SignedNetwork& net) {
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(net.n, net.m());
  for (int k = 0; k < net.m(); ++k)
    B(net.input_assignment[static_cast<std::size_t>(k)] - 1, k) = 1.0;
  return B;
}

bool diagonal_matches(const SignedNetwork& net, const Eigen::MatrixXd& L) {
  if (!net.diagonal_signs) return true;
  for (int i = 0; i < net.n; ++i) {
    const Sign want = (*net.diagonal_signs)[static_cast<std::size_t>(i)];
    if (sign_of(L(i, i)) != want) return false;
  }
  return true;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1));
}

Realization sample_realization(const SignedNetwork& net, SampleMode mode,
                               std::uint64_t stream_seed) {
  net.validate();
  std::mt19937_64 rng(stream_seed);
  constexpr int kMaxRetries = 1000;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Realization r;
    r.weights = draw_weights(net, rng, mode);
    r.L = laplacian_from_weights(net, r.weights);
    r.B = input_matrix(net);
    r.resamples = attempt;
    if (diagonal_matches(net, r.L)) return r;
  }
  std::ostringstream os;
  os << "could not satisfy the declared diagonal signs after " << kMaxRetries
     << " resamples; the declared pattern looks infeasible for this coupling";
  throw Error(os.str());
}

Eigen::MatrixXd controllability_matrix(const Realization& r) {
  const auto n = r.L.rows();
  const auto m = r.B.cols();
  Eigen::MatrixXd C(n, n * m);
  Eigen::MatrixXd block = r.B;
  for (Eigen::Index k = 0; k < n; ++k) {
    C.block(0, k * m, n, m) = block;
    if (k + 1 < n) block = r.L * block;
  }
  return C;
}

int numeric_rank(const Eigen::MatrixXd& M, double rel_tol) {
  if (rel_tol <= 0.0) throw Error("numeric_rank: rel_tol must be positive");
  if (M.size() == 0) return 0;
  if (!M.allFinite()) throw Error("numeric_rank: matrix has non-finite entries");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double threshold = rel_tol * smax * static_cast<double>(std::max(M.rows(), M.cols()));
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) ++rank;
  return rank;
}

int controllability_rank(const Realization& r, double rel_tol) {
  Eigen::MatrixXd C = controllability_matrix(r);
  for (Eigen::Index c = 0; c < C.cols(); ++c) {
    const double norm = C.col(c).norm();
    if (norm > 0.0) C.col(c) /= norm;
  }
  return numeric_rank(C, rel_tol);
}

RankReport monte_carlo(const SignedNetwork& net, int trials, SampleMode mode,
                       std::uint64_t seed) {
  if (trials < 1) throw Error("monte_carlo: trials must be >= 1");
  net.validate();
  RankReport report;
  report.trials = trials;
  report.mode = mode;
  report.seed = seed;
  report.ranks.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    Realization r = sample_realization(net, mode, trial_seed(seed, t));
    r.trial = t + 1;
    const int rank = controllability_rank(r);
    report.ranks.push_back(rank);
    report.resamples += r.resamples;
    if (rank < net.n) report.deficient_trials.push_back(t + 1);
  }
  return report;
}

RowRankRefutation l_matrix_refutation(const SignedNetwork& net, int trials,
                                      std::uint64_t seed) {
  if (trials < 1) throw Error("l_matrix_refutation: trials must be >= 1");
  net.validate();
  RowRankRefutation out;
  const Eigen::MatrixXd B = input_matrix(net);
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    std::map<EdgeKey, double> w = draw_weights(net, rng, SampleMode::ContinuousUniform);
    Eigen::MatrixXd L = laplacian_from_weights(net, w);
    if (net.diagonal_signs) {
      // Declared diagonals range over their whole sign class, independently
      // of the row sums; only their signs are pinned by the pattern.
      for (int i = 0; i < net.n; ++i) {
        const auto s = static_cast<double>(
            static_cast<int>((*net.diagonal_signs)[static_cast<std::size_t>(i)]));
        L(i, i) = s * draw_magnitude(rng, SampleMode::ContinuousUniform);
      }
    }
    Eigen::MatrixXd T(net.n, net.n + net.m());
    T << L, B;
    out.trials_run = t + 1;
    if (numeric_rank(T) < net.n) {
      Realization r;
      r.L = std::move(L);
      r.B = B;
      r.weights = std::move(w);
      r.trial = t + 1;
      out.refuted = true;
      out.realization = std::move(r);
      return out;
    }
  }
  return out;
}

Verdict refute_certification(const SignedNetwork& net, const Verdict& verdict,
                             int trials, SampleMode mode, std::uint64_t seed) {
  if (verdict.status != Status::NotCertified)
    throw Error("refute_certification requires a NotCertified verdict");
  const RankReport report = monte_carlo(net, trials, mode, seed);
  Verdict out = verdict;
  if (report.deficient_trials.empty()) {
    std::ostringstream os;
    os << verdict.note << "; no rank-deficient realization in " << trials << " "
       << to_string(mode) << " trials";
    out.note = os.str();
    return out;
  }
  const int t = report.deficient_trials.front();
  Realization r = sample_realization(net, mode, trial_seed(seed, t - 1));
  r.trial = t;
  const int rank = report.ranks[static_cast<std::size_t>(t - 1)];
  out.status = Status::NumericallyRefuted;
  out.refutation = std::make_shared<Realization>(std::move(r));
  std::ostringstream os;
  os << "numerically refuted: trial " << t << " (" << to_string(mode)
     << " mode) has controllability-matrix rank " << rank << " < " << net.n;
  out.note = os.str();
  return out;
}

}  // namespace topoctrl

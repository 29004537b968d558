#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace goesv {

/// Parameters shared by the batch experiments. Empty lists and zero sample
/// counts select each experiment's defaults.
struct ExperimentConfig {
  std::vector<int> orders;
  std::vector<int> ks;
  std::vector<double> radii;
  std::vector<int> betas;
  std::vector<int> alphas;
  int m = 2;
  double t = 1.0;
  std::size_t samples = 0;
  std::uint64_t seed = 20240601;
  int shards = 1;
};

/// One checked (or informational) quantity.
struct ResultRecord {
  std::string experiment;
  std::string check;
  std::string params;
  std::string metric;
  double value = 0.0;
  std::string relation;  // ">", "<=", "==", or "info"
  double threshold = 0.0;
  bool pass = true;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
};

using Records = std::vector<ResultRecord>;

bool all_pass(const Records& r);
const char* code_version();

/// Per-location KS of H, B and R unions and the even decimation against
/// dense |GOE_n|; default n in {4, 5, 8, 9}, 10^5 samples.
Records run_model_equivalence(const ExperimentConfig& cfg);
/// Per-location KS of |GUE_n| against two stacked even decimations;
/// default n in {1, 3, 4}, 10^5 samples.
Records run_superposition(const ExperimentConfig& cfg);
/// Round trip, Jacobian, conservation and product identities.
Records run_interlace_transform(const ExperimentConfig& cfg);
/// r extracted from dense GOE: chi laws and independence from s; default
/// n in {5, 6}, 10^5 samples.
Records run_interlace_independence(const ExperimentConfig& cfg);
/// Normalizations, density integrals, D factorization, integrate-out identities.
Records run_densities(const ExperimentConfig& cfg);
/// Factored vs dense determinants, E|det M_2|, Mellin moments.
Records run_determinants(const ExperimentConfig& cfg);
/// CLT statistic at n = 2000 (default) and the Z variance ratio at n = 500.
Records run_clt(const ExperimentConfig& cfg);
/// The normalized CLT statistic of N factored samples, as used by run_clt.
std::vector<double> clt_samples(int n, int beta, std::size_t samples, std::uint64_t seed, int shards);
/// Gap identities over n x k x s; default n in {3, 4, 5}, k in {0, 1},
/// s in {0.5, 1, 2}, 10^6 samples.
Records run_gaps(const ExperimentConfig& cfg);
/// Integer Wishart duality; default alpha in {1, 2}, m = 2, k = 0, t = 1.
Records run_duality(const ExperimentConfig& cfg);

/// The fixed CSV column set of result records.
std::vector<std::string> record_columns();

}  // namespace goesv

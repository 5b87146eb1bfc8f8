#pragma once

#include <string>
#include <vector>

#include "sqtaut/rational.hpp"

namespace sqtaut {

/// Set partition of {1..d}; blocks sorted, ordered by minimal element
/// (equivalently lexicographically).
using SetPartition = std::vector<std::vector<int>>;

/// All set partitions of {1..d}.
std::vector<SetPartition> set_partitions(int d);

/// Element [P, tau] of P[d,k]: a set partition with l >= d-k parts and a weak
/// composition tau of k-d+l into l parts (zero parts allowed).
struct PairSpec {
  int d = 0;
  int k = 0;
  SetPartition partition;
  std::vector<int> tau;

  int length() const { return static_cast<int>(partition.size()); }
  friend bool operator==(const PairSpec&, const PairSpec&) = default;
};

/// Ordered by partition length descending, then partition, then tau.
std::vector<PairSpec> enumerate_P(int d, int k);

/// One rational component R_i of the chain.
struct ChainComponent {
  std::vector<int> heavy;  // labels of the heavy markings it carries
  std::vector<int> light;  // light points it carries
  int nodes = 0;
  int dimension() const {
    return static_cast<int>(heavy.size() + light.size()) + nodes - 3;
  }
};

/// The test stratum Y_m[P, tau]: a chain R_0 - R_1 - ... - R_{l+1} in
/// M_{0,m|d} with m = 4 + k - d + 2l heavy markings placed left to right
/// (2 on each end, t_i + 1 on R_i), light block P_i on R_i, and the psi
/// monomial psi_{r_1} ... psi_{r_l} with r_i the minimal heavy label on R_i.
struct ChainStratum {
  PairSpec source;
  int heavy_markings = 0;
  std::vector<ChainComponent> components;
  std::vector<int> psi_labels;

  int length() const { return source.length(); }
  /// Sum of component dimensions; equals l + k.
  int dimension() const;
};

ChainStratum chain_stratum(const PairSpec& spec);

struct PairingEntry {
  enum class Status { ProvenZero, Computed, Unevaluated };
  Status status = Status::Unevaluated;
  Rational value;  // meaningful when Computed; 0 when ProvenZero
  std::string evidence;
};

const char* to_string(PairingEntry::Status s);

/// ∫_S X[P,tau] psi_{r'_1}..psi_{r'_l'} for a row [P,tau] and column stratum.
///   l < l'              -> ProvenZero (some R'_i receives no diagonal)
///   l = l', P != P'     -> ProvenZero (empty set-theoretic intersection)
///   l = l', P = P'      -> Computed, prod_i ∫_{M_{0,t'_i+4}} psi_{r'_i} psi^{t_i}
///   l > l'              -> Unevaluated
PairingEntry pairing_entry(const PairSpec& row, const ChainStratum& col);

struct PairingMatrix {
  int d = 0;
  int k = 0;
  std::vector<PairSpec> rows;
  std::vector<ChainStratum> cols;
  std::vector<std::vector<PairingEntry>> entries;  // [row][col]
};

PairingMatrix pairing_matrix(int d, int k);

/// Rank of a dense rational matrix by exact Gaussian elimination.
std::size_t exact_rank(std::vector<std::vector<Rational>> m);

struct DiagonalBlockReport {
  int length = 0;
  std::size_t size = 0;
  std::size_t rank = 0;
  bool is_diagonal = false;
  Rational min_diagonal;
};

/// Evidence that P[d,k] -> functionals is injective: block triangularity by
/// partition length plus nonsingular (diagonal) diagonal blocks.
struct RankCertificate {
  int d = 0;
  int k = 0;
  bool valid = false;
  std::size_t dimension = 0;
  std::size_t proven_zero = 0;
  std::size_t computed = 0;
  std::size_t unevaluated = 0;
  std::vector<DiagonalBlockReport> blocks;
  std::vector<std::string> failures;
  PairingMatrix matrix;
};

inline constexpr int kDefaultPairingBound = 5;

RankCertificate rank_certificate(int d, int k, int max_d = kDefaultPairingBound,
                                 int max_k = kDefaultPairingBound);

}  // namespace sqtaut

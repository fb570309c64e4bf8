#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilrep/bound_problem.hpp"
#include "nilrep/filtration.hpp"
#include "nilrep/representation.hpp"

namespace nilrep {

/// Chain T_p ⊆ ... ⊆ T_1 of operator subspaces of End(V). Operators are
/// stored in coordinates against a fixed frame: a linearly independent list
/// of matrices spanning T_1. Levels are 1-based.
class OperatorChain {
 public:
  /// Throws InputError when the frame is dependent, a level lives in the
  /// wrong coordinate space, or the levels are not nested.
  OperatorChain(std::size_t space_dim, std::vector<Matrix> frame, std::vector<Subspace> levels);

  /// Frame rho(x_1), ..., rho(x_n); levels are the filtration subspaces.
  static OperatorChain from_representation(const Representation& rep, const Filtration& filt);
  /// Each level given by spanning matrices; T_1's matrices define the frame.
  static OperatorChain from_levels(std::size_t space_dim,
                                   const std::vector<std::vector<Matrix>>& levels);

  std::size_t space_dim() const { return space_dim_; }
  std::size_t depth() const { return levels_.size(); }
  std::size_t frame_size() const { return frame_.size(); }
  const std::vector<Matrix>& frame() const { return frame_; }
  const Subspace& level(std::size_t k) const { return levels_.at(k - 1); }
  const std::vector<Subspace>& levels() const { return levels_; }

  /// Operator with the given frame coordinates.
  Matrix operator_at(const Vector& coords) const;
  /// dimV x frame_size matrix whose column j is F_j(v); its kernel is the
  /// annihilator of v in frame coordinates.
  Matrix action(const Vector& v) const;
  /// dim of S(v) = {X(v) : X in S} for S in frame coordinates.
  std::size_t image_dim(const Subspace& s, const Vector& v) const;
  /// S(v) as a subspace of V.
  Subspace image(const Subspace& s, const Vector& v) const;

 private:
  std::size_t space_dim_;
  std::vector<Matrix> frame_;
  std::vector<Subspace> levels_;
};

struct RankVector {
  Vector vector;
  std::vector<std::size_t> dims;  // dim T_k(v), one per level
};

/// Samples integer vectors with coordinates in [-M, M], M = 16, 32, ...:
/// accepts a sample whose dimension tuple dominates a batch of 8 and is not
/// exceeded by two further samples. Deterministic for a given rng state.
/// Throws InvariantError when the sampling budget runs out.
RankVector find_rank_vector(const OperatorChain& chain, const std::vector<Subspace>& levels,
                            std::mt19937_64& rng);
RankVector find_rank_vector(const OperatorChain& chain, std::uint64_t seed);

/// Output of the chain algorithm: partition s_1 >= ... >= s_p > 0, vectors
/// v_1..v_{s_1}, and grid[k-1][j-1] = T_{k,j} in frame coordinates.
struct Decomposition {
  std::vector<std::size_t> partition;
  std::vector<Vector> vectors;
  std::vector<std::vector<Subspace>> grid;
  std::uint64_t seed = 0;

  /// r_k = dim T_{k,1}
  std::vector<std::size_t> column_dims() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Runs the chain algorithm: repeatedly pick a rank vector for the current
/// chain, split off the annihilator at every level with nested complements
/// (built from the deepest level upward), and continue on the annihilators.
Decomposition decompose(const OperatorChain& chain, std::uint64_t seed);

/// Validates that `rep` is a faithful representation by nilpotent matrices and
/// that `filt` is a valid filtration, then decomposes rho(n_p) ⊆ ... ⊆ rho(n_1).
/// Throws InputError when validation fails.
Decomposition decompose(const Representation& rep, const Filtration& filt, std::uint64_t seed);

struct CheckResult {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::vector<std::string> failures;
};

struct CheckReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

/// Exact checks of the grid: partition shape, direct sums with columnwise
/// nesting, dim T_{k,j} = dim T_{k,j} v_j, T_{k,j} v_i = 0 and
/// T_{k,j} V ⊆ T_{k,i} v_i for i < j, independence of the v_i, and (when T_1
/// is nilpotent and commutes with T_{p0}) T_{1,1} v_1 ∩ span{v_1..v_{s_p0}} = 0.
CheckReport verify_decomposition(const Decomposition& dec, const OperatorChain& chain,
                                 std::size_t p0);

/// Ordered basis (X_1 v_1, ..., X_{r_1} v_1, w_1, ..., w_q, v_1, ..., v_{s_p0})
/// of V, with X_1..X_{r_k} spanning T_{k,1}.
struct AdaptedBasis {
  std::vector<std::size_t> r;    // r_1 >= ... >= r_p
  std::vector<Vector> operators; // X_1..X_{r_1} in frame coordinates
  std::size_t q = 0;             // dim W
  std::size_t s_p0 = 0;
  Matrix basis;                  // columns in the order above
  Subspace w;
  Subspace v0;
};

/// Throws InvariantError when the images and v's are dependent.
AdaptedBasis build_adapted_basis(const Decomposition& dec, const OperatorChain& chain,
                                 std::size_t p0);

/// Matrix of one operator of T_{k,j} in the adapted basis.
struct BlockEntry {
  std::size_t level = 0;   // k
  std::size_t column = 0;  // j
  std::size_t index = 0;   // position in the canonical basis of T_{k,j}
  Matrix in_basis;
};

struct BlockReport {
  std::vector<BlockEntry> entries;
  CheckReport report;
  bool ok() const { return report.ok(); }
};

/// Zero patterns of [X]_B in the blocks cut by (r_1, q, s_p0): support and
/// injectivity of the v_1 column for j = 1; for j >= 2 vanishing lower
/// blocks, vanishing first j-1 columns of A_13, row support within r_k, the
/// staircase in A_11, and A_11 = 0 when k >= p0.
BlockReport verify_block_structure(const AdaptedBasis& ab, const Decomposition& dec,
                                   const OperatorChain& chain, std::size_t p0);

/// a_0 = dim V - r_1, a_h = r_h - r_{h+1}, a_p = r_p. Throws InvariantError
/// unless a_0, a_p >= 1, the sum is dim V, and the profile is feasible for
/// the problem built from (p, p0, dim T_k).
Profile extract_profile(const Decomposition& dec, const OperatorChain& chain, std::size_t p0);

/// Everything the decompose command reports for one input.
struct DecompositionRun {
  OperatorChain chain;
  Decomposition decomposition;
  CheckReport decomposition_checks;
  std::optional<AdaptedBasis> adapted_basis;
  std::optional<BlockReport> block_report;
  std::optional<Profile> profile;
  std::string failure;  // first internal failure, empty when none

  bool ok() const;
};

/// decompose + verify + adapted basis + block checks + profile. Input errors
/// propagate as InputError; verification failures are recorded, not thrown.
DecompositionRun run_decomposition(const Representation& rep, const Filtration& filt,
                                   std::uint64_t seed);

}  // namespace nilrep

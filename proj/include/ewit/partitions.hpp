#ifndef EWIT_PARTITIONS_HPP
#define EWIT_PARTITIONS_HPP

#include <optional>
#include <string>

#include "ewit/rng.hpp"
#include "ewit/types.hpp"

namespace ewit {

// A set partition of the party indices {0..n-1}. Blocks hold sorted party
// indices and are ordered by smallest element.
using Partition = std::vector<std::vector<int>>;

// All set partitions of {0..n-1} into blocks of at most max_block parties,
// canonical order, no duplicates.
std::vector<Partition> enumerate_partitions(int n, int max_block);

// The constraint family for one separability notion: every partition whose
// product vectors the witness must be nonnegative on. m = 1 is ordinary
// (full) separability; m < n with all partitions of block size <= m is
// m-separability, whose witnesses detect genuine (m+1)-partite entanglement.
// A fixed two-block partition restricts to one bipartite cut.
class PartitionScheme {
 public:
  static PartitionScheme m_separable(const DimensionVector& dims, int max_block);
  static PartitionScheme bipartition(const DimensionVector& dims, std::vector<int> cut);

  const DimensionVector& dims() const { return dims_; }
  int max_block() const { return max_block_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const std::optional<std::vector<int>>& fixed_cut() const { return fixed_cut_; }
  std::string description() const;

 private:
  PartitionScheme(DimensionVector dims, int max_block, std::vector<Partition> parts,
                  std::optional<std::vector<int>> cut)
      : dims_(std::move(dims)),
        max_block_(max_block),
        partitions_(std::move(parts)),
        fixed_cut_(std::move(cut)) {}

  DimensionVector dims_;
  int max_block_;
  std::vector<Partition> partitions_;
  std::optional<std::vector<int>> fixed_cut_;
};

// Pure product state across the blocks of one partition.
struct ProductBlock {
  std::vector<int> parties;  // sorted
  Vec amplitudes;            // normalized, length = product of block dims
};

struct ProductVector {
  std::vector<ProductBlock> blocks;
  Vec assembled;  // full-space vector in canonical tensor order
};

// Tensor-assemble block vectors onto the joint space of `subset` (which the
// blocks must exactly cover). Digits are ordered by ascending party index.
Vec assemble_blocks(const DimensionVector& dims, const std::vector<ProductBlock>& blocks,
                    const std::vector<int>& subset);

// Validates block structure (coverage, disjointness, normalization within
// 1e-10) and assembles the full vector.
ProductVector make_product_vector(const DimensionVector& dims, std::vector<ProductBlock> blocks);

// Independent Haar-random pure state on every block of the partition.
ProductVector random_product_vector(const DimensionVector& dims, const Partition& partition, Rng& rng);

// Effective operator seen by the `free` parties of w when the rest of the
// system is projected onto phi (a vector on the complement of `free`):
// M(a,b) = sum_{x,y} conj(phi_x) phi_y W(merge(a,x), merge(b,y)).
Mat effective_operator(const Mat& w, const DimensionVector& dims, const std::vector<int>& free,
                       const Vec& phi);

// <psi|W|psi> as a real number; the imaginary part of the form (nonzero only
// through rounding for Hermitian W) is discarded.
double quadratic_form(const Mat& w, const Vec& psi);

}  // namespace ewit

#endif  // EWIT_PARTITIONS_HPP

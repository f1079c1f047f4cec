#include "ewit/partitions.hpp"

#include <algorithm>

namespace ewit {

namespace {

constexpr long kMaxPartitions = 200000;

void extend(std::vector<Partition>& out, Partition& current, int next, int n, int max_block) {
  if (next == n) {
    out.push_back(current);
    return;
  }
  if (static_cast<long>(out.size()) > kMaxPartitions)
    throw OversizedError("enumerate_partitions: partition count limit exceeded");
  // join an existing block
  for (auto& block : current) {
    if (static_cast<int>(block.size()) < max_block) {
      block.push_back(next);
      extend(out, current, next + 1, n, max_block);
      block.pop_back();
    }
  }
  // open a new block; smallest-element ordering holds by construction
  current.push_back({next});
  extend(out, current, next + 1, n, max_block);
  current.pop_back();
}

void check_partition(const DimensionVector& dims, const Partition& partition) {
  std::vector<int> seen(static_cast<size_t>(dims.parties()), 0);
  int covered = 0;
  for (const auto& block : partition) {
    if (block.empty()) throw DimensionError("partition: empty block");
    for (int p : block) {
      dims.check_parties({p});
      if (seen[static_cast<size_t>(p)]++) throw DimensionError("partition: blocks overlap");
      ++covered;
    }
    if (!is_sorted_unique(block) && block.size() > 1)
      throw DimensionError("partition: block parties must be sorted");
  }
  if (covered != dims.parties()) throw DimensionError("partition: blocks do not cover all parties");
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int max_block) {
  if (n < 1) throw DimensionError("enumerate_partitions: n must be >= 1");
  if (max_block < 1 || max_block > n)
    throw DimensionError("enumerate_partitions: need 1 <= max_block <= n");
  std::vector<Partition> out;
  Partition current;
  extend(out, current, 0, n, max_block);
  return out;
}

PartitionScheme PartitionScheme::m_separable(const DimensionVector& dims, int max_block) {
  const int n = dims.parties();
  if (max_block >= n && n > 1)
    throw DimensionError("m_separable: max block size must be < party count");
  if (n == 1) throw DimensionError("m_separable: need at least two parties");
  return PartitionScheme(dims, max_block, enumerate_partitions(n, max_block), std::nullopt);
}

PartitionScheme PartitionScheme::bipartition(const DimensionVector& dims, std::vector<int> cut) {
  dims.check_parties(cut);
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  if (cut.empty() || static_cast<int>(cut.size()) >= dims.parties())
    throw DimensionError("bipartition: cut must split the parties into two nonempty groups");
  std::vector<int> rest = complement_parties(dims, cut);
  Partition part;
  if (cut[0] < rest[0]) {
    part = {cut, rest};
  } else {
    part = {rest, cut};
  }
  int mb = static_cast<int>(std::max(cut.size(), rest.size()));
  return PartitionScheme(dims, mb, {part}, std::move(cut));
}

std::string PartitionScheme::description() const {
  if (fixed_cut_) {
    std::string s = "cut={";
    for (size_t i = 0; i < fixed_cut_->size(); ++i) {
      if (i) s += ",";
      s += std::to_string((*fixed_cut_)[i]);
    }
    return s + "}";
  }
  return "m=" + std::to_string(max_block_);
}

Vec assemble_blocks(const DimensionVector& dims, const std::vector<ProductBlock>& blocks,
                    const std::vector<int>& subset) {
  const long ds = subset_dim(dims, subset);
  // position of each party inside the subset's local indexing
  std::vector<int> pos(static_cast<size_t>(dims.parties()), -1);
  for (size_t i = 0; i < subset.size(); ++i) pos[static_cast<size_t>(subset[i])] = static_cast<int>(i);
  std::vector<int> sub_dims;
  sub_dims.reserve(subset.size());
  for (int p : subset) sub_dims.push_back(dims.dim(p));
  DimensionVector sdims(sub_dims);

  Vec out = Vec::Ones(ds);
  std::vector<char> covered(subset.size(), 0);
  Vec next(ds);
  for (const auto& block : blocks) {
    std::vector<int> local_parties;
    for (int p : block.parties) {
      if (pos[static_cast<size_t>(p)] < 0)
        throw DimensionError("assemble_blocks: block party outside subset");
      covered[static_cast<size_t>(pos[static_cast<size_t>(p)])] = 1;
      local_parties.push_back(pos[static_cast<size_t>(p)]);
    }
    const std::vector<long> offB = subset_offsets(sdims, local_parties);
    const std::vector<long> offC = subset_offsets(sdims, complement_parties(sdims, local_parties));
    if (block.amplitudes.size() != static_cast<long>(offB.size()))
      throw DimensionError("assemble_blocks: block amplitude length mismatch");
    for (size_t t = 0; t < offB.size(); ++t)
      for (size_t x = 0; x < offC.size(); ++x)
        next(offB[t] + offC[x]) = out(offB[t] + offC[x]) * block.amplitudes(static_cast<long>(t));
    out.swap(next);
  }
  for (char c : covered)
    if (!c) throw DimensionError("assemble_blocks: blocks do not cover the subset");
  return out;
}

ProductVector make_product_vector(const DimensionVector& dims, std::vector<ProductBlock> blocks) {
  Partition partition;
  for (auto& b : blocks) {
    std::sort(b.parties.begin(), b.parties.end());
    if (std::abs(b.amplitudes.norm() - 1.0) > 1e-10)
      throw ValidationError("block normalized", std::abs(b.amplitudes.norm() - 1.0));
    partition.push_back(b.parties);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const ProductBlock& a, const ProductBlock& b) { return a.parties[0] < b.parties[0]; });
  std::sort(partition.begin(), partition.end());
  // reuse the partition validator: coverage and disjointness
  {
    std::vector<int> seen(static_cast<size_t>(dims.parties()), 0);
    int covered = 0;
    for (const auto& block : partition) {
      for (int p : block) {
        dims.check_parties({p});
        if (seen[static_cast<size_t>(p)]++) throw DimensionError("product vector: blocks overlap");
        ++covered;
      }
    }
    if (covered != dims.parties())
      throw DimensionError("product vector: blocks do not cover all parties");
  }
  std::vector<int> all(static_cast<size_t>(dims.parties()));
  for (int p = 0; p < dims.parties(); ++p) all[static_cast<size_t>(p)] = p;
  ProductVector pv;
  pv.assembled = assemble_blocks(dims, blocks, all);
  pv.blocks = std::move(blocks);
  return pv;
}

ProductVector random_product_vector(const DimensionVector& dims, const Partition& partition, Rng& rng) {
  check_partition(dims, partition);
  std::vector<ProductBlock> blocks;
  blocks.reserve(partition.size());
  for (const auto& parties : partition) {
    ProductBlock b;
    b.parties = parties;
    b.amplitudes = rng.unit_vector(static_cast<int>(subset_dim(dims, parties)));
    blocks.push_back(std::move(b));
  }
  return make_product_vector(dims, std::move(blocks));
}

Mat effective_operator(const Mat& w, const DimensionVector& dims, const std::vector<int>& free,
                       const Vec& phi) {
  const std::vector<int> comp = complement_parties(dims, free);
  const std::vector<long> offF = subset_offsets(dims, free);
  const std::vector<long> offC = subset_offsets(dims, comp);
  const long df = static_cast<long>(offF.size());
  const long dc = static_cast<long>(offC.size());
  if (phi.size() != dc) throw DimensionError("effective_operator: complement vector length mismatch");
  const long D = dims.total();
  // T(I,b) = sum_y phi_y W(I, merge(b,y))
  Mat t = Mat::Zero(D, df);
  for (long b = 0; b < df; ++b)
    for (long y = 0; y < dc; ++y) t.col(b) += phi(y) * w.col(offF[b] + offC[y]);
  Mat m(df, df);
  for (long a = 0; a < df; ++a)
    for (long b = 0; b < df; ++b) {
      cplx s(0.0, 0.0);
      for (long x = 0; x < dc; ++x) s += std::conj(phi(x)) * t(offF[a] + offC[x], b);
      m(a, b) = s;
    }
  return m;
}

double quadratic_form(const Mat& w, const Vec& psi) {
  if (w.rows() != psi.size() || w.cols() != psi.size())
    throw DimensionError("quadratic_form: dimension mismatch");
  const cplx v = psi.dot(w * psi);  // Eigen dot conjugates the first argument
  return v.real();
}

}  // namespace ewit

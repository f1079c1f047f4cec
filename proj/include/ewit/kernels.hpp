#ifndef EWIT_KERNELS_HPP
#define EWIT_KERNELS_HPP

#include "ewit/types.hpp"

// Raw index-arithmetic kernels on multipartite operators.
//
// ewit::kernels holds the production versions: offset-table index mapping,
// OpenMP-parallel loops. ewit::reference holds independent serial
// implementations that decompose tensor indices digit by digit; they exist
// as a cross-check for the tests and the benchmark target and must never be
// called from library code paths.
//
// Neither namespace validates inputs; the callers in tensor.hpp do.

namespace ewit::kernels {

Mat tensor_product(const Mat& a, const Mat& b);

// keep/traced/transposed party lists must be sorted ascending and in range.
Mat partial_trace(const Mat& m, const DimensionVector& dims, const std::vector<int>& keep);
Mat partial_transpose(const Mat& m, const DimensionVector& dims, const std::vector<int>& transposed);

// perm[k] = old party placed at new slot k.
Mat permute_subsystems(const Mat& m, const DimensionVector& dims, const std::vector<int>& perm);

}  // namespace ewit::kernels

namespace ewit::reference {

Mat tensor_product(const Mat& a, const Mat& b);
Mat partial_trace(const Mat& m, const DimensionVector& dims, const std::vector<int>& keep);
Mat partial_transpose(const Mat& m, const DimensionVector& dims, const std::vector<int>& transposed);
Mat permute_subsystems(const Mat& m, const DimensionVector& dims, const std::vector<int>& perm);

}  // namespace ewit::reference

#endif  // EWIT_KERNELS_HPP

#pragma once

// Fusions of a commutative scheme: admissible partitions of the class
// indices and the Bannai-Muzychuk constant-row-sum criterion applied to an
// exact first eigenmatrix.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bsl/scheme.hpp"

namespace bsl {

using IndexBlock = std::vector<std::size_t>;

// Blocks Lambda_0 = {0}, Lambda_1, ..., sorted by minimum element, each block sorted.
struct AdmissiblePartition {
    std::vector<IndexBlock> blocks;

    std::size_t class_count() const noexcept { return blocks.empty() ? 0 : blocks.size() - 1; }
    // Blocks with more than one index, in block order.
    std::vector<IndexBlock> fused_blocks() const;
    std::string str() const;

    friend bool operator==(const AdmissiblePartition& a, const AdmissiblePartition& b) { return a.blocks == b.blocks; }
};

// Sorts blocks into canonical form; does not check admissibility.
AdmissiblePartition make_partition(std::vector<IndexBlock> blocks);

bool is_admissible(const AdmissiblePartition& lambda, std::size_t d, const std::vector<std::size_t>& pairing);

// Every admissible partition of {0..d}, in lexicographic order of the
// restricted-growth string of 1..d.
std::vector<AdmissiblePartition> enumerate_admissible(std::size_t d, const std::vector<std::size_t>& pairing);

struct FusionResult {
    AdmissiblePartition partition;
    Eigenmatrix fused_P;
    std::vector<IndexBlock> delta;  // row classes, delta[0] == {0}
    std::vector<std::size_t> fused_pairing;
    bool symmetric = false;
    std::size_t class_count = 0;
};

// nullopt when the partition is not admissible or does not give a fusion.
std::optional<FusionResult> bannai_muzychuk(const Eigenmatrix& P, const std::vector<std::size_t>& pairing,
                                            const AdmissiblePartition& lambda);

// All fusions with at least min_class classes, ordered by class count
// (descending) and then by the list of fused blocks. The identity partition
// is excluded.
std::vector<FusionResult> fusion_table(const Eigenmatrix& P, const std::vector<std::size_t>& pairing,
                                       std::size_t min_class = 3);

// Union of the classes in each block.
DifferencePartition fuse_partition(const DifferencePartition& part, const AdmissiblePartition& lambda);

// Partition of the original indices obtained by fusing `outer` (a partition
// of the block indices of `inner`) after `inner`.
AdmissiblePartition compose(const AdmissiblePartition& inner, const AdmissiblePartition& outer);

// True iff every fused class is closed under multiplication by T.
bool t_invariance(const DifferencePartition& part, const AdmissiblePartition& lambda);

}  // namespace bsl

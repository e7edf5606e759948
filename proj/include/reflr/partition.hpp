#pragma once

#include <string>
#include <vector>

namespace reflr {

// Weakly decreasing nonnegative integer vector of fixed length n.
// Partitions with fewer parts are right-padded with zeros.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);

// Validates and right-pads with zeros to length n. Throws std::invalid_argument
// if p is not weakly decreasing nonnegative or has more than n parts.
Partition pad_partition(Partition p, int n);

long long part_sum(const Partition& p);

// (0, p1, p1+p2, ..., |p|), length n+1.
std::vector<long long> partial_sums(const Partition& p);

Partition scale_partition(const Partition& p, int k);

// All partitions fitting in a len x maxpart box, padded to length len.
// Deterministic order: by total size, then lexicographically decreasing parts.
std::vector<Partition> partitions_in_box(int len, int maxpart);

// All partitions of `total` with at most len parts, padded to length len.
std::vector<Partition> partitions_of(int total, int len);

std::string to_string(const Partition& p);

}  // namespace reflr

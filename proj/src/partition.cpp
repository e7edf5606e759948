#include "reflr/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace reflr {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

Partition pad_partition(Partition p, int n) {
  if (!is_partition(p))
    throw std::invalid_argument("not weakly decreasing nonnegative: " + to_string(p));
  if (static_cast<int>(p.size()) > n) {
    for (size_t i = n; i < p.size(); ++i)
      if (p[i] != 0) throw std::invalid_argument("partition has more than n parts");
    p.resize(n);
  }
  p.resize(n, 0);
  return p;
}

long long part_sum(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0LL);
}

std::vector<long long> partial_sums(const Partition& p) {
  std::vector<long long> ps(p.size() + 1, 0);
  for (size_t i = 0; i < p.size(); ++i) ps[i + 1] = ps[i] + p[i];
  return ps;
}

Partition scale_partition(const Partition& p, int k) {
  Partition q(p);
  for (int& x : q) x *= k;
  return q;
}

namespace {

void gen_partitions(int remaining, int maxpart, int maxlen, Partition& cur,
                    std::vector<Partition>& out, int len) {
  if (remaining == 0) {
    Partition p = cur;
    p.resize(len, 0);
    out.push_back(std::move(p));
    return;
  }
  if (maxlen == 0) return;
  for (int part = std::min(maxpart, remaining); part >= 1; --part) {
    cur.push_back(part);
    gen_partitions(remaining - part, part, maxlen - 1, cur, out, len);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int len, int maxpart) {
  std::vector<Partition> out;
  Partition cur;
  for (int total = 0; total <= len * maxpart; ++total)
    gen_partitions(total, maxpart, len, cur, out, len);
  return out;
}

std::vector<Partition> partitions_of(int total, int len) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(total, total, len, cur, out, len);
  return out;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace reflr

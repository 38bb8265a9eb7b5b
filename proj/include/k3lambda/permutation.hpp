#ifndef K3LAMBDA_PERMUTATION_HPP
#define K3LAMBDA_PERMUTATION_HPP

#include "k3lambda/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace k3 {

/// Element of S6 in one-line notation, 0-based internally.
struct Perm6 {
  std::array<int, 6> img{0, 1, 2, 3, 4, 5};

  static Perm6 identity() { return Perm6{}; }
  static Perm6 from_one_line(const std::array<int, 6>& one_based);
  static Perm6 from_string(const std::string& s); // "326154"
  int operator()(int i) const { return img[i]; }
  Perm6 inverse() const;
  /// (a * b)(i) = b(a(i)): apply a first, then b.
  friend Perm6 operator*(const Perm6& a, const Perm6& b);
  bool operator==(const Perm6&) const = default;
  std::string one_line() const;
  static std::vector<Perm6> all(); // all 720, lexicographic
};

/// Ordered 3+3 partition of {1..6}; canonical form sorts both blocks and
/// puts the block containing 1 first.  Relabelings carry the sign of the
/// two within-block sorting permutations (block swap is free), matching the
/// antisymmetry of products of two complementary 3x3 minors.
struct Partition {
  std::array<int, 3> b1{0, 1, 2}; // 0-based, sorted, contains 0
  std::array<int, 3> b2{3, 4, 5};

  bool operator==(const Partition&) const = default;
  std::string str() const; // "123|456"
};

/// Canonicalize an ordered pair of blocks; returns the sign.
std::pair<Partition, int> canonical_partition(std::array<int, 3> x, std::array<int, 3> y);

/// Relabel by sigma: {i,j,k|l,m,n} -> {s(i),s(j),s(k)|s(l),s(m),s(n)}.
std::pair<Partition, int> apply_perm(const Perm6& s, const Partition& p);

/// The ten even characteristics: s-bits, canonical index 1..10, partition.
struct ThetaChar {
  int index;               // 1..10
  std::array<int, 4> s;    // 4-bit vector
  Partition part;
};
const std::array<ThetaChar, 10>& theta_table();
int theta_index_of(const Partition& p); // 1..10

/// Semi-invariant index s in {0,1,2,3,4,6,7,8,9,10} with its partition.
struct YIndex {
  int s;
  Partition part;
};
const std::array<YIndex, 10>& y_table();
int y_slot_of(const Partition& p); // position 0..9 in the table

} // namespace k3

#endif

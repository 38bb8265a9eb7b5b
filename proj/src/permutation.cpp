#include "k3lambda/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3 {

Perm6 Perm6::from_one_line(const std::array<int, 6>& one_based) {
  Perm6 p;
  std::array<bool, 6> seen{};
  for (int i = 0; i < 6; ++i) {
    int v = one_based[i] - 1;
    if (v < 0 || v > 5 || seen[v]) throw std::invalid_argument("not a permutation of 1..6");
    seen[v] = true;
    p.img[i] = v;
  }
  return p;
}

Perm6 Perm6::from_string(const std::string& s) {
  if (s.size() != 6) throw std::invalid_argument("permutation needs 6 digits");
  std::array<int, 6> ol{};
  for (int i = 0; i < 6; ++i) ol[i] = s[i] - '0';
  return from_one_line(ol);
}

Perm6 Perm6::inverse() const {
  Perm6 p;
  for (int i = 0; i < 6; ++i) p.img[img[i]] = i;
  return p;
}

Perm6 operator*(const Perm6& a, const Perm6& b) {
  Perm6 p;
  for (int i = 0; i < 6; ++i) p.img[i] = b.img[a.img[i]];
  return p;
}

std::string Perm6::one_line() const {
  std::string s;
  for (int i = 0; i < 6; ++i) s += char('1' + img[i]);
  return s;
}

std::vector<Perm6> Perm6::all() {
  std::array<int, 6> v{0, 1, 2, 3, 4, 5};
  std::vector<Perm6> out;
  out.reserve(720);
  do {
    Perm6 p;
    p.img = v;
    out.push_back(p);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {
int sort_sign(std::array<int, 3>& b) {
  int sign = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2 - i; ++j)
      if (b[j] > b[j + 1]) {
        std::swap(b[j], b[j + 1]);
        sign = -sign;
      }
  return sign;
}
} // namespace

std::pair<Partition, int> canonical_partition(std::array<int, 3> x, std::array<int, 3> y) {
  int sign = sort_sign(x) * sort_sign(y);
  bool swap_blocks = std::find(y.begin(), y.end(), 0) != y.end();
  Partition p;
  p.b1 = swap_blocks ? y : x;
  p.b2 = swap_blocks ? x : y;
  std::array<bool, 6> seen{};
  for (int v : p.b1) seen.at(v) = true;
  for (int v : p.b2) seen.at(v) = true;
  for (bool s : seen)
    if (!s) throw std::invalid_argument("blocks do not partition {1..6}");
  return {p, sign};
}

std::pair<Partition, int> apply_perm(const Perm6& s, const Partition& p) {
  std::array<int, 3> x{}, y{};
  for (int i = 0; i < 3; ++i) {
    x[i] = s(p.b1[i]);
    y[i] = s(p.b2[i]);
  }
  return canonical_partition(x, y);
}

std::string Partition::str() const {
  std::string out;
  for (int v : b1) out += char('1' + v);
  out += '|';
  for (int v : b2) out += char('1' + v);
  return out;
}

namespace {
Partition part(const char* p) {
  std::array<int, 3> x{p[0] - '1', p[1] - '1', p[2] - '1'};
  std::array<int, 3> y{p[4] - '1', p[5] - '1', p[6] - '1'};
  return canonical_partition(x, y).first;
}
} // namespace

const std::array<ThetaChar, 10>& theta_table() {
  static const std::array<ThetaChar, 10> t = {{
      {1, {1, 1, 1, 1}, part("123|456")},
      {2, {1, 1, 0, 0}, part("124|356")},
      {3, {1, 0, 0, 0}, part("125|346")},
      {4, {1, 0, 0, 1}, part("126|345")},
      {5, {0, 1, 0, 0}, part("134|256")},
      {6, {0, 0, 0, 0}, part("135|246")},
      {7, {0, 0, 0, 1}, part("136|245")},
      {8, {0, 0, 1, 1}, part("145|236")},
      {9, {0, 0, 1, 0}, part("146|235")},
      {10, {0, 1, 1, 0}, part("156|234")},
  }};
  return t;
}

int theta_index_of(const Partition& p) {
  for (const auto& tc : theta_table())
    if (tc.part == p) return tc.index;
  throw std::invalid_argument("partition not in the characteristic table");
}

const std::array<YIndex, 10>& y_table() {
  static const std::array<YIndex, 10> t = {{
      {0, part("123|456")},
      {1, part("124|356")},
      {2, part("125|346")},
      {3, part("134|256")},
      {4, part("135|246")},
      {6, part("126|345")},
      {7, part("136|245")},
      {8, part("146|235")},
      {9, part("156|234")},
      {10, part("145|236")},
  }};
  return t;
}

int y_slot_of(const Partition& p) {
  const auto& t = y_table();
  for (int i = 0; i < 10; ++i)
    if (t[i].part == p) return i;
  throw std::invalid_argument("partition not in the semi-invariant table");
}

} // namespace k3

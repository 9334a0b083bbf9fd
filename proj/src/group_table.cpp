#include "qg/group_table.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qg {

GroupTable::GroupTable(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  n_ = static_cast<int>(table_.size());
  if (n_ == 0) throw NotAGroupError("empty multiplication table");
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(table_[i].size()) != n_)
      throw NotAGroupError("table row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n_; ++j)
      if (table_[i][j] < 0 || table_[i][j] >= n_)
        throw NotAGroupError("table entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ") out of range");
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
          throw NotAGroupError("associativity fails at triple (" + std::to_string(i) +
                               "," + std::to_string(j) + "," + std::to_string(k) + ")");
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int i = 0; i < n_; ++i)
      if (table_[e][i] != i || table_[i][e] != i) { ok = false; break; }
    if (ok) { identity_ = e; break; }
  }
  if (identity_ < 0) throw NotAGroupError("no two-sided identity element");
  inverse_.assign(n_, -1);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j)
      if (table_[i][j] == identity_ && table_[j][i] == identity_) { inverse_[i] = j; break; }
    if (inverse_[i] < 0)
      throw NotAGroupError("element " + std::to_string(i) + " has no inverse");
  }
}

int GroupTable::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity_) { x = table_[x][a]; ++k; }
  return k;
}

bool GroupTable::is_abelian() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (table_[i][j] != table_[j][i]) return false;
  return true;
}

std::vector<std::vector<int>> GroupTable::subgroups() const {
  if (n_ > 16)
    throw NotAGroupError("subgroup enumeration limited to order <= 16");
  std::vector<std::vector<int>> out;
  const unsigned total = 1u << n_;
  for (unsigned mask = 0; mask < total; ++mask) {
    if (!(mask & (1u << identity_))) continue;
    if (n_ % __builtin_popcount(mask) != 0) continue;  // Lagrange
    bool closed = true;
    for (int i = 0; i < n_ && closed; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = 0; j < n_ && closed; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!(mask & (1u << table_[i][j]))) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<int> elems;
    for (int i = 0; i < n_; ++i)
      if (mask & (1u << i)) elems.push_back(i);
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> GroupTable::order_sequence() const {
  std::vector<int> seq(n_);
  for (int i = 0; i < n_; ++i) seq[i] = element_order(i);
  std::sort(seq.begin(), seq.end());
  return seq;
}

bool GroupTable::is_automorphism(const std::vector<int>& p) const {
  if (static_cast<int>(p.size()) != n_) return false;
  std::set<int> image(p.begin(), p.end());
  if (static_cast<int>(image.size()) != n_) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (p[table_[i][j]] != table_[p[i]][p[j]]) return false;
  return true;
}

GroupTable GroupTable::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return GroupTable(std::move(t));
}

GroupTable GroupTable::klein_four() {
  return direct_product(cyclic(2), cyclic(2));
}

GroupTable GroupTable::symmetric3() {
  // Elements as permutations of {0,1,2} in one-line notation, composed
  // left-to-right: (p*q)(x) = q(p(x)).
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  auto find = [&](const int* p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int c[3];
      for (int x = 0; x < 3; ++x) c[x] = perms[j][perms[i][x]];
      t[i][j] = find(c);
    }
  return GroupTable(std::move(t));
}

GroupTable GroupTable::dihedral4() {
  // r^a s^b with a mod 4, b mod 2, index = a + 4b; s r s = r^-1.
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const int a1 = i % 4, b1 = i / 4, a2 = j % 4, b2 = j / 4;
      // (r^a1 s^b1)(r^a2 s^b2) = r^(a1 + (-1)^b1 a2) s^(b1+b2)
      const int a = ((a1 + (b1 ? 4 - a2 : a2)) % 4 + 4) % 4;
      const int b = (b1 + b2) % 2;
      t[i][j] = a + 4 * b;
    }
  return GroupTable(std::move(t));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j)
      t[i][j] = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
  return GroupTable(std::move(t));
}

}  // namespace qg

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qg {

struct NotAGroupError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Multiplication table of a finite group over elements 0..n-1.
/// Construction validates closure, associativity, identity, and inverses;
/// the error message names the first failing triple.
class GroupTable {
 public:
  explicit GroupTable(std::vector<std::vector<int>> table);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const;

  bool is_abelian() const;

  /// All subgroups, each as a sorted element list (exhaustive; order <= 16).
  std::vector<std::vector<int>> subgroups() const;

  /// Sorted multiset of element orders, a cheap isomorphism-class fingerprint.
  std::vector<int> order_sequence() const;

  /// True if the permutation p (element i -> p[i]) is a group automorphism.
  bool is_automorphism(const std::vector<int>& p) const;

  static GroupTable cyclic(int n);
  static GroupTable klein_four();
  static GroupTable symmetric3();
  static GroupTable dihedral4();  // order 8
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);

 private:
  int n_ = 0;
  int identity_ = -1;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

}  // namespace qg

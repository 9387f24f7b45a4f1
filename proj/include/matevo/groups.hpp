#pragma once

#include <string>
#include <vector>

#include "matevo/errors.hpp"

namespace matevo::groupoid {

/// Finite group given by its composition table. Element 0 is the identity.
struct FiniteGroup {
  std::string name;
  int order = 1;
  std::vector<int> mul;  // order x order, mul[a*order+b] = a*b
  std::vector<int> inv;
  std::vector<std::string> element_names;

  int op(int a, int b) const { return mul[a * order + b]; }

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric3();
  static FiniteGroup dihedral4();   // order 8
  static FiniteGroup quaternion8();
  static FiniteGroup klein4();
  static FiniteGroup direct_product(const FiniteGroup& a,
                                    const FiniteGroup& b);

  /// All groups of order <= 8 shipped with the toolkit (one per
  /// isomorphism class that the random groupoid generator draws from).
  static const std::vector<FiniteGroup>& library();
};

/// Consistency check used by tests: associativity, identity, inverses.
bool is_valid_group(const FiniteGroup& g);

/// Closure of a generating set inside g; sorted element ids.
std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& generators);

/// Exhaustive conjugation test for a subgroup given by sorted element ids.
bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& sub);

}  // namespace matevo::groupoid

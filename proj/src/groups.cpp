#include "matevo/groups.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace matevo::groupoid {

namespace {

void finish_tables(FiniteGroup& g) {
  g.inv.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.op(a, b) == 0) g.inv[a] = b;
  if (g.element_names.empty()) {
    g.element_names.resize(g.order);
    for (int i = 0; i < g.order; ++i)
      g.element_names[i] = i == 0 ? "e" : "g" + std::to_string(i);
  }
}

using Perm = std::vector<int>;

Perm perm_compose(const Perm& a, const Perm& b) {
  // (a*b)(x) = a(b(x))
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

/// Group generated by permutations; elements sorted lexicographically so the
/// identity comes first.
FiniteGroup group_from_permutations(const std::string& name, int points,
                                    const std::vector<Perm>& generators) {
  std::set<Perm> elems;
  Perm id(points);
  for (int i = 0; i < points; ++i) id[i] = i;
  elems.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(elems.begin(), elems.end());
    for (const Perm& a : snapshot)
      for (const Perm& g : generators)
        if (elems.insert(perm_compose(a, g)).second) grew = true;
  }
  std::vector<Perm> sorted(elems.begin(), elems.end());
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);

  FiniteGroup g;
  g.name = name;
  g.order = static_cast<int>(sorted.size());
  g.mul.assign(g.order * g.order, -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      g.mul[a * g.order + b] = index.at(perm_compose(sorted[a], sorted[b]));
  finish_tables(g);
  return g;
}

}  // namespace

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ConfigError("cyclic group order must be >= 1");
  FiniteGroup g;
  g.name = "C" + std::to_string(n);
  g.order = n;
  g.mul.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[a * n + b] = (a + b) % n;
  g.element_names.resize(n);
  for (int i = 0; i < n; ++i)
    g.element_names[i] = i == 0 ? "e" : "r" + std::to_string(i);
  finish_tables(g);
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  return group_from_permutations("S3", 3, {{1, 0, 2}, {0, 2, 1}});
}

FiniteGroup FiniteGroup::dihedral4() {
  // rotation v -> v+1 and reflection v -> -v on the square's vertices
  return group_from_permutations("D4", 4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
}

FiniteGroup FiniteGroup::quaternion8() {
  // elements (s, a): sign s in {+,-} and axis a in {1, i, j, k};
  // id = 2*a + (s < 0 ? 1 : 0)
  struct Q {
    int sign;
    int axis;
  };
  auto mul = [](Q p, Q q) -> Q {
    static const int axis_table[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_table[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return {p.sign * q.sign * sign_table[p.axis][q.axis],
            axis_table[p.axis][q.axis]};
  };
  FiniteGroup g;
  g.name = "Q8";
  g.order = 8;
  g.mul.assign(64, -1);
  auto decode = [](int id) -> Q { return {id % 2 == 0 ? 1 : -1, id / 2}; };
  auto encode = [](Q q) { return 2 * q.axis + (q.sign < 0 ? 1 : 0); };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      g.mul[a * 8 + b] = encode(mul(decode(a), decode(b)));
  g.element_names = {"e", "m1", "i", "mi", "j", "mj", "k", "mk"};
  finish_tables(g);
  return g;
}

FiniteGroup FiniteGroup::klein4() {
  FiniteGroup g = direct_product(cyclic(2), cyclic(2));
  g.name = "V4";
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  FiniteGroup g;
  g.name = a.name + "x" + b.name;
  g.order = a.order * b.order;
  g.mul.assign(g.order * g.order, -1);
  auto encode = [&](int ia, int ib) { return ia * b.order + ib; };
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j) {
      const int ia = i / b.order, ib = i % b.order;
      const int ja = j / b.order, jb = j % b.order;
      g.mul[i * g.order + j] = encode(a.op(ia, ja), b.op(ib, jb));
    }
  finish_tables(g);
  return g;
}

const std::vector<FiniteGroup>& FiniteGroup::library() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> out;
    for (int n = 1; n <= 8; ++n) out.push_back(cyclic(n));
    out.push_back(klein4());
    out.push_back(symmetric3());
    out.push_back(dihedral4());
    out.push_back(quaternion8());
    out.push_back(direct_product(cyclic(2), cyclic(4)));
    out.push_back(direct_product(cyclic(2), klein4()));
    return out;
  }();
  return groups;
}

bool is_valid_group(const FiniteGroup& g) {
  const int n = g.order;
  if (static_cast<int>(g.mul.size()) != n * n) return false;
  for (int v : g.mul)
    if (v < 0 || v >= n) return false;
  for (int a = 0; a < n; ++a)
    if (g.op(0, a) != a || g.op(a, 0) != a) return false;
  for (int a = 0; a < n; ++a) {
    if (g.inv[a] < 0) return false;
    if (g.op(g.inv[a], a) != 0 || g.op(a, g.inv[a]) != 0) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) return false;
  return true;
}

std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& generators) {
  std::vector<char> in(g.order, 0);
  in[0] = 1;
  for (int e : generators) in[e] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < g.order; ++a) {
      if (!in[a]) continue;
      if (!in[g.inv[a]]) {
        in[g.inv[a]] = 1;
        grew = true;
      }
      for (int b = 0; b < g.order; ++b) {
        if (!in[b]) continue;
        const int c = g.op(a, b);
        if (!in[c]) {
          in[c] = 1;
          grew = true;
        }
      }
    }
  }
  std::vector<int> out;
  for (int a = 0; a < g.order; ++a)
    if (in[a]) out.push_back(a);
  return out;
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& sub) {
  std::vector<char> in(g.order, 0);
  for (int e : sub) in[e] = 1;
  for (int a = 0; a < g.order; ++a)
    for (int h : sub)
      if (!in[g.op(g.op(a, h), g.inv[a])]) return false;
  return true;
}

}  // namespace matevo::groupoid

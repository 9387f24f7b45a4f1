#include "matevo/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

namespace matevo::groupoid {

namespace {

constexpr int kMaxArrows = 4096;  // desk scale; the compose table is dense

std::string tuple_str(const FiniteGroupoid& g,
                      std::initializer_list<ArrowId> arrows) {
  std::string out = "(";
  bool first = true;
  for (ArrowId a : arrows) {
    if (!first) out += ", ";
    out += a == kUndefined ? std::string("<undefined>") : g.arrow_name(a);
    first = false;
  }
  return out + ")";
}

}  // namespace

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> object_names,
                               std::vector<std::string> arrow_names,
                               std::vector<Arrow> arrows,
                               std::vector<ArrowId> identity,
                               std::vector<ArrowId> inverse,
                               std::vector<ArrowId> compose_table)
    : object_names_(std::move(object_names)),
      arrow_names_(std::move(arrow_names)),
      arrows_(std::move(arrows)),
      identity_(std::move(identity)),
      inverse_(std::move(inverse)),
      compose_(std::move(compose_table)) {
  const int n = object_count();
  const int a = arrow_count();
  if (a > kMaxArrows)
    throw FormatError("groupoid too large: " + std::to_string(a) +
                      " arrows (limit " + std::to_string(kMaxArrows) + ")");
  if (static_cast<int>(arrow_names_.size()) != a)
    throw FormatError("arrow name count does not match arrow count");
  if (static_cast<int>(identity_.size()) != n)
    throw FormatError("identity table must have one entry per object");
  if (static_cast<int>(inverse_.size()) != a)
    throw FormatError("inverse table must have one entry per arrow");
  if (compose_.size() != static_cast<std::size_t>(a) * a)
    throw FormatError("compose table must be arrow_count^2");
  for (const Arrow& ar : arrows_)
    if (ar.src < 0 || ar.src >= n || ar.tgt < 0 || ar.tgt >= n)
      throw FormatError("arrow endpoint out of range");
  for (ArrowId e : identity_)
    if (e < 0 || e >= a) throw FormatError("identity arrow id out of range");
  for (ArrowId i : inverse_)
    if (i < 0 || i >= a) throw FormatError("inverse arrow id out of range");
  for (ArrowId c : compose_)
    if (c != kUndefined && (c < 0 || c >= a))
      throw FormatError("compose table entry out of range");
  {
    std::set<std::string> seen(object_names_.begin(), object_names_.end());
    if (static_cast<int>(seen.size()) != n)
      throw FormatError("duplicate object names");
  }
  {
    std::set<std::string> seen(arrow_names_.begin(), arrow_names_.end());
    if (static_cast<int>(seen.size()) != a)
      throw FormatError("duplicate arrow names");
  }
  by_source_.assign(n, {});
  by_target_.assign(n, {});
  for (ArrowId g = 0; g < a; ++g) {
    by_source_[arrows_[g].src].push_back(g);
    by_target_[arrows_[g].tgt].push_back(g);
  }
}

ObjectId FiniteGroupoid::object_index(const std::string& name) const {
  for (int i = 0; i < object_count(); ++i)
    if (object_names_[i] == name) return i;
  return kUndefined;
}

ArrowId FiniteGroupoid::arrow_index(const std::string& name) const {
  for (int i = 0; i < arrow_count(); ++i)
    if (arrow_names_[i] == name) return i;
  return kUndefined;
}

// ---------------------------------------------------------------------------
// Axioms
// ---------------------------------------------------------------------------

ValidationResult validate_groupoid(const FiniteGroupoid& g) {
  ValidationResult result;
  const int a = g.arrow_count();
  auto report = [&result](const std::string& family,
                          const std::string& detail) {
    for (const Violation& v : result.violations)
      if (v.family == family) return;  // first violating tuple per family
    result.violations.push_back({family, detail});
  };

  // compose defined exactly when source(g) = target(h)
  for (ArrowId p = 0; p < a; ++p)
    for (ArrowId q = 0; q < a; ++q) {
      const bool composable = g.source(p) == g.target(q);
      const bool defined = g.compose(p, q) != kUndefined;
      if (composable != defined) {
        report("compose-domain",
               tuple_str(g, {p, q}) + (defined ? " composed but ends do not meet"
                                               : " composable but undefined"));
      }
    }

  for (ArrowId p = 0; p < a; ++p)
    for (ArrowId q = 0; q < a; ++q) {
      const ArrowId pq = g.compose(p, q);
      if (pq == kUndefined) continue;
      if (g.source(pq) != g.source(q) || g.target(pq) != g.target(p))
        report("compose-endpoints",
               tuple_str(g, {p, q, pq}) + " violates the endpoint rule");
    }

  for (ObjectId x = 0; x < g.object_count(); ++x) {
    const ArrowId e = g.identity(x);
    if (g.source(e) != x || g.target(e) != x) {
      report("identity", "identity of object " + g.object_name(x) +
                             " does not start and end there");
    }
  }
  for (ArrowId p = 0; p < a; ++p) {
    const ArrowId right = g.compose(p, g.identity(g.source(p)));
    const ArrowId left = g.compose(g.identity(g.target(p)), p);
    if (right != p || left != p)
      report("identity", tuple_str(g, {p}) + " is not fixed by the identities");
  }

  for (ArrowId p = 0; p < a; ++p) {
    const ArrowId ip = g.inverse(p);
    const ArrowId left = g.compose(ip, p);
    const ArrowId right = g.compose(p, ip);
    if (left != g.identity(g.source(p)) || right != g.identity(g.target(p)))
      report("inverse", tuple_str(g, {p, ip}) + " fails the inverse law");
  }

  // associativity over composable triples; stop at the first bad one
  bool associative = true;
  for (ArrowId q = 0; q < a && associative; ++q) {
    for (ArrowId p : g.arrows_by_source(g.target(q))) {
      if (!associative) break;
      for (ArrowId r : g.arrows_by_target(g.source(q))) {
        const ArrowId pq = g.compose(p, q);
        const ArrowId qr = g.compose(q, r);
        if (pq == kUndefined || qr == kUndefined) continue;
        if (g.compose(pq, r) != g.compose(p, qr)) {
          report("associativity",
                 tuple_str(g, {p, q, r}) + " composes inconsistently");
          associative = false;
          break;
        }
      }
    }
  }

  return result;
}

ValidationResult validate_subgroupoid(const FiniteGroupoid& g,
                                      const FiniteSubgroupoid& h) {
  ValidationResult result;
  auto report = [&result](const std::string& family,
                          const std::string& detail) {
    for (const Violation& v : result.violations)
      if (v.family == family) return;
    result.violations.push_back({family, detail});
  };

  std::vector<char> in_base(g.object_count(), 0);
  for (ObjectId x : h.base) {
    if (x < 0 || x >= g.object_count()) {
      report("structure", "base object id out of range");
      return result;
    }
    in_base[x] = 1;
  }
  std::vector<char> in_arrows(g.arrow_count(), 0);
  for (ArrowId p : h.arrows) {
    if (p < 0 || p >= g.arrow_count()) {
      report("structure", "arrow id out of range");
      return result;
    }
    in_arrows[p] = 1;
  }

  for (ArrowId p : h.arrows)
    if (!in_base[g.source(p)] || !in_base[g.target(p)])
      report("structure",
             tuple_str(g, {p}) + " has an endpoint outside the base");
  for (ObjectId x : h.base)
    if (!in_arrows[g.identity(x)])
      report("identity",
             "identity of " + g.object_name(x) + " missing from the arrows");
  for (ArrowId p : h.arrows)
    if (!in_arrows[g.inverse(p)])
      report("inverse", tuple_str(g, {p}) + " lacks its inverse");
  for (ArrowId p : h.arrows)
    for (ArrowId q : h.arrows) {
      const ArrowId pq = g.compose(p, q);
      if (pq != kUndefined && !in_arrows[pq])
        report("closure",
               tuple_str(g, {p, q, pq}) + " escapes the arrow set");
    }
  return result;
}

// ---------------------------------------------------------------------------
// Orbits, isotropy, transitivity
// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<ObjectId>> orbits(const FiniteGroupoid& g) {
  UnionFind uf(g.object_count());
  for (ArrowId p = 0; p < g.arrow_count(); ++p)
    uf.unite(g.source(p), g.target(p));
  std::vector<std::vector<ObjectId>> blocks;
  std::unordered_map<int, int> root_to_block;
  for (ObjectId x = 0; x < g.object_count(); ++x) {
    const int root = uf.find(x);
    auto it = root_to_block.find(root);
    if (it == root_to_block.end()) {
      root_to_block.emplace(root, static_cast<int>(blocks.size()));
      blocks.push_back({x});
    } else {
      blocks[it->second].push_back(x);
    }
  }
  return blocks;
}

std::vector<ArrowId> isotropy_group(const FiniteGroupoid& g, ObjectId x) {
  if (x < 0 || x >= g.object_count())
    throw ConfigError("unknown object id " + std::to_string(x));
  std::vector<ArrowId> out;
  for (ArrowId p : g.arrows_by_source(x))
    if (g.target(p) == x) out.push_back(p);
  return out;
}

bool is_transitive(const FiniteGroupoid& g) {
  return orbits(g).size() == 1;
}

std::vector<ArrowId> sub_isotropy(const FiniteGroupoid& g,
                                  const FiniteSubgroupoid& h, ObjectId x) {
  std::vector<ArrowId> out;
  for (ArrowId p : h.arrows)
    if (g.source(p) == x && g.target(p) == x) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Normality and the normalizoid
// ---------------------------------------------------------------------------

bool is_normal_subgroupoid(const FiniteGroupoid& g, const FiniteSubgroupoid& h,
                           ConjugationWitness* witness) {
  std::vector<char> in_h(g.arrow_count(), 0);
  for (ArrowId p : h.arrows) in_h[p] = 1;

  std::vector<std::vector<ArrowId>> iso(g.object_count());
  for (ArrowId p : h.arrows)
    if (g.source(p) == g.target(p)) iso[g.source(p)].push_back(p);

  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    for (ArrowId p : iso[g.source(a)]) {
      const ArrowId conj = g.compose(g.compose(a, p), g.inverse(a));
      if (conj == kUndefined || !in_h[conj]) {
        if (witness != nullptr) *witness = {a, p, conj};
        return false;
      }
    }
  }
  return true;
}

FiniteSubgroupoid normalizoid(const FiniteGroupoid& g,
                              const FiniteSubgroupoid& h) {
  if (static_cast<int>(h.base.size()) != g.object_count())
    throw ConfigError("normalizoid requires the subgroupoid base to be the "
                      "full object set");

  std::vector<char> in_h(g.arrow_count(), 0);
  for (ArrowId p : h.arrows) in_h[p] = 1;
  std::vector<std::vector<ArrowId>> iso(g.object_count());
  for (ArrowId p : h.arrows)
    if (g.source(p) == g.target(p)) iso[g.source(p)].push_back(p);

  FiniteSubgroupoid out;
  out.base.resize(g.object_count());
  std::iota(out.base.begin(), out.base.end(), 0);

  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    const auto& src_iso = iso[g.source(a)];
    const auto& tgt_iso = iso[g.target(a)];
    if (src_iso.size() != tgt_iso.size()) continue;
    bool inside = true;
    for (ArrowId p : src_iso) {
      const ArrowId conj = g.compose(g.compose(a, p), g.inverse(a));
      if (conj == kUndefined || !in_h[conj]) {
        inside = false;
        break;
      }
    }
    // conjugation is injective, so equal sizes plus containment give the
    // equality of isotropy groups
    if (inside) out.arrows.push_back(a);
  }
  return out;
}

bool all_isotropy_normal(const FiniteGroupoid& g, const FiniteSubgroupoid& h) {
  std::vector<char> in_h(g.arrow_count(), 0);
  for (ArrowId p : h.arrows) in_h[p] = 1;
  for (ObjectId x : h.base) {
    const std::vector<ArrowId> gx = isotropy_group(g, x);
    for (ArrowId a : gx) {
      for (ArrowId p : gx) {
        if (!in_h[p] || g.source(p) != x || g.target(p) != x) continue;
        const ArrowId conj = g.compose(g.compose(a, p), g.inverse(a));
        if (conj == kUndefined || !in_h[conj]) return false;
      }
    }
  }
  return true;
}

std::vector<ArrowId> isotropy_normalizer(const FiniteGroupoid& g,
                                         const FiniteSubgroupoid& h,
                                         ObjectId x) {
  std::vector<char> in_h(g.arrow_count(), 0);
  for (ArrowId p : h.arrows) in_h[p] = 1;
  const std::vector<ArrowId> hx = sub_isotropy(g, h, x);
  std::vector<ArrowId> out;
  for (ArrowId a : isotropy_group(g, x)) {
    bool keeps = true;
    for (ArrowId p : hx) {
      const ArrowId conj = g.compose(g.compose(a, p), g.inverse(a));
      if (conj == kUndefined || !in_h[conj]) {
        keeps = false;
        break;
      }
    }
    if (keeps) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Extraction
// ---------------------------------------------------------------------------

ExtractedGroupoid extract_groupoid(const FiniteGroupoid& parent,
                                   const FiniteSubgroupoid& sub) {
  ValidationResult valid = validate_subgroupoid(parent, sub);
  if (!valid.ok())
    throw ConfigError("extract_groupoid on an invalid subgroupoid: " +
                      valid.violations.front().family);

  ExtractedGroupoid out;
  out.object_to_parent = sub.base;
  out.to_parent = sub.arrows;
  out.from_parent.assign(parent.arrow_count(), kUndefined);
  for (std::size_t i = 0; i < sub.arrows.size(); ++i)
    out.from_parent[sub.arrows[i]] = static_cast<ArrowId>(i);

  std::vector<ObjectId> object_from_parent(parent.object_count(), kUndefined);
  for (std::size_t i = 0; i < sub.base.size(); ++i)
    object_from_parent[sub.base[i]] = static_cast<ObjectId>(i);

  const int n = static_cast<int>(sub.base.size());
  const int a = static_cast<int>(sub.arrows.size());
  std::vector<std::string> object_names(n), arrow_names(a);
  std::vector<Arrow> arrows(a);
  std::vector<ArrowId> identity(n), inverse(a);
  std::vector<ArrowId> compose(static_cast<std::size_t>(a) * a, kUndefined);

  for (int i = 0; i < n; ++i) {
    object_names[i] = parent.object_name(sub.base[i]);
    identity[i] = out.from_parent[parent.identity(sub.base[i])];
  }
  for (int i = 0; i < a; ++i) {
    const ArrowId p = sub.arrows[i];
    arrow_names[i] = parent.arrow_name(p);
    arrows[i] = {object_from_parent[parent.source(p)],
                 object_from_parent[parent.target(p)]};
    inverse[i] = out.from_parent[parent.inverse(p)];
  }
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) {
      const ArrowId pq = parent.compose(sub.arrows[i], sub.arrows[j]);
      if (pq != kUndefined)
        compose[static_cast<std::size_t>(i) * a + j] = out.from_parent[pq];
    }

  out.groupoid = FiniteGroupoid(std::move(object_names), std::move(arrow_names),
                                std::move(arrows), std::move(identity),
                                std::move(inverse), std::move(compose));
  return out;
}

FiniteSubgroupoid map_into_extracted(const ExtractedGroupoid& extracted,
                                     const FiniteSubgroupoid& sub) {
  std::unordered_map<ObjectId, ObjectId> obj_map;
  for (std::size_t i = 0; i < extracted.object_to_parent.size(); ++i)
    obj_map[extracted.object_to_parent[i]] = static_cast<ObjectId>(i);

  FiniteSubgroupoid out;
  for (ObjectId x : sub.base) {
    auto it = obj_map.find(x);
    if (it == obj_map.end())
      throw ConfigError("subgroupoid base object missing from extraction");
    out.base.push_back(it->second);
  }
  for (ArrowId p : sub.arrows) {
    const ArrowId q = extracted.from_parent[p];
    if (q == kUndefined)
      throw ConfigError("subgroupoid arrow missing from extraction");
    out.arrows.push_back(q);
  }
  std::sort(out.base.begin(), out.base.end());
  std::sort(out.arrows.begin(), out.arrows.end());
  return out;
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

FiniteGroupoid pair_groupoid(const std::vector<std::string>& objects) {
  return trivial_groupoid(objects, FiniteGroup::trivial());
}

FiniteGroupoid trivial_groupoid(const std::vector<std::string>& objects,
                                const FiniteGroup& group) {
  const int n = static_cast<int>(objects.size());
  const int m = group.order;
  const int a = n * n * m;
  std::vector<std::string> arrow_names(a);
  std::vector<Arrow> arrows(a);
  std::vector<ArrowId> identity(n), inverse(a);
  std::vector<ArrowId> compose(static_cast<std::size_t>(a) * a, kUndefined);

  for (int src = 0; src < n; ++src)
    for (int tgt = 0; tgt < n; ++tgt)
      for (int e = 0; e < m; ++e) {
        const ArrowId id = trivial_arrow_id(n, m, src, tgt, e);
        arrows[id] = {src, tgt};
        if (m == 1) {
          arrow_names[id] = objects[src] + ">" + objects[tgt];
        } else {
          arrow_names[id] =
              objects[src] + ">" + objects[tgt] + ":" + group.element_names[e];
        }
        inverse[id] = trivial_arrow_id(n, m, tgt, src, group.inv[e]);
      }
  for (int x = 0; x < n; ++x) identity[x] = trivial_arrow_id(n, m, x, x, 0);

  // (t,y,g) * (x,t,h) = (x,y,g*h)
  for (int src = 0; src < n; ++src)
    for (int mid = 0; mid < n; ++mid)
      for (int tgt = 0; tgt < n; ++tgt)
        for (int eg = 0; eg < m; ++eg)
          for (int eh = 0; eh < m; ++eh) {
            const ArrowId p = trivial_arrow_id(n, m, mid, tgt, eg);
            const ArrowId q = trivial_arrow_id(n, m, src, mid, eh);
            compose[static_cast<std::size_t>(p) * a + q] =
                trivial_arrow_id(n, m, src, tgt, group.op(eg, eh));
          }

  return FiniteGroupoid(objects, std::move(arrow_names), std::move(arrows),
                        std::move(identity), std::move(inverse),
                        std::move(compose));
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a,
                              const FiniteGroupoid& b) {
  const int na = a.object_count(), nb = b.object_count();
  const int aa = a.arrow_count(), ab = b.arrow_count();
  const int n = na + nb, m = aa + ab;

  std::vector<std::string> object_names, arrow_names;
  object_names.reserve(n);
  arrow_names.reserve(m);
  std::vector<Arrow> arrows(m);
  std::vector<ArrowId> identity(n), inverse(m);
  std::vector<ArrowId> compose(static_cast<std::size_t>(m) * m, kUndefined);

  for (int i = 0; i < na; ++i) object_names.push_back(a.object_name(i));
  for (int i = 0; i < nb; ++i) object_names.push_back(b.object_name(i));
  for (int i = 0; i < aa; ++i) {
    arrow_names.push_back(a.arrow_name(i));
    arrows[i] = {a.source(i), a.target(i)};
    inverse[i] = a.inverse(i);
  }
  for (int i = 0; i < ab; ++i) {
    arrow_names.push_back(b.arrow_name(i));
    arrows[aa + i] = {na + b.source(i), na + b.target(i)};
    inverse[aa + i] = aa + b.inverse(i);
  }
  for (int i = 0; i < na; ++i) identity[i] = a.identity(i);
  for (int i = 0; i < nb; ++i) identity[na + i] = aa + b.identity(i);
  for (int i = 0; i < aa; ++i)
    for (int j = 0; j < aa; ++j) {
      const ArrowId c = a.compose(i, j);
      if (c != kUndefined) compose[static_cast<std::size_t>(i) * m + j] = c;
    }
  for (int i = 0; i < ab; ++i)
    for (int j = 0; j < ab; ++j) {
      const ArrowId c = b.compose(i, j);
      if (c != kUndefined)
        compose[static_cast<std::size_t>(aa + i) * m + (aa + j)] = aa + c;
    }

  return FiniteGroupoid(std::move(object_names), std::move(arrow_names),
                        std::move(arrows), std::move(identity),
                        std::move(inverse), std::move(compose));
}

FiniteSubgroupoid closure(const FiniteGroupoid& g,
                          const std::vector<ArrowId>& seeds) {
  std::vector<char> in(g.arrow_count(), 0);
  for (ObjectId x = 0; x < g.object_count(); ++x) in[g.identity(x)] = 1;
  for (ArrowId p : seeds) {
    if (p < 0 || p >= g.arrow_count())
      throw ConfigError("closure seed arrow out of range");
    in[p] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (ArrowId p = 0; p < g.arrow_count(); ++p) {
      if (!in[p]) continue;
      if (!in[g.inverse(p)]) {
        in[g.inverse(p)] = 1;
        grew = true;
      }
      for (ArrowId q = 0; q < g.arrow_count(); ++q) {
        if (!in[q]) continue;
        const ArrowId pq = g.compose(p, q);
        if (pq != kUndefined && !in[pq]) {
          in[pq] = 1;
          grew = true;
        }
      }
    }
  }
  FiniteSubgroupoid out;
  out.base.resize(g.object_count());
  std::iota(out.base.begin(), out.base.end(), 0);
  for (ArrowId p = 0; p < g.arrow_count(); ++p)
    if (in[p]) out.arrows.push_back(p);
  return out;
}

FiniteSubgroupoid full_subgroupoid(const FiniteGroupoid& g) {
  FiniteSubgroupoid out;
  out.base.resize(g.object_count());
  std::iota(out.base.begin(), out.base.end(), 0);
  out.arrows.resize(g.arrow_count());
  std::iota(out.arrows.begin(), out.arrows.end(), 0);
  return out;
}

// ---------------------------------------------------------------------------
// Random pairs and the counterexample
// ---------------------------------------------------------------------------

RandomPair random_transitive_pair(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // weight toward the non-abelian groups; abelian ones make every isotropy
  // subgroup normal and starve the negative branch of the criterion
  static const std::vector<FiniteGroup> pool = [] {
    std::vector<FiniteGroup> out = FiniteGroup::library();
    for (int copies = 0; copies < 4; ++copies) {
      out.push_back(FiniteGroup::symmetric3());
      out.push_back(FiniteGroup::dihedral4());
    }
    return out;
  }();
  const FiniteGroup& group = pool[rng() % pool.size()];
  const int n = 1 + static_cast<int>(rng() % 5);

  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "o" + std::to_string(i);
  FiniteGroupoid g = trivial_groupoid(names, group);

  std::vector<ArrowId> seeds;
  for (int i = 0; i + 1 < n; ++i) {
    const int e = static_cast<int>(rng() % group.order);
    seeds.push_back(trivial_arrow_id(n, group.order, i, i + 1, e));
  }
  const int extra = static_cast<int>(rng() % 3);
  for (int i = 0; i < extra; ++i) {
    const int src = static_cast<int>(rng() % n);
    const int tgt = static_cast<int>(rng() % n);
    const int e = static_cast<int>(rng() % group.order);
    seeds.push_back(trivial_arrow_id(n, group.order, src, tgt, e));
  }

  RandomPair out;
  out.sub = closure(g, seeds);
  out.groupoid = std::move(g);
  out.description = group.name + " over " + std::to_string(n) + " objects, " +
                    std::to_string(out.sub.arrows.size()) + " sub-arrows";
  return out;
}

RandomPair s3_counterexample() {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  RandomPair out;
  out.groupoid = trivial_groupoid({"x", "y"}, s3);
  out.sub.base = {0, 1};
  for (int e = 0; e < s3.order; ++e)
    out.sub.arrows.push_back(trivial_arrow_id(2, s3.order, 0, 0, e));
  out.sub.arrows.push_back(trivial_arrow_id(2, s3.order, 1, 1, 0));
  std::sort(out.sub.arrows.begin(), out.sub.arrows.end());
  out.description = "S3 at x, trivial at y, no cross arrows";
  return out;
}

}  // namespace matevo::groupoid

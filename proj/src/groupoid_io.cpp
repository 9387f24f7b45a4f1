#include "matevo/groupoid_io.hpp"

#include <algorithm>
#include <fstream>

namespace matevo::groupoid {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << content;
}

}  // namespace

ordered_json groupoid_to_json(const FiniteGroupoid& g) {
  ordered_json j;
  j["objects"] = ordered_json::array();
  for (int x = 0; x < g.object_count(); ++x)
    j["objects"].push_back(g.object_name(x));

  j["arrows"] = ordered_json::array();
  for (int p = 0; p < g.arrow_count(); ++p)
    j["arrows"].push_back({{"id", g.arrow_name(p)},
                           {"src", g.object_name(g.source(p))},
                           {"tgt", g.object_name(g.target(p))}});

  j["compose"] = ordered_json::array();
  for (int p = 0; p < g.arrow_count(); ++p)
    for (int q = 0; q < g.arrow_count(); ++q) {
      const ArrowId pq = g.compose(p, q);
      if (pq != kUndefined)
        j["compose"].push_back(
            {g.arrow_name(p), g.arrow_name(q), g.arrow_name(pq)});
    }

  ordered_json identity = ordered_json::object();
  for (int x = 0; x < g.object_count(); ++x)
    identity[g.object_name(x)] = g.arrow_name(g.identity(x));
  j["identity"] = std::move(identity);

  ordered_json inverse = ordered_json::object();
  for (int p = 0; p < g.arrow_count(); ++p)
    inverse[g.arrow_name(p)] = g.arrow_name(g.inverse(p));
  j["inverse"] = std::move(inverse);
  return j;
}

FiniteGroupoid groupoid_from_json(const json& j) {
  std::vector<std::string> object_names;
  for (const json& o : require(j, "objects")) {
    if (!o.is_string()) throw FormatError("object names must be strings");
    object_names.push_back(o.get<std::string>());
  }
  auto object_id = [&object_names](const std::string& name) {
    auto it = std::find(object_names.begin(), object_names.end(), name);
    if (it == object_names.end())
      throw FormatError("unknown object '" + name + "'");
    return static_cast<ObjectId>(it - object_names.begin());
  };

  std::vector<std::string> arrow_names;
  std::vector<Arrow> arrows;
  for (const json& a : require(j, "arrows")) {
    arrow_names.push_back(require(a, "id").get<std::string>());
    arrows.push_back({object_id(require(a, "src").get<std::string>()),
                      object_id(require(a, "tgt").get<std::string>())});
  }
  auto arrow_id = [&arrow_names](const std::string& name) {
    auto it = std::find(arrow_names.begin(), arrow_names.end(), name);
    if (it == arrow_names.end())
      throw FormatError("unknown arrow '" + name + "'");
    return static_cast<ArrowId>(it - arrow_names.begin());
  };

  const int a = static_cast<int>(arrows.size());
  std::vector<ArrowId> compose(static_cast<std::size_t>(a) * a, kUndefined);
  for (const json& triple : require(j, "compose")) {
    if (!triple.is_array() || triple.size() != 3)
      throw FormatError("compose entries must be [g, h, gh] triples");
    const ArrowId p = arrow_id(triple[0].get<std::string>());
    const ArrowId q = arrow_id(triple[1].get<std::string>());
    const ArrowId pq = arrow_id(triple[2].get<std::string>());
    compose[static_cast<std::size_t>(p) * a + q] = pq;
  }

  std::vector<ArrowId> identity(object_names.size(), kUndefined);
  for (const auto& [name, value] : require(j, "identity").items())
    identity[object_id(name)] = arrow_id(value.get<std::string>());
  for (std::size_t x = 0; x < identity.size(); ++x)
    if (identity[x] == kUndefined)
      throw FormatError("missing identity for object '" + object_names[x] +
                        "'");

  std::vector<ArrowId> inverse(arrows.size(), kUndefined);
  for (const auto& [name, value] : require(j, "inverse").items())
    inverse[arrow_id(name)] = arrow_id(value.get<std::string>());
  for (std::size_t p = 0; p < inverse.size(); ++p)
    if (inverse[p] == kUndefined)
      throw FormatError("missing inverse for arrow '" + arrow_names[p] + "'");

  return FiniteGroupoid(std::move(object_names), std::move(arrow_names),
                        std::move(arrows), std::move(identity),
                        std::move(inverse), std::move(compose));
}

ordered_json subgroupoid_to_json(const FiniteGroupoid& parent,
                                 const FiniteSubgroupoid& sub) {
  ordered_json j;
  j["base"] = ordered_json::array();
  for (ObjectId x : sub.base) j["base"].push_back(parent.object_name(x));
  j["arrows"] = ordered_json::array();
  for (ArrowId p : sub.arrows) j["arrows"].push_back(parent.arrow_name(p));
  return j;
}

FiniteSubgroupoid subgroupoid_from_json(const FiniteGroupoid& parent,
                                        const json& j) {
  FiniteSubgroupoid sub;
  for (const json& o : require(j, "base")) {
    const ObjectId x = parent.object_index(o.get<std::string>());
    if (x == kUndefined)
      throw FormatError("unknown object '" + o.get<std::string>() +
                        "' in subgroupoid base");
    sub.base.push_back(x);
  }
  for (const json& aj : require(j, "arrows")) {
    const ArrowId p = parent.arrow_index(aj.get<std::string>());
    if (p == kUndefined)
      throw FormatError("unknown arrow '" + aj.get<std::string>() +
                        "' in subgroupoid");
    sub.arrows.push_back(p);
  }
  std::sort(sub.base.begin(), sub.base.end());
  sub.base.erase(std::unique(sub.base.begin(), sub.base.end()), sub.base.end());
  std::sort(sub.arrows.begin(), sub.arrows.end());
  sub.arrows.erase(std::unique(sub.arrows.begin(), sub.arrows.end()),
                   sub.arrows.end());
  return sub;
}

FiniteGroupoid load_groupoid(const std::string& path) {
  return groupoid_from_json(load_json_file(path));
}

void save_groupoid(const FiniteGroupoid& g, const std::string& path) {
  write_file(path, groupoid_to_json(g).dump(2) + "\n");
}

FiniteSubgroupoid load_subgroupoid(const FiniteGroupoid& parent,
                                   const std::string& path) {
  return subgroupoid_from_json(parent, load_json_file(path));
}

void save_subgroupoid(const FiniteGroupoid& parent,
                      const FiniteSubgroupoid& sub, const std::string& path) {
  write_file(path, subgroupoid_to_json(parent, sub).dump(2) + "\n");
}

}  // namespace matevo::groupoid

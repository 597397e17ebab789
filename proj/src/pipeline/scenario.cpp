#include "canmap/pipeline/scenario.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef CANMAP_DEFAULT_DATA_DIR
#define CANMAP_DEFAULT_DATA_DIR "data"
#endif

namespace canmap::pipeline {
namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <class T>
T field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ConfigError(std::string("scenario config lacks '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("scenario config field '") + key + "': " + e.what());
  }
}

TowerPtr load_tower(const json& config) {
  std::vector<TowerStepText> steps;
  for (const auto& s : field<json>(config, "tower")) {
    const auto name = field<std::string>(s, "name");
    steps.push_back({name, s.value("variable", name), field<std::string>(s, "minpoly")});
  }
  try {
    return tower_from_text(steps);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("tower: ") + e.what());
  }
}

TowerRing load_ring(const json& config, const TowerPtr& tower) {
  try {
    return PolyRing<TowerField>::make(TowerField(tower), field<std::vector<std::string>>(config, "variables"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("ring: ") + e.what());
  }
}

// Statements of the listed files, in order.
std::vector<Statement> statements_of(const ScenarioSource& src, const std::vector<std::string>& names) {
  std::vector<Statement> out;
  for (const auto& n : names) {
    auto it = src.files.find(n);
    if (it == src.files.end()) throw ConfigError("scenario " + src.dir.string() + " does not list " + n);
    auto st = parse_statements(it->second);
    out.insert(out.end(), st.begin(), st.end());
  }
  return out;
}

TowerPoly parse_in(const std::string& text, const TowerRing& ring, const MacroTable<TowerField>& macros,
                   const std::string& what) {
  try {
    return parse_poly<TowerField>(text, ring, &macros);
  } catch (const std::exception& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

std::vector<std::string> all_files(const ScenarioSource& src) {
  std::vector<std::string> names;
  for (const auto& f : field<json>(src.config, "files")) names.push_back(field<std::string>(f, "path"));
  return names;
}

cover::GroupElem parse_sigma(const std::string& label) {
  cover::GroupElem g;
  if (label == "e") return g;
  for (char c : label) {
    if (c < 'a' || c >= static_cast<char>('a' + cover::kMaxRank)) throw ConfigError("bad group element '" + label + "'");
    g.bits ^= static_cast<std::uint8_t>(1u << (c - 'a'));
  }
  return g;
}

std::pair<int, int> as_pair(const json& j) {
  auto v = j.get<std::vector<int>>();
  if (v.size() != 2) throw ConfigError("expected a pair of trope ids");
  return {v[0], v[1]};
}

}  // namespace

bool Report::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

json Report::to_json() const {
  json j;
  j["scenario"] = scenario;
  j["mode"] = mode;
  j["primes"] = primes;
  j["pass"] = pass();
  j["wall_time_seconds"] = seconds;
  j["warnings"] = warnings;
  json cs = json::array();
  for (const auto& c : checks) {
    json e;
    e["id"] = c.id;
    e["description"] = c.description;
    e["expected"] = c.expected;
    e["observed"] = c.observed;
    e["pass"] = c.pass;
    e["mode"] = c.mode;
    e["primes"] = c.primes;
    e["probabilistic"] = c.probabilistic;
    e["wall_time_seconds"] = c.seconds;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  return j;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("CANMAP_DATA_DIR"); env && *env) return env;
  return CANMAP_DEFAULT_DATA_DIR;
}

ScenarioSource load_source(const std::filesystem::path& data_dir, const std::string& name) {
  ScenarioSource src;
  src.dir = data_dir / name;
  const auto config_path = src.dir / "scenario.json";
  if (!std::filesystem::exists(config_path)) {
    throw ConfigError("unknown scenario '" + name + "' (no " + config_path.string() + ")");
  }
  try {
    src.config = json::parse(read_file(config_path));
  } catch (const json::parse_error& e) {
    throw ConfigError(config_path.string() + ": " + e.what());
  }
  for (const auto& f : field<json>(src.config, "files")) {
    const auto path = field<std::string>(f, "path");
    const auto want = field<std::string>(f, "fnv1a64");
    std::string text = read_file(src.dir / path);
    const auto got = to_hex(fnv1a64(text));
    if (got != want) {
      throw ConfigError("checksum mismatch for " + (src.dir / path).string() + ": expected " + want + ", found " + got);
    }
    src.files.emplace(path, std::move(text));
  }
  return src;
}

std::vector<TowerPoint> X40Data::nodes() const {
  std::vector<TowerPoint> out;
  for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::size_t X40Data::node_count() const {
  std::size_t n = 0;
  for (const auto& s : sets) n += s.size();
  return n;
}

cover::BranchAssignment X40Data::assignment() const {
  cover::BranchAssignment b(3, node_count());
  std::size_t k = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets[i].size(); ++j) b.assign(k++, set_sigmas[i]);
  }
  return b;
}

void X40Data::drop_trope(int id) {
  for (std::size_t i = 0; i < trope_ids.size(); ++i) {
    if (trope_ids[i] == id) {
      trope_ids.erase(trope_ids.begin() + static_cast<std::ptrdiff_t>(i));
      tropes.erase(tropes.begin() + static_cast<std::ptrdiff_t>(i));
      return;
    }
  }
  throw std::out_of_range("no trope with id " + std::to_string(id));
}

X40Data load_x40(const ScenarioSource& src) {
  const json& c = src.config;
  X40Data d;
  d.tower = load_tower(c);
  d.ring = load_ring(c, d.tower);
  MacroTable<TowerField> macros;
  std::map<std::string, const Statement*> by_name;
  const auto statements = statements_of(src, all_files(src));
  for (const auto& st : statements) {
    by_name[st.name] = &st;
    if (st.kind == Statement::Kind::Expression) {
      macros.insert_or_assign(st.name, parse_in(st.expression, d.ring, macros, st.name));
    }
  }
  auto lookup = [&](const std::string& name, Statement::Kind kind) -> const Statement& {
    auto it = by_name.find(name);
    if (it == by_name.end() || it->second->kind != kind) throw ConfigError("data listing lacks '" + name + "'");
    return *it->second;
  };
  for (const auto& g : field<std::vector<std::string>>(c, "surface")) d.surface.push_back(parse_in(g, d.ring, macros, "surface"));
  d.codimension = field<std::size_t>(c, "codimension");
  for (const auto& s : field<json>(c, "node_sets")) {
    const auto name = field<std::string>(s, "name");
    d.set_names.push_back(name);
    d.set_sigmas.push_back(parse_sigma(field<std::string>(s, "sigma")));
    std::vector<TowerPoint> pts;
    for (const auto& coords : lookup(name, Statement::Kind::PointSet).points) {
      std::vector<TowerElement> v;
      for (const auto& e : coords) {
        try {
          v.push_back(parse_tower_element(e, d.tower));
        } catch (const std::exception& ex) {
          throw ConfigError(name + ": " + ex.what());
        }
      }
      if (v.size() != d.ring->nvars()) throw ConfigError(name + ": point with the wrong number of coordinates");
      pts.emplace_back(std::move(v));
    }
    d.sets.push_back(std::move(pts));
  }
  const auto& tr = lookup(field<std::string>(c, "tropes"), Statement::Kind::List);
  for (std::size_t i = 0; i < tr.items.size(); ++i) {
    d.trope_ids.push_back(static_cast<int>(i + 1));
    d.tropes.push_back(parse_in(tr.items[i], d.ring, macros, "trope " + std::to_string(i + 1)));
  }
  d.nodes_per_trope = field<std::size_t>(c, "nodes_per_trope");
  for (const auto& p : field<json>(c, "divisible_pairs")) d.divisible_pairs.push_back(as_pair(p));
  for (const auto& p : field<json>(c, "character_sum_pairs")) d.character_sum_pairs.push_back(as_pair(p));
  d.branch_tropes = as_pair(field<json>(c, "branch_tropes"));
  d.partition_sizes = field<std::vector<std::size_t>>(c, "partition_sizes");
  const json inv = field<json>(c, "base_invariants");
  d.chi_x = field<long>(inv, "chi");
  d.pg_x = field<long>(inv, "p_g");
  d.k2_x = field<long>(inv, "K2");
  d.checks = field<std::vector<std::string>>(c, "checks");
  return d;
}

Y48Data load_y48(const ScenarioSource& src) {
  const json& c = src.config;
  Y48Data d;
  d.tower = load_tower(c);
  d.ring = load_ring(c, d.tower);
  MacroTable<TowerField> macros;
  for (const auto& st : statements_of(src, all_files(src))) {
    if (st.kind != Statement::Kind::Expression) throw ConfigError("y48 listings hold polynomials only");
    macros.insert_or_assign(st.name, parse_in(st.expression, d.ring, macros, st.name));
  }
  const json schemes = field<json>(c, "schemes");
  auto gens = [&](const char* key) {
    std::vector<TowerPoly> out;
    for (const auto& g : field<std::vector<std::string>>(schemes, key)) out.push_back(parse_in(g, d.ring, macros, key));
    return out;
  };
  d.x_gens = gens("X");
  d.x40_gens = gens("X40");
  d.y48_gens = gens("Y48");
  d.codimension = field<std::size_t>(c, "codimension");
  d.checks = field<std::vector<std::string>>(c, "checks");
  return d;
}

Report run_scenario(const std::string& name, const RunOptions& opts, const std::filesystem::path& data_dir) {
  if (name == "x40") return run_x40(load_x40(load_source(data_dir, name)), opts);
  if (name == "y48") return run_y48(load_y48(load_source(data_dir, name)), opts);
  throw ConfigError("unknown scenario '" + name + "'");
}

}  // namespace canmap::pipeline

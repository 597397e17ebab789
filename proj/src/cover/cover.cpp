#include "canmap/cover/cover.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace canmap::cover {

bool pairing(Character chi, GroupElem sigma) { return std::popcount(unsigned(chi.bits & sigma.bits)) % 2 == 1; }

GroupElem operator*(GroupElem a, GroupElem b) { return {static_cast<std::uint8_t>(a.bits ^ b.bits)}; }

Character operator+(Character a, Character b) { return {static_cast<std::uint8_t>(a.bits ^ b.bits)}; }

std::string to_string(GroupElem g) {
  if (g.bits == 0) return "e";
  std::string s;
  for (unsigned i = 0; i < kMaxRank; ++i) {
    if (g.bits & (1u << i)) s += static_cast<char>('a' + i);
  }
  return s;
}

std::string to_string(Character chi, unsigned r) {
  std::string s;
  for (unsigned i = 0; i < r; ++i) s += (chi.bits & (1u << i)) ? '1' : '0';
  return s;
}

NodeSet::NodeSet(std::size_t universe, std::uint64_t bits) : universe_(universe), bits_(bits) {
  if (universe > kMaxNodes) throw std::invalid_argument("node universes are limited to 64 nodes");
  if (universe < kMaxNodes && (bits >> universe) != 0) throw std::invalid_argument("node outside the universe");
}

NodeSet NodeSet::all(std::size_t universe) {
  return NodeSet(universe, universe == kMaxNodes ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1);
}

NodeSet NodeSet::of(std::size_t universe, const std::vector<std::size_t>& nodes) {
  NodeSet s(universe);
  for (auto n : nodes) s.insert(n);
  return s;
}

std::size_t NodeSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

bool NodeSet::contains(std::size_t node) const { return node < universe_ && ((bits_ >> node) & 1u); }

void NodeSet::insert(std::size_t node) {
  if (node >= universe_) throw std::out_of_range("node " + std::to_string(node) + " outside the universe");
  bits_ |= std::uint64_t{1} << node;
}

std::vector<std::size_t> NodeSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

void NodeSet::check(const NodeSet& o) const {
  if (universe_ != o.universe_) throw std::invalid_argument("node sets over different universes");
}

NodeSet NodeSet::operator^(const NodeSet& o) const {
  check(o);
  return NodeSet(universe_, bits_ ^ o.bits_);
}

NodeSet NodeSet::operator|(const NodeSet& o) const {
  check(o);
  return NodeSet(universe_, bits_ | o.bits_);
}

NodeSet NodeSet::operator&(const NodeSet& o) const {
  check(o);
  return NodeSet(universe_, bits_ & o.bits_);
}

NodeSet NodeSet::complement() const { return all(universe_) ^ *this; }

BranchAssignment::BranchAssignment(unsigned r, std::size_t universe) : r_(r), sigma_(universe) {
  if (r > kMaxRank) throw std::invalid_argument("group rank is limited to 8");
  if (universe > kMaxNodes) throw std::invalid_argument("node universes are limited to 64 nodes");
}

BranchAssignment BranchAssignment::from_sets(unsigned r, std::size_t universe,
                                             const std::vector<std::pair<GroupElem, NodeSet>>& sets) {
  BranchAssignment b(r, universe);
  NodeSet used(universe);
  for (const auto& [sigma, nodes] : sets) {
    if (nodes.universe() != universe) throw std::invalid_argument("branch set over a different universe");
    if (!(used & nodes).empty()) throw std::invalid_argument("branch sets are not disjoint");
    used = used | nodes;
    for (auto n : nodes.members()) b.assign(n, sigma);
  }
  return b;
}

void BranchAssignment::assign(std::size_t node, GroupElem sigma) {
  if (r_ < kMaxRank && (sigma.bits >> r_) != 0) throw std::invalid_argument("group element outside (Z/2)^r");
  sigma_.at(node) = sigma;
}

NodeSet BranchAssignment::branch_set(GroupElem sigma) const {
  NodeSet s(sigma_.size());
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    if (sigma_[i] == sigma) s.insert(i);
  }
  return s;
}

NodeSet BranchAssignment::branched() const { return branch_set(GroupElem{}).complement(); }

bool BranchAssignment::generates_group() const {
  std::set<std::uint8_t> span{0};
  for (GroupElem g : sigma_) {
    if (g.bits == 0 || span.count(g.bits)) continue;
    std::set<std::uint8_t> next = span;
    for (auto s : span) next.insert(static_cast<std::uint8_t>(s ^ g.bits));
    span = std::move(next);
  }
  return span.size() == (std::size_t{1} << r_);
}

NodeSet branch_char_set(const BranchAssignment& b, Character chi) {
  if (chi.bits == 0) throw std::invalid_argument("branch_char_set: trivial character");
  NodeSet s(b.universe());
  for (std::size_t i = 0; i < b.universe(); ++i) {
    if (pairing(chi, b.sigma(i))) s.insert(i);
  }
  return s;
}

TropeTable::TropeTable(std::size_t universe, std::vector<std::pair<int, NodeSet>> tropes, std::size_t nodes_per_trope)
    : universe_(universe), tropes_(std::move(tropes)) {
  for (std::size_t i = 0; i < tropes_.size(); ++i) {
    const auto& [id, nodes] = tropes_[i];
    if (nodes.universe() != universe_) throw std::invalid_argument("trope node set over a different universe");
    if (nodes.size() != nodes_per_trope) {
      throw std::invalid_argument("trope " + std::to_string(id) + " contains " + std::to_string(nodes.size()) +
                                  " nodes, expected " + std::to_string(nodes_per_trope));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (tropes_[j].first == id) throw std::invalid_argument("duplicate trope id " + std::to_string(id));
    }
  }
}

const NodeSet& TropeTable::nodes_of(int id) const {
  for (const auto& [tid, nodes] : tropes_) {
    if (tid == id) return nodes;
  }
  throw std::out_of_range("unknown trope id " + std::to_string(id));
}

NodeSet trope_pair_set(const TropeTable& t, int t1, int t2) { return t.nodes_of(t1) ^ t.nodes_of(t2); }

NodeSet DivisibilityCertificate::replay(const TropeTable& t) const {
  NodeSet acc(t.universe());
  for (const auto& [a, b] : pairs) acc = acc ^ trope_pair_set(t, a, b);
  return acc;
}

namespace {

struct Echelon {
  struct Row {
    std::uint64_t vec;
    std::vector<bool> combo;
    int pivot;
  };
  std::vector<std::pair<int, int>> generators;
  std::vector<Row> rows;
};

Echelon pair_echelon(const TropeTable& t) {
  Echelon e;
  const auto& tr = t.tropes();
  for (std::size_t i = 0; i < tr.size(); ++i) {
    for (std::size_t j = i + 1; j < tr.size(); ++j) e.generators.emplace_back(tr[i].first, tr[j].first);
  }
  const std::size_t g = e.generators.size();
  for (std::size_t k = 0; k < g; ++k) {
    std::uint64_t v = trope_pair_set(t, e.generators[k].first, e.generators[k].second).bits();
    std::vector<bool> combo(g, false);
    combo[k] = true;
    for (const auto& row : e.rows) {
      if ((v >> row.pivot) & 1u) {
        v ^= row.vec;
        for (std::size_t c = 0; c < g; ++c) combo[c] = combo[c] != row.combo[c];
      }
    }
    if (v == 0) continue;
    e.rows.push_back({v, std::move(combo), std::countr_zero(v)});
  }
  return e;
}

}  // namespace

std::size_t pair_span_rank(const TropeTable& t) { return pair_echelon(t).rows.size(); }

std::optional<DivisibilityCertificate> try_gf2_certify(const NodeSet& target, const TropeTable& t) {
  if (target.universe() != t.universe()) throw std::invalid_argument("target over a different universe");
  const Echelon e = pair_echelon(t);
  std::uint64_t v = target.bits();
  std::vector<bool> combo(e.generators.size(), false);
  for (const auto& row : e.rows) {
    if ((v >> row.pivot) & 1u) {
      v ^= row.vec;
      for (std::size_t c = 0; c < combo.size(); ++c) combo[c] = combo[c] != row.combo[c];
    }
  }
  if (v != 0) return std::nullopt;
  DivisibilityCertificate cert{target, {}};
  for (std::size_t c = 0; c < combo.size(); ++c) {
    if (combo[c]) cert.pairs.push_back(e.generators[c]);
  }
  return cert;
}

DivisibilityCertificate gf2_certify(const NodeSet& target, const TropeTable& t) {
  if (auto cert = try_gf2_certify(target, t)) return *cert;
  const std::size_t rank = pair_span_rank(t);
  throw CertificationFailure("node set of size " + std::to_string(target.size()) +
                                 " is not in the span of the trope-pair sets (rank " + std::to_string(rank) + ")",
                             rank);
}

const std::vector<GroupElem>& partition_order() {
  static const std::vector<GroupElem> order{{0b001}, {0b010}, {0b100}, {0b111}, {0b110}, {0b101}, {0b011}};
  return order;
}

std::vector<PartitionSolution> partition_search(const TropeTable& t, const NodeSet& universe,
                                                const std::vector<std::size_t>& sizes, bool all) {
  const auto& order = partition_order();
  if (sizes.size() != order.size()) throw std::invalid_argument("partition_search expects 7 sizes");
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  if (total != universe.size()) {
    throw std::invalid_argument("sizes add up to " + std::to_string(total) + " but the universe has " +
                                std::to_string(universe.size()) + " nodes");
  }
  // Target size of each basis character sum.
  std::size_t want[3] = {0, 0, 0};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (unsigned i = 0; i < 3; ++i) {
      if (order[k].bits & (1u << i)) want[i] += sizes[k];
    }
  }

  // Candidate sums: trope-pair sets and their complements in the universe,
  // in lexicographic order of the pairs, keeping those with a certificate.
  std::vector<DivisibilityCertificate> candidates;
  auto consider = [&](const NodeSet& s) {
    if ((s & universe) != s) return;
    for (const auto& c : candidates) {
      if (c.target == s) return;
    }
    if (auto cert = try_gf2_certify(s, t)) candidates.push_back(*cert);
  };
  const auto& tr = t.tropes();
  for (std::size_t i = 0; i < tr.size(); ++i) {
    for (std::size_t j = i + 1; j < tr.size(); ++j) {
      const NodeSet p = trope_pair_set(t, tr[i].first, tr[j].first);
      consider(p);
      consider(universe ^ (p & universe));
    }
  }
  if (universe.empty()) consider(universe);

  std::vector<PartitionSolution> found;
  std::vector<std::size_t> per_bit[3];
  for (unsigned b = 0; b < 3; ++b) {
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (candidates[k].target.size() == want[b]) per_bit[b].push_back(k);
    }
  }
  for (auto i : per_bit[0]) {
    for (auto j : per_bit[1]) {
      for (auto k : per_bit[2]) {
        const NodeSet* s[3] = {&candidates[i].target, &candidates[j].target, &candidates[k].target};
        BranchAssignment b(3, universe.universe());
        bool ok = true;
        for (auto node : universe.members()) {
          std::uint8_t sigma = 0;
          for (unsigned bit = 0; bit < 3; ++bit) {
            if (s[bit]->contains(node)) sigma |= static_cast<std::uint8_t>(1u << bit);
          }
          if (sigma == 0) {
            ok = false;
            break;
          }
          b.assign(node, GroupElem{sigma});
        }
        if (!ok) continue;
        for (std::size_t q = 0; q < order.size() && ok; ++q) ok = b.branch_set(order[q]).size() == sizes[q];
        if (!ok) continue;
        found.push_back({b, {candidates[i], candidates[j], candidates[k]}});
        if (!all) return found;
      }
    }
  }
  if (found.empty()) throw std::runtime_error("partition_search: no assignment with the requested sizes exists");
  return found;
}

std::vector<CharClassData> nodal_class_data(const BranchAssignment& b, const std::vector<long>& h0s) {
  const std::size_t chars = (std::size_t{1} << b.rank()) - 1;
  if (h0s.size() != chars) throw std::invalid_argument("one h0 value per nontrivial character is required");
  std::vector<CharClassData> out;
  for (std::size_t c = 1; c <= chars; ++c) {
    const Character chi{static_cast<std::uint8_t>(c)};
    const std::size_t n = branch_char_set(b, chi).size();
    out.push_back({chi, n, Rational(-static_cast<long>(n), 2), Rational(0), h0s[c - 1]});
  }
  return out;
}

Rational chi_cover(unsigned r, const Rational& chi_x, const std::vector<CharClassData>& data) {
  const std::size_t chars = (std::size_t{1} << r) - 1;
  std::vector<bool> seen(chars + 1, false);
  Rational sum = 0;
  for (const auto& d : data) {
    if (d.chi.bits == 0 || d.chi.bits > chars) throw std::invalid_argument("character outside the group dual");
    seen[d.chi.bits] = true;
    sum += d.l_squared + d.k_dot_l;
  }
  for (std::size_t c = 1; c <= chars; ++c) {
    if (!seen[c]) throw std::invalid_argument("missing data for character " + to_string(Character{std::uint8_t(c)}, r));
  }
  Rational out = chi_x * Rational(static_cast<long>(std::size_t{1} << r)) + sum / 2;
  out.canonicalize();
  return out;
}

long pg_cover(long pg_x, const std::vector<long>& h0s) {
  long total = pg_x;
  for (long h : h0s) {
    if (h < 0) throw std::invalid_argument("h0 values must be nonnegative");
    total += h;
  }
  return total;
}

Rational chi_nodal(unsigned r, const Rational& chi_x, std::size_t m) {
  Rational out = Rational(static_cast<long>(std::size_t{1} << r)) * (chi_x - Rational(static_cast<long>(m), 8));
  out.canonicalize();
  return out;
}

long ksq_cover(unsigned r, long k2_x) { return (1L << r) * k2_x; }

bool canonical_factors(long pg_cover, long pg_base) { return pg_cover == pg_base; }

SurfaceInvariants surface_invariants(const Rational& chi, long p_g, long k_squared) {
  if (chi.get_den() != 1) throw std::invalid_argument("holomorphic Euler characteristic must be an integer");
  const long q = p_g - chi.get_num().get_si() + 1;
  if (q < 0) throw std::invalid_argument("irregularity would be negative");
  return {chi, p_g, q, k_squared};
}

std::vector<GroupElem> subgroup(unsigned r, const std::vector<GroupElem>& generators) {
  std::set<std::uint8_t> span{0};
  for (GroupElem g : generators) {
    if (r < kMaxRank && (g.bits >> r) != 0) throw std::invalid_argument("group element outside (Z/2)^r");
    std::set<std::uint8_t> next = span;
    for (auto s : span) next.insert(static_cast<std::uint8_t>(s ^ g.bits));
    span = std::move(next);
  }
  std::vector<GroupElem> out;
  for (auto s : span) out.push_back(GroupElem{s});
  return out;
}

QuotientData quotient_data(const BranchAssignment& b, const std::vector<GroupElem>& h, const Rational& chi_x) {
  std::set<std::uint8_t> elems;
  for (GroupElem g : h) elems.insert(g.bits);
  bool closed = elems.count(0) == 1;
  for (auto x : elems) {
    for (auto y : elems) closed = closed && elems.count(static_cast<std::uint8_t>(x ^ y));
  }
  if (!closed) throw std::invalid_argument("quotient_data: H is not a subgroup");
  const std::size_t order = elems.size();
  const std::size_t index = (std::size_t{1} << b.rank()) / order;
  QuotientData q;
  std::size_t inside = 0;
  for (std::size_t i = 0; i < b.universe(); ++i) {
    const auto s = b.sigma(i).bits;
    if (!elems.count(s)) ++q.branch_nodes;
    else if (s != 0) ++inside;
  }
  q.node_count = index * inside;
  q.chi = chi_nodal(static_cast<unsigned>(std::countr_zero(index)), chi_x, q.branch_nodes);
  return q;
}

QuotientData quotient_data(const BranchAssignment& b, const std::vector<GroupElem>& h, const Rational& chi_x,
                           long pg_x, const std::vector<long>& h0s) {
  QuotientData q = quotient_data(b, h, chi_x);
  const std::size_t chars = (std::size_t{1} << b.rank()) - 1;
  if (h0s.size() != chars) throw std::invalid_argument("one h0 value per nontrivial character is required");
  std::vector<long> kept;
  for (std::size_t c = 1; c <= chars; ++c) {
    const Character chi{static_cast<std::uint8_t>(c)};
    if (std::none_of(h.begin(), h.end(), [&](GroupElem g) { return pairing(chi, g); })) kept.push_back(h0s[c - 1]);
  }
  q.p_g = pg_cover(pg_x, kept);
  return q;
}

}  // namespace canmap::cover

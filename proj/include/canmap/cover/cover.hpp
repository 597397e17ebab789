#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canmap/arith/rational.hpp"

namespace canmap::cover {

constexpr unsigned kMaxRank = 8;
constexpr std::size_t kMaxNodes = 64;

// Element of (Z/2)^r as a bit vector; bit i is the i-th generator.
struct GroupElem {
  std::uint8_t bits = 0;
  friend bool operator==(GroupElem, GroupElem) = default;
  friend auto operator<=>(GroupElem, GroupElem) = default;
};

// Character of (Z/2)^r; chi(sigma) is the parity of the bitwise AND.
struct Character {
  std::uint8_t bits = 0;
  friend bool operator==(Character, Character) = default;
};

bool pairing(Character chi, GroupElem sigma);
GroupElem operator*(GroupElem a, GroupElem b);
Character operator+(Character a, Character b);
// Label such as "abc" for generators a, b, c, ...; "e" for the identity.
std::string to_string(GroupElem g);
// Bit string such as "101" (first generator first).
std::string to_string(Character chi, unsigned r);

// Subset of nodes 0..universe-1.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe, std::uint64_t bits = 0);
  static NodeSet all(std::size_t universe);
  static NodeSet of(std::size_t universe, const std::vector<std::size_t>& nodes);

  std::size_t universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t node) const;
  void insert(std::size_t node);
  std::vector<std::size_t> members() const;

  NodeSet operator^(const NodeSet& o) const;
  NodeSet operator|(const NodeSet& o) const;
  NodeSet operator&(const NodeSet& o) const;
  NodeSet complement() const;
  friend bool operator==(const NodeSet& a, const NodeSet& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

 private:
  void check(const NodeSet& o) const;

  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

// Which D_sigma each node belongs to; the identity marks unbranched nodes.
// Disjointness of the D_sigma holds by construction.
class BranchAssignment {
 public:
  BranchAssignment(unsigned r, std::size_t universe);
  static BranchAssignment from_sets(unsigned r, std::size_t universe,
                                    const std::vector<std::pair<GroupElem, NodeSet>>& sets);

  unsigned rank() const { return r_; }
  std::size_t universe() const { return sigma_.size(); }
  GroupElem sigma(std::size_t node) const { return sigma_.at(node); }
  void assign(std::size_t node, GroupElem sigma);
  NodeSet branch_set(GroupElem sigma) const;
  NodeSet branched() const;
  // True if the sigma with nonempty D_sigma generate (Z/2)^r.
  bool generates_group() const;

  friend bool operator==(const BranchAssignment&, const BranchAssignment&) = default;

 private:
  unsigned r_;
  std::vector<GroupElem> sigma_;
};

// Union of D_sigma over sigma with chi(sigma) = 1.
NodeSet branch_char_set(const BranchAssignment& b, Character chi);

// Trope id -> the set of nodes on the trope.
class TropeTable {
 public:
  TropeTable(std::size_t universe, std::vector<std::pair<int, NodeSet>> tropes, std::size_t nodes_per_trope = 12);

  std::size_t universe() const { return universe_; }
  const std::vector<std::pair<int, NodeSet>>& tropes() const { return tropes_; }
  const NodeSet& nodes_of(int id) const;

 private:
  std::size_t universe_;
  std::vector<std::pair<int, NodeSet>> tropes_;
};

NodeSet trope_pair_set(const TropeTable& t, int t1, int t2);

struct DivisibilityCertificate {
  NodeSet target;
  std::vector<std::pair<int, int>> pairs;

  // XOR of the listed pair sets.
  NodeSet replay(const TropeTable& t) const;
};

class CertificationFailure : public std::runtime_error {
 public:
  CertificationFailure(const std::string& what, std::size_t span_rank)
      : std::runtime_error(what), span_rank_(span_rank) {}
  std::size_t span_rank() const { return span_rank_; }

 private:
  std::size_t span_rank_;
};

// Expresses target as a GF(2) sum of trope-pair sets, if possible.
std::optional<DivisibilityCertificate> try_gf2_certify(const NodeSet& target, const TropeTable& t);
// As above; throws CertificationFailure with the rank of the pair-set span.
DivisibilityCertificate gf2_certify(const NodeSet& target, const TropeTable& t);
std::size_t pair_span_rank(const TropeTable& t);

struct PartitionSolution {
  BranchAssignment assignment;
  // Certificates for the sums of chi_100, chi_010, chi_001.
  std::vector<DivisibilityCertificate> certificates;
};

// Sizes are for D_a, D_b, D_c, D_abc, D_bc, D_ac, D_ab. Returns the first
// solution, or every solution when `all` is set; throws if none exists or
// the sizes do not add up to the universe.
std::vector<PartitionSolution> partition_search(const TropeTable& t, const NodeSet& universe,
                                                const std::vector<std::size_t>& sizes, bool all = false);

// The order of `sizes` in partition_search.
const std::vector<GroupElem>& partition_order();

struct CharClassData {
  Character chi;
  std::size_t nodes = 0;  // n_chi
  Rational l_squared;
  Rational k_dot_l;
  long h0 = 0;  // h^0(K_X + L_chi)
};

// Branch data of a cover branched on nodes: L^2 = -n_chi/2, K.L = 0.
std::vector<CharClassData> nodal_class_data(const BranchAssignment& b, const std::vector<long>& h0s);

Rational chi_cover(unsigned r, const Rational& chi_x, const std::vector<CharClassData>& data);
long pg_cover(long pg_x, const std::vector<long>& h0s);
Rational chi_nodal(unsigned r, const Rational& chi_x, std::size_t m);
long ksq_cover(unsigned r, long k2_x);
bool canonical_factors(long pg_cover, long pg_base);

struct SurfaceInvariants {
  Rational chi;
  long p_g = 0;
  long q = 0;
  long k_squared = 0;
};

// q = p_g - chi + 1; throws if chi is not an integer or q < 0.
SurfaceInvariants surface_invariants(const Rational& chi, long p_g, long k_squared);

struct QuotientData {
  std::size_t branch_nodes = 0;  // m_H, nodes of X with sigma outside H
  std::size_t node_count = 0;    // nodes of Y/H
  Rational chi;
  std::optional<long> p_g;  // set only when h0 data is supplied
};

// Subgroup generated by the given elements.
std::vector<GroupElem> subgroup(unsigned r, const std::vector<GroupElem>& generators);
// Throws if h is not a subgroup.
QuotientData quotient_data(const BranchAssignment& b, const std::vector<GroupElem>& h, const Rational& chi_x);
// Also fills p_g = p_g(X) + sum of h0s[chi - 1] over nonzero chi trivial on H.
QuotientData quotient_data(const BranchAssignment& b, const std::vector<GroupElem>& h, const Rational& chi_x,
                           long pg_x, const std::vector<long>& h0s);

}  // namespace canmap::cover

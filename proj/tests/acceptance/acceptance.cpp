// Acceptance driver: one PASS/FAIL line per criterion. All comparisons are
// exact; no numeric tolerances are involved.
#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "canmap/arith/prime_reduction.hpp"
#include "canmap/cover/cover.hpp"
#include "canmap/groebner/operations.hpp"
#include "canmap/pipeline/scenario.hpp"
#include "fixtures.hpp"

namespace canmap::acceptance {
namespace {

using pipeline::json;
using pipeline::Mode;
using pipeline::Report;
using pipeline::RunOptions;
using testing::kSeed;

struct Verdict {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

const pipeline::CheckResult& find(const Report& r, const std::string& id) {
  for (const auto& c : r.checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("missing check " + id);
}

RunOptions single(const std::string& id, Mode mode) {
  RunOptions o;
  o.mode = mode;
  o.check = id;
  return o;
}

Verdict x40_exact() {
  Verdict v;
  RunOptions o;
  o.mode = Mode::Exact;
  const Report r = pipeline::run_x40(testing::x40_data(), o);
  for (int i = 1; i <= 11; ++i) {
    const auto& c = find(r, "X" + std::to_string(i));
    v.require(c.pass && c.mode == "exact" && !c.probabilistic, c.id + " " + c.observed.dump());
  }
  const auto& x6 = find(r, "X6").observed;
  v.require(x6["s1"] == 20 && x6["s2"] == 20 && x6["union"] == 40 && x6["disjoint"] == true, "X6 counts");
  v.require(find(r, "X10").observed["trace_dimension"] == 2, "X10 trace dimension");
  std::ostringstream s;
  s << "X1-X11 exact in " << r.seconds << " s";
  v.summary = s.str();
  return v;
}

Verdict x12_ledger() {
  Verdict v;
  const Report r = pipeline::run_x40(testing::x40_data(), single("X12", Mode::Exact));
  const auto& c = find(r, "X12");
  const auto& o = c.observed;
  v.require(c.pass, "X12 did not pass");
  v.require(o["chi_Y"] == "8", "chi(Y)");
  v.require(o["p_g_Y"] == 7, "p_g(Y)");
  v.require(o["q_Y"] == 0, "q(Y)");
  v.require(o["K2_Y"] == 64, "K^2(Y)");
  v.require(o["chi_X16"] == "6", "chi(X16)");
  v.require(o["m_X16"] == 36, "m(X16)");
  v.require(o["node_counts"] == json({16, 32, 40, 48}), "node counts");
  v.require(o["canonical_X16_to_X40"] == true, "canonical factors X16 -> X40");
  v.require(o["canonical_Y_to_Y48"] == true, "canonical factors Y -> Y48");
  v.summary = "chi(Y)=8 p_g=7 q=0 K^2=64 chi(X16)=6 m=36 nodes 16/32/40/48";
  return v;
}

Verdict y48_modular() {
  Verdict v;
  const Report r = pipeline::run_y48(testing::y48_data(), {});
  v.require(r.primes.size() >= 3, "fewer than three primes");
  for (const auto& c : r.checks) {
    v.require(c.pass, c.id + " " + c.observed.dump());
    v.require(c.primes == r.primes, c.id + " did not run at every prime");
    v.require(!c.observed.contains("disagreement"), c.id + " primes disagree");
  }
  const auto& y1 = find(r, "Y1");
  v.require(y1.mode == "exact+mod-p" && !y1.probabilistic, "Y1 not verified exactly");
  v.require(find(r, "Y2").observed["dimension"] == 0, "dim SY48");
  v.require(find(r, "Y3").observed["degree"] == "48", "deg SY48");
  v.require(find(r, "Y4").observed["reduced_degree"] == "48", "deg reduced SY48");
  std::ostringstream s;
  s << "Y1-Y4 at " << r.primes.size() << " primes, Y1 exact";
  v.summary = s.str();
  return v;
}

// Built from the trope equations and node coordinates alone.
cover::TropeTable table_from(const pipeline::X40Data& d) {
  const auto nodes = d.nodes();
  std::vector<std::pair<int, cover::NodeSet>> entries;
  for (std::size_t i = 0; i < d.tropes.size(); ++i) {
    cover::NodeSet s(nodes.size());
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      if (d.tropes[i].evaluate(nodes[n].coords()).is_zero()) s.insert(n);
    }
    entries.emplace_back(d.trope_ids[i], s);
  }
  return cover::TropeTable(nodes.size(), entries, d.nodes_per_trope);
}

Verdict partition() {
  Verdict v;
  const auto& d = testing::x40_data();
  const auto table = table_from(d);
  const std::vector<std::size_t> sizes{4, 4, 4, 4, 8, 8, 8};
  const auto sols = cover::partition_search(table, cover::NodeSet::all(d.node_count()), sizes, true);
  v.require(!sols.empty(), "no assignment found");
  const cover::Character basis[3] = {{0b001}, {0b010}, {0b100}};
  for (const auto& s : sols) {
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      v.require(s.assignment.branch_set(cover::partition_order()[k]).size() == sizes[k], "sizes");
    }
    v.require(s.certificates.size() == 3, "certificate count");
    for (std::size_t i = 0; i < s.certificates.size() && i < 3; ++i) {
      const auto target = cover::branch_char_set(s.assignment, basis[i]);
      v.require(s.certificates[i].target == target, "certificate target");
      v.require(s.certificates[i].replay(table) == target, "certificate replay");
    }
  }
  v.summary = std::to_string(sols.size()) + " assignments, every certificate replays";
  return v;
}

cover::BranchAssignment random_assignment(std::mt19937& rng, unsigned r, std::size_t universe) {
  cover::BranchAssignment b(r, universe);
  std::uniform_int_distribution<unsigned> g(0, (1u << r) - 1);
  for (std::size_t i = 0; i < universe; ++i) b.assign(i, cover::GroupElem{static_cast<std::uint8_t>(g(rng))});
  return b;
}

template <class K>
bool euler_holds(const Poly<K>& f) {
  const auto& ring = f.ring();
  Poly<K> acc(ring);
  for (std::size_t i = 0; i < ring->nvars(); ++i) acc += Poly<K>::variable(ring, i) * f.derivative(i);
  return acc == f.scaled(ring->field().from_int(*f.homogeneous_degree()));
}

Verdict properties() {
  Verdict v;
  std::ostringstream s;

  // Field axioms and reduction homomorphism over the degree-8 tower.
  {
    std::mt19937 rng(kSeed);
    const auto t = testing::tower_rmn();
    const auto red = PrimeReduction::select(t, 1u << 30, 1).front();
    int cases = 0;
    for (; cases < 1000; ++cases) {
      const auto a = testing::random_element(rng, t, 5);
      const auto b = testing::random_element(rng, t, 5);
      const auto c = testing::random_element(rng, t, 5);
      bool ok = a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a * b == b * a &&
                a + (b + c) == (a + b) + c && (a - a).is_zero();
      ok = ok && red.reduce(a + b) == red.reduce(a) + red.reduce(b) && red.reduce(a * b) == red.reduce(a) * red.reduce(b);
      if (!a.is_zero()) ok = ok && (a * inverse(a)).is_one() && red.reduce(inverse(a)) == inverse(red.reduce(a));
      v.require(ok, "arith case " + std::to_string(cases));
    }
    s << "arith " << cases;
  }

  // Reduced Groebner bases of random ideals.
  {
    std::mt19937 rng(kSeed + 1);
    const auto ring = PolyRing<PrimeField>::make(PrimeField(32003), {"a", "b", "c"});
    int ideals = 0;
    for (; ideals < 100; ++ideals) {
      std::vector<Poly<PrimeField>> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(testing::random_poly(rng, ring, 3, 3));
      const Ideal<PrimeField> id(ring, gens);
      const auto& g = id.groebner();
      bool ok = Ideal<PrimeField>(ring, g.elements).groebner() == g;
      for (const auto& f : gens) ok = ok && contains(g, f);
      for (std::size_t i = 0; i < g.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < g.elements.size(); ++j) {
          ok = ok && normal_form(detail::spoly(g.elements[i], g.elements[j]), g).is_zero();
        }
      }
      std::shuffle(gens.begin(), gens.end(), rng);
      ok = ok && Ideal<PrimeField>(ring, gens).groebner() == g;
      v.require(ok, "random ideal " + std::to_string(ideals));
    }
    s << ", ideals " << ideals;
  }

  // k random points of P^2 have Hilbert dimension 0 and degree k.
  {
    std::mt19937 rng(kSeed + 2);
    const auto ring = PolyRing<PrimeField>::make(PrimeField(32003), {"x", "y", "z"});
    const auto& k = ring->field();
    std::uniform_int_distribution<long> coord(-50, 50);
    const auto var = [&](std::size_t i) { return Poly<PrimeField>::variable(ring, i); };
    for (long n = 1; n <= 6; ++n) {
      Ideal<PrimeField> acc(ring, {Poly<PrimeField>::constant(ring, 1)});
      for (long i = 0; i < n; ++i) {
        const long a = coord(rng), b = coord(rng);
        acc = intersect(acc, Ideal<PrimeField>(ring, {var(0) - var(2).scaled(k.from_int(a)),
                                                      var(1) - var(2).scaled(k.from_int(b))}));
      }
      const auto dd = hilbert_dim_degree(acc);
      v.require(dd.dimension == 0 && dd.degree == n, "Hilbert of " + std::to_string(n) + " points");
    }
    s << ", Hilbert k<=6";
  }

  // Euler identity on every bundled polynomial.
  {
    std::size_t count = 0;
    const auto& x = testing::x40_data();
    const auto& y = testing::y48_data();
    for (const auto* list : {&x.surface, &x.tropes, &y.x_gens, &y.x40_gens, &y.y48_gens}) {
      for (const auto& f : *list) {
        v.require(euler_holds(f), "Euler identity");
        ++count;
      }
    }
    s << ", Euler " << count;
  }

  // Cover and nodal chi agree; branch sums are additive in the character.
  {
    std::mt19937 rng(kSeed + 3);
    int trials = 0;
    for (; trials < 200; ++trials) {
      const unsigned r = trials % 5;
      const std::size_t universe = 1 + trials % 40;
      const auto b = random_assignment(rng, r, universe);
      const Rational chi_x(trials % 9 - 2);
      const std::vector<long> h0((std::size_t{1} << r) - 1, 0);
      v.require(cover::chi_cover(r, chi_x, cover::nodal_class_data(b, h0)) ==
                    cover::chi_nodal(r, chi_x, b.branched().size()),
                "chi consistency");
      for (unsigned p = 1; p < (1u << r); ++p) {
        for (unsigned q = 1; q < (1u << r); ++q) {
          if (p == q) continue;
          const cover::Character cp{std::uint8_t(p)}, cq{std::uint8_t(q)};
          v.require(cover::branch_char_set(b, cp + cq) == (cover::branch_char_set(b, cp) ^ cover::branch_char_set(b, cq)),
                    "additivity");
        }
      }
    }
    s << ", cover " << trials;
  }
  v.summary = s.str();
  return v;
}

Verdict negative_controls() {
  Verdict v;
  const auto& base = testing::x40_data();
  const auto one = TowerField(base.tower).one();

  // Every single-coordinate perturbation, modulo primes, then a seeded sample exactly.
  std::vector<std::pair<std::size_t, std::size_t>> cases;
  for (std::size_t s = 0; s < base.sets.size(); ++s) {
    for (std::size_t i = 0; i < base.sets[s].size(); ++i) cases.emplace_back(s, i);
  }
  std::size_t perturbed = 0, exact = 0;
  const auto run = [&](std::size_t s, std::size_t i, std::size_t coord, Mode mode) {
    pipeline::X40Data d = base;
    auto coords = d.sets[s][i].coords();
    coords[coord] += one;
    if (std::all_of(coords.begin(), coords.end(), [](const TowerElement& c) { return c.is_zero(); })) return;
    d.sets[s][i] = RationalPoint<TowerField>(coords);
    const bool x1 = pipeline::run_x40(d, single("X1", mode)).pass();
    const bool x2 = pipeline::run_x40(d, single("X2", mode)).pass();
    v.require(!x1 || !x2, "perturbation of set " + base.set_names[s] + " node " + std::to_string(i) + " coordinate " +
                              std::to_string(coord) + " passed");
  };
  const std::size_t ncoords = base.ring->nvars();
  for (const auto& [s, i] : cases) {
    for (std::size_t c = 0; c < ncoords; ++c) {
      run(s, i, c, Mode::ModP);
      ++perturbed;
    }
  }
  std::mt19937 rng(kSeed + 4);
  std::uniform_int_distribution<std::size_t> pick(0, cases.size() - 1), coord(0, ncoords - 1);
  for (; exact < 3; ++exact) {
    const auto [s, i] = cases[pick(rng)];
    run(s, i, coord(rng), Mode::Exact);
  }

  // Dropping any trope shows up in X8.
  for (int id : base.trope_ids) {
    pipeline::X40Data d = base;
    d.drop_trope(id);
    const auto o = pipeline::run_x40(d, single("X8", Mode::Exact)).checks.front().observed;
    const auto& ids = o["tropes"];
    v.require(ids.size() == base.tropes.size() - 1 && std::find(ids.begin(), ids.end(), id) == ids.end(),
              "X8 after dropping trope " + std::to_string(id));
  }

  // Prime 5 is invalid for the tower.
  bool rejected = false;
  try {
    RunOptions o;
    o.mode = Mode::ModP;
    o.primes = {5};
    pipeline::run_scenario("x40", o);
  } catch (const pipeline::ConfigError&) {
    rejected = true;
  }
  v.require(rejected, "prime 5 accepted");

  std::ostringstream s;
  s << perturbed << " perturbations mod p, " << exact << " exact, " << base.tropes.size()
    << " trope drops, prime 5 rejected";
  v.summary = s.str();
  return v;
}

const std::vector<std::pair<std::string, std::function<Verdict()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Verdict()>>> c{
      {"x40 exact checks X1-X11", x40_exact},
      {"x40 invariant ledger X12", x12_ledger},
      {"y48 modulo three primes with exact Y1", y48_modular},
      {"partition search with certificate replay", partition},
      {"property suites", properties},
      {"negative controls", negative_controls},
  };
  return c;
}

}  // namespace
}  // namespace canmap::acceptance

int main(int argc, char** argv) {
  using canmap::acceptance::criteria;
  std::vector<std::size_t> which;
  for (int i = 1; i < argc; ++i) which.push_back(static_cast<std::size_t>(std::atoi(argv[i])));
  if (which.empty()) {
    for (std::size_t i = 1; i <= criteria().size(); ++i) which.push_back(i);
  }
  bool all = true;
  for (std::size_t n : which) {
    if (n < 1 || n > criteria().size()) {
      std::cerr << "unknown criterion " << n << "\n";
      return 2;
    }
    const auto& [name, fn] = criteria()[n - 1];
    canmap::acceptance::Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << "  " << name;
    if (!v.summary.empty()) std::cout << " (" << v.summary << ")";
    std::cout << "\n";
    for (std::size_t i = 0; i < v.failures.size() && i < 10; ++i) std::cout << "  " << v.failures[i] << "\n";
    all = all && v.pass;
  }
  return all ? 0 : 1;
}

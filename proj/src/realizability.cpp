#include "unavoidable/realizability.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

#include "unavoidable/errors.hpp"
#include "unavoidable/lp.hpp"
#include "unavoidable/partition.hpp"

namespace unav {

// ---------------------------------------------------------------------------
// Measures

WeightedHypergraph::WeightedHypergraph(int m, std::vector<Subset> members,
                                       std::vector<Rational> omega)
    : m_(m), members_(std::move(members)), omega_(std::move(omega)) {
  if (m < 1 || m > kMaxGroundSize) throw std::invalid_argument("m outside [1, 63]");
  if (members_.size() != omega_.size()) {
    throw std::invalid_argument("family and weight lists differ in length");
  }
  std::vector<Subset> sorted = members_;
  std::sort(sorted.begin(), sorted.end(), [](Subset a, Subset b) { return a.bits() < b.bits(); });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate member in the family");
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].empty() || !members_[i].is_subset_of(Subset::range(m))) {
      throw std::invalid_argument("family member " + members_[i].to_string() +
                                  " must be a nonempty subset of [m]");
    }
    if (omega_[i] < 0) throw std::invalid_argument("negative weight " + to_string(omega_[i]));
  }
}

GeometricMeasure::GeometricMeasure(std::vector<Measure> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("geometric measure needs a component");
  for (const auto& mu : components_) {
    if (mu.ground_size() != components_.front().ground_size()) {
      throw std::invalid_argument("geometric measure components live on different ground sets");
    }
  }
}

namespace {

void check_family_size(const WeightedHypergraph& f) {
  if (f.members().size() > kMaxFamilySize) {
    throw std::invalid_argument("family has " + std::to_string(f.members().size()) +
                                " members; limit is " + std::to_string(kMaxFamilySize));
  }
}

/// Members (with weights) grouped by their lowest vertex.
using Grouped = std::vector<std::vector<std::pair<Subset, const Rational*>>>;

Grouped group_by_lowest(const WeightedHypergraph& f) {
  Grouped out(f.ground_size() + 1);
  for (std::size_t i = 0; i < f.members().size(); ++i) {
    out[f.members()[i].lowest()].emplace_back(f.members()[i], &f.omega()[i]);
  }
  return out;
}

// ν(S) = max(ν(S∖{v}), max_{B ∈ F, min B = v, B ⊆ S} ω(B) + ν(S∖B)), v = min S:
// either v is left uncovered or exactly one packed member covers it.
class WhEvaluator {
 public:
  explicit WhEvaluator(const WeightedHypergraph& f) : groups_(group_by_lowest(f)) {}

  const Rational& operator()(Subset s) {
    if (s.empty()) return zero_;
    if (auto it = memo_.find(s.bits()); it != memo_.end()) return it->second;
    const int v = s.lowest();
    Rational best = (*this)(s.without(v));
    for (const auto& [b, w] : groups_[v]) {
      if (!b.is_subset_of(s)) continue;
      Rational candidate = *w + (*this)(s - b);
      if (candidate > best) best = std::move(candidate);
    }
    return memo_.emplace(s.bits(), std::move(best)).first->second;
  }

 private:
  Grouped groups_;
  std::unordered_map<Subset::Bits, Rational> memo_;
  Rational zero_;
};

std::vector<Rational> wh_table(const WeightedHypergraph& f) {
  check_family_size(f);
  const int m = f.ground_size();
  if (m > kMaxSweepGroundSize) throw std::invalid_argument("ν_ω sweep limited to m <= 22");
  const auto groups = group_by_lowest(f);
  const std::size_t n = std::size_t{1} << m;
  std::vector<Rational> table(n);
  for (std::size_t bits = 1; bits < n; ++bits) {
    const Subset s(bits);
    const int v = s.lowest();
    Rational best = table[s.without(v).bits()];
    for (const auto& [b, w] : groups[v]) {
      if (!b.is_subset_of(s)) continue;
      Rational candidate = *w + table[(s - b).bits()];
      if (candidate > best) best = std::move(candidate);
    }
    table[bits] = std::move(best);
  }
  return table;
}

std::vector<Rational> geometric_table(const GeometricMeasure& nu) {
  const int m = nu.ground_size();
  if (m > kMaxSweepGroundSize) throw std::invalid_argument("measure sweep limited to m <= 22");
  const std::size_t n = std::size_t{1} << m;
  std::vector<Rational> table;
  std::vector<Rational> component(n);
  for (std::size_t t = 0; t < nu.components().size(); ++t) {
    const auto& w = nu.components()[t].weights();
    for (std::size_t bits = 1; bits < n; ++bits) {
      const Subset s(bits);
      const int v = s.lowest();
      component[bits] = component[s.without(v).bits()] + w[v - 1];
    }
    if (t == 0) {
      table = component;
    } else {
      for (std::size_t bits = 0; bits < n; ++bits) {
        if (component[bits] < table[bits]) table[bits] = component[bits];
      }
    }
  }
  return table;
}

}  // namespace

Rational wh_measure(const WeightedHypergraph& family, Subset a) {
  if (!a.is_subset_of(Subset::range(family.ground_size()))) {
    throw std::out_of_range("subset outside the family's ground set");
  }
  WhEvaluator eval(family);
  return eval(a);
}

Rational geometric_measure(const GeometricMeasure& nu, Subset a) {
  Rational best = nu.components().front()(a);
  for (const auto& mu : nu.components()) best = std::min(best, mu(a));
  return best;
}

int ground_size(const SuperadditiveMeasure& nu) {
  return std::visit([](const auto& x) { return x.ground_size(); }, nu);
}

Rational evaluate(const SuperadditiveMeasure& nu, Subset a) {
  if (const auto* f = std::get_if<WeightedHypergraph>(&nu)) return wh_measure(*f, a);
  return geometric_measure(std::get<GeometricMeasure>(nu), a);
}

std::vector<Rational> measure_table(const SuperadditiveMeasure& nu) {
  if (const auto* f = std::get_if<WeightedHypergraph>(&nu)) return wh_table(*f);
  return geometric_table(std::get<GeometricMeasure>(nu));
}

SimplicialComplex superadditive_sublevel(const SuperadditiveMeasure& nu, int r) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  const int m = ground_size(nu);
  const auto table = measure_table(nu);
  const Rational& alpha = table.back();
  if (alpha == 0) throw std::invalid_argument("ν([m]) = 0; the sub-level complex is undefined");
  const Rational threshold = alpha / r;
  auto k = SimplicialComplex::from_face_predicate(
      m, [&](Subset a) { return table[a.bits()] <= threshold; });
  assert(is_r_unavoidable(k, r).unavoidable);
  return k;
}

Integer pi_upper_bound(const Rational& alpha, const Rational& beta) {
  if (beta <= 0) throw std::invalid_argument("β must be positive");
  if (beta > alpha) throw std::invalid_argument("β must not exceed α");
  return ceil(alpha / beta);
}

// ---------------------------------------------------------------------------
// Linear realizability

namespace {

enum class Label { kTotal, kFacet, kNonface, kMarginCap };

struct LabeledProgram {
  lp::Program program;
  std::vector<std::pair<Label, Subset>> labels;
};

/// Variables α_1..α_m and e = ε + 1 >= 0 (ε* >= -1/r whenever the facet
/// system is feasible, so the shift loses nothing). e <= 2 keeps the
/// problem bounded when K has no non-faces.
LabeledProgram build_program(const SimplicialComplex& k, int r, bool with_facets,
                             const LpOptions& options) {
  const int m = k.ground_size();
  const std::size_t count =
      2 + (with_facets ? k.facets().size() : 0) + k.min_nonfaces().size();
  if (count > options.max_constraints) {
    throw BudgetExceeded("LP would have " + std::to_string(count) +
                         " constraints; limit is " + std::to_string(options.max_constraints));
  }
  LabeledProgram out;
  auto& p = out.program;
  p.variables = m + 1;
  p.objective.assign(m + 1, Rational(0));
  p.objective[m] = 1;
  const Rational inv_r(1, r);

  auto row_for = [&](Subset s) {
    std::vector<Rational> a(m + 1);
    for (int v : s.members()) a[v - 1] = 1;
    return a;
  };

  p.constraints.push_back({row_for(Subset::range(m)), lp::Relation::kEqual, Rational(1)});
  out.labels.emplace_back(Label::kTotal, Subset::range(m));
  if (with_facets) {
    for (Subset f : k.facets()) {
      p.constraints.push_back({row_for(f), lp::Relation::kLessEqual, inv_r});
      out.labels.emplace_back(Label::kFacet, f);
    }
  }
  for (Subset n : k.min_nonfaces()) {
    // μ(N) - ε >= 1/r  ⇔  μ(N) - e >= 1/r - 1
    auto a = row_for(n);
    a[m] = -1;
    p.constraints.push_back({std::move(a), lp::Relation::kGreaterEqual, inv_r - 1});
    out.labels.emplace_back(Label::kNonface, n);
  }
  std::vector<Rational> cap(m + 1);
  cap[m] = 1;
  p.constraints.push_back({std::move(cap), lp::Relation::kLessEqual, Rational(2)});
  out.labels.emplace_back(Label::kMarginCap, Subset{});
  return out;
}

std::string describe_multipliers(const LabeledProgram& lp, const std::vector<Rational>& y) {
  constexpr int kShown = 12;
  std::string out;
  int shown = 0;
  int hidden = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    if (shown == kShown) {
      ++hidden;
      continue;
    }
    const auto& [label, set] = lp.labels[i];
    std::string name;
    switch (label) {
      case Label::kTotal: name = "total mass"; break;
      case Label::kFacet: name = "facet " + set.to_string(); break;
      case Label::kNonface: name = "min-nonface " + set.to_string(); break;
      case Label::kMarginCap: name = "margin cap"; break;
    }
    out += (shown == 0 ? "" : "; ") + name + ": " + to_string(y[i]);
    ++shown;
  }
  if (hidden > 0) out += "; ... and " + std::to_string(hidden) + " more";
  return out;
}

/// Exact post-solve check of a claimed witness.
void verify_witness(const SimplicialComplex& k, int r, const Measure& mu, bool with_facets) {
  const Rational inv_r(1, r);
  bool ok = mu.is_probability();
  if (with_facets) {
    for (Subset f : k.facets()) ok = ok && mu(f) <= inv_r;
  }
  for (Subset n : k.min_nonfaces()) ok = ok && mu(n) > inv_r;
  if (!ok) throw std::logic_error("LP witness failed exact re-verification");
}

LpVerdict solve_realization(const SimplicialComplex& k, int r, bool with_facets,
                            const LpOptions& options) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  const int m = k.ground_size();
  const auto lp = build_program(k, r, with_facets, options);
  const auto solution = lp::solve(lp.program);

  LpVerdict verdict;
  verdict.constraints = lp.program.constraints.size();
  verdict.pivots = solution.pivots;
  if (solution.status == lp::Status::kInfeasible) {
    verdict.infeasibility_note =
        "facet constraints with total mass 1 are infeasible; Farkas multipliers: " +
        describe_multipliers(lp, solution.multipliers);
    return verdict;
  }
  if (solution.status != lp::Status::kOptimal) {
    throw std::logic_error("bounded realization LP reported unbounded");
  }
  const Rational margin = solution.objective - 1;
  verdict.margin = margin;
  if (margin <= 0) {
    verdict.infeasibility_note = "optimal margin eps* = " + to_string(margin) +
                                 " <= 0; dual weights: " +
                                 describe_multipliers(lp, solution.multipliers);
    return verdict;
  }
  Measure witness(std::vector<Rational>(solution.values.begin(), solution.values.begin() + m));
  verify_witness(k, r, witness, with_facets);
  verdict.feasible = true;
  verdict.witness = std::move(witness);
  return verdict;
}

}  // namespace

LpVerdict is_linearly_realizable(const SimplicialComplex& k, int r, const LpOptions& options) {
  const auto unavoidable = is_r_unavoidable(k, r);
  if (!unavoidable.unavoidable) {
    LpVerdict verdict;
    std::string blocks;
    for (Subset b : unavoidable.witness->blocks) {
      blocks += (blocks.empty() ? "" : " ") + b.to_string();
    }
    verdict.infeasibility_note =
        "not " + std::to_string(r) + "-unavoidable; partition into non-faces: " + blocks;
    return verdict;
  }
  return solve_realization(k, r, true, options);
}

LpVerdict linear_subcomplex_witness(const SimplicialComplex& k, int r, const LpOptions& options) {
  return solve_realization(k, r, false, options);
}

// ---------------------------------------------------------------------------
// WH-realizations

bool wh_realization_check(const SimplicialComplex& k, int r, const WeightedHypergraph& family) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (family.ground_size() != k.ground_size()) {
    throw std::invalid_argument("family and complex live on different ground sets");
  }
  const auto table = wh_table(family);
  const Rational& alpha = table.back();
  if (alpha == 0) throw std::invalid_argument("ν_ω([m]) = 0; no threshold α/r exists");
  const Rational threshold = alpha / r;
  for (std::size_t bits = 0; bits < table.size(); ++bits) {
    if ((table[bits] <= threshold) != k.contains_face(Subset(bits))) return false;
  }
  return true;
}

WeightedHypergraph selfdual_wh_realization(const SimplicialComplex& k) {
  const int m = k.ground_size();
  if (m > 12) throw std::invalid_argument("canonical WH-realization needs m <= 12");
  if (!is_self_dual(k)) throw std::invalid_argument("complex is not self-dual");
  std::vector<Subset> members;
  for (Subset::Bits bits = 1; bits < (Subset::Bits{1} << m); ++bits) members.emplace_back(bits);
  std::sort(members.begin(), members.end(), CanonicalLess{});
  std::vector<Rational> omega;
  omega.reserve(members.size());
  for (Subset a : members) omega.emplace_back(k.contains_face(a) ? 0 : 1);
  return WeightedHypergraph(m, std::move(members), std::move(omega));
}

WeightedHypergraph prune_zero_weights(const WeightedHypergraph& family) {
  std::vector<Subset> members;
  std::vector<Rational> omega;
  for (std::size_t i = 0; i < family.members().size(); ++i) {
    if (family.omega()[i] == 0) continue;
    members.push_back(family.members()[i]);
    omega.push_back(family.omega()[i]);
  }
  return WeightedHypergraph(family.ground_size(), std::move(members), std::move(omega));
}

}  // namespace unav

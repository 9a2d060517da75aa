#include "unavoidable/certify.hpp"

#include <stdexcept>

namespace unav {

namespace {

constexpr std::int64_t kMaxPrimePowerInput = std::int64_t{1} << 32;

std::string blocks_string(const PartitionWitness& w) {
  std::string out;
  for (Subset b : w.blocks) out += (out.empty() ? "" : " ") + b.to_string();
  return out;
}

FactorSummary summarize(const SimplicialComplex& k, int r, int s) {
  FactorSummary f;
  f.m = k.ground_size();
  f.pi = partition_number(k);
  auto verdict = is_rs_unavoidable(k, r, s);
  f.unavoidable = verdict.unavoidable;
  f.witness = std::move(verdict.witness);
  return f;
}

std::string unavoidability_name(int r, int s) {
  return s == 1 ? std::to_string(r) + "-unavoidable"
                : "(" + std::to_string(r) + "," + std::to_string(s) + ")-unavoidable";
}

/// Prime-power gate plus factor checks shared by every certificate.
void check_hypotheses(Certificate& c, const std::vector<const SimplicialComplex*>& factors, int r,
                      int s, bool label_factors) {
  c.r = r;
  c.r_decomposition = prime_power(r);
  if (!c.r_decomposition) {
    c.reasons.push_back("r = " + std::to_string(r) +
                        " is not a prime power; the theorems are silent there and the "
                        "conclusion can fail for such r");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    c.inputs.push_back(summarize(*factors[i], r, s));
    const auto& f = c.inputs.back();
    if (f.unavoidable) continue;
    const std::string who =
        label_factors ? "factor " + std::to_string(i + 1) + " (m = " + std::to_string(f.m) + ")"
                      : "K (m = " + std::to_string(f.m) + ")";
    c.reasons.push_back(who + " is not " + unavoidability_name(r, s) +
                        "; offending partition: " + blocks_string(*f.witness));
  }
}

void check_inequality(Certificate& c, const std::string& label) {
  const auto& q = *c.inequality;
  if (!q.holds()) {
    c.reasons.push_back(label + " fails: " + q.left_expression + " = " + std::to_string(q.left) +
                        " > " + std::to_string(q.right) + " = " + q.right_expression);
  }
}

void settle(Certificate& c) {
  if (!c.r_decomposition) {
    c.verdict = Verdict::kAbstained;
  } else {
    c.verdict = c.reasons.empty() ? Verdict::kCertified : Verdict::kNotCertified;
  }
}

Certificate index_bound(CertificateKind kind, const SimplicialComplex& k, int r,
                        std::optional<int> s) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  const int surplus = s.value_or(1);
  if (surplus < 1 || surplus >= r) throw std::invalid_argument("need r > s >= 1");
  Certificate c;
  c.kind = kind;
  c.s = surplus;
  check_hypotheses(c, {&k}, r, surplus, false);
  const std::int64_t m = k.ground_size();
  std::string formula;
  std::int64_t value = 0;
  if (kind == CertificateKind::kIndexJoinBound) {
    value = m - r + surplus - 1;
    formula = s ? "m - r + s - 1" : "m - r";
    c.conclusion = "the r-fold deleted join of K has equivariant index at least " +
                   std::to_string(value) + " (" + formula + ")";
  } else {
    value = m - 2 * static_cast<std::int64_t>(r) + surplus;
    formula = s ? "m - 2r + s" : "m - 2r + 1";
    c.conclusion = "the r-fold deleted product of K has equivariant index at least " +
                   std::to_string(value) + " (" + formula + ")";
  }
  // Any failed hypothesis is an abstention: no bound is asserted.
  c.verdict = c.reasons.empty() ? Verdict::kCertified : Verdict::kAbstained;
  if (c.verdict == Verdict::kCertified) c.bound = value;
  return c;
}

}  // namespace

std::optional<PrimePower> prime_power(std::int64_t r) {
  if (r > kMaxPrimePowerInput) throw std::invalid_argument("prime-power test limited to r <= 2^32");
  if (r < 2) return std::nullopt;
  std::int64_t p = r;
  for (std::int64_t d = 2; d * d <= r; ++d) {
    if (r % d == 0) {
      p = d;
      break;
    }
  }
  int k = 0;
  std::int64_t rest = r;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, k};
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kJoinNonembeddable: return "join_nonembeddable";
    case CertificateKind::kSingleNonembeddable: return "single_nonembeddable";
    case CertificateKind::kIndexJoinBound: return "index_join_bound";
    case CertificateKind::kIndexProductBound: return "index_product_bound";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kCertified: return "certified";
    case Verdict::kNotCertified: return "not_certified";
    case Verdict::kAbstained: return "abstained";
  }
  return "unknown";
}

Certificate index_bound_deleted_join(const SimplicialComplex& k, int r, std::optional<int> s) {
  return index_bound(CertificateKind::kIndexJoinBound, k, r, s);
}

Certificate index_bound_deleted_product(const SimplicialComplex& k, int r, std::optional<int> s) {
  return index_bound(CertificateKind::kIndexProductBound, k, r, s);
}

Certificate certify_join_nonembeddable(const std::vector<SimplicialComplex>& factors, int r,
                                       int d) {
  if (factors.empty()) throw std::invalid_argument("need at least one factor");
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  Certificate c;
  c.kind = CertificateKind::kJoinNonembeddable;
  c.d = d;
  c.s = static_cast<int>(factors.size());
  std::vector<const SimplicialComplex*> ptrs;
  std::int64_t total = 0;
  for (const auto& k : factors) {
    ptrs.push_back(&k);
    total += k.ground_size();
  }
  check_hypotheses(c, ptrs, r, 1, true);

  const std::int64_t s = c.s;
  c.inequality = Inequality{(r - 1) * (d + s + 1) + 1, total, "(r-1)(d+s+1)+1", "m_1 + ... + m_s"};
  check_inequality(c, "dimension inequality");
  if (r == 2) {
    c.schild_form = Inequality{d, total - s - 2, "d", "m_1 + ... + m_s - s - 2"};
    if (c.schild_form->holds() != c.inequality->holds()) {
      throw std::logic_error("r = 2 inequality forms disagree");
    }
  }
  settle(c);
  c.conclusion = "no continuous map of the join K_1 * ... * K_s to R^" + std::to_string(d) +
                 " avoids a global " + std::to_string(r) +
                 "-fold point among pairwise vertex-disjoint faces";
  return c;
}

Certificate certify_single_nonembeddable(const SimplicialComplex& k, int r, int d) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  Certificate c;
  c.kind = CertificateKind::kSingleNonembeddable;
  c.d = d;
  check_hypotheses(c, {&k}, r, 1, false);
  c.inequality = Inequality{static_cast<std::int64_t>(r - 1) * (d + 2) + 1, k.ground_size(),
                            "(r-1)(d+2)+1", "m"};
  check_inequality(c, "vertex count inequality");
  settle(c);
  c.conclusion = "every continuous map K -> R^" + std::to_string(d) + " has " +
                 std::to_string(r) + " pairwise disjoint faces whose images intersect";
  return c;
}

}  // namespace unav

#include <algorithm>

#include "coalescent/evidence.hpp"

namespace coalescent {

std::string to_string(Pi1Verdict v) {
  switch (v) {
    case Pi1Verdict::Trivial: return "Trivial";
    case Pi1Verdict::NontrivialByAbelianization: return "NontrivialByAbelianization";
    case Pi1Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(ContractibilityKind k) {
  switch (k) {
    case ContractibilityKind::Collapsible: return "collapsible";
    case ContractibilityKind::HomotopyTrivial: return "homotopy_trivial";
    case ContractibilityKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(Collapsibility c) {
  switch (c) {
    case Collapsibility::Yes: return "yes";
    case Collapsibility::No: return "no";
    case Collapsibility::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::NoCoalescentContraction: return "NoCoalescentContraction";
    case Conclusion::CoalescentContractionExists: return "CoalescentContractionExists";
    case Conclusion::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string to_string(CollapseStatus s) {
  switch (s) {
    case CollapseStatus::Collapsible: return "Collapsible";
    case CollapseStatus::StuckNoFreeFaces: return "StuckNoFreeFaces";
    case CollapseStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "BudgetExhausted";
}

namespace {

struct CollapseSearch {
  Collapsibility answer = Collapsibility::Unknown;
  std::optional<CollapseSequence> sequence;
};

CollapseSearch search_collapse(const SimplicialComplex& c, const EvidenceBudgets& budgets) {
  CollapseSearch out;
  const CollapseOutcome lex = greedy_collapse(c, CollapseStrategy::Lex);
  if (lex.status == CollapseStatus::Collapsible) {
    out.answer = Collapsibility::Yes;
    out.sequence = lex.sequence;
    return out;
  }
  if (lex.definitive) {
    out.answer = Collapsibility::No;
    return out;
  }
  for (std::size_t k = 0; k < budgets.random_restarts; ++k) {
    const CollapseOutcome r = greedy_collapse(c, CollapseStrategy::Random, budgets.seed + k);
    if (r.status == CollapseStatus::Collapsible) {
      out.answer = Collapsibility::Yes;
      out.sequence = r.sequence;
      return out;
    }
  }
  const CollapseOutcome full = exhaustive_collapse(c, std::max<std::size_t>(1, budgets.collapse_nodes));
  if (full.status == CollapseStatus::Collapsible) {
    out.answer = Collapsibility::Yes;
    out.sequence = full.sequence;
  } else if (full.definitive) {
    out.answer = Collapsibility::No;
  }
  return out;
}

}  // namespace

ContractibilityEvidence contractibility_evidence(const SimplicialComplex& c,
                                                 const EvidenceBudgets& budgets) {
  ContractibilityEvidence ev;
  if (c.empty()) return ev;
  CollapseSearch search = search_collapse(c, budgets);
  ev.collapsible = search.answer;
  ev.collapse = std::move(search.sequence);
  ev.homology = homology(c);
  if (ev.collapsible == Collapsibility::Yes) {
    ev.kind = ContractibilityKind::Collapsible;
    return ev;
  }
  if (census(c).connected) {
    const auto simplified = simplify_presentation(pi1_presentation(c, c.vertices().front()),
                                                  std::max<std::size_t>(1, budgets.pi1_steps));
    ev.pi1 = simplified.verdict;
  }
  // For complexes of dimension <= 2, a trivial fundamental group plus trivial
  // reduced homology gives a homotopy equivalence to a point.
  if (c.dim() <= 2 && ev.homology.trivial() && ev.pi1 == Pi1Verdict::Trivial) {
    ev.kind = ContractibilityKind::HomotopyTrivial;
  }
  return ev;
}

Verdict coalescence_verdict(const SimplicialComplex& c, const EvidenceBudgets& budgets) {
  Verdict v;
  v.star_disk = star_disk_report(c);
  v.star_disk_all = v.star_disk.all_hold;
  v.free_face_count = free_faces(c).size();
  v.evidence = contractibility_evidence(c, budgets);
  v.collapsible = v.evidence.collapsible;
  v.contractible_evidence = v.evidence.kind;
  if (v.collapsible == Collapsibility::Yes) {
    v.witness = v.evidence.collapse;
    v.conclusion = Conclusion::CoalescentContractionExists;
    v.payload = "a collapse to a vertex (" + std::to_string(v.witness->pairs.size()) +
                " elementary collapses) yields a coalescent contraction with opening time 0";
  } else if (v.star_disk_all && v.contractible_evidence != ContractibilityKind::Inconclusive) {
    v.conclusion = Conclusion::NoCoalescentContraction;
    v.payload = "every contraction has opening time > 0, so no contraction is coalescent";
  } else {
    v.conclusion = Conclusion::Inconclusive;
    const auto failures = v.star_disk.failures();
    if (!v.star_disk_all) {
      std::string where;
      for (const auto& f : failures) {
        if (!where.empty()) where += " ";
        where += c.label(f.point);
      }
      v.payload = "star-disk fails at " + std::to_string(failures.size()) +
                  " point(s): " + where;
    } else {
      v.payload = "no contractibility evidence";
    }
  }
  return v;
}

}  // namespace coalescent

#include "mtclab/saturate.hpp"

#include <cstdlib>

#include "mtclab/errors.hpp"
#include "mtclab/rules.hpp"

namespace mtclab {

ProofStep make_step(const std::string& hyp_id, int n, const std::string& rule_id, std::string delta) {
  const Rule& r = find_rule(rule_id);
  return ProofStep{hyp_id + "#" + std::to_string(n), hyp_id, r.id, std::move(delta), r.anchor, r.imported};
}

std::string format_step(const ProofStep& s) {
  return s.id + "\t" + s.parent + "\t" + s.rule_id + "\t" + s.delta + "\t" + (s.imported ? "[imported] " : "") +
         s.anchor;
}

std::string format_trace(const std::vector<ProofStep>& steps) {
  std::string out;
  for (const auto& s : steps) out += format_step(s) + "\n";
  return out;
}

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Refuted: return "refuted";
    case CaseStatus::Pointed: return "pointed";
    case CaseStatus::PerfectOpen: return "perfect-open";
    case CaseStatus::Open: return "open";
    case CaseStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

CaseStatus join_status(const std::vector<CaseNode>& children) {
  bool any_inconclusive = false, any_open = false, any_perfect = false, any_pointed = false;
  for (const auto& c : children) {
    switch (c.status) {
      case CaseStatus::Refuted: break;
      case CaseStatus::Pointed: any_pointed = true; break;
      case CaseStatus::PerfectOpen: any_perfect = true; break;
      case CaseStatus::Open: any_open = true; break;
      case CaseStatus::Inconclusive: any_inconclusive = true; break;
    }
  }
  if (any_inconclusive) return CaseStatus::Inconclusive;
  if (any_open) return CaseStatus::Open;
  if (any_perfect) return CaseStatus::PerfectOpen;
  if (any_pointed) return CaseStatus::Pointed;
  return CaseStatus::Refuted;
}

void collect_trace(const CaseNode& node, std::vector<ProofStep>& out) {
  out.insert(out.end(), node.steps.begin(), node.steps.end());
  for (const auto& c : node.children) collect_trace(c, out);
}

std::size_t count_nodes(const CaseNode& node) {
  std::size_t n = 1;
  for (const auto& c : node.children) n += count_nodes(c);
  return n;
}

std::uint64_t default_step_budget() {
  if (const char* env = std::getenv("MTCLAB_STEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

namespace {

struct Context {
  std::uint64_t budget;
  std::uint64_t used = 0;
};

std::string tuple_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

CaseNode run(Hypothesis h, Context& ctx) {
  CaseNode node;
  int n = 0;
  auto record = [&](const std::string& rule, std::string delta) {
    node.steps.push_back(make_step(h.id, ++n, rule, std::move(delta)));
    return node.steps.back();
  };
  std::optional<ProofStep> pointed_by;
  for (;;) {
    bool progressed = false;
    for (const auto& rule : rule_catalog()) {
      if (!rule.saturating) continue;
      if (ctx.used >= ctx.budget) {
        node.hypothesis = h;
        node.status = CaseStatus::Inconclusive;
        return node;
      }
      ++ctx.used;
      RuleOutcome out = apply_rule(h, rule.id);
      if (out.kind == OutcomeKind::Refutation) {
        node.closing_step = record(rule.id, std::move(out.delta));
        node.hypothesis = h;
        node.status = CaseStatus::Refuted;
        return node;
      }
      if (out.kind == OutcomeKind::Facts) {
        const bool newly_pointed = !h.has(Flag::Pointed) && out.refined.has(Flag::Pointed);
        auto step = record(rule.id, std::move(out.delta));
        if (newly_pointed) pointed_by = step;
        std::string id = h.id;
        h = std::move(out.refined);
        h.id = id;
        progressed = true;
        break;
      }
    }
    if (!progressed) break;
  }
  node.hypothesis = h;
  if (h.has(Flag::Pointed)) {
    node.status = CaseStatus::Pointed;
    node.closing_step = pointed_by;
    return node;
  }

  struct Field {
    const char* name;
    Domain Hypothesis::*member;
  };
  static const Field fields[] = {
      {"G", &Hypothesis::g_order}, {"G_ad", &Hypothesis::g_ad_order}, {"rank_ad", &Hypothesis::rank_ad}};
  for (const auto& f : fields) {
    const Domain& d = h.*(f.member);
    if (!d.is_finite() || d.values().size() < 2) continue;
    record("SPLIT", std::string(f.name) + " ∈ " + d.to_string());
    for (auto v : d.values()) {
      Hypothesis child = h;
      child.*(f.member) = Domain::exactly(v);
      child.id = h.id + "/" + f.name + "=" + std::to_string(v);
      node.children.push_back(run(std::move(child), ctx));
    }
    node.status = join_status(node.children);
    return node;
  }
  if (h.component_ranks && h.component_ranks->size() > 1) {
    std::string all;
    for (const auto& c : *h.component_ranks) all += (all.empty() ? "" : ",") + tuple_string(c);
    record("SPLIT", "components ∈ {" + all + "}");
    for (const auto& c : *h.component_ranks) {
      Hypothesis child = h;
      child.component_ranks = std::vector<std::vector<int>>{c};
      child.id = h.id + "/components=" + tuple_string(c);
      node.children.push_back(run(std::move(child), ctx));
    }
    node.status = join_status(node.children);
    return node;
  }
  node.status = CaseStatus::Open;
  return node;
}

}  // namespace

CaseNode saturate(const Hypothesis& h, const SaturateOptions& opts) {
  Context ctx{opts.budget};
  return run(h, ctx);
}

}  // namespace mtclab

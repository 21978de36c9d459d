#include "mtclab/report.hpp"

#include <sstream>

#include "json.hpp"
#include "mtclab/errors.hpp"
#include "mtclab/fp_dims.hpp"
#include "mtclab/subcat.hpp"

namespace mtclab {

namespace {

std::string list(const std::vector<ObjectIndex>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

template <class T>
std::string tuple(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void collect_leaves(const CaseNode& n, std::vector<const CaseNode*>& out) {
  if (n.children.empty()) {
    out.push_back(&n);
    return;
  }
  for (const auto& c : n.children) collect_leaves(c, out);
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "machine") return Format::Machine;
  throw InputError("unknown format '" + std::string(s) + "' (expected text or machine)");
}

std::string render(const Document& doc, Format format) {
  if (format == Format::Machine) {
    nlohmann::ordered_json j;
    j["kind"] = doc.kind;
    j["violations"] = doc.violations;
    auto secs = nlohmann::ordered_json::array();
    for (const auto& s : doc.sections) {
      nlohmann::ordered_json js;
      js["name"] = s.name;
      auto items = nlohmann::ordered_json::array();
      for (const auto& [k, v] : s.items) items.push_back({k, v});
      js["items"] = items;
      secs.push_back(js);
    }
    j["sections"] = secs;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << doc.kind << "\n";
  for (const auto& s : doc.sections) {
    os << "[" << s.name << "]\n";
    for (const auto& [k, v] : s.items) os << "  " << k << (v.empty() ? "" : ": " + v) << "\n";
  }
  return os.str();
}

Document validation_document(const FusionRing& ring) {
  Document d{"validate", {}, false};
  Section s{"violations", {}};
  for (const auto& v : validate_fusion_ring(ring)) s.items.push_back({to_string(v.axiom), tuple(v.witness)});
  d.violations = !s.items.empty();
  Section info{"ring", {{"rank", std::to_string(ring.rank())}, {"mnsd", is_mnsd(ring) ? "yes" : "no"}}};
  d.sections.push_back(std::move(info));
  d.sections.push_back(std::move(s));
  return d;
}

Document analysis_document(const FusionRing& ring) {
  Document d{"analyze", {}, false};
  const auto report = validate_fusion_ring(ring);
  if (!report.empty()) throw InputError("ring fails the fusion axioms; run validate for details");

  const FPDimData dims = fp_dims(ring);
  Section sd{"dims", {}};
  for (int i = 0; i < ring.rank(); ++i) sd.items.push_back({std::to_string(i), dims.dims[static_cast<std::size_t>(i)].to_string()});
  sd.items.push_back({"total", dims.total_dim.to_string()});
  sd.items.push_back({"integral", dims.integral ? "yes" : "no"});
  d.sections.push_back(std::move(sd));

  const PointedPart pt = pointed_subring(ring);
  Section sg{"G(C)", {{"group", pt.group.group.to_string()}, {"members", list(pt.group.members)}}};
  for (std::size_t i = 0; i < pt.group.members.size(); ++i)
    sg.items.push_back({std::to_string(pt.group.members[i]), pt.group.group.format_element(pt.group.coordinates[i])});
  d.sections.push_back(std::move(sg));

  const Grading gr = universal_grading(ring);
  Section su{"U(C)", {{"group", gr.group.to_string()}}};
  for (const auto& comp : gr.components())
    su.items.push_back({gr.group.format_element(gr.deg[static_cast<std::size_t>(comp.front())]), list(comp)});
  d.sections.push_back(std::move(su));

  const Subring ad = adjoint_subring(ring);
  d.sections.push_back({"adjoint", {{"members", list(ad.members)}, {"rank", std::to_string(ad.rank())}}});

  Section st{"stabilizers", {}};
  for (int x = 0; x < ring.rank(); ++x) st.items.push_back({std::to_string(x), list(stabilizer(ring, x))});
  d.sections.push_back(std::move(st));

  const BigG bg = big_G(ring);
  d.sections.push_back(
      {"big_G", {{"members", list(bg.members)}, {"empty_family", bg.empty_family ? "yes" : "no"}}});

  const CentralSeries cs = upper_central_series(ring);
  Section sc{"central_series", {}};
  for (std::size_t i = 0; i < cs.terms.size(); ++i) sc.items.push_back({std::to_string(i), list(cs.terms[i].members)});
  sc.items.push_back({"nilpotent", cs.nilpotent ? "yes" : "no"});
  d.sections.push_back(std::move(sc));
  return d;
}

Document modular_document(const ModularData& md) {
  Document d{"modular-verify", {}, false};
  Section sb{"balancing", {}};
  for (const auto& v : verify_balancing(md))
    sb.items.push_back({v.kind, "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"});
  if (sb.items.empty()) sb.items.push_back({"ok", ""});
  else d.violations = true;
  d.sections.push_back(std::move(sb));

  const bool modular = is_modular(md);
  d.sections.push_back({"modularity", {{"conductor", std::to_string(md.conductor())},
                                       {"modular", modular ? "yes" : "no"}}});
  if (!modular) d.violations = true;

  Section rows{"equal_rows", {}};
  for (const auto& [a, b] : equal_row_detector(md)) rows.items.push_back({std::to_string(a), std::to_string(b)});
  d.sections.push_back(std::move(rows));

  if (!modular) return d;

  Section zw{"zero_witnesses", {}};
  try {
    for (const auto& [x, y] : zero_witnesses(md)) zw.items.push_back({std::to_string(x), std::to_string(y)});
  } catch (const TheoremViolation& e) {
    zw.items.push_back({"violation", e.what()});
    d.violations = true;
  }
  d.sections.push_back(std::move(zw));

  Section ov{"orbit_zeros", {}};
  for (const auto& v : orbit_zero_check(md))
    ov.items.push_back({"s(" + std::to_string(v.x) + "," + std::to_string(v.z) + ") = 0",
                        "s(" + std::to_string(v.hx) + "," + std::to_string(v.z) + ") != 0 with h = " +
                            std::to_string(v.h)});
  if (!ov.items.empty()) d.violations = true;
  d.sections.push_back(std::move(ov));

  Section ci{"centralizers", {}};
  for (const auto& f : check_centralizer_identities(md)) ci.items.push_back({"failed", f});
  if (!ci.items.empty()) d.violations = true;
  d.sections.push_back(std::move(ci));

  const PerfectReport pr = perfect_checks(md);
  Section pc{"perfect_checks", {{"applicable", pr.applicable ? "yes" : "no (" + pr.reason + ")"}}};
  for (const auto& f : pr.failures) pc.items.push_back({"failed", f});
  if (!pr.failures.empty()) d.violations = true;
  d.sections.push_back(std::move(pc));
  return d;
}

Document classification_document(const Classification& c) {
  Document d{"classify", {}, c.verdict != Verdict::Pointed};
  std::string orders;
  for (auto o : c.group_orders) orders += (orders.empty() ? "" : ",") + std::to_string(o);
  d.sections.push_back({"verdict",
                        {{"rank", std::to_string(c.rank)},
                         {"verdict", to_string(c.verdict)},
                         {"partial", c.partial ? "yes" : "no"},
                         {"group_orders", "{" + orders + "}"},
                         {"case_nodes", std::to_string(count_nodes(c.root))},
                         {"steps", std::to_string(c.trace.size())}}});
  Section cases{"cases", {}};
  for (const auto& child : c.root.children) cases.items.push_back({child.hypothesis.id, to_string(child.status)});
  d.sections.push_back(std::move(cases));
  std::vector<const CaseNode*> leaves;
  collect_leaves(c.root, leaves);
  Section open{"open_leaves", {}};
  for (const auto* l : leaves)
    if (l->status != CaseStatus::Refuted && l->status != CaseStatus::Pointed)
      open.items.push_back({l->hypothesis.id, to_string(l->status)});
  d.sections.push_back(std::move(open));
  if (!c.open_witnesses.empty()) {
    Section w{"surviving_dimension_data", {}};
    for (const auto& s : c.open_witnesses) w.items.push_back({"candidate", s});
    d.sections.push_back(std::move(w));
  }
  return d;
}

Document oracle_document(int rank, int bound, const std::vector<std::vector<std::int64_t>>& sols) {
  Document d{"oracle-dims", {}, false};
  d.sections.push_back({"search", {{"rank", std::to_string(rank)},
                                   {"bound", std::to_string(bound)},
                                   {"solutions", std::to_string(sols.size())}}});
  Section s{"solutions", {}};
  for (std::size_t i = 0; i < sols.size(); ++i) s.items.push_back({std::to_string(i), tuple(sols[i])});
  d.sections.push_back(std::move(s));
  return d;
}

}  // namespace mtclab

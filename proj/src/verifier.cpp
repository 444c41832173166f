#include "rcpower/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rcpower/coloring.hpp"
#include "rcpower/errors.hpp"
#include "rcpower/number_theory.hpp"
#include "rcpower/power_graph.hpp"
#include "rcpower/recognizers.hpp"

namespace rcpower {

namespace {
#include "default_catalog.inc"

constexpr std::pair<Claim, std::string_view> kClaimNames[] = {
    {Claim::Thm2_1, "Thm2.1"}, {Claim::Thm3_1, "Thm3.1"},   {Claim::Cor3_6, "Cor3.6"},
    {Claim::Ex2_8, "Ex2.8"},   {Claim::Ex3_2, "Ex3.2"},     {Claim::Ex3_3, "Ex3.3"},
    {Claim::Ex3_5, "Ex3.5"},   {Claim::Prop3_4, "Prop3.4"}, {Claim::Prop3_5, "Prop3.5"},
    {Claim::None, "none"},
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string_view claim_name(Claim c) {
  for (const auto& [claim, name] : kClaimNames) {
    if (claim == c) return name;
  }
  return "?";
}

std::optional<Claim> parse_claim(std::string_view name) {
  for (const auto& [claim, text] : kClaimNames) {
    if (text == name) return claim;
  }
  return std::nullopt;
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      const auto bar = line.find('|', start);
      cols.push_back(trim(std::string_view(line).substr(start, bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    const auto where = "catalog line " + std::to_string(line_no);
    if (cols.size() < 2 || cols.size() > 3 || cols[0].empty()) {
      throw FormatError(where + ": expected 'spec | claim [| rc]'");
    }
    const auto claim = parse_claim(cols[1]);
    if (!claim) throw FormatError(where + ": unknown claim '" + cols[1] + "'");
    CatalogEntry entry{cols[0], *claim, std::nullopt};
    if (cols.size() == 3) {
      try {
        std::size_t used = 0;
        entry.declared_rc = std::stoi(cols[2], &used);
        if (used != cols[2].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw FormatError(where + ": bad rc value '" + cols[2] + "'");
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open catalog '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str());
}

std::vector<CatalogEntry> default_catalog() { return parse_catalog(kDefaultCatalogText); }

GroupFacts compute_facts(const Group& g) {
  GroupFacts f;
  f.order = g.order();
  f.m_g = maximal_involutions(g).size();
  f.cyclic = is_cyclic(g);
  f.nilpotent = is_nilpotent(g);
  f.q8zn = is_q8_times_zn(g);
  f.pnq = analyze_pnq(g).structure.has_value();
  for (auto p : prime_divisors(g.order())) f.sylow.emplace_back(p, count_order_p_subgroups(g, p));
  return f;
}

RcRange expected_rc(const CatalogEntry& entry, const GroupSpec& spec, const GroupFacts& facts) {
  const auto fail = [&](const std::string& why) -> RcRange {
    throw NoApplicableClaim(entry.spec + ": " + std::string(claim_name(entry.claim)) + " " + why);
  };
  const auto point = [](int v) { return RcRange{v, v}; };
  const bool no_max_involutions = facts.m_g == 0;
  const bool some_sp_not_unique = std::any_of(facts.sylow.begin(), facts.sylow.end(),
                                              [](const auto& ps) { return ps.second > 1; });
  if (facts.order < 3) fail("needs |G| >= 3");
  switch (entry.claim) {
    case Claim::Thm2_1:
      if (no_max_involutions) fail("needs maximal involutions");
      return point(facts.m_g <= 2 ? 3 : static_cast<int>(facts.m_g));
    case Claim::Ex2_8:
      if (spec.family == Family::Dihedral) return point(static_cast<int>(spec.params[0] / 2));
      if (spec.family == Family::ElementaryAbelian2 && spec.params[0] >= 2) {
        return point((1 << spec.params[0]) - 1);
      }
      return fail("applies to D:2n and E2:r only");
    case Claim::Thm3_1:
      if (!no_max_involutions) fail("needs M_G empty");
      if (facts.cyclic) return point(is_prime_power(facts.order) ? 1 : 2);
      return RcRange{2, 3};
    case Claim::Cor3_6:
      if (!no_max_involutions || facts.cyclic || !facts.nilpotent) {
        fail("needs a noncyclic nilpotent group with M_G empty");
      }
      return point(facts.q8zn ? 2 : 3);
    case Claim::Ex3_2: {
      const bool bare_q8 = spec.family == Family::Quaternion && spec.params[0] == 8;
      const bool q8_zn = spec.family == Family::DirectProduct && spec.factors.size() == 2 &&
                         spec.factors[0].family == Family::Quaternion &&
                         spec.factors[0].params[0] == 8 && spec.factors[1].family == Family::Cyclic &&
                         spec.factors[1].params[0] % 2 == 1;
      if (!bare_q8 && !q8_zn) fail("applies to Q:8 x Z:n with n odd");
      return point(2);
    }
    case Claim::Ex3_3:
      if (spec.family != Family::Quaternion || spec.params[0] < 12) fail("applies to Q:4n, n >= 3");
      return point(3);
    case Claim::Ex3_5:
      if (spec.family != Family::SemidirectCyclic || spec.params != std::vector<std::uint64_t>{27, 7, 2}) {
        fail("applies to SD:27,7,2");
      }
      return point(2);
    case Claim::Prop3_4:
      if (!facts.pnq) fail("hypotheses do not hold");
      return point(2);
    case Claim::Prop3_5:
      if (facts.cyclic || !no_max_involutions || !some_sp_not_unique) {
        fail("needs noncyclic, M_G empty and some s_p > 1");
      }
      return point(3);
    case Claim::None:
      break;
  }
  return fail("no claim given");
}

RcRange expected_rc(const CatalogEntry& entry) {
  const auto spec = parse_group_spec(entry.spec);
  return expected_rc(entry, spec, compute_facts(build_group(spec)));
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "Pass";
    case Verdict::Fail:
      return "Fail";
    case Verdict::Inconclusive:
      return "Inconclusive";
    case Verdict::Skipped:
      return "Skipped";
  }
  return "?";
}

std::size_t VerificationReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [v](const EntryReport& e) { return e.verdict == v; }));
}

namespace {

void add(std::vector<Check>& checks, std::string name, bool ok, std::string detail = {}) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

// Consequences of the theorems that must hold for the exact value `rc`.
void implication_checks(const GroupFacts& f, int rc, std::vector<Check>& checks) {
  const bool empty_m = f.m_g == 0;
  const bool all_sp_unique =
      std::all_of(f.sylow.begin(), f.sylow.end(), [](const auto& ps) { return ps.second == 1; });
  if (rc == 2) add(checks, "(a) rc = 2 implies every s_p = 1", all_sp_unique);
  if (!empty_m) {
    const int want = f.m_g <= 2 ? 3 : static_cast<int>(f.m_g);
    add(checks, "(b) M_G nonempty implies rc = " + std::to_string(want), rc == want);
  }
  if (empty_m && f.cyclic) {
    const int want = is_prime_power(f.order) ? 1 : 2;
    add(checks, "(c) cyclic with M_G empty implies rc = " + std::to_string(want), rc == want);
  }
  if (empty_m && !f.cyclic) {
    add(checks, "(d) noncyclic with M_G empty implies rc in {2,3}", rc == 2 || rc == 3);
  }
  if (empty_m && !f.cyclic && f.nilpotent) {
    add(checks, "(e) noncyclic nilpotent: rc = 2 iff Q_8 x Z_n", (rc == 2) == f.q8zn.has_value());
  }
  if (empty_m && !f.cyclic && !all_sp_unique) {
    add(checks, "noncyclic, M_G empty, some s_p > 1 implies rc = 3", rc == 3);
  }
  if (f.pnq) add(checks, "p^n q hypotheses imply rc = 2", rc == 2);
}

std::optional<EntryReport> verify_one(const CatalogEntry& entry, const Budget& budget,
                                      std::optional<std::size_t> max_order) {
  EntryReport r;
  r.entry = entry;
  try {
    const auto spec = parse_group_spec(entry.spec);
    const auto g = build_group(spec);
    if (max_order && g.order() > *max_order) return std::nullopt;
    if (g.order() < 3) {
      r.verdict = Verdict::Skipped;
      return r;
    }
    const auto graph = build_power_graph(g);
    const auto& facts = r.facts.emplace(compute_facts(g));

    for (const auto& [p, s] : facts.sylow) {
      add(r.checks, "s_" + std::to_string(p) + " = 1 mod " + std::to_string(p), s % p == 1,
          "s_" + std::to_string(p) + " = " + std::to_string(s));
    }
    const auto pendants = pendant_vertices(graph);
    const auto maximal = maximal_involutions(g);
    add(r.checks, "pendant vertices = maximal involutions",
        std::equal(pendants.begin(), pendants.end(), maximal.begin(), maximal.end()));
    add(r.checks, "complete iff cyclic of prime-power order",
        is_complete(graph) == (facts.cyclic && is_prime_power(g.order())));

    if (entry.claim != Claim::None) {
      try {
        r.expected = expected_rc(entry, spec, facts);
      } catch (const NoApplicableClaim& e) {
        add(r.checks, "claim hypotheses", false, e.what());
      }
    }
    if (entry.declared_rc) {
      const bool agrees = r.expected && r.expected->is_point() && r.expected->low == *entry.declared_rc;
      add(r.checks, "declared rc matches claim", agrees,
          "declared " + std::to_string(*entry.declared_rc));
    }

    const auto& rc = r.rc.emplace(rc_exact(graph, g, budget));
    const auto check = is_rainbow_connected(graph, rc.coloring);
    add(r.checks, "certificate replays", check && replay_certificate(graph, rc.coloring, check.certificate));

    if (rc.exact) implication_checks(facts, *rc.exact, r.checks);

    const bool checks_ok =
        std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.ok; });
    if (!checks_ok) {
      r.verdict = Verdict::Fail;
    } else if (rc.exact) {
      r.verdict = (!r.expected || r.expected->contains(*rc.exact)) ? Verdict::Pass : Verdict::Fail;
    } else {
      const bool consistent =
          !r.expected || (r.expected->low <= rc.upper && rc.lower.value <= r.expected->high);
      r.verdict = consistent ? Verdict::Inconclusive : Verdict::Fail;
    }
  } catch (const std::exception& e) {
    r.error = e.what();
    r.verdict = Verdict::Fail;
  }
  return r;
}

VerificationReport assemble(std::vector<std::optional<EntryReport>>& results) {
  VerificationReport report;
  for (auto& r : results) {
    if (r) report.entries.push_back(std::move(*r));
  }
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const EntryReport& a, const EntryReport& b) { return a.entry.spec < b.entry.spec; });
  return report;
}

}  // namespace

EntryReport verify_entry(const CatalogEntry& entry, const Budget& budget) {
  return *verify_one(entry, budget, std::nullopt);
}

VerificationReport verify_catalog(const std::vector<CatalogEntry>& entries, const Budget& budget,
                                  std::optional<std::size_t> max_order) {
  std::vector<std::optional<EntryReport>> results(entries.size());
  const auto n = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) results[i] = verify_one(entries[i], budget, max_order);
  return assemble(results);
}

VerificationReport verify_catalog_serial(const std::vector<CatalogEntry>& entries,
                                         const Budget& budget, std::optional<std::size_t> max_order) {
  std::vector<std::optional<EntryReport>> results;
  for (const auto& e : entries) results.push_back(verify_one(e, budget, max_order));
  return assemble(results);
}

nlohmann::ordered_json to_json(const EntryReport& entry) {
  nlohmann::ordered_json j;
  if (entry.rc) {
    j = to_json(*entry.rc);
  } else {
    j["group"] = entry.entry.spec;
  }
  j["claim"] = claim_name(entry.entry.claim);
  if (!entry.expected) {
    j["expected"] = nullptr;
  } else if (entry.expected->is_point()) {
    j["expected"] = entry.expected->low;
  } else {
    j["expected"] = {entry.expected->low, entry.expected->high};
  }
  if (entry.facts) {
    j["cyclic"] = entry.facts->cyclic;
    j["nilpotent"] = entry.facts->nilpotent;
    nlohmann::ordered_json sp = nlohmann::ordered_json::object();
    for (const auto& [p, s] : entry.facts->sylow) sp[std::to_string(p)] = s;
    j["s_p"] = sp;
  }
  nlohmann::ordered_json failed = nlohmann::ordered_json::array();
  for (const auto& c : entry.checks) {
    if (!c.ok) failed.push_back(c.detail.empty() ? c.name : c.name + " (" + c.detail + ")");
  }
  j["failed_checks"] = failed;
  if (!entry.error.empty()) j["error"] = entry.error;
  j["verdict"] = verdict_name(entry.verdict);
  return j;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) j.push_back(to_json(e));
  return j;
}

std::string to_table(const VerificationReport& report) {
  std::ostringstream out;
  const auto row = [&out](const std::vector<std::string>& cells) {
    static constexpr int widths[] = {16, 6, 5, 6, 6, 6, 9, 8, 13};
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << cells[i];
      if (i + 1 < cells.size()) {
        out << std::string(std::max<int>(1, widths[i] - static_cast<int>(cells[i].size())), ' ');
      }
    }
    out << '\n';
  };
  row({"group", "order", "|M|", "lower", "upper", "exact", "expected", "claim", "verdict"});
  for (const auto& e : report.entries) {
    std::string expected = "-";
    if (e.expected) {
      expected = e.expected->is_point()
                     ? std::to_string(e.expected->low)
                     : std::to_string(e.expected->low) + ".." + std::to_string(e.expected->high);
    }
    const auto num = [](auto v) { return std::to_string(v); };
    row({e.entry.spec, e.rc ? num(e.rc->order) : "-", e.facts ? num(e.facts->m_g) : "-",
         e.rc ? num(e.rc->lower.value) : "-", e.rc ? num(e.rc->upper) : "-",
         e.rc && e.rc->exact ? num(*e.rc->exact) : "-", expected,
         std::string(claim_name(e.entry.claim)), std::string(verdict_name(e.verdict))});
    for (const auto& c : e.checks) {
      if (!c.ok) out << "    failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
    }
    if (!e.error.empty()) out << "    error: " << e.error << '\n';
  }
  out << "\npass " << report.count(Verdict::Pass) << ", fail " << report.count(Verdict::Fail)
      << ", inconclusive " << report.count(Verdict::Inconclusive) << ", skipped "
      << report.count(Verdict::Skipped) << '\n';
  if (report.count(Verdict::Inconclusive) > 0) {
    out << "INCONCLUSIVE (budget exhausted):";
    for (const auto& e : report.entries) {
      if (e.verdict == Verdict::Inconclusive) out << ' ' << e.entry.spec << ';';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rcpower

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rcpower/group.hpp"
#include "rcpower/solver.hpp"

namespace rcpower {

/// The statement an entry's expected rc comes from.
enum class Claim { Thm2_1, Thm3_1, Cor3_6, Ex2_8, Ex3_2, Ex3_3, Ex3_5, Prop3_4, Prop3_5, None };

/// "Thm2.1", "Ex3.3", ..., "none".
std::string_view claim_name(Claim c);
std::optional<Claim> parse_claim(std::string_view name);

struct CatalogEntry {
  std::string spec;
  Claim claim = Claim::None;
  std::optional<int> declared_rc;  // optional cross-check of the derived value
};

/// One entry per non-blank line: `spec | claim [| rc]`; `#` starts a comment.
/// Throws FormatError.
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::vector<CatalogEntry> load_catalog(const std::string& path);
/// The catalog shipped in data/default_catalog.txt.
std::vector<CatalogEntry> default_catalog();

/// Inclusive range of rc values; a point when low == high.
struct RcRange {
  int low = 0;
  int high = 0;
  bool is_point() const { return low == high; }
  bool contains(int v) const { return low <= v && v <= high; }
  friend bool operator==(const RcRange&, const RcRange&) = default;
};

/// Group-level facts used by expected_rc and the implication suite.
struct GroupFacts {
  std::size_t order = 0;
  std::size_t m_g = 0;
  bool cyclic = false;
  bool nilpotent = false;
  std::optional<std::uint64_t> q8zn;  // odd n when G is Q_8 x Z_n
  bool pnq = false;                   // p^n q two-coloring hypotheses hold
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sylow;  // (p, s_p) for p | |G|
};

GroupFacts compute_facts(const Group& g);

/// The value the governing claim predicts. Throws NoApplicableClaim when the
/// claim is `none` or its hypotheses fail for this group.
RcRange expected_rc(const CatalogEntry& entry, const GroupSpec& spec, const GroupFacts& facts);
RcRange expected_rc(const CatalogEntry& entry);

enum class Verdict { Pass, Fail, Inconclusive, Skipped };
std::string_view verdict_name(Verdict v);

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct EntryReport {
  CatalogEntry entry;
  std::optional<GroupFacts> facts;
  std::optional<RcReport> rc;
  std::optional<RcRange> expected;
  std::vector<Check> checks;
  Verdict verdict = Verdict::Fail;
  std::string error;
};

struct VerificationReport {
  std::vector<EntryReport> entries;  // sorted by spec string

  std::size_t count(Verdict v) const;
  bool has_failures() const { return count(Verdict::Fail) > 0; }
};

/// Verifies one entry: group and graph construction, the order-p subgroup
/// congruence, pendant vertices against maximal involutions, completeness
/// against cyclic prime-power order, rc_exact, the claimed value and the
/// cross-cutting implications. Entries of order < 3 are skipped.
EntryReport verify_entry(const CatalogEntry& entry, const Budget& budget);

/// Entries run in parallel; entries of order > max_order are left out.
VerificationReport verify_catalog(const std::vector<CatalogEntry>& entries, const Budget& budget,
                                  std::optional<std::size_t> max_order = std::nullopt);

/// Single-threaded reference for verify_catalog.
VerificationReport verify_catalog_serial(const std::vector<CatalogEntry>& entries,
                                         const Budget& budget,
                                         std::optional<std::size_t> max_order = std::nullopt);

nlohmann::ordered_json to_json(const EntryReport& entry);
nlohmann::ordered_json to_json(const VerificationReport& report);
std::string to_table(const VerificationReport& report);

}  // namespace rcpower

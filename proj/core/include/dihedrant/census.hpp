#ifndef DIHEDRANT_CENSUS_HPP
#define DIHEDRANT_CENSUS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dihedrant/cayley.hpp"
#include "dihedrant/families.hpp"
#include "dihedrant/symmetry.hpp"

namespace dihedrant {

enum class TheoremClass
{
  TwoArcTransitive,
  CompleteMultipartite,
  NotTwoDistanceTransitive,
  PaleyGraph,  // circulant census only (Prop 2.6(2) second family)
  Counterexample,
  Skipped
};

std::string theorem_class_name(TheoremClass c);

/// One census row per connection set.
struct ClassificationRecord
{
  int n = 0;
  GroupKind group_kind = GroupKind::Dihedral;
  std::string connection_tokens;
  int valency = 0;
  std::optional<int> girth_value;
  std::optional<int> diameter_value;
  GroupOrder aut_order = 1;
  SymmetryProfile profile;
  FamilyLabel family;
  TheoremClass theorem_class = TheoremClass::Skipped;
  int cover_instances = 0;  // nontrivial-kernel covers examined for Lemma 4.1
  bool skipped = false;
  std::string skip_reason;
  std::vector<std::string> violations;  // paper-property failures
};

struct CensusOptions
{
  int n_min = 2;
  int n_max = 10;
  int jobs = 1;
  std::uint64_t budget = 10000000;
  bool allow_skips = false;
  bool isomorphism_dedup = false;  // also count canonical-form classes per n
};

struct CensusSummary
{
  int n_min = 0;
  int n_max = 0;
  std::map<std::string, int> class_counts;
  std::map<int, int> classes_per_n;
  std::map<int, int> iso_classes_per_n;  // filled when isomorphism_dedup
  int records = 0;
  int skipped = 0;
  int counterexamples = 0;
  int violations = 0;
  int cover_instances = 0;
  bool pass = false;
};

struct CensusReport
{
  std::vector<ClassificationRecord> records;  // sorted by (n, tokens)
  CensusSummary summary;
};

/// Classifies one Cayley graph: automorphism group, symmetry profile,
/// family recognition, theorem class, and the paper-property checks
/// (implication chain, girth bridge, Prop 2.7, Lemma 2.12, Lemma 4.1
/// dichotomy with Prop 2.10 cover checks).
ClassificationRecord classify_cayley(const ConnectionSet& s,
                                     std::uint64_t budget = 10000000);

ClassificationRecord classify_dihedrant(const ConnectionSet& s,
                                        std::uint64_t budget = 10000000);

/// Exhaustive dihedrant census: verdict PASS iff zero Counterexample
/// records (and no skipped rows unless allowed).
CensusReport verify_theorem_1_1(const CensusOptions& options);

/// Circulant census against the Prop 2.6 family lists.
CensusReport verify_circulants(const CensusOptions& options);

/// Lemma 4.1 dichotomy findings over a record stream (rebuilds the Cayley
/// structure from the recorded connection sets).
CensusReport check_lemma_4_1(const std::vector<ClassificationRecord>& records,
                             const CensusOptions& options);

/// Runs the dihedrant census and reports only cover-dichotomy results.
CensusReport verify_lemma_4_1(const CensusOptions& options);

/// Newline-delimited record objects followed by one summary object.
void write_records(std::ostream& out, const CensusReport& report);

void write_table(std::ostream& out, const CensusReport& report);

} // namespace dihedrant

#endif

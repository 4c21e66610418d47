#include "dihedrant/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dihedrant/autsearch.hpp"
#include "dihedrant/perm_group.hpp"

namespace dihedrant {

std::string theorem_class_name(TheoremClass c)
{
  switch (c) {
    case TheoremClass::TwoArcTransitive: return "TwoArcTransitive";
    case TheoremClass::CompleteMultipartite: return "CompleteMultipartite";
    case TheoremClass::NotTwoDistanceTransitive: return "NotTwoDistanceTransitive";
    case TheoremClass::PaleyGraph: return "PaleyGraph";
    case TheoremClass::Counterexample: return "COUNTEREXAMPLE";
    case TheoremClass::Skipped: return "SKIPPED";
  }
  return "SKIPPED";
}

namespace {

bool is_multipartite_family(const FamilyLabel& f)
{
  return f.tag == FamilyLabel::Tag::CompleteMultipartite;
}

// Lemma 4.1 dichotomy plus the Prop 2.10 cover checks on every
// nontrivial-kernel cover arising from a minimal block system.
void check_cover_instances(const Graph& g, const GroupSpec& group,
                           const StabilizerChain& aut, ClassificationRecord& rec)
{
  int n2 = g.vertex_count();
  auto gens = aut.strong_generators();

  // right translations by rotations, for the N < R(H) test
  std::vector<Perm> rotations;
  if (group.kind == GroupKind::Dihedral) {
    for (int k = 0; k < group.n; ++k) {
      std::vector<int> images(n2);
      int r = group.index({k, false});
      for (int x = 0; x < n2; ++x)
        images[x] = group.mul(x, r);
      rotations.push_back(Perm(std::move(images)));
    }
  }

  std::set<std::vector<int>> seen_systems;
  for (int j = 1; j < n2; ++j) {
    BlockSystem bs = minimal_block_system(gens, 0, j);
    if (bs.trivial() || !seen_systems.insert(bs.cell_of).second)
      continue;

    StabilizerChain kernel = kernel_of_block_action(aut, bs);
    if (kernel.order() == 1)
      continue;

    QuotientResult q = quotient(g, aut, kernel);
    if (!q.is_cover)
      continue;
    ++rec.cover_instances;

    if (group.kind == GroupKind::Dihedral) {
      // Lemma 4.1: N < R(H), or |N : N with rotations| = 2
      GroupOrder n_order = kernel.order();
      std::uint64_t in_rh = 0, total = 0;
      kernel.for_each_element(
        [&](const Perm& e) {
          ++total;
          for (const Perm& r : rotations) {
            if (e == r) {
              ++in_rh;
              break;
            }
          }
        },
        (std::uint64_t)(4 * n2 + 4));
      bool branch1 = (GroupOrder(in_rh) == n_order) && n_order < GroupOrder(group.n);
      bool branch2 = in_rh > 0 && GroupOrder(2 * in_rh) == n_order;
      if (!branch1 && !branch2)
        rec.violations.push_back("lemma-4.1: cover kernel of order " + n_order.str() +
                                 " with " + std::to_string(in_rh) +
                                 " rotation translations satisfies neither branch");
    }

    // Prop 2.10(1): N is the kernel of the action on the orbit set
    StabilizerChain orbit_kernel =
      kernel_of_block_action(aut, BlockSystem::from_cells(q.orbits, n2));
    if (orbit_kernel.order() != kernel.order())
      rec.violations.push_back("cover-kernel: kernel on orbit set has order " +
                               orbit_kernel.order().str() + ", expected " +
                               kernel.order().str());

    // Prop 2.10(2)/(3) under the induced action
    auto q_gens = induced_action(gens, q.orbits);
    StabilizerChain q_chain =
      StabilizerChain::build((int)q.orbits.size(), q_gens);
    SymmetryProfile qp = compute_profile(q.quotient, q_chain);
    if (rec.profile.arc_transitive != qp.arc_transitive)
      rec.violations.push_back("prop-2.10: arc transitivity differs between cover and quotient");
    if (rec.profile.two_arc_transitive != qp.two_arc_transitive)
      rec.violations.push_back("prop-2.10: 2-arc transitivity differs between cover and quotient");
    if (rec.profile.two_distance_transitive() && !qp.two_distance_transitive())
      rec.violations.push_back("prop-2.10: quotient of a 2-distance transitive cover is not one");
  }
}

void check_paper_properties(const Graph& g, const GroupSpec& group,
                            const StabilizerChain& aut, ClassificationRecord& rec)
{
  const SymmetryProfile& p = rec.profile;
  bool tdt = p.two_distance_transitive();

  if (p.two_arc_transitive && !tdt)
    rec.violations.push_back("implication: 2-arc transitive but not 2-distance transitive");
  if (p.distance_transitive && !tdt)
    rec.violations.push_back("implication: distance transitive but not 2-distance transitive");
  if (p.two_geodesic_transitive && !tdt)
    rec.violations.push_back("implication: 2-geodesic transitive but not 2-distance transitive");

  bool girth_at_least_5 = !rec.girth_value || *rec.girth_value >= 5;
  if (girth_at_least_5 && tdt && !p.two_arc_transitive)
    rec.violations.push_back("girth-bridge: 2-distance transitive with girth >= 5 but not 2-arc transitive");

  int r = rec.valency;
  if (tdt && rec.girth_value == 4 && r >= 3) {
    auto dp = distance_partition(g, 0);
    if ((int)dp.layer(2).size() == r &&
        rec.family != FamilyLabel{FamilyLabel::Tag::CompleteBipartiteMinusMatching, r + 1, 0})
      rec.violations.push_back("prop-2.7: girth 4 with |Gamma_2(u)| = r not recognized as cocktail graph");
  }

  if (tdt && r >= 3 && bipartition(g) &&
      p.vertex_stabilizer_order == GroupOrder(r)) {
    bool ok = rec.family == FamilyLabel{FamilyLabel::Tag::CompleteBipartite, r, r} ||
              rec.family == FamilyLabel{FamilyLabel::Tag::CompleteBipartiteMinusMatching, r + 1, 0};
    if (!ok)
      rec.violations.push_back("lemma-2.12: bipartite with regular vertex stabilizer not K_{r,r} or cocktail");
  }

  if (rec.theorem_class == TheoremClass::CompleteMultipartite &&
      rec.family.a * rec.family.b != g.vertex_count())
    rec.violations.push_back("multipartite-order: mb != |V|");

  if (tdt)
    check_cover_instances(g, group, aut, rec);
}

} // namespace

ClassificationRecord classify_cayley(const ConnectionSet& s, std::uint64_t budget)
{
  ClassificationRecord rec;
  rec.n = s.group.n;
  rec.group_kind = s.group.kind;
  rec.connection_tokens = s.tokens();

  Graph g = cayley_graph(s);
  if (!is_connected(g))
    throw std::invalid_argument("classify_cayley: graph is disconnected");

  rec.valency = (int)s.elements.size();
  rec.girth_value = girth(g);
  rec.diameter_value = diameter(g);

  AutSearchOptions opt;
  opt.seeds = right_regular_rep(s.group);
  opt.max_nodes = budget;
  int first_neighbor = g.vertex_count() > 1 ? g.row(0).next(0) : -1;
  if (first_neighbor >= 0)
    opt.chain_base_prefix = {0, first_neighbor};

  AutGroupResult aut;
  try {
    aut = automorphism_group(g, opt);
  } catch (const BudgetExceeded&) {
    rec.skipped = true;
    rec.skip_reason = "budget";
    rec.theorem_class = TheoremClass::Skipped;
    return rec;
  }

  rec.aut_order = aut.chain.order();
  rec.profile = compute_profile(g, aut.chain);
  rec.family = recognize(g);

  bool tdt = rec.profile.two_distance_transitive();
  if (!tdt) {
    rec.theorem_class = TheoremClass::NotTwoDistanceTransitive;
  } else if (rec.profile.two_arc_transitive) {
    rec.theorem_class = TheoremClass::TwoArcTransitive;
  } else if (is_multipartite_family(rec.family)) {
    rec.theorem_class = TheoremClass::CompleteMultipartite;
  } else if (s.group.kind == GroupKind::Cyclic &&
             rec.family.tag == FamilyLabel::Tag::Paley) {
    rec.theorem_class = TheoremClass::PaleyGraph;
  } else {
    rec.theorem_class = TheoremClass::Counterexample;
  }

  check_paper_properties(g, s.group, aut.chain, rec);
  return rec;
}

ClassificationRecord classify_dihedrant(const ConnectionSet& s, std::uint64_t budget)
{
  if (s.group.kind != GroupKind::Dihedral)
    throw std::invalid_argument("classify_dihedrant: dihedral group required");
  return classify_cayley(s, budget);
}

namespace {

std::vector<ClassificationRecord> run_pool(const std::vector<ConnectionSet>& sets,
                                           const CensusOptions& options)
{
  std::vector<ClassificationRecord> records(sets.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= sets.size())
        return;
      try {
        records[i] = classify_cayley(sets[i], options.budget);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        return;
      }
    }
  };

  int jobs = std::max(1, options.jobs);
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t)
    threads.emplace_back(worker);
  worker();
  for (auto& t : threads)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
  return records;
}

void finalize_report(CensusReport& report, const CensusOptions& options)
{
  std::sort(report.records.begin(), report.records.end(),
            [](const ClassificationRecord& a, const ClassificationRecord& b) {
              if (a.n != b.n)
                return a.n < b.n;
              return a.connection_tokens < b.connection_tokens;
            });

  CensusSummary& s = report.summary;
  s.n_min = options.n_min;
  s.n_max = options.n_max;
  s.records = (int)report.records.size();
  for (const auto& rec : report.records) {
    ++s.class_counts[theorem_class_name(rec.theorem_class)];
    ++s.classes_per_n[rec.n];
    s.skipped += rec.skipped ? 1 : 0;
    s.counterexamples += rec.theorem_class == TheoremClass::Counterexample ? 1 : 0;
    s.violations += (int)rec.violations.size();
    s.cover_instances += rec.cover_instances;
  }
  s.pass = s.counterexamples == 0 && s.violations == 0 &&
           (s.skipped == 0 || options.allow_skips);
}

void add_isomorphism_counts(CensusReport& report, GroupKind kind,
                            const CensusOptions& options)
{
  if (!options.isomorphism_dedup)
    return;
  std::map<int, std::set<std::vector<std::uint8_t>>> forms;
  for (const auto& rec : report.records) {
    if (rec.skipped)
      continue;
    GroupSpec group = kind == GroupKind::Dihedral ? GroupSpec::dihedral(rec.n)
                                                  : GroupSpec::cyclic(rec.n);
    ConnectionSet s = parse_connection_tokens(group, rec.connection_tokens);
    forms[rec.n].insert(canonical_form(cayley_graph(s), options.budget));
  }
  for (auto& [n, set] : forms)
    report.summary.iso_classes_per_n[n] = (int)set.size();
}

} // namespace

CensusReport verify_theorem_1_1(const CensusOptions& options)
{
  if (options.n_min < 2 || options.n_min > options.n_max)
    throw std::invalid_argument("verify_theorem_1_1: need 2 <= n_min <= n_max");

  std::vector<ConnectionSet> sets;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    for (auto& s : list_connection_sets(GroupSpec::dihedral(n), EnumerationMode::UpToEquivalence))
      sets.push_back(std::move(s));
  }

  CensusReport report;
  report.records = run_pool(sets, options);
  finalize_report(report, options);
  add_isomorphism_counts(report, GroupKind::Dihedral, options);
  return report;
}

CensusReport verify_circulants(const CensusOptions& options)
{
  if (options.n_min < 3 || options.n_min > options.n_max)
    throw std::invalid_argument("verify_circulants: need 3 <= n_min <= n_max");

  std::vector<ConnectionSet> sets;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    for (auto& s : list_connection_sets(GroupSpec::cyclic(n), EnumerationMode::UpToEquivalence))
      sets.push_back(std::move(s));
  }

  CensusReport report;
  report.records = run_pool(sets, options);

  // Prop 2.6 conformance
  for (auto& rec : report.records) {
    if (rec.skipped)
      continue;
    auto tag = rec.family.tag;
    if (rec.theorem_class == TheoremClass::TwoArcTransitive) {
      bool allowed = tag == FamilyLabel::Tag::Complete || tag == FamilyLabel::Tag::Cycle ||
                     (tag == FamilyLabel::Tag::CompleteBipartite && rec.family.a == rec.family.b) ||
                     tag == FamilyLabel::Tag::CompleteBipartiteMinusMatching;
      if (!allowed)
        rec.violations.push_back("prop-2.6: 2-arc transitive circulant outside the allowed list: " +
                                 rec.family.to_string());
    } else if (rec.profile.two_distance_transitive()) {
      bool allowed = tag == FamilyLabel::Tag::CompleteMultipartite ||
                     tag == FamilyLabel::Tag::Paley;
      if (!allowed)
        rec.violations.push_back(
          "prop-2.6: 2-distance-not-2-arc transitive circulant outside the allowed list: " +
          rec.family.to_string());
    }
  }

  finalize_report(report, options);
  add_isomorphism_counts(report, GroupKind::Cyclic, options);
  return report;
}

CensusReport check_lemma_4_1(const std::vector<ClassificationRecord>& records,
                             const CensusOptions& options)
{
  CensusReport report;
  for (const auto& rec : records) {
    if (rec.skipped || rec.group_kind != GroupKind::Dihedral ||
        !rec.profile.two_distance_transitive())
      continue;
    ConnectionSet s =
      parse_connection_tokens(GroupSpec::dihedral(rec.n), rec.connection_tokens);
    report.records.push_back(classify_dihedrant(s, options.budget));
  }
  finalize_report(report, options);
  return report;
}

CensusReport verify_lemma_4_1(const CensusOptions& options)
{
  CensusReport census = verify_theorem_1_1(options);
  CensusReport report;
  report.records = std::move(census.records);
  std::erase_if(report.records, [](const ClassificationRecord& rec) {
    return !rec.skipped && !rec.profile.two_distance_transitive();
  });
  finalize_report(report, options);
  return report;
}

namespace {

nlohmann::json record_json(const ClassificationRecord& rec)
{
  nlohmann::json j;
  j["n"] = rec.n;
  j["group"] = rec.group_kind == GroupKind::Dihedral ? "D" : "Z";
  j["s"] = rec.connection_tokens;
  if (rec.skipped) {
    j["skipped"] = true;
    j["skip_reason"] = rec.skip_reason;
    j["class"] = theorem_class_name(rec.theorem_class);
    return j;
  }
  j["skipped"] = false;
  j["valency"] = rec.valency;
  if (rec.girth_value)
    j["girth"] = *rec.girth_value;
  else
    j["girth"] = nullptr;
  if (rec.diameter_value)
    j["diameter"] = *rec.diameter_value;
  else
    j["diameter"] = nullptr;
  j["aut_order"] = rec.aut_order.str();
  j["vertex_transitive"] = rec.profile.vertex_transitive;
  j["edge_transitive"] = rec.profile.edge_transitive;
  j["arc_transitive"] = rec.profile.arc_transitive;
  j["two_arc_transitive"] = rec.profile.two_arc_transitive;
  j["two_distance_transitive"] = rec.profile.two_distance_transitive();
  j["distance_transitive"] = rec.profile.distance_transitive;
  j["two_geodesic_transitive"] = rec.profile.two_geodesic_transitive;
  j["locally_two_distance_transitive"] = rec.profile.locally_two_distance_transitive;
  std::vector<bool> sdt(rec.profile.s_distance_transitive.begin(),
                        rec.profile.s_distance_transitive.end());
  j["s_distance_transitive"] = sdt;
  j["family"] = rec.family.to_string();
  j["class"] = theorem_class_name(rec.theorem_class);
  j["cover_instances"] = rec.cover_instances;
  j["violations"] = rec.violations;
  return j;
}

} // namespace

void write_records(std::ostream& out, const CensusReport& report)
{
  for (const auto& rec : report.records)
    out << record_json(rec).dump() << '\n';

  const CensusSummary& s = report.summary;
  nlohmann::json j;
  j["summary"]["n_range"] = {s.n_min, s.n_max};
  j["summary"]["counts_per_class"] = s.class_counts;
  nlohmann::json per_n;
  for (const auto& [n, count] : s.classes_per_n)
    per_n[std::to_string(n)] = count;
  j["summary"]["classes_per_n"] = per_n;
  if (!s.iso_classes_per_n.empty()) {
    nlohmann::json iso;
    for (const auto& [n, count] : s.iso_classes_per_n)
      iso[std::to_string(n)] = count;
    j["summary"]["isomorphism_classes_per_n"] = iso;
  }
  j["summary"]["records"] = s.records;
  j["summary"]["skipped"] = s.skipped;
  j["summary"]["counterexamples"] = s.counterexamples;
  j["summary"]["violations"] = s.violations;
  j["summary"]["cover_instances"] = s.cover_instances;
  j["summary"]["verdict"] = s.pass ? "PASS" : "FAIL";
  out << j.dump() << '\n';
}

void write_table(std::ostream& out, const CensusReport& report)
{
  out << std::left << std::setw(5) << "n" << std::setw(34) << "S" << std::setw(5) << "val"
      << std::setw(7) << "girth" << std::setw(14) << "|Aut|" << std::setw(5) << "2dt"
      << std::setw(5) << "2at" << std::setw(22) << "family" << "class" << '\n';
  for (const auto& rec : report.records) {
    if (rec.skipped) {
      out << std::left << std::setw(5) << rec.n << std::setw(34) << rec.connection_tokens
          << "SKIPPED(" << rec.skip_reason << ")\n";
      continue;
    }
    out << std::left << std::setw(5) << rec.n << std::setw(34) << rec.connection_tokens
        << std::setw(5) << rec.valency << std::setw(7)
        << (rec.girth_value ? std::to_string(*rec.girth_value) : "inf") << std::setw(14)
        << rec.aut_order.str() << std::setw(5)
        << (rec.profile.two_distance_transitive() ? "yes" : "no") << std::setw(5)
        << (rec.profile.two_arc_transitive ? "yes" : "no") << std::setw(22)
        << rec.family.to_string() << theorem_class_name(rec.theorem_class) << '\n';
    for (const auto& v : rec.violations)
      out << "     VIOLATION: " << v << '\n';
  }
  const CensusSummary& s = report.summary;
  out << "-- n " << s.n_min << ".." << s.n_max << ": " << s.records << " records";
  for (const auto& [name, count] : s.class_counts)
    out << ", " << name << "=" << count;
  if (s.cover_instances)
    out << ", cover_instances=" << s.cover_instances;
  if (s.skipped)
    out << ", skipped=" << s.skipped;
  if (!s.iso_classes_per_n.empty()) {
    out << ", iso_classes=";
    bool first = true;
    for (const auto& [n, count] : s.iso_classes_per_n) {
      out << (first ? "" : "/") << count;
      first = false;
    }
  }
  out << " -> " << (s.pass ? "PASS" : "FAIL") << '\n';
}

} // namespace dihedrant

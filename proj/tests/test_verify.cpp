// Claim-verification layer: every claim id must pass over the default
// catalog, negative controls must be visible as witness-carrying instances,
// and reports must be deterministic.  Frozen expectations below are either
// classical arithmetic recomputed in comments or witness identities already
// oracle-checked in the lattice and predicates suites.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "hamiltonia/verify.hpp"

using namespace hamiltonia;

namespace {

Workspace& shared_workspace() {
  static Workspace ws(default_catalog());
  return ws;
}

const ClaimInstance* find_instance(const ClaimReport& r, const std::string& group,
                                   const std::string& status) {
  for (const ClaimInstance& i : r.instances)
    if (i.group == group && i.status == status) return &i;
  return nullptr;
}

std::vector<std::string> groups_with_status(const ClaimReport& r, const std::string& status) {
  std::vector<std::string> out;
  for (const ClaimInstance& i : r.instances)
    if (i.status == status) out.push_back(i.group);
  return out;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("claim ids round-trip through names and parse") {
  REQUIRE(all_claims.size() == 15);
  for (ClaimId c : all_claims) {
    auto back = parse_claim(claim_name(c));
    REQUIRE(back.has_value());
    CHECK(*back == c);
    CHECK(std::string(claim_description(c)).size() > 20);
  }
  CHECK_FALSE(parse_claim("T9.9").has_value());
  CHECK_FALSE(parse_claim("t3.6").has_value());
  CHECK_FALSE(parse_claim("").has_value());
}

TEST_CASE("every claim passes over the default catalog") {
  Workspace& ws = shared_workspace();
  for (ClaimId c : all_claims) {
    ClaimReport r = check_claim(c, ws);
    INFO(report_to_text(r));
    CHECK(r.pass);
    CHECK(r.claim == c);
    REQUIRE_FALSE(r.instances.empty());
    // A pass verdict must never hide a fail instance, and every claim must
    // have at least one non-skip instance or an explicit vacuity note.
    bool any_checked = false;
    for (const ClaimInstance& i : r.instances) {
      CHECK(i.status != "fail");
      if (i.status != "skip") any_checked = true;
    }
    CHECK(any_checked);  // no claim is vacuous on the default catalog
  }
}

TEST_CASE("T3.6: insoluble para-nilpotent-Hamiltonian groups are exactly A5 and SL(2,5)") {
  ClaimReport r = check_claim(ClaimId::T3_6, shared_workspace());
  REQUIRE(r.pass);

  std::vector<std::string> para_members, controls;
  for (const ClaimInstance& i : r.instances) {
    if (i.status != "pass") continue;
    if (contains(i.note, "para-nilpotent-Hamiltonian; recognized"))
      para_members.push_back(i.group);
    else
      controls.push_back(i.group);
  }
  CHECK(para_members == std::vector<std::string>{"A5", "SL(2,5)"});
  CHECK(controls == std::vector<std::string>{"C2 x A5", "S5", "PSL(2,7)"});

  // Negative controls carry concrete witness subgroups: a dihedral of order
  // 12 inside S5 and C2 x A5, and an S4 inside PSL(2,7) (its lattice has no
  // order-12 violator because PSL(2,7) has no element of order 6).
  const ClaimInstance* s5 = find_instance(r, "S5", "pass");
  REQUIRE(s5 != nullptr);
  CHECK(contains(s5->witness, "order 12"));
  CHECK(contains(s5->witness, "D12"));
  const ClaimInstance* za5 = find_instance(r, "C2 x A5", "pass");
  REQUIRE(za5 != nullptr);
  CHECK(contains(za5->witness, "order 12"));
  const ClaimInstance* psl = find_instance(r, "PSL(2,7)", "pass");
  REQUIRE(psl != nullptr);
  CHECK(contains(psl->witness, "order 24"));
  CHECK(contains(psl->witness, "S4"));

  // Soluble groups are skipped, and the skip survives into the report.
  const ClaimInstance* c6 = find_instance(r, "C6", "skip");
  REQUIRE(c6 != nullptr);
  CHECK(c6->note == "soluble");
}

TEST_CASE("C3.7: biminimal non-nilpotent classification matches T3.6's members") {
  ClaimReport r = check_claim(ClaimId::C3_7, shared_workspace());
  REQUIRE(r.pass);
  std::vector<std::string> members;
  for (const ClaimInstance& i : r.instances)
    if (i.status == "pass" && contains(i.note, "biminimal non-nilpotent; recognized"))
      members.push_back(i.group);
  CHECK(members == std::vector<std::string>{"A5", "SL(2,5)"});
}

TEST_CASE("C3.8: only A5 is insoluble biminimal non-abelian; SL(2,5) fails via SL(2,3)") {
  ClaimReport r = check_claim(ClaimId::C3_8, shared_workspace());
  REQUIRE(r.pass);
  std::vector<std::string> members;
  for (const ClaimInstance& i : r.instances)
    if (i.status == "pass" && contains(i.note, "biminimal non-abelian; recognized"))
      members.push_back(i.group);
  CHECK(members == std::vector<std::string>{"A5"});

  // SL(2,5) is consistent (not biminimal non-abelian) because its SL(2,3)
  // subgroup is neither abelian nor minimal non-abelian (it contains Q8).
  const ClaimInstance* sl25 = find_instance(r, "SL(2,5)", "pass");
  REQUIRE(sl25 != nullptr);
  CHECK(contains(sl25->witness, "SL(2,3)"));
  CHECK(contains(sl25->witness, "order 24"));
}

TEST_CASE("T3.3: the Frattini-quotient hypothesis admits exactly A5 and SL(2,5)") {
  ClaimReport r = check_claim(ClaimId::T3_3, shared_workspace());
  REQUIRE(r.pass);
  CHECK(groups_with_status(r, "pass") == std::vector<std::string>{"A5", "SL(2,5)"});

  // S5 and C2 x A5 have trivial Frattini subgroups, so their quotients are
  // themselves - order 120, not A5.  The skip reason must say so: they are
  // excluded by the quotient test, not by the para test.
  for (const char* label : {"S5", "C2 x A5"}) {
    const ClaimInstance* i = find_instance(r, label, "skip");
    REQUIRE(i != nullptr);
    CHECK(contains(i->note, "Frattini quotient"));
    CHECK(contains(i->note, "order 120"));
  }

  // Phi(SL(2,5)) has order 2 and equals the center.
  const ClaimInstance* sl25 = find_instance(r, "SL(2,5)", "pass");
  REQUIRE(sl25 != nullptr);
  CHECK(contains(sl25->note, "Phi(G) has order 2"));
  CHECK(contains(sl25->note, "equals the center"));
  const ClaimInstance* a5 = find_instance(r, "A5", "pass");
  REQUIRE(a5 != nullptr);
  CHECK(contains(a5->note, "Phi(G) has order 1"));
}

TEST_CASE("T3.10: every insoluble catalog group has a non-normal non-nilpotent subgroup") {
  ClaimReport r = check_claim(ClaimId::T3_10, shared_workspace());
  REQUIRE(r.pass);
  std::vector<std::string> insoluble = groups_with_status(r, "pass");
  CHECK(insoluble ==
        std::vector<std::string>{"A5", "C2 x A5", "S5", "SL(2,5)", "PSL(2,7)"});
  for (const ClaimInstance& i : r.instances)
    if (i.status == "pass") CHECK_FALSE(i.witness.empty());
  // A5's first meta violator in canonical order is an S3 (order 6).
  const ClaimInstance* a5 = find_instance(r, "A5", "pass");
  REQUIRE(a5 != nullptr);
  CHECK(contains(a5->witness, "order 6"));
  CHECK(contains(a5->witness, "S3"));
}

TEST_CASE("T2.1: Dickson audit matches the frozen clause table") {
  ClaimReport r = check_claim(ClaimId::T2_1, shared_workspace());
  REQUIRE(r.pass);
  // 3 values of q, 5 clauses each.
  CHECK(r.instances.size() == 15);
  CHECK(r.scope == std::vector<std::string>{"PSL(2,4)", "PSL(2,5)", "PSL(2,7)"});
  for (const ClaimInstance& i : r.instances) CHECK(i.status == "pass");

  auto clause_note = [&](const std::string& group, const std::string& tag) {
    for (const ClaimInstance& i : r.instances)
      if (i.group == group && contains(i.note, tag)) return i.note;
    return std::string();
  };
  // d = gcd(q-1,2): q=4 -> dihedral orders 6 and 10; q=5 -> 4 and 6; q=7 -> 6 and 8.
  CHECK(contains(clause_note("PSL(2,4)", "clause (i)"), "orders 6 and 10"));
  CHECK(contains(clause_note("PSL(2,5)", "clause (i)"), "orders 4 and 6"));
  CHECK(contains(clause_note("PSL(2,7)", "clause (i)"), "orders 6 and 8"));
  // q(q-1)/d: 12, 10, 21.
  CHECK(contains(clause_note("PSL(2,4)", "clause (ii)"), "order 12"));
  CHECK(contains(clause_note("PSL(2,5)", "clause (ii)"), "order 10"));
  CHECK(contains(clause_note("PSL(2,7)", "clause (ii)"), "order 21"));
  // S4 exactly when q^2 = 1 mod 16: 16 -> 0, 25 -> 9, 49 -> 1.
  CHECK(contains(clause_note("PSL(2,4)", "(iv) S4"), "expected absent, found absent"));
  CHECK(contains(clause_note("PSL(2,5)", "(iv) S4"), "expected absent, found absent"));
  CHECK(contains(clause_note("PSL(2,7)", "(iv) S4"), "expected present, found present"));
  // A5 exactly when q(q^2-1) = 0 mod 5: 60, 120 yes; 336 = 67*5+1 no.
  CHECK(contains(clause_note("PSL(2,4)", "(v) A5"), "expected present, found present"));
  CHECK(contains(clause_note("PSL(2,5)", "(v) A5"), "expected present, found present"));
  CHECK(contains(clause_note("PSL(2,7)", "(v) A5"), "expected absent, found absent"));
  // A4 present for all three (p != 2 for q in {5,7}; n = 2 even for q = 4).
  for (const char* g : {"PSL(2,4)", "PSL(2,5)", "PSL(2,7)"})
    CHECK(contains(clause_note(g, "(iii) A4"), "expected present, found present"));

  CHECK_THROWS_AS(dickson_audit(6), parse_error);
  CHECK_THROWS_AS(dickson_audit(9), parse_error);
}

TEST_CASE("T2.2: Suzuki Hall-subgroup arithmetic for m in {1,2,3}") {
  ClaimReport r = check_claim(ClaimId::T2_2, shared_workspace());
  REQUIRE(r.pass);
  CHECK(r.scope == std::vector<std::string>{"Sz(8)", "Sz(32)", "Sz(128)"});
  REQUIRE(r.instances.size() == 3);
  // (13)(5) = 65 = 8^2+1; (41)(25) = 1025 = 32^2+1; (145)(113) = 16385 = 128^2+1.
  CHECK(contains(r.instances[0].note, "(13)(5) = 65"));
  CHECK(contains(r.instances[1].note, "(41)(25) = 1025"));
  CHECK(contains(r.instances[2].note, "(145)(113) = 16385"));
  REQUIRE_FALSE(r.notes.empty());
  CHECK(contains(r.notes.front(), "metadata"));

  CHECK_THROWS_AS(suzuki_arithmetic(0), parse_error);
  CHECK_THROWS_AS(suzuki_arithmetic(99), parse_error);
}

TEST_CASE("T2.3: catalog minimal simple groups are A5 and PSL(2,7)") {
  ClaimReport r = check_claim(ClaimId::T2_3, shared_workspace());
  REQUIRE(r.pass);
  CHECK(groups_with_status(r, "pass") == std::vector<std::string>{"A5", "PSL(2,7)"});
  // S5, C2 x A5 and SL(2,5) are simple-adjacent but not simple, so they skip.
  for (const char* label : {"S5", "C2 x A5", "SL(2,5)"}) {
    const ClaimInstance* i = find_instance(r, label, "skip");
    REQUIRE(i != nullptr);
    CHECK(i->note == "not a minimal simple group");
  }
}

TEST_CASE("L3.1: nonabelian pq Frattini quotients force the cyclic semidirect shape") {
  ClaimReport r = check_claim(ClaimId::L3_1, shared_workspace());
  REQUIRE(r.pass);
  std::vector<std::string> hits = groups_with_status(r, "pass");

  // D18/Phi = D18/C3 of order 6 is nonabelian; C25:C4@2 has Phi of order 10
  // with quotient D10.  Both must appear, with cyclic Sylow structure noted.
  for (const char* label : {"D18", "C25:C4@2", "Q12", "Q20", "C7:C3@3", "C3:C8@2"})
    CHECK(std::find(hits.begin(), hits.end(), label) != hits.end());

  const ClaimInstance* d18 = find_instance(r, "D18", "pass");
  REQUIRE(d18 != nullptr);
  CHECK(contains(d18->note, "S3"));
  CHECK(contains(d18->note, "Sylow 3-subgroup (order 9) cyclic and normal"));
  CHECK(contains(d18->note, "Sylow 2-subgroup (order 2) cyclic"));

  const ClaimInstance* q100 = find_instance(r, "C25:C4@2", "pass");
  REQUIRE(q100 != nullptr);
  CHECK(contains(q100->note, "Sylow 5-subgroup (order 25) cyclic and normal"));
  CHECK(contains(q100->note, "Sylow 2-subgroup (order 4) cyclic"));

  // A4's Frattini quotient is A4 itself (order 12, not pq): hypothesis unmet.
  const ClaimInstance* a4 = find_instance(r, "A4", "skip");
  REQUIRE(a4 != nullptr);
  CHECK(contains(a4->note, "order 12"));
  // C15's quotient has order 15 = 3*5 but is abelian: also unmet.
  const ClaimInstance* c15 = find_instance(r, "C15", "skip");
  REQUIRE(c15 != nullptr);
  CHECK(contains(c15->note, "abelian"));
}

TEST_CASE("L3.2: Frattini monotonicity through minimal non-nilpotent layers") {
  ClaimReport r = check_claim(ClaimId::L3_2, shared_workspace());
  REQUIRE(r.pass);

  // SL(2,5): Phi = Z of order 2; the minimal non-nilpotent subgroups above it
  // fall into three conjugacy classes - Q12 (10 copies), Q20 (6) and SL(2,3)
  // (5) - whose Phi-quotients S3, D10, A4 are again minimal non-nilpotent;
  // each has Phi(H) containing Z.
  const ClaimInstance* sl25 = find_instance(r, "SL(2,5)", "pass");
  REQUIRE(sl25 != nullptr);
  CHECK(contains(sl25->note, "21 qualifying H in 3 conjugacy classes"));
  CHECK(contains(sl25->note, "Q12"));
  CHECK(contains(sl25->note, "Q20"));
  CHECK(contains(sl25->note, "SL(2,3)"));

  // S3 qualifies with H = G (Phi trivial, S3/1 = S3 minimal non-nilpotent).
  const ClaimInstance* s3 = find_instance(r, "S3", "pass");
  REQUIRE(s3 != nullptr);
  CHECK(contains(s3->note, "qualifying H"));

  // Purely nilpotent groups have no minimal non-nilpotent subgroup at all.
  const ClaimInstance* q8 = find_instance(r, "Q8", "skip");
  REQUIRE(q8 != nullptr);
}

TEST_CASE("L3.4: among minimal simple groups only A5 is biminimal non-nilpotent") {
  ClaimReport r = check_claim(ClaimId::L3_4, shared_workspace());
  REQUIRE(r.pass);
  CHECK(groups_with_status(r, "pass") == std::vector<std::string>{"A5", "PSL(2,7)"});
  const ClaimInstance* psl = find_instance(r, "PSL(2,7)", "pass");
  REQUIRE(psl != nullptr);
  CHECK(contains(psl->witness, "S4"));
  // The unbuildable branches must be declared, not silently dropped.
  bool budget_note = false, narrative_note = false;
  for (const std::string& n : r.notes) {
    if (contains(n, "PSL(2,8)")) budget_note = true;
    if (contains(n, "not machine-checked")) narrative_note = true;
  }
  CHECK(budget_note);
  CHECK(narrative_note);
}

TEST_CASE("T2.4 / L4.5 / T4.8 / L5.4: property suites hold with zero violations") {
  Workspace& ws = shared_workspace();

  ClaimReport t24 = check_claim(ClaimId::T2_4, ws);
  REQUIRE(t24.pass);
  CHECK(groups_with_status(t24, "fail").empty());
  CHECK(groups_with_status(t24, "pass").size() >= 40);  // all nilpotent catalog groups
  const ClaimInstance* s4 = find_instance(t24, "S4", "skip");
  REQUIRE(s4 != nullptr);

  ClaimReport l45 = check_claim(ClaimId::L4_5, ws);
  REQUIRE(l45.pass);
  // Instances are (group, family) pairs; the para groups of both families
  // appear.  A5 under the nilpotent family has non-normal minimal
  // non-nilpotent subgroups to check.
  const ClaimInstance* a5n = find_instance(l45, "A5 [nilpotent]", "pass");
  REQUIRE(a5n != nullptr);
  CHECK_FALSE(contains(a5n->note, " 0 non-normal"));
  CHECK(find_instance(l45, "S3 [abelian]", "pass") != nullptr);
  CHECK(find_instance(l45, "S5 [nilpotent]", "skip") != nullptr);

  ClaimReport t48 = check_claim(ClaimId::T4_8, ws);
  REQUIRE(t48.pass);
  std::vector<std::string> biminimal = groups_with_status(t48, "pass");
  // Frozen members, oracle-checked in the predicates suite.
  for (const char* label : {"A5", "SL(2,5)", "S4", "D12", "A4 x C2"})
    CHECK(std::find(biminimal.begin(), biminimal.end(), label) != biminimal.end());
  const ClaimInstance* a5 = find_instance(t48, "A5", "pass");
  REQUIRE(a5 != nullptr);
  CHECK(contains(a5->note, "{2, 3, 5}"));

  ClaimReport l54 = check_claim(ClaimId::L5_4, ws);
  REQUIRE(l54.pass);
  // S3 is meta-nilpotent and non-nilpotent: I = S3 itself, minimal non-nilpotent.
  const ClaimInstance* s3n = find_instance(l54, "S3 [nilpotent]", "pass");
  REQUIRE(s3n != nullptr);
  CHECK(contains(s3n->note, "minimal non-nilpotent"));
  // Q8 is meta-abelian and nonabelian: I = Q8, minimal non-abelian.
  const ClaimInstance* q8a = find_instance(l54, "Q8 [abelian]", "pass");
  REQUIRE(q8a != nullptr);
  CHECK(contains(q8a->note, "minimal non-abelian"));
  // Nilpotent groups skip the nilpotent family with the vacuity reason.
  const ClaimInstance* c12 = find_instance(l54, "C12 [nilpotent]", "skip");
  REQUIRE(c12 != nullptr);
  CHECK(contains(c12->note, "no subgroups outside it"));
}

TEST_CASE("vacuous hypotheses pass loudly, not silently") {
  std::vector<CatalogEntry> small;
  small.push_back(parse_group_ref("cyclic:6"));
  Workspace ws(small);
  ClaimReport r = check_claim(ClaimId::T3_6, ws);
  CHECK(r.pass);
  CHECK(groups_with_status(r, "pass").empty());
  CHECK(groups_with_status(r, "fail").empty());
  REQUIRE_FALSE(r.notes.empty());
  CHECK(contains(r.notes.front(), "vacuous, n=0"));
}

TEST_CASE("empty scopes are rejected except for fixed-scope claims") {
  Workspace empty({});
  CHECK_THROWS_AS(check_claim(ClaimId::T3_6, empty), parse_error);
  CHECK(check_claim(ClaimId::T2_2, empty).pass);  // scope is synthesized
}

TEST_CASE("JSON reports carry the published shape and are byte-stable") {
  Workspace& ws = shared_workspace();
  ClaimReport r1 = check_claim(ClaimId::T3_6, ws);
  ClaimReport r2 = check_claim(ClaimId::T3_6, ws);
  nlohmann::ordered_json j1 = report_to_json(r1), j2 = report_to_json(r2);
  CHECK(j1.dump() == j2.dump());

  REQUIRE(j1.contains("claim"));
  CHECK(j1["claim"] == "T3.6");
  CHECK(j1["verdict"] == "pass");
  REQUIRE(j1.contains("scope"));
  CHECK(j1["scope"].size() == static_cast<size_t>(ws.size()));
  REQUIRE(j1.contains("instances"));
  CHECK(j1["instances"].is_array());
  for (const auto& inst : j1["instances"]) {
    REQUIRE(inst.contains("group"));
    REQUIRE(inst.contains("status"));
    std::string status = inst["status"];
    CHECK((status == "pass" || status == "fail" || status == "skip"));
  }
  REQUIRE(j1.contains("meta"));
  CHECK(j1["meta"]["schema_version"] == "1");
  // Field order is fixed: claim, scope, verdict, instances, meta.
  std::vector<std::string> keys;
  for (auto it = j1.begin(); it != j1.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"claim", "scope", "verdict", "instances", "meta"});

  std::string text = report_to_text(r1);
  CHECK(contains(text, "claim T3.6"));
  CHECK(contains(text, "verdict: pass"));
  CHECK(contains(text, "SL(2,5)"));
  CHECK(contains(text, "skip"));
}

TEST_CASE("census rows carry the predicate flags and validate") {
  Workspace& ws = shared_workspace();
  std::vector<CensusRow> rows = run_census(ws);
  REQUIRE(rows.size() == static_cast<size_t>(ws.size()));

  auto row_of = [&](const std::string& label) -> const CensusRow& {
    for (const CensusRow& row : rows)
      if (row.label == label) return row;
    FAIL("census row missing: " + label);
    return rows.front();
  };

  const CensusRow& a5 = row_of("A5");
  CHECK(a5.order == 60);
  CHECK(a5.primes == std::vector<long long>{2, 3, 5});
  CHECK(a5.recognized == "A5");
  CHECK_FALSE(a5.soluble);
  CHECK(a5.perfect);
  CHECK(a5.simple);
  CHECK(a5.family(Family::nilpotent).para);
  CHECK(a5.family(Family::nilpotent).biminimal_non);
  CHECK_FALSE(a5.family(Family::nilpotent).meta);

  const CensusRow& s3 = row_of("S3");
  CHECK(s3.order == 6);
  CHECK(s3.family(Family::nilpotent).minimal_non);
  CHECK(s3.family(Family::nilpotent).meta);
  CHECK(s3.family(Family::nilpotent).para);

  const CensusRow& q8 = row_of("Q8");
  CHECK(q8.dedekind);
  CHECK(q8.nilpotent);
  CHECK(q8.family(Family::abelian).minimal_non);

  const CensusRow& c1 = row_of("C1");
  CHECK(c1.order == 1);
  CHECK(c1.primes.empty());
  CHECK(c1.abelian);
  CHECK_FALSE(c1.perfect);
  CHECK_FALSE(c1.simple);

  // max_order filters and keeps catalog ordering.
  std::vector<CensusRow> small = run_census(ws, 30);
  REQUIRE_FALSE(small.empty());
  for (const CensusRow& row : small) CHECK(row.order <= 30);
  for (size_t i = 1; i < small.size(); ++i) CHECK(small[i - 1].order <= small[i].order);
  bool has_psl = false;
  for (const CensusRow& row : small) has_psl = has_psl || row.label == "PSL(2,7)";
  CHECK_FALSE(has_psl);

  // Serialization is deterministic and text carries the same facts.
  CHECK(census_to_json(rows).dump() == census_to_json(run_census(ws)).dump());
  std::string text = census_to_text(rows);
  CHECK(contains(text, "A5"));
  CHECK(contains(text, "2,3,5"));
  nlohmann::ordered_json cj = census_to_json(rows);
  CHECK(cj["meta"]["schema_version"] == "1");
  CHECK(cj["rows"].size() == rows.size());
}

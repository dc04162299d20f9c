//
// Copyright 2026 The dpabc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli.h"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/types/span.h"
#include "dpabc/audit/bounds.h"
#include "dpabc/audit/dp_audit.h"
#include "dpabc/audit/levels.h"
#include "dpabc/audit/tradeoff.h"
#include "dpabc/audit/witness_audit.h"
#include "dpabc/axioms/efficiency.h"
#include "dpabc/axioms/justified_representation.h"
#include "dpabc/core/instance.h"
#include "dpabc/core/profile_io.h"
#include "dpabc/mechanisms/distribution.h"
#include "dpabc/mechanisms/sampler.h"
#include "dpabc/mechanisms/sequential_av.h"
#include "json.hpp"

namespace dpabc::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kDefaultEpsilonGrid[] = {"0.1", "0.5", "1", "2"};

int ExitCodeFor(const absl::Status& status) {
  return absl::IsResourceExhausted(status) ? kExitPolicyCap : kExitUsage;
}

// Error carrying the exit code it maps to.
struct Failure {
  int code;
  std::string message;
};

Failure FailureFrom(const absl::Status& status) {
  return {ExitCodeFor(status), std::string(status.message())};
}

Json CommitteeJson(Committee c) { return Json(c.indices()); }

Json RationalJson(const std::optional<Rational>& r) {
  if (!r.has_value()) return nullptr;
  return RationalToString(*r);
}

Json FiniteJson(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json ProfileJson(const Instance& inst) {
  Json ballots = Json::array();
  for (const Ballot& b : inst.profile()) ballots.push_back(b.members());
  return ballots;
}

std::string Fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return absl::StrFormat("%.6g", x);
}

// Writes either JSON lines or human-oriented rows.
class Report {
 public:
  Report(OutputFormat format, std::ostream& out) : format_(format), out_(out) {}

  void Emit(const Json& record, const std::string& row) {
    if (format_ == OutputFormat::kStructured) {
      out_ << record.dump() << '\n';
    } else if (!row.empty()) {
      out_ << row << '\n';
    }
  }

 private:
  OutputFormat format_;
  std::ostream& out_;
};

struct Target {
  Instance instance;
  std::optional<WitnessInstance> witness;
  std::string source;
};

std::optional<Failure> CheckCommitteeCap(int m, int k) {
  if (Binomial(m, k) > kMaxCommittees) {
    return Failure{kExitPolicyCap,
                   absl::StrCat("C(", m, ",", k, ") committees exceeds cap ",
                                kMaxCommittees)};
  }
  return std::nullopt;
}

WitnessParams ResolveParams(const RunConfig& config, WitnessId id) {
  WitnessParams params = DefaultParams(id);
  if (config.n.has_value()) params.n = *config.n;
  if (config.k.has_value()) params.k = *config.k;
  if (config.m.has_value()) params.m = *config.m;
  return params;
}

std::variant<Target, Failure> LoadTarget(const RunConfig& config) {
  const bool has_input = !config.input.empty();
  const bool has_witness = config.witness.has_value();
  if (has_input == has_witness) {
    return Failure{kExitUsage, "exactly one of --input or --witness is required"};
  }
  if (has_input) {
    if (config.n || config.k || config.m) {
      return Failure{kExitUsage, "--n/--k/--m apply only with --witness"};
    }
    absl::StatusOr<Instance> inst = ReadInstanceFile(config.input);
    if (!inst.ok()) {
      return Failure{kExitUsage, absl::StrCat(config.input, ": ",
                                              inst.status().message())};
    }
    if (auto cap = CheckCommitteeCap(inst->m(), inst->k())) return *cap;
    return Target{*std::move(inst), std::nullopt, config.input};
  }
  const WitnessParams params = ResolveParams(config, *config.witness);
  if (auto cap = CheckCommitteeCap(params.m, params.k)) return *cap;
  absl::StatusOr<WitnessInstance> w = MakeWitness(*config.witness, params);
  if (!w.ok()) return FailureFrom(w.status());
  Instance inst = w->instance;
  std::string source(WitnessName(*config.witness));
  return Target{std::move(inst), *std::move(w), std::move(source)};
}

std::variant<Epsilon, Failure> RequireEpsilon(const RunConfig& config) {
  if (!config.epsilon.has_value()) {
    return Failure{kExitUsage, absl::StrCat(CommandName(config.command),
                                            " requires --eps")};
  }
  absl::StatusOr<Epsilon> eps = ParseEpsilon(*config.epsilon);
  if (!eps.ok()) return FailureFrom(eps.status());
  return *eps;
}

std::variant<MechanismKind, Failure> RequireMechanism(const RunConfig& config) {
  if (!config.mechanism.has_value()) {
    return Failure{kExitUsage, absl::StrCat(CommandName(config.command),
                                            " requires --mechanism")};
  }
  return *config.mechanism;
}

Json EpsilonJson(const Epsilon& eps) { return eps.value; }

Json LevelJson(Axiom ax, const AxiomLevel& level) {
  Json j;
  j["record"] = "level";
  j["axiom"] = std::string(AxiomName(ax));
  j["level"] = std::string(LevelName(ax));
  j["log_value"] = FiniteJson(level.log_value);
  j["eps_multiple"] = RationalJson(level.epsilon_multiple);
  j["vacuous"] = level.vacuous();
  if (level.attaining_pair.has_value()) {
    j["attaining_pair"] = Json::array({CommitteeJson(level.attaining_pair->first),
                                       CommitteeJson(level.attaining_pair->second)});
  } else {
    j["attaining_pair"] = nullptr;
  }
  return j;
}

std::string LevelRow(Axiom ax, const AxiomLevel& level) {
  std::string row = absl::StrFormat("%-6s %-3s log=%s", LevelName(ax),
                                    AxiomName(ax), Fmt(level.log_value));
  if (level.epsilon_multiple.has_value()) {
    absl::StrAppend(&row, " (", RationalToString(*level.epsilon_multiple),
                    " eps)");
  }
  if (level.attaining_pair.has_value()) {
    absl::StrAppend(&row, " at ", level.attaining_pair->first.ToString(), " vs ",
                    level.attaining_pair->second.ToString());
  }
  return row;
}

Json BoundJson(const BoundCheck& c, int n, int k) {
  Json j;
  j["record"] = "bound";
  j["bound"] = std::string(BoundName(c.id));
  j["statement"] = std::string(BoundStatement(c.id));
  j["lhs"] = FiniteJson(c.lhs);
  j["rhs"] = c.rhs;
  j["lhs_eps_multiple"] = RationalJson(c.lhs_multiple);
  j["rhs_eps_multiple"] = RationalToString(BoundRhsMultiple(c.id, n, k));
  j["exact"] = c.exact;
  j["vacuous"] = c.vacuous;
  j["forced"] = c.forced;
  j["satisfied"] = c.satisfied;
  j["note"] = c.note;
  return j;
}

std::string BoundRow(const BoundCheck& c) {
  std::string status = c.satisfied ? "ok" : (c.forced ? "VIOLATION" : "exceeds");
  std::string row = absl::StrFormat("%-8s lhs=%s rhs=%s %s%s", BoundName(c.id),
                                    Fmt(c.lhs), Fmt(c.rhs), status,
                                    c.forced ? " [forced]" : "");
  if (!c.note.empty()) absl::StrAppend(&row, "  # ", c.note);
  return row;
}

bool BoundInvolves(BoundId id, Axiom ax, int n, int k) {
  for (const BoundTerm& t : BoundTerms(id, n, k)) {
    if (t.axiom == ax) return true;
  }
  return false;
}

Json DpJson(MechanismKind kind, const Epsilon& eps, const DpAuditReport& r) {
  Json j;
  j["record"] = "dp_audit";
  j["mechanism"] = std::string(MechanismName(kind));
  j["eps"] = EpsilonJson(eps);
  j["max_log_ratio"] = r.max_log_ratio;
  j["ratio_over_eps"] = r.max_log_ratio / eps.value;
  j["within_budget"] = r.max_log_ratio <= eps.value + kBoundTolerance;
  j["neighbors_checked"] = r.instances_checked;
  j["voter"] = r.neighbor_voter;
  j["committee"] = r.committee.has_value() ? CommitteeJson(*r.committee)
                                           : Json(nullptr);
  j["instance"] = r.instance.has_value() ? ProfileJson(*r.instance)
                                         : Json(nullptr);
  j["neighbor"] = r.neighbor.has_value() ? ProfileJson(*r.neighbor)
                                         : Json(nullptr);
  return j;
}

std::string DpRow(MechanismKind kind, const Epsilon& eps,
                  const DpAuditReport& r) {
  std::string row = absl::StrFormat(
      "dp %-12s eps=%s max_log_ratio=%s (%s eps) neighbors=%d",
      MechanismName(kind), eps.text, Fmt(r.max_log_ratio),
      Fmt(r.max_log_ratio / eps.value), r.instances_checked);
  if (r.committee.has_value()) {
    absl::StrAppend(&row, " voter=", r.neighbor_voter,
                    " committee=", r.committee->ToString());
  }
  return row;
}

// Each command returns its exit code or a failure to report.
using Outcome = std::variant<int, Failure>;

Outcome RunDist(const RunConfig& config, Report& report) {
  auto kind = RequireMechanism(config);
  if (auto* f = std::get_if<Failure>(&kind)) return *f;
  auto eps = RequireEpsilon(config);
  if (auto* f = std::get_if<Failure>(&eps)) return *f;
  auto target = LoadTarget(config);
  if (auto* f = std::get_if<Failure>(&target)) return *f;
  const Epsilon& e = std::get<Epsilon>(eps);
  const Target& t = std::get<Target>(target);
  const MechanismKind mech = std::get<MechanismKind>(kind);

  absl::StatusOr<CommitteeDistribution> dist =
      ComputeDistribution({mech, e.value}, t.instance);
  if (!dist.ok()) return FailureFrom(dist.status());

  Json header;
  header["record"] = "distribution";
  header["mechanism"] = std::string(MechanismName(mech));
  header["eps"] = EpsilonJson(e);
  header["eps_exact"] = RationalJson(e.exact);
  header["source"] = t.source;
  header["n"] = t.instance.n();
  header["k"] = t.instance.k();
  header["m"] = t.instance.m();
  header["committees"] = dist->size();
  header["exact"] = dist->is_exact();
  report.Emit(header,
              absl::StrFormat("%s eps=%s on %s (n=%d k=%d m=%d), %d committees",
                              MechanismName(mech), e.text, t.source,
                              t.instance.n(), t.instance.k(), t.instance.m(),
                              dist->size()));

  for (size_t i = 0; i < dist->size(); ++i) {
    Json j;
    j["record"] = "committee";
    j["index"] = i;
    j["committee"] = CommitteeJson(dist->committee(i));
    std::optional<Rational> q;
    std::optional<Rational> exact_log_weight;
    if (dist->is_exact()) {
      q = dist->q(i);
      if (e.exact.has_value()) exact_log_weight = *q * *e.exact;
    }
    j["q"] = RationalJson(q);
    j["log_weight"] = dist->log_weight(i);
    j["log_weight_exact"] = RationalJson(exact_log_weight);
    j["probability"] = dist->probability(i);
    std::string row = absl::StrFormat("  %-16s", dist->committee(i).ToString());
    if (q.has_value()) {
      absl::StrAppend(&row, absl::StrFormat(" q=%-6s", RationalToString(*q)));
    }
    absl::StrAppend(&row, " log_w=", Fmt(dist->log_weight(i)),
                    " p=", absl::StrFormat("%.10f", dist->probability(i)));
    report.Emit(j, row);
  }

  if (mech == MechanismKind::kSeqAv) {
    absl::StatusOr<CommitteeDistribution> reference =
        ExpAvDistribution(t.instance, e.value);
    if (!reference.ok()) return FailureFrom(reference.status());
    absl::StatusOr<double> tv = TotalVariationDistance(*dist, *reference);
    if (!tv.ok()) return FailureFrom(tv.status());
    Json j;
    j["record"] = "law_gap";
    j["reference"] = "exp-av";
    j["total_variation"] = *tv;
    report.Emit(j, absl::StrCat("total variation to exp-av: ", Fmt(*tv)));
  }
  return kExitOk;
}

Outcome RunSample(const RunConfig& config, Report& report) {
  auto kind = RequireMechanism(config);
  if (auto* f = std::get_if<Failure>(&kind)) return *f;
  auto eps = RequireEpsilon(config);
  if (auto* f = std::get_if<Failure>(&eps)) return *f;
  auto target = LoadTarget(config);
  if (auto* f = std::get_if<Failure>(&target)) return *f;
  const Epsilon& e = std::get<Epsilon>(eps);
  const Target& t = std::get<Target>(target);
  const MechanismKind mech = std::get<MechanismKind>(kind);

  Committee drawn;
  if (mech == MechanismKind::kSeqAv) {
    // The literal k-round procedure, not a draw from the tabulated law.
    absl::StatusOr<Committee> c = SampleSequentialAv(t.instance, e.value,
                                                     config.seed);
    if (!c.ok()) return FailureFrom(c.status());
    drawn = *c;
  } else {
    absl::StatusOr<CommitteeDistribution> dist =
        ComputeDistribution({mech, e.value}, t.instance);
    if (!dist.ok()) return FailureFrom(dist.status());
    drawn = Sample(*dist, config.seed);
  }
  Json j;
  j["record"] = "sample";
  j["mechanism"] = std::string(MechanismName(mech));
  j["eps"] = EpsilonJson(e);
  j["seed"] = config.seed.value;
  j["committee"] = CommitteeJson(drawn);
  report.Emit(j, drawn.ToString());
  return kExitOk;
}

Outcome RunAxioms(const RunConfig& config, Report& report) {
  auto target = LoadTarget(config);
  if (auto* f = std::get_if<Failure>(&target)) return *f;
  const Target& t = std::get<Target>(target);

  std::vector<Axiom> axioms;
  if (config.axiom.has_value()) {
    axioms.push_back(*config.axiom);
  } else {
    axioms.assign(kAllAxioms.begin(), kAllAxioms.end());
  }
  for (Axiom ax : axioms) {
    if (ax == Axiom::kCC) {
      const std::optional<Committee> wc = CondorcetCommittee(t.instance);
      Json j;
      j["record"] = "condorcet";
      j["committee"] = wc.has_value() ? CommitteeJson(*wc) : Json(nullptr);
      report.Emit(j, absl::StrCat("CC  Condorcet committee: ",
                                  wc.has_value() ? wc->ToString() : "none"));
      continue;
    }
    const std::vector<Committee> set = AxiomCommitteeSet(t.instance, ax);
    Json j;
    j["record"] = "axiom_set";
    j["axiom"] = std::string(AxiomName(ax));
    j["count"] = set.size();
    Json list = Json::array();
    std::vector<std::string> names;
    for (Committee c : set) {
      list.push_back(CommitteeJson(c));
      names.push_back(c.ToString());
    }
    j["committees"] = std::move(list);
    report.Emit(j, absl::StrFormat("%-3s %d: %s", AxiomName(ax), set.size(),
                                   absl::StrJoin(names, " ")));
  }
  return kExitOk;
}

Outcome RunAuditDp(const RunConfig& config, Report& report) {
  auto kind = RequireMechanism(config);
  if (auto* f = std::get_if<Failure>(&kind)) return *f;
  auto eps = RequireEpsilon(config);
  if (auto* f = std::get_if<Failure>(&eps)) return *f;
  auto target = LoadTarget(config);
  if (auto* f = std::get_if<Failure>(&target)) return *f;
  const Epsilon& e = std::get<Epsilon>(eps);
  const Target& t = std::get<Target>(target);
  const MechanismKind mech = std::get<MechanismKind>(kind);

  const std::vector<Instance> family =
      t.witness.has_value() ? t.witness->Family()
                            : std::vector<Instance>{t.instance};
  absl::StatusOr<DpAuditReport> r = DpLevelOverFamily({mech, e.value}, family);
  if (!r.ok()) return FailureFrom(r.status());
  report.Emit(DpJson(mech, e, *r), DpRow(mech, e, *r));
  return r->max_log_ratio <= e.value + kBoundTolerance ? kExitOk
                                                       : kExitViolation;
}

Outcome RunAuditAxioms(const RunConfig& config, Report& report) {
  auto kind = RequireMechanism(config);
  if (auto* f = std::get_if<Failure>(&kind)) return *f;
  auto eps = RequireEpsilon(config);
  if (auto* f = std::get_if<Failure>(&eps)) return *f;
  auto target = LoadTarget(config);
  if (auto* f = std::get_if<Failure>(&target)) return *f;
  const Epsilon& e = std::get<Epsilon>(eps);
  const Target& t = std::get<Target>(target);
  const Mechanism mech{std::get<MechanismKind>(kind), e.value};
  const int n = t.instance.n();
  const int k = t.instance.k();

  FamilyBoundReport result;
  if (t.witness.has_value()) {
    absl::StatusOr<AuditFamily> family =
        WitnessAuditFamily(t.witness->id, t.witness->params);
    if (!family.ok()) return FailureFrom(family.status());
    absl::StatusOr<FamilyBoundReport> r =
        AuditFamilyBounds(mech, *family, kAllBounds);
    if (!r.ok()) return FailureFrom(r.status());
    result = *std::move(r);
  } else {
    absl::StatusOr<LevelMap> levels = MeasureLevels(mech, {t.instance});
    if (!levels.ok()) return FailureFrom(levels.status());
    absl::StatusOr<std::vector<BoundCheck>> checks =
        CheckBounds(kAllBounds, *levels, n, k, e.value);
    if (!checks.ok()) return FailureFrom(checks.status());
    result = {*std::move(levels), *std::move(checks)};
  }

  for (const auto& [ax, level] : result.levels) {
    if (config.axiom.has_value() && ax != *config.axiom) continue;
    Json j = LevelJson(ax, level);
    j["mechanism"] = std::string(MechanismName(mech.kind));
    j["eps"] = EpsilonJson(e);
    j["source"] = t.source;
    report.Emit(j, LevelRow(ax, level));
  }
  int code = kExitOk;
  for (const BoundCheck& c : result.checks) {
    if (config.axiom.has_value() && !BoundInvolves(c.id, *config.axiom, n, k)) {
      continue;
    }
    Json j = BoundJson(c, n, k);
    j["mechanism"] = std::string(MechanismName(mech.kind));
    j["eps"] = EpsilonJson(e);
    j["source"] = t.source;
    report.Emit(j, BoundRow(c));
    if (IsViolation(c)) code = kExitViolation;
  }
  return code;
}

Outcome RunReproduce(const RunConfig& config, Report& report) {
  std::vector<Epsilon> grid;
  if (config.epsilon.has_value()) {
    absl::StatusOr<Epsilon> e = ParseEpsilon(*config.epsilon);
    if (!e.ok()) return FailureFrom(e.status());
    grid.push_back(*e);
  } else {
    for (const char* text : kDefaultEpsilonGrid) grid.push_back(*ParseEpsilon(text));
  }
  std::vector<MechanismKind> mechanisms;
  if (config.mechanism.has_value()) {
    mechanisms.push_back(*config.mechanism);
  } else {
    mechanisms.assign(kAllMechanisms.begin(), kAllMechanisms.end());
  }
  if (!config.input.empty()) {
    return Failure{kExitUsage, "reproduce runs on witnesses; use --witness"};
  }
  std::vector<WitnessId> witnesses;
  if (config.witness.has_value()) {
    witnesses.push_back(*config.witness);
  } else {
    if (config.n || config.k || config.m) {
      return Failure{kExitUsage, "--n/--k/--m apply only with --witness"};
    }
    witnesses.assign(kAllWitnesses.begin(), kAllWitnesses.end());
  }

  // Audit families depend only on the witness, so build them once.
  struct Cell {
    WitnessInstance witness;
    AuditFamily family;
  };
  std::vector<Cell> cells;
  for (WitnessId id : witnesses) {
    const WitnessParams params = ResolveParams(config, id);
    if (auto cap = CheckCommitteeCap(params.m, params.k)) return *cap;
    absl::StatusOr<WitnessInstance> w = MakeWitness(id, params);
    if (!w.ok()) return FailureFrom(w.status());
    absl::StatusOr<AuditFamily> family = WitnessAuditFamily(id, params);
    if (!family.ok()) return FailureFrom(family.status());
    cells.push_back({*std::move(w), *std::move(family)});
  }

  int64_t checks = 0, forced = 0, violations = 0, exceedances = 0, vacuous = 0;
  int64_t dp_audits = 0, dp_violations = 0, dp_skipped = 0;
  std::map<BoundId, int64_t> coverage;
  for (const Epsilon& e : grid) {
    for (const Cell& cell : cells) {
      const std::string source(WitnessName(cell.witness.id));
      for (MechanismKind kind : mechanisms) {
        const Mechanism mech{kind, e.value};
        absl::StatusOr<FamilyBoundReport> r =
            AuditFamilyBounds(mech, cell.family, kAllBounds);
        if (!r.ok()) return FailureFrom(r.status());
        for (const BoundCheck& c : r->checks) {
          ++checks;
          ++coverage[c.id];
          if (c.forced) ++forced;
          if (c.vacuous) ++vacuous;
          if (IsViolation(c)) ++violations;
          if (!c.forced && !c.satisfied) ++exceedances;
          Json j = BoundJson(c, cell.family.params.n, cell.family.params.k);
          j["mechanism"] = std::string(MechanismName(kind));
          j["eps"] = EpsilonJson(e);
          j["witness"] = source;
          report.Emit(j, absl::StrFormat("eps=%-4s %-12s %-14s %s", e.text,
                                         MechanismName(kind), source,
                                         BoundRow(c)));
        }

        absl::StatusOr<DpAuditReport> dp =
            DpLevelOverFamily(mech, cell.witness.Family());
        if (absl::IsResourceExhausted(dp.status())) {
          ++dp_skipped;
          Json j;
          j["record"] = "dp_audit_skipped";
          j["mechanism"] = std::string(MechanismName(kind));
          j["eps"] = EpsilonJson(e);
          j["witness"] = source;
          j["reason"] = std::string(dp.status().message());
          report.Emit(j, absl::StrFormat("eps=%-4s %-12s %-14s dp skipped: %s",
                                         e.text, MechanismName(kind), source,
                                         dp.status().message()));
          continue;
        }
        if (!dp.ok()) return FailureFrom(dp.status());
        ++dp_audits;
        if (dp->max_log_ratio > e.value + kBoundTolerance) ++dp_violations;
        Json j = DpJson(kind, e, *dp);
        j["witness"] = source;
        report.Emit(j, absl::StrFormat("eps=%-4s %-14s %s", e.text, source,
                                       DpRow(kind, e, *dp)));
      }
    }
  }

  Json summary;
  summary["record"] = "summary";
  Json eps_list = Json::array();
  for (const Epsilon& e : grid) eps_list.push_back(e.value);
  summary["epsilons"] = std::move(eps_list);
  summary["mechanisms"] = mechanisms.size();
  summary["witnesses"] = cells.size();
  summary["bound_checks"] = checks;
  summary["forced"] = forced;
  summary["forced_violations"] = violations;
  summary["unforced_exceedances"] = exceedances;
  summary["vacuous"] = vacuous;
  Json covered = Json::array();
  for (const auto& [id, count] : coverage) covered.push_back(std::string(BoundName(id)));
  summary["bounds_covered"] = std::move(covered);
  summary["dp_audits"] = dp_audits;
  summary["dp_violations"] = dp_violations;
  summary["dp_skipped"] = dp_skipped;
  report.Emit(summary,
              absl::StrFormat("checks=%d forced=%d violations=%d "
                              "unforced_exceedances=%d vacuous=%d "
                              "dp_audits=%d dp_violations=%d dp_skipped=%d",
                              checks, forced, violations, exceedances, vacuous,
                              dp_audits, dp_violations, dp_skipped));
  return violations + dp_violations > 0 ? kExitViolation : kExitOk;
}

Outcome Dispatch(const RunConfig& config, Report& report) {
  switch (config.command) {
    case Command::kDist:
      return RunDist(config, report);
    case Command::kSample:
      return RunSample(config, report);
    case Command::kAxioms:
      return RunAxioms(config, report);
    case Command::kAuditDp:
      return RunAuditDp(config, report);
    case Command::kAuditAxioms:
      return RunAuditAxioms(config, report);
    case Command::kReproduce:
      return RunReproduce(config, report);
  }
  return Failure{kExitUsage, "unknown command"};
}

}  // namespace

absl::string_view CommandName(Command command) {
  switch (command) {
    case Command::kDist:
      return "dist";
    case Command::kSample:
      return "sample";
    case Command::kAxioms:
      return "axioms";
    case Command::kAuditDp:
      return "audit-dp";
    case Command::kAuditAxioms:
      return "audit-axioms";
    case Command::kReproduce:
      return "reproduce";
  }
  return "?";
}

absl::StatusOr<Epsilon> ParseEpsilon(absl::string_view text) {
  Epsilon eps;
  eps.text = std::string(text);
  if (absl::StatusOr<Rational> r = ParseRational(text); r.ok()) {
    eps.exact = *r;
    eps.value = RationalToDouble(*r);
  } else if (!absl::SimpleAtod(text, &eps.value)) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot parse epsilon '", text, "'"));
  }
  if (absl::Status s = ValidateEpsilon(eps.value); !s.ok()) return s;
  return eps;
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty()) {
    file.open(config.output, std::ios::out | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << config.output << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }
  Report report(config.format, *sink);
  const Outcome outcome = Dispatch(config, report);
  if (const Failure* f = std::get_if<Failure>(&outcome)) {
    err << "error: " << f->message << "\n";
    return f->code;
  }
  sink->flush();
  return std::get<int>(outcome);
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Differentially private approval-based committee voting",
               "dpabc"};
  app.require_subcommand(1);

  std::string mechanism, axiom, witness, format = "table";
  std::optional<std::string> eps;
  std::string input, output;
  std::optional<int> n, k, m;
  uint64_t seed = 0;

  const std::vector<std::pair<Command, std::string>> commands = {
      {Command::kDist, "Print the exact output distribution"},
      {Command::kSample, "Draw one committee"},
      {Command::kAxioms, "List JR/PJR/EJR sets, the PE frontier and the Condorcet committee"},
      {Command::kAuditDp, "Measure the privacy loss over all neighbors"},
      {Command::kAuditAxioms, "Measure axiom levels and check tradeoff bounds"},
      {Command::kReproduce, "Check every bound on every witness and epsilon"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [command, help] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(CommandName(command)), help);
    sub->add_option("--mechanism", mechanism, "Mechanism identifier");
    sub->add_option("--eps", eps, "Privacy budget, decimal or p/q");
    sub->add_option("--axiom", axiom, "Restrict to one axiom");
    sub->add_option("--input", input, "Profile file");
    sub->add_option("--witness", witness, "Witness instance id");
    sub->add_option("--n", n, "Witness voters");
    sub->add_option("--k", k, "Witness committee size");
    sub->add_option("--m", m, "Witness alternatives");
    sub->add_option("--seed", seed, "Sampler seed");
    sub->add_option("--format", format, "table or structured")
        ->check(CLI::IsMember({"table", "structured"}));
    sub->add_option("--out", output, "Write the report here");
    subs.emplace_back(sub, command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig config;
  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) config.command = command;
  }
  auto usage = [&](const absl::Status& s) {
    err << "error: " << s.message() << "\n";
    return kExitUsage;
  };
  if (!mechanism.empty()) {
    absl::StatusOr<MechanismKind> kind = ParseMechanism(mechanism);
    if (!kind.ok()) return usage(kind.status());
    config.mechanism = *kind;
  }
  if (!axiom.empty()) {
    absl::StatusOr<Axiom> ax = ParseAxiom(axiom);
    if (!ax.ok()) return usage(ax.status());
    config.axiom = *ax;
  }
  if (!witness.empty()) {
    absl::StatusOr<WitnessId> id = ParseWitnessId(witness);
    if (!id.ok()) return usage(id.status());
    config.witness = *id;
  }
  config.epsilon = eps;
  config.input = input;
  config.n = n;
  config.k = k;
  config.m = m;
  config.seed = RandomSeed{seed};
  config.format =
      format == "structured" ? OutputFormat::kStructured : OutputFormat::kTable;
  config.output = output;
  return Run(config, out, err);
}

}  // namespace dpabc::cli

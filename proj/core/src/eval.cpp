// Copyright 2026 The oclpath Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oclpath/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

namespace oclpath {

std::string_view to_string(Correctness c) {
  switch (c) {
    case Correctness::Correct: return "correct";
    case Correctness::Incorrect: return "incorrect";
    case Correctness::Unjudged: return "unjudged";
  }
  return "unjudged";
}

void check_record(const SpecRecord& record) {
  if (record.verdicts.empty()) throw DataError(fmt::format("spec '{}' has no verdicts", record.id));
  std::set<std::size_t> seen;
  for (const RankVerdict& v : record.verdicts) {
    if (v.rank == 0) throw DataError(fmt::format("spec '{}': rank must be >= 1", record.id));
    if (!seen.insert(v.rank).second)
      throw DataError(fmt::format("spec '{}': duplicate verdict for rank {}", record.id, v.rank));
    if (v.correctness == Correctness::Correct && !v.verdict.valid)
      throw DataError(fmt::format("spec '{}' rank {}: marked correct but the constraint is invalid", record.id,
                                  v.rank));
  }
}

std::vector<SpecRecord> records_from_completions(std::span<const Completion> completions, const UmlModel& model,
                                                 const std::map<std::string, std::string>& specTexts) {
  std::vector<SpecRecord> records;
  std::map<std::string, std::size_t> index;
  for (const Completion& c : completions) {
    auto [it, inserted] = index.try_emplace(c.specId, records.size());
    if (inserted) {
      SpecRecord r;
      r.id = c.specId;
      r.modelName = model.name();
      if (auto t = specTexts.find(c.specId); t != specTexts.end()) r.text = t->second;
      records.push_back(std::move(r));
    }
    records[it->second].verdicts.push_back({c.rank, ocl::validate(c.text, model), Correctness::Unjudged});
  }
  for (SpecRecord& r : records) {
    std::sort(r.verdicts.begin(), r.verdicts.end(),
              [](const RankVerdict& a, const RankVerdict& b) { return a.rank < b.rank; });
    check_record(r);
  }
  return records;
}

CorrectnessVerdicts correctness_from_jsonl(std::string_view text) {
  CorrectnessVerdicts out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(line);
      std::string verdict = j.at("verdict").get<std::string>();
      Correctness c;
      if (verdict == "correct") c = Correctness::Correct;
      else if (verdict == "incorrect") c = Correctness::Incorrect;
      else throw DataError(fmt::format("verdict must be 'correct' or 'incorrect', got '{}'", verdict));
      auto rank = j.at("rank").get<long>();
      if (rank < 1) throw DataError("rank must be >= 1");
      out[{j.at("spec_id").get<std::string>(), static_cast<std::size_t>(rank)}] = c;
    } catch (const nlohmann::json::exception& e) {
      throw DataError(fmt::format("verdict file line {}: {}", lineNo, e.what()));
    } catch (const DataError& e) {
      throw DataError(fmt::format("verdict file line {}: {}", lineNo, e.what()));
    }
  }
  return out;
}

CorrectnessVerdicts load_correctness(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(fmt::format("cannot open verdict file {}", path.string()));
  std::stringstream buf;
  buf << in.rdbuf();
  return correctness_from_jsonl(buf.str());
}

void apply_correctness(std::vector<SpecRecord>& records, const CorrectnessVerdicts& verdicts) {
  for (SpecRecord& r : records) {
    for (RankVerdict& v : r.verdicts)
      if (auto it = verdicts.find({r.id, v.rank}); it != verdicts.end()) v.correctness = it->second;
    check_record(r);
  }
}

namespace {

bool is_correct(const SpecRecord& r, const RankVerdict& v, UnjudgedPolicy policy, std::size_t* unjudged = nullptr) {
  if (!v.verdict.valid) return false;
  if (v.correctness == Correctness::Unjudged) {
    if (policy == UnjudgedPolicy::Strict)
      throw DataError(fmt::format("spec '{}' rank {} has no correctness verdict", r.id, v.rank));
    if (unjudged) ++*unjudged;
    return false;
  }
  return v.correctness == Correctness::Correct;
}

template <typename Pred>
double score_at_k(std::span<const SpecRecord> records, std::size_t k, ScoreMode mode, Pred success) {
  if (k < 1) throw DataError("k must be >= 1");
  std::size_t hits = 0;
  std::size_t total = 0;
  for (const SpecRecord& r : records) {
    if (r.verdicts.empty()) throw DataError(fmt::format("spec '{}' has no verdicts", r.id));
    if (mode == ScoreMode::AnyOfTopK) {
      ++total;
      bool any = false;
      // Every verdict is visited so strict-mode checks see the whole prefix.
      for (const RankVerdict& v : r.verdicts)
        if (v.rank <= k && success(r, v)) any = true;
      hits += any;
    } else {
      for (const RankVerdict& v : r.verdicts) {
        if (v.rank > k) continue;
        ++total;
        hits += success(r, v);
      }
    }
  }
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(hits) / static_cast<double>(total);
}

double correctness_at_k(std::span<const SpecRecord> records, std::size_t k, const ScoreOptions& options,
                        std::size_t* unjudged) {
  return score_at_k(records, k, options.mode, [&](const SpecRecord& r, const RankVerdict& v) {
    return is_correct(r, v, options.unjudged, unjudged);
  });
}

void warn_unjudged(std::size_t count) {
  if (count > 0) spdlog::warn("{} valid constraint(s) have no correctness verdict; counted as incorrect", count);
}

}  // namespace

double score_validity_at_k(std::span<const SpecRecord> records, std::size_t k, const ScoreOptions& options) {
  return score_at_k(records, k, options.mode, [](const SpecRecord&, const RankVerdict& v) { return v.verdict.valid; });
}

double score_correctness_at_k(std::span<const SpecRecord> records, std::size_t k, const ScoreOptions& options) {
  std::size_t unjudged = 0;
  double score = correctness_at_k(records, k, options, &unjudged);
  warn_unjudged(unjudged);
  return score;
}

double chi2_survival_1df(double x) {
  if (x <= 0) return 1.0;
  return std::erfc(std::sqrt(x / 2.0));
}

McNemarResult mcnemar_from_chi2(double chiSquared) {
  McNemarResult r;
  r.chiSquared = chiSquared;
  r.pValue = chi2_survival_1df(chiSquared);
  return r;
}

McNemarResult mcnemar(std::span<const PairedOutcome> outcomes) {
  McNemarResult r;
  for (const PairedOutcome& o : outcomes) ++r.table[o.techniqueA ? 0 : 1][o.techniqueB ? 0 : 1];
  double b = static_cast<double>(r.table[0][1]);
  double c = static_cast<double>(r.table[1][0]);
  if (b + c == 0) return r;
  r.chiSquared = (b - c) * (b - c) / (b + c);
  r.pValue = chi2_survival_1df(r.chiSquared);
  return r;
}

std::vector<PairedOutcome> paired_outcomes(std::span<const SpecRecord> a, std::span<const SpecRecord> b,
                                           std::size_t k, Outcome outcome, const ScoreOptions& options) {
  if (k < 1) throw DataError("k must be >= 1");
  auto success = [&](const SpecRecord& r) {
    for (const RankVerdict& v : r.verdicts) {
      if (v.rank > k) continue;
      if (outcome == Outcome::Validity ? v.verdict.valid : is_correct(r, v, options.unjudged)) return true;
    }
    return false;
  };
  std::map<std::string, const SpecRecord*> byId;
  for (const SpecRecord& r : b) byId[r.id] = &r;
  std::vector<PairedOutcome> out;
  for (const SpecRecord& r : a) {
    auto it = byId.find(r.id);
    if (it == byId.end()) throw DataError(fmt::format("spec '{}' missing from the baseline run", r.id));
    out.push_back({r.id, success(r), success(*it->second)});
    byId.erase(it);
  }
  if (!byId.empty()) throw DataError(fmt::format("spec '{}' missing from the compared run", byId.begin()->first));
  return out;
}

std::map<ocl::ErrorCategory, double> error_breakdown(std::span<const SpecRecord> records) {
  std::map<ocl::ErrorCategory, std::size_t> counts;
  std::size_t invalid = 0;
  for (const SpecRecord& r : records)
    for (const RankVerdict& v : r.verdicts)
      if (!v.verdict.valid && v.verdict.error) {
        ++invalid;
        ++counts[v.verdict.error->category];
      }
  std::map<ocl::ErrorCategory, double> out;
  if (invalid == 0) return out;
  for (ocl::ErrorCategory c : ocl::kAllCategories)
    out[c] = 100.0 * static_cast<double>(counts[c]) / static_cast<double>(invalid);
  return out;
}

std::string_view to_string(SizeCategory c) {
  switch (c) {
    case SizeCategory::Small: return "small";
    case SizeCategory::Medium: return "medium";
    case SizeCategory::Large: return "large";
  }
  return "small";
}

SizeCategory size_category(std::size_t classCount) {
  if (classCount <= 5) return SizeCategory::Small;
  if (classCount <= 9) return SizeCategory::Medium;
  return SizeCategory::Large;
}

std::vector<PromptSample> prompt_samples(std::span<const Completion> completions) {
  std::vector<PromptSample> out;
  for (const Completion& c : completions)
    out.push_back({c.modelName, parse_technique(c.technique), static_cast<std::size_t>(std::max(0L, c.inputTokens))});
  return out;
}

std::vector<SizeCell> size_scaling(std::span<const UmlModel> models, std::span<const PromptSample> prompts) {
  std::map<std::string, SizeCategory> categories;
  for (const UmlModel& m : models) categories[m.name()] = size_category(m.classes().size());

  std::map<std::pair<SizeCategory, Technique>, std::pair<std::size_t, double>> sums;
  for (const PromptSample& p : prompts) {
    auto it = categories.find(p.modelName);
    if (it == categories.end()) throw DataError(fmt::format("prompt refers to unknown model '{}'", p.modelName));
    auto& [count, total] = sums[{it->second, p.technique}];
    ++count;
    total += static_cast<double>(p.approxTokens);
  }
  std::vector<SizeCell> out;
  for (const auto& [key, value] : sums)
    out.push_back({key.first, key.second, value.first, value.second / static_cast<double>(value.first)});
  return out;
}

EvalReport evaluate(std::span<const SpecRecord> records, std::span<const std::size_t> ks, const ScoreOptions& options) {
  EvalReport report;
  report.specCount = records.size();
  std::size_t unjudged = 0;
  for (std::size_t k : ks) {
    report.validityAtK[k] = score_validity_at_k(records, k, options);
    std::size_t seen = 0;
    report.correctnessAtK[k] = correctness_at_k(records, k, options, &seen);
    unjudged = std::max(unjudged, seen);
  }
  warn_unjudged(unjudged);
  report.errorBreakdown = error_breakdown(records);
  return report;
}

nlohmann::ordered_json to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["technique"] = report.technique;
  j["spec_count"] = report.specCount;
  auto at_k = [](const std::map<std::size_t, double>& m) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m) o[std::to_string(k)] = v;
    return o;
  };
  j["validity_at_k"] = at_k(report.validityAtK);
  j["correctness_at_k"] = at_k(report.correctnessAtK);
  nlohmann::ordered_json breakdown = nlohmann::ordered_json::object();
  for (const auto& [c, pct] : report.errorBreakdown) breakdown[std::string(ocl::to_string(c))] = pct;
  j["error_breakdown"] = breakdown;
  j["cost"] = report.cost ? to_json(*report.cost) : nlohmann::ordered_json();
  nlohmann::ordered_json scaling = nlohmann::ordered_json::array();
  for (const SizeCell& cell : report.sizeScaling)
    scaling.push_back({{"category", to_string(cell.category)},
                       {"technique", to_string(cell.technique)},
                       {"count", cell.count},
                       {"mean_tokens", cell.meanTokens}});
  j["size_scaling"] = scaling;
  auto test = [](const std::optional<McNemarResult>& m) {
    if (!m) return nlohmann::ordered_json();
    return nlohmann::ordered_json{{"chi_squared", m->chiSquared},
                                  {"p_value", m->pValue},
                                  {"table", {{m->table[0][0], m->table[0][1]}, {m->table[1][0], m->table[1][1]}}}};
  };
  if (report.mcnemarValidity || report.mcnemarCorrectness) {
    j["mcnemar"] = {{"k", report.comparisonK},
                    {"validity", test(report.mcnemarValidity)},
                    {"correctness", test(report.mcnemarCorrectness)}};
  }
  return j;
}

std::string render_table(const EvalReport& report) {
  std::string out = fmt::format("technique: {}   specs: {}\n\n", report.technique, report.specCount);
  out += fmt::format("{:>6}  {:>10}  {:>12}\n", "k", "validity%", "correctness%");
  for (const auto& [k, v] : report.validityAtK) {
    auto c = report.correctnessAtK.find(k);
    out += fmt::format("{:>6}  {:>10.1f}  {:>12.1f}\n", k, v, c == report.correctnessAtK.end() ? 0.0 : c->second);
  }
  if (!report.errorBreakdown.empty()) {
    out += "\nerror category              share%\n";
    for (const auto& [c, pct] : report.errorBreakdown) out += fmt::format("{:<26}  {:>6.1f}\n", ocl::to_string(c), pct);
  }
  if (report.cost) {
    out += fmt::format("\nprompts: {}   mean tokens: {:.1f}   total cost: ${:.4f}\n", report.cost->count,
                       report.cost->meanPromptTokens, report.cost->totalCostUsd);
  }
  if (!report.sizeScaling.empty()) {
    out += "\nsize      technique          prompts  mean tokens\n";
    for (const SizeCell& cell : report.sizeScaling)
      out += fmt::format("{:<8}  {:<17}  {:>7}  {:>11.1f}\n", to_string(cell.category), to_string(cell.technique),
                         cell.count, cell.meanTokens);
  }
  auto test_line = [&](std::string_view label, const std::optional<McNemarResult>& m) {
    if (m) out += fmt::format("McNemar {:<12} chi2 = {:.2f}   p = {:.4f}\n", label, m->chiSquared, m->pValue);
  };
  if (report.mcnemarValidity || report.mcnemarCorrectness) {
    out += fmt::format("\nagainst baseline at k = {}\n", report.comparisonK);
    test_line("validity", report.mcnemarValidity);
    test_line("correctness", report.mcnemarCorrectness);
  }
  return out;
}

}  // namespace oclpath

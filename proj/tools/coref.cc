// Copyright 2026 The coref Authors.
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

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "coref/config.h"
#include "coref/corpus.h"
#include "coref/resolver.h"
#include "coref/scorer.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct RunManifest {
  std::vector<std::string> inputs;
  std::string out_dir = ".";
  std::string sorts_path;
  std::string heads_path;
  std::string modifiers_path;
  std::string names_path;
  std::string config_path;
  bool trace = false;
  int jobs = 1;
  coref::ResolutionConfig config;
};

struct Resources {
  coref::SortHierarchy sorts;
  coref::HeadLexicon heads;
  coref::ModifierLexicon modifiers;
  coref::NameLexicon names;
};

Resources load_resources(const RunManifest &m) {
  Resources r;
  if (!m.sorts_path.empty()) r.sorts = coref::SortHierarchy::load_file(m.sorts_path);
  if (!m.heads_path.empty()) r.heads = coref::HeadLexicon::load_file(m.heads_path);
  if (!m.modifiers_path.empty()) {
    r.modifiers = coref::ModifierLexicon::load_file(m.modifiers_path);
  }
  if (!m.names_path.empty()) r.names.load_file(m.names_path);
  return r;
}

// Outputs are written to a temporary file and renamed into place so a
// crashed run never leaves a truncated chain file behind.
void write_atomically(const fs::path &path, const std::string &content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw coref::FormatError("cannot write: " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

std::string stem_of(const std::string &input) {
  return fs::path(input).stem().string();
}

struct DocRun {
  coref::Document doc;
  coref::ResolutionResult result;
};

// Resolves every input document, in parallel when jobs > 1; the per-run
// outputs come back in input order regardless of scheduling.
std::vector<DocRun> resolve_all(const RunManifest &m, const Resources &r,
                                const coref::ResolutionConfig &config) {
  coref::Resolver resolver(r.sorts, r.modifiers, config);
  if (!m.names_path.empty()) resolver.set_known_names(&r.names);

  std::vector<DocRun> runs(m.inputs.size());
  std::vector<std::string> errors(m.inputs.size());
  std::atomic<size_t> next{0};
  int jobs = std::max(1, m.jobs);
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= m.inputs.size()) return;
      try {
        runs[i].doc = coref::parse_document_file(m.inputs[i], r.heads);
        runs[i].result = resolver.resolve(runs[i].doc);
      } catch (const std::exception &e) {
        errors[i] = e.what();
      }
    }
  };
  if (jobs == 1 || m.inputs.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread &t : pool) t.join();
  }
  for (size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) {
      throw coref::FormatError(m.inputs[i] + ": " + errors[i]);
    }
  }
  return runs;
}

int cmd_resolve(const RunManifest &m, const coref::ResolutionConfig &config) {
  Resources r = load_resources(m);
  std::vector<DocRun> runs = resolve_all(m, r, config);
  fs::create_directories(m.out_dir);
  for (size_t i = 0; i < runs.size(); ++i) {
    std::string stem = stem_of(m.inputs[i]);
    coref::ChainSet chains{runs[i].result.chains};
    write_atomically(fs::path(m.out_dir) / (stem + ".chains"),
                     coref::format_chains(chains));
    if (m.trace) {
      write_atomically(fs::path(m.out_dir) / (stem + ".trace"),
                       runs[i].result.trace);
    }
  }
  return kExitOk;
}

void check_ids(const coref::Document &doc, const coref::ChainSet &response) {
  std::set<std::string> known;
  for (const coref::Mention &m : doc.mentions) known.insert(m.id);
  std::vector<std::string> unmatched;
  for (const auto &chain : response.chains) {
    for (const std::string &id : chain) {
      if (known.count(id) == 0) unmatched.push_back(id);
    }
  }
  if (!unmatched.empty()) {
    std::string msg = "mention ids not in corpus:";
    for (const std::string &id : unmatched) msg += " " + id;
    throw coref::FormatError(msg);
  }
}

int cmd_score(const RunManifest &m, const std::string &response_path,
              bool by_type, const coref::ResolutionConfig &config) {
  Resources r = load_resources(m);
  if (m.inputs.size() != 1) {
    throw coref::FormatError("score takes exactly one --in corpus file");
  }
  coref::Document doc = coref::parse_document_file(m.inputs[0], r.heads);

  coref::ChainSet response;
  if (!response_path.empty()) {
    std::ifstream in(response_path, std::ios::binary);
    if (!in) {
      throw coref::FormatError("cannot open chains file: " + response_path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    response = coref::parse_chains(buf.str());
  } else {
    std::vector<DocRun> runs = resolve_all(m, r, config);
    response.chains = runs[0].result.chains;
  }
  check_ids(doc, response);

  coref::ChainSet key = coref::key_chains(doc);
  if (!by_type) {
    std::cout << coref::format_score(coref::muc_score(response, key));
  }
  std::cout << coref::format_type_table(
      coref::per_type_report(doc, response));
  return kExitOk;
}

int cmd_report(const RunManifest &m, const coref::ResolutionConfig &config) {
  Resources r = load_resources(m);
  std::vector<DocRun> runs = resolve_all(m, r, config);
  std::vector<coref::TypeRow> total;
  for (size_t i = 0; i < runs.size(); ++i) {
    const coref::Document &doc = runs[i].doc;
    coref::ChainSet response{runs[i].result.chains};
    coref::ChainSet key = coref::key_chains(doc);
    std::cout << "== " << (doc.doc_id.empty() ? m.inputs[i] : doc.doc_id)
              << " ==\n"
              << coref::format_score(coref::muc_score(response, key));
    std::vector<coref::TypeRow> rows = coref::per_type_report(doc, response);
    std::cout << coref::format_type_table(rows) << '\n';
    if (total.empty()) {
      total = rows;
    } else {
      for (size_t t = 0; t < rows.size(); ++t) {
        total[t].occurrences += rows[t].occurrences;
        total[t].correct += rows[t].correct;
        total[t].unscored += rows[t].unscored;
      }
    }
  }
  if (runs.size() > 1) {
    std::cout << "== all documents ==\n" << coref::format_type_table(total);
  }
  fs::create_directories(m.out_dir);
  write_atomically(fs::path(m.out_dir) / "report.tsv",
                   coref::format_type_tsv(total));
  return kExitOk;
}

int cmd_ablate(const RunManifest &m, const coref::ResolutionConfig &base,
               const coref::ResolutionConfig &ablated) {
  Resources r = load_resources(m);
  std::vector<DocRun> base_runs = resolve_all(m, r, base);
  std::vector<DocRun> ablated_runs = resolve_all(m, r, ablated);

  std::cout << "document\tbase_f1\tablated_f1\tdelta\tchanged_chains\n";
  for (size_t i = 0; i < base_runs.size(); ++i) {
    const coref::Document &doc = base_runs[i].doc;
    coref::ChainSet key = coref::key_chains(doc);
    coref::ChainSet br{base_runs[i].result.chains};
    coref::ChainSet ar{ablated_runs[i].result.chains};
    double bf = coref::muc_score(br, key).f1;
    double af = coref::muc_score(ar, key).f1;
    std::set<std::vector<std::string>> bset(br.chains.begin(),
                                            br.chains.end());
    int changed = 0;
    for (const auto &chain : ar.chains) {
      if (bset.count(chain) == 0) ++changed;
    }
    std::cout << (doc.doc_id.empty() ? m.inputs[i] : doc.doc_id) << '\t'
              << std::fixed << std::setprecision(4) << bf << '\t' << af
              << '\t' << af - bf << '\t' << changed << '\n';
  }
  return kExitOk;
}

void add_common_options(CLI::App *cmd, RunManifest &m, bool *nondestructive) {
  cmd->add_option("--in", m.inputs, "input corpus file(s)")->required();
  cmd->add_option("--out", m.out_dir, "output directory");
  cmd->add_option("--sorts", m.sorts_path, "sort hierarchy file");
  cmd->add_option("--heads", m.heads_path, "head lexicon file");
  cmd->add_option("--modifiers", m.modifiers_path, "modifier classes file");
  cmd->add_option("--names", m.names_path, "known names file");
  cmd->add_option("--config", m.config_path, "key=value config file");
  cmd->add_option("--window-pronoun", m.config.window_pronoun,
                  "pronoun window in sentences");
  cmd->add_option("--window-definite", m.config.window_definite,
                  "definite window in sentences");
  cmd->add_flag("--soft-window", m.config.soft_window,
                "admit one candidate beyond the window when none within");
  cmd->add_flag("--nondestructive", *nondestructive,
                "record ranked candidate lists instead of merging only");
  cmd->add_flag("--disable-sort-filter", m.config.disable_sort_filter,
                "ablation: skip sort consistency");
  cmd->add_flag("--disable-number-filter", m.config.disable_number_filter,
                "ablation: skip number consistency");
  cmd->add_flag("--disable-modifier-filter", m.config.disable_modifier_filter,
                "ablation: skip modifier consistency");
  cmd->add_flag("--disable-window", m.config.disable_window,
                "ablation: lift locality windows");
  cmd->add_flag("--case-normalize-names", m.config.case_normalize_names,
                "case-insensitive alias matching");
  cmd->add_flag("--trace", m.trace, "write per-anaphor decision traces");
  cmd->add_option("--jobs", m.jobs, "worker threads across documents")
      ->check(CLI::PositiveNumber);
}

// Config file first, then flags the user actually passed on top.
coref::ResolutionConfig effective_config(const CLI::App *cmd,
                                         const RunManifest &m,
                                         bool nondestructive) {
  coref::ResolutionConfig config;
  if (!m.config_path.empty()) {
    config = coref::parse_config_file(m.config_path);
  }
  auto passed = [cmd](const std::string &name) {
    return cmd->count(name) > 0;
  };
  if (passed("--window-pronoun")) config.window_pronoun = m.config.window_pronoun;
  if (passed("--window-definite")) config.window_definite = m.config.window_definite;
  if (passed("--soft-window")) config.soft_window = true;
  if (passed("--nondestructive") && nondestructive) config.destructive = false;
  if (passed("--disable-sort-filter")) config.disable_sort_filter = true;
  if (passed("--disable-number-filter")) config.disable_number_filter = true;
  if (passed("--disable-modifier-filter")) config.disable_modifier_filter = true;
  if (passed("--disable-window")) config.disable_window = true;
  if (passed("--case-normalize-names")) config.case_normalize_names = true;
  return config;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"rule-based entity coreference resolver"};
  app.require_subcommand(1);

  RunManifest m_resolve, m_score, m_ablate, m_report;
  bool nd_resolve = false, nd_score = false, nd_ablate = false,
       nd_report = false;
  std::string response_path;
  bool by_type = false;

  CLI::App *resolve =
      app.add_subcommand("resolve", "resolve documents to chain files");
  add_common_options(resolve, m_resolve, &nd_resolve);

  CLI::App *score = app.add_subcommand("score", "score chains against gold");
  add_common_options(score, m_score, &nd_score);
  score->add_option("--response", response_path,
                    "chain file to score (default: resolve first)");
  score->add_flag("--by-type", by_type, "per-type table only, no MUC line");

  CLI::App *ablate =
      app.add_subcommand("ablate", "compare default against ablated config");
  add_common_options(ablate, m_ablate, &nd_ablate);

  CLI::App *report =
      app.add_subcommand("report", "resolve and report per-type tables");
  add_common_options(report, m_report, &nd_report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (resolve->parsed()) {
      return cmd_resolve(m_resolve,
                         effective_config(resolve, m_resolve, nd_resolve));
    }
    if (score->parsed()) {
      return cmd_score(m_score, response_path, by_type,
                       effective_config(score, m_score, nd_score));
    }
    if (ablate->parsed()) {
      coref::ResolutionConfig base;
      if (!m_ablate.config_path.empty()) {
        base = coref::parse_config_file(m_ablate.config_path);
      }
      return cmd_ablate(m_ablate, base,
                        effective_config(ablate, m_ablate, nd_ablate));
    }
    if (report->parsed()) {
      return cmd_report(m_report,
                        effective_config(report, m_report, nd_report));
    }
  } catch (const coref::FormatError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

#include "oeuvre/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>
#include <openssl/evp.h>

#include "oeuvre/authorship.hpp"
#include "oeuvre/blocking.hpp"
#include "oeuvre/citation_index.hpp"
#include "oeuvre/clustering.hpp"
#include "oeuvre/corpus.hpp"
#include "oeuvre/decisions.hpp"
#include "oeuvre/error.hpp"
#include "oeuvre/evalkit.hpp"
#include "oeuvre/review_service.hpp"
#include "oeuvre/scoring.hpp"
#include "oeuvre/synth.hpp"

namespace fs = std::filesystem;

namespace oeuvre::cli {

namespace {

using ojson = nlohmann::ordered_json;

YearWindow window_from_json(const nlohmann::json& v) {
  if (v.is_string()) return YearWindow::parse(v.get<std::string>());
  if (v.is_array() && v.size() == 2) return YearWindow::make(v[0].get<int>(), v[1].get<int>());
  throw InputError("config: window must be \"Y0:Y1\" or [y0, y1]");
}

std::optional<int> threshold_from_json(const nlohmann::json& v) {
  if (v.is_string() && v.get<std::string>() == "block-size") return std::nullopt;
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_object() && v.contains("fixed")) return v.at("fixed").get<int>();
  throw InputError("config: threshold must be \"block-size\", an integer or {\"fixed\": N}");
}

// Collects digests of everything a run read and wrote.
class Manifest {
 public:
  Manifest(std::string command, const PipelineConfig& cfg) : command_(std::move(command)), cfg_(cfg) {}

  const std::string& input(const std::string& role, const std::string& path) {
    if (path.empty()) throw InputError(command_ + ": missing --" + role);
    if (!fs::is_regular_file(path)) throw InputError(command_ + ": " + role + " file '" + path + "' not found");
    inputs_[role] = ojson{{"path", path}, {"sha256", sha256_file(path)}};
    return path;
  }

  // Writes out_dir/name through `fill`.
  void output(const std::string& name, const std::function<void(std::ostream&)>& fill) {
    fs::path p = fs::path(cfg_.out_dir) / name;
    {
      std::ofstream f(p, std::ios::binary | std::ios::trunc);
      if (!f) throw InputError("cannot write '" + p.string() + "'");
      fill(f);
      if (!f) throw InputError("write failed for '" + p.string() + "'");
    }
    outputs_[name] = sha256_file(p.string());
  }

  void finish() {
    ojson j{{"command", command_}, {"config", to_json(cfg_)}, {"inputs", inputs_}, {"outputs", outputs_}};
    std::ofstream f(fs::path(cfg_.out_dir) / (command_ + ".manifest.json"), std::ios::binary | std::ios::trunc);
    f << j.dump(2) << '\n';
  }

 private:
  std::string command_;
  const PipelineConfig& cfg_;
  ojson inputs_ = ojson::object();
  ojson outputs_ = ojson::object();
};

NormalizeOptions norm(const PipelineConfig& cfg) { return NormalizeOptions{cfg.fold_diacritics}; }

int cmd_ingest(const PipelineConfig& cfg, std::ostream& out) {
  Manifest m("ingest", cfg);
  Corpus corpus = Corpus::parse_file(m.input("corpus", cfg.corpus), norm(cfg));
  auto blocks = build_blocks(corpus);
  m.output("corpus.jsonl", [&](std::ostream& o) { corpus.write_jsonl(o); });
  m.output("blocks.jsonl", [&](std::ostream& o) { write_blocks_jsonl(o, corpus, blocks); });
  m.finish();
  out << corpus.publications().size() << " publications, " << corpus.pacs().size() << " PACs, " << blocks.size()
      << " blocks\n";
  return ok;
}

int cmd_cluster(const PipelineConfig& cfg, std::ostream& out) {
  Manifest m("cluster", cfg);
  Corpus corpus = Corpus::parse_file(m.input("corpus", cfg.corpus), norm(cfg));
  auto index = CitationIndex::build(corpus);
  auto blocks = build_blocks(corpus);
  GeneralNames general = cfg.general_names.empty()
                             ? GeneralNames::from_blocks(corpus, blocks)
                             : GeneralNames::read_file(m.input("general-names", cfg.general_names));
  ScoringContext ctx(corpus, index, std::move(blocks), std::move(general));

  ClusterOptions opts;
  opts.policy.fixed = cfg.fixed_threshold;
  opts.policy.boundary = cfg.strict_threshold ? Boundary::strict : Boundary::inclusive;
  opts.threads = cfg.threads;
  auto clusters = cluster_corpus(ctx, opts);
  check_partition(corpus, clusters);

  m.output("clusters.jsonl", [&](std::ostream& o) { write_clusters_jsonl(o, clusters); });
  if (cfg.trace_scores) m.output("scores.jsonl", [&](std::ostream& o) { write_score_trace(o, ctx); });
  m.finish();
  out << corpus.pacs().size() << " PACs in " << ctx.blocks().size() << " blocks -> " << clusters.size()
      << " clusters\n";
  return ok;
}

int cmd_match(const PipelineConfig& cfg, std::ostream& out) {
  Manifest m("match", cfg);
  ClusterTable table(read_clusters_file(m.input("clusters", cfg.clusters)));
  auto roster = read_roster_file(m.input("roster", cfg.roster));

  std::vector<CandidateRecord> rows;
  std::size_t in_window = 0;
  for (const auto& e : roster) {
    auto ids = retrieve_clusters(e, table);
    auto kept = window_filter(table, ids, cfg.window);
    for (auto id : ids) {
      bool w = std::binary_search(kept.begin(), kept.end(), id);
      in_window += w;
      rows.push_back({e.person_id, id, w});
    }
  }
  m.output("candidates.jsonl", [&](std::ostream& o) { write_candidates_jsonl(o, rows, table); });
  m.finish();
  out << rows.size() << " name-matched clusters, " << in_window << " inside " << cfg.window.str() << '\n';
  return ok;
}

int cmd_baseline(const PipelineConfig& cfg, BaselineMode mode, std::ostream& out) {
  Manifest m("baseline", cfg);
  Corpus corpus = Corpus::parse_file(m.input("corpus", cfg.corpus), norm(cfg));
  auto roster = read_roster_file(m.input("roster", cfg.roster));
  auto rows = baseline_assign(mode, roster, corpus, cfg.window);
  auto label = mode == BaselineMode::initials ? "baseline1" : "baseline2";
  m.output(std::string("portfolio_") + label + ".csv", [&](std::ostream& o) { write_portfolio_csv(o, rows, label); });
  m.finish();
  out << rows.size() << " authorships (" << label << ")\n";
  return ok;
}

int cmd_filter(const PipelineConfig& cfg, std::ostream& out) {
  Scenario sc = parse_scenario(cfg.scenario);
  if (sc == Scenario::baseline1) return cmd_baseline(cfg, BaselineMode::initials, out);
  if (sc == Scenario::baseline2) return cmd_baseline(cfg, BaselineMode::fullname, out);

  Manifest m("filter", cfg);
  Corpus corpus = Corpus::parse_file(m.input("corpus", cfg.corpus), norm(cfg));
  ClusterTable table(read_clusters_file(m.input("clusters", cfg.clusters)));
  auto roster = read_roster_file(m.input("roster", cfg.roster));
  auto records = read_candidates_file(m.input("candidates", cfg.candidates));
  CandidateMap candidates = windowed_candidates(records, roster);

  std::vector<Assignment> rows;
  if (sc == Scenario::s3) {
    auto decisions = read_decisions_file(m.input("decisions", cfg.decisions));
    rows = apply_decisions(candidates, decisions);
  } else {
    SynonymMap synonyms;
    if (!cfg.synonyms.empty()) synonyms = SynonymMap::read_file(m.input("synonyms", cfg.synonyms));
    FilterOptions opts{&synonyms, cfg.career_cities};
    for (const auto& e : roster) {
      const auto& ids = candidates.at(e.person_id);
      auto part = sc == Scenario::s1 ? scenario1_filter(table, ids, e, opts) : scenario2_filter(table, ids, e, opts);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  }

  std::string label(to_string(sc));
  m.output("assignments_" + label + ".jsonl", [&](std::ostream& o) { write_assignments_jsonl(o, rows); });
  require_final(rows);
  auto authorships = portfolio_of(rows, table, corpus, cfg.window);
  m.output("portfolio_" + label + ".csv", [&](std::ostream& o) { write_portfolio_csv(o, authorships, label); });
  m.finish();

  std::size_t kept = std::count_if(rows.begin(), rows.end(), [](const Assignment& a) { return a.status == Status::kept; });
  out << kept << " of " << rows.size() << " candidate clusters kept, " << authorships.size() << " authorships ("
      << label << ")\n";
  return ok;
}

int cmd_evaluate(const PipelineConfig& cfg, std::ostream& out) {
  Manifest m("evaluate", cfg);
  auto gold = read_authorships_file(m.input("gold", cfg.gold));
  auto retrieved = read_authorships_file(m.input("retrieved", cfg.retrieved));

  std::vector<std::string> people;
  if (!cfg.roster.empty()) {
    for (const auto& e : read_roster_file(m.input("roster", cfg.roster))) people.push_back(e.person_id);
  } else {
    std::set<std::string> seen;
    for (const auto& a : gold) seen.insert(a.person_id);
    for (const auto& a : retrieved) seen.insert(a.person_id);
    people.assign(seen.begin(), seen.end());
  }
  auto report = evaluate(gold, retrieved, people);
  m.output("evaluation.json", [&](std::ostream& o) { write_report_json(o, report); });
  m.output("per_person.csv", [&](std::ostream& o) { write_per_person_csv(o, report); });
  m.output("histogram.csv", [&](std::ostream& o) { write_histogram_csv(o, report); });
  m.finish();

  const auto& a = report.aggregate;
  out << "retrieved " << a.retrieved << ", FP " << a.false_positives << ", FN " << a.false_negatives << ": P "
      << percent(a.precision) << " R " << percent(a.recall) << " F " << percent(a.f_measure) << '\n';
  return ok;
}

int cmd_gen(const PipelineConfig& cfg, std::ostream& out) {
  Manifest m("gen", cfg);
  if (cfg.fixture == "bernelli") {
    Corpus corpus = Corpus::from_publications(synth::bernelli_fixture(), norm(cfg));
    std::vector<RosterEntry> roster{synth::bernelli_roster_entry()};
    m.output("corpus.jsonl", [&](std::ostream& o) { corpus.write_jsonl(o); });
    m.output("roster.csv", [&](std::ostream& o) { write_roster_csv(o, roster); });
    m.finish();
    out << corpus.publications().size() << " publications (bernelli fixture)\n";
    return ok;
  }
  if (!cfg.fixture.empty()) throw InputError("gen: unknown fixture '" + cfg.fixture + "'");

  synth::PopulationOptions opts;
  opts.seed = cfg.seed;
  opts.researchers = cfg.researchers;
  opts.window = cfg.window;
  auto pop = synth::generate_population(opts);
  std::size_t n_pubs = pop.publications.size();
  Corpus corpus = Corpus::from_publications(std::move(pop.publications), norm(cfg));
  m.output("corpus.jsonl", [&](std::ostream& o) { corpus.write_jsonl(o); });
  m.output("roster.csv", [&](std::ostream& o) { write_roster_csv(o, pop.roster); });
  m.output("gold.csv", [&](std::ostream& o) { write_portfolio_csv(o, pop.gold, "gold"); });
  m.output("planted.jsonl", [&](std::ostream& o) {
    for (const auto& p : pop.planted) {
      ojson pacs = ojson::array();
      for (const auto& id : p.pacs) pacs.push_back({id.pub_id, id.position});
      o << ojson{{"person_id", p.person_id},
                 {"kind", p.kind == synth::HomonymKind::foreign ? "foreign" : "other_city"},
                 {"pac_ids", pacs}}
               .dump()
        << '\n';
    }
  });
  m.finish();
  out << n_pubs << " publications, " << pop.roster.size() << " researchers, " << pop.planted.size()
      << " planted homonyms\n";
  return ok;
}

int cmd_serve(const PipelineConfig& cfg, std::ostream& out) {
  Manifest m("serve", cfg);
  Corpus corpus = Corpus::parse_file(m.input("corpus", cfg.corpus), norm(cfg));
  ClusterTable table(read_clusters_file(m.input("clusters", cfg.clusters)));
  auto roster = read_roster_file(m.input("roster", cfg.roster));
  auto records = read_candidates_file(m.input("candidates", cfg.candidates));
  if (cfg.decisions.empty()) throw InputError("serve: missing --decisions (created when absent)");
  DecisionLog log(cfg.decisions);

  ReviewService service(corpus, table, roster, windowed_candidates(records, roster), log);
  const char* token = std::getenv("OEUVRE_TOKEN");
  httplib::Server server;
  mount_review_api(server, service, token ? token : "", cfg.static_dir);

  int port = cfg.port;
  if (port == 0) {
    port = server.bind_to_any_port(cfg.host);
  } else if (!server.bind_to_port(cfg.host, port)) {
    port = -1;
  }
  if (port < 0) throw InputError("serve: cannot bind " + cfg.host + ":" + std::to_string(cfg.port));
  out << "listening on http://" << cfg.host << ":" << port << std::endl;
  server.listen_after_bind();
  return ok;
}

}  // namespace

void apply_config(PipelineConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("config: expected a JSON object");
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "corpus") cfg.corpus = v.get<std::string>();
      else if (key == "roster") cfg.roster = v.get<std::string>();
      else if (key == "gold") cfg.gold = v.get<std::string>();
      else if (key == "decisions") cfg.decisions = v.get<std::string>();
      else if (key == "clusters") cfg.clusters = v.get<std::string>();
      else if (key == "candidates") cfg.candidates = v.get<std::string>();
      else if (key == "retrieved") cfg.retrieved = v.get<std::string>();
      else if (key == "out_dir") cfg.out_dir = v.get<std::string>();
      else if (key == "general_names") cfg.general_names = v.get<std::string>();
      else if (key == "synonyms") cfg.synonyms = v.get<std::string>();
      else if (key == "window") cfg.window = window_from_json(v);
      else if (key == "scenario") cfg.scenario = v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>());
      else if (key == "mode") cfg.mode = v.get<std::string>();
      else if (key == "threshold") cfg.fixed_threshold = threshold_from_json(v);
      else if (key == "strict_threshold") cfg.strict_threshold = v.get<bool>();
      else if (key == "fold_diacritics") cfg.fold_diacritics = v.get<bool>();
      else if (key == "career_cities") cfg.career_cities = v.get<bool>();
      else if (key == "trace_scores") cfg.trace_scores = v.get<bool>();
      else if (key == "threads") cfg.threads = v.get<int>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "researchers") cfg.researchers = v.get<std::size_t>();
      else if (key == "fixture") cfg.fixture = v.get<std::string>();
      else if (key == "host") cfg.host = v.get<std::string>();
      else if (key == "port") cfg.port = v.get<int>();
      else if (key == "static_dir") cfg.static_dir = v.get<std::string>();
      else throw InputError("config: unknown key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw InputError("config: bad value for '" + key + "': " + e.what());
    }
  }
  if (cfg.threads < 1) throw InputError("config: threads must be >= 1");
}

PipelineConfig read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("config file '" + path + "' not found");
  PipelineConfig cfg;
  try {
    apply_config(cfg, nlohmann::json::parse(f));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("config '" + path + "': " + e.what());
  }
  return cfg;
}

ojson to_json(const PipelineConfig& c) {
  return ojson{{"corpus", c.corpus},
               {"roster", c.roster},
               {"gold", c.gold},
               {"decisions", c.decisions},
               {"clusters", c.clusters},
               {"candidates", c.candidates},
               {"retrieved", c.retrieved},
               {"out_dir", c.out_dir},
               {"general_names", c.general_names},
               {"synonyms", c.synonyms},
               {"window", c.window.str()},
               {"scenario", c.scenario},
               {"mode", c.mode},
               {"threshold", c.fixed_threshold ? ojson(*c.fixed_threshold) : ojson("block-size")},
               {"strict_threshold", c.strict_threshold},
               {"fold_diacritics", c.fold_diacritics},
               {"career_cities", c.career_cities},
               {"trace_scores", c.trace_scores},
               {"threads", c.threads},
               {"seed", c.seed},
               {"researchers", c.researchers},
               {"fixture", c.fixture},
               {"host", c.host},
               {"port", c.port},
               {"static_dir", c.static_dir}};
}

std::string sha256_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read '" + path + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (f.read(buf, sizeof buf) || f.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(f.gcount()));
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &len);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Author name disambiguation and portfolio matching", "oeuvre"};
  app.require_subcommand(1);
  app.fallthrough();

  PipelineConfig cfg;
  std::vector<std::function<void()>> overrides;
  auto text = [&](const std::string& flag, std::string& field, const std::string& help) {
    auto v = std::make_shared<std::string>();
    auto* o = app.add_option(flag, *v, help);
    overrides.push_back([o, v, &field] {
      if (o->count()) field = *v;
    });
    return o;
  };
  auto flag = [&](const std::string& name, bool& field, const std::string& help) {
    auto* o = app.add_flag(name, help);
    overrides.push_back([o, &field] {
      if (o->count()) field = true;
    });
  };

  std::string config_path;
  app.add_option("--config", config_path, "JSON file mirroring the pipeline config; flags override it");
  text("--corpus", cfg.corpus, "publications JSONL");
  text("--roster", cfg.roster, "roster CSV");
  text("--gold", cfg.gold, "gold authorships CSV (person_id,pub_id)");
  text("--retrieved", cfg.retrieved, "portfolio CSV to evaluate");
  text("--clusters", cfg.clusters, "clusters JSONL from `cluster`");
  text("--candidates", cfg.candidates, "candidates JSONL from `match`");
  text("--decisions", cfg.decisions, "review decisions JSONL");
  text("--out", cfg.out_dir, "output directory");
  text("--general-names", cfg.general_names, "general first names, one per line");
  text("--synonyms", cfg.synonyms, "place synonyms CSV (alias,canonical)");
  text("--scenario", cfg.scenario, "1, 2, 3, baseline1 or baseline2");
  text("--mode", cfg.mode, "baseline mode: initials or fullname");
  text("--fixture", cfg.fixture, "gen: named fixture (bernelli)");
  text("--host", cfg.host, "serve: bind address");
  text("--static", cfg.static_dir, "serve: static asset directory mounted at /");

  auto window = std::make_shared<std::string>();
  auto* o_window = app.add_option("--window", *window, "Y0:Y1");
  overrides.push_back([o_window, window, &cfg] {
    if (o_window->count()) cfg.window = YearWindow::parse(*window);
  });
  auto threshold = std::make_shared<int>();
  auto* o_threshold = app.add_option("--threshold", *threshold, "fixed linkage threshold instead of the size table");
  overrides.push_back([o_threshold, threshold, &cfg] {
    if (o_threshold->count()) cfg.fixed_threshold = *threshold;
  });
  auto threads = std::make_shared<int>();
  auto* o_threads = app.add_option("--threads", *threads, "worker threads for `cluster`")->check(CLI::PositiveNumber);
  overrides.push_back([o_threads, threads, &cfg] {
    if (o_threads->count()) cfg.threads = *threads;
  });
  auto seed = std::make_shared<std::uint64_t>();
  auto* o_seed = app.add_option("--seed", *seed, "gen: RNG seed");
  overrides.push_back([o_seed, seed, &cfg] {
    if (o_seed->count()) cfg.seed = *seed;
  });
  auto researchers = std::make_shared<std::size_t>();
  auto* o_res = app.add_option("--researchers", *researchers, "gen: roster size");
  overrides.push_back([o_res, researchers, &cfg] {
    if (o_res->count()) cfg.researchers = *researchers;
  });
  auto port = std::make_shared<int>();
  auto* o_port = app.add_option("--port", *port, "serve: TCP port (0 picks a free one)");
  overrides.push_back([o_port, port, &cfg] {
    if (o_port->count()) cfg.port = *port;
  });
  flag("--strict", cfg.strict_threshold, "link only when the score exceeds the threshold");
  flag("--trace-scores", cfg.trace_scores, "cluster: also write scores.jsonl");
  flag("--career-cities", cfg.career_cities, "S2: accept cities from the roster career records");
  auto* o_nofold = app.add_flag("--no-fold", "keep diacritics when normalizing");
  overrides.push_back([o_nofold, &cfg] {
    if (o_nofold->count()) cfg.fold_diacritics = false;
  });

  std::map<std::string, std::function<int()>> commands{
      {"ingest", [&] { return cmd_ingest(cfg, out); }},
      {"cluster", [&] { return cmd_cluster(cfg, out); }},
      {"match", [&] { return cmd_match(cfg, out); }},
      {"filter", [&] { return cmd_filter(cfg, out); }},
      {"baseline", [&] { return cmd_baseline(cfg, parse_baseline_mode(cfg.mode), out); }},
      {"evaluate", [&] { return cmd_evaluate(cfg, out); }},
      {"gen", [&] { return cmd_gen(cfg, out); }},
      {"serve", [&] { return cmd_serve(cfg, out); }},
  };
  app.add_subcommand("ingest", "validate a corpus; write corpus.jsonl and blocks.jsonl");
  app.add_subcommand("cluster", "blocks, pair scores, components, email merge, metadata -> clusters.jsonl");
  app.add_subcommand("match", "name variants, retrieval, window -> candidates.jsonl");
  app.add_subcommand("filter", "scenario 1/2 filters or scenario 3 decisions -> assignments, portfolio");
  app.add_subcommand("baseline", "initials / fullname baselines -> portfolio");
  app.add_subcommand("evaluate", "precision, recall, F-measure against gold");
  app.add_subcommand("gen", "synthetic population or named fixture");
  app.add_subcommand("serve", "review HTTP API");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (!config_path.empty()) cfg = read_config_file(config_path);
    for (auto& apply : overrides) apply();
    if (!cfg.out_dir.empty()) fs::create_directories(cfg.out_dir);
    return commands.at(app.get_subcommands().front()->get_name())();
  } catch (const PendingDecisionsError& e) {
    err << "pending: " << e.what() << '\n';
    return pending_decisions;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return invariant_breach;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return bad_input;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return bad_input;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return bad_input;
  } catch (const fs::filesystem_error& e) {
    err << "input error: " << e.what() << '\n';
    return bad_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return invariant_breach;
  }
}

}  // namespace oeuvre::cli

#include "pptdata/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pptdata/corpus_io.hpp"
#include "pptdata/efficiency.hpp"
#include "pptdata/grammar_gen.hpp"
#include "pptdata/metamer.hpp"
#include "pptdata/pipeline.hpp"
#include "pptdata/recognizers.hpp"

namespace pptdata::cli {

namespace fs = std::filesystem;

namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::string s = buf;
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

std::string format_percent(double fraction) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%%", fraction * 100.0);
  return buf;
}

fs::path default_out_dir() {
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return ".";
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return read_lines(in);
}

constexpr std::string_view kOpenBrackets = "([{<";
constexpr std::string_view kCloseBrackets = ")]}>";

struct ParsedLine {
  std::vector<Token> tokens;
  bool brackets = false;
  std::uint32_t bracket_types = 0;  // 1 + highest bracket type on the line
};

// Either whitespace-separated integers or bracket characters; in bracket
// notation closes are stored as negative markers until k is known.
ParsedLine parse_token_line(const std::string& line, std::vector<int>& bracket_marks) {
  ParsedLine p;
  bracket_marks.clear();
  if (line.find_first_of("()[]{}<>") != std::string::npos) {
    p.brackets = true;
    for (char ch : line) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (auto o = kOpenBrackets.find(ch); o != std::string_view::npos) {
        bracket_marks.push_back(static_cast<int>(o) + 1);
        p.bracket_types = std::max<std::uint32_t>(p.bracket_types, static_cast<std::uint32_t>(o) + 1);
      } else if (auto c = kCloseBrackets.find(ch); c != std::string_view::npos) {
        bracket_marks.push_back(-(static_cast<int>(c) + 1));
        p.bracket_types = std::max<std::uint32_t>(p.bracket_types, static_cast<std::uint32_t>(c) + 1);
      } else {
        throw FormatError(std::string("unexpected character '") + ch + "' in bracket notation");
      }
    }
    return p;
  }
  std::istringstream in(line);
  std::string word;
  while (in >> word) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(word, &used);
      if (used != word.size() || v > 0xFFFFFFFFul) throw std::out_of_range("token");
      p.tokens.push_back(static_cast<Token>(v));
    } catch (const std::exception&) {
      throw FormatError("bad token '" + word + "'");
    }
  }
  return p;
}

std::vector<Token> resolve_brackets(const std::vector<int>& marks, std::uint32_t k) {
  std::vector<Token> tokens;
  tokens.reserve(marks.size());
  for (int m : marks) {
    const std::uint32_t type = static_cast<std::uint32_t>(std::abs(m) - 1);
    if (type >= k) throw InvalidArgument("bracket type exceeds k");
    tokens.push_back(m > 0 ? type : type + k);
  }
  return tokens;
}

std::string verdict_json(const MembershipVerdict& v) {
  nlohmann::json j = {{"k", v.k},
                      {"kdyck_stack", v.kdyck_stack},
                      {"kdyck_fom", v.kdyck_fom},
                      {"shuffle", v.shuffle},
                      {"ww", v.ww},
                      {"disagreement", v.disagreement}};
  j["dyck1_counting"] = v.dyck1_counting ? nlohmann::json(*v.dyck1_counting) : nlohmann::json(nullptr);
  return j.dump();
}

void save_corpus(const PackedCorpus& c, const fs::path& corpus_path) {
  write_corpus(c, corpus_path);
  auto manifest_path = corpus_path;
  manifest_path.replace_extension(".manifest.json");
  write_manifest(c.manifest, manifest_path);
}

void print_corpus_summary(const PackedCorpus& c, const fs::path& path, std::ostream& out) {
  const auto report = corpus_report(c);
  out << "wrote " << path.string() << "\n"
      << "  family=" << c.manifest.family << " vocab_size=" << c.manifest.vocab_size
      << " window_length=" << c.manifest.window_length << "\n"
      << "  documents=" << report.documents << " windows=" << report.rows << " tokens=" << report.total_tokens
      << " dropped_tokens=" << report.dropped_tokens << "\n"
      << "  truncation_rate=" << format_number(report.truncation_rate) << "\n";
}

struct GenOptions {
  std::string family = "shuffle";
  std::uint32_t k = 64;
  std::uint64_t tokens = 30'000'000;
  std::uint64_t seed = 0;
  double p_open = 0.5;
  std::uint32_t max_depth = 16;
  std::uint32_t max_length = 2048;
  std::uint32_t window = 2048;
  std::uint64_t tokens_per_step = kReferenceTokensPerStep;
  std::string out_dir;
  std::string name;
  std::string config;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  if (!o.config.empty()) {
    PipelineConfig cfg = load_pipeline_config(o.config);
    if (!o.out_dir.empty()) cfg.output_dir = o.out_dir;
    ensure_dir(cfg.output_dir);
    std::map<std::string, std::vector<TokenSeq>> generated;
    std::map<std::string, LanguageSpec> specs;
    for (const auto& d : cfg.datasets) {
      if (!d.spec) continue;
      auto docs = generate_documents(*d.spec, d.tokens, o.threads);
      const auto c = build_corpus(*d.spec, docs, cfg.window_length);
      const auto path = cfg.output_dir / (d.name + ".pptc");
      save_corpus(c, path);
      print_corpus_summary(c, path, out);
      specs[d.name] = *d.spec;
      generated[d.name] = std::move(docs);
    }
    for (const auto& d : cfg.datasets) {
      if (!d.metamer_of) continue;
      const auto& source_spec = specs.at(*d.metamer_of);
      const auto model = fit_ngram(generated.at(*d.metamer_of), d.metamer_order);
      const auto docs = sample_metamer(model, {d.tokens, source_spec.max_length, cfg.seed});
      PackedCorpus c = pack(docs, cfg.window_length);
      c.manifest.family = metamer_family(d.metamer_order, std::string(family_name(source_spec.family)));
      c.manifest.spec = {{"order", d.metamer_order},
                         {"source", *d.metamer_of},
                         {"source_spec", spec_to_json(source_spec)},
                         {"doc_length", source_spec.max_length},
                         {"seed", cfg.seed}};
      c.manifest.seed = cfg.seed;
      const auto path = cfg.output_dir / (d.name + ".pptc");
      save_corpus(c, path);
      print_corpus_summary(c, path, out);
    }
    return kOk;
  }

  LanguageSpec spec;
  spec.family = parse_family(o.family);
  spec.k = o.k;
  spec.p_open = o.p_open;
  spec.max_depth = o.max_depth;
  spec.max_length = o.max_length;
  spec.seed = o.seed;

  const fs::path dir = o.out_dir.empty() ? default_out_dir() : fs::path(o.out_dir);
  ensure_dir(dir);
  const std::string name = o.name.empty() ? std::string(family_name(spec.family)) + "-k" + std::to_string(spec.k) +
                                                "-seed" + std::to_string(spec.seed)
                                          : o.name;
  const auto docs = generate_documents(spec, o.tokens, o.threads);
  const auto c = build_corpus(spec, docs, o.window);
  const auto path = dir / (name + ".pptc");
  save_corpus(c, path);
  print_corpus_summary(c, path, out);
  out << "  tokens_per_step=" << o.tokens_per_step << " (steps=" << format_number(double(c.tokens.size()) / double(o.tokens_per_step))
      << ")\n";
  return kOk;
}

struct CheckOptions {
  std::string family = "all";
  std::optional<std::uint32_t> k;
  std::string input;
  std::string corpus;
};

int cmd_check(const CheckOptions& o, std::istream& in, std::ostream& out) {
  struct Doc {
    std::vector<Token> tokens;
    std::uint32_t k;
  };
  std::vector<Doc> docs;
  const bool needs_k = o.family != "ww";

  if (!o.corpus.empty()) {
    const auto c = read_corpus(o.corpus);
    const std::uint32_t k = o.k.value_or(std::max<std::uint32_t>(1, c.manifest.vocab_size / 2));
    for (auto& d : unpack(c)) docs.push_back({std::move(d.tokens), k});
  } else {
    std::vector<std::string> lines;
    if (o.input.empty() || o.input == "-") {
      lines = read_lines(in);
    } else {
      lines = read_lines(fs::path(o.input));
    }
    std::vector<int> marks;
    for (const auto& line : lines) {
      ParsedLine p = parse_token_line(line, marks);
      std::uint32_t k = 0;
      if (p.brackets) {
        k = o.k.value_or(std::max<std::uint32_t>(1, p.bracket_types));
        p.tokens = resolve_brackets(marks, k);
      } else if (o.k) {
        k = *o.k;
      } else if (needs_k) {
        throw InvalidArgument("integer token input needs -k");
      }
      docs.push_back({std::move(p.tokens), k});
    }
  }

  for (const auto& d : docs) {
    const std::span<const Token> t(d.tokens);
    if (o.family == "all") {
      out << verdict_json(classify(t, d.k)) << "\n";
      continue;
    }
    bool ok;
    if (o.family == "shuffle" || o.family == "dyck-shuffle") {
      ok = recognize_shuffle(t, d.k);
    } else if (o.family == "nested" || o.family == "dyck-nested" || o.family == "stack") {
      ok = recognize_stack_kdyck(t, d.k);
    } else if (o.family == "fom") {
      ok = recognize_fom_kdyck(t, d.k);
    } else if (o.family == "1dyck") {
      ok = recognize_counting_1dyck(t);
    } else if (o.family == "ww") {
      ok = recognize_ww(t);
    } else {
      throw InvalidArgument("unknown recognizer '" + o.family + "'");
    }
    out << (ok ? "accept" : "reject") << "\n";
  }
  return kOk;
}

struct PackOptions {
  std::string input;
  std::uint32_t vocab = 0;
  std::uint32_t window = 2048;
  std::string family = "unknown";
  std::string output;
};

int cmd_pack(const PackOptions& o, std::istream& in, std::ostream& out) {
  const auto lines = o.input.empty() || o.input == "-" ? read_lines(in) : read_lines(fs::path(o.input));
  std::vector<TokenSeq> docs;
  std::vector<int> marks;
  Token max_token = 0;
  for (const auto& line : lines) {
    ParsedLine p = parse_token_line(line, marks);
    if (p.brackets) throw FormatError("pack expects integer tokens");
    if (p.tokens.empty()) continue;
    TokenSeq d;
    d.tokens = std::move(p.tokens);
    max_token = std::max(max_token, *std::max_element(d.tokens.begin(), d.tokens.end()));
    docs.push_back(std::move(d));
  }
  const std::uint32_t vocab = o.vocab ? o.vocab : max_token + 1;
  for (auto& d : docs) d.vocab_size = vocab;
  PackedCorpus c = pack(docs, o.window);
  c.manifest.vocab_size = vocab;
  c.manifest.family = o.family;
  save_corpus(c, o.output);
  print_corpus_summary(c, o.output, out);
  return kOk;
}

int cmd_stats(const std::string& corpus, std::optional<std::uint32_t> k, std::ostream& out) {
  const auto c = read_corpus(corpus);
  const auto p = depth_stats(c, k.value_or(c.manifest.vocab_size / 2));
  nlohmann::json j = {{"positions", p.positions},
                      {"max_depth", p.max_depth},
                      {"mean_depth", p.mean_depth},
                      {"histogram", p.histogram}};
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_report(const std::string& corpus, const std::string& manifest_out, std::ostream& out) {
  const auto c = read_corpus(corpus);
  if (!manifest_out.empty()) write_manifest(c.manifest, manifest_out);
  out << report_to_json(corpus_report(c)).dump(2) << "\n";
  return kOk;
}

struct MrsOptions {
  std::string baseline;
  std::string run;
  std::optional<double> eval_step;
  std::optional<std::size_t> smooth;
  std::string plot_data;
};

int cmd_mrs(const MrsOptions& o, std::ostream& out) {
  const LossCurve base = read_loss_curve(o.baseline);
  const LossCurve run = read_loss_curve(o.run);
  const double eval_step = o.eval_step.value_or(double(base.points.back().step));
  const auto r = compare_runs(base, run, eval_step, o.smooth);

  out << "baseline=" << base.label << " run=" << run.label << " ppt_steps=" << run.ppt_steps << "\n";
  out << "eval_step=" << format_number(r.eval_step) << " target_loss=" << format_number(r.target_loss) << "\n";
  out << "crossing_step=" << format_number(r.run_point.pt) << " raw_crossing_step=" << format_number(r.raw_crossing);
  if (r.smoothing_window) out << " smoothing_window=" << *r.smoothing_window;
  out << "\n";
  if (r.non_monotone) out << "warning: run curve is non-monotone before the crossing; used the first downward crossing\n";
  out << "MRS=" << format_number(r.mrs_steps) << "\n";
  out << "MRS_tokens=" << format_number(r.mrs_tokens) << "\n";
  out << "efficiency=" << format_percent(r.efficiency) << "\n";

  out << "indifference table:\nloss,baseline_step,run_step\n";
  for (const auto& p : base.points) {
    out << format_number(p.loss) << ',' << format_number(indifference_point(base, p.loss).step) << ',';
    try {
      out << format_number(indifference_point(run, p.loss).step);
    } catch (const NotReached&) {
      out << "not_reached";
    }
    out << "\n";
  }

  if (!o.plot_data.empty()) {
    std::ofstream plot(o.plot_data, std::ios::trunc);
    if (!plot) throw IoError("cannot open '" + o.plot_data + "' for writing");
    plot << "curve,step,loss\n";
    for (const auto* c : {&base, &run})
      for (const auto& p : c->points) plot << c->label << ',' << p.step << ',' << format_number(p.loss) << "\n";
  }
  return kOk;
}

struct MetamerFitOptions {
  std::string corpus;
  int order = 3;
  std::string output;
};

struct MetamerSampleOptions {
  std::string model;
  std::uint64_t tokens = 0;
  std::uint32_t doc_length = 2048;
  std::uint64_t seed = 0;
  std::uint32_t window = 2048;
  std::string source_family = "unknown";
  std::string output;
};

int cmd_metamer_fit(const MetamerFitOptions& o, std::ostream& out) {
  const auto c = read_corpus(o.corpus);
  const auto docs = unpack(c);
  const auto model = fit_ngram(docs, o.order);
  model.save(o.output);
  out << "wrote " << o.output << " order=" << model.order() << " vocab_size=" << model.vocab_size()
      << " contexts=" << model.num_contexts() << " total_tokens=" << model.total_tokens() << "\n";
  return kOk;
}

int cmd_metamer_sample(const MetamerSampleOptions& o, std::ostream& out) {
  const auto model = NGramModel::load(o.model);
  const auto docs = sample_metamer(model, {o.tokens, o.doc_length, o.seed});
  PackedCorpus c = pack(docs, o.window);
  c.manifest.family = metamer_family(model.order(), o.source_family);
  c.manifest.spec = {{"order", model.order()}, {"source", o.source_family}, {"doc_length", o.doc_length},
                     {"seed", o.seed}, {"model", o.model}};
  c.manifest.seed = o.seed;
  save_corpus(c, o.output);
  print_corpus_summary(c, o.output, out);
  return kOk;
}

struct EvalGenOptions {
  std::string wordlist;
  std::string names;
  std::size_t list_len = 3;
  std::uint64_t count = 100;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_eval_gen(const EvalGenOptions& o, std::ostream& out) {
  std::vector<std::string> words = default_wordlist();
  if (!o.wordlist.empty()) {
    words.clear();
    for (auto& w : read_lines(fs::path(o.wordlist)))
      if (!w.empty()) words.push_back(w);
  }
  std::vector<NamedPerson> people = default_people();
  if (!o.names.empty()) {
    people.clear();
    for (const auto& line : read_lines(fs::path(o.names))) {
      if (line.empty()) continue;
      const auto comma = line.find(',');
      if (comma == std::string::npos) throw FormatError("names file: expected 'name,pronoun' lines");
      people.push_back({line.substr(0, comma), line.substr(comma + 1)});
    }
  }
  const auto docs = gen_retrieval_eval(words, people, o.list_len, o.count, o.seed);
  std::ostringstream buf;
  for (const auto& d : docs)
    buf << nlohmann::json{{"text", d.text}, {"span_start", d.span_start}, {"span_end", d.span_end}}.dump() << "\n";
  if (o.output.empty() || o.output == "-") {
    out << buf.str();
  } else {
    std::ofstream f(o.output, std::ios::trunc);
    if (!f) throw IoError("cannot open '" + o.output + "' for writing");
    f << buf.str();
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Formal-language pre-pretraining data engine"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a packed corpus for a formal language");
  gen_cmd->add_option("--family", gen.family, "dyck-nested | dyck-shuffle | ww | random");
  gen_cmd->add_option("-k", gen.k, "Bracket pairs (Dyck) or vocabulary size (ww, random)");
  gen_cmd->add_option("--tokens", gen.tokens, "Token budget");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--p-open", gen.p_open);
  gen_cmd->add_option("--max-depth", gen.max_depth);
  gen_cmd->add_option("--max-length", gen.max_length, "Tokens per document");
  gen_cmd->add_option("--window", gen.window, "Packing window length");
  gen_cmd->add_option("--tokens-per-step", gen.tokens_per_step, "Reported step conversion");
  gen_cmd->add_option("-o,--out", gen.out_dir, std::string("Output directory (default $") + kOutDirEnv + " or .)");
  gen_cmd->add_option("--name", gen.name, "Output file stem");
  gen_cmd->add_option("--config", gen.config, "Pipeline config file; overrides the per-language flags");
  gen_cmd->add_option("--threads", gen.threads);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Run recognizers on token sequences");
  check_cmd->add_option("--family", check.family, "all | shuffle | nested | fom | 1dyck | ww");
  check_cmd->add_option("-k", check.k);
  check_cmd->add_option("--input", check.input, "One document per line (default stdin)");
  check_cmd->add_option("--corpus", check.corpus, "Binary corpus file");

  auto* metamer_cmd = app.add_subcommand("metamer", "Fit n-gram models and sample metamer corpora");
  metamer_cmd->require_subcommand(1);
  MetamerFitOptions mfit;
  auto* fit_cmd = metamer_cmd->add_subcommand("fit", "Fit an n-gram model on a corpus");
  fit_cmd->add_option("--corpus", mfit.corpus)->required();
  fit_cmd->add_option("--order", mfit.order);
  fit_cmd->add_option("-o,--out", mfit.output)->required();
  MetamerSampleOptions msample;
  auto* sample_cmd = metamer_cmd->add_subcommand("sample", "Sample a metamer corpus from a model");
  sample_cmd->add_option("--model", msample.model)->required();
  sample_cmd->add_option("--tokens", msample.tokens)->required();
  sample_cmd->add_option("--doc-length", msample.doc_length);
  sample_cmd->add_option("--seed", msample.seed);
  sample_cmd->add_option("--window", msample.window);
  sample_cmd->add_option("--source-family", msample.source_family);
  sample_cmd->add_option("-o,--out", msample.output)->required();

  PackOptions packo;
  auto* pack_cmd = app.add_subcommand("pack", "Pack text token documents into a corpus file");
  pack_cmd->add_option("--input", packo.input, "One document per line (default stdin)");
  pack_cmd->add_option("--vocab", packo.vocab);
  pack_cmd->add_option("--window", packo.window);
  pack_cmd->add_option("--family", packo.family);
  pack_cmd->add_option("-o,--out", packo.output)->required();

  std::string stats_corpus;
  std::optional<std::uint32_t> stats_k;
  auto* stats_cmd = app.add_subcommand("stats", "Depth statistics of a Dyck corpus");
  stats_cmd->add_option("--corpus", stats_corpus)->required();
  stats_cmd->add_option("-k", stats_k);

  std::string report_corpus, manifest_out;
  auto* report_cmd = app.add_subcommand("report", "Corpus statistics");
  report_cmd->add_option("--corpus", report_corpus)->required();
  report_cmd->add_option("--manifest-out", manifest_out, "Also export the manifest as JSON");

  MrsOptions mrso;
  auto* mrs_cmd = app.add_subcommand("mrs", "Marginal rate of substitution and token efficiency");
  mrs_cmd->add_option("--baseline", mrso.baseline)->required();
  mrs_cmd->add_option("--run", mrso.run)->required();
  mrs_cmd->add_option("--eval-step", mrso.eval_step, "Baseline step to compare at (default: last)");
  mrs_cmd->add_option("--smooth", mrso.smooth, "Median smoothing window")->expected(0, 1)->default_str("5");
  mrs_cmd->add_option("--plot-data", mrso.plot_data, "Write curve,step,loss rows for plotting");

  EvalGenOptions evo;
  auto* eval_cmd = app.add_subcommand("eval-gen", "Generate verbatim-retrieval evaluation passages");
  eval_cmd->add_option("--wordlist", evo.wordlist);
  eval_cmd->add_option("--names", evo.names, "Lines of 'name,pronoun'");
  eval_cmd->add_option("--list-len", evo.list_len);
  eval_cmd->add_option("--count", evo.count);
  eval_cmd->add_option("--seed", evo.seed);
  eval_cmd->add_option("-o,--out", evo.output, "JSONL output (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  // `--smooth` with no value means the default window.
  if (mrs_cmd->count("--smooth") && !mrso.smooth) mrso.smooth = 5;

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*check_cmd) return cmd_check(check, in, out);
    if (*fit_cmd) return cmd_metamer_fit(mfit, out);
    if (*sample_cmd) return cmd_metamer_sample(msample, out);
    if (*pack_cmd) return cmd_pack(packo, in, out);
    if (*stats_cmd) return cmd_stats(stats_corpus, stats_k, out);
    if (*report_cmd) return cmd_report(report_corpus, manifest_out, out);
    if (*mrs_cmd) return cmd_mrs(mrso, out);
    if (*eval_cmd) return cmd_eval_gen(evo, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return kFormat;
  } catch (const NotReached& e) {
    err << "not reached: " << e.what() << "\n";
    return kNotReached;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace pptdata::cli

#include "pptdata/pipeline.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <algorithm>
#include <fstream>
#include <set>
#include <thread>

namespace pptdata {

void PipelineConfig::validate() const {
  std::set<std::string> names;
  for (const auto& d : datasets) {
    if (!names.insert(d.name).second) throw ConfigError("duplicate dataset name '" + d.name + "'");
    if (d.tokens == 0) throw ConfigError("dataset '" + d.name + "' needs a positive token budget");
    if (d.spec.has_value() == d.metamer_of.has_value())
      throw ConfigError("dataset '" + d.name + "' must set exactly one of family / metamer_of");
  }
  for (const auto& d : datasets) {
    if (!d.metamer_of) continue;
    auto src = std::find_if(datasets.begin(), datasets.end(), [&](const auto& e) { return e.name == *d.metamer_of; });
    if (src == datasets.end())
      throw ConfigError("dataset '" + d.name + "' references unknown metamer source '" + *d.metamer_of + "'");
    if (!src->spec) throw ConfigError("metamer source '" + src->name + "' must be a generated language");
    if (d.metamer_order < 1 || d.metamer_order > 3)
      throw ConfigError("dataset '" + d.name + "': order must be 1, 2 or 3");
  }
  if (window_length < 1) throw ConfigError("window_length must be >= 1");
}

PipelineConfig parse_pipeline_config(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  PipelineConfig cfg;
  try {
    for (const auto& [key, node] : tree) {
      if (node.empty()) {
        // Top-level key.
        if (key == "output_dir") {
          cfg.output_dir = node.get_value<std::string>();
        } else if (key == "seed") {
          cfg.seed = node.get_value<std::uint64_t>();
        } else if (key == "window_length") {
          cfg.window_length = node.get_value<std::uint32_t>();
        } else {
          throw ConfigError("config: unknown global key '" + key + "'");
        }
        continue;
      }
      DatasetEntry entry;
      entry.name = key;
      entry.tokens = node.get<std::uint64_t>("tokens", 0);
      if (auto src = node.get_optional<std::string>("metamer_of")) {
        entry.metamer_of = *src;
        entry.metamer_order = node.get<int>("order", 3);
      }
      if (auto fam = node.get_optional<std::string>("family")) {
        LanguageSpec spec;
        spec.family = parse_family(*fam);
        spec.k = node.get<std::uint32_t>("k", spec.k);
        spec.p_open = node.get<double>("p_open", spec.p_open);
        spec.max_depth = node.get<std::uint32_t>("max_depth", spec.max_depth);
        spec.max_length = node.get<std::uint32_t>("max_length", spec.max_length);
        spec.seed = node.get<std::uint64_t>("seed", cfg.seed);
        entry.spec = spec;
      }
      for (const auto& [field, value] : node) {
        static const std::set<std::string> known = {"tokens", "metamer_of", "order", "family", "k",
                                                    "p_open", "max_depth", "max_length", "seed"};
        if (!known.contains(field))
          throw ConfigError("config: unknown key '" + field + "' in dataset '" + key + "'");
      }
      cfg.datasets.push_back(std::move(entry));
    }
  } catch (const pt::ptree_bad_data& e) {
    throw ConfigError(std::string("config: bad value: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  return parse_pipeline_config(in);
}

namespace {

template <typename Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  if (threads == 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t)
    workers.emplace_back([&, t] {
      for (std::uint64_t i = t; i < count; i += threads) fn(i);
    });
}

}  // namespace

std::vector<TokenSeq> generate_documents(const LanguageSpec& spec, std::uint64_t tokens, unsigned threads) {
  if (tokens == 0) throw InvalidArgument("token budget must be positive");
  std::vector<TokenSeq> docs;
  switch (spec.family) {
    case Family::DyckNested:
    case Family::DyckShuffle: {
      validate_dyck_spec(spec);
      const std::uint64_t count = (tokens + spec.max_length - 1) / spec.max_length;
      docs.resize(count);
      parallel_for(count, threads, [&](std::uint64_t i) { docs[i] = dyck_document(spec, i); });
      break;
    }
    case Family::RandomUniform: {
      if (spec.max_length < 1) throw InvalidArgument("max_length must be >= 1");
      const std::uint64_t count = (tokens + spec.max_length - 1) / spec.max_length;
      docs.resize(count);
      parallel_for(count, threads,
                   [&](std::uint64_t i) { docs[i] = random_document(spec.k, spec.max_length, spec.seed, i); });
      break;
    }
    case Family::WW: {
      if (spec.max_length < 2) throw InvalidArgument("ww needs max_length >= 2");
      const WWParams params{spec.k, HalfLengthDist::uniform(1, spec.max_length / 2), spec.seed};
      std::uint64_t produced = 0;
      constexpr std::uint64_t kBatch = 4096;
      while (produced < tokens) {
        std::vector<TokenSeq> batch(kBatch);
        const std::uint64_t base = docs.size();
        parallel_for(kBatch, threads, [&](std::uint64_t i) { batch[i] = ww_document(params, base + i); });
        for (auto& d : batch) {
          if (produced >= tokens) break;
          produced += d.size();
          docs.push_back(std::move(d));
        }
      }
      break;
    }
  }
  return docs;
}

nlohmann::json spec_to_json(const LanguageSpec& spec) {
  nlohmann::json j = {
      {"family", family_name(spec.family)},
      {"k", spec.k},
      {"max_length", spec.max_length},
      {"seed", spec.seed},
  };
  if (is_dyck(spec.family)) {
    j["p_open"] = spec.p_open;
    j["max_depth"] = spec.max_depth;
  }
  if (spec.family == Family::WW) {
    j["half_length"] = {{"distribution", "uniform"}, {"min", 1}, {"max", spec.max_length / 2}};
  }
  return j;
}

PackedCorpus build_corpus(const LanguageSpec& spec, std::span<const TokenSeq> docs, std::uint32_t window_length) {
  PackedCorpus c = pack(docs, window_length);
  if (docs.empty()) c.manifest.vocab_size = spec.vocab_size();
  c.manifest.family = std::string(family_name(spec.family));
  c.manifest.spec = spec_to_json(spec);
  c.manifest.seed = spec.seed;
  return c;
}

}  // namespace pptdata

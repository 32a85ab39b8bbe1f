#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "pptdata/corpus_io.hpp"
#include "pptdata/efficiency.hpp"
#include "pptdata/grammar_gen.hpp"
#include "pptdata/metamer.hpp"
#include "pptdata/pipeline.hpp"
#include "pptdata/recognizers.hpp"

namespace py = pybind11;
using namespace pptdata;

namespace {

using Tokens = std::vector<Token>;

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_python(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<TokenSeq> to_docs(const std::vector<Tokens>& docs, std::uint32_t vocab_size) {
  std::vector<TokenSeq> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back({d, vocab_size, false});
  return out;
}

py::array_t<std::uint16_t> token_matrix(const PackedCorpus& c) {
  const auto rows = static_cast<py::ssize_t>(c.rows());
  const auto cols = static_cast<py::ssize_t>(c.manifest.window_length);
  py::array_t<std::uint16_t> a({rows, cols});
  std::copy(c.tokens.begin(), c.tokens.end(), a.mutable_data());
  return a;
}

PackedCorpus corpus_from(const py::dict& manifest, py::array_t<std::uint16_t, py::array::c_style | py::array::forcecast> tokens) {
  PackedCorpus c;
  c.manifest = manifest_from_json(from_python(manifest));
  c.tokens.assign(tokens.data(), tokens.data() + tokens.size());
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Formal-language corpora, recognizers, metamers and efficiency arithmetic";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<NotReached>(m, "NotReached", base.ptr());

  py::class_<TokenSeq>(m, "TokenSeq")
      .def_readonly("tokens", &TokenSeq::tokens)
      .def_readonly("vocab_size", &TokenSeq::vocab_size)
      .def_readonly("truncated", &TokenSeq::truncated)
      .def("__len__", &TokenSeq::size)
      .def("__repr__", [](const TokenSeq& s) {
        return "<TokenSeq len=" + std::to_string(s.size()) + " vocab_size=" + std::to_string(s.vocab_size) +
               (s.truncated ? " truncated>" : ">");
      });

  // Generation.
  m.def(
      "gen_dyck",
      [](const std::string& family, std::uint64_t count, std::uint32_t k, double p_open, std::uint32_t max_depth,
         std::uint32_t max_length, std::uint64_t seed) {
        LanguageSpec s{parse_family(family), k, p_open, max_depth, max_length, seed};
        if (!is_dyck(s.family)) throw InvalidArgument("gen_dyck needs a Dyck family");
        return gen_dyck(s, count);
      },
      py::arg("family"), py::arg("count"), py::arg("k") = 64, py::arg("p_open") = 0.5, py::arg("max_depth") = 16,
      py::arg("max_length") = 2048, py::arg("seed") = 0);
  m.def(
      "gen_ww",
      [](std::uint64_t count, std::uint32_t vocab_size, std::uint32_t min_half, std::uint32_t max_half,
         std::uint64_t seed) { return gen_ww({vocab_size, HalfLengthDist::uniform(min_half, max_half), seed}, count); },
      py::arg("count"), py::arg("vocab_size") = 128, py::arg("min_half") = 1, py::arg("max_half") = 1024,
      py::arg("seed") = 0);
  m.def("gen_random", &gen_random, py::arg("vocab_size"), py::arg("doc_length"), py::arg("count"), py::arg("seed") = 0);
  m.def(
      "gen_retrieval_eval",
      [](std::optional<std::vector<std::string>> words, std::size_t list_len, std::uint64_t count, std::uint64_t seed) {
        py::list out;
        for (const auto& d : gen_retrieval_eval(words.value_or(default_wordlist()), default_people(), list_len,
                                                count, seed))
          out.append(py::dict(py::arg("text") = d.text, py::arg("span_start") = d.span_start,
                              py::arg("span_end") = d.span_end, py::arg("words") = d.words));
        return out;
      },
      py::arg("wordlist") = py::none(), py::arg("list_len") = 3, py::arg("count") = 100, py::arg("seed") = 0);

  // Recognizers.
  m.def("recognize_counting_1dyck", [](const Tokens& t) { return recognize_counting_1dyck(t); });
  m.def("recognize_stack_kdyck", [](const Tokens& t, std::uint32_t k) { return recognize_stack_kdyck(t, k); },
        py::arg("tokens"), py::arg("k"));
  m.def("recognize_fom_kdyck", [](const Tokens& t, std::uint32_t k) { return recognize_fom_kdyck(t, k); },
        py::arg("tokens"), py::arg("k"));
  m.def("recognize_shuffle", [](const Tokens& t, std::uint32_t k) { return recognize_shuffle(t, k); },
        py::arg("tokens"), py::arg("k"));
  m.def("recognize_ww", [](const Tokens& t) { return recognize_ww(t); });
  m.def("depth_trace", [](const Tokens& t, std::uint32_t k) { return depth_trace(t, k); }, py::arg("tokens"),
        py::arg("k"));
  m.def(
      "classify",
      [](const Tokens& t, std::uint32_t k) {
        const auto v = classify(t, k);
        py::dict d;
        d["k"] = v.k;
        d["dyck1_counting"] = v.dyck1_counting ? py::cast(*v.dyck1_counting) : py::none();
        d["kdyck_stack"] = v.kdyck_stack;
        d["kdyck_fom"] = v.kdyck_fom;
        d["shuffle"] = v.shuffle;
        d["ww"] = v.ww;
        d["disagreement"] = v.disagreement;
        return d;
      },
      py::arg("tokens"), py::arg("k"));

  // Corpus files.
  py::class_<PackedCorpus>(m, "PackedCorpus")
      .def(py::init(&corpus_from), py::arg("manifest"), py::arg("tokens"))
      .def_property_readonly("manifest", [](const PackedCorpus& c) { return to_python(manifest_to_json(c.manifest)); })
      .def_property_readonly("tokens", &token_matrix)
      .def_property_readonly("rows", &PackedCorpus::rows)
      .def("documents", [](const PackedCorpus& c) { return unpack(c); })
      .def("__eq__", [](const PackedCorpus& a, const PackedCorpus& b) { return a == b; });
  m.def(
      "pack",
      [](const std::vector<Tokens>& docs, std::uint32_t vocab_size, std::uint32_t window_length,
         const std::string& family) {
        const auto seqs = to_docs(docs, vocab_size);
        auto c = pack(seqs, window_length);
        c.manifest.vocab_size = vocab_size;
        c.manifest.family = family;
        return c;
      },
      py::arg("docs"), py::arg("vocab_size"), py::arg("window_length") = 2048, py::arg("family") = "unknown");
  m.def(
      "generate_corpus",
      [](const std::string& family, std::uint64_t tokens, std::uint32_t k, std::uint64_t seed,
         std::uint32_t window_length, std::uint32_t max_length, unsigned threads) {
        LanguageSpec s;
        s.family = parse_family(family);
        s.k = k;
        s.seed = seed;
        s.max_length = max_length;
        py::gil_scoped_release release;
        const auto docs = generate_documents(s, tokens, threads);
        return build_corpus(s, docs, window_length);
      },
      py::arg("family"), py::arg("tokens"), py::arg("k") = 64, py::arg("seed") = 0, py::arg("window_length") = 2048,
      py::arg("max_length") = 2048, py::arg("threads") = 1);
  m.def("write_corpus", &write_corpus, py::arg("corpus"), py::arg("path"));
  m.def("read_corpus", &read_corpus, py::arg("path"));
  m.def("encode_corpus", [](const PackedCorpus& c) {
    const auto b = encode_corpus(c);
    return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
  });
  m.def("decode_corpus", [](const py::bytes& b) {
    const std::string s = b;
    return decode_corpus(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
  });
  m.def(
      "depth_stats",
      [](const PackedCorpus& c, std::optional<std::uint32_t> k) {
        const auto p = depth_stats(c, k.value_or(c.manifest.vocab_size / 2));
        py::dict d;
        d["histogram"] = p.histogram;
        d["positions"] = p.positions;
        d["max_depth"] = p.max_depth;
        d["mean_depth"] = p.mean_depth;
        return d;
      },
      py::arg("corpus"), py::arg("k") = py::none());
  m.def("corpus_report", [](const PackedCorpus& c) { return to_python(report_to_json(corpus_report(c))); });

  // Metamers.
  py::class_<NGramModel>(m, "NGramModel")
      .def_property_readonly("order", &NGramModel::order)
      .def_property_readonly("vocab_size", &NGramModel::vocab_size)
      .def_property_readonly("total_tokens", &NGramModel::total_tokens)
      .def_property_readonly("num_contexts", &NGramModel::num_contexts)
      .def("probability", [](const NGramModel& mdl, const Tokens& ctx, Token next) { return mdl.probability(ctx, next); })
      .def("save", &NGramModel::save)
      .def_static("load", &NGramModel::load)
      .def("to_text", &NGramModel::to_text)
      .def_static("from_text", &NGramModel::from_text)
      .def("__eq__", [](const NGramModel& a, const NGramModel& b) { return a == b; });
  m.attr("BOS") = NGramModel::kBos;
  m.def(
      "fit_ngram",
      [](const std::vector<Tokens>& docs, std::uint32_t vocab_size, int order) {
        return fit_ngram(to_docs(docs, vocab_size), order);
      },
      py::arg("docs"), py::arg("vocab_size"), py::arg("order") = 3);
  m.def(
      "sample_metamer",
      [](const NGramModel& model, std::uint64_t tokens, std::uint32_t doc_length, std::uint64_t seed) {
        return sample_metamer(model, {tokens, doc_length, seed});
      },
      py::arg("model"), py::arg("tokens"), py::arg("doc_length") = 2048, py::arg("seed") = 0);
  m.def(
      "ngram_tv",
      [](const std::vector<Tokens>& a, const std::vector<Tokens>& b, int n) {
        const auto da = to_docs(a, 0), db = to_docs(b, 0);
        return total_variation(count_ngrams(da, n), count_ngrams(db, n));
      },
      py::arg("a"), py::arg("b"), py::arg("n"));

  // Efficiency.
  m.def(
      "mrs",
      [](std::pair<double, double> a, std::pair<double, double> b) {
        return mrs({a.first, a.second, std::nullopt}, {b.first, b.second, std::nullopt});
      },
      py::arg("a"), py::arg("b"), "|y1 - y2| / |x1 - x2| for (ppt, pt) budget pairs");
  m.def("token_efficiency", &token_efficiency, py::arg("baseline_total"), py::arg("ppt_total"));
  m.def(
      "compare_runs",
      [](const std::string& baseline_csv, const std::string& run_csv, std::optional<double> eval_step,
         std::optional<std::size_t> smoothing_window) {
        const auto base = read_loss_curve(baseline_csv);
        const auto run = read_loss_curve(run_csv);
        const auto r = compare_runs(base, run, eval_step.value_or(double(base.points.back().step)), smoothing_window);
        py::dict d;
        d["eval_step"] = r.eval_step;
        d["target_loss"] = r.target_loss;
        d["crossing_step"] = r.run_point.pt;
        d["raw_crossing_step"] = r.raw_crossing;
        d["ppt_steps"] = r.run_point.ppt;
        d["mrs"] = r.mrs_steps;
        d["mrs_tokens"] = r.mrs_tokens;
        d["efficiency"] = r.efficiency;
        d["non_monotone"] = r.non_monotone;
        return d;
      },
      py::arg("baseline"), py::arg("run"), py::arg("eval_step") = py::none(), py::arg("smoothing_window") = py::none());
}

#include <algorithm>
#include <numeric>
#include <random>

#include "pptdata/grammar_gen.hpp"
#include "pptdata/seeding.hpp"

namespace pptdata {

namespace {

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += words[i];
  }
  return out;
}

}  // namespace

RetrievalDoc render_retrieval(const NamedPerson& person, const std::vector<std::string>& words) {
  if (words.empty()) throw InvalidArgument("retrieval list must contain at least one word");
  const std::string list = join_words(words);
  const std::string& p = person.pronoun;

  RetrievalDoc doc;
  doc.words = words;
  doc.text = "Before the meeting, " + person.name + " wrote down the following list of words: ";
  doc.first_start = doc.text.size();
  doc.text += list;
  doc.first_end = doc.text.size();
  doc.text += ". After the meeting, " + p + " took a break and had a cup of coffee. When " + p +
              " got back, " + p + " read the list again: ";
  doc.span_start = doc.text.size();
  doc.text += list;
  doc.span_end = doc.text.size();
  doc.text += ".";
  return doc;
}

std::vector<RetrievalDoc> gen_retrieval_eval(const std::vector<std::string>& wordlist,
                                             const std::vector<NamedPerson>& people,
                                             std::size_t list_len, std::uint64_t count,
                                             std::uint64_t seed) {
  if (list_len < 1) throw InvalidArgument("list_len must be >= 1");
  if (list_len > wordlist.size())
    throw InvalidArgument("list_len exceeds wordlist size (sampling is without replacement)");
  if (people.empty()) throw InvalidArgument("need at least one (name, pronoun) pair");

  std::vector<RetrievalDoc> out;
  out.reserve(count);
  std::vector<std::size_t> order(wordlist.size());
  for (std::uint64_t d = 0; d < count; ++d) {
    Rng rng = document_rng(seed, d);
    std::uniform_int_distribution<std::size_t> pick_person(0, people.size() - 1);
    const NamedPerson& person = people[pick_person(rng)];

    // Partial Fisher-Yates: the first list_len slots are the sample.
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < list_len; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, order.size() - 1);
      std::swap(order[i], order[pick(rng)]);
    }
    std::vector<std::string> words;
    words.reserve(list_len);
    for (std::size_t i = 0; i < list_len; ++i) words.push_back(wordlist[order[i]]);
    out.push_back(render_retrieval(person, words));
  }
  return out;
}

const std::vector<std::string>& default_wordlist() {
  static const std::vector<std::string> words = {
      "window", "door",   "roof",    "nothing", "riches", "paper",  "garden", "river",
      "candle", "bottle", "mirror",  "pencil",  "basket", "ladder", "carpet", "forest",
      "kettle", "button", "harbor",  "island",  "jacket", "lemon",  "market", "needle",
      "orange", "pillow", "rocket",  "saddle",  "ticket", "valley", "wallet", "anchor",
      "bridge", "cabin",  "desert",  "engine",  "feather", "glove", "hammer", "lantern"};
  return words;
}

const std::vector<NamedPerson>& default_people() {
  static const std::vector<NamedPerson> people = {
      {"Mary", "she"}, {"John", "he"}, {"Alice", "she"}, {"Robert", "he"},
      {"Linda", "she"}, {"David", "he"}, {"Sam", "they"}, {"Nora", "she"}};
  return people;
}

}  // namespace pptdata

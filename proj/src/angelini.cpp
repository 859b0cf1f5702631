#include "seqlab/angelini.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace seqlab::angelini {

namespace {

constexpr std::string_view kEnglishTable = R"(# Built-in English table
rank a 1
rank b 2
rank c 3
rank d 4
rank e 5
rank f 6
rank g 7
rank h 8
rank i 9
rank j 10
rank k 11
rank l 12
rank m 13
rank n 14
rank o 15
rank p 16
rank q 17
rank r 18
rank s 19
rank t 20
rank u 21
rank v 22
rank w 23
rank x 24
rank y 25
rank z 26
name 0 zero
name 1 one
name 2 two
name 3 three
name 4 four
name 5 five
name 6 six
name 7 seven
name 8 eight
name 9 nine
name 10 ten
name 11 eleven
name 12 twelve
name 13 thirteen
name 14 fourteen
name 15 fifteen
name 16 sixteen
name 17 seventeen
name 18 eighteen
name 19 nineteen
name 20 twenty
name 21 twenty-one
name 22 twenty-two
name 23 twenty-three
name 24 twenty-four
name 25 twenty-five
name 26 twenty-six
)";

std::string normalize_name(std::string_view raw) {
  std::string out;
  for (char c : raw) {
    if (c == ' ' || c == '-' || c == '\t') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

const LanguageTable& LanguageTable::english() {
  static const LanguageTable table = from_text(kEnglishTable);
  return table;
}

LanguageTable LanguageTable::from_text(std::string_view text) {
  LanguageTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind) || kind[0] == '#') continue;
    const std::string where = "language table line " + std::to_string(lineno);
    if (kind == "rank") {
      std::string letter;
      int r = 0;
      if (!(fields >> letter >> r) || letter.size() != 1 || r < 1) {
        throw ParseError(where + ": expected `rank <letter> <integer>`");
      }
      const char c = static_cast<char>(
          std::tolower(static_cast<unsigned char>(letter[0])));
      if (table.ranks_.count(c)) throw ParseError(where + ": duplicate letter");
      table.ranks_[c] = r;
    } else if (kind == "name") {
      int value = 0;
      if (!(fields >> value) || value < 0) {
        throw ParseError(where + ": expected `name <integer> <letters>`");
      }
      std::string rest, word;
      while (fields >> word) rest += word;
      const std::string name = normalize_name(rest);
      if (name.empty()) throw ParseError(where + ": empty name");
      if (table.names_.count(value)) throw ParseError(where + ": duplicate name");
      table.names_[value] = name;
    } else {
      throw ParseError(where + ": unknown record kind `" + kind + "`");
    }
  }
  table.validate();
  return table;
}

LanguageTable LanguageTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open language table file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_text(buffer.str());
}

void LanguageTable::validate() const {
  std::vector<int> seen;
  for (const auto& [letter, r] : ranks_) seen.push_back(r);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw ParseError("language table: ranks are not injective");
  }
  for (const auto& [value, name] : names_) {
    for (char c : name) {
      if (!ranks_.count(c)) {
        throw ParseError("language table: name for " + std::to_string(value) +
                         " uses unranked letter `" + std::string(1, c) + "`");
      }
    }
  }
}

int LanguageTable::rank(char letter) const {
  auto it = ranks_.find(letter);
  if (it == ranks_.end()) {
    throw DomainError("language table: unranked letter `" +
                      std::string(1, letter) + "`");
  }
  return it->second;
}

const std::string& LanguageTable::name(int value) const {
  auto it = names_.find(value);
  if (it == names_.end()) {
    throw DomainError("name missing for value " + std::to_string(value));
  }
  return it->second;
}

std::vector<int> LanguageTable::name_domain() const {
  std::vector<int> domain;
  domain.reserve(names_.size());
  for (const auto& [value, name] : names_) domain.push_back(value);
  return domain;
}

SelfSequence::SelfSequence(int seed, const LanguageTable& table)
    : table_(table) {
  if (!table.has_name(seed)) {
    throw DomainError("inadmissible seed: no name for " + std::to_string(seed));
  }
  const std::string& name = table.name(seed);
  if (name.size() < 2 ||
      std::abs(table.rank(name[1]) - table.rank(name[0])) != seed) {
    throw DomainError("inadmissible seed " + std::to_string(seed) +
                      ": its own spelling does not reproduce it");
  }
  terms_.push_back(seed);
  letters_ = name;
}

void SelfSequence::extend_to(size_t count) {
  while (terms_.size() < count) {
    const size_t j = terms_.size();
    if (letters_.size() < j + 2) {
      throw Error("generation stalled: spelled names are too short");
    }
    const int value =
        std::abs(table_.rank(letters_[j + 1]) - table_.rank(letters_[j]));
    terms_.push_back(value);
    letters_ += table_.name(value);  // throws if the name is missing
  }
}

std::vector<int> generate(int seed, size_t k, const LanguageTable& table) {
  if (k < 1) throw DomainError("generate: count must be >= 1");
  SelfSequence seq(seed, table);
  seq.extend_to(k);
  return {seq.terms().begin(), seq.terms().begin() + k};
}

bool verify_self_describing(std::span<const int> terms,
                            const LanguageTable& table) {
  std::string letters;
  for (int t : terms) {
    if (!table.has_name(t)) return false;
    letters += table.name(t);
  }
  for (size_t j = 0; j < terms.size() && j + 1 < letters.size(); ++j) {
    if (terms[j] != std::abs(table.rank(letters[j + 1]) -
                             table.rank(letters[j]))) {
      return false;
    }
  }
  return true;
}

std::vector<int> admissible_seeds(const LanguageTable& table) {
  std::vector<int> seeds;
  for (int v : table.name_domain()) {
    const std::string& name = table.name(v);
    if (name.size() >= 2 &&
        std::abs(table.rank(name[1]) - table.rank(name[0])) == v) {
      seeds.push_back(v);
    }
  }
  return seeds;
}

std::map<int, double> frequencies(std::span<const int> terms) {
  if (terms.empty()) throw DomainError("frequencies: empty input");
  std::map<int, size_t> counts;
  for (int t : terms) ++counts[t];
  std::map<int, double> freq;
  for (const auto& [value, count] : counts) {
    freq[value] = static_cast<double>(count) / static_cast<double>(terms.size());
  }
  return freq;
}

}  // namespace seqlab::angelini

// Self-describing letter-difference sequences: spelling out the terms and
// taking absolute rank differences of successive letters reproduces the
// terms themselves.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqlab/errors.hpp"

namespace seqlab::angelini {

// Alphabet ranking plus value -> spelled-name map. Names are normalized to
// lowercase letters with spaces and hyphens stripped.
class LanguageTable {
 public:
  // Letters a..z ranked 1..26 and names for 0..26. The name for 0 is
  // required: doubled letters inside spelled names produce 0 as a term.
  static const LanguageTable& english();

  // One record per line: `rank <letter> <integer>` or
  // `name <integer> <letters...>`; `#` starts a comment.
  static LanguageTable from_text(std::string_view text);
  static LanguageTable from_file(const std::string& path);

  int rank(char letter) const;
  bool has_name(int value) const { return names_.count(value) > 0; }
  const std::string& name(int value) const;
  std::vector<int> name_domain() const;
  size_t alphabet_size() const { return ranks_.size(); }

 private:
  LanguageTable() = default;
  void validate() const;

  std::map<char, int> ranks_;
  std::map<int, std::string> names_;
};

// Incremental generator state. Terms are consumed to emit letters; adjacent
// letter pairs emit new terms. Confined to one thread.
class SelfSequence {
 public:
  SelfSequence(int seed, const LanguageTable& table);

  void extend_to(size_t count);
  const std::vector<int>& terms() const { return terms_; }
  const std::string& letters() const { return letters_; }

 private:
  const LanguageTable& table_;
  std::vector<int> terms_;
  std::string letters_;
};

// First k terms of the self-describing sequence starting at `seed`.
std::vector<int> generate(int seed, size_t k, const LanguageTable& table);

// True iff re-deriving rank differences from the spelled terms reproduces
// the terms over the verifiable prefix.
bool verify_self_describing(std::span<const int> terms,
                            const LanguageTable& table);

// All v in the name domain equal to the rank difference of the first two
// letters of their own name.
std::vector<int> admissible_seeds(const LanguageTable& table);

// Empirical relative frequency per distinct value. Rejects empty input.
std::map<int, double> frequencies(std::span<const int> terms);

}  // namespace seqlab::angelini

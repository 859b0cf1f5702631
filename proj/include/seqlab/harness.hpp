#pragma once

#include <chrono>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seqlab/numerics.hpp"

namespace seqlab::harness {

struct SequenceRecord {
  std::string a_number;  // "A" followed by six digits
  long offset = 0;       // index of the first term
  std::vector<mpz_class> terms;

  bool operator==(const SequenceRecord& other) const = default;
};

struct Mismatch {
  long index = 0;  // sequence index (offset-based)
  mpz_class expected;
  mpz_class actual;
};

struct VerificationReport {
  std::string a_number;
  size_t compared = 0;
  std::optional<Mismatch> first_mismatch;

  bool passed() const { return !first_mismatch && compared >= 1; }
};

bool is_a_number(const std::string& s);

// Parses b-file text: `index term` data lines, # comments and blank lines
// skipped, LF or CRLF. Indices must be consecutive; offset = first index.
SequenceRecord parse_bfile(const std::string& text,
                           const std::string& a_number);

// Emits LF line endings, a single space per line, no trailing blank line.
std::string to_bfile(const SequenceRecord& record);

// Element-wise comparison over the overlap; generated[i] is the value at
// index fixture.offset + i. Throws DomainError on empty overlap.
VerificationReport verify(const std::string& a_number,
                          const std::vector<mpz_class>& generated,
                          const SequenceRecord& fixture);

// Ground-truth prefixes compiled into the library; the same bytes ship under
// data/fixtures/.
const std::vector<std::string>& bundled_a_numbers();
const SequenceRecord& bundled_fixture(const std::string& a_number);
bool has_bundled_fixture(const std::string& a_number);

struct FetchConfig {
  bool allow_network = false;
  std::string base_url = "https://oeis.org";
  std::string cache_dir = "bfile-cache";

  // Reads SEQLAB_FETCH (any nonempty value enables the network),
  // SEQLAB_OEIS_BASE_URL and SEQLAB_CACHE_DIR.
  static FetchConfig from_environment();
};

// Cache-first b-file access. Concurrent fetches of one A-number are
// single-flighted, and remote requests are spaced >= 1 second apart.
class BfileClient {
 public:
  explicit BfileClient(FetchConfig config);

  SequenceRecord fetch(const std::string& a_number);
  std::string cache_path(const std::string& a_number) const;

 private:
  std::string fetch_remote(const std::string& a_number);

  FetchConfig config_;
  std::mutex mutex_;
  std::condition_variable flight_done_;
  std::set<std::string> in_flight_;
  std::mutex rate_mutex_;
  std::chrono::steady_clock::time_point last_request_{};
  bool requested_once_ = false;
};

}  // namespace seqlab::harness

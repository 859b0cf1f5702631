#include "seqlab/harness.hpp"

#ifdef SEQLAB_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "seqlab/errors.hpp"

namespace seqlab::harness {
namespace {

struct RawFixture {
  const char* a_number;
  const char* text;
};

const RawFixture kRawFixtures[] = {
#include "fixtures_data.inc"
};

const std::map<std::string, SequenceRecord>& fixture_map() {
  static const std::map<std::string, SequenceRecord> table = [] {
    std::map<std::string, SequenceRecord> out;
    for (const auto& raw : kRawFixtures) {
      out.emplace(raw.a_number, parse_bfile(raw.text, raw.a_number));
    }
    return out;
  }();
  return table;
}

bool parse_long(const std::string& token, long& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NetworkError("cache: cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw NetworkError("cache: cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

bool is_a_number(const std::string& s) {
  if (s.size() != 7 || s[0] != 'A') return false;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

SequenceRecord parse_bfile(const std::string& text,
                           const std::string& a_number) {
  if (!is_a_number(a_number)) {
    throw ParseError("parse_bfile: invalid A-number: " + a_number);
  }
  SequenceRecord record;
  record.a_number = a_number;

  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  bool have_offset = false;
  long expected_index = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string index_tok;
    if (!(fields >> index_tok) || index_tok[0] == '#') continue;

    const std::string where =
        a_number + " line " + std::to_string(lineno) + ": " + line;
    std::string term_tok, extra;
    if (!(fields >> term_tok) || (fields >> extra)) {
      throw ParseError("malformed line, " + where);
    }
    long index = 0;
    if (!parse_long(index_tok, index)) {
      throw ParseError("malformed line, " + where);
    }
    mpz_class term;
    if (mpz_set_str(term.get_mpz_t(), term_tok.c_str(), 10) != 0) {
      throw ParseError("malformed line, " + where);
    }
    if (!have_offset) {
      record.offset = index;
      have_offset = true;
    } else if (index != expected_index) {
      throw ParseError("non-consecutive indices, " + where);
    }
    expected_index = index + 1;
    record.terms.push_back(std::move(term));
  }
  if (!have_offset) {
    throw ParseError("parse_bfile: no data lines for " + a_number);
  }
  return record;
}

std::string to_bfile(const SequenceRecord& record) {
  std::string out;
  for (size_t i = 0; i < record.terms.size(); ++i) {
    out += std::to_string(record.offset + static_cast<long>(i));
    out += ' ';
    out += record.terms[i].get_str();
    out += '\n';
  }
  return out;
}

VerificationReport verify(const std::string& a_number,
                          const std::vector<mpz_class>& generated,
                          const SequenceRecord& fixture) {
  const size_t overlap = std::min(generated.size(), fixture.terms.size());
  if (overlap == 0) {
    throw DomainError("verify: empty overlap for " + a_number);
  }
  VerificationReport report;
  report.a_number = a_number;
  report.compared = overlap;
  for (size_t i = 0; i < overlap; ++i) {
    if (generated[i] != fixture.terms[i]) {
      report.first_mismatch =
          Mismatch{fixture.offset + static_cast<long>(i), fixture.terms[i],
                   generated[i]};
      break;
    }
  }
  return report;
}

const std::vector<std::string>& bundled_a_numbers() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, record] : fixture_map()) out.push_back(name);
    return out;
  }();
  return names;
}

const SequenceRecord& bundled_fixture(const std::string& a_number) {
  const auto& table = fixture_map();
  const auto it = table.find(a_number);
  if (it == table.end()) {
    throw DomainError("no bundled fixture for " + a_number);
  }
  return it->second;
}

bool has_bundled_fixture(const std::string& a_number) {
  return fixture_map().count(a_number) > 0;
}

FetchConfig FetchConfig::from_environment() {
  FetchConfig config;
  if (const char* v = std::getenv("SEQLAB_FETCH"); v && *v) {
    config.allow_network = true;
  }
  if (const char* v = std::getenv("SEQLAB_OEIS_BASE_URL"); v && *v) {
    config.base_url = v;
  }
  if (const char* v = std::getenv("SEQLAB_CACHE_DIR"); v && *v) {
    config.cache_dir = v;
  }
  return config;
}

BfileClient::BfileClient(FetchConfig config) : config_(std::move(config)) {
  if (config_.cache_dir.empty()) config_.cache_dir = "bfile-cache";
}

std::string BfileClient::cache_path(const std::string& a_number) const {
  return (std::filesystem::path(config_.cache_dir) /
          ("b" + a_number.substr(1) + ".txt"))
      .string();
}

SequenceRecord BfileClient::fetch(const std::string& a_number) {
  if (!is_a_number(a_number)) {
    throw DomainError("fetch: invalid A-number: " + a_number);
  }
  {
    std::unique_lock<std::mutex> lock(mutex_);
    flight_done_.wait(lock, [&] { return !in_flight_.count(a_number); });
    in_flight_.insert(a_number);
  }
  struct FlightGuard {
    BfileClient* self;
    const std::string& a_number;
    ~FlightGuard() {
      std::lock_guard<std::mutex> lock(self->mutex_);
      self->in_flight_.erase(a_number);
      self->flight_done_.notify_all();
    }
  } guard{this, a_number};

  const std::filesystem::path path = cache_path(a_number);
  std::string text;
  if (std::filesystem::exists(path)) {
    text = read_file(path);
  } else if (!config_.allow_network) {
    throw NetworkError("fetch: " + a_number +
                       " not in cache and network disabled");
  } else {
    text = fetch_remote(a_number);
    if (!path.parent_path().empty()) {
      std::filesystem::create_directories(path.parent_path());
    }
    write_file_atomic(path, text);
  }
  return parse_bfile(text, a_number);
}

std::string BfileClient::fetch_remote(const std::string& a_number) {
  const std::string path =
      "/" + a_number + "/b" + a_number.substr(1) + ".txt";
  // Polite spacing: at least one second between remote requests.
  std::lock_guard<std::mutex> lock(rate_mutex_);
  if (requested_once_) {
    std::this_thread::sleep_until(last_request_ + std::chrono::seconds(1));
  }
  last_request_ = std::chrono::steady_clock::now();
  requested_once_ = true;

  try {
    httplib::Client client(config_.base_url);
    client.set_follow_location(true);
    client.set_connection_timeout(30);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res) {
      throw NetworkError("fetch: " + config_.base_url + path + ": " +
                         httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw NetworkError("fetch: " + config_.base_url + path + ": HTTP " +
                         std::to_string(res->status));
    }
    return res->body;
  } catch (const std::invalid_argument& e) {
    throw NetworkError("fetch: bad base URL " + config_.base_url + ": " +
                       e.what());
  }
}

}  // namespace seqlab::harness

#include "seqlab/curling.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "seqlab/errors.hpp"

namespace seqlab::curling {

namespace {

// Curling number with a caller-owned scratch buffer. Computes the Z-array of
// the reversed string: z[l] is the backwards match length at offset l, so the
// length-l suffix block repeats 1 + z[l]/l times.
int curling_number_into(std::span<const int> s, std::vector<int>& zbuf) {
  const size_t len = s.size();
  if (len == 0) throw seqlab::DomainError("curling_number: empty string");
  if (len == 1) return 1;
  zbuf.assign(len, 0);
  auto rev = [&](size_t i) { return s[len - 1 - i]; };
  size_t wl = 0, wr = 0;
  int best = 1;
  const size_t half = len / 2;
  for (size_t i = 1; i < len; ++i) {
    size_t z = 0;
    if (i < wr) z = std::min(wr - i, static_cast<size_t>(zbuf[i - wl]));
    while (i + z < len && rev(z) == rev(i + z)) ++z;
    if (i + z > wr) {
      wl = i;
      wr = i + z;
    }
    zbuf[i] = static_cast<int>(z);
    if (i <= half) {
      best = std::max(best, 1 + static_cast<int>(z / i));
    }
  }
  return best;
}

void extend_into(CurlString& work, int step_cap, size_t* tail_length,
                 std::vector<int>& zbuf) {
  for (int step = 0; step < step_cap; ++step) {
    const int k = curling_number_into(work, zbuf);
    work.push_back(k);
    if (k == 1) {
      *tail_length = work.size() - 1;
      return;
    }
  }
  throw BoundExhaustedError(
      "extend_until_one: step cap exceeded after " +
      std::to_string(step_cap) + " appends (conjecture-violating tail?)");
}

std::string symbols_to_string(const CurlString& s) {
  std::string out;
  out.reserve(s.size());
  for (int v : s) out += static_cast<char>('0' + v);
  return out;
}

// Lexicographic shard layout: bit b of index (most significant first) maps
// to symbol 2 + b, so ascending indices enumerate {2,3}^n in lex order.
void fill_symbols(CurlString& out, uint64_t index, int bits, size_t offset) {
  for (int i = 0; i < bits; ++i) {
    out[offset + i] = 2 + static_cast<int>((index >> (bits - 1 - i)) & 1);
  }
}

struct ShardResult {
  size_t max_tail = 0;
  CurlString witness;
};

}  // namespace

int curling_number(std::span<const int> s) {
  std::vector<int> zbuf;
  return curling_number_into(s, zbuf);
}

std::vector<int> gijswijt_prefix(size_t k) {
  if (k < 1) throw DomainError("gijswijt_prefix: count must be >= 1");
  std::vector<int> terms{1};
  terms.reserve(k);
  std::vector<int> zbuf;
  while (terms.size() < k) {
    terms.push_back(curling_number_into(terms, zbuf));
  }
  return terms;
}

TailResult extend_until_one(const CurlString& initial, int step_cap) {
  if (initial.empty()) throw DomainError("extend_until_one: empty initial");
  if (std::find(initial.begin(), initial.end(), 1) != initial.end()) {
    throw DomainError("extend_until_one: initial string must not contain 1");
  }
  TailResult result;
  result.initial = initial;
  result.extended = initial;
  std::vector<int> zbuf;
  extend_into(result.extended, step_cap, &result.tail_length, zbuf);
  return result;
}

BestTailResult best_tail(int n, const BestTailOptions& options) {
  if (n < 1) throw DomainError("best_tail: n must be >= 1");
  if (n > options.exhaustive_bound) {
    throw DomainError("best_tail: n exceeds the exhaustive bound " +
                      std::to_string(options.exhaustive_bound));
  }

  const int prefix_bits = std::min(n, 8);
  const int rest_bits = n - prefix_bits;
  const size_t shard_count = size_t{1} << prefix_bits;
  const uint64_t per_shard = uint64_t{1} << rest_bits;

  // Resume: shard prefix -> (max, witness), written as text lines
  // `<prefix> <max> <witness>`.
  std::map<std::string, ShardResult> done;
  if (!options.checkpoint_path.empty()) {
    std::ifstream in(options.checkpoint_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream fields(line);
      std::string prefix, witness;
      size_t max_tail = 0;
      if (!(fields >> prefix >> max_tail >> witness) ||
          prefix.size() != static_cast<size_t>(prefix_bits) ||
          witness.size() != static_cast<size_t>(n)) {
        throw ParseError("best_tail checkpoint: malformed line `" + line + "`");
      }
      ShardResult r;
      r.max_tail = max_tail;
      for (char c : witness) r.witness.push_back(c - '0');
      done[prefix] = r;
    }
  }

  std::vector<ShardResult> results(shard_count);

  std::mutex io_mutex;
  std::ofstream checkpoint;
  if (!options.checkpoint_path.empty()) {
    checkpoint.open(options.checkpoint_path, std::ios::app);
  }

  std::atomic<size_t> next_shard{0};
  std::atomic<size_t> shards_done{0};

  auto worker = [&] {
    CurlString prefix_symbols(static_cast<size_t>(n));
    CurlString work;
    std::vector<int> zbuf;
    while (true) {
      const size_t shard = next_shard.fetch_add(1);
      if (shard >= shard_count) return;
      fill_symbols(prefix_symbols, shard, prefix_bits, 0);
      const std::string prefix_str = symbols_to_string(
          CurlString(prefix_symbols.begin(), prefix_symbols.begin() + prefix_bits));
      if (auto it = done.find(prefix_str); it != done.end()) {
        results[shard] = it->second;
      } else {
        ShardResult best;
        for (uint64_t t = 0; t < per_shard; ++t) {
          fill_symbols(prefix_symbols, t, rest_bits, prefix_bits);
          work.assign(prefix_symbols.begin(), prefix_symbols.end());
          size_t tail = 0;
          extend_into(work, options.step_cap, &tail, zbuf);
          // In-shard enumeration is lexicographic, so strictly-greater keeps
          // the lexicographically smallest witness on ties.
          if (tail > best.max_tail) {
            best.max_tail = tail;
            best.witness = prefix_symbols;
          }
        }
        results[shard] = best;
        if (checkpoint.is_open()) {
          std::lock_guard<std::mutex> lock(io_mutex);
          checkpoint << prefix_str << ' ' << best.max_tail << ' '
                     << symbols_to_string(best.witness) << '\n';
          checkpoint.flush();
        }
      }
      const size_t completed = shards_done.fetch_add(1) + 1;
      if (options.progress) {
        std::lock_guard<std::mutex> lock(io_mutex);
        options.progress(completed, shard_count);
      }
    }
  };

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) {
      pool.emplace_back([&worker, &errors, i] {
        try {
          worker();
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  // Deterministic merge in shard (lexicographic) order: higher tail wins,
  // ties keep the earlier (smaller) witness.
  BestTailResult merged;
  for (const auto& shard : results) {
    if (shard.max_tail > merged.tail_length) {
      merged.tail_length = shard.max_tail;
      merged.witness = shard.witness;
    }
  }
  return merged;
}

}  // namespace seqlab::curling

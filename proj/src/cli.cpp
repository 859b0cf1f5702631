#include "seqlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "seqlab/angelini.hpp"
#include "seqlab/curling.hpp"
#include "seqlab/digitgames.hpp"
#include "seqlab/duplication.hpp"
#include "seqlab/errors.hpp"
#include "seqlab/harness.hpp"
#include "seqlab/lagarias.hpp"
#include "seqlab/numerics.hpp"
#include "seqlab/quet.hpp"
#include "seqlab/torus_tsp.hpp"

namespace seqlab::cli {
namespace {

using nlohmann::json;
using numerics::Natural;

struct Context {
  std::string format = "text";
  int threads = 0;  // 0: use hardware concurrency
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  int exit_code = 0;
};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

Natural parse_natural(const std::string& text, const std::string& what) {
  if (text.empty()) throw CLI::ValidationError(what + ": empty number");
  for (const char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw CLI::ValidationError(what + ": not a decimal number: " + text);
    }
  }
  return Natural(text, 10);
}

// Symbols are single digits ("2232") or comma-separated integers ("2,2,3,2").
curling::CurlString parse_symbols(const std::string& text) {
  curling::CurlString symbols;
  if (text.find(',') != std::string::npos) {
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
      try {
        size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        symbols.push_back(value);
      } catch (const std::exception&) {
        throw CLI::ValidationError("curling: bad symbol: " + token);
      }
    }
  } else {
    for (const char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw CLI::ValidationError("curling: bad symbol: " +
                                   std::string(1, c));
      }
      symbols.push_back(c - '0');
    }
  }
  if (symbols.empty()) throw CLI::ValidationError("curling: empty string");
  return symbols;
}

// Arbitrary-precision values render as decimal strings in JSON; double or
// 64-bit values stay native.
json terms_json(const std::vector<mpz_class>& terms) {
  json arr = json::array();
  for (const auto& t : terms) arr.push_back(t.get_str());
  return arr;
}

json terms_json(const std::vector<uint64_t>& terms) {
  return json(terms);
}

json terms_json(const std::vector<int>& terms) {
  return json(terms);
}

std::string double_str(double v) { return json(v).dump(); }

std::string lines_of(const std::vector<mpz_class>& terms) {
  std::string out;
  for (const auto& t : terms) {
    out += t.get_str();
    out += '\n';
  }
  return out;
}

std::string lines_of(const std::vector<uint64_t>& terms) {
  std::string out;
  for (const auto t : terms) {
    out += std::to_string(t);
    out += '\n';
  }
  return out;
}

std::string spaced_line(const std::vector<int>& terms) {
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(terms[i]);
  }
  out += '\n';
  return out;
}

void emit(Context& ctx, const std::string& command, const json& params,
          const json& result, const std::string& text) {
  if (ctx.format == "json") {
    json envelope;
    envelope["command"] = command;
    envelope["parameters"] = params;
    envelope["result"] = result;
    *ctx.out << envelope.dump(2) << "\n";
  } else {
    *ctx.out << text;
  }
}

long natural_offset(const std::string& a_number) {
  if (a_number == "A033865" || a_number == "A134204") return 0;
  if (a_number == "A135473") return 3;
  return 1;
}

size_t default_verify_count(const std::string& a_number) {
  if (a_number == "A051003") return 14;
  if (a_number == "A033865") return 26;
  if (a_number == "A006960") return 11;
  if (a_number == "A131744") return 30;
  if (a_number == "A003001") return 8;
  if (a_number == "A135385") return 11;
  if (a_number == "A135473") return 13;
  if (a_number == "A090822") return 33;
  if (a_number == "A094004") return 14;
  if (a_number == "A134204") return 24;
  if (a_number == "A133242") return 10;
  if (a_number == "A057641") return 26;
  throw DomainError("verify: no generator for " + a_number);
}

// Bound for regenerating A135385 (fixed points past 2592 are astronomically
// sparse) and A133242 (index scan).
inline constexpr unsigned long kFixedPointVerifyBound = 1'000'000;
inline constexpr uint64_t kSmallIndexVerifyBound = 100'000;

std::vector<mpz_class> generate_for(const std::string& a_number, size_t count,
                                    int threads) {
  if (a_number == "A051003") return digitgames::beastly_prefix(count);
  if (a_number == "A033865") {
    std::vector<mpz_class> out;
    for (const auto& v : digitgames::a033865_prefix(count)) {
      out.push_back(v ? *v : mpz_class(-1));
    }
    return out;
  }
  if (a_number == "A006960") {
    auto t = digitgames::palindrome_trajectory(Natural(196),
                                               static_cast<int>(count));
    t.iterates.resize(count);
    return t.iterates;
  }
  if (a_number == "A131744") {
    std::vector<mpz_class> out;
    for (const int v :
         angelini::generate(1, count, angelini::LanguageTable::english())) {
      out.push_back(v);
    }
    return out;
  }
  if (a_number == "A003001") {
    std::vector<mpz_class> out;
    for (int p = 1; p <= static_cast<int>(count); ++p) {
      out.push_back(digitgames::smallest_with_persistence(p));
    }
    return out;
  }
  if (a_number == "A135385") {
    auto fixed =
        digitgames::powertrain_fixed_points(Natural(kFixedPointVerifyBound),
                                            threads);
    if (fixed.size() < count) {
      throw BoundExhaustedError(
          "verify: only " + std::to_string(fixed.size()) +
          " powertrain fixed points below " +
          std::to_string(kFixedPointVerifyBound));
    }
    fixed.resize(count);
    return fixed;
  }
  if (a_number == "A135473") {
    std::vector<mpz_class> out;
    for (const size_t c : duplication::reachable_counts("123", count + 2)) {
      out.push_back(static_cast<unsigned long>(c));
    }
    return out;
  }
  if (a_number == "A090822") {
    std::vector<mpz_class> out;
    for (const int v : curling::gijswijt_prefix(count)) out.push_back(v);
    return out;
  }
  if (a_number == "A094004") {
    std::vector<mpz_class> out;
    curling::BestTailOptions options;
    options.threads = threads;
    for (int n = 1; n <= static_cast<int>(count); ++n) {
      out.push_back(
          static_cast<unsigned long>(curling::best_tail(n, options).tail_length));
    }
    return out;
  }
  if (a_number == "A134204") {
    std::vector<mpz_class> out;
    for (const uint64_t v : quet::quet_prefix(count)) {
      out.push_back(static_cast<unsigned long>(v));
    }
    return out;
  }
  if (a_number == "A133242") {
    std::vector<mpz_class> out;
    quet::QuetSequence seq;
    for (uint64_t n = 1; n <= kSmallIndexVerifyBound && out.size() < count;
         ++n) {
      if (seq.next_term() < n) out.push_back(static_cast<unsigned long>(n));
    }
    if (out.size() < count) {
      throw BoundExhaustedError(
          "verify: fewer than " + std::to_string(count) +
          " small indices below " + std::to_string(kSmallIndexVerifyBound));
    }
    return out;
  }
  if (a_number == "A057641") {
    return lagarias::a057641_prefix(count).terms;
  }
  throw DomainError("verify: no generator for " + a_number);
}

// Re-anchors fixture and generated terms at the generator's first index when
// a fetched b-file starts earlier or later.
harness::SequenceRecord align_fixture(const harness::SequenceRecord& record,
                                      long offset,
                                      std::vector<mpz_class>& generated) {
  harness::SequenceRecord aligned = record;
  if (record.offset < offset) {
    const size_t drop = static_cast<size_t>(offset - record.offset);
    if (drop >= aligned.terms.size()) {
      throw DomainError("verify: fixture ends before index " +
                        std::to_string(offset));
    }
    aligned.terms.erase(aligned.terms.begin(),
                        aligned.terms.begin() + static_cast<long>(drop));
    aligned.offset = offset;
  } else if (record.offset > offset) {
    const size_t drop = static_cast<size_t>(record.offset - offset);
    if (drop >= generated.size()) {
      throw DomainError("verify: generated prefix ends before index " +
                        std::to_string(record.offset));
    }
    generated.erase(generated.begin(),
                    generated.begin() + static_cast<long>(drop));
  }
  return aligned;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;

  CLI::App app{"seqlab: integer-sequence generators, searches and fixture "
               "verification"};
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--threads", ctx.threads,
                 "worker threads (0: hardware concurrency)")
      ->check(CLI::NonNegativeNumber);

  // beastly --count K
  auto* beastly = app.add_subcommand("beastly", "smallest beastly numbers");
  auto beastly_count = std::make_shared<size_t>(0);
  beastly->add_option("--count", *beastly_count, "terms to emit")
      ->required()
      ->check(CLI::PositiveNumber);
  beastly->callback([&ctx, beastly_count] {
    const auto terms = digitgames::beastly_prefix(*beastly_count);
    emit(ctx, "beastly", json{{"count", *beastly_count}},
         json{{"terms", terms_json(terms)}}, lines_of(terms));
  });

  // lychrel N --cap C
  auto* lychrel =
      app.add_subcommand("lychrel", "reverse-and-add palindrome trajectory");
  auto lychrel_n = std::make_shared<std::string>();
  auto lychrel_cap = std::make_shared<int>(digitgames::kDefaultPalindromeCap);
  lychrel->add_option("n", *lychrel_n, "starting number")->required();
  lychrel->add_option("--cap", *lychrel_cap, "iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lychrel->callback([&ctx, lychrel_n, lychrel_cap] {
    const Natural start = parse_natural(*lychrel_n, "lychrel");
    const auto t = digitgames::palindrome_trajectory(start, *lychrel_cap);
    const size_t steps = t.iterates.size() - 1;
    const std::string status = t.resolved() ? "Resolved" : "CapReached";
    json result{{"status", status},
                {"steps", steps},
                {"iterates", terms_json(t.iterates)}};
    if (t.resolved()) result["palindrome"] = t.final_value().get_str();
    std::string text = lines_of(t.iterates);
    text += "status " + status + " steps " + std::to_string(steps) + "\n";
    emit(ctx, "lychrel",
         json{{"n", lychrel_n->c_str()}, {"cap", *lychrel_cap}}, result, text);
  });

  // trajectory196 --steps K
  auto* traj196 =
      app.add_subcommand("trajectory196", "reverse-and-add iterates of 196");
  auto traj_steps = std::make_shared<int>(0);
  traj196->add_option("--steps", *traj_steps, "reverse-and-add applications")
      ->required()
      ->check(CLI::PositiveNumber);
  traj196->callback([&ctx, traj_steps] {
    const auto t = digitgames::palindrome_trajectory(Natural(196), *traj_steps);
    emit(ctx, "trajectory196", json{{"steps", *traj_steps}},
         json{{"terms", terms_json(t.iterates)}}, lines_of(t.iterates));
  });

  // angelini --seed S --count K [--table FILE]
  auto* angelini_cmd =
      app.add_subcommand("angelini", "self-describing letter-difference "
                                     "sequence");
  auto angelini_seed = std::make_shared<int>(1);
  auto angelini_count = std::make_shared<size_t>(0);
  auto angelini_table = std::make_shared<std::string>();
  angelini_cmd->add_option("--seed", *angelini_seed, "first term")
      ->required();
  angelini_cmd->add_option("--count", *angelini_count, "terms to emit")
      ->required()
      ->check(CLI::PositiveNumber);
  angelini_cmd->add_option("--table", *angelini_table,
                           "language table file (default: built-in English)");
  angelini_cmd->callback([&ctx, angelini_seed, angelini_count,
                          angelini_table] {
    const angelini::LanguageTable table =
        angelini_table->empty() ? angelini::LanguageTable::english()
                                : angelini::LanguageTable::from_file(
                                      *angelini_table);
    const auto terms =
        angelini::generate(*angelini_seed, *angelini_count, table);
    emit(ctx, "angelini",
         json{{"seed", *angelini_seed},
              {"count", *angelini_count},
              {"table", angelini_table->empty() ? json("english")
                                                : json(*angelini_table)}},
         json{{"terms", terms_json(terms)}}, spaced_line(terms));
  });

  // persistence N | persistence --smallest P
  auto* persistence_cmd =
      app.add_subcommand("persistence", "multiplicative persistence");
  auto persistence_n = std::make_shared<std::string>();
  auto persistence_p = std::make_shared<int>(0);
  persistence_cmd->add_option("n", *persistence_n, "number to iterate");
  auto* smallest_opt =
      persistence_cmd->add_option("--smallest", *persistence_p,
                                  "least number with this persistence");
  persistence_cmd->callback([&ctx, persistence_n, persistence_p,
                             smallest_opt] {
    const bool have_n = !persistence_n->empty();
    const bool have_p = smallest_opt->count() > 0;
    if (have_n == have_p) {
      throw CLI::ValidationError(
          "persistence: give exactly one of N or --smallest P");
    }
    if (have_n) {
      const Natural n = parse_natural(*persistence_n, "persistence");
      const int p = digitgames::persistence(n);
      emit(ctx, "persistence", json{{"n", persistence_n->c_str()}},
           json{{"persistence", p}}, std::to_string(p) + "\n");
    } else {
      const Natural n = digitgames::smallest_with_persistence(*persistence_p);
      emit(ctx, "persistence", json{{"smallest", *persistence_p}},
           json{{"value", n.get_str()}}, n.get_str() + "\n");
    }
  });

  // powertrain N | powertrain --fixed-points LIMIT
  auto* powertrain_cmd =
      app.add_subcommand("powertrain", "powertrain map and its fixed points");
  auto powertrain_n = std::make_shared<std::string>();
  auto powertrain_limit = std::make_shared<std::string>();
  powertrain_cmd->add_option("n", *powertrain_n, "number to map");
  auto* fixed_opt = powertrain_cmd->add_option(
      "--fixed-points", *powertrain_limit, "list fixed points up to LIMIT");
  powertrain_cmd->callback([&ctx, powertrain_n, powertrain_limit, fixed_opt] {
    const bool have_n = !powertrain_n->empty();
    const bool have_limit = fixed_opt->count() > 0;
    if (have_n == have_limit) {
      throw CLI::ValidationError(
          "powertrain: give exactly one of N or --fixed-points LIMIT");
    }
    if (have_n) {
      const Natural n = parse_natural(*powertrain_n, "powertrain");
      const Natural v = digitgames::powertrain(n);
      emit(ctx, "powertrain", json{{"n", powertrain_n->c_str()}},
           json{{"value", v.get_str()}}, v.get_str() + "\n");
    } else {
      const Natural limit = parse_natural(*powertrain_limit, "powertrain");
      const auto fixed = digitgames::powertrain_fixed_points(
          limit, resolve_threads(ctx.threads));
      emit(ctx, "powertrain", json{{"limit", powertrain_limit->c_str()}},
           json{{"fixed_points", terms_json(fixed)}}, lines_of(fixed));
    }
  });

  // dup123 --seed S --max-len L
  auto* dup_cmd = app.add_subcommand(
      "dup123", "substring-duplication closure counts per length");
  auto dup_seed = std::make_shared<std::string>("123");
  auto dup_max = std::make_shared<size_t>(0);
  dup_cmd->add_option("--seed", *dup_seed, "seed string")
      ->capture_default_str();
  dup_cmd->add_option("--max-len", *dup_max, "largest length to count")
      ->required()
      ->check(CLI::PositiveNumber);
  dup_cmd->callback([&ctx, dup_seed, dup_max] {
    const auto counts = duplication::reachable_counts(*dup_seed, *dup_max);
    json arr = json::array();
    std::string text;
    for (size_t i = 0; i < counts.size(); ++i) {
      const size_t len = dup_seed->size() + i;
      arr.push_back(json{{"length", len}, {"count", counts[i]}});
      text += std::to_string(len) + " " + std::to_string(counts[i]) + "\n";
    }
    emit(ctx, "dup123", json{{"seed", dup_seed->c_str()}, {"max_len", *dup_max}},
         json{{"counts", arr}}, text);
  });

  // gijswijt --count K
  auto* gijswijt_cmd =
      app.add_subcommand("gijswijt", "append-curling-number sequence from 1");
  auto gijswijt_count = std::make_shared<size_t>(0);
  gijswijt_cmd->add_option("--count", *gijswijt_count, "terms to emit")
      ->required()
      ->check(CLI::PositiveNumber);
  gijswijt_cmd->callback([&ctx, gijswijt_count] {
    const auto terms = curling::gijswijt_prefix(*gijswijt_count);
    emit(ctx, "gijswijt", json{{"count", *gijswijt_count}},
         json{{"terms", terms_json(terms)}}, spaced_line(terms));
  });

  // curling STRING
  auto* curling_cmd =
      app.add_subcommand("curling", "curling number of a symbol string");
  auto curling_arg = std::make_shared<std::string>();
  curling_cmd->add_option("string", *curling_arg,
                          "digits, or comma-separated integers")
      ->required();
  curling_cmd->callback([&ctx, curling_arg] {
    const auto symbols = parse_symbols(*curling_arg);
    const int k = curling::curling_number(symbols);
    emit(ctx, "curling", json{{"string", curling_arg->c_str()}},
         json{{"curling_number", k}, {"symbols", terms_json(symbols)}},
         std::to_string(k) + "\n");
  });

  // best-tail N [--checkpoint FILE]
  auto* best_tail_cmd = app.add_subcommand(
      "best-tail", "longest tail before a 1 over initial {2,3}^n strings");
  auto best_tail_n = std::make_shared<int>(0);
  auto best_tail_checkpoint = std::make_shared<std::string>();
  best_tail_cmd->add_option("n", *best_tail_n, "initial string length")
      ->required()
      ->check(CLI::PositiveNumber);
  best_tail_cmd->add_option("--checkpoint", *best_tail_checkpoint,
                            "shard checkpoint file");
  best_tail_cmd->callback([&ctx, best_tail_n, best_tail_checkpoint] {
    curling::BestTailOptions options;
    options.threads = resolve_threads(ctx.threads);
    options.checkpoint_path = *best_tail_checkpoint;
    std::ostream* err_stream = ctx.err;
    options.progress = [err_stream](size_t done, size_t total) {
      const size_t step = std::max<size_t>(1, total / 16);
      if (done == total || done % step == 0) {
        *err_stream << "shards " << done << "/" << total << "\n";
      }
    };
    const auto result = curling::best_tail(*best_tail_n, options);
    std::string witness;
    for (const int s : result.witness) witness += std::to_string(s);
    std::string text = "tail_length " + std::to_string(result.tail_length) +
                       "\nwitness " + witness + "\n";
    emit(ctx, "best-tail", json{{"n", *best_tail_n}},
         json{{"tail_length", result.tail_length}, {"witness", witness}},
         text);
  });

  // quet --count K | quet --small-indices LIMIT
  auto* quet_cmd =
      app.add_subcommand("quet", "prime-generating recurrence");
  auto quet_count = std::make_shared<size_t>(0);
  auto quet_limit = std::make_shared<uint64_t>(0);
  auto* quet_count_opt =
      quet_cmd->add_option("--count", *quet_count, "terms to emit");
  auto* quet_small_opt = quet_cmd->add_option(
      "--small-indices", *quet_limit, "indices n <= LIMIT with a(n) < n");
  quet_cmd->callback([&ctx, quet_count, quet_limit, quet_count_opt,
                      quet_small_opt] {
    const bool have_count = quet_count_opt->count() > 0;
    const bool have_limit = quet_small_opt->count() > 0;
    if (have_count == have_limit) {
      throw CLI::ValidationError(
          "quet: give exactly one of --count K or --small-indices LIMIT");
    }
    if (have_count) {
      const auto terms = quet::quet_prefix(*quet_count);
      emit(ctx, "quet", json{{"count", *quet_count}},
           json{{"terms", terms_json(terms)}}, lines_of(terms));
    } else {
      const auto indices = quet::small_indices(*quet_limit);
      emit(ctx, "quet", json{{"small_indices", *quet_limit}},
           json{{"indices", terms_json(indices)}}, lines_of(indices));
    }
  });

  // tsp --n N --trials T --rng-seed R
  auto* tsp_cmd = app.add_subcommand(
      "tsp", "Monte Carlo estimate of the optimal torus tour length");
  auto tsp_n = std::make_shared<int>(0);
  auto tsp_trials = std::make_shared<uint64_t>(0);
  auto tsp_seed = std::make_shared<uint64_t>(0);
  tsp_cmd->add_option("--n", *tsp_n, "points per instance")
      ->required()
      ->check(CLI::PositiveNumber);
  tsp_cmd->add_option("--trials", *tsp_trials, "random instances")
      ->required();
  tsp_cmd->add_option("--rng-seed", *tsp_seed, "stream seed")
      ->capture_default_str();
  tsp_cmd->callback([&ctx, tsp_n, tsp_trials, tsp_seed] {
    const auto est = torus_tsp::estimate_L(*tsp_n, *tsp_trials, *tsp_seed,
                                           resolve_threads(ctx.threads));
    const double mean_absolute = est.mean_eels * torus_tsp::eel_constant();
    json result{{"n", *tsp_n},
                {"trials", est.trials},
                {"seed", est.seed},
                {"mean_eels", est.mean_eels},
                {"std_error_eels", est.std_error_eels},
                {"mean_absolute", mean_absolute}};
    std::string text;
    text += "n " + std::to_string(*tsp_n) + "\n";
    text += "trials " + std::to_string(est.trials) + "\n";
    text += "seed " + std::to_string(est.seed) + "\n";
    text += "mean_eels " + double_str(est.mean_eels) + "\n";
    text += "std_error_eels " + double_str(est.std_error_eels) + "\n";
    text += "mean_absolute " + double_str(mean_absolute) + "\n";
    emit(ctx, "tsp",
         json{{"n", *tsp_n}, {"trials", *tsp_trials}, {"rng_seed", *tsp_seed}},
         result, text);
  });

  // lagarias --count K | lagarias --check LIMIT
  auto* lagarias_cmd = app.add_subcommand(
      "lagarias", "floored Riemann-hypothesis slack sequence");
  auto lagarias_count = std::make_shared<size_t>(0);
  auto lagarias_limit = std::make_shared<uint64_t>(0);
  auto* lagarias_count_opt =
      lagarias_cmd->add_option("--count", *lagarias_count, "terms to emit");
  auto* lagarias_check_opt = lagarias_cmd->add_option(
      "--check", *lagarias_limit, "scan 1..LIMIT for a negative term");
  lagarias_cmd->callback([&ctx, lagarias_count, lagarias_limit,
                          lagarias_count_opt, lagarias_check_opt] {
    const bool have_count = lagarias_count_opt->count() > 0;
    const bool have_check = lagarias_check_opt->count() > 0;
    if (have_count == have_check) {
      throw CLI::ValidationError(
          "lagarias: give exactly one of --count K or --check LIMIT");
    }
    if (have_count) {
      const auto prefix = lagarias::a057641_prefix(*lagarias_count);
      emit(ctx, "lagarias", json{{"count", *lagarias_count}},
           json{{"terms", terms_json(prefix.terms)},
                {"max_precision_bits", prefix.max_precision_used}},
           lines_of(prefix.terms));
    } else {
      const auto scan = lagarias::check_nonnegative(
          *lagarias_limit, resolve_threads(ctx.threads));
      json result{{"first_violation", scan.first_violation
                                          ? json(*scan.first_violation)
                                          : json(nullptr)},
                  {"max_precision_bits", scan.max_precision_used}};
      std::string text = "first_violation ";
      text += scan.first_violation ? std::to_string(*scan.first_violation)
                                   : "none";
      text += "\nmax_precision_bits " +
              std::to_string(scan.max_precision_used) + "\n";
      emit(ctx, "lagarias", json{{"check", *lagarias_limit}}, result, text);
    }
  });

  // verify ANUMBER --count K [--fetch]
  auto* verify_cmd = app.add_subcommand(
      "verify", "regenerate a sequence and compare against ground truth");
  auto verify_a = std::make_shared<std::string>();
  auto verify_count = std::make_shared<size_t>(0);
  auto verify_fetch = std::make_shared<bool>(false);
  verify_cmd->add_option("anumber", *verify_a, "sequence identifier")
      ->required();
  verify_cmd->add_option("--count", *verify_count,
                         "terms to regenerate (default per sequence)");
  verify_cmd->add_flag("--fetch", *verify_fetch,
                       "fetch the b-file instead of using the bundled copy");
  verify_cmd->callback([&ctx, verify_a, verify_count, verify_fetch] {
    if (!harness::is_a_number(*verify_a)) {
      throw CLI::ValidationError("verify: bad A-number: " + *verify_a);
    }
    const size_t count =
        *verify_count > 0 ? *verify_count : default_verify_count(*verify_a);
    harness::SequenceRecord record;
    if (*verify_fetch) {
      auto config = harness::FetchConfig::from_environment();
      config.allow_network = true;
      harness::BfileClient client(std::move(config));
      record = client.fetch(*verify_a);
    } else {
      record = harness::bundled_fixture(*verify_a);
    }
    auto generated =
        generate_for(*verify_a, count, resolve_threads(ctx.threads));
    const auto aligned =
        align_fixture(record, natural_offset(*verify_a), generated);
    const auto report = harness::verify(*verify_a, generated, aligned);
    const std::string status = report.passed() ? "pass" : "fail";

    json result{{"a_number", report.a_number},
                {"compared", report.compared},
                {"status", status}};
    std::string text = report.a_number + " compared " +
                       std::to_string(report.compared) + " " + status + "\n";
    if (report.first_mismatch) {
      const auto& m = *report.first_mismatch;
      result["mismatch"] = json{{"index", m.index},
                                {"expected", m.expected.get_str()},
                                {"actual", m.actual.get_str()}};
      text += "mismatch index " + std::to_string(m.index) + " expected " +
              m.expected.get_str() + " actual " + m.actual.get_str() + "\n";
    } else {
      result["mismatch"] = nullptr;
    }
    emit(ctx, "verify",
         json{{"a_number", verify_a->c_str()},
              {"count", count},
              {"fetch", *verify_fetch}},
         result, text);
    if (!report.passed()) ctx.exit_code = 1;
  });

  // Let --format/--threads appear after the subcommand name too.
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const seqlab::Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  err << "elapsed_ms " << elapsed.count() << "\n";
  return ctx.exit_code;
}

}  // namespace seqlab::cli

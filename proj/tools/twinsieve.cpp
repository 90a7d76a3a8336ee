// twinsieve: command-line front end.
//
//   twinsieve twins    --limit N [--format csv|json] [--output PATH]
//   twinsieve classify M
//   twinsieve runs     --limit N [--witnesses]
//   twinsieve verify   --limit N [--scope twins,classify,parity,merged]
//   twinsieve bench    --limit N [--segment-size S] [--threads T]
//
// Exit codes: 0 success, 1 usage, 2 verification mismatch, 3 I/O failure.
// Settings precedence: flags > TWINSIEVE_* environment > --config file > defaults.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twinsieve/twinsieve.hpp"

namespace {

using namespace twinsieve;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::optional<Index> limit;
  std::string format = "csv";
  std::string output;
  std::uint64_t segment_size = kDefaultSegmentSize;
  unsigned threads = 0;
  bool quiet = false;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
  return v;
}

unsigned parse_threads(const std::string& text, const std::string& what) {
  const auto v = parse_u64(text, what);
  if (v > 1024) throw UsageError(what + ": at most 1024 threads");
  return static_cast<unsigned>(v);
}

bool parse_bool(const std::string& text, const std::string& what) {
  if (text == "1" || text == "true" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "no") return false;
  throw UsageError(what + ": expected true/false, got '" + text + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void apply_setting(Settings& s, const std::string& key, const std::string& value, const std::string& origin) {
  const std::string what = origin + " " + key;
  if (key == "limit") s.limit = parse_u64(value, what);
  else if (key == "format") s.format = value;
  else if (key == "output") s.output = value;
  else if (key == "segment_size") s.segment_size = parse_u64(value, what);
  else if (key == "threads") s.threads = parse_threads(value, what);
  else if (key == "quiet") s.quiet = parse_bool(value, what);
  else throw UsageError(origin + ": unknown key '" + key + "'");
}

// key=value lines; '#' starts a comment.
void load_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_setting(s, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), path + ":" + std::to_string(lineno));
  }
}

void load_environment(Settings& s) {
  if (const char* v = std::getenv("TWINSIEVE_THREADS")) s.threads = parse_threads(v, "TWINSIEVE_THREADS");
  if (const char* v = std::getenv("TWINSIEVE_SEGMENT_SIZE")) s.segment_size = parse_u64(v, "TWINSIEVE_SEGMENT_SIZE");
}

SieveConfig sieve_config(const Settings& s) {
  if (!s.limit || *s.limit == 0) throw UsageError("--limit must be given and >= 1");
  if (*s.limit > kMaxIndex) throw UsageError("--limit too large: 6*limit+1 must fit in 64 bits");
  if (s.segment_size == 0) throw UsageError("--segment-size must be >= 1");
  return SieveConfig{*s.limit, s.segment_size, s.threads};
}

Json limit_parameters(const SieveConfig& c) {
  Json p = Json::object();
  p["limit"] = c.limit;
  p["max_integer"] = 6 * c.limit + 1;
  return p;
}

void info(const Settings& s, const std::string& msg) {
  if (!s.quiet) std::cerr << msg << '\n';
}

void emit(const OutputRecord& record, const Settings& s) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!s.output.empty()) {
    file.open(s.output, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + s.output + " for writing");
    os = &file;
  }
  if (s.format == "json") write_json(*os, record);
  else write_csv(*os, record);
  os->flush();
  if (!*os) throw IoError("write failed" + (s.output.empty() ? std::string{} : " for " + s.output));
}

int cmd_twins(const Settings& s) {
  const auto config = sieve_config(s);
  info(s, "twins: limit " + std::to_string(config.limit) + ", integers up to " + std::to_string(6 * config.limit + 1));
  OutputRecord r;
  r.command = "twins";
  r.parameters = limit_parameters(config);
  r.columns = {"n", "p", "q"};
  for_each_twin(config, [&](const TwinPair& t) { r.add_row({t.n, t.p, t.q}); });
  emit(r, s);
  return kExitOk;
}

int cmd_classify(const Settings& s, const std::string& m_text) {
  const auto m = parse_u64(m_text, "classify");
  Classification c;
  try {
    c = classify(m);
  } catch (const DomainError& e) {
    throw UsageError(std::string(e.what()) + " (classify accepts m >= 5 with m = 6n-1 or m = 6n+1)");
  }
  OutputRecord r;
  r.command = "classify";
  r.parameters["m"] = m;
  r.columns = {"m", "verdict", "form", "x", "y", "n", "d1", "d2"};
  if (c.witness) {
    r.add_row({m, std::string(to_string(c.verdict)), std::string(to_string(c.witness->kind)), c.witness->x,
               c.witness->y, c.witness->n, c.divisors->d1, c.divisors->d2});
  } else {
    const auto [n, side] = locate(m);
    r.add_row({m, std::string(to_string(c.verdict)), nullptr, nullptr, nullptr, n, nullptr, nullptr});
  }
  emit(r, s);
  return kExitOk;
}

std::string witness_list(const RunReport& run) {
  std::string out;
  for (const auto& w : run.witnesses) {
    if (!out.empty()) out += ';';
    out += std::to_string(w.n) + ":" + std::string(to_string(w.kind)) + "(" + std::to_string(w.x) + " " +
           std::to_string(w.y) + ")";
  }
  return out;
}

int cmd_runs(const Settings& s, bool with_witnesses) {
  const auto config = sieve_config(s);
  info(s, "runs: limit " + std::to_string(config.limit) + ", integers up to " + std::to_string(6 * config.limit + 1));
  const auto spans = blocked_run_spans(config);
  const auto hist = run_length_histogram(spans);

  std::uint64_t blocked = 0;
  for (const auto& sp : spans) blocked += sp.length;

  OutputRecord r;
  r.command = "runs";
  r.parameters = limit_parameters(config);
  r.parameters["witnesses"] = with_witnesses;

  if (s.format == "json") {
    r.columns = {"start", "end", "length", "truncated"};
    if (with_witnesses) r.columns.push_back("witnesses");
    for (const auto& sp : spans) {
      std::vector<Json> row{sp.start, sp.last(), sp.length, sp.truncated};
      if (with_witnesses) {
        Json ws = Json::array();
        for (const auto& w : attach_witnesses(sp).witnesses)
          ws.push_back({{"n", w.n}, {"kind", to_string(w.kind)}, {"x", w.x}, {"y", w.y}});
        row.push_back(std::move(ws));
      }
      r.add_row(std::move(row));
    }
    Json summary = Json::object();
    summary["run_count"] = spans.size();
    summary["blocked_count"] = blocked;
    summary["twin_count"] = config.limit - blocked;
    Json h = Json::object();
    for (const auto& [len, count] : hist) h[std::to_string(len)] = count;
    summary["histogram"] = std::move(h);
    if (spans.empty()) {
      summary["longest"] = nullptr;
    } else {
      const auto best = longest_run_span(spans);
      summary["longest"] = {{"start", best.start}, {"end", best.last()}, {"length", best.length},
                            {"truncated", best.truncated}};
    }
    r.summary = std::move(summary);
  } else {
    // One flat table: run rows, then histogram rows, then the longest run.
    r.columns = {"kind", "start", "length", "count", "truncated"};
    if (with_witnesses) r.columns.push_back("witnesses");
    auto row = [&](std::vector<Json> cells, const std::string& witnesses) {
      if (with_witnesses) cells.push_back(witnesses);
      r.add_row(std::move(cells));
    };
    for (const auto& sp : spans)
      row({"run", sp.start, sp.length, nullptr, sp.truncated}, with_witnesses ? witness_list(attach_witnesses(sp)) : "");
    for (const auto& [len, count] : hist) row({"histogram", nullptr, len, count, nullptr}, "");
    if (!spans.empty()) {
      const auto best = longest_run_span(spans);
      row({"longest", best.start, best.length, nullptr, best.truncated}, "");
    }
  }
  emit(r, s);
  return kExitOk;
}

int cmd_verify(const Settings& s, const std::vector<std::string>& scope_names) {
  const auto config = sieve_config(s);
  std::vector<VerifyScope> scopes;
  for (const auto& name : scope_names) {
    auto sc = parse_scope(name);
    if (!sc) throw UsageError("unknown scope '" + name + "' (expected twins, classify, parity or merged)");
    scopes.push_back(*sc);
  }
  if (scopes.empty()) scopes.assign(std::begin(kAllScopes), std::end(kAllScopes));

  OutputRecord r;
  r.command = "verify";
  r.parameters = limit_parameters(config);
  Json names = Json::array();
  for (auto sc : scopes) names.push_back(to_string(sc));
  r.parameters["scope"] = std::move(names);
  r.columns = {"scope", "status", "checked", "mismatches", "detail", "samples"};

  bool all_passed = true;
  for (auto sc : scopes) {
    const auto res = run_scope(sc, config);
    all_passed = all_passed && res.passed;
    std::string samples;
    for (const auto& smp : res.samples) samples += (samples.empty() ? "" : "; ") + smp;
    info(s, std::string(to_string(sc)) + ": " + (res.passed ? "PASS" : "FAIL") + " (" + res.detail + ")");
    r.add_row({std::string(to_string(sc)), res.passed ? "pass" : "fail", res.checked, res.mismatches, res.detail, samples});
  }
  emit(r, s);
  return all_passed ? kExitOk : kExitMismatch;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

int cmd_bench(const Settings& s) {
  const auto config = sieve_config(s);
  info(s, "bench: limit " + std::to_string(config.limit) + ", integers up to " + std::to_string(6 * config.limit + 1));
  const auto t0 = std::chrono::steady_clock::now();
  const auto digest = digest_twins(config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
  const double seconds = elapsed.count();

  OutputRecord r;
  r.command = "bench";
  r.parameters = limit_parameters(config);
  r.parameters["segment_size"] = config.segment_size;
  r.parameters["threads"] = config.threads();
  r.columns = {"limit", "twin_count", "hash", "wall_seconds", "indices_per_second", "memory_estimate_bytes"};
  r.add_row({config.limit, digest.count, hex64(digest.hash), seconds,
             seconds > 0 ? static_cast<double>(config.limit) / seconds : 0.0, estimate_sieve_memory(config)});
  emit(r, s);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twin prime index sieve built on the forms 6xy+x-y, 6xy+x+y, 6xy-x-y", "twinsieve"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t limit = 0;
  std::string format;
  std::string output;
  std::string segment_size;
  std::string threads;
  std::string config_path;
  bool quiet = false;
  auto* limit_opt = app.add_option("--limit", limit, "Inclusive upper bound on the index n (integers up to 6n+1)");
  auto* format_opt = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  auto* output_opt = app.add_option("--output", output, "Write output to PATH instead of stdout");
  auto* segment_opt = app.add_option("--segment-size", segment_size, "Indices per sieve segment");
  auto* threads_opt = app.add_option("--threads", threads, "Worker threads (0 = all cores)");
  auto* quiet_opt = app.add_flag("--quiet", quiet, "Suppress informational messages on stderr");
  app.add_option("--config", config_path, "key=value settings file");

  auto* twins = app.add_subcommand("twins", "List twin pairs (n, 6n-1, 6n+1) with n <= limit");
  auto* classify_cmd = app.add_subcommand("classify", "Classify m = 6n+-1 as prime or composite with a certificate");
  std::string m_text;
  classify_cmd->add_option("m", m_text, "Integer to classify")->required();
  auto* runs = app.add_subcommand("runs", "Maximal runs of consecutive blocked indices");
  bool with_witnesses = false;
  runs->add_flag("--witnesses", with_witnesses, "Include one witness per blocked index");
  auto* verify = app.add_subcommand("verify", "Cross-check against the classical oracle");
  std::vector<std::string> scopes;
  verify->add_option("--scope", scopes, "Comma-separated subset of twins,classify,parity,merged")->delimiter(',');
  auto* bench = app.add_subcommand("bench", "Time the sieve and print a deterministic result hash");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Settings s;
    if (!config_path.empty()) load_config_file(s, config_path);
    load_environment(s);
    if (limit_opt->count()) s.limit = limit;
    if (format_opt->count()) s.format = format;
    if (output_opt->count()) s.output = output;
    if (segment_opt->count()) s.segment_size = parse_u64(segment_size, "--segment-size");
    if (threads_opt->count()) s.threads = parse_threads(threads, "--threads");
    if (quiet_opt->count()) s.quiet = quiet;
    if (s.format != "csv" && s.format != "json") throw UsageError("format must be csv or json");

    if (*twins) return cmd_twins(s);
    if (*classify_cmd) return cmd_classify(s, m_text);
    if (*runs) return cmd_runs(s, with_witnesses);
    if (*verify) return cmd_verify(s, scopes);
    if (*bench) return cmd_bench(s);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

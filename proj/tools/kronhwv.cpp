// Command-line front end for the kronhwv library.

#include "kronhwv/json_io.hpp"
#include "kronhwv/kronhwv.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

using namespace kronhwv;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersionTag = "kronhwv-cache-v1";

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct Options {
  std::string weight;
  std::string table;
  std::string other;
  std::string out;
  std::string format = "json";
  int threads = 1;
  std::string cache_dir;
  std::string method = "auto";
  std::uint64_t budget = kDefaultDenseBudget;
  bool all_pairs = false;
  bool timing = false;
  bool verify_cache = false;

  int d = 0;
  int k = 0;
  int n = 0;
  int c = 0;
  int min_m = 0;
  int max_m = -1;
  int sample = 0;
  unsigned seed = 1;
  int power = 0;
  std::string kind;
  std::string form = "lex";
  std::string side = "both";
  std::string kron_method = "char";
  std::string mode = "sym";
  bool dump = false;
};

struct Result {
  int exit = kOk;
  std::string output;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

std::string cache_dir(const Options& o) {
  if (const char* env = std::getenv("KRONHWV_CACHE"); env && *env) return env;
  return o.cache_dir;
}

/// Runs `compute` through the on-disk cache. Entries hold the exact output
/// bytes and exit code of a previous run of the same request.
Result cached(const Options& o, const json& request, const std::function<Result()>& compute) {
  const std::string dir = cache_dir(o);
  if (dir.empty()) return compute();
  const std::string canonical = request.dump();
  const std::string key = hex(fnv1a(std::string(kVersionTag) + "\n" + canonical));
  const fs::path path = fs::path(dir) / (key + ".json");
  if (fs::exists(path)) {
    json entry;
    try {
      entry = json::parse(read_file(path.string()));
    } catch (const std::exception&) {
      entry = json();
    }
    if (entry.is_object() && entry.value("version", "") == kVersionTag &&
        entry.value("request", "") == canonical) {
      Result hit{entry.at("exit").get<int>(), entry.at("output").get<std::string>()};
      if (o.verify_cache) {
        const Result fresh = compute();
        if (fresh.output != hit.output || fresh.exit != hit.exit) {
          std::cerr << "cache entry " << path.string() << " differs from recomputation\n";
          return {kVerifyFailed, fresh.output};
        }
        std::cerr << "cache entry " << path.string() << " verified\n";
      }
      return hit;
    }
  }
  Result fresh = compute();
  json entry = {{"version", kVersionTag},
                {"key", key},
                {"request", canonical},
                {"created_at", std::chrono::duration_cast<std::chrono::seconds>(
                                   std::chrono::system_clock::now().time_since_epoch())
                                   .count()},
                {"exit", fresh.exit},
                {"output", fresh.output}};
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path tmp = fs::path(dir) / (key + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream f(tmp, std::ios::binary);
    f << entry.dump(1) << '\n';
    if (!f) {
      std::cerr << "warning: could not write cache entry " << tmp.string() << '\n';
      return fresh;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
  return fresh;
}

json base_request(const std::string& op, const Options& o) {
  return {{"op", op}, {"format", o.format}, {"method", o.method}, {"timing", o.timing}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string scalar(const BigInt& v) { return v.str() + "\n"; }

WeightTuple need_weight(const Options& o) {
  if (o.weight.empty()) throw InputError("--weight is required");
  return weight_from_arg(o.weight);
}

Table need_table(const std::string& arg, const char* flag) {
  if (arg.empty()) throw InputError(std::string(flag) + " is required");
  return table_from_arg(arg);
}

void need(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

Result report_result(const Report& r, const Options& o) {
  return {r.pass() ? kOk : kVerifyFailed, dump(to_json(r, o.timing))};
}

Result expansion_result(const Expansion& e, const Options& o) {
  return {kOk, o.format == "csv" ? to_csv(e) : dump(to_json(e))};
}

// ---- subcommand bodies ------------------------------------------------------

Result run_tables(const Options& o) {
  const WeightTuple w = need_weight(o);
  const std::string kind = o.kind.empty() ? "natural" : o.kind;
  need(kind == "natural" || kind == "zero-one", "--kind must be natural or zero-one");
  need(o.form == "lex" || o.form == "lattice", "--form must be lex or lattice");
  json req = base_request("tables", o);
  req["weight"] = to_json(w);
  req["kind"] = kind;
  req["form"] = o.form;
  return cached(o, req, [&] {
    const auto tables =
        enumerate_tables(w, kind == "natural" ? TableKind::natural : TableKind::zero_one,
                         o.form == "lex" ? TableForm::lex : TableForm::lattice);
    if (o.format == "csv") {
      std::string s = "index\n";
      for (const auto& t : tables) s += t.str() + "\n";
      return Result{kOk, s};
    }
    json list = json::array();
    for (const auto& t : tables) list.push_back(to_json(t));
    json out = {{"weight", to_json(w)},
                {"kind", kind},
                {"form", o.form},
                {"count", std::to_string(tables.size())},
                {"tables", list}};
    return Result{kOk, dump(out)};
  });
}

Result run_coeff(const Options& o) {
  const std::string kind = o.kind.empty() ? "a" : o.kind;
  need(kind == "a" || kind == "b", "--kind must be a or b");
  const Table t = need_table(o.table, "--table");
  const Table s = need_table(o.other, "--with");
  const Method method = parse_method(o.method);
  json req = base_request("coeff", o);
  req["kind"] = kind;
  req["table"] = to_json(t);
  req["with"] = to_json(s);
  return cached(o, req, [&] {
    const BigInt v = kind == "a" ? coeff_a(t, s, method) : coeff_b(t, s, method);
    return Result{kOk, scalar(v)};
  });
}

Result run_expansion(const Options& o, bool delta) {
  const Table t = need_table(o.table, "--table");
  const Method method = parse_method(o.method);
  json req = base_request(delta ? "delta" : "nabla", o);
  req["table"] = to_json(t);
  return cached(o, req, [&] {
    return expansion_result(delta ? delta_expansion(t, method) : nabla_expansion(t, method), o);
  });
}

Result run_tensor(const Options& o) {
  const Table t = need_table(o.table, "--table");
  need(o.mode == "sym" || o.mode == "alt", "--mode must be sym or alt");
  need(o.n >= 1, "--n must be >= 1");
  json req = base_request("tensor", o);
  req["table"] = to_json(t);
  req["mode"] = o.mode;
  req["n"] = o.n;
  req["budget"] = o.budget;
  return cached(o, req, [&] {
    return expansion_result(
        tensor_oracle(t, o.mode == "sym" ? Space::sym : Space::alt, o.n, o.budget), o);
  });
}

Result run_kron(const Options& o) {
  const WeightTuple w = need_weight(o);
  need(o.kron_method == "char" || o.kron_method == "rank", "kron --method must be char or rank");
  json req = base_request("kron", o);
  req["weight"] = to_json(w);
  req["kron_method"] = o.kron_method;
  return cached(o, req, [&] {
    if (o.kron_method == "char") return Result{kOk, scalar(kron(w))};
    return Result{kOk, scalar(exact_rank(coeff_matrix(w, CoeffKind::a)))};
  });
}

Result run_rank(const Options& o) {
  const WeightTuple w = need_weight(o);
  const std::string kind = o.kind.empty() ? "a" : o.kind;
  need(kind == "a" || kind == "b", "--kind must be a or b");
  const Method method = parse_method(o.method);
  json req = base_request("rank", o);
  req["weight"] = to_json(w);
  req["kind"] = kind;
  req["dump"] = o.dump;
  return cached(o, req, [&] {
    const auto m = coeff_matrix(w, kind == "a" ? CoeffKind::a : CoeffKind::b, method);
    if (!o.dump) return Result{kOk, scalar(exact_rank(m))};
    if (o.format == "csv") return Result{kOk, to_csv(m)};
    json out = to_json(m);
    out["rank"] = std::to_string(exact_rank(m));
    return Result{kOk, dump(out)};
  });
}

Result run_at(const Options& o) {
  json req = base_request("at", o);
  if (!o.table.empty()) {
    const Table t = need_table(o.table, "--table");
    need(o.n >= 1, "--n must be >= 1 with --table");
    req["table"] = to_json(t);
    req["n"] = o.n;
    return cached(o, req, [&] { return Result{kOk, scalar(alon_tarsi(t, o.n))}; });
  }
  need(o.d >= 1 && o.k >= 1, "--d and --k are required");
  req["d"] = o.d;
  req["k"] = o.k;
  return cached(o, req, [&] { return Result{kOk, scalar(alon_tarsi(o.d, o.k))}; });
}

Result run_latin(const Options& o) {
  need(o.d >= 1 && o.k >= 1, "--d and --k are required");
  json req = base_request("latin", o);
  req["d"] = o.d;
  req["k"] = o.k;
  req["dump"] = o.dump;
  return cached(o, req, [&] {
    if (!o.dump) return Result{kOk, scalar(latin_count(o.d, o.k))};
    const Table support = fundamental_table(o.d, o.k);
    const int n = int_pow(o.k, o.d - 1);
    std::string s = "sign";
    for (int c = 0; c < support.m(); ++c) {
      s += ",";
      for (int r = 0; r < support.d(); ++r) s += std::to_string(support.at(r, c));
    }
    s += "\n";
    enumerate_latin(support, n, [&](const PartialLatinHypercube& l) {
      s += std::to_string(latin_sign(l));
      for (int v : l.values) s += "," + std::to_string(v);
      s += "\n";
    });
    return Result{kOk, s};
  });
}

Result run_eval_unit(const Options& o) {
  const Table t = need_table(o.table, "--table");
  need(o.n >= 1, "--n must be >= 1");
  const Method method = parse_method(o.method);
  json req = base_request("eval-unit", o);
  req["table"] = to_json(t);
  req["n"] = o.n;
  return cached(o, req, [&] { return Result{kOk, scalar(eval_unit(t, o.n, method))}; });
}

/// Weight tuples named by --weight, or every tuple with the given d and
/// min_m ≤ m ≤ max_m (optionally a seeded sample of `sample` of them per m).
std::vector<WeightTuple> sweep_weights(const Options& o) {
  if (!o.weight.empty()) return {need_weight(o)};
  need(o.d >= 1, "--weight or --d is required");
  need(o.max_m >= 0, "--max-m is required with --d");
  std::vector<WeightTuple> out;
  std::mt19937 rng(o.seed);
  for (int m = std::max(0, o.min_m); m <= o.max_m; ++m) {
    auto all = all_weight_tuples(o.d, m);
    if (o.sample > 0 && static_cast<std::size_t>(o.sample) < all.size()) {
      std::vector<WeightTuple> picked;
      std::sample(all.begin(), all.end(), std::back_inserter(picked), o.sample, rng);
      all = std::move(picked);
    }
    out.insert(out.end(), all.begin(), all.end());
  }
  return out;
}

std::string sweep_claim(const std::string& name, const Options& o) {
  if (!o.weight.empty()) return name;
  std::string s = name + " d=" + std::to_string(o.d) + " m=" + std::to_string(std::max(0, o.min_m)) +
                  ".." + std::to_string(o.max_m);
  if (o.sample > 0) s += " sample=" + std::to_string(o.sample) + " seed=" + std::to_string(o.seed);
  return s;
}

/// Folds one per-weight report into the sweep total, tagging violations with
/// the weight and keeping per-weight details only for single-weight runs.
void fold(Report& total, const Report& part, bool keep_details) {
  Report tagged = part;
  tagged.violations.clear();
  for (const auto& v : part.violations) tagged.violations.push_back(part.claim + ": " + v);
  if (!keep_details) tagged.details.clear();
  total.merge(tagged);
}

Result run_verify(const std::string& what, const Options& o) {
  const Method method = parse_method(o.method);
  json req = base_request("verify " + what, o);
  Report total;
  if (what == "omega" || what == "hyperdet" || what == "evenprops") {
    need(o.d >= 1 && o.k >= 1, "--d and --k are required");
    req["d"] = o.d;
    req["k"] = o.k;
    if (what == "evenprops") {
      need(o.c >= 1, "--c is required");
      req["c"] = o.c;
      return cached(o, req, [&] {
        return report_result(check_even_coeff_props(o.d, o.c, o.k, method), o);
      });
    }
    const int volume = int_pow(o.k, o.d - 1);
    const int n = o.n > 0 ? o.n : volume;
    req["n"] = n;
    return cached(o, req, [&] {
      const auto p = what == "omega" ? omega_power(o.d, o.k, n, method)
                                     : delta_power(o.d, o.k, n, method);
      return report_result(p.report, o);
    });
  }

  const auto weights = sweep_weights(o);
  json wl = json::array();
  for (const auto& w : weights) wl.push_back(to_json(w));
  req["weights"] = wl;
  req["all_pairs"] = o.all_pairs;
  if (what == "kernel") {
    need(o.side == "sym" || o.side == "alt" || o.side == "both", "--side must be sym, alt or both");
    req["side"] = o.side;
  }
  return cached(o, req, [&] {
    Stopwatch clock;
    total.claim = sweep_claim(what, o);
    const bool single = weights.size() == 1;
    for (const auto& w : weights) {
      if (what == "duality") {
        fold(total, check_duality(w, method), single);
      } else if (what == "isomorphism") {
        fold(total, check_isomorphism(w, method), single);
      } else if (what == "relations") {
        fold(total, check_relations(w, o.all_pairs, method), single);
      } else if (what == "kernel") {
        if (o.side != "alt") fold(total, kernel_dimension(w, Space::sym, o.all_pairs), single);
        if (o.side != "sym") fold(total, kernel_dimension(w, Space::alt, o.all_pairs), single);
      } else {
        throw InputError("unknown verify target '" + what + "'");
      }
    }
    total.detail("weights", std::to_string(weights.size()));
    total.elapsed_ms = clock.ms();
    return report_result(total, o);
  });
}

Result run_cayley(const std::string& which, const Options& o) {
  need(o.d >= 1 && o.k >= 1, "--d and --k are required");
  need(o.power >= 1, "--power must be >= 1");
  const Method method = parse_method(o.method);
  json req = base_request("cayley " + which, o);
  req["d"] = o.d;
  req["k"] = o.k;
  req["power"] = o.power;
  return cached(o, req, [&] {
    const auto p = which == "omega" ? omega_power(o.d, o.k, o.power, method)
                                    : delta_power(o.d, o.k, o.power, method);
    if (!p.report.pass()) return report_result(p.report, o);
    return expansion_result(p.expansion, o);
  });
}

void emit(const Result& r, const Options& o) {
  if (o.out.empty()) {
    std::cout << r.output << std::flush;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + o.out);
  f << r.output;
  // A failing verification still goes to stdout as well.
  if (r.exit == kVerifyFailed) std::cout << r.output << std::flush;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{
      "Highest weight vectors, Kronecker coefficients and Alon-Tarsi numbers.\n"
      "Weights: JSON file, inline JSON, or shorthand such as 2,2|2,2|2,2.\n"
      "Tables: JSON file, inline JSON, or shorthand such as 1122/1212/1221.",
      "kronhwv"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--weight", o.weight, "Weight tuple (file, inline JSON or shorthand)");
  app.add_option("--table", o.table, "Table (file, inline JSON or shorthand)");
  app.add_option("--out", o.out, "Output file (default stdout)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", o.cache_dir, "Result cache directory (KRONHWV_CACHE overrides)");
  app.add_option("--method", o.method, "Coefficient method: oracle|fillings|auto");
  app.add_option("--budget", o.budget, "Size cap for the dense tensor oracle");
  app.add_flag("--all-pairs", o.all_pairs, "Use every raising pair i<j, not only i, i+1");
  app.add_flag("--timing", o.timing, "Include elapsed_ms in reports");
  app.add_flag("--verify-cache", o.verify_cache, "Recompute cache hits and compare bytes");

  auto add_dk = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "Number of tensor factors");
    sub->add_option("--k", o.k, "Side length");
  };

  std::function<Result()> action;

  auto* tables = app.add_subcommand("tables", "Enumerate the lex (or lattice) index set of a weight");
  tables->add_option("--kind", o.kind, "natural|zero-one");
  tables->add_option("--form", o.form, "lex|lattice");
  tables->callback([&] { action = [&] { return run_tables(o); }; });

  auto* coeff = app.add_subcommand("coeff", "a(T,S) (--kind a) or b(S,T) (--kind b)");
  coeff->add_option("--kind", o.kind, "a|b");
  coeff->add_option("--with", o.other, "Second table (S for a, T for b)");
  coeff->callback([&] { action = [&] { return run_coeff(o); }; });

  auto* delta = app.add_subcommand("delta", "Expansion of Delta_T");
  delta->callback([&] { action = [&] { return run_expansion(o, true); }; });
  auto* nabla = app.add_subcommand("nabla", "Expansion of Nabla_S");
  nabla->callback([&] { action = [&] { return run_expansion(o, false); }; });

  auto* tensor = app.add_subcommand("tensor", "Dense brute-force expansion, letters <= n");
  tensor->add_option("--mode", o.mode, "sym|alt");
  tensor->add_option("--n", o.n, "Ambient dimension");
  tensor->callback([&] { action = [&] { return run_tensor(o); }; });

  auto* kronc = app.add_subcommand("kron", "Kronecker coefficient g(weight)");
  kronc->add_option("--method", o.kron_method, "char|rank");
  kronc->callback([&] { action = [&] { return run_kron(o); }; });

  auto* rank = app.add_subcommand("rank", "Rank of the a- or b-coefficient matrix");
  rank->add_option("--kind", o.kind, "a|b");
  rank->add_flag("--dump", o.dump, "Print the matrix as well");
  rank->callback([&] { action = [&] { return run_rank(o); }; });

  auto* at = app.add_subcommand("at", "Alon-Tarsi number AT_d(k), or AT(T) with --table/--n");
  add_dk(at);
  at->add_option("--n", o.n, "Value range for a custom support");
  at->callback([&] { action = [&] { return run_at(o); }; });

  auto* latin = app.add_subcommand("latin", "Number of Latin hypercubes on [k]^d");
  add_dk(latin);
  latin->add_flag("--dump", o.dump, "List every hypercube as CSV");
  latin->callback([&] { action = [&] { return run_latin(o); }; });

  auto* eval = app.add_subcommand("eval-unit", "Delta_T at the unit tensor of size n");
  eval->add_option("--n", o.n, "Unit tensor size");
  eval->callback([&] { action = [&] { return run_eval_unit(o); }; });

  auto* verify = app.add_subcommand("verify", "Run a verification report");
  verify->require_subcommand(1);
  for (const char* what :
       {"duality", "relations", "kernel", "isomorphism", "omega", "hyperdet", "evenprops"}) {
    auto* v = verify->add_subcommand(what);
    add_dk(v);
    v->add_option("--n", o.n, "Power (omega/hyperdet; default k^(d-1))");
    v->add_option("--c", o.c, "Sub-dimension (evenprops)");
    v->add_option("--min-m", o.min_m, "Smallest m of the sweep");
    v->add_option("--max-m", o.max_m, "Largest m of the sweep");
    v->add_option("--sample", o.sample, "Random weight tuples per m (0 = all)");
    v->add_option("--seed", o.seed, "Seed for --sample");
    v->add_option("--side", o.side, "sym|alt|both (kernel)");
    const std::string name = what;
    v->callback([&, name] { action = [&, name] { return run_verify(name, o); }; });
  }

  auto* cayley = app.add_subcommand("cayley", "Powers of the Cayley form or hyperdeterminant");
  cayley->require_subcommand(1);
  for (const char* which : {"omega", "delta"}) {
    auto* c = cayley->add_subcommand(which);
    add_dk(c);
    c->add_option("--power", o.power, "Exponent n");
    const std::string name = which;
    c->callback([&, name] { action = [&, name] { return run_cayley(name, o); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  thread_count() = o.threads;
  try {
    const Result r = action();
    emit(r, o);
    return r.exit;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}

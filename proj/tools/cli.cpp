#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include <CLI11.hpp>

#include "hyperfact/arith.hpp"
#include "hyperfact/bounds.hpp"
#include "hyperfact/families.hpp"
#include "hyperfact/lattice.hpp"
#include "hyperfact/verify.hpp"

namespace hyperfact::cli {

namespace {

constexpr const char* kSynopsisBound = "usage: hyperfact bound --theorem {2|3} N";
constexpr const char* kSynopsisTriples = "usage: hyperfact triples N [--same-side] [--all]";
constexpr const char* kSynopsisFamily = "usage: hyperfact family {thm1|poly|note|pell|remark} K";
constexpr const char* kSynopsisVerify =
    "usage: hyperfact verify --theorem {0|0.5|1|2|3} --from LO --to HI [--jobs J] [--out FILE] "
    "[--format json|csv|human] [--no-timing] [--min-m M] [--chunk-size S] [--no-informational]";
constexpr const char* kSynopsisOracle = "usage: hyperfact oracle {m3|m3s} N";
constexpr const char* kSynopsisAll =
    "usage: hyperfact {bound|triples|family|verify|oracle} ... (see --help)";

struct UsageError : std::runtime_error {
  UsageError(const std::string& msg, const char* synopsis) : std::runtime_error(msg), synopsis(synopsis) {}
  const char* synopsis;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("HYPERFACT_JOBS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void require_n(u64 N, u64 min, const char* synopsis) {
  if (N < min || N > kMaxN) {
    throw UsageError("N must be in [" + std::to_string(min) + ", 2^63)", synopsis);
  }
}

std::string points_text(std::span<const LatticePoint> pts) {
  std::string s;
  for (const auto& p : pts) {
    if (!s.empty()) s += ", ";
    s += "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
  }
  return s;
}

std::string triple_params(const CloseTriple& t) {
  return "A=" + std::to_string(t.A) + " B=" + std::to_string(t.B) + " a1=" + std::to_string(t.a1) +
         " b1=" + std::to_string(t.b1) + " a2=" + std::to_string(t.a2) + " b2=" + std::to_string(t.b2);
}

int cmd_bound(const std::string& theorem, u64 N, bool explain, std::ostream& out) {
  ExactBound b;
  if (theorem == "2") {
    require_n(N, 2, kSynopsisBound);
    b = thm2_bound(N);
  } else if (theorem == "3") {
    require_n(N, 1, kSynopsisBound);
    b = thm3_bound(N);
  } else {
    throw UsageError("--theorem must be 2 or 3", kSynopsisBound);
  }
  out << b.value << "\n";
  if (explain) out << b.certificate << "\n";
  return kOk;
}

int cmd_triples(u64 N, bool same_side, bool all, std::ostream& out) {
  require_n(N, 1, kSynopsisTriples);
  const auto divs = divisors(N);
  if (all) {
    const auto triples = close_triples(N);
    if (triples.empty()) {
      out << "no triple: N has fewer than 3 divisors\n";
      return kOk;
    }
    for (const auto& t : triples) {
      if (same_side && !(u128{t.A} * t.A > N)) continue;
      out << format_factorizations(N, t.points()) << "  " << triple_params(t) << "\n";
    }
    return kOk;
  }
  if (same_side) {
    const auto pts = closest_same_side_points(N, divs);
    if (!pts) {
      out << "no triple: N has fewer than 3 divisors above sqrt(N)\n";
      return kOk;
    }
    const auto stat = *min_max_diff_3_same_side(N, divs);
    out << format_factorizations(N, *pts) << "\n";
    out << "max|x-y| = " << stat << "  (theorem 3 bound: " << thm3_bound(N).value << ")\n";
    return kOk;
  }
  const auto pts = closest_three_points(N, divs);
  if (!pts) {
    out << "no triple: N has fewer than 3 divisors\n";
    return kOk;
  }
  out << format_factorizations(N, *pts) << "\n";
  out << "max|x-y| = " << *min_max_diff_3(N, divs);
  if (N >= 2) out << "  (theorem 2 bound: " << thm2_bound(N).value << ")";
  out << "\n";
  return kOk;
}

void print_family(const FamilyInfo& info, const PointTriple& p, const CloseTriple* t, std::ostream& out) {
  out << "family " << info.family << " parameter=" << info.parameter << " (growth " << info.growth << ")\n";
  out << "N=" << p.N << "\n";
  out << "points " << points_text(p.points) << "\n";
  out << "max|x-y| = " << p.max_diff << "\n";
  if (t) out << triple_params(*t) << "\n";
  out << format_factorizations(p.N, p.points) << "\n";
}

int cmd_family(const std::string& kind, u64 K, std::ostream& out) {
  try {
    if (kind == "thm1" || kind == "pell") {
      const FamilyTriple f = kind == "thm1" ? thm1_family(K) : pell_family(K);
      print_family(f.info, to_point_triple(f.triple), &f.triple, out);
    } else if (kind == "poly" || kind == "note" || kind == "remark") {
      const FamilyPoints f = kind == "poly"   ? thm2_poly_family(K)
                             : kind == "note" ? note_family(K)
                                              : thm3_remark_family(K);
      print_family(f.info, f.points, nullptr, out);
    } else {
      throw UsageError("unknown family '" + kind + "'", kSynopsisFamily);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what(), kSynopsisFamily);
  }
  return kOk;
}

// The withdrawn bound's sweep succeeds when every violation is the known
// N = 72 counterexample.
bool only_known_counterexample(const SweepReport& r) {
  for (const auto& v : r.violations) {
    const auto* t = std::get_if<CloseTriple>(&v.witness);
    if (!t || *t != known_withdrawn_counterexample()) return false;
  }
  return true;
}

void write_atomically(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << data;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename to " + path + ": " + ec.message());
  }
}

struct VerifyArgs {
  std::string theorem;
  u64 from = 0;
  u64 to = 0;
  std::string format;
  bool no_timing = false;
  bool no_informational = false;
  u64 min_m = 5;
  u64 chunk_size = u64{1} << 15;
};

int cmd_verify(const VerifyArgs& a, CliConfig& cfg, std::ostream& out) {
  Theorem th;
  try {
    th = parse_theorem(a.theorem);
    cfg.format = a.format.empty() ? (cfg.out ? ReportFormat::kJson : ReportFormat::kHuman)
                                  : parse_report_format(a.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what(), kSynopsisVerify);
  }
  SweepOptions opts;
  opts.jobs = cfg.jobs;
  opts.chunk_size = a.chunk_size;
  opts.min_m = a.min_m;
  opts.below_threshold_informational = !a.no_informational;

  SweepReport rep;
  try {
    rep = verify(th, a.from, a.to, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what(), kSynopsisVerify);
  }
  const std::string text = emit_report(rep, *cfg.format, EmitOptions{!a.no_timing});
  if (cfg.out) {
    write_atomically(*cfg.out, text);
    out << "wrote " << *cfg.out << ": " << rep.violations.size() << " violation(s), "
        << rep.equality_cases.size() << " equality case(s)\n";
  } else {
    out << text;
  }
  if (th == Theorem::kWithdrawn) return only_known_counterexample(rep) ? kOk : kViolations;
  return rep.violations.empty() ? kOk : kViolations;
}

// Exhaustive minimum over all 3-subsets of lattice points.
std::optional<u64> brute_force(u64 N, bool same_side) {
  std::vector<LatticePoint> pts;
  for (const auto& p : lattice_points(N)) {
    if (!same_side || u128{p.x} * p.x > N) pts.push_back(p);
  }
  std::optional<u64> best;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const u64 m = std::max({l1_distance(pts[i]), l1_distance(pts[j]), l1_distance(pts[k])});
        if (!best || m < *best) best = m;
      }
  return best;
}

int cmd_oracle(const std::string& stat, u64 N, std::ostream& out) {
  require_n(N, 1, kSynopsisOracle);
  bool same_side;
  if (stat == "m3") {
    same_side = false;
  } else if (stat == "m3s") {
    same_side = true;
  } else {
    throw UsageError("unknown statistic '" + stat + "'", kSynopsisOracle);
  }
  const auto fast = same_side ? min_max_diff_3_same_side(N) : min_max_diff_3(N);
  const auto slow = brute_force(N, same_side);
  auto show = [](const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string("none"); };
  const bool agree = fast == slow;
  out << stat << "(" << N << ") = " << show(fast) << "  brute force = " << show(slow) << "  "
      << (agree ? "agree" : "DISAGREE") << "\n";
  return agree ? kOk : kViolations;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three close factorizations: bounds, families and exhaustive sweeps", "hyperfact"};
  app.require_subcommand(1);

  CliConfig cfg;
  cfg.jobs = default_jobs();

  std::string bound_theorem;
  u64 bound_n = 0;
  bool bound_explain = false;
  auto* bound = app.add_subcommand("bound", "Exact floor bound for N");
  bound->add_option("--theorem", bound_theorem, "2 (any three points) or 3 (same side)")->required();
  bound->add_option("N", bound_n, "Integer N")->required();
  bound->add_flag("--explain", bound_explain, "Print the integer comparisons that decided the floor");

  u64 triples_n = 0;
  bool same_side = false, all = false;
  auto* triples = app.add_subcommand("triples", "Closest three lattice points on xy = N");
  triples->add_option("N", triples_n, "Integer N")->required();
  triples->add_flag("--same-side", same_side, "Restrict to points with x > sqrt(N)");
  triples->add_flag("--all", all, "List every close-factorization triple");

  std::string family_kind;
  u64 family_k = 0;
  auto* family = app.add_subcommand("family", "Generate a member of an explicit family");
  family->add_option("kind", family_kind, "thm1|poly|note|pell|remark")->required();
  family->add_option("K", family_k, "Family parameter (n for pell)")->required();

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Sweep a range of N and check a bound");
  ver->add_option("--theorem", va.theorem, "0, 0.5, 1, 2 or 3")->required();
  ver->add_option("--from", va.from, "First N")->required();
  ver->add_option("--to", va.to, "Last N")->required();
  ver->add_option("--jobs", cfg.jobs, "Worker threads (default $HYPERFACT_JOBS or 1)")
      ->check(CLI::Range(1u, 1024u));
  ver->add_option("--out", cfg.out, "Write the report to FILE (atomically)");
  ver->add_option("--format", va.format, "json|csv|human");
  ver->add_flag("--no-timing", va.no_timing, "Omit timing fields");
  ver->add_option("--min-m", va.min_m, "Smallest max(a2, b2) for theorem 0.5")->check(CLI::Range(u64{4}, kMaxN));
  ver->add_option("--chunk-size", va.chunk_size, "N per sweep chunk")->check(CLI::Range(u64{1}, u64{1} << 26));
  ver->add_flag("--no-informational", va.no_informational, "Theorem 3: skip N < 2^20 entirely");

  std::string oracle_stat;
  u64 oracle_n = 0;
  auto* oracle = app.add_subcommand("oracle", "Cross-check a statistic against brute force");
  oracle->add_option("statistic", oracle_stat, "m3 or m3s (same side)")->required();
  oracle->add_option("N", oracle_n, "Integer N")->required();

  std::vector<std::string> argv_store{"hyperfact"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  auto synopsis_for = [&]() -> const char* {
    if (bound->parsed()) return kSynopsisBound;
    if (triples->parsed()) return kSynopsisTriples;
    if (family->parsed()) return kSynopsisFamily;
    if (ver->parsed()) return kSynopsisVerify;
    if (oracle->parsed()) return kSynopsisOracle;
    return kSynopsisAll;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << synopsis_for() << "\n";
    return kUsage;
  }

  try {
    if (bound->parsed()) {
      cfg.subcommand = "bound";
      return cmd_bound(bound_theorem, bound_n, bound_explain, out);
    }
    if (triples->parsed()) {
      cfg.subcommand = "triples";
      return cmd_triples(triples_n, same_side, all, out);
    }
    if (family->parsed()) {
      cfg.subcommand = "family";
      return cmd_family(family_kind, family_k, out);
    }
    if (ver->parsed()) {
      cfg.subcommand = "verify";
      return cmd_verify(va, cfg, out);
    }
    cfg.subcommand = "oracle";
    return cmd_oracle(oracle_stat, oracle_n, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << e.synopsis << "\n";
    return kUsage;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hyperfact::cli

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <sstream>

#include "modaut/report.hpp"

using namespace modaut;

namespace {

// exit codes: 0 success, 2 usage, 3 domain error, 4 strict-mode mismatch
constexpr int kUsage = 2, kDomain = 3, kStrict = 4;

struct Common {
  bool json = false;
  bool no_meta = false;
  unsigned threads = 0;
  std::string catalogue_path;
};

void emit(const Json& doc, bool json, const std::string& text) {
  if (json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int fail_domain(const std::string& msg, bool json) {
  if (json) {
    Json doc;
    doc["error"] = msg;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
  return kDomain;
}

std::string valid_levels() {
  std::string s;
  for (int n : hyperelliptic_levels()) s += (s.empty() ? "" : ", ") + std::to_string(n);
  return s;
}

int cmd_aut(int N, uint64_t p, unsigned k2, const Common& co) {
  bool ok = false;
  for (int n : hyperelliptic_levels()) ok |= n == N;
  if (!ok)
    return fail_domain("X_0(" + std::to_string(N) +
                           ") is not hyperelliptic; valid levels: " +
                           valid_levels(),
                       co.json);
  if (!is_prime(BigInt((unsigned long)p)))
    return fail_domain(std::to_string(p) + " is not prime", co.json);
  Json rec;
  std::string text;
  try {
    ReducedCurve c = reduce_mod(N, p);
    if (std::holds_alternative<OddCharCurve>(c)) {
      AutGroup g = full_group(std::get<OddCharCurve>(c));
      rec = odd_group_record(g);
    } else {
      Char2Group g = full_group2(std::get<Char2Curve>(c), k2);
      rec = char2_group_record(g);
    }
  } catch (const std::exception& e) {
    return fail_domain(e.what(), co.json);
  }
  std::ostringstream os;
  os << "Aut X_0(" << N << ") mod " << p << ": " << rec["label"].get<std::string>()
     << " (order " << rec["order"].get<size_t>() << "), reduced group "
     << rec["reduced_label"].get<std::string>() << "\n";
  for (auto& g : rec["generators"])
    os << "  gen: matrix [" << g["matrix"][0].get<std::string>() << "; "
       << g["matrix"][1].get<std::string>() << "; "
       << g["matrix"][2].get<std::string>() << "; "
       << g["matrix"][3].get<std::string>() << "]  multiplier/h "
       << g["multiplier_or_h"].get<std::string>() << "  over F_"
       << g["field"].get<std::string>() << "\n";
  Json params = {{"n", N}, {"p", p}, {"char2_ext_bound", k2}};
  emit(make_document("aut", params, rec, co.no_meta), co.json, os.str());
  return 0;
}

int cmd_sieve(int N, uint64_t bound, const std::vector<std::string>& methods,
              const Common& co) {
  bool ok = false;
  for (int n : hyperelliptic_levels()) ok |= n == N;
  if (!ok)
    return fail_domain("X_0(" + std::to_string(N) +
                           ") is not hyperelliptic; valid levels: " +
                           valid_levels(),
                       co.json);
  Json results;
  std::string text;
  std::vector<CandidateSet> cand;
  try {
    for (auto& m : methods) {
      if (m == "scan") {
        ScanReport r = full_scan(N, bound, co.threads);
        results["scan"] = scan_record(r);
        text += render_scan_text(r);
      } else if (m == "invariant") {
        cand.push_back(invariant_candidates(N));
      } else if (m == "ea") {
        cand.push_back(ea_candidates(N));
      } else if (m == "elimination") {
        cand.push_back(elimination_candidates(N));
      }
    }
  } catch (const std::exception& e) {
    return fail_domain(e.what(), co.json);
  }
  if (!cand.empty()) {
    Json arr = Json::array();
    for (auto& c : cand) arr.push_back(candidate_record(c));
    results["candidates"] = std::move(arr);
    text += render_candidates_text(cand);
  }
  if (methods.size() > 1 && results.contains("scan") && !cand.empty()) {
    // cross-check: scan exceptional odd primes must sit inside each
    // candidate set produced by an applicable method
    Json cross = Json::array();
    int g = catalogue(N).genus;
    for (auto& c : cand) {
      Json one;
      one["method"] = c.method;
      std::vector<uint64_t> missing;
      for (auto& e : results["scan"]["exceptional"]) {
        uint64_t p = e["p"].get<uint64_t>();
        if (p == 2) continue;
        // the wild-translation method only ever targets p | (2g+2)(2g+1)
        if (c.method == "elementary-abelian" &&
            (2 * g + 2) % p != 0 && (2 * g + 1) % p != 0)
          continue;
        if (std::find(c.primes.begin(), c.primes.end(), p) == c.primes.end())
          missing.push_back(p);
      }
      one["scan_exceptional_covered"] = missing.empty();
      one["missing"] = missing;
      cross.push_back(std::move(one));
      text += "cross-check " + c.method +
              (missing.empty() ? ": scan exceptional primes covered\n"
                               : ": MISSING scan exceptional primes\n");
    }
    results["cross_check"] = std::move(cross);
  }
  Json params = {{"n", N}, {"bound", bound}, {"methods", methods}};
  emit(make_document("sieve", params, results, co.no_meta), co.json, text);
  return 0;
}

int cmd_table1(uint64_t bound, bool strict, const Common& co) {
  Table1Result r;
  try {
    r = run_table1(bound, co.threads, default_expected_path());
  } catch (const std::exception& e) {
    return fail_domain(e.what(), co.json);
  }
  Json params = {{"bound", bound}, {"strict", strict}};
  emit(make_document("table1", params, table1_record(r), co.no_meta), co.json,
       render_table1_text(r));
  if (strict && !r.all_nonflagged_match) return kStrict;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"automorphism groups of hyperelliptic modular curves in positive characteristic"};
  app.require_subcommand(1);

  Common co;
  int N = 0;
  uint64_t p = 0, bound = 60000;
  unsigned k2 = 8;
  bool strict = false;
  std::string methods_csv = "scan";

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", co.json, "machine-readable output");
    c->add_flag("--no-meta", co.no_meta, "omit timestamp/version metadata");
    c->add_option("--threads", co.threads, "worker threads (0 = hardware)");
    c->add_option("--catalogue", co.catalogue_path, "catalogue file override");
  };

  CLI::App* aut = app.add_subcommand("aut", "automorphism group of one fibre");
  aut->add_option("--n", N, "level N")->required();
  aut->add_option("--p", p, "prime p")->required();
  aut->add_option("--char2-ext-bound", k2, "extension cap for p = 2");
  add_common(aut);

  CLI::App* sieve = app.add_subcommand("sieve", "exceptional-prime search");
  sieve->add_option("--n", N, "level N")->required();
  sieve->add_option("--bound", bound, "scan bound");
  sieve->add_option("--methods", methods_csv,
                    "csv of scan,invariant,ea,elimination");
  add_common(sieve);

  CLI::App* table1 = app.add_subcommand("table1", "full results table");
  table1->add_option("--bound", bound, "scan bound");
  table1->add_flag("--strict", strict, "exit 4 unless non-disputed cells match");
  add_common(table1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (!co.catalogue_path.empty()) set_catalogue_path(co.catalogue_path);

  if (app.got_subcommand(aut)) return cmd_aut(N, p, k2, co);
  if (app.got_subcommand(sieve)) {
    std::vector<std::string> methods;
    std::string cur;
    std::stringstream ss(methods_csv);
    while (std::getline(ss, cur, ',')) {
      if (cur != "scan" && cur != "invariant" && cur != "ea" &&
          cur != "elimination") {
        std::cerr << "error: unknown method '" << cur
                  << "' (valid: scan, invariant, ea, elimination)\n";
        return kUsage;
      }
      methods.push_back(cur);
    }
    if (methods.empty()) {
      std::cerr << "error: --methods must name at least one method\n";
      return kUsage;
    }
    return cmd_sieve(N, bound, methods, co);
  }
  return cmd_table1(bound, strict, co);
}

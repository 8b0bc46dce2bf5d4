#include "modaut/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "modaut/groups.hpp"

namespace modaut {

std::string render_field(const ExtField* F) {
  return std::to_string(F->p()) + "^" + std::to_string(F->k);
}

std::string render_elem(const FFElem& e) {
  std::string out;
  for (size_t i = 0; i < e.c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e.c[i]);
  }
  return out;
}

std::string render_fqvec(const FqVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += render_elem(v[i]);
  }
  return out;
}

std::vector<int> greedy_generators(const CayleyTable& t) {
  std::vector<int> gens;
  std::vector<int> cl = closure(t, {});
  while (cl.size() < t.size()) {
    int next = -1;
    size_t at = 0;
    for (int x = 0; x < (int)t.size(); ++x) {
      while (at < cl.size() && cl[at] < x) ++at;
      if (at == cl.size() || cl[at] != x) {
        next = x;
        break;
      }
    }
    gens.push_back(next);
    cl = closure(t, gens);
  }
  return gens;
}

std::string reduced_label(const CayleyTable& t, int j_index) {
  if (j_index < 0) return identify(t);
  int n = (int)t.size();
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) rep[i] = std::min(i, t[j_index][i]);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i)
    if (rep[i] == i) reps.push_back(i);
  std::vector<int> idx(n, -1);
  for (int a = 0; a < (int)reps.size(); ++a) idx[reps[a]] = a;
  CayleyTable q(reps.size(), std::vector<int>(reps.size()));
  for (size_t a = 0; a < reps.size(); ++a)
    for (size_t b = 0; b < reps.size(); ++b)
      q[a][b] = idx[rep[t[reps[a]][reps[b]]]];
  return identify(q);
}

Json odd_group_record(const AutGroup& g) {
  Json rec;
  rec["order"] = g.elems.size();
  rec["label"] = identify(g.table);
  rec["reduced_label"] = reduced_label(g.table, g.j_index);
  Json gens = Json::array();
  for (int i : greedy_generators(g.table)) {
    const LiftedAut& s = g.elems[i];
    Json one;
    one["matrix"] = {render_elem(s.M.a), render_elem(s.M.b),
                     render_elem(s.M.c), render_elem(s.M.d)};
    one["multiplier_or_h"] = render_elem(s.e);
    one["field"] = render_field(g.field.get());
    gens.push_back(std::move(one));
  }
  rec["generators"] = std::move(gens);
  return rec;
}

Json char2_group_record(const Char2Group& g) {
  Json rec;
  rec["order"] = g.elems.size();
  rec["label"] = identify(g.table);
  rec["reduced_label"] = reduced_label(g.table, g.j_index);
  Json gens = Json::array();
  for (int i : greedy_generators(g.table)) {
    const Char2Aut& s = g.elems[i];
    Json one;
    one["matrix"] = {render_elem(s.M[0]), render_elem(s.M[1]),
                     render_elem(s.M[2]), render_elem(s.M[3])};
    one["multiplier_or_h"] = render_fqvec(s.h);
    one["field"] = render_field(g.field.get());
    gens.push_back(std::move(one));
  }
  rec["generators"] = std::move(gens);
  rec["raw_count"] = g.raw_count;
  rec["truncated"] = g.truncated;
  return rec;
}

Json scan_record(const ScanReport& r) {
  Json rec;
  rec["N"] = r.N;
  rec["bound"] = r.bound;
  rec["generic"] = {{"order", r.generic_order}, {"label", r.generic_label}};
  Json exc = Json::array();
  for (auto& e : r.exceptional)
    exc.push_back({{"p", e.p}, {"order", e.order}, {"label", e.label}});
  rec["exceptional"] = std::move(exc);
  rec["flagged"] = r.flagged;
  if (r.char2_included)
    rec["char2"] = {{"order", r.char2_order}, {"label", r.char2_label}};
  rec["notes"] = r.notes;
  return rec;
}

Json candidate_record(const CandidateSet& c) {
  Json rec;
  rec["method"] = c.method;
  rec["primes"] = c.primes;
  rec["partial"] = c.partial;
  rec["notes"] = c.notes;
  return rec;
}

Json make_document(const std::string& command, Json params, Json results,
                   bool no_meta) {
  Json doc;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["results"] = std::move(results);
  if (!no_meta) {
    auto now = std::chrono::system_clock::now();
    auto tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    doc["meta"] = {{"tool", "modaut"}, {"version", "1.0.0"}, {"generated", buf}};
  }
  return doc;
}

// ------------------------------------------------------------------- table1

std::string default_expected_path() {
  return std::string(MODAUT_DATA_DIR) + "/expected_table1.json";
}

namespace {

std::string exc_cell_string(const std::vector<std::pair<uint64_t, std::string>>& v) {
  if (v.empty()) return "---";
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i].first) + " -> " + v[i].second;
  }
  return out;
}

}  // namespace

Table1Result run_table1(uint64_t bound, unsigned threads,
                        const std::string& expected_path) {
  Table1Result out;
  out.bound = bound;
  for (int N : hyperelliptic_levels()) {
    out.rows.push_back(full_scan(N, bound, threads));
    out.genus.push_back(catalogue(N).genus);
  }

  std::ifstream in(expected_path);
  if (!in)
    throw std::runtime_error("expected-results file not found: " + expected_path);
  nlohmann::json exp;
  in >> exp;

  out.all_nonflagged_match = true;
  for (size_t i = 0; i < out.rows.size(); ++i) {
    const ScanReport& r = out.rows[i];
    const nlohmann::json* row = nullptr;
    for (auto& e : exp.at("rows"))
      if (e.at("N").get<int>() == r.N) row = &e;
    if (!row) throw std::runtime_error("expected rows missing N=" +
                                       std::to_string(r.N));
    bool disputed = row->value("disputed", false);
    std::string dnote = row->value("dispute_note", std::string());

    CellCheck cg{r.N, "genus", false, false, "", "", ""};
    cg.expected = std::to_string(row->at("genus").get<int>());
    cg.actual = std::to_string(out.genus[i]);
    cg.match = cg.expected == cg.actual;
    out.checks.push_back(cg);

    CellCheck cl{r.N, "generic", false, false, "", "", ""};
    cl.expected = row->at("generic").get<std::string>();
    cl.actual = r.generic_label;
    cl.match = cl.expected == cl.actual;
    out.checks.push_back(cl);

    std::vector<std::pair<uint64_t, std::string>> want, got;
    for (auto& e : row->at("exceptional"))
      want.emplace_back(e.at("p").get<uint64_t>(),
                        e.at("label").get<std::string>());
    for (auto& e : r.exceptional) got.emplace_back(e.p, e.label);
    CellCheck ce{r.N, "exceptional", false, disputed, "", "", dnote};
    ce.expected = exc_cell_string(want);
    ce.actual = exc_cell_string(got);
    ce.match = want == got;
    out.checks.push_back(ce);
  }
  for (auto& c : out.checks)
    if (!c.disputed && !c.match) out.all_nonflagged_match = false;
  return out;
}

Json table1_record(const Table1Result& r) {
  Json rec;
  rec["bound"] = r.bound;
  Json rows = Json::array();
  for (size_t i = 0; i < r.rows.size(); ++i) {
    Json row = scan_record(r.rows[i]);
    row["genus"] = r.genus[i];
    rows.push_back(std::move(row));
  }
  rec["rows"] = std::move(rows);
  Json checks = Json::array();
  for (auto& c : r.checks) {
    Json one;
    one["N"] = c.N;
    one["cell"] = c.cell;
    one["match"] = c.match;
    one["disputed"] = c.disputed;
    one["expected"] = c.expected;
    one["actual"] = c.actual;
    if (!c.note.empty()) one["note"] = c.note;
    checks.push_back(std::move(one));
  }
  rec["checks"] = std::move(checks);
  rec["all_nonflagged_match"] = r.all_nonflagged_match;
  return rec;
}

// ------------------------------------------------------------ text rendering

std::string render_scan_text(const ScanReport& r) {
  std::ostringstream os;
  os << "X_0(" << r.N << "), odd primes up to " << r.bound << "\n";
  os << "  generic automorphism group: " << r.generic_label << " (order "
     << r.generic_order << ")\n";
  if (r.char2_included)
    os << "  characteristic 2: " << r.char2_label << " (order "
       << r.char2_order << ")\n";
  if (r.exceptional.empty()) {
    os << "  exceptional primes: ---\n";
  } else {
    os << "  exceptional primes:\n";
    for (auto& e : r.exceptional)
      os << "    p = " << e.p << ": " << e.label << " (order " << e.order
         << ")\n";
  }
  if (!r.flagged.empty()) {
    os << "  flagged (singular model, not scanned):";
    for (auto p : r.flagged) os << " " << p;
    os << "\n";
  }
  for (auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render_candidates_text(const std::vector<CandidateSet>& sets) {
  std::ostringstream os;
  for (auto& c : sets) {
    os << "method " << c.method << (c.partial ? " (partial)" : "")
       << " candidates:";
    if (c.primes.empty()) os << " (none)";
    for (auto p : c.primes) os << " " << p;
    os << "\n";
    for (auto& n : c.notes) os << "  note: " << n << "\n";
  }
  return os.str();
}

std::string render_table1_text(const Table1Result& r) {
  std::ostringstream os;
  os << "Automorphism groups of X_0(N) in positive characteristic (bound "
     << r.bound << ")\n\n";
  for (size_t i = 0; i < r.rows.size(); ++i) {
    const ScanReport& row = r.rows[i];
    std::vector<std::pair<uint64_t, std::string>> got;
    for (auto& e : row.exceptional) got.emplace_back(e.p, e.label);
    os << "  N=" << row.N << "  genus " << r.genus[i] << "  generic "
       << row.generic_label << "  exceptional: " << exc_cell_string(got)
       << "\n";
  }
  os << "\nagreement with the bundled reference table:\n";
  for (auto& c : r.checks) {
    if (c.match && !c.disputed) continue;
    os << "  N=" << c.N << " " << c.cell << ": "
       << (c.match ? "match" : "MISMATCH");
    if (c.disputed) os << " [disputed cell]";
    os << "\n    expected: " << c.expected << "\n    computed: " << c.actual
       << "\n";
    if (!c.note.empty()) os << "    note: " << c.note << "\n";
  }
  os << (r.all_nonflagged_match ? "all non-disputed cells match\n"
                                : "some non-disputed cells MISMATCH\n");
  return os.str();
}

}  // namespace modaut

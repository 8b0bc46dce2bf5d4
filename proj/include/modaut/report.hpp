#pragma once

#include <json.hpp>

#include "modaut/aut_char2.hpp"
#include "modaut/aut_odd.hpp"
#include "modaut/groups.hpp"
#include "modaut/sieve.hpp"

namespace modaut {

using Json = nlohmann::ordered_json;

// ---- rendering primitives (schema: field "p^k", elements as comma-joined
// residue coefficients, low to high) ----
std::string render_field(const ExtField* F);
std::string render_elem(const FFElem& e);
std::string render_fqvec(const FqVec& v);  // coefficients joined by ';'

// Greedy generating set: repeatedly adjoin the least element outside the
// closure of what we have. Deterministic; identity yields the empty set.
std::vector<int> greedy_generators(const CayleyTable& t);

// Quotient of the table by the central order-2 element j (label of G / <j>).
std::string reduced_label(const CayleyTable& t, int j_index);

// ---- structured records ----
Json odd_group_record(const AutGroup& g);
Json char2_group_record(const Char2Group& g);
Json scan_record(const ScanReport& r);
Json candidate_record(const CandidateSet& c);

// {command, params, results} plus a meta block unless no_meta.
Json make_document(const std::string& command, Json params, Json results,
                   bool no_meta);

// ---- table1 ----
struct CellCheck {
  int N = 0;
  std::string cell;  // "genus" | "generic" | "exceptional"
  bool match = false;
  bool disputed = false;  // flagged in the expected file; never fails strict
  std::string expected, actual, note;
};

struct Table1Result {
  uint64_t bound = 0;
  std::vector<ScanReport> rows;  // ascending N
  std::vector<int> genus;        // parallel to rows
  std::vector<CellCheck> checks;
  bool all_nonflagged_match = false;
};

// Runs the full pipeline over every catalogue level and compares with the
// bundled expected-results file.
Table1Result run_table1(uint64_t bound, unsigned threads,
                        const std::string& expected_path);

std::string default_expected_path();

Json table1_record(const Table1Result& r);

// ---- human-readable rendering ----
std::string render_scan_text(const ScanReport& r);
std::string render_candidates_text(const std::vector<CandidateSet>& sets);
std::string render_table1_text(const Table1Result& r);

}  // namespace modaut

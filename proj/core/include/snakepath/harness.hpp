#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "snakepath/algebra.hpp"
#include "snakepath/errors.hpp"

namespace snakepath {

// Verification registry: each identity pairs a brute-force enumeration (the
// lhs) with an independently computed closed form (the rhs) and reports
// whether they agree, exactly, term by term.

enum class Verdict { match, mismatch, matchesAlternate };
std::string verdict_name(Verdict v);

struct IdentityCheck {
  std::string id;
  int n = 0;
  Poly lhs;
  Poly rhs;
  Verdict verdict = Verdict::mismatch;
  std::string note;
  std::int64_t millis = 0;

  nlohmann::ordered_json to_json() const;
};

// Registered identity ids, in report order.
std::vector<std::string> registered_identities();

// Largest size the identity is checked at by default.
int identity_max_n(const std::string& id);

// Runs one identity at one size. Throws UnknownIdentity for an unregistered
// id, BoundExceeded past the identity's bound.
IdentityCheck verify(const std::string& id, int n);

// Runs every registered identity at every feasible size up to nmax,
// in registry order; sizes run in parallel.
std::vector<IdentityCheck> verify_all(int nmax);

// The open p,q-refinement: reported with both parity readings in the note,
// never asserted.
IdentityCheck conjecture_pq(int n);

// Side-by-side exploratory tables: the signed type B minus starred sum with
// t marking negative entries, and the cs enumerator of the D-type snakes.
// Index k holds the row for size k+1.
struct DiscussionTables {
  std::vector<Poly> table_a;
  std::vector<Poly> table_b;
  std::string note;  // records the reading adopted for the ambiguous row

  nlohmann::ordered_json to_json() const;
};
DiscussionTables discussion_tables(int nmax);

// JSON array of checks, in input order.
nlohmann::ordered_json report_json(const std::vector<IdentityCheck>& checks);

}  // namespace snakepath

#include "micut/sat.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "micut/errors.hpp"

namespace micut {

namespace {

void check_literal(int lit, int n, int line_no) {
  if (lit == 0) throw ParseError(line_no, "literal 0 is not allowed");
  int var = lit < 0 ? -lit : lit;
  if (var > n)
    throw ParseError(line_no, "literal " + std::to_string(lit) + " references variable out of 1.." +
                                  std::to_string(n));
}

std::string literal_name(int lit) {
  return lit < 0 ? "~x" + std::to_string(-lit) : "x" + std::to_string(lit);
}

// occ[2k] = positive occurrences of variable k+1... flattened: index for +v is
// 2(v-1), for -v is 2(v-1)+1.
std::size_t occ_index(int lit) {
  int var = lit < 0 ? -lit : lit;
  return 2 * static_cast<std::size_t>(var - 1) + (lit < 0 ? 1 : 0);
}

std::vector<int> occurrence_table(const Max2SatInstance& i) {
  std::vector<int> occ(2 * static_cast<std::size_t>(i.variable_count), 0);
  for (const auto& c : i.clauses) {
    ++occ[occ_index(c.first)];
    ++occ[occ_index(c.second)];
  }
  return occ;
}

void check_occurrence_bound(const Max2SatInstance& i, int line_no) {
  auto occ = occurrence_table(i);
  for (int v = 1; v <= i.variable_count; ++v) {
    for (int lit : {v, -v}) {
      int count = occ[occ_index(lit)];
      if (count > 3)
        throw ParseError(line_no, "literal " + literal_name(lit) + " occurs " +
                                      std::to_string(count) + " > 3 times");
    }
  }
}

}  // namespace

Max2SatInstance Max2SatInstance::make(int variable_count, std::vector<Clause> clauses) {
  if (variable_count < 0) throw std::invalid_argument("negative variable count");
  Max2SatInstance inst{variable_count, std::move(clauses)};
  for (const auto& c : inst.clauses) {
    for (int lit : {c.first, c.second}) {
      if (lit == 0 || std::abs(lit) > variable_count)
        throw std::invalid_argument("literal out of range: " + std::to_string(lit));
    }
  }
  try {
    check_occurrence_bound(inst, 0);
  } catch (const ParseError& e) {
    throw std::invalid_argument(e.what());
  }
  return inst;
}

Max2SatInstance parse_instance(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, declared_m = -1;
  std::vector<Clause> clauses;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      if (toks.size() != 4 || toks[1] != "m2sat")
        throw ParseError(line_no, "malformed header, expected 'p m2sat <n> <m>'");
      try {
        n = std::stoll(toks[2]);
        declared_m = std::stoll(toks[3]);
      } catch (const std::exception&) {
        throw ParseError(line_no, "non-numeric header counts");
      }
      if (n < 1) throw ParseError(line_no, "variable count must be positive");
      if (declared_m < 0) throw ParseError(line_no, "clause count must be nonnegative");
      continue;
    }
    // clause line
    if (n < 0) throw ParseError(line_no, "clause before 'p m2sat' header");
    if (static_cast<long long>(clauses.size()) >= declared_m)
      throw ParseError(line_no, "more clause lines than declared");
    if (toks.size() != 2)
      throw ParseError(line_no, "each clause has exactly two literals, got " +
                                    std::to_string(toks.size()));
    int lits[2];
    for (int k = 0; k < 2; ++k) {
      try {
        lits[k] = std::stoi(toks[k]);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad literal '" + toks[k] + "'");
      }
      check_literal(lits[k], static_cast<int>(n), line_no);
    }
    clauses.push_back({lits[0], lits[1]});
  }
  if (n < 0) throw ParseError(0, "missing 'p m2sat' header");
  if (static_cast<long long>(clauses.size()) < declared_m)
    throw ParseError(line_no, "declared " + std::to_string(declared_m) + " clauses, found " +
                                  std::to_string(clauses.size()));
  Max2SatInstance inst{static_cast<int>(n), std::move(clauses)};
  check_occurrence_bound(inst, 0);
  return inst;
}

Max2SatInstance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

std::string serialize_instance(const Max2SatInstance& i) {
  std::ostringstream out;
  out << "p m2sat " << i.variable_count << ' ' << i.clause_count() << '\n';
  for (const auto& c : i.clauses) out << c.first << ' ' << c.second << '\n';
  return out.str();
}

int occurrences(const Max2SatInstance& i, int literal) {
  int count = 0;
  for (const auto& c : i.clauses) {
    if (c.first == literal) ++count;
    if (c.second == literal) ++count;
  }
  return count;
}

bool has_tautological_clause(const Max2SatInstance& i) {
  return std::any_of(i.clauses.begin(), i.clauses.end(),
                     [](const Clause& c) { return c.first == -c.second; });
}

bool satisfies_residual_invariants(const Max2SatInstance& i) {
  if (has_tautological_clause(i)) return false;
  auto occ = occurrence_table(i);
  for (int v = 1; v <= i.variable_count; ++v)
    if (occ[occ_index(v)] == 0 || occ[occ_index(-v)] == 0) return false;
  return true;
}

PreprocessReport preprocess(const Max2SatInstance& input) {
  PreprocessReport report;
  std::vector<Clause> active;
  for (const auto& c : input.clauses) {
    if (c.first == -c.second) {
      ++report.removed_tautologies;
      ++report.guaranteed_true;  // true under every assignment
    } else {
      active.push_back(c);
    }
  }

  std::vector<int> state(input.variable_count + 1, -1);  // -1 free, 0/1 forced
  for (;;) {
    std::vector<int> pos(input.variable_count + 1, 0), neg(input.variable_count + 1, 0);
    for (const auto& c : active) {
      for (int lit : {c.first, c.second}) {
        if (lit > 0)
          ++pos[lit];
        else
          ++neg[-lit];
      }
    }
    int victim = 0;
    bool value = false;
    for (int v = 1; v <= input.variable_count; ++v) {
      if (state[v] != -1) continue;
      if (neg[v] == 0) {  // negation never occurs: set true
        victim = v;
        value = true;
        break;
      }
      if (pos[v] == 0) {  // positive never occurs: set false
        victim = v;
        value = false;
        break;
      }
    }
    if (victim == 0) break;
    state[victim] = value ? 1 : 0;
    report.forced[victim] = value;
    int satisfied_lit = value ? victim : -victim;
    std::vector<Clause> kept;
    for (const auto& c : active) {
      if (c.first == satisfied_lit || c.second == satisfied_lit)
        ++report.guaranteed_true;
      else
        kept.push_back(c);
    }
    active = std::move(kept);
  }

  // Renumber the surviving variables.
  std::vector<int> new_index(input.variable_count + 1, 0);
  for (int v = 1; v <= input.variable_count; ++v) {
    if (state[v] == -1) {
      report.residual_vars.push_back(v);
      new_index[v] = static_cast<int>(report.residual_vars.size());
    }
  }
  std::vector<Clause> remapped;
  remapped.reserve(active.size());
  for (const auto& c : active) {
    auto remap = [&](int lit) {
      int var = lit < 0 ? -lit : lit;
      return lit < 0 ? -new_index[var] : new_index[var];
    };
    remapped.push_back({remap(c.first), remap(c.second)});
  }
  report.residual =
      Max2SatInstance{static_cast<int>(report.residual_vars.size()), std::move(remapped)};
  check_occurrence_bound(report.residual, 0);  // forcing can only shrink occurrences
  return report;
}

Assignment extend_assignment(const PreprocessReport& report, const Assignment& residual_assignment) {
  if (static_cast<int>(residual_assignment.size()) != report.residual.variable_count)
    throw std::invalid_argument("residual assignment has wrong arity");
  int original_n = report.residual.variable_count + static_cast<int>(report.forced.size());
  Assignment full(static_cast<std::size_t>(original_n), false);
  for (const auto& [var, value] : report.forced) full[var - 1] = value;
  for (std::size_t k = 0; k < report.residual_vars.size(); ++k)
    full[report.residual_vars[k] - 1] = residual_assignment[k];
  return full;
}

int evaluate(const Max2SatInstance& i, const Assignment& a) {
  if (static_cast<int>(a.size()) != i.variable_count)
    throw std::invalid_argument("assignment arity mismatch");
  auto truth = [&](int lit) { return lit > 0 ? a[lit - 1] : !a[-lit - 1]; };
  int satisfied = 0;
  for (const auto& c : i.clauses)
    if (truth(c.first) || truth(c.second)) ++satisfied;
  return satisfied;
}

OptResult brute_force_opt(const Max2SatInstance& i, int exhaustive_limit) {
  if (i.variable_count > exhaustive_limit)
    throw LimitError("brute_force_opt: " + std::to_string(i.variable_count) +
                     " variables exceed the exhaustive limit " + std::to_string(exhaustive_limit));
  int n = i.variable_count;
  OptResult best;
  best.value = -1;
  Assignment a(static_cast<std::size_t>(n), false);
  // Counter order is lexicographic order with variable 1 as the most
  // significant bit, so the first maximum seen is the lex-smallest winner.
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    for (int v = 1; v <= n; ++v) a[v - 1] = (k >> (n - v)) & 1;
    int value = evaluate(i, a);
    if (value > best.value) {
      best.value = value;
      best.assignment = a;
    }
  }
  return best;
}

Assignment majority_heuristic(const Max2SatInstance& i) {
  if (!satisfies_residual_invariants(i))
    throw PreconditionError(
        "majority_heuristic requires a preprocessed instance (every variable in both "
        "polarities, no tautological clauses); run preprocess first");
  Assignment a(static_cast<std::size_t>(i.variable_count), false);
  for (int v = 1; v <= i.variable_count; ++v)
    a[v - 1] = occurrences(i, v) >= occurrences(i, -v);  // tie -> true
  return a;
}

}  // namespace micut

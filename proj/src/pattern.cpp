#include "lad/pattern.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "lad/error.hpp"

namespace lad {

namespace {

struct TermLiteral {
  uint32_t position;  // column position in the projected dataset
  bool negated;
};
using Term = std::vector<TermLiteral>;

std::string term_key(const Term& t) {
  std::string key;
  key.reserve(t.size() * 5);
  for (const auto& lit : t) {
    const uint32_t v = (lit.position << 1) | (lit.negated ? 1u : 0u);
    key.append(reinterpret_cast<const char*>(&v), sizeof v);
  }
  return key;
}

struct ColumnPair {
  BitColumn plain;
  BitColumn negated;
};

// Coverage of `term` intersected with `mask`, one fused pass over words.
// Returns the popcount and whether the bare coverage touches `forbidden`.
struct CoverageScan {
  size_t count_in_mask = 0;
  bool touches_forbidden = false;
};

CoverageScan scan_term(const Term& term, const std::vector<ColumnPair>& cols,
                       const BitColumn& mask, const BitColumn& forbidden) {
  CoverageScan out;
  const size_t nwords = mask.words().size();
  for (size_t w = 0; w < nwords; ++w) {
    uint64_t cov = ~uint64_t{0};
    for (const auto& lit : term) {
      const auto& col = lit.negated ? cols[lit.position].negated
                                    : cols[lit.position].plain;
      cov &= col.words()[w];
    }
    out.count_in_mask +=
        static_cast<size_t>(__builtin_popcountll(cov & mask.words()[w]));
    if (cov & forbidden.words()[w]) out.touches_forbidden = true;
  }
  return out;
}

// Row-set coverage of `term` (unmasked), as a column.
BitColumn term_coverage(const Term& term, const std::vector<ColumnPair>& cols,
                        size_t nrows) {
  BitColumn cov(nrows);
  auto words = cov.words();
  for (auto& w : words) w = ~uint64_t{0};
  // clear padding past nrows
  if (nrows % 64) {
    words[words.size() - 1] = (uint64_t{1} << (nrows % 64)) - 1;
  }
  for (const auto& lit : term) {
    const auto& col =
        lit.negated ? cols[lit.position].negated : cols[lit.position].plain;
    for (size_t w = 0; w < words.size(); ++w) words[w] &= col.words()[w];
  }
  return cov;
}

Pattern to_pattern(const Term& term, const BinaryDataset& b, Polarity polarity,
                   size_t support) {
  Pattern p;
  p.polarity = polarity;
  p.support = support;
  p.literals.reserve(term.size());
  for (const auto& lit : term)
    p.literals.push_back({b.column_ids[lit.position], lit.negated});
  return p;
}

}  // namespace

std::string GenerationTrace::key(std::span<const Literal> lits,
                                 const BinaryDataset& b) {
  std::unordered_map<size_t, uint32_t> position;
  for (size_t c = 0; c < b.column_ids.size(); ++c)
    position.emplace(b.column_ids[c], static_cast<uint32_t>(c));
  Term t;
  t.reserve(lits.size());
  for (const auto& lit : lits) {
    auto it = position.find(lit.id);
    if (it == position.end())
      throw DataError("trace key: unknown descriptor id " +
                      std::to_string(lit.id));
    t.push_back({it->second, lit.negated});
  }
  std::sort(t.begin(), t.end(), [](const TermLiteral& a, const TermLiteral& b2) {
    return a.position < b2.position;
  });
  return term_key(t);
}

std::vector<Pattern> generate_patterns(const BinaryDataset& b, Polarity polarity,
                                       const PatternConfig& cfg,
                                       GenerationTrace* trace) {
  if (b.rows() == 0) throw DataError("generate_patterns: empty dataset");
  if (cfg.min_support < 1) throw ConfigError("generate_patterns: k must be >= 1");
  if (cfg.max_degree < 1)
    throw ConfigError("generate_patterns: max degree must be >= 1");

  const size_t ncols = b.cols();
  const size_t nrows = b.rows();
  const Label target_label =
      polarity == Polarity::Positive ? Label::Normal : Label::Attack;

  std::vector<ColumnPair> cols(ncols);
  for (size_t c = 0; c < ncols; ++c) {
    cols[c].plain = b.column(c);
    cols[c].negated = BitColumn(nrows);
    auto neg = cols[c].negated.words();
    const auto plain = cols[c].plain.words();
    for (size_t w = 0; w < neg.size(); ++w) neg[w] = ~plain[w];
    if (nrows % 64)
      neg[neg.size() - 1] &= (uint64_t{1} << (nrows % 64)) - 1;
  }

  const BitColumn opposite =
      b.label_mask(target_label == Label::Normal ? Label::Attack : Label::Normal);
  BitColumn remaining = b.label_mask(target_label);

  if (trace) trace->candidate_sets.assign(cfg.max_degree + 1, {});

  std::vector<Pattern> emitted;
  std::vector<Term> frontier{Term{}};  // G_{d-1}, insertion order
  std::unordered_set<std::string> frontier_keys{term_key(Term{})};

  for (size_t d = 1; d <= cfg.max_degree; ++d) {
    std::vector<Term> next;
    std::unordered_set<std::string> next_keys;
    for (const Term& tau : frontier) {
      const size_t first_col = tau.empty() ? 0 : tau.back().position + 1;
      for (size_t s = first_col; s < ncols; ++s) {
        for (const bool negated : {false, true}) {
          Term candidate = tau;
          candidate.push_back({static_cast<uint32_t>(s), negated});
          // Primality screen: every (d-1)-sub-term must itself have survived
          // as a candidate. Dropping the last literal gives tau, which did.
          bool all_subterms_alive = true;
          if (candidate.size() >= 2) {
            Term sub(candidate.size() - 1);
            for (size_t skip = 0; skip + 1 < candidate.size(); ++skip) {
              size_t w = 0;
              for (size_t i = 0; i < candidate.size(); ++i)
                if (i != skip) sub[w++] = candidate[i];
              if (!frontier_keys.count(term_key(sub))) {
                all_subterms_alive = false;
                break;
              }
            }
          }
          if (!all_subterms_alive) continue;

          const CoverageScan scan = scan_term(candidate, cols, remaining, opposite);
          if (scan.count_in_mask < cfg.min_support) continue;
          if (!scan.touches_forbidden) {
            // Prime pattern: record it and retire the rows it covers.
            BitColumn cov = term_coverage(candidate, cols, nrows);
            cov.intersect(remaining);
            emitted.push_back(
                to_pattern(candidate, b, polarity, scan.count_in_mask));
            if (trace)
              trace->emissions.push_back(
                  {emitted.back(), cov.set_bits()});
            remaining.subtract(cov);
          } else if (d < cfg.max_degree) {
            next_keys.insert(term_key(candidate));
            next.push_back(std::move(candidate));
          }
        }
      }
    }
    if (trace) {
      for (const Term& t : next) trace->candidate_sets[d].insert(term_key(t));
    }
    frontier = std::move(next);
    frontier_keys = std::move(next_keys);
    if (frontier.empty()) break;
  }
  return emitted;
}

Coverage coverage(const Pattern& p, const BinaryDataset& rows) {
  std::unordered_map<size_t, size_t> position;
  position.reserve(rows.column_ids.size());
  for (size_t c = 0; c < rows.column_ids.size(); ++c)
    position.emplace(rows.column_ids[c], c);

  Coverage out;
  for (size_t r = 0; r < rows.rows(); ++r) {
    bool all = true;
    for (const auto& lit : p.literals) {
      auto it = position.find(lit.id);
      if (it == position.end())
        throw DataError("coverage: unknown descriptor id " +
                        std::to_string(lit.id));
      if (rows.bits.get(r, it->second) == lit.negated) {
        all = false;
        break;
      }
    }
    if (all) out.row_ids.push_back(r);
  }
  out.count = out.row_ids.size();
  return out;
}

}  // namespace lad

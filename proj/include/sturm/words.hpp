#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <sturm/error.hpp>
#include <sturm/morphism.hpp>
#include <sturm/name.hpp>
#include <sturm/word_stream.hpp>

// Combinatorics on infinite binary words given as streams: occurrences,
// return words to prefixes and their codings (derivated words), right
// special prefixes, factor complexity, and desubstitution by the four
// elementary morphisms.  Operations extend their stream geometrically and
// report budget exhaustion instead of running away.

namespace sturm {

// Ascending occurrences i <= horizon - |w| of w in the stream.
inline std::vector<std::size_t> occurrences(WordStream stream,
                                            std::string_view w,
                                            std::size_t horizon) {
  std::vector<std::size_t> out;
  if (w.empty() || horizon < w.size()) return out;
  const std::string_view window = stream.view(horizon);
  std::size_t pos = window.find(w);
  while (pos != std::string_view::npos) {
    out.push_back(pos);
    pos = window.find(w, pos + 1);
  }
  return out;
}

struct ReturnDecomposition {
  std::string prefix;
  std::array<std::string, 2> return_words;  // in order of first occurrence
  std::string coding_prefix;                // over '0','1'; starts with '0'
};

struct DerivationRecord {
  std::string source;  // label of the source stream
  ReturnDecomposition decomposition;
  WordStream derivated;
  std::optional<MorphismName> certificate;
};

namespace detail {

// Incremental scan state for the return-word decomposition of a prefix.
struct ReturnScan {
  WordStream source;
  std::string prefix;
  std::size_t last_occurrence = 0;
  std::size_t window = 0;
  std::vector<std::string> returns;  // distinct, in first-occurrence order

  explicit ReturnScan(WordStream src, std::size_t prefix_len)
      : source(src), prefix(src.prefix(prefix_len)) {
    window = std::max<std::size_t>(4 * prefix_len, 256);
  }

  // Appends coding letters until `coding` reaches `want` letters, growing
  // the window geometrically up to `budget`.
  void pump(std::string& coding, std::size_t want, std::size_t budget) {
    while (coding.size() < want) {
      if (window > budget)
        throw budget_error("return-word scan exceeded the stream budget");
      const std::string_view text = source.view(window);
      std::size_t next = text.find(prefix, last_occurrence + 1);
      // Keep a full prefix-length margin so the final return word is
      // bounded by a real next occurrence, not the window edge.
      while (next != std::string_view::npos &&
             next + 2 * prefix.size() <= window && coding.size() < want) {
        code(text.substr(last_occurrence, next - last_occurrence), coding);
        last_occurrence = next;
        next = text.find(prefix, last_occurrence + 1);
      }
      if (coding.size() < want) window *= 2;
    }
  }

  void code(std::string_view ret, std::string& coding) {
    for (std::size_t i = 0; i < returns.size(); ++i) {
      if (returns[i] == ret) {
        coding.push_back(static_cast<char>('0' + i));
        return;
      }
    }
    if (returns.size() == 2)
      throw domain_error(
          "more than two return words: the stream is not Sturmian");
    returns.emplace_back(ret);
    coding.push_back(static_cast<char>('0' + returns.size() - 1));
  }
};

}  // namespace detail

// Return-word coding of the stream with respect to its prefix of length
// prefix_len, first-occurrence letter convention (the coding starts with
// '0').  The record's derivated stream keeps extending on demand.
inline DerivationRecord derivate(WordStream stream, std::size_t prefix_len,
                                 std::size_t out_len,
                                 std::size_t budget = kDefaultBudget) {
  if (prefix_len == 0) throw domain_error("derivate: empty prefix");
  auto scan = std::make_shared<detail::ReturnScan>(stream, prefix_len);
  std::string coding;
  scan->pump(coding, std::max<std::size_t>(out_len, 2), budget);
  while (scan->returns.size() < 2) {  // wait for the second return word
    scan->pump(coding, coding.size() + 1, budget);
  }

  DerivationRecord record{
      stream.label(),
      ReturnDecomposition{scan->prefix,
                          {scan->returns[0], scan->returns[1]},
                          coding},
      WordStream(std::string{}, nullptr),
      std::nullopt};
  auto seed = std::make_shared<std::string>(coding);
  record.derivated = WordStream(
      "d(" + stream.label() + "," + std::to_string(prefix_len) + ")",
      [scan, seed, budget](std::string& buf, std::size_t want) {
        if (buf.empty()) buf = *seed;
        if (buf.size() < want) scan->pump(buf, want, budget);
      });
  return record;
}

namespace detail {

// Distinct factors of the given length.  For an aperiodic uniformly
// recurrent stream the count is definitive as soon as it stops changing
// between window doublings; a Sturmian caller may pass expect = len + 1
// to stop as early as the full factor set is reached.
inline std::unordered_set<std::string> collect_factors(
    WordStream stream, std::size_t len, std::size_t expect,
    std::size_t budget) {
  std::unordered_set<std::string> factors;
  if (len == 0) {
    factors.emplace();
    return factors;
  }
  std::size_t window = std::max<std::size_t>(16 * len, 512);
  std::size_t stable_at = 0;
  while (true) {
    const std::string_view text = stream.view(std::min(window, budget));
    for (std::size_t i = 0; i + len <= text.size(); ++i)
      factors.emplace(text.substr(i, len));
    if (expect != 0 && factors.size() >= expect) return factors;
    if (factors.size() == stable_at || window >= budget) return factors;
    stable_at = factors.size();
    window *= 2;
  }
}

}  // namespace detail

// Lengths l <= max_len whose prefix extends to both letters inside the
// stream.  On a Sturmian stream the factor sets are complete (length l+1
// has exactly l+2 factors), which makes the answer exact.
inline std::vector<std::size_t> right_special_prefixes(
    WordStream stream, std::size_t max_len,
    std::size_t budget = kDefaultBudget) {
  std::vector<std::size_t> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const auto factors =
        detail::collect_factors(stream, len + 1, len + 2, budget);
    const std::string p = stream.prefix(len);
    if (factors.count(p + "0") && factors.count(p + "1"))
      out.push_back(len);
  }
  return out;
}

// Distinct factor counts for lengths 0..max_n.
inline std::vector<std::size_t> factor_complexity(
    WordStream stream, std::size_t max_n,
    std::size_t budget = kDefaultBudget) {
  std::vector<std::size_t> out;
  out.reserve(max_n + 1);
  for (std::size_t len = 0; len <= max_n; ++len)
    out.push_back(detail::collect_factors(stream, len, 0, budget).size());
  return out;
}

namespace detail {

// Deterministic block parse of a generator image.  Returns the preimage
// letter and how many source letters one block consumes, or nullopt when
// the source cannot start with any block of that generator.
inline std::optional<std::pair<char, int>> parse_block(char generator,
                                                       char c0, char c1) {
  switch (generator) {
    case 'a':  // blocks 0, 10
      if (c0 == '0') return {{'0', 1}};
      return c1 == '0' ? std::optional<std::pair<char, int>>{{'1', 2}}
                       : std::nullopt;
    case 'b':  // blocks 0, 01
      if (c0 == '1') return std::nullopt;
      return c1 == '1' ? std::optional<std::pair<char, int>>{{'1', 2}}
                       : std::optional<std::pair<char, int>>{{'0', 1}};
    case kAlpha:  // blocks 01, 1
      if (c0 == '1') return {{'1', 1}};
      return c1 == '1' ? std::optional<std::pair<char, int>>{{'0', 2}}
                       : std::nullopt;
    default:  // beta: blocks 10, 1
      if (c0 == '0') return std::nullopt;
      return c1 == '0' ? std::optional<std::pair<char, int>>{{'0', 2}}
                       : std::optional<std::pair<char, int>>{{'1', 1}};
  }
}

}  // namespace detail

// Unique preimage stream u' with stream = phi_generator(u'), or nullopt
// when the generated prefix proves the stream is not in the image.  The
// probe length bounds how much evidence is gathered before committing; a
// later mismatch inside the returned stream throws domain_error.
inline std::optional<WordStream> desubstitute(WordStream stream,
                                              char generator,
                                              std::size_t probe = 64) {
  std::size_t pos = 0;
  for (std::size_t parsed = 0; parsed < probe; ++parsed) {
    const auto block =
        detail::parse_block(generator, stream[pos], stream[pos + 1]);
    if (!block) return std::nullopt;
    pos += block->second;
  }
  struct State {
    WordStream source;
    char generator;
    std::size_t pos = 0;
  };
  auto state = std::make_shared<State>(State{stream, generator});
  return WordStream(
      std::string("desub_") + generator + "(" + stream.label() + ")",
      [state](std::string& buf, std::size_t want) {
        while (buf.size() < want) {
          const auto block = detail::parse_block(
              state->generator, state->source[state->pos],
              state->source[state->pos + 1]);
          if (!block)
            throw domain_error("stream left the image during desubstitution");
          buf.push_back(block->first);
          state->pos += block->second;
        }
      });
}

}  // namespace sturm

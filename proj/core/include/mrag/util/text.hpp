#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mrag::text {

// ASCII lowercase; bytes outside [A-Z] pass through untouched.
std::string lowercase(std::string_view s);

// Splits on whitespace and punctuation, lowercasing as it goes.
// "Revenue reached 4.2 billion." -> {"revenue","reached","4","2","billion"}
std::vector<std::string> tokenize(std::string_view s);

// True for closed-class words plus a small set of high-frequency
// reporting/change verbs ("reached", "rose", "shows", ...) so that
// near-paraphrase statements compare on their nouns and numbers.
bool is_stopword(const std::string& token);

// tokenize() minus stopwords, duplicates preserved.
std::vector<std::string> content_words(std::string_view s);

// Splits on terminal punctuation (. ! ?), trimming whitespace.
// Fragments without a trailing terminator are still returned.
std::vector<std::string> split_sentences(std::string_view s);

std::string trim(std::string_view s);

// Replaces every occurrence of `from` with `to`.
std::string replace_all(std::string s, std::string_view from, std::string_view to);

// FNV-1a, the project-wide stable 64-bit hash (not cryptographic).
std::uint64_t fnv1a64(std::string_view s);

// splitmix64 step; used wherever a seeded, platform-stable stream is needed.
std::uint64_t splitmix64_next(std::uint64_t& state);

// Fixed-decimal formatting ("12.500"), locale-independent.
std::string format_seconds(double seconds);

// Deterministic Fisher-Yates over indices [0,n); std::shuffle is
// implementation-defined, this is not.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

}  // namespace mrag::text

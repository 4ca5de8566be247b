#include "mrag/util/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <unordered_set>

namespace mrag::text {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string> tokenize(std::string_view s) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : s) {
        if (std::isalnum(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

namespace {

const std::unordered_set<std::string>& stopword_set() {
    static const std::unordered_set<std::string> words = {
        // articles, pronouns, prepositions, conjunctions, auxiliaries
        "a", "an", "the", "is", "are", "was", "were", "be", "been", "being", "am",
        "of", "to", "in", "on", "at", "for", "with", "and", "or", "but", "if",
        "then", "than", "so", "as", "by", "from", "this", "that", "these", "those",
        "it", "its", "he", "she", "they", "them", "their", "we", "our", "you",
        "your", "i", "my", "me", "us", "him", "her", "his", "hers",
        "what", "which", "who", "whom", "whose", "how", "why", "when", "where",
        "do", "does", "did", "doing", "done", "can", "could", "will", "would",
        "shall", "should", "may", "might", "must", "have", "has", "had", "having",
        "about", "into", "onto", "over", "under", "after", "before", "between",
        "through", "during", "above", "below", "up", "down", "out", "off",
        "again", "further", "there", "here", "also", "any", "both", "each",
        "few", "more", "most", "other", "some", "such", "all", "no", "nor",
        "not", "only", "own", "same", "too", "very", "s", "t", "just", "now",
        "one", "per",
        // high-frequency reporting and change-of-state verbs; statements like
        // "revenue reached 4.2 billion" and "revenue rose to 4.2 billion" must
        // compare equal on content
        "say", "says", "said", "show", "shows", "showed", "shown", "showing",
        "reach", "reaches", "reached", "reaching", "rise", "rises", "rose",
        "risen", "go", "goes", "went", "gone", "get", "gets", "got", "gotten",
        "make", "makes", "made", "making", "become", "becomes", "became",
        "report", "reports", "reported", "state", "states", "stated",
        "display", "displays", "displayed", "indicate", "indicates", "indicated",
    };
    return words;
}

}  // namespace

bool is_stopword(const std::string& token) {
    return stopword_set().count(token) > 0;
}

std::vector<std::string> content_words(std::string_view s) {
    std::vector<std::string> out;
    for (auto& tok : tokenize(s)) {
        if (!is_stopword(tok)) out.push_back(std::move(tok));
    }
    return out;
}

std::vector<std::string> split_sentences(std::string_view s) {
    std::vector<std::string> sentences;
    std::string current;
    for (char c : s) {
        current.push_back(c);
        if (c == '.' || c == '!' || c == '?') {
            std::string t = trim(current);
            if (!t.empty()) sentences.push_back(std::move(t));
            current.clear();
        }
    }
    std::string tail = trim(current);
    if (!tail.empty()) sentences.push_back(std::move(tail));
    return sentences;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
    if (from.empty()) return s;
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string format_seconds(double seconds) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.3f", seconds);
    return std::string(buf.data());
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::uint64_t state = seed;
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(splitmix64_next(state) % i);
        std::swap(idx[i - 1], idx[j]);
    }
    return idx;
}

}  // namespace mrag::text

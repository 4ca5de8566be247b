#pragma once

#include <string>
#include <vector>

#include "mrag/core/types.hpp"

namespace mrag::core {

struct Corpus {
    std::vector<VideoRecord> videos;
    std::vector<QAPair> qa;

    const VideoRecord* find_video(const std::string& video_id) const;
};

// Parses and fully validates a corpus manifest (JSON, UTF-8).
// Throws ConfigError for missing/unreadable files and ValidationError
// for schema or invariant violations, naming the offending record.
Corpus load_corpus(const std::string& manifest_path);

// Deterministic serialization: identical corpora produce identical bytes.
std::string serialize_manifest(const Corpus& corpus);
void save_manifest(const Corpus& corpus, const std::string& path);

}  // namespace mrag::core

#pragma once

#include <cstddef>
#include <string_view>

#include "mrag/core/types.hpp"

namespace mrag::gateway {

inline constexpr std::size_t kBowDim = 256;

// Deterministic mock embedding: each token hashes (seeded by token and a
// per-space salt) to a 256-dim {-1,+1} sign pattern; token patterns are
// summed and L2-normalized. Lexical overlap monotonically raises cosine.
// Throws ValidationError when the text has no tokens.
core::EmbeddingVector bow_embed(std::string_view text, core::SpaceTag tag);

}  // namespace mrag::gateway

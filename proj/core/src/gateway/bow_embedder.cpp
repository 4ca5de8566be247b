#include "mrag/gateway/bow_embedder.hpp"

#include <string>
#include <vector>

#include "mrag/errors.hpp"
#include "mrag/util/text.hpp"

namespace mrag::gateway {

core::EmbeddingVector bow_embed(std::string_view input, core::SpaceTag tag) {
    auto tokens = text::tokenize(input);
    if (tokens.empty())
        throw ValidationError("bow_embed: input has no tokens");

    const std::string salt = tag == core::SpaceTag::text ? "text|" : "mm|";
    std::vector<double> acc(kBowDim, 0.0);
    for (const auto& token : tokens) {
        std::uint64_t state = text::fnv1a64(salt + token);
        for (std::size_t word = 0; word < kBowDim / 64; ++word) {
            std::uint64_t bits = text::splitmix64_next(state);
            for (std::size_t bit = 0; bit < 64; ++bit) {
                acc[word * 64 + bit] += (bits >> bit) & 1 ? 1.0 : -1.0;
            }
        }
    }
    return core::EmbeddingVector(std::move(acc), tag).normalized();
}

}  // namespace mrag::gateway

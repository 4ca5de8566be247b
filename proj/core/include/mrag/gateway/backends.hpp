#pragma once

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mrag/core/types.hpp"

namespace mrag::gateway {

enum class BackendKind { chat, text_embed, mm_embed, asr, ocr, det };
enum class BackendMode { http, mock };

std::string to_string(BackendKind k);
BackendKind backend_kind_from_string(const std::string& s);
std::string to_string(BackendMode m);
BackendMode backend_mode_from_string(const std::string& s);

struct BackendConfig {
    BackendKind kind = BackendKind::chat;
    BackendMode mode = BackendMode::mock;
    std::string endpoint;      // base URL; required in http mode
    std::string model_name;
    std::string auth_env_var;  // env var holding the bearer token, http mode
    double timeout_s = 30.0;
    int max_retries = 3;
    double backoff_base_s = 0.5;  // exponential backoff start; doubles per retry
    int max_inflight = 4;         // concurrent request bound, http mode
    std::string fixtures_dir;     // fixture root; required in mock mode

    void validate() const;
};

struct TextPart {
    std::string text;
};
struct ImagePart {
    std::string image_ref;
};
using ChatPart = std::variant<TextPart, ImagePart>;

struct ChatRequest {
    std::string system_prompt;
    std::vector<ChatPart> user_parts;
    double temperature = 0.1;
    double top_p = 1.0;

    std::string joined_text() const;  // text parts, newline-joined
    std::vector<std::string> image_refs() const;
};

struct Detection {
    std::string label;
    double confidence = 0.0;                  // [0,1]
    std::array<double, 4> box{0, 0, 0, 0};    // x0,y0,x1,y1 normalized to [0,1]

    void validate() const;
};

using FrameDetections = std::pair<core::FrameRef, std::vector<Detection>>;

// ---------------------------------------------------------------------------
// Client interfaces. Implementations are stateless after configuration
// and safe for concurrent calls.
// ---------------------------------------------------------------------------

class ChatClient {
public:
    virtual ~ChatClient() = default;
    virtual std::string chat(const ChatRequest& request) = 0;
    virtual BackendMode mode() const = 0;
    virtual const std::string& model_name() const = 0;
};

class TextEmbedClient {
public:
    virtual ~TextEmbedClient() = default;
    // One unit-normalized vector per input, fixed dimension per backend.
    virtual std::vector<core::EmbeddingVector> embed(const std::vector<std::string>& texts) = 0;
    virtual BackendMode mode() const = 0;
};

class MultimodalEmbedClient {
public:
    virtual ~MultimodalEmbedClient() = default;
    virtual core::EmbeddingVector embed_clip(const core::Clip& clip) = 0;
    // Text queries are projected into the same multimodal space.
    virtual core::EmbeddingVector embed_query(const std::string& query) = 0;
    virtual BackendMode mode() const = 0;
};

class AsrClient {
public:
    virtual ~AsrClient() = default;
    virtual core::Transcript transcribe(const std::string& audio_ref) = 0;
    virtual BackendMode mode() const = 0;
};

class OcrClient {
public:
    virtual ~OcrClient() = default;
    // Per-frame text in frame order, newline-joined, consecutive
    // duplicate lines collapsed. Frames with no recognizable text are skipped.
    virtual std::string recognize(const std::vector<core::FrameRef>& frames) = 0;
    virtual BackendMode mode() const = 0;
};

class DetClient {
public:
    virtual ~DetClient() = default;
    // Detections restricted to the vocabulary, per frame, sorted by
    // descending confidence.
    virtual std::vector<FrameDetections> detect(const std::vector<core::FrameRef>& frames,
                                                const std::vector<std::string>& vocabulary) = 0;
    virtual BackendMode mode() const = 0;
};

// One client per backend kind plus the judge roster for evaluation.
struct Backends {
    std::shared_ptr<ChatClient> chat;
    std::shared_ptr<TextEmbedClient> text_embed;
    std::shared_ptr<MultimodalEmbedClient> mm_embed;
    std::shared_ptr<AsrClient> asr;
    std::shared_ptr<OcrClient> ocr;
    std::shared_ptr<DetClient> det;
    std::vector<std::shared_ptr<ChatClient>> judges;
};

std::shared_ptr<ChatClient> make_chat_client(const BackendConfig& cfg);
std::shared_ptr<TextEmbedClient> make_text_embed_client(const BackendConfig& cfg);
std::shared_ptr<MultimodalEmbedClient> make_mm_embed_client(const BackendConfig& cfg);
std::shared_ptr<AsrClient> make_asr_client(const BackendConfig& cfg);
std::shared_ptr<OcrClient> make_ocr_client(const BackendConfig& cfg);
std::shared_ptr<DetClient> make_det_client(const BackendConfig& cfg);

// Shared OCR aggregation: join per-frame texts line-by-line in frame
// order and collapse consecutive identical lines.
std::string join_ocr_texts(const std::vector<std::string>& per_frame_texts);

// Renders detections as one line per (frame, detection):
// "t=6.000s: polar bear (0.90) box=[0.10,0.20,0.60,0.80]"
std::string render_detections(const std::vector<FrameDetections>& detections);

}  // namespace mrag::gateway

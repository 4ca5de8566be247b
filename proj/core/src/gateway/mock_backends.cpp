#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mrag/errors.hpp"
#include "mrag/gateway/backends.hpp"
#include "mrag/gateway/bow_embedder.hpp"
#include "mrag/util/text.hpp"

namespace mrag::gateway {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kChatFallback = "INSUFFICIENT CONTEXT";

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Candidate fixture names for a frame: "<video>_<basename>" (the frame's
// grandparent directory is the video id in the prebaked layout) first,
// then the bare basename. The qualified form disambiguates corpora whose
// per-video frame files share names like "0.jpg".
std::vector<std::string> frame_fixture_names(const std::string& image_ref) {
    fs::path p(image_ref);
    std::vector<std::string> names;
    auto parent2 = p.parent_path().parent_path().filename().string();
    if (!parent2.empty()) names.push_back(parent2 + "_" + p.filename().string());
    names.push_back(p.filename().string());
    return names;
}

// One fixture: the filename stem split on "__" into required substrings
// (single underscores read as spaces).
struct ChatFixture {
    std::string stem;
    std::vector<std::string> required_parts;
    std::string body;
    std::size_t score = 0;  // total length of required parts
};

class MockChatClient : public ChatClient {
public:
    explicit MockChatClient(BackendConfig cfg) : cfg_(std::move(cfg)) {
        fs::path dir = fs::path(cfg_.fixtures_dir) / "chat";
        if (!fs::is_directory(dir)) return;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
            ChatFixture fx;
            fx.stem = entry.path().stem().string();
            std::size_t pos = 0;
            while (pos != std::string::npos) {
                std::size_t next = fx.stem.find("__", pos);
                std::string raw = fx.stem.substr(pos, next == std::string::npos ? next : next - pos);
                if (!raw.empty()) {
                    std::string needle = text::replace_all(raw, "_", " ");
                    fx.score += needle.size();
                    fx.required_parts.push_back(std::move(needle));
                }
                pos = next == std::string::npos ? next : next + 2;
            }
            fx.body = read_file(entry.path());
            fixtures_.push_back(std::move(fx));
        }
        std::sort(fixtures_.begin(), fixtures_.end(),
                  [](const ChatFixture& a, const ChatFixture& b) { return a.stem < b.stem; });
    }

    std::string chat(const ChatRequest& request) override {
        std::string haystack = cfg_.model_name + "\n" + request.system_prompt + "\n" +
                               request.joined_text();
        for (const auto& ref : request.image_refs()) {
            haystack += '\n';
            haystack += ref;
        }

        const ChatFixture* best = nullptr;
        for (const auto& fx : fixtures_) {
            bool all = true;
            for (const auto& part : fx.required_parts) {
                if (haystack.find(part) == std::string::npos) {
                    all = false;
                    break;
                }
            }
            if (all && (!best || fx.score > best->score)) best = &fx;
        }
        if (!best) return kChatFallback;
        std::string body = text::trim(best->body);
        if (body.empty()) throw BackendError("mock chat fixture " + best->stem + " is empty");
        return body;
    }

    BackendMode mode() const override { return BackendMode::mock; }
    const std::string& model_name() const override { return cfg_.model_name; }

private:
    BackendConfig cfg_;
    std::vector<ChatFixture> fixtures_;  // sorted by stem; ties resolve to the first
};

class MockTextEmbedClient : public TextEmbedClient {
public:
    explicit MockTextEmbedClient(BackendConfig cfg) : cfg_(std::move(cfg)) {}

    std::vector<core::EmbeddingVector> embed(const std::vector<std::string>& texts) override {
        if (texts.empty()) throw ValidationError("embed_text: empty batch");
        std::vector<core::EmbeddingVector> out;
        out.reserve(texts.size());
        for (const auto& t : texts) {
            if (text::trim(t).empty())
                throw ValidationError("embed_text: empty text after whitespace trim");
            out.push_back(bow_embed(t, core::SpaceTag::text));
        }
        return out;
    }

    BackendMode mode() const override { return BackendMode::mock; }

private:
    BackendConfig cfg_;
};

class MockMultimodalEmbedClient : public MultimodalEmbedClient {
public:
    explicit MockMultimodalEmbedClient(BackendConfig cfg) : cfg_(std::move(cfg)) {}

    core::EmbeddingVector embed_clip(const core::Clip& clip) override {
        if (clip.frames.empty())
            throw ValidationError("embed_multimodal: clip " + clip.clip_id + " has no frames");
        std::string doc = text::trim(clip.caption_slice + " " + clip.transcript_slice);
        // silent, uncaptioned clips still embed deterministically
        if (text::tokenize(doc).empty()) doc = clip.video_id + " " + clip.clip_id;
        return bow_embed(doc, core::SpaceTag::multimodal);
    }

    core::EmbeddingVector embed_query(const std::string& query) override {
        if (text::trim(query).empty()) throw ValidationError("embed_multimodal: empty query");
        return bow_embed(query, core::SpaceTag::multimodal);
    }

    BackendMode mode() const override { return BackendMode::mock; }

private:
    BackendConfig cfg_;
};

class MockAsrClient : public AsrClient {
public:
    explicit MockAsrClient(BackendConfig cfg) : cfg_(std::move(cfg)) {}

    core::Transcript transcribe(const std::string& audio_ref) override {
        std::string stem = fs::path(audio_ref).stem().string();
        fs::path fixture = fs::path(cfg_.fixtures_dir) / "asr" / (stem + ".transcript.json");
        if (!fs::is_regular_file(fixture))
            throw BackendError("no transcript fixture for " + audio_ref + " (looked for " +
                               fixture.string() + ")");
        json j;
        try {
            j = json::parse(read_file(fixture));
        } catch (const json::exception& e) {
            throw BackendError("transcript fixture " + fixture.string() + ": " + e.what());
        }
        core::Transcript transcript;
        for (const auto& seg : j.at("segments")) {
            transcript.segments.push_back({seg.at("start_s").get<double>(),
                                           seg.at("end_s").get<double>(),
                                           seg.at("text").get<std::string>()});
        }
        transcript.sort_segments();
        transcript.validate();
        return transcript;
    }

    BackendMode mode() const override { return BackendMode::mock; }

private:
    BackendConfig cfg_;
};

class MockOcrClient : public OcrClient {
public:
    explicit MockOcrClient(BackendConfig cfg) : cfg_(std::move(cfg)) {}

    std::string recognize(const std::vector<core::FrameRef>& frames) override {
        if (frames.empty()) throw ValidationError("ocr: empty frame list");
        std::vector<std::string> texts;
        for (const auto& frame : frames) {
            std::string found;
            for (const auto& name : frame_fixture_names(frame.image_ref)) {
                fs::path fixture = fs::path(cfg_.fixtures_dir) / "ocr" / (name + ".txt");
                if (fs::is_regular_file(fixture)) {
                    found = read_file(fixture);
                    break;
                }
            }
            texts.push_back(text::trim(found));  // no fixture -> empty, skipped by join
        }
        return join_ocr_texts(texts);
    }

    BackendMode mode() const override { return BackendMode::mock; }

private:
    BackendConfig cfg_;
};

class MockDetClient : public DetClient {
public:
    explicit MockDetClient(BackendConfig cfg) : cfg_(std::move(cfg)) {}

    std::vector<FrameDetections> detect(const std::vector<core::FrameRef>& frames,
                                        const std::vector<std::string>& vocabulary) override {
        if (vocabulary.empty()) throw ValidationError("detect: empty vocabulary");
        std::vector<std::string> vocab_lc;
        for (const auto& v : vocabulary) vocab_lc.push_back(text::lowercase(text::trim(v)));

        std::vector<FrameDetections> out;
        for (const auto& frame : frames) {
            std::vector<Detection> dets;
            for (const auto& name : frame_fixture_names(frame.image_ref)) {
                fs::path fixture = fs::path(cfg_.fixtures_dir) / "det" / (name + ".json");
                if (!fs::is_regular_file(fixture)) continue;
                json j;
                try {
                    j = json::parse(read_file(fixture));
                } catch (const json::exception& e) {
                    throw BackendError("detection fixture " + fixture.string() + ": " + e.what());
                }
                for (const auto& d : j) {
                    Detection det;
                    det.label = d.at("label").get<std::string>();
                    det.confidence = d.at("confidence").get<double>();
                    const auto& box = d.at("box");
                    for (int i = 0; i < 4; ++i) det.box[i] = box.at(i).get<double>();
                    det.validate();
                    if (std::find(vocab_lc.begin(), vocab_lc.end(),
                                  text::lowercase(det.label)) == vocab_lc.end())
                        continue;
                    dets.push_back(std::move(det));
                }
                break;
            }
            std::sort(dets.begin(), dets.end(), [](const Detection& a, const Detection& b) {
                if (a.confidence != b.confidence) return a.confidence > b.confidence;
                return a.label < b.label;
            });
            out.emplace_back(frame, std::move(dets));
        }
        return out;
    }

    BackendMode mode() const override { return BackendMode::mock; }

private:
    BackendConfig cfg_;
};

}  // namespace

std::shared_ptr<ChatClient> make_mock_chat_client(const BackendConfig& cfg) {
    return std::make_shared<MockChatClient>(cfg);
}
std::shared_ptr<TextEmbedClient> make_mock_text_embed_client(const BackendConfig& cfg) {
    return std::make_shared<MockTextEmbedClient>(cfg);
}
std::shared_ptr<MultimodalEmbedClient> make_mock_mm_embed_client(const BackendConfig& cfg) {
    return std::make_shared<MockMultimodalEmbedClient>(cfg);
}
std::shared_ptr<AsrClient> make_mock_asr_client(const BackendConfig& cfg) {
    return std::make_shared<MockAsrClient>(cfg);
}
std::shared_ptr<OcrClient> make_mock_ocr_client(const BackendConfig& cfg) {
    return std::make_shared<MockOcrClient>(cfg);
}
std::shared_ptr<DetClient> make_mock_det_client(const BackendConfig& cfg) {
    return std::make_shared<MockDetClient>(cfg);
}

}  // namespace mrag::gateway

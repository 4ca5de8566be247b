#include <cstdio>

#include "mrag/errors.hpp"
#include "mrag/gateway/backends.hpp"

namespace mrag::gateway {

std::string to_string(BackendKind k) {
    switch (k) {
        case BackendKind::chat: return "chat";
        case BackendKind::text_embed: return "text_embed";
        case BackendKind::mm_embed: return "mm_embed";
        case BackendKind::asr: return "asr";
        case BackendKind::ocr: return "ocr";
        case BackendKind::det: return "det";
    }
    throw ValidationError("unknown BackendKind");
}

BackendKind backend_kind_from_string(const std::string& s) {
    if (s == "chat") return BackendKind::chat;
    if (s == "text_embed") return BackendKind::text_embed;
    if (s == "mm_embed") return BackendKind::mm_embed;
    if (s == "asr") return BackendKind::asr;
    if (s == "ocr") return BackendKind::ocr;
    if (s == "det") return BackendKind::det;
    throw ValidationError("unknown backend kind: " + s);
}

std::string to_string(BackendMode m) { return m == BackendMode::http ? "http" : "mock"; }

BackendMode backend_mode_from_string(const std::string& s) {
    if (s == "http") return BackendMode::http;
    if (s == "mock") return BackendMode::mock;
    throw ValidationError("unknown backend mode: " + s);
}

void BackendConfig::validate() const {
    if (mode == BackendMode::http && endpoint.empty())
        throw ValidationError("http backend (" + to_string(kind) + ") requires an endpoint");
    if (mode == BackendMode::mock && fixtures_dir.empty())
        throw ValidationError("mock backend (" + to_string(kind) + ") requires a fixtures_dir");
    if (!(timeout_s > 0.0)) throw ValidationError("timeout_s must be positive");
    if (max_retries < 0) throw ValidationError("max_retries must be >= 0");
}

std::string ChatRequest::joined_text() const {
    std::string out;
    for (const auto& part : user_parts) {
        if (const auto* t = std::get_if<TextPart>(&part)) {
            if (!out.empty()) out += '\n';
            out += t->text;
        }
    }
    return out;
}

std::vector<std::string> ChatRequest::image_refs() const {
    std::vector<std::string> refs;
    for (const auto& part : user_parts) {
        if (const auto* img = std::get_if<ImagePart>(&part)) refs.push_back(img->image_ref);
    }
    return refs;
}

void Detection::validate() const {
    if (confidence < 0.0 || confidence > 1.0)
        throw ValidationError("detection confidence outside [0,1]");
    if (box[0] > box[2] || box[1] > box[3])
        throw ValidationError("detection box violates x0<=x1, y0<=y1");
}

std::string join_ocr_texts(const std::vector<std::string>& per_frame_texts) {
    std::vector<std::string> lines;
    for (const auto& text : per_frame_texts) {
        std::string current;
        auto flush = [&] {
            if (!current.empty()) {
                if (lines.empty() || lines.back() != current) lines.push_back(current);
                current.clear();
            }
        };
        for (char c : text) {
            if (c == '\n') flush();
            else current.push_back(c);
        }
        flush();
    }
    std::string out;
    for (const auto& line : lines) {
        if (!out.empty()) out += '\n';
        out += line;
    }
    return out;
}

std::string render_detections(const std::vector<FrameDetections>& detections) {
    std::string out;
    char buf[256];
    for (const auto& [frame, dets] : detections) {
        for (const auto& d : dets) {
            std::snprintf(buf, sizeof(buf), "t=%.3fs: %s (%.2f) box=[%.2f,%.2f,%.2f,%.2f]",
                          frame.timestamp_s, d.label.c_str(), d.confidence, d.box[0], d.box[1],
                          d.box[2], d.box[3]);
            if (!out.empty()) out += '\n';
            out += buf;
        }
    }
    return out;
}

}  // namespace mrag::gateway

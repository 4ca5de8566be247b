#include "mrag/core/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mrag/errors.hpp"

namespace mrag::core {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

}  // namespace

// --- enums -----------------------------------------------------------------

std::string to_string(VideoCategory c) {
    switch (c) {
        case VideoCategory::structured_data: return "structured_data";
        case VideoCategory::tutorial: return "tutorial";
        case VideoCategory::news: return "news";
        case VideoCategory::other: return "other";
    }
    fail("unknown VideoCategory");
}

VideoCategory video_category_from_string(const std::string& s) {
    if (s == "structured_data") return VideoCategory::structured_data;
    if (s == "tutorial") return VideoCategory::tutorial;
    if (s == "news") return VideoCategory::news;
    if (s == "other") return VideoCategory::other;
    fail("unknown video category: " + s);
}

std::string to_string(CaptionSource s) {
    return s == CaptionSource::sparse_pass ? "sparse_pass" : "refined_pass";
}

CaptionSource caption_source_from_string(const std::string& s) {
    if (s == "sparse_pass") return CaptionSource::sparse_pass;
    if (s == "refined_pass") return CaptionSource::refined_pass;
    fail("unknown caption source: " + s);
}

std::string to_string(KeypointModality m) {
    switch (m) {
        case KeypointModality::video: return "video";
        case KeypointModality::text: return "text";
        case KeypointModality::hybrid: return "hybrid";
    }
    fail("unknown KeypointModality");
}

KeypointModality keypoint_modality_from_string(const std::string& s) {
    if (s == "video") return KeypointModality::video;
    if (s == "text") return KeypointModality::text;
    if (s == "hybrid") return KeypointModality::hybrid;
    fail("unknown keypoint modality: " + s);
}

bool counts_toward_video_bucket(KeypointModality m) {
    return m == KeypointModality::video || m == KeypointModality::hybrid;
}

std::string to_string(HopKind h) { return h == HopKind::single ? "single" : "multi"; }

HopKind hop_kind_from_string(const std::string& s) {
    if (s == "single") return HopKind::single;
    if (s == "multi") return HopKind::multi;
    fail("unknown hop kind: " + s);
}

std::string to_string(QuerySlice q) {
    switch (q) {
        case QuerySlice::multi_point: return "multi_point";
        case QuerySlice::text_single_point: return "text_single_point";
        case QuerySlice::video_single_point: return "video_single_point";
    }
    fail("unknown QuerySlice");
}

QuerySlice query_slice_from_string(const std::string& s) {
    if (s == "multi_point") return QuerySlice::multi_point;
    if (s == "text_single_point") return QuerySlice::text_single_point;
    if (s == "video_single_point") return QuerySlice::video_single_point;
    fail("unknown query slice: " + s);
}

std::string to_string(SpaceTag t) { return t == SpaceTag::text ? "text" : "multimodal"; }

SpaceTag space_tag_from_string(const std::string& s) {
    if (s == "text") return SpaceTag::text;
    if (s == "multimodal") return SpaceTag::multimodal;
    fail("unknown space tag: " + s);
}

// --- transcript ------------------------------------------------------------

std::string Transcript::full_text() const {
    std::string out;
    for (const auto& seg : segments) {
        if (!out.empty()) out += ' ';
        out += seg.text;
    }
    return out;
}

std::string Transcript::text_in_window(double start_s, double end_s) const {
    std::string out;
    for (const auto& seg : segments) {
        if (seg.end_s < start_s || seg.start_s >= end_s) continue;
        if (!out.empty()) out += ' ';
        out += seg.text;
    }
    return out;
}

void Transcript::sort_segments() {
    std::stable_sort(segments.begin(), segments.end(),
                     [](const TranscriptSegment& a, const TranscriptSegment& b) {
                         return a.start_s < b.start_s;
                     });
}

void Transcript::validate() const {
    double prev = -1.0;
    for (const auto& seg : segments) {
        if (seg.start_s > seg.end_s)
            fail("transcript segment with start_s > end_s");
        if (seg.start_s < prev)
            fail("transcript segments not sorted by start_s");
        prev = seg.start_s;
    }
}

// --- video record ----------------------------------------------------------

std::string VideoRecord::caption_text() const {
    std::string out;
    for (const auto& cap : captions) {
        if (!out.empty()) out += ' ';
        out += cap.text;
    }
    return out;
}

void VideoRecord::validate() const {
    if (video_id.empty()) fail("video_id must be non-empty");
    if (!(duration_s > 0.0)) fail("video " + video_id + ": duration_s must be > 0");
    transcript.validate();
    for (const auto& seg : transcript.segments) {
        if (seg.start_s < 0.0 || seg.end_s > duration_s)
            fail("video " + video_id + ": transcript segment outside [0, duration]");
    }
    for (const auto& cap : captions) {
        if (cap.timestamp_s < 0.0 || cap.timestamp_s > duration_s)
            fail("video " + video_id + ": caption timestamp outside [0, duration]");
    }
}

void Clip::validate(double parent_duration_s) const {
    if (!(0.0 <= start_s && start_s < end_s && end_s <= parent_duration_s))
        fail("clip " + clip_id + ": window violates 0 <= start < end <= duration");
    for (const auto& f : frames) {
        if (f.timestamp_s < start_s || f.timestamp_s > end_s)
            fail("clip " + clip_id + ": frame timestamp outside clip window");
    }
}

// --- qa --------------------------------------------------------------------

void QAPair::validate() const {
    if (question_id.empty()) fail("question_id must be non-empty");
    if (keypoints.empty()) fail("question " + question_id + ": needs at least one keypoint");
    if (gold_video_ids.empty())
        fail("question " + question_id + ": gold_video_ids must be non-empty");
    for (const auto& kp : keypoints) {
        if (kp.statement.empty())
            fail("question " + question_id + ": keypoint " + kp.keypoint_id +
                 " has empty statement");
    }
    if (hop == HopKind::multi && keypoints.size() < 2)
        fail("question " + question_id + ": hop/keypoint mismatch (multi-hop needs >= 2)");
    if (hop == HopKind::single && keypoints.size() != 1)
        fail("question " + question_id + ": hop/keypoint mismatch (single-hop needs exactly 1)");
    bool multi_kp = keypoints.size() >= 2;
    if (multi_kp != (query_slice == QuerySlice::multi_point))
        fail("question " + question_id +
             ": query_slice must be multi_point iff the question has >= 2 keypoints");
}

// --- embeddings ------------------------------------------------------------

EmbeddingVector::EmbeddingVector(std::vector<double> values, SpaceTag tag)
    : values_(std::move(values)), tag_(tag) {
    if (values_.empty()) fail("embedding vector must have positive dimension");
    double sq = 0.0;
    for (double v : values_) sq += v * v;
    if (!(sq > 0.0)) fail("zero embedding vector rejected");
}

double EmbeddingVector::norm() const {
    double sq = 0.0;
    for (double v : values_) sq += v * v;
    return std::sqrt(sq);
}

EmbeddingVector EmbeddingVector::normalized() const {
    double n = norm();
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] / n;
    return EmbeddingVector(std::move(out), tag_);
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.dim() != b.dim())
        fail("cosine: dimension mismatch");
    if (a.values() == b.values()) return 1.0;
    double dot = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) dot += a.values()[i] * b.values()[i];
    return dot / (a.norm() * b.norm());
}

void sort_scored(std::vector<ScoredResult>& results) {
    std::sort(results.begin(), results.end(), [](const ScoredResult& a, const ScoredResult& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.item_id < b.item_id;
    });
}

// --- sufficiency and evidence ------------------------------------------------

SufficiencyAssessment make_assessment(double answerability, double density, bool need_ocr,
                                      bool need_det, std::string missing_info) {
    auto clamp10 = [](double v) { return std::clamp(v, 0.0, 10.0); };
    SufficiencyAssessment a;
    a.answerability = clamp10(answerability);
    a.density = clamp10(density);
    a.score_s = clamp10((a.answerability + a.density) / 2.0);
    a.need_ocr = need_ocr;
    a.need_det = need_det;
    a.missing_info = std::move(missing_info);
    return a;
}

std::vector<std::pair<std::string, std::string>> EvidenceBundle::parts() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("question", question);
    out.emplace_back("transcript", transcript_text);
    out.emplace_back("caption_summary", caption_summary);
    if (ocr_text) out.emplace_back("ocr", *ocr_text);
    if (det_text) out.emplace_back("detections", *det_text);
    return out;
}

std::string EvidenceBundle::serialize() const {
    auto label_for = [](const std::string& name) -> const char* {
        if (name == "question") return "Question:";
        if (name == "transcript") return "Transcript:";
        if (name == "caption_summary") return "Visual summary:";
        if (name == "ocr") return "OCR text:";
        return "Detections:";
    };
    std::string out;
    for (const auto& [name, content] : parts()) {
        if (!out.empty()) out += "\n\n";
        out += label_for(name);
        out += '\n';
        out += content;
    }
    return out;
}

}  // namespace mrag::core

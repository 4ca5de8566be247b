#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mrag::core {

// ---------------------------------------------------------------------------
// Corpus hierarchy
// ---------------------------------------------------------------------------

enum class VideoCategory { structured_data, tutorial, news, other };

std::string to_string(VideoCategory c);
VideoCategory video_category_from_string(const std::string& s);

struct TranscriptSegment {
    double start_s = 0.0;
    double end_s = 0.0;
    std::string text;
};

// Ordered speech segments; sorted by start_s, start_s <= end_s per segment.
struct Transcript {
    std::vector<TranscriptSegment> segments;

    // Full text, segments joined by a single space.
    std::string full_text() const;

    // Concatenated text of segments overlapping [start_s, end_s).
    std::string text_in_window(double start_s, double end_s) const;

    void sort_segments();
    void validate() const;
};

enum class CaptionSource { sparse_pass, refined_pass };

std::string to_string(CaptionSource s);
CaptionSource caption_source_from_string(const std::string& s);

struct Caption {
    double timestamp_s = 0.0;
    std::string text;
    CaptionSource source = CaptionSource::sparse_pass;
};

struct FrameRef {
    double timestamp_s = 0.0;
    std::string image_ref;  // path or opaque handle
};

struct VideoRecord {
    std::string video_id;
    std::string title;
    double duration_s = 0.0;
    VideoCategory category = VideoCategory::other;
    Transcript transcript;
    std::vector<Caption> captions;
    std::string frame_dir;

    // Captions joined by a single space, sparse pass first, timestamp order.
    std::string caption_text() const;

    void validate() const;
};

// Contiguous sub-window of a video. caption_slice carries the parent's
// caption text falling in the window; the multimodal mock embedder and
// clip relevance scoring both read it.
struct Clip {
    std::string video_id;
    std::string clip_id;
    double start_s = 0.0;
    double end_s = 0.0;
    std::vector<FrameRef> frames;
    std::string transcript_slice;
    std::string caption_slice;

    void validate(double parent_duration_s) const;
};

// ---------------------------------------------------------------------------
// Evaluation ground truth
// ---------------------------------------------------------------------------

enum class KeypointModality { video, text, hybrid };

std::string to_string(KeypointModality m);
KeypointModality keypoint_modality_from_string(const std::string& s);

// Hybrid keypoints count toward the video bucket: they require visual
// evidence, which keeps the text recall a pure transcript measure.
bool counts_toward_video_bucket(KeypointModality m);

struct Keypoint {
    std::string keypoint_id;
    KeypointModality modality = KeypointModality::text;
    std::string statement;
    std::optional<std::pair<double, double>> time_window;
};

enum class HopKind { single, multi };
enum class QuerySlice { multi_point, text_single_point, video_single_point };

std::string to_string(HopKind h);
HopKind hop_kind_from_string(const std::string& s);
std::string to_string(QuerySlice q);
QuerySlice query_slice_from_string(const std::string& s);

struct QAPair {
    std::string question_id;
    std::string question;
    std::string reference_answer;
    std::vector<Keypoint> keypoints;
    HopKind hop = HopKind::single;
    QuerySlice query_slice = QuerySlice::text_single_point;
    std::vector<std::string> gold_video_ids;

    void validate() const;
};

// ---------------------------------------------------------------------------
// Retrieval currency
// ---------------------------------------------------------------------------

enum class SpaceTag { text, multimodal };

std::string to_string(SpaceTag t);
SpaceTag space_tag_from_string(const std::string& s);

// Fixed-dimension real vector. Construction rejects zero vectors and
// dimension mismatches; callers can rely on a usable norm.
class EmbeddingVector {
public:
    EmbeddingVector(std::vector<double> values, SpaceTag tag);

    const std::vector<double>& values() const { return values_; }
    std::size_t dim() const { return values_.size(); }
    SpaceTag space_tag() const { return tag_; }

    double norm() const;
    EmbeddingVector normalized() const;

private:
    std::vector<double> values_;
    SpaceTag tag_;
};

// Cosine similarity. Bitwise-identical inputs return exactly 1.0
// (cosine of a vector with itself is 1 by definition; this avoids
// rounding at the sqrt).
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

struct ScoredResult {
    std::string item_id;
    double score = 0.0;
};

// Descending score, ties broken by ascending item_id. Total and
// deterministic: same input always yields byte-identical order.
void sort_scored(std::vector<ScoredResult>& results);

// ---------------------------------------------------------------------------
// Adaptive refinement verdicts and evidence
// ---------------------------------------------------------------------------

struct SufficiencyAssessment {
    double answerability = 0.0;  // [0,10]
    double density = 0.0;        // [0,10]
    double score_s = 0.0;        // mean of the two, [0,10]
    bool need_ocr = false;
    bool need_det = false;
    std::string missing_info;
};

SufficiencyAssessment make_assessment(double answerability, double density,
                                      bool need_ocr, bool need_det,
                                      std::string missing_info);

// Ordered enriched context fed to the answering model:
// [question, transcript, caption summary, ocr?, detections?].
// Absent optional parts are omitted entirely.
struct EvidenceBundle {
    std::string question;
    std::string transcript_text;
    std::string caption_summary;
    std::optional<std::string> ocr_text;
    std::optional<std::string> det_text;

    // Labeled (name, content) pairs in serialization order.
    std::vector<std::pair<std::string, std::string>> parts() const;

    // Labeled sections in the fixed order, double-newline separated.
    std::string serialize() const;
};

}  // namespace mrag::core

#include "mrag/core/manifest.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "mrag/errors.hpp"

namespace mrag::core {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw ConfigError(std::string(what) + " not found: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError(std::string(what) + " " + path + ": invalid JSON: " + e.what());
    }
    return j;
}

TranscriptSegment parse_segment(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ValidationError(ctx + ": transcript segment must be an object");
    TranscriptSegment seg;
    seg.start_s = j.at("start_s").get<double>();
    seg.end_s = j.at("end_s").get<double>();
    seg.text = j.at("text").get<std::string>();
    return seg;
}

Caption parse_caption(const json& j, const std::string& ctx) {
    Caption cap;
    cap.timestamp_s = j.at("timestamp_s").get<double>();
    cap.text = j.at("text").get<std::string>();
    cap.source = caption_source_from_string(j.value("source", "sparse_pass"));
    if (cap.timestamp_s < 0.0) throw ValidationError(ctx + ": caption timestamp_s < 0");
    return cap;
}

VideoRecord parse_video(const json& j) {
    VideoRecord rec;
    rec.video_id = j.at("video_id").get<std::string>();
    const std::string ctx = "video " + rec.video_id;
    rec.title = j.value("title", "");
    rec.duration_s = j.at("duration_s").get<double>();
    rec.category = video_category_from_string(j.value("category", "other"));
    if (j.contains("transcript")) {
        for (const auto& s : j.at("transcript")) rec.transcript.segments.push_back(parse_segment(s, ctx));
    }
    if (j.contains("captions")) {
        for (const auto& c : j.at("captions")) rec.captions.push_back(parse_caption(c, ctx));
    }
    rec.frame_dir = j.value("frame_dir", "");
    rec.validate();
    return rec;
}

Keypoint parse_keypoint(const json& j, const std::string& ctx) {
    Keypoint kp;
    kp.keypoint_id = j.at("keypoint_id").get<std::string>();
    kp.modality = keypoint_modality_from_string(j.at("modality").get<std::string>());
    kp.statement = j.at("statement").get<std::string>();
    if (j.contains("time_window") && !j.at("time_window").is_null()) {
        const auto& w = j.at("time_window");
        if (!w.is_array() || w.size() != 2)
            throw ValidationError(ctx + ": time_window must be [start_s, end_s] or null");
        kp.time_window = std::make_pair(w[0].get<double>(), w[1].get<double>());
    }
    return kp;
}

QAPair parse_qa(const json& j) {
    QAPair qa;
    qa.question_id = j.at("question_id").get<std::string>();
    const std::string ctx = "question " + qa.question_id;
    qa.question = j.at("question").get<std::string>();
    qa.reference_answer = j.at("reference_answer").get<std::string>();
    qa.hop = hop_kind_from_string(j.at("hop").get<std::string>());
    qa.query_slice = query_slice_from_string(j.at("query_slice").get<std::string>());
    for (const auto& g : j.at("gold_video_ids")) qa.gold_video_ids.push_back(g.get<std::string>());
    for (const auto& k : j.at("keypoints")) qa.keypoints.push_back(parse_keypoint(k, ctx));
    qa.validate();
    return qa;
}

json segment_to_json(const TranscriptSegment& seg) {
    return json{{"start_s", seg.start_s}, {"end_s", seg.end_s}, {"text", seg.text}};
}

json caption_to_json(const Caption& cap) {
    return json{{"timestamp_s", cap.timestamp_s}, {"text", cap.text}, {"source", to_string(cap.source)}};
}

json video_to_json(const VideoRecord& rec) {
    json transcript = json::array();
    for (const auto& s : rec.transcript.segments) transcript.push_back(segment_to_json(s));
    json captions = json::array();
    for (const auto& c : rec.captions) captions.push_back(caption_to_json(c));
    return json{{"video_id", rec.video_id},     {"title", rec.title},
                {"duration_s", rec.duration_s}, {"category", to_string(rec.category)},
                {"transcript", transcript},     {"captions", captions},
                {"frame_dir", rec.frame_dir}};
}

json keypoint_to_json(const Keypoint& kp) {
    json j{{"keypoint_id", kp.keypoint_id},
           {"modality", to_string(kp.modality)},
           {"statement", kp.statement}};
    if (kp.time_window)
        j["time_window"] = json::array({kp.time_window->first, kp.time_window->second});
    else
        j["time_window"] = nullptr;
    return j;
}

json qa_to_json(const QAPair& qa) {
    json keypoints = json::array();
    for (const auto& k : qa.keypoints) keypoints.push_back(keypoint_to_json(k));
    return json{{"question_id", qa.question_id},
                {"question", qa.question},
                {"reference_answer", qa.reference_answer},
                {"hop", to_string(qa.hop)},
                {"query_slice", to_string(qa.query_slice)},
                {"gold_video_ids", qa.gold_video_ids},
                {"keypoints", keypoints}};
}

}  // namespace

const VideoRecord* Corpus::find_video(const std::string& video_id) const {
    for (const auto& v : videos) {
        if (v.video_id == video_id) return &v;
    }
    return nullptr;
}

Corpus load_corpus(const std::string& manifest_path) {
    json j = read_json_file(manifest_path, "manifest");
    Corpus corpus;

    std::set<std::string> video_ids;
    for (const auto& v : j.value("videos", json::array())) {
        VideoRecord rec = parse_video(v);
        if (!video_ids.insert(rec.video_id).second)
            throw ValidationError("duplicate id: video " + rec.video_id);
        corpus.videos.push_back(std::move(rec));
    }

    std::set<std::string> question_ids;
    for (const auto& q : j.value("qa", json::array())) {
        QAPair qa = parse_qa(q);
        if (!question_ids.insert(qa.question_id).second)
            throw ValidationError("duplicate id: question " + qa.question_id);
        for (const auto& gold : qa.gold_video_ids) {
            if (!video_ids.count(gold))
                throw ValidationError("question " + qa.question_id +
                                      " references unknown gold_video_id " + gold);
        }
        corpus.qa.push_back(std::move(qa));
    }
    return corpus;
}

std::string serialize_manifest(const Corpus& corpus) {
    json videos = json::array();
    for (const auto& v : corpus.videos) videos.push_back(video_to_json(v));
    json qa = json::array();
    for (const auto& q : corpus.qa) qa.push_back(qa_to_json(q));
    json j{{"videos", videos}, {"qa", qa}};
    return j.dump(2) + "\n";
}

void save_manifest(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write manifest: " + path);
    out << serialize_manifest(corpus);
}

}  // namespace mrag::core

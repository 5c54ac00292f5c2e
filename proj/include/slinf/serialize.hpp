#pragma once

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "slinf/classify.hpp"
#include "slinf/errors.hpp"
#include "slinf/finrep.hpp"
#include "slinf/modmodel.hpp"

namespace slinf {

using Json = nlohmann::ordered_json;

inline constexpr int descriptor_version = 1;

namespace detail {

/// Reads a JSON document, reporting failures with a JSON pointer.
class Reader {
public:
    Reader(const Json& node, std::string path) : node_(node), path_(std::move(path)) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError((path_.empty() ? std::string("/") : path_) + ": " + msg);
    }

    const Json& node() const noexcept { return node_; }
    const std::string& path() const noexcept { return path_; }

    void expect_object(std::initializer_list<const char*> allowed) const {
        if (!node_.is_object()) fail("expected an object");
        for (const auto& [key, value] : node_.items()) {
            bool known = false;
            for (const char* a : allowed) known = known || key == a;
            if (!known) Reader(value, path_ + "/" + key).fail("unknown field '" + key + "'");
        }
    }

    bool has(const char* key) const { return node_.contains(key); }

    Reader at(const char* key) const {
        if (!node_.contains(key)) fail(std::string("missing field '") + key + "'");
        return {node_.at(key), path_ + "/" + key};
    }

    std::vector<Reader> elements() const {
        if (!node_.is_array()) fail("expected an array");
        std::vector<Reader> out;
        for (std::size_t i = 0; i < node_.size(); ++i) out.emplace_back(node_[i], path_ + "/" + std::to_string(i));
        return out;
    }

    std::int64_t integer() const {
        if (!node_.is_number_integer()) fail("expected an integer");
        if (node_.is_number_unsigned() && node_.get<std::uint64_t>() > std::uint64_t(INT64_MAX))
            fail("integer out of range");
        return node_.get<std::int64_t>();
    }

    std::string string() const {
        if (!node_.is_string()) fail("expected a string");
        return node_.get<std::string>();
    }

    std::vector<std::int64_t> integers() const {
        std::vector<std::int64_t> out;
        for (const auto& e : elements()) out.push_back(e.integer());
        return out;
    }

private:
    const Json& node_;
    std::string path_;
};

inline Block read_block(const Reader& r) {
    r.expect_object({"lam", "mu"});
    return {FiniteWeight(r.at("lam").integers()), FiniteWeight(r.at("mu").integers())};
}

inline BlockSequence read_sequence(const Reader& r) {
    r.expect_object({"prefix", "period", "offset"});
    BlockSequence s;
    if (r.has("prefix"))
        for (const auto& b : r.at("prefix").elements()) s.prefix.push_back(read_block(b));
    for (const auto& b : r.at("period").elements()) s.period.push_back(read_block(b));
    if (s.period.empty()) r.at("period").fail("period must contain at least one block");
    if (r.has("offset")) s.offset = r.at("offset").integer();
    return s;
}

inline OrderSpec read_order(const Reader& r) {
    r.expect_object({"kind", "relabeling"});
    const Reader k = r.at("kind");
    OrderKind kind{};
    try {
        kind = order_kind_from_string(k.string());
    } catch (const DomainError& e) {
        k.fail(e.what());
    }
    std::vector<OrderSpec::Transposition> rel;
    if (r.has("relabeling")) {
        for (const auto& t : r.at("relabeling").elements()) {
            const auto pair = t.integers();
            if (pair.size() != 2) t.fail("a transposition has two positions");
            rel.emplace_back(pair[0], pair[1]);
        }
    }
    try {
        return OrderSpec(kind, rel);
    } catch (const DomainError& e) {
        r.at("relabeling").fail(e.what());
    }
}

inline Json write_block(const Block& b) { return Json{{"lam", b.lam.coords}, {"mu", b.mu.coords}}; }

inline Json write_sequence(const BlockSequence& s) {
    Json prefix = Json::array(), period = Json::array();
    for (const auto& b : s.prefix) prefix.push_back(write_block(b));
    for (const auto& b : s.period) period.push_back(write_block(b));
    return Json{{"prefix", prefix}, {"period", period}, {"offset", s.offset}};
}

}  // namespace detail

inline Json order_to_json(const OrderSpec& o) {
    Json rel = Json::array();
    for (auto [a, b] : o.relabeling()) rel.push_back(Json::array({a, b}));
    return Json{{"kind", to_string(o.kind())}, {"relabeling", rel}};
}

inline Json descriptor_to_json(const ModuleDescriptor& d) {
    Json j{{"version", descriptor_version}};
    if (d.is_symlimit()) {
        const auto& a = d.symlimit();
        j["kind"] = "symlimit";
        j["sequence"] = Json{{"prefix", a.prefix}, {"tail", Json{{"start", a.tail_start}, {"step", a.tail_step}}}};
        return j;
    }
    const auto& vp = d.vp();
    j["kind"] = "vp";
    j["order"] = order_to_json(vp.order);
    j["blocks"] = detail::write_sequence(vp.blocks);
    if (vp.order.kind() == OrderKind::TwoSided) j["left_blocks"] = detail::write_sequence(vp.left_blocks);
    return j;
}

inline ModuleDescriptor descriptor_from_json(const Json& j) {
    const detail::Reader root(j, "");
    if (!j.is_object()) root.fail("expected an object");
    const auto version = root.at("version").integer();
    if (version != descriptor_version)
        root.at("version").fail("unsupported version " + std::to_string(version) + " (expected " +
                                std::to_string(descriptor_version) + ")");
    const std::string kind = root.at("kind").string();
    if (kind == "symlimit") {
        root.expect_object({"version", "kind", "sequence"});
        const auto seq = root.at("sequence");
        seq.expect_object({"prefix", "tail"});
        SymLimitSequence a;
        if (seq.has("prefix")) a.prefix = seq.at("prefix").integers();
        const auto tail = seq.at("tail");
        tail.expect_object({"start", "step"});
        a.tail_start = tail.at("start").integer();
        a.tail_step = tail.at("step").integer();
        return ModuleDescriptor(a);
    }
    if (kind != "vp") root.at("kind").fail("expected \"vp\" or \"symlimit\"");
    root.expect_object({"version", "kind", "order", "blocks", "left_blocks"});
    VPDatum vp;
    vp.order = detail::read_order(root.at("order"));
    vp.blocks = detail::read_sequence(root.at("blocks"));
    const bool two_sided = vp.order.kind() == OrderKind::TwoSided;
    if (two_sided)
        vp.left_blocks = detail::read_sequence(root.at("left_blocks"));
    else if (root.has("left_blocks"))
        root.at("left_blocks").fail("left_blocks are only used by two-sided orders");
    return ModuleDescriptor(std::move(vp));
}

inline ModuleDescriptor parse_descriptor(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("byte ") + std::to_string(e.byte) + ": malformed JSON");
    }
    return descriptor_from_json(j);
}

inline ModuleDescriptor load_descriptor(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_descriptor(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(file + ": " + e.what());
    }
}

/// Runs as [value, mult] pairs with "inf" for infinite constant runs;
/// infinite runs with a step or a longer pattern are objects.
inline Json profile_to_json(const WeightProfile& w) {
    Json runs = Json::array();
    for (const auto& r : w.runs()) {
        if (!r.is_infinite()) {
            runs.push_back(Json::array({r.values.front(), *r.mult}));
        } else if (r.values.size() == 1 && r.step == 0) {
            runs.push_back(Json::array({r.values.front(), "inf"}));
        } else if (r.values.size() == 1) {
            runs.push_back(Json{{"value", r.values.front()}, {"mult", "inf"}, {"step", r.step}});
        } else {
            runs.push_back(Json{{"pattern", r.values}, {"mult", "inf"}, {"step", r.step}});
        }
    }
    Json j{{"order", order_to_json(w.order())}, {"runs", runs}};
    if (w.kind() == OrderKind::TwoSided) j["origin"] = w.origin();
    return j;
}

inline WeightProfile profile_from_json(const Json& j) {
    const detail::Reader root(j, "");
    root.expect_object({"order", "runs", "origin"});
    const OrderSpec order = detail::read_order(root.at("order"));
    std::vector<Run> runs;
    for (const auto& r : root.at("runs").elements()) {
        if (r.node().is_array()) {
            const auto parts = r.elements();
            if (parts.size() != 2) r.fail("a run is [value, mult]");
            const std::int64_t value = parts[0].integer();
            if (parts[1].node().is_string()) {
                if (parts[1].string() != "inf") parts[1].fail("expected \"inf\" or an integer");
                runs.push_back(Run::infinite(value));
            } else {
                runs.push_back(Run::finite(value, parts[1].integer()));
            }
            continue;
        }
        r.expect_object({"value", "pattern", "mult", "step"});
        if (r.at("mult").string() != "inf") r.at("mult").fail("object runs are infinite");
        const std::int64_t step = r.has("step") ? r.at("step").integer() : 0;
        if (r.has("value") == r.has("pattern")) r.fail("give exactly one of value and pattern");
        if (r.has("value"))
            runs.push_back(Run::infinite(r.at("value").integer(), step));
        else
            runs.push_back(Run::periodic(r.at("pattern").integers(), step));
    }
    const std::int64_t origin = root.has("origin") ? root.at("origin").integer() : 1;
    try {
        return WeightProfile(order, runs, origin);
    } catch (const DomainError& e) {
        root.at("runs").fail(e.what());
    }
}

inline Json partition_to_json(const Partition& p) { return Json(p.parts()); }

inline Json tag_to_json(const AnnihilatorTag& t) {
    if (t.zero) return "zero";
    return Json{{"case", to_string(t.which)}, {"r", t.r},          {"g", t.g}, {"X", partition_to_json(t.x)},
                {"Y", partition_to_json(t.y)},  {"recipe", t.recipe}};
}

inline AnnihilatorTag tag_from_json(const Json& j) {
    const detail::Reader r(j, "");
    if (j.is_string()) {
        if (j.get<std::string>() != "zero") r.fail("expected \"zero\" or a quadruple");
        return AnnihilatorTag::zero_ideal();
    }
    r.expect_object({"case", "r", "g", "X", "Y", "recipe"});
    AnnihilatorTag t;
    t.zero = false;
    try {
        t.which = tag_case_from_string(r.at("case").string());
    } catch (const DomainError& e) {
        r.at("case").fail(e.what());
    }
    t.r = r.at("r").integer();
    t.g = r.at("g").integer();
    t.x = Partition(r.at("X").integers());
    t.y = Partition(r.at("Y").integers());
    t.recipe = r.at("recipe").string();
    return t;
}

inline Json character_to_json(const CharacterTable& c) {
    Json weights = Json::array();
    for (const auto& [w, m] : c.entries) weights.push_back(Json{{"weight", w.coords}, {"mult", m}});
    return Json{{"n", c.n}, {"highest", c.highest.coords}, {"dim", c.total_dim()}, {"weights", weights}};
}

}  // namespace slinf

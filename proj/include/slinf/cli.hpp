#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slinf/classify.hpp"
#include "slinf/errors.hpp"
#include "slinf/finrep.hpp"
#include "slinf/modmodel.hpp"
#include "slinf/oracle.hpp"
#include "slinf/serialize.hpp"

namespace slinf::cli {

enum ExitCode : int { Ok = 0, Usage = 1, Invalid = 2, Resource = 3, Mismatch = 4 };

enum class Format { Text, Json };

struct Options {
    Format format = Format::Text;
    std::uint64_t dim_cap = default_dim_cap;
};

/// A command result: the JSON document and its line-for-line text rendering.
struct Report {
    int code = Ok;
    Json json = Json::object();
    std::vector<std::string> lines;

    void line(std::string s) { lines.push_back(std::move(s)); }

    std::string render(Format f) const {
        if (f == Format::Json) return json.dump(2) + "\n";
        std::string out;
        for (const auto& l : lines) out += l + "\n";
        return out;
    }
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline Json quasi_periodic_json(const std::optional<QuasiPeriodic>& f) {
    if (!f) return nullptr;
    return Json{{"pattern", f->pattern()}, {"step", f->step()}};
}

inline std::string quasi_periodic_text(const std::optional<QuasiPeriodic>& f) {
    if (!f) return "-";
    std::string s = "[" + slinf::detail::join(f->pattern()) + "]";
    if (f->step() != 0) s += " step " + std::to_string(f->step());
    return s;
}

}  // namespace detail

/// Isomorphism-invariant summary and decisions for a descriptor.
inline Report classify(const ModuleDescriptor& d, const Options& opt = {}) {
    require_valid(d, opt.dim_cap);
    Report r;
    const AnnihilatorTag tag = annihilator_tag(d);
    if (d.is_symlimit()) {
        const auto& a = d.symlimit();
        r.json["kind"] = "symlimit";
        // a_n = step * n + intercept for all large n
        const std::int64_t intercept = a.tail_start - a.tail_step * static_cast<std::int64_t>(a.prefix.size() + 1);
        r.json["sequence_tail"] = Json{{"step", a.tail_step}, {"intercept", intercept}};
        r.json["annihilator_nonzero"] = true;
        r.json["highest_weight"] = "unsupported";
        r.json["bounded"] = "undecided";
        r.json["tag"] = tag_to_json(tag);
        r.line("kind: symlimit");
        r.line("sequence tail: a_n = " + std::to_string(a.tail_step) + "n" + (intercept < 0 ? " - " : " + ") +
               std::to_string(intercept < 0 ? -intercept : intercept));
        r.line("annihilator nonzero: yes");
        r.line("highest weight: unsupported");
        r.line("bounded: undecided");
        r.line("tag: " + tag.to_string() + " recipe: " + tag.recipe);
        return r;
    }
    const WeightProfile lam = limit_weight(d);
    const WeightProfile mu = limit_mu(d);
    const auto hw = is_highest_weight(d);
    const auto bd = is_bounded(d);
    const bool nonzero = annihilator_nonzero(d);

    r.json["kind"] = "vp";
    r.json["order"] = order_to_json(lam.order());
    r.json["lambda"] = profile_to_json(lam);
    r.json["mu_class"] = Json{{"head", detail::quasi_periodic_json(mu.head())},
                              {"tail", detail::quasi_periodic_json(mu.tail())}};
    r.json["annihilator_nonzero"] = nonzero;
    Json hwj{{"value", hw.highest}};
    if (hw.highest)
        hwj["k0"] = hw.k0;
    else
        hwj["counterexample_block"] = *hw.counterexample;
    r.json["highest_weight"] = hwj;
    Json bdj{{"value", bd.bounded}, {"case", to_string(bd.which)}};
    if (bd.which == BoundedCase::LeftEnd || bd.which == BoundedCase::RightEnd) bdj["partition"] = partition_to_json(bd.partition);
    r.json["bounded"] = bdj;
    r.json["tag"] = tag_to_json(tag);

    r.line("kind: vp");
    r.line("order: " + std::string(to_string(lam.kind())));
    r.line("lambda: " + lam.to_string());
    r.line("mu class: head " + detail::quasi_periodic_text(mu.head()) + ", tail " +
           detail::quasi_periodic_text(mu.tail()));
    r.line("annihilator nonzero: " + detail::yes_no(nonzero));
    r.line("highest weight: " + detail::yes_no(hw.highest) +
           (hw.highest ? " (k0 = " + std::to_string(hw.k0) + ")"
                       : " (counterexample block " + std::to_string(*hw.counterexample) + ")"));
    std::string bounded = "bounded: " + detail::yes_no(bd.bounded);
    if (bd.bounded) {
        bounded += " (case " + to_string(bd.which);
        if (bd.which == BoundedCase::LeftEnd || bd.which == BoundedCase::RightEnd)
            bounded += ", partition " + bd.partition.to_string();
        bounded += ")";
    }
    r.line(bounded);
    r.line("tag: " + tag.to_string() + (tag.zero ? "" : " [" + to_string(tag.which) + "] recipe: " + tag.recipe));
    return r;
}

/// Freudenthal character of L(λ) for sl(n).
inline Report support(std::size_t n, const FiniteWeight& lam, const Options& opt = {}) {
    if (lam.size() != n) throw DomainError("expected " + std::to_string(n) + " coordinates, got " + std::to_string(lam.size()));
    const auto table = freudenthal_character(lam, opt.dim_cap);
    Report r;
    r.json = character_to_json(table);
    r.line("sl(" + std::to_string(n) + ") L" + lam.to_string() + ", dim " + std::to_string(table.total_dim()));
    for (const auto& [w, m] : table.entries) r.line(w.to_string() + " " + std::to_string(m));
    return r;
}

/// Block decomposition of the descriptor's λ.
inline Report blocks(const ModuleDescriptor& d, DecompositionStrategy strategy, const Options& opt = {}) {
    const WeightProfile lam = limit_weight(d);
    const VPDatum dec = decompose_blocks(lam, strategy, opt.dim_cap);
    Report r;
    auto emit = [&](const BlockSequence& s, const std::string& label) {
        Json prefix = Json::array(), period = Json::array();
        for (const auto& b : s.prefix) prefix.push_back(b.lam.coords);
        for (const auto& b : s.period) period.push_back(b.lam.coords);
        r.json[label] = Json{{"prefix", prefix}, {"period", period}, {"offset", s.offset}};
        std::string pre, per;
        for (const auto& b : s.prefix) pre += (pre.empty() ? "" : " ") + b.lam.to_string();
        for (const auto& b : s.period) per += (per.empty() ? "" : " ") + b.lam.to_string();
        r.line(label + " prefix: " + (pre.empty() ? "-" : pre));
        r.line(label + " period: " + per + (s.offset ? " offset " + std::to_string(s.offset) : ""));
        std::string first;
        for (std::size_t k = 1; k <= s.prefix.size() + 2 * s.period.size(); ++k)
            first += (first.empty() ? "" : " ") + s.block(k).lam.to_string();
        r.line(label + " expanded: " + first + " ...");
    };
    r.json["lambda"] = profile_to_json(lam);
    r.line("lambda: " + lam.to_string());
    emit(dec.blocks, "blocks");
    if (lam.kind() == OrderKind::TwoSided) emit(dec.left_blocks, "left_blocks");
    return r;
}

/// λ^(1..k) with the embedding data between consecutive steps.
inline Report exhaust(const ModuleDescriptor& d, std::size_t k, const Options& opt = {}) {
    if (k == 0) throw DomainError("k must be positive");
    const auto steps = exhaustion(d, k, opt.dim_cap);
    Report r;
    Json arr = Json::array();
    for (const auto& s : steps) {
        const FiniteWeight image = s.embed(s.lam);
        arr.push_back(Json{{"k", s.k},
                           {"N", s.size},
                           {"lambda", s.lam.coords},
                           {"next_mu_left", s.next_mu_left.coords},
                           {"next_mu_right", s.next_mu_right.coords},
                           {"highest_weight_image", image.coords}});
        std::string l = "k=" + std::to_string(s.k) + " N=" + std::to_string(s.size) + " lambda=" + s.lam.to_string();
        if (s.next_mu_left.size()) l += " next_mu_left=" + s.next_mu_left.to_string();
        if (s.next_mu_right.size()) l += " next_mu_right=" + s.next_mu_right.to_string();
        l += " image=" + image.to_string();
        r.line(l);
    }
    r.json["steps"] = arr;
    return r;
}

enum class VerifyLevel { Fast, Full };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Fast;
    std::size_t blocks = 2;
    std::uint64_t oracle_cap = 1000;
    std::uint64_t annihilator_work = oracle::default_annihilator_work;
};

/// Oracle cross-checks on the first `blocks` exhaustion steps.
inline Report verify(const ModuleDescriptor& d, const VerifyOptions& v, const Options& opt = {}) {
    if (v.blocks == 0) throw DomainError("at least one block is needed");
    const auto steps = exhaustion(d, v.blocks, opt.dim_cap);
    Report r;
    Json checks = Json::array();
    bool mismatch = false, resource = false;
    auto record = [&](const std::string& name, const std::string& status, const std::string& detail) {
        checks.push_back(Json{{"check", name}, {"status", status}, {"detail", detail}});
        r.line(status + " " + name + (detail.empty() ? "" : ": " + detail));
        mismatch = mismatch || status == "FAIL";
        resource = resource || status == "SKIP";
    };

    std::vector<std::optional<oracle::MatrixModule>> built(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        const std::string name = "character k=" + std::to_string(s.k);
        try {
            built[i] = oracle::build_simple(s.lam, v.oracle_cap);
            const bool same = oracle::character_of(*built[i]) == freudenthal_character(s.lam, opt.dim_cap);
            record(name, same ? "PASS" : "FAIL", "dim " + std::to_string(built[i]->dim()));
        } catch (const ResourceError& e) {
            record(name, "SKIP", e.what());
        } catch (const ConsistencyError& e) {
            record(name, "FAIL", e.what());
        }
    }

    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!built[i]) continue;
        const std::string name = "casimir k=" + std::to_string(steps[i].k);
        try {
            const Rational c = oracle::casimir_scalar(*built[i]);
            record(name, c == casimir_eigenvalue(steps[i].lam) ? "PASS" : "FAIL", c.get_str());
        } catch (const ConsistencyError& e) {
            record(name, "FAIL", e.what());
        }
    }

    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        const std::string name = "embedding k=" + std::to_string(steps[i].k);
        if (!built[i + 1]) {
            record(name, "SKIP", "module for k=" + std::to_string(steps[i + 1].k) + " not built");
            continue;
        }
        // generators of the copy of sl(N_k) inside sl(N_{k+1})
        const std::size_t first = steps[i].next_mu_left.size() + 1;
        const std::size_t last = first + steps[i].size - 2;
        const FiniteWeight target = steps[i].embed(steps[i].lam);
        bool found = false;
        for (const auto& hv : oracle::highest_vectors_for_subrange(*built[i + 1], first, last))
            found = found || hv.weight == target;
        record(name, found ? "PASS" : "FAIL", "weight " + target.to_string());
    }

    if (v.level == VerifyLevel::Full) {
        std::vector<const oracle::MatrixModule*> chain;
        std::size_t previous = SIZE_MAX;
        const std::size_t n0 = steps.front().size;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const std::string name = "annihilator k=" + std::to_string(steps[i].k);
            if (!built[i]) {
                record(name, "SKIP", "module not built");
                break;
            }
            chain.push_back(&*built[i]);
            try {
                const auto ann = oracle::truncated_annihilator(chain, 2, n0, v.annihilator_work);
                const bool monotone = ann.dimension() <= previous;
                previous = ann.dimension();
                record(name, monotone ? "PASS" : "FAIL", "dim " + std::to_string(ann.dimension()) + " in sl(" +
                                                             std::to_string(n0) + ") degree <= 2");
            } catch (const ResourceError& e) {
                record(name, "SKIP", e.what());
                break;
            }
        }
    }
    r.json["level"] = v.level == VerifyLevel::Full ? "full" : "fast";
    r.json["checks"] = checks;
    r.code = mismatch ? Mismatch : resource ? Resource : Ok;
    r.json["result"] = r.code == Ok ? "pass" : mismatch ? "fail" : "incomplete";
    r.line(std::string("result: ") + r.json["result"].get<std::string>());
    return r;
}

/// Parses a weight given as separate integers or as one "(a,b,...)" token.
inline FiniteWeight parse_weight(const std::vector<std::string>& tokens) {
    std::vector<std::int64_t> coords;
    for (auto t : tokens) {
        for (char& c : t)
            if (c == '(' || c == ')' || c == ',') c = ' ';
        std::istringstream in(t);
        std::string piece;
        while (in >> piece) {
            std::size_t used = 0;
            std::int64_t x = 0;
            try {
                x = std::stoll(piece, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != piece.size()) throw ParseError("'" + piece + "' is not an integer");
            coords.push_back(x);
        }
    }
    return FiniteWeight(coords);
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simple integrable weight modules of sl(infinity)", "slinf"};
    app.require_subcommand(1);
    Options opt;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--dim-cap", opt.dim_cap, "Largest finite-dimensional module to expand")->check(CLI::PositiveNumber);

    std::string file;
    auto* c_classify = app.add_subcommand("classify", "Decide isomorphism invariants and the annihilator tag");
    c_classify->add_option("file", file, "Descriptor file")->required();

    std::size_t n = 0;
    std::vector<std::string> weight_tokens;
    auto* c_support = app.add_subcommand("support", "Character of L(lambda) for sl(n)");
    c_support->add_option("n", n, "Rank")->required()->check(CLI::PositiveNumber);
    c_support->add_option("weights", weight_tokens, "Highest weight coordinates")->required();

    std::string strategy = "greedy-min";
    std::size_t fixed = 0;
    auto* c_blocks = app.add_subcommand("blocks", "Block decomposition of lambda");
    c_blocks->add_option("file", file, "Descriptor file")->required();
    c_blocks->add_option("--strategy", strategy, "greedy-min or fixed")->check(CLI::IsMember({"greedy-min", "fixed"}));
    c_blocks->add_option("--size", fixed, "Block size for the fixed strategy")->check(CLI::PositiveNumber);

    std::size_t k = 2;
    auto* c_exhaust = app.add_subcommand("exhaust", "Exhaustion steps lambda^(1..k)");
    c_exhaust->add_option("file", file, "Descriptor file")->required();
    c_exhaust->add_option("--k", k, "Number of steps")->check(CLI::PositiveNumber);

    VerifyOptions vopt;
    std::string level = "fast";
    auto* c_verify = app.add_subcommand("verify", "Cross-check the exhaustion with the matrix oracle");
    c_verify->add_option("file", file, "Descriptor file")->required();
    c_verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    c_verify->add_option("--blocks", vopt.blocks, "Exhaustion steps to check")->check(CLI::PositiveNumber);
    c_verify->add_option("--oracle-cap", vopt.oracle_cap, "Largest module built as matrices")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    opt.format = format == "json" ? Format::Json : Format::Text;

    try {
        Report r;
        if (*c_classify) {
            r = classify(load_descriptor(file), opt);
        } else if (*c_support) {
            r = support(n, parse_weight(weight_tokens), opt);
        } else if (*c_blocks) {
            if (strategy == "fixed" && fixed == 0) throw ParseError("--strategy fixed needs --size");
            r = blocks(load_descriptor(file),
                       strategy == "fixed" ? DecompositionStrategy::fixed(fixed) : DecompositionStrategy::greedy_min(), opt);
        } else if (*c_exhaust) {
            r = exhaust(load_descriptor(file), k, opt);
        } else {
            vopt.level = level == "full" ? VerifyLevel::Full : VerifyLevel::Fast;
            r = verify(load_descriptor(file), vopt, opt);
        }
        out << r.render(opt.format);
        return r.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return Usage;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return Resource;
    } catch (const ValidationError& e) {
        err << "validation error:\n" << e.what();
        return Invalid;
    } catch (const DecompositionError& e) {
        err << "decomposition error: " << e.what() << "\n";
        return Invalid;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return Invalid;
    } catch (const ConsistencyError& e) {
        err << "consistency error: " << e.what() << "\n";
        return Mismatch;
    }
}

}  // namespace slinf::cli

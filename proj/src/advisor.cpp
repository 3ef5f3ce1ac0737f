#include "vic/advisor.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace vic {

namespace {

const char* kPhaseTemplate = R"(You are a robotics expert capable of analyzing multimodal sensory inputs
for recognizing the current task's contact phase.

Given the task description: {task_description},
force measurements [N]: {force_measurements},
contact phase list: {contact_phase_list},
determine the current task execution phase.

Analyze the input to infer: task execution context.

Output: phase = [phase]
)";

const char* kImpedanceTemplate = R"(You are an expert robotic impedance controller capable of analyzing
multimodal sensory inputs.

Given the task description: {task_description},
current phase: {phase} (Free_motion, Approaching, Contact, or Retreat),
velocity [m/s]: {velocity}, and
force measurements [N]: {force_measurements},
impedance range [N/m]: {impedance_range},
determine optimal anisotropic impedance parameters.

Apply phase-based impedance hierarchy:
- Free_motion: Highest impedance (precise position control)
- Approaching: Medium impedance (transitioning to compliance)
- Contact: Lowest impedance (maximum compliance)
- Retreat: Medium impedance (controlled withdrawal)

Consider motion direction adaptation:
- Primary motion axis ({primary_axis}): Reduced impedance along intended motion direction
- Constraint axes: Elevated impedance perpendicular to motion for alignment maintenance

Analyze the input to infer: task requirement, current situation,
and environmental physical constraints.

Output: K = [K_x, K_y, K_z], D = [D_x, D_y, D_z]

where damping coefficients are proportional to stiffness values (10-20%).
)";

std::string fmt_fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string fmt_exact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string vec_fixed2(const Vec3& v) {
    return "[" + fmt_fixed2(v.x) + ", " + fmt_fixed2(v.y) + ", " + fmt_fixed2(v.z) + "]";
}

void replace_all(std::string& s, std::string_view token, std::string_view value) {
    std::size_t pos = 0;
    while ((pos = s.find(token, pos)) != std::string::npos) {
        s.replace(pos, token.size(), value);
        pos += value.size();
    }
}

std::string lowercase_collapsed(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '_' || c == '-' || c == ' ') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

// All numbers inside the first '[' ... ']' group following `key =`,
// scanning matches in order until one yields exactly `count` finite
// values.
std::optional<std::vector<double>> find_triple(const std::string& text, char key, int count) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (std::toupper(static_cast<unsigned char>(text[i])) != std::toupper(static_cast<unsigned char>(key)))
            continue;
        std::size_t j = i + 1;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j >= text.size() || text[j] != '=') continue;
        ++j;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j >= text.size() || text[j] != '[') continue;
        const std::size_t close = text.find(']', j);
        if (close == std::string::npos) continue;
        const std::string inner = text.substr(j + 1, close - j - 1);

        std::vector<double> vals;
        const char* p = inner.c_str();
        const char* end = p + inner.size();
        bool bad = false;
        while (p < end) {
            char* next = nullptr;
            const double v = std::strtod(p, &next);
            if (next == p) { ++p; continue; }
            if (!std::isfinite(v)) { bad = true; break; }
            vals.push_back(v);
            p = next;
        }
        if (!bad && static_cast<int>(vals.size()) == count) return vals;
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(AdviceSource s) {
    return s == AdviceSource::Heuristic ? "heuristic" : "remote";
}

PromptTemplates PromptTemplates::builtin() {
    return {kPhaseTemplate, kImpedanceTemplate};
}

PromptTemplates PromptTemplates::load_dir(const std::string& dir) {
    auto read = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read prompt template: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    return {read(dir + "/phase_prompt.txt"), read(dir + "/impedance_prompt.txt")};
}

std::string build_phase_prompt(const AdvisorContext& ctx, const PromptTemplates& tpl) {
    std::string s = tpl.phase_template;
    replace_all(s, "{task_description}", ctx.task.instruction);
    replace_all(s, "{force_measurements}", vec_fixed2(ctx.wrench.force));
    replace_all(s, "{contact_phase_list}", "Free_motion, Approaching, Contact, Retreat");
    return s;
}

std::string build_impedance_prompt(const AdvisorContext& ctx, const PromptTemplates& tpl) {
    std::string s = tpl.impedance_template;
    replace_all(s, "{task_description}", ctx.task.instruction);
    replace_all(s, "{phase}", to_string(ctx.phase));
    replace_all(s, "{velocity}", vec_fixed2(ctx.velocity.linear));
    replace_all(s, "{force_measurements}", vec_fixed2(ctx.wrench.force));
    replace_all(s, "{impedance_range}",
                "[" + fmt_short(ctx.range.k_min) + ", " + fmt_short(ctx.range.k_max) + "]");
    replace_all(s, "{primary_axis}", to_string(ctx.task.primary_motion_axis));
    return s;
}

std::pair<Vec3, Vec3> clamp_to_range(const Vec3& k, const Vec3& d, const ImpedanceRange& range) {
    Vec3 k_out, d_out;
    const double mid_fraction =
        0.5 * (range.damping_fraction_min + range.damping_fraction_max);
    for (int i = 0; i < 3; ++i) {
        double fraction = k[i] > 0.0 ? d[i] / k[i] : mid_fraction;
        fraction = std::clamp(fraction, range.damping_fraction_min, range.damping_fraction_max);
        k_out[i] = std::clamp(k[i], range.k_min, range.k_max);
        d_out[i] = fraction * k_out[i];
    }
    return {k_out, d_out};
}

Advice parse_impedance_response(const std::string& text, const ImpedanceRange& range) {
    const auto k_vals = find_triple(text, 'K', 3);
    if (!k_vals) throw ParseError("no parsable K triple in response");
    Vec3 k{(*k_vals)[0], (*k_vals)[1], (*k_vals)[2]};

    Vec3 d;
    if (const auto d_vals = find_triple(text, 'D', 3)) {
        d = {(*d_vals)[0], (*d_vals)[1], (*d_vals)[2]};
    } else {
        const double mid = 0.5 * (range.damping_fraction_min + range.damping_fraction_max);
        d = k * mid;
    }

    Advice a;
    std::tie(a.k, a.d) = clamp_to_range(k, d, range);
    a.source = AdviceSource::Remote;
    a.raw_text = text;
    return a;
}

ContactPhase parse_phase_response(const std::string& text) {
    const std::string t = lowercase_collapsed(text);
    struct Candidate { const char* token; ContactPhase phase; };
    static constexpr Candidate kCandidates[] = {
        {"freemotion", ContactPhase::FreeMotion},
        {"approaching", ContactPhase::Approaching},
        {"contact", ContactPhase::Contact},
        {"retreat", ContactPhase::Retreat},
    };
    std::size_t best = std::string::npos;
    ContactPhase found = ContactPhase::FreeMotion;
    for (const auto& c : kCandidates) {
        const std::size_t pos = t.find(c.token);
        if (pos != std::string::npos && pos < best) {
            best = pos;
            found = c.phase;
        }
    }
    if (best == std::string::npos) throw ParseError("no phase name in response");
    return found;
}

Advice heuristic_advise(const AdvisorContext& ctx) {
    const ImpedanceRange& r = ctx.range;
    double base = 0.0;
    bool anisotropic = true;
    switch (ctx.phase) {
        case ContactPhase::FreeMotion:
            base = r.k_max;
            anisotropic = false;
            break;
        case ContactPhase::Approaching:
        case ContactPhase::Retreat:
            base = 0.5 * (r.k_min + r.k_max);
            break;
        case ContactPhase::Contact:
            base = r.k_min + 0.1 * (r.k_max - r.k_min);
            break;
    }

    Vec3 k{base, base, base};
    if (anisotropic) {
        const int primary = static_cast<int>(ctx.task.primary_motion_axis);
        for (int i = 0; i < 3; ++i)
            k[i] = i == primary ? 0.7 * base : 1.2 * base;
    }

    Advice a;
    std::tie(a.k, a.d) = clamp_to_range(k, k * 0.15, r);
    a.phase_claim = ctx.phase;
    a.source = AdviceSource::Heuristic;
    return a;
}

std::string format_advice(const Advice& a) {
    auto triple = [](const Vec3& v) {
        return "[" + fmt_exact(v.x) + ", " + fmt_exact(v.y) + ", " + fmt_exact(v.z) + "]";
    };
    return "K = " + triple(a.k) + ", D = " + triple(a.d);
}

RemoteAdvisorConfig RemoteAdvisorConfig::from_env() {
    RemoteAdvisorConfig cfg;
    if (const char* v = std::getenv("ADVISOR_URL")) cfg.url = v;
    if (const char* v = std::getenv("ADVISOR_KEY")) cfg.api_key = v;
    if (const char* v = std::getenv("ADVISOR_MODEL")) cfg.model = v;
    if (const char* v = std::getenv("ADVISOR_TIMEOUT")) cfg.timeout_s = std::atof(v);
    return cfg;
}

std::optional<std::string> RemoteBackend::complete(const std::string& prompt) {
    if (cfg_.url.empty()) return std::nullopt;

    nlohmann::json body = {
        {"model", cfg_.model},
        {"temperature", 0},
        {"messages",
         {{{"role", "system"},
           {"content", "You are a robot impedance control advisor. Reply exactly in the "
                       "requested output format."}},
          {{"role", "user"}, {"content", prompt}}}},
    };

    httplib::Client cli(cfg_.url);
    cli.set_connection_timeout(std::chrono::milliseconds(static_cast<int>(cfg_.timeout_s * 1000)));
    cli.set_read_timeout(std::chrono::milliseconds(static_cast<int>(cfg_.timeout_s * 1000)));
    httplib::Headers headers;
    if (!cfg_.api_key.empty()) headers.emplace("Authorization", "Bearer " + cfg_.api_key);

    auto res = cli.Post("/v1/chat/completions", headers, body.dump(), "application/json");
    if (!res || res->status != 200) return std::nullopt;
    try {
        const auto j = nlohmann::json::parse(res->body);
        return j.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Advice RemoteBackend::advise(const AdvisorContext& ctx) {
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&t0] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    std::optional<ContactPhase> claim;
    if (const auto reply = complete(build_phase_prompt(ctx, tpl_))) {
        try {
            claim = parse_phase_response(*reply);
        } catch (const ParseError&) {
            // keep the sensed phase; the impedance query may still succeed
        }
    }

    AdvisorContext query_ctx = ctx;
    if (claim) query_ctx.phase = *claim;

    if (const auto reply = complete(build_impedance_prompt(query_ctx, tpl_))) {
        try {
            Advice a = parse_impedance_response(*reply, ctx.range);
            a.phase_claim = claim;
            a.latency = elapsed();
            return a;
        } catch (const ParseError&) {
        }
    }

    Advice fb = heuristic_advise(ctx);
    fb.fallback = true;
    fb.latency = elapsed();
    return fb;
}

std::unique_ptr<AdvisorBackend> make_advisor_backend(const std::string& kind) {
    if (kind == "heuristic") return std::make_unique<HeuristicBackend>();
    if (kind == "remote") return std::make_unique<RemoteBackend>(RemoteAdvisorConfig::from_env());
    throw std::invalid_argument("unknown advisor backend: " + kind);
}

}  // namespace vic

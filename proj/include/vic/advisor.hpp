#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "vic/types.hpp"

namespace vic {

// Inputs the advisor reasons over: task, phase, motion and force state,
// and the stiffness range the hardware allows.
struct AdvisorContext {
    TaskSpec task;
    ContactPhase phase = ContactPhase::FreeMotion;
    Twist velocity;
    Wrench wrench;
    ImpedanceRange range;
};

enum class AdviceSource { Heuristic, Remote };

std::string_view to_string(AdviceSource s);

// Stiffness/damping suggestion. Values leaving this module are always
// clamped: k within range, d/k within the damping-fraction band.
struct Advice {
    Vec3 k;                                   // N/m
    Vec3 d;                                   // N·s/m
    std::optional<ContactPhase> phase_claim;  // advisor's own phase estimate
    AdviceSource source = AdviceSource::Heuristic;
    double latency = 0.0;                     // s, wall clock for remote calls
    std::optional<std::string> raw_text;      // unparsed model output
    bool fallback = false;                    // remote failed, heuristic substituted
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Prompt templates with {placeholder} substitution. The repo ships the
// same text under prompts/; the built-in copies keep the builders pure.
struct PromptTemplates {
    std::string phase_template;
    std::string impedance_template;

    static PromptTemplates builtin();
    // Reads phase_prompt.txt / impedance_prompt.txt from a directory.
    static PromptTemplates load_dir(const std::string& dir);
};

// Rendered prompts are byte-stable for identical contexts. Force and
// velocity components are formatted with two decimals, range bounds in
// shortest form.
std::string build_phase_prompt(const AdvisorContext& ctx,
                               const PromptTemplates& tpl = PromptTemplates::builtin());
std::string build_impedance_prompt(const AdvisorContext& ctx,
                                   const PromptTemplates& tpl = PromptTemplates::builtin());

// Extracts the first parsable K=[x,y,z] triple (and D triple when
// present) from free-form model output, tolerating whitespace, markdown
// fences and surrounding prose, then clamps. A missing or malformed D
// falls back to the mid damping fraction of the range.
Advice parse_impedance_response(const std::string& text, const ImpedanceRange& range);

// Case- and separator-insensitive search for one of the four phase
// names; the earliest occurrence wins.
ContactPhase parse_phase_response(const std::string& text);

// k clamped element-wise to [k_min, k_max]; d_i rebuilt from the clamped
// stiffness so the damping fraction d_i/k_i stays inside the band
// (preserving the requested fraction where possible).
std::pair<Vec3, Vec3> clamp_to_range(const Vec3& k, const Vec3& d, const ImpedanceRange& range);

// Deterministic phase-hierarchy advisor. Base stiffness: FreeMotion at
// k_max, Approaching/Retreat mid-range, Contact near k_min. Outside
// FreeMotion the primary motion axis is softened (x0.7) and the
// perpendicular axes stiffened (x1.2, clamped). Damping at 15 %.
Advice heuristic_advise(const AdvisorContext& ctx);

// Advice rendered in the advisor's own output syntax; reparsing
// reproduces the values exactly.
std::string format_advice(const Advice& a);

class AdvisorBackend {
  public:
    virtual ~AdvisorBackend() = default;
    virtual Advice advise(const AdvisorContext& ctx) = 0;
    virtual std::string_view name() const = 0;
};

class HeuristicBackend final : public AdvisorBackend {
  public:
    Advice advise(const AdvisorContext& ctx) override { return heuristic_advise(ctx); }
    std::string_view name() const override { return "heuristic"; }
};

// Chat-completion endpoint configuration; read from ADVISOR_URL,
// ADVISOR_KEY, ADVISOR_MODEL, ADVISOR_TIMEOUT.
struct RemoteAdvisorConfig {
    std::string url;           // scheme://host[:port]
    std::string api_key;
    std::string model = "gpt-4o-mini";
    double timeout_s = 2.0;

    static RemoteAdvisorConfig from_env();
};

// Queries a chat model twice (phase, then impedance) at temperature 0
// and parses the replies. Any transport or parse failure falls back to
// the heuristic so the control loop never blocks or throws.
class RemoteBackend final : public AdvisorBackend {
  public:
    explicit RemoteBackend(RemoteAdvisorConfig cfg,
                           PromptTemplates tpl = PromptTemplates::builtin())
        : cfg_(std::move(cfg)), tpl_(std::move(tpl)) {}

    Advice advise(const AdvisorContext& ctx) override;
    std::string_view name() const override { return "remote"; }

  private:
    std::optional<std::string> complete(const std::string& prompt);

    RemoteAdvisorConfig cfg_;
    PromptTemplates tpl_;
};

std::unique_ptr<AdvisorBackend> make_advisor_backend(const std::string& kind);

}  // namespace vic

// Mode dispatch and reporting around the augmentation pipelines: runs the
// class-appropriate transformation, computes the bound target for that
// class, and verifies every output invariant it can check.

#ifndef PWTRI_PIPELINE_HPP
#define PWTRI_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pwtri/augment.hpp"
#include "pwtri/embedded_graph.hpp"
#include "pwtri/path_decomposition.hpp"

namespace pwtri {

enum class PipelineMode { kAuto, kThreeConnected, kTwoConnected, kGeneral, kOuterplanar };

PipelineMode parse_mode(const std::string& name);
std::string mode_name(PipelineMode m);

struct PipelineOptions {
    bool audit_tokens = false;
    /// Oracle pathwidth of the input when known; bound targets then use it
    /// instead of the supplied decomposition's width.
    std::optional<int> oracle_input_width;
};

struct PipelineReport {
    std::string mode;  // resolved (never "auto")
    std::vector<PipelineStage> stages;
    int input_width = 0;
    std::optional<int> oracle_input_width;
    int output_width = 0;
    int bound_target = 0;
    bool bound_reference_is_oracle = false;

    bool output_simple = false;
    bool output_triangulated = false;          // triangulation modes
    bool output_maximal_outerplanar = false;   // outerplanar mode
    bool vertex_set_preserved = false;
    bool edges_preserved = false;
    bool planar_certificate = false;  // Euler relation on the output
    bool bound_satisfied = false;
    bool tokens_audited = false;
    bool token_invariant_ok = true;
    std::vector<std::string> notes;

    bool ok() const;
    std::string render_text() const;
};

/// Runs the pipeline for the given mode in place.  Throws
/// std::invalid_argument when the input does not belong to the mode's
/// class.
PipelineReport run_pipeline(EmbeddedMultigraph& g, PathDecomposition& p, PipelineMode mode,
                            const PipelineOptions& opts = {});

}  // namespace pwtri

#endif

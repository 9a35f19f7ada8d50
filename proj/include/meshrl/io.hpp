#pragma once

// File formats: extended OFF meshes, SVG rendering, weight checkpoints,
// key=value training configs and learning-curve CSV.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "meshrl/env.hpp"
#include "meshrl/mesh.hpp"
#include "meshrl/policy.hpp"

namespace meshrl::io {

enum class IoErrorKind { FileError, ParseError, MixedArity, BadCheckpoint, BadConfig };

const char* to_string(IoErrorKind kind);

class IoError : public std::runtime_error {
public:
    // line is 1-based; 0 when the error is not tied to a line.
    IoError(IoErrorKind kind, const std::string& what, int line = 0);
    IoErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    IoErrorKind kind_;
    int line_;
};

// OFF with all-triangle or all-quad faces, followed by optional
//   # desired_degree <v> <d>
//   # geometric <v>
// lines. A file without either kind of line is treated as plain OFF: corners
// of the boundary (angle away from 180 degrees) become geometric and desired
// degrees are assigned from the geometry. Otherwise the lines are
// authoritative and missing desired degrees are assigned from the geometry.
Mesh read_off(std::istream& in);
Mesh read_off(const std::filesystem::path& path);
// Writes active vertices and elements in compacted order.
void write_off(std::ostream& out, const Mesh& mesh);
void write_off(const std::filesystem::path& path, const Mesh& mesh);

struct SvgOptions {
    double width = 640.0;
    bool smooth = true;
    int smooth_iterations = 30;
    std::string caption; // appended after the score annotation
};

// One polygon per active element, irregular vertices marked (red above the
// desired degree, blue below) and "s=X, s*=Y" annotated.
void write_svg(std::ostream& out, const Mesh& mesh, const SvgOptions& options = {});
void write_svg(const std::filesystem::path& path, const Mesh& mesh, const SvgOptions& options = {});

// Versioned binary: magic, version, encoder shape, then name, shape and
// values for every parameter.
void save_checkpoint(const std::filesystem::path& path, PolicyWeights& weights);
PolicyWeights load_checkpoint(const std::filesystem::path& path);

// key = value lines; '#' starts a comment. Keys mirror PpoConfig, with the
// encoder fields flattened (arity, feature_dim, num_blocks, template_depth).
PpoConfig read_config(std::istream& in, const PpoConfig& base);
PpoConfig read_config(const std::filesystem::path& path, const PpoConfig& base);
void write_config(std::ostream& out, const PpoConfig& config);

// iteration,mean,std,episodes,wall_time
void write_curve_header(std::ostream& out);
void write_curve_row(std::ostream& out, const CurveRow& row);
std::vector<CurveRow> read_curve(std::istream& in);
std::vector<CurveRow> read_curve(const std::filesystem::path& path);

} // namespace meshrl::io

#pragma once

#include <array>
#include <string>
#include <vector>

#include "svlab/rng.hpp"
#include "svlab/tensor.hpp"

namespace svlab::world {

// Latent layout (fixed, documented): c=4 channels per frame —
//   channel 0: subject coverage mask in [0,1] (occlusion-aware union)
//   channels 1-3: RGB composite; the background color fills uncovered area.
// The latent raster IS the pixel-like space; identity is linearly decodable.

constexpr int kNumShapes = 8;
constexpr int kNumColors = 8;
constexpr int kNumTextures = 4;
constexpr int kNumBackgrounds = 4;

extern const std::array<const char*, kNumShapes> kShapeNames;      // circle..star
extern const std::array<const char*, kNumColors> kColorNames;      // red..purple
extern const std::array<const char*, kNumTextures> kTextureNames;  // plain..shaded
extern const std::array<const char*, kNumBackgrounds> kBackgroundNames;

struct Rgb {
    double r = 0, g = 0, b = 0;
};

extern const std::array<Rgb, kNumColors> kColorPalette;
extern const std::array<Rgb, kNumBackgrounds> kBackgroundPalette;

// Rotational symmetry fold of each shape in degrees; 0 means rotation-invariant.
extern const std::array<double, kNumShapes> kShapeSymmetryDeg;

int nearest_color(const Rgb& c);       // index into kColorPalette
int nearest_background(const Rgb& c);  // index into kBackgroundPalette

struct WorldConfig {
    int h = 16, w = 16, c = 4, f = 8;
    double scale_min = 0.2, scale_max = 0.6;
    // In-pair triplets reject subjects outside this band (background leakage guard).
    double in_pair_scale_min = 0.2, in_pair_scale_max = 0.5;
    double identity_threshold = 0.9;
    // Pose similarity = wp*position + wo*orientation + ws*scale, each in [0,1].
    double pose_w_position = 0.5, pose_w_orientation = 0.25, pose_w_scale = 0.25;
    // Number of distinct identities the script sampler draws from (<= 256).
    int identity_pool = 64;
};

struct SubjectSpec {
    int shape_id = 0;
    Rgb color{1, 0, 0};
    int texture_id = 0;
    double scale = 0.3;  // bounding-circle diameter as a fraction of frame height
};

struct Pose {
    double x = 0, y = 0;      // center, pixel coordinates
    double orient_deg = 0;    // counter-clockwise
    double scale = 0.3;
};

struct Trajectory {
    double x0 = 0, y0 = 0;
    double vx = 0, vy = 0;          // pixels per frame
    double orient0_deg = 0;
    double rot_rate_deg = 0;        // degrees per frame
};

struct SceneSubject {
    SubjectSpec spec;
    Trajectory traj;
};

struct SceneScript {
    std::string id;
    std::vector<SceneSubject> subjects;  // 1..4, distinct shapes
    int background_id = 0;
    int frame_count = 8;
    uint64_t seed = 0;
};

Pose pose_at(const SceneSubject& s, int frame);

// Identity descriptor: 20-dim, [shape one-hot | quantized-color one-hot |
// 0.5 * texture one-hot]. Pure function of the identity fields.
std::vector<double> identity_descriptor(const SubjectSpec& s);
std::vector<double> identity_descriptor(int shape_id, int color_id, int texture_id);
double descriptor_cosine(const std::vector<double>& a, const std::vector<double>& b);

// Rasterizes one subject at a pose: writes coverage into mask_out and
// pattern-weighted coverage into pat_out (both h*w, row-major, accumulated
// nowhere -- plain overwrite). Textured color channel = color * pat.
void rasterize_sprite(int shape_id, int texture_id, const Pose& pose, int h, int w,
                      std::vector<double>& mask_out, std::vector<double>& pat_out);

LatentVideo render_scene(const SceneScript& script, const WorldConfig& cfg);
LatentVideo render_reference(const SubjectSpec& subject, const Pose& pose, int background_id,
                             const WorldConfig& cfg);

// Deterministic random script generator. Subjects get distinct shapes, on-grid
// orientations (15 deg), collision-free axis-aligned trajectories that stay in
// frame. n_subjects=0 draws the count from the 26/50/14/10 distribution.
SceneScript sample_script(Rng& rng, const WorldConfig& cfg, const std::string& id,
                          int n_subjects = 0);

// Subject identity sampled from the configured identity pool.
SubjectSpec sample_identity(Rng& rng, const WorldConfig& cfg);

bool trajectory_in_bounds(const SceneSubject& s, int frames, const WorldConfig& cfg);

}  // namespace svlab::world

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ceilmap {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat34 = Eigen::Matrix<double, 3, 4>;

/// Error categories surfaced by the library. Every failure path throws
/// Error with one of these codes so callers (and tests) can dispatch on
/// the condition rather than on message text.
enum class ErrorCode {
  invalid_argument,
  insufficient_pairs,
  insufficient_matches,
  insufficient_points,
  insufficient_observations,
  no_consensus,
  degenerate_baseline,
  degenerate_configuration,
  cheirality_tie,
  invalid_spec,
  unknown_camera,
  invalid_window,
  underconstrained_problem,
  registration_failure,
  no_qualifying_edge,
  inconsistent_frame,
  non_psd_covariance,
  divergence,
  dimension_mismatch,
  length_mismatch,
  empty_input,
  empty_landmarks,
  empty_union,
  config_validation,
  stage_failure,
  mismatched_provenance,
  io_error,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::insufficient_pairs: return "insufficient_pairs";
    case ErrorCode::insufficient_matches: return "insufficient_matches";
    case ErrorCode::insufficient_points: return "insufficient_points";
    case ErrorCode::insufficient_observations: return "insufficient_observations";
    case ErrorCode::no_consensus: return "no_consensus";
    case ErrorCode::degenerate_baseline: return "degenerate_baseline";
    case ErrorCode::degenerate_configuration: return "degenerate_configuration";
    case ErrorCode::cheirality_tie: return "cheirality_tie";
    case ErrorCode::invalid_spec: return "invalid_spec";
    case ErrorCode::unknown_camera: return "unknown_camera";
    case ErrorCode::invalid_window: return "invalid_window";
    case ErrorCode::underconstrained_problem: return "underconstrained_problem";
    case ErrorCode::registration_failure: return "registration_failure";
    case ErrorCode::no_qualifying_edge: return "no_qualifying_edge";
    case ErrorCode::inconsistent_frame: return "inconsistent_frame";
    case ErrorCode::non_psd_covariance: return "non_psd_covariance";
    case ErrorCode::divergence: return "divergence";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::empty_input: return "empty_input";
    case ErrorCode::empty_landmarks: return "empty_landmarks";
    case ErrorCode::empty_union: return "empty_union";
    case ErrorCode::config_validation: return "config_validation";
    case ErrorCode::stage_failure: return "stage_failure";
    case ErrorCode::mismatched_provenance: return "mismatched_provenance";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

/// Pinhole intrinsics. fx, fy, cx, cy in pixels; no distortion model.
struct Intrinsics {
  double fx = 0, fy = 0, cx = 0, cy = 0;

  Mat3 matrix() const {
    Mat3 k = Mat3::Identity();
    k(0, 0) = fx;
    k(1, 1) = fy;
    k(0, 2) = cx;
    k(1, 2) = cy;
    return k;
  }
};

/// Rigid camera/body pose: `rotation` is the frame-from-camera orientation
/// and `position` the camera center, so a camera-frame point q maps to
/// rotation * q + position.
struct RigidPose {
  Mat3 rotation = Mat3::Identity();
  Vec3 position = Vec3::Zero();

  static RigidPose identity() { return RigidPose{}; }

  /// this ∘ other (apply `other` first in this pose's frame).
  RigidPose compose(const RigidPose& other) const {
    return RigidPose{rotation * other.rotation, position + rotation * other.position};
  }

  RigidPose inverse() const {
    return RigidPose{rotation.transpose(), -(rotation.transpose() * position)};
  }

  Vec3 apply(const Vec3& p) const { return rotation * p + position; }

  /// Camera-frame coordinates of a world point.
  Vec3 to_camera(const Vec3& p) const { return rotation.transpose() * (p - position); }
};

/// Similarity transform p -> scale * rotation * p + translation.
struct Similarity {
  double scale = 1.0;
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static Similarity identity() { return Similarity{}; }

  Vec3 apply(const Vec3& p) const { return scale * (rotation * p) + translation; }
};

enum class KeypointKind : std::uint8_t { scene = 0, agent_top = 1, agent_bottom = 2 };

inline const char* keypoint_kind_name(KeypointKind k) {
  switch (k) {
    case KeypointKind::scene: return "scene";
    case KeypointKind::agent_top: return "agent_top";
    case KeypointKind::agent_bottom: return "agent_bottom";
  }
  return "unknown";
}

inline bool is_agent_kind(KeypointKind k) { return k != KeypointKind::scene; }

using CameraId = std::int32_t;

/// Camera id of the ego camera inside capture bundles; CMCs use ids >= 0.
inline constexpr CameraId kEgoCameraId = -1;

/// Keypoint ids of the agent's two mobile keypoints.
inline constexpr int kAgentTopId = 0;
inline constexpr int kAgentBottomId = 1;

/// One 2D measurement of a keypoint by a camera at a frame.
struct Observation {
  CameraId camera_id = kEgoCameraId;
  int frame = 0;
  int keypoint_id = 0;
  KeypointKind kind = KeypointKind::scene;
  Vec2 pixel = Vec2::Zero();
};

/// A 3D point. Agent-kind landmarks are per-frame (frame >= 0); scene
/// landmarks are static (frame == -1).
struct Landmark {
  int id = 0;
  KeypointKind kind = KeypointKind::scene;
  Vec3 position = Vec3::Zero();
  int frame = -1;
};

}  // namespace ceilmap

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "spoilkit/core/error.hpp"
#include "spoilkit/data/manifest.hpp"

namespace spoilkit {

inline constexpr int kStandardSize = 512;

// A standardised image: 512x512, RGB, planar float in [0,1]. This is the
// raw pixel contract; per-backbone normalisation happens inside the model.
struct ImageTensor {
  std::string id;
  int native_width = 0;
  int native_height = 0;
  bool converted_from_non_rgb = false;  // grayscale/alpha inputs, converted with a warning
  std::vector<float> data;              // 3 * 512 * 512, plane order R,G,B

  float at(int channel, int y, int x) const {
    return data[static_cast<std::size_t>((channel * kStandardSize + y) * kStandardSize + x)];
  }
};

namespace detail {

inline ImageTensor standardise_mat(const std::string& id, const cv::Mat& decoded) {
  if (decoded.empty()) throw Error(ErrorKind::DecodeError, "cannot decode image for id '" + id + "'");

  ImageTensor out;
  out.id = id;
  out.native_width = decoded.cols;
  out.native_height = decoded.rows;

  cv::Mat m = decoded;
  if (m.depth() != CV_8U) {
    double scale = 1.0;
    if (m.depth() == CV_16U) scale = 255.0 / 65535.0;
    cv::Mat tmp;
    m.convertTo(tmp, CV_8U, scale);
    m = tmp;
    out.converted_from_non_rgb = true;
  }
  cv::Mat rgb;
  switch (m.channels()) {
    case 1:
      cv::cvtColor(m, rgb, cv::COLOR_GRAY2RGB);
      out.converted_from_non_rgb = true;
      break;
    case 3:
      cv::cvtColor(m, rgb, cv::COLOR_BGR2RGB);
      break;
    case 4:
      cv::cvtColor(m, rgb, cv::COLOR_BGRA2RGB);
      out.converted_from_non_rgb = true;
      break;
    default:
      throw Error(ErrorKind::DecodeError,
                  "unsupported channel count " + std::to_string(m.channels()) + " for id '" + id + "'");
  }

  // Plain bilinear stretch to the square working size; aspect ratio is not
  // preserved and no padding is added.
  cv::Mat resized;
  if (rgb.cols == kStandardSize && rgb.rows == kStandardSize)
    resized = rgb;
  else
    cv::resize(rgb, resized, cv::Size(kStandardSize, kStandardSize), 0, 0, cv::INTER_LINEAR);

  out.data.resize(static_cast<std::size_t>(3) * kStandardSize * kStandardSize);
  const float inv = 1.0f / 255.0f;
  for (int y = 0; y < kStandardSize; ++y) {
    const auto* row = resized.ptr<cv::Vec3b>(y);
    for (int x = 0; x < kStandardSize; ++x) {
      for (int c = 0; c < 3; ++c) {
        out.data[static_cast<std::size_t>((c * kStandardSize + y) * kStandardSize + x)] =
            static_cast<float>(row[x][c]) * inv;
      }
    }
  }
  return out;
}

}  // namespace detail

inline ImageTensor standardise_bytes(const std::string& id, std::span<const std::uint8_t> bytes) {
  const cv::Mat buf(1, static_cast<int>(bytes.size()), CV_8UC1, const_cast<std::uint8_t*>(bytes.data()));
  cv::Mat decoded = cv::imdecode(buf, cv::IMREAD_UNCHANGED);
  return detail::standardise_mat(id, decoded);
}

inline ImageTensor standardise(const ImageRecord& record) {
  cv::Mat decoded = cv::imread(record.path.string(), cv::IMREAD_UNCHANGED);
  if (decoded.empty())
    throw Error(ErrorKind::DecodeError, "cannot decode " + record.path.string());
  return detail::standardise_mat(record.id, decoded);
}

// Bilinear rescale of a standardised tensor to a smaller working resolution.
// Training configs may use this to trade resolution for speed; the id and
// provenance flags are preserved.
inline std::vector<float> resample_chw(const std::vector<float>& chw, int src, int dst) {
  std::vector<float> out(static_cast<std::size_t>(3) * dst * dst);
  for (int c = 0; c < 3; ++c) {
    cv::Mat plane(src, src, CV_32FC1, const_cast<float*>(chw.data() + static_cast<std::size_t>(c) * src * src));
    cv::Mat small;
    cv::resize(plane, small, cv::Size(dst, dst), 0, 0, cv::INTER_LINEAR);
    std::memcpy(out.data() + static_cast<std::size_t>(c) * dst * dst, small.ptr<float>(0),
                sizeof(float) * static_cast<std::size_t>(dst) * dst);
  }
  return out;
}

// Grayscale plane of a standardised image (BT.601 weighting), used by the
// local-descriptor pipeline.
inline cv::Mat to_gray(const ImageTensor& t) {
  cv::Mat gray(kStandardSize, kStandardSize, CV_8UC1);
  for (int y = 0; y < kStandardSize; ++y) {
    auto* row = gray.ptr<std::uint8_t>(y);
    for (int x = 0; x < kStandardSize; ++x) {
      const float g = 0.299f * t.at(0, y, x) + 0.587f * t.at(1, y, x) + 0.114f * t.at(2, y, x);
      row[x] = static_cast<std::uint8_t>(std::lround(std::clamp(g, 0.0f, 1.0f) * 255.0f));
    }
  }
  return gray;
}

}  // namespace spoilkit

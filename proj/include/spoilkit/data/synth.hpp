#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "spoilkit/core/fs.hpp"
#include "spoilkit/core/rng.hpp"

namespace spoilkit {

// Synthetic long-tailed texture fixture. The real survey imagery is not
// distributable, so CI and the acceptance suite run against procedurally
// generated material textures with the same manifest schema.
struct SynthOptions {
  int n_images = 160;
  int image_size = 512;
  std::uint64_t seed = 7;
  // Long-tailed class mix over Cat-1..Cat-4.
  std::array<double, 4> class_proportions = {0.45, 0.30, 0.15, 0.10};
  // Fraction of images whose particle_size label becomes the combined
  // "Cat-2 or 3" class (exercises unmappable-label handling downstream).
  double combined_label_fraction = 0.0;
};

namespace detail {

// Four visually distinct material textures. Categories are separable by a
// convolutional model; the smooth class yields few local interest points on
// purpose, mirroring fine-grained material imagery.
inline cv::Mat synth_texture(int category, int size, Rng& rng) {
  cv::Mat img(size, size, CV_8UC3);
  const double brightness = rng.next_uniform(-18.0, 18.0);
  // Slight per-category tint so channels carry signal.
  static const double tint[4][3] = {
      {1.00, 0.92, 0.80},  // clay: warm
      {0.95, 0.95, 0.82},  // sand
      {0.90, 0.93, 0.97},  // gravel: cool
      {0.96, 0.96, 0.96},  // cobbles: neutral
  };

  cv::Mat gray(size, size, CV_8UC1);
  switch (category) {
    case 1: {  // smooth low-frequency surface
      const int cells = 7;
      cv::Mat coarse(cells, cells, CV_32FC1);
      for (int y = 0; y < cells; ++y)
        for (int x = 0; x < cells; ++x)
          coarse.at<float>(y, x) = static_cast<float>(rng.next_uniform(96, 176));
      cv::Mat up;
      cv::resize(coarse, up, cv::Size(size, size), 0, 0, cv::INTER_CUBIC);
      up.convertTo(gray, CV_8UC1);
      break;
    }
    case 2: {  // fine speckle
      for (int y = 0; y < size; ++y) {
        auto* row = gray.ptr<std::uint8_t>(y);
        for (int x = 0; x < size; ++x)
          row[x] = static_cast<std::uint8_t>(90 + rng.next_below(110));
      }
      cv::blur(gray, gray, cv::Size(2, 2));
      break;
    }
    case 3: {  // mid-sized rounded clasts
      gray.setTo(105);
      const int n = 380;
      for (int i = 0; i < n; ++i) {
        const int cx = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(size)));
        const int cy = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(size)));
        const int r = 7 + static_cast<int>(rng.next_below(12));
        const int shade = 60 + static_cast<int>(rng.next_below(140));
        cv::circle(gray, {cx, cy}, r, cv::Scalar(shade), cv::FILLED, cv::LINE_8);
        cv::circle(gray, {cx, cy}, r, cv::Scalar(shade > 128 ? shade - 45 : shade + 45), 1,
                   cv::LINE_8);
      }
      break;
    }
    default: {  // large angular blocks
      gray.setTo(70);
      const int n = 42;
      for (int i = 0; i < n; ++i) {
        const auto cx = static_cast<float>(rng.next_below(static_cast<std::uint64_t>(size)));
        const auto cy = static_cast<float>(rng.next_below(static_cast<std::uint64_t>(size)));
        const auto w = static_cast<float>(45 + rng.next_below(95));
        const auto h = static_cast<float>(45 + rng.next_below(95));
        const auto angle = static_cast<float>(rng.next_uniform(0.0, 180.0));
        cv::RotatedRect rect({cx, cy}, {w, h}, angle);
        cv::Point2f corners[4];
        rect.points(corners);
        cv::Point pts[4];
        for (int k = 0; k < 4; ++k) pts[k] = corners[k];
        const int shade = 85 + static_cast<int>(rng.next_below(120));
        cv::fillConvexPoly(gray, pts, 4, cv::Scalar(shade), cv::LINE_8);
        cv::polylines(gray, std::vector<std::vector<cv::Point>>{{pts[0], pts[1], pts[2], pts[3]}},
                      true, cv::Scalar(30), 2, cv::LINE_8);
      }
      break;
    }
  }

  for (int y = 0; y < size; ++y) {
    const auto* g = gray.ptr<std::uint8_t>(y);
    auto* row = img.ptr<cv::Vec3b>(y);
    for (int x = 0; x < size; ++x) {
      const double v = g[x] + brightness + rng.next_uniform(-6.0, 6.0);
      // OpenCV stores BGR; tint table is RGB.
      row[x][2] = cv::saturate_cast<std::uint8_t>(v * tint[category - 1][0]);
      row[x][1] = cv::saturate_cast<std::uint8_t>(v * tint[category - 1][1]);
      row[x][0] = cv::saturate_cast<std::uint8_t>(v * tint[category - 1][2]);
    }
  }
  return img;
}

}  // namespace detail

// Generates images plus a manifest; returns the manifest path.
inline std::filesystem::path make_synthetic_dataset(const std::filesystem::path& dir,
                                                    const SynthOptions& opt = {}) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "images");

  // Largest-remainder class counts with a floor that keeps every class
  // usable under an 80/20 split plus 5-fold validation.
  std::array<int, 4> counts{};
  int assigned = 0;
  std::array<double, 4> rem{};
  for (int c = 0; c < 4; ++c) {
    const double exact = opt.class_proportions[static_cast<std::size_t>(c)] * opt.n_images;
    counts[static_cast<std::size_t>(c)] = static_cast<int>(std::floor(exact));
    rem[static_cast<std::size_t>(c)] = exact - std::floor(exact);
    assigned += counts[static_cast<std::size_t>(c)];
  }
  while (assigned < opt.n_images) {
    int best = 0;
    for (int c = 1; c < 4; ++c)
      if (rem[static_cast<std::size_t>(c)] > rem[static_cast<std::size_t>(best)]) best = c;
    ++counts[static_cast<std::size_t>(best)];
    rem[static_cast<std::size_t>(best)] = -1;
    ++assigned;
  }
  for (auto& c : counts) c = std::max(c, 8);

  Rng rng(opt.seed);
  std::string manifest;
  const char* combined = "Cat-2 or 3";
  manifest += "# vocab particle_size = Cat-1,Cat-2,Cat-2 or 3,Cat-3,Cat-4\n";
  manifest += "# vocab relative_density = Cat-1,Cat-2,Cat-2 or 3,Cat-3,Cat-4\n";
  manifest += "# vocab fabric_structure = Cat-1,Cat-2,Cat-3,Cat-4\n";
  manifest += "# vocab plasticity = Cat-1,Cat-2,Cat-3,Cat-4\n";
  manifest += "# vocab bmac_category = Cat-1,Cat-2,Cat-3,Cat-4\n";
  manifest += "id,path,particle_size,relative_density,fabric_structure,plasticity,bmac_category\n";

  int index = 0;
  for (int cat = 1; cat <= 4; ++cat) {
    for (int i = 0; i < counts[static_cast<std::size_t>(cat - 1)]; ++i) {
      char id[32];
      std::snprintf(id, sizeof(id), "img_%04d", index++);
      const std::string rel = std::string("images/") + id + ".png";
      const cv::Mat img = detail::synth_texture(cat, opt.image_size, rng);
      if (!cv::imwrite((dir / rel).string(), img))
        throw Error(ErrorKind::IoError, "cannot write " + (dir / rel).string());
      const std::string cls = "Cat-" + std::to_string(cat);
      std::string particle = cls;
      if (opt.combined_label_fraction > 0.0 && (cat == 2 || cat == 3) &&
          rng.next_double() < opt.combined_label_fraction)
        particle = combined;
      manifest += std::string(id) + "," + rel + "," + particle + "," + cls + "," + cls + "," +
                  cls + "," + cls + "\n";
    }
  }
  const fs::path manifest_path = dir / "manifest.csv";
  write_text_file_atomic(manifest_path, manifest);
  return manifest_path;
}

}  // namespace spoilkit

#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace floqamp::io {

// All floats are emitted with 17 significant digits.
std::string format_double(double x);

class CsvFile {
   public:
    explicit CsvFile(const std::filesystem::path& path);
    ~CsvFile();

    void header(std::initializer_list<std::string_view> names);

    template <class... Ts>
    void row(const Ts&... vals) {
        first_ = true;
        (put(vals), ...);
        out_ << '\n';
    }

    void close();

   private:
    void sep();
    void put(int v);
    void put(long v);
    void put(double v);
    void put(const std::string& v);
    void put(const char* v);

    std::filesystem::path path_;
    std::ofstream out_;
    bool first_ = true;
};

void ensure_directory(const std::filesystem::path& dir);

// Writes <emitted>.meta.json next to the emitted file.
std::filesystem::path write_sidecar(const std::filesystem::path& emitted,
                                    const nlohmann::json& meta);

// Minimal rectangle-raster heatmap; no external plotting dependency.
struct SvgOptions {
    bool log_scale = false;
    std::string title;
    std::string x_label;
    std::string y_label;
};

void write_heatmap_svg(const std::filesystem::path& path,
                       const Eigen::MatrixXd& values, const SvgOptions& opt);

// Winding cells: -1/0/+1 plus boundary markers, one row per ω̄ sample.
void write_winding_svg(const std::filesystem::path& path,
                       const std::vector<std::vector<int>>& values,
                       const std::vector<std::vector<std::uint8_t>>& boundary,
                       const SvgOptions& opt);

}  // namespace floqamp::io

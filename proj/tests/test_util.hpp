#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "goldspec/graph.hpp"

namespace testutil {

inline bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// scratch directory for file-based tests
inline std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "goldspec_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string write_temp(const std::string& name, const std::string& content) {
    auto path = temp_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path.string();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

}  // namespace testutil

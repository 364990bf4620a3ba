#pragma once

#include <filesystem>
#include <random>
#include <string>

namespace ref {

// Scratch directory removed on scope exit.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    std::uniform_int_distribution<unsigned long long> dist;
    dir_ = std::filesystem::temp_directory_path() /
           ("polystego-test-" + std::to_string(dist(rd)));
    std::filesystem::create_directories(dir_);
  }

  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }

  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return dir_; }

  std::filesystem::path file(const std::string& name) const { return dir_ / name; }

 private:
  std::filesystem::path dir_;
};

}  // namespace ref

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace entplan::testing {

// Fresh directory under the system temp root, removed on destruction.
class TempDir {
 public:
  TempDir() {
    auto pattern =
        (std::filesystem::temp_directory_path() / "entplan_test_XXXXXX").string();
    if (::mkdtemp(pattern.data()) == nullptr) {
      throw std::runtime_error("mkdtemp failed");
    }
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name,
                              const std::string& body) const {
    const auto file = path_ / name;
    std::ofstream out(file);
    out << body;
    return file;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace entplan::testing

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "dlap/error.hpp"
#include "dlap/harness.hpp"

namespace dlap {

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string key_of(const nlohmann::json& j) {
  return j.at("spec").get<std::string>() + "|" + std::to_string(j.at("seed").get<std::uint64_t>()) + "|" +
         std::to_string(j.at("index").get<std::size_t>());
}

}  // namespace

RecordSink::RecordSink(std::filesystem::path path) : path_(std::move(path)) {
  if (std::filesystem::exists(path_)) {
    std::string content = slurp(path_);
    const std::size_t last_newline = content.rfind('\n');
    const std::size_t complete = last_newline == std::string::npos ? 0 : last_newline + 1;
    if (complete != content.size()) {
      std::filesystem::resize_file(path_, complete);
      content.resize(complete);
    }
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      try {
        keys_[key_of(nlohmann::json::parse(line))] = true;
      } catch (const std::exception&) {
        throw Error("corrupt record in " + path_.string() + ": " + line.substr(0, 80));
      }
    }
  }
  fd_ = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) throw Error("cannot open " + path_.string() + ": " + std::strerror(errno));
}

RecordSink::~RecordSink() {
  if (fd_ >= 0) ::close(fd_);
}

bool RecordSink::append(const Record& r) {
  const std::string key = r.key();
  if (keys_.count(key)) {
    ++skipped_;
    return false;
  }
  const std::string line = r.to_json().dump() + "\n";
  const ssize_t n = ::write(fd_, line.data(), line.size());
  if (n != static_cast<ssize_t>(line.size())) {
    // Roll back a short write so the file never keeps half a line.
    if (n > 0) {
      const off_t end = ::lseek(fd_, 0, SEEK_END);
      if (end >= n) {
        [[maybe_unused]] const int rc = ::ftruncate(fd_, end - n);
      }
    }
    throw Error("write to " + path_.string() + " failed: " + std::strerror(errno));
  }
  keys_[key] = true;
  ++written_;
  return true;
}

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path) {
  std::vector<nlohmann::json> out;
  std::istringstream lines(slurp(path));
  std::string line;
  while (std::getline(lines, line)) {
    if (lines.eof() && !line.empty()) break;  // torn final line without newline
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << doc.dump(2) << '\n';
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace dlap

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <system_error>

#include "zetaladder/error.hpp"
#include "zetaladder/quadrature.hpp"

namespace zl {
namespace {

bool parse_double(std::string_view field, double& out) {
  if (field.empty()) return false;
  const char* first = field.data();
  const char* last = first + field.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

}  // namespace

void CheckpointStore::insert(double t, double j, double tol) {
  if (records_.emplace(t, Record{j, tol}).second) dirty_ = true;
}

std::optional<CheckpointStore::Record> CheckpointStore::find(double t) const {
  const auto it = records_.find(t);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

std::string CheckpointStore::serialize() const {
  std::string out;
  out.reserve(records_.size() * 64);
  char line[128];
  for (const auto& [t, rec] : records_) {
    const int n = std::snprintf(line, sizeof line, "%.17g\t%.17g\t%.17g\n", t, rec.j, rec.tol);
    out.append(line, static_cast<std::size_t>(n));
  }
  return out;
}

CheckpointStore CheckpointStore::parse(std::string_view text, const std::string& source) {
  CheckpointStore store;
  std::size_t line_no = 0;
  double prev_t = -1.0, prev_j = -1.0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto fail = [&](const std::string& why) {
      throw LoadError("checkpoint " + source + ":" + std::to_string(line_no) + ": " + why +
                      " (record '" + std::string(line) + "')");
    };
    if (line.empty()) {
      if (text.empty()) break;
      fail("empty line");
    }
    double v[3];
    std::size_t pos = 0;
    for (int f = 0; f < 3; ++f) {
      const std::size_t tab = line.find('\t', pos);
      const bool last = f == 2;
      if (last != (tab == std::string_view::npos)) fail("expected three tab-separated fields");
      const std::string_view field = line.substr(pos, last ? std::string_view::npos : tab - pos);
      if (!parse_double(field, v[f])) fail("field " + std::to_string(f + 1) + " is not a finite number");
      pos = tab + 1;
    }
    if (v[0] < 0.0) fail("negative height");
    if (v[1] < 0.0) fail("negative integral");
    if (v[2] < 0.0) fail("negative error estimate");
    if (v[0] <= prev_t) fail("heights not strictly increasing");
    if (v[1] < prev_j) fail("integral decreases with height");
    prev_t = v[0];
    prev_j = v[1];
    store.records_.emplace(v[0], Record{v[1], v[2]});
  }
  return store;
}

CheckpointStore CheckpointStore::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (errno == ENOENT) return {};
    throw IoError("cannot open checkpoint " + path + ": " + std::strerror(errno));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read checkpoint " + path);
  return parse(buf.str(), path);
}

void CheckpointStore::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write checkpoint " + tmp + ": " + std::strerror(errno));
    out << serialize();
    out.flush();
    if (!out) throw IoError("cannot write checkpoint " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw IoError("cannot replace checkpoint " + path + ": " + std::strerror(errno));
}

}  // namespace zl

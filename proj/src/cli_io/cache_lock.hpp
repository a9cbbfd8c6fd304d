#pragma once

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <string>

#include "zetaladder/error.hpp"

namespace zl::detail {

// Exclusive advisory lock on `<cache>.lock`, held for the whole run. A
// separate lock file survives the rename that replaces the cache.
class CacheLock {
 public:
  CacheLock() = default;
  CacheLock(const CacheLock&) = delete;
  CacheLock& operator=(const CacheLock&) = delete;
  ~CacheLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }

  void acquire(const std::string& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw IoError("cannot open lock file " + path + ": " + std::strerror(errno));
    if (::flock(fd_, LOCK_EX) != 0)
      throw IoError("cannot lock " + path + ": " + std::strerror(errno));
  }

 private:
  int fd_ = -1;
};

}  // namespace zl::detail

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace attrdq {

class ArchiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ArchiveMember {
  std::string name;
  std::uint64_t size = 0;  // uncompressed
};

/// Decompresses gzip (or zlib) data, including concatenated gzip members.
std::string gunzip(std::string_view compressed);

// Zip archives: stored and deflated members, no ZIP64, no encryption.
std::vector<ArchiveMember> list_zip(std::string_view archive);
std::string extract_zip(std::string_view archive, std::string_view member);

// POSIX ustar / GNU tar (already decompressed). Regular files only.
std::vector<ArchiveMember> list_tar(std::string_view archive);
std::string extract_tar(std::string_view archive, std::string_view member);

}  // namespace attrdq

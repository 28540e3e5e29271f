#include "attrdq/archive.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <limits>
#include <optional>

namespace attrdq {

namespace {

constexpr std::size_t kChunk = 1 << 16;

std::uint16_t le16(std::string_view d, std::size_t off) {
  if (off + 2 > d.size()) throw ArchiveError("truncated zip archive");
  return static_cast<std::uint16_t>(static_cast<unsigned char>(d[off]) |
                                    (static_cast<unsigned char>(d[off + 1]) << 8));
}

std::uint32_t le32(std::string_view d, std::size_t off) {
  return static_cast<std::uint32_t>(le16(d, off)) | (static_cast<std::uint32_t>(le16(d, off + 2)) << 16);
}

// RAII wrapper over a zlib inflate stream.
class Inflater {
 public:
  explicit Inflater(int window_bits) {
    if (inflateInit2(&stream_, window_bits) != Z_OK) throw ArchiveError("zlib initialisation failed");
  }
  ~Inflater() { inflateEnd(&stream_); }
  Inflater(const Inflater&) = delete;
  Inflater& operator=(const Inflater&) = delete;

  z_stream& stream() noexcept { return stream_; }
  void reset() { inflateReset(&stream_); }

 private:
  z_stream stream_{};
};

void feed(z_stream& s, std::string_view in) {
  s.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
  s.avail_in = static_cast<uInt>(std::min<std::size_t>(in.size(), std::numeric_limits<uInt>::max()));
}

std::string inflate_raw(std::string_view data, std::uint64_t expected_size) {
  Inflater inf(-MAX_WBITS);
  auto& s = inf.stream();
  feed(s, data);
  std::string out;
  out.reserve(static_cast<std::size_t>(expected_size));
  char buf[kChunk];
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    s.next_out = reinterpret_cast<Bytef*>(buf);
    s.avail_out = kChunk;
    rc = inflate(&s, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) throw ArchiveError("corrupt deflate stream in zip member");
    out.append(buf, kChunk - s.avail_out);
    if (rc == Z_OK && s.avail_in == 0 && s.avail_out != 0) throw ArchiveError("truncated deflate stream");
  }
  return out;
}

struct ZipEntry {
  std::string name;
  std::uint16_t method = 0;
  std::uint32_t crc = 0;
  std::uint32_t compressed = 0;
  std::uint32_t uncompressed = 0;
  std::uint32_t local_offset = 0;
};

std::vector<ZipEntry> read_central_directory(std::string_view d) {
  constexpr std::uint32_t kEocd = 0x06054b50;
  constexpr std::uint32_t kCentral = 0x02014b50;
  if (d.size() < 22) throw ArchiveError("not a zip archive (too short)");

  std::optional<std::size_t> eocd;
  const std::size_t floor = d.size() > 22 + 0xFFFF ? d.size() - 22 - 0xFFFF : 0;
  for (std::size_t pos = d.size() - 22 + 1; pos-- > floor;) {
    if (le32(d, pos) == kEocd) {
      eocd = pos;
      break;
    }
  }
  if (!eocd) throw ArchiveError("not a zip archive (no end of central directory)");

  const std::uint16_t count = le16(d, *eocd + 10);
  const std::uint32_t cd_offset = le32(d, *eocd + 16);
  if (cd_offset == 0xFFFFFFFFu || count == 0xFFFF) throw ArchiveError("ZIP64 archives are not supported");

  std::vector<ZipEntry> entries;
  std::size_t pos = cd_offset;
  for (std::uint16_t i = 0; i < count; ++i) {
    if (le32(d, pos) != kCentral) throw ArchiveError("corrupt zip central directory");
    ZipEntry e;
    e.method = le16(d, pos + 10);
    e.crc = le32(d, pos + 16);
    e.compressed = le32(d, pos + 20);
    e.uncompressed = le32(d, pos + 24);
    const std::uint16_t name_len = le16(d, pos + 28);
    const std::uint16_t extra_len = le16(d, pos + 30);
    const std::uint16_t comment_len = le16(d, pos + 32);
    e.local_offset = le32(d, pos + 42);
    if (pos + 46 + name_len > d.size()) throw ArchiveError("truncated zip central directory");
    e.name = std::string(d.substr(pos + 46, name_len));
    entries.push_back(std::move(e));
    pos += 46u + name_len + extra_len + comment_len;
  }
  return entries;
}

bool is_directory(std::string_view name) { return !name.empty() && name.back() == '/'; }

std::string_view basename(std::string_view name) {
  const auto slash = name.find_last_of('/');
  return slash == std::string_view::npos ? name : name.substr(slash + 1);
}

template <typename Entry>
const Entry* find_member(const std::vector<Entry>& entries, std::string_view member) {
  for (const auto& e : entries) {
    if (e.name == member) return &e;
  }
  // Fall back to a unique basename match.
  const Entry* found = nullptr;
  for (const auto& e : entries) {
    if (basename(e.name) == member) {
      if (found) return nullptr;
      found = &e;
    }
  }
  return found;
}

struct TarEntry {
  std::string name;
  std::size_t data_offset = 0;
  std::uint64_t size = 0;
};

std::uint64_t parse_octal(std::string_view field) {
  std::uint64_t v = 0;
  for (char c : field) {
    if (c == '\0' || c == ' ') {
      if (v != 0) break;
      continue;
    }
    if (c < '0' || c > '7') throw ArchiveError("corrupt tar header (bad size field)");
    v = v * 8 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

std::string c_string(std::string_view field) {
  const auto nul = field.find('\0');
  return std::string(field.substr(0, nul));
}

std::vector<TarEntry> read_tar(std::string_view d) {
  std::vector<TarEntry> entries;
  std::string long_name;
  std::size_t pos = 0;
  while (pos + 512 <= d.size()) {
    const std::string_view header = d.substr(pos, 512);
    if (std::all_of(header.begin(), header.end(), [](char c) { return c == '\0'; })) break;
    const std::uint64_t size = parse_octal(header.substr(124, 12));
    const char type = header[156];
    const std::size_t data = pos + 512;
    if (data + size > d.size()) throw ArchiveError("truncated tar archive");

    std::string name = c_string(header.substr(0, 100));
    if (header.substr(257, 5) == "ustar") {
      std::string prefix = c_string(header.substr(345, 155));
      if (!prefix.empty()) name = prefix + "/" + name;
    }
    if (type == 'L') {
      long_name = c_string(d.substr(data, static_cast<std::size_t>(size)));
    } else {
      if (!long_name.empty()) name = std::move(long_name);
      long_name.clear();
      if (type == '0' || type == '\0') entries.push_back(TarEntry{std::move(name), data, size});
    }
    pos = data + static_cast<std::size_t>((size + 511) / 512 * 512);
  }
  return entries;
}

}  // namespace

std::string gunzip(std::string_view compressed) {
  Inflater inf(MAX_WBITS + 32);  // auto-detect gzip or zlib header
  auto& s = inf.stream();
  feed(s, compressed);
  std::string out;
  char buf[kChunk];
  for (;;) {
    s.next_out = reinterpret_cast<Bytef*>(buf);
    s.avail_out = kChunk;
    const int rc = inflate(&s, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      throw ArchiveError(std::string("corrupt gzip data") + (s.msg ? std::string(": ") + s.msg : ""));
    }
    out.append(buf, kChunk - s.avail_out);
    if (rc == Z_STREAM_END) {
      // Concatenated members: keep going while input remains.
      if (s.avail_in == 0) break;
      const auto* rest = s.next_in;
      const auto left = s.avail_in;
      inf.reset();
      s.next_in = const_cast<Bytef*>(rest);
      s.avail_in = left;
    } else if (s.avail_in == 0 && s.avail_out != 0) {
      throw ArchiveError("truncated gzip data");
    }
  }
  return out;
}

std::vector<ArchiveMember> list_zip(std::string_view archive) {
  std::vector<ArchiveMember> out;
  for (const auto& e : read_central_directory(archive)) {
    if (!is_directory(e.name)) out.push_back(ArchiveMember{e.name, e.uncompressed});
  }
  return out;
}

std::string extract_zip(std::string_view archive, std::string_view member) {
  constexpr std::uint32_t kLocal = 0x04034b50;
  const auto entries = read_central_directory(archive);
  const ZipEntry* e = find_member(entries, member);
  if (!e || is_directory(e->name)) throw ArchiveError("zip archive has no member '" + std::string(member) + "'");
  if (le32(archive, e->local_offset) != kLocal) throw ArchiveError("corrupt zip local header");
  const std::size_t data = e->local_offset + 30u + le16(archive, e->local_offset + 26) +
                           le16(archive, e->local_offset + 28);
  if (data + e->compressed > archive.size()) throw ArchiveError("truncated zip member '" + e->name + "'");
  const std::string_view payload = archive.substr(data, e->compressed);

  std::string out;
  if (e->method == 0) {
    out = std::string(payload);
  } else if (e->method == 8) {
    out = inflate_raw(payload, e->uncompressed);
  } else {
    throw ArchiveError("zip member '" + e->name + "' uses unsupported compression method " +
                       std::to_string(e->method));
  }
  const auto crc = ::crc32(0L, reinterpret_cast<const Bytef*>(out.data()), static_cast<uInt>(out.size()));
  if (crc != e->crc) throw ArchiveError("CRC mismatch in zip member '" + e->name + "'");
  return out;
}

std::vector<ArchiveMember> list_tar(std::string_view archive) {
  std::vector<ArchiveMember> out;
  for (const auto& e : read_tar(archive)) out.push_back(ArchiveMember{e.name, e.size});
  return out;
}

std::string extract_tar(std::string_view archive, std::string_view member) {
  const auto entries = read_tar(archive);
  const TarEntry* e = find_member(entries, member);
  if (!e) throw ArchiveError("tar archive has no member '" + std::string(member) + "'");
  return std::string(archive.substr(e->data_offset, static_cast<std::size_t>(e->size)));
}

}  // namespace attrdq

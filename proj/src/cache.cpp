#include "garside/cache.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "garside/error.hpp"

namespace garside {
namespace {

constexpr char kMagic[8] = {'G', 'R', 'S', 'D', 'M', 'E', 'M', 'O'};

// Identifies the diagram exactly, labels included.
std::string diagram_spec(const CoxeterGraph& g) {
  std::ostringstream out;
  out << g.family_tag() << ';';
  for (const auto& l : g.labels()) out << l << ',';
  out << ';';
  for (const auto& row : g.matrix())
    for (int v : row) out << v << ',';
  return out.str();
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

template <class T>
void put(std::string& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.append(buf, sizeof(T));
}

struct Reader {
  const std::string& data;
  std::size_t pos = 0;
  template <class T>
  bool get(T& v) {
    if (pos + sizeof(T) > data.size()) return false;
    std::memcpy(&v, data.data() + pos, sizeof(T));
    pos += sizeof(T);
    return true;
  }
};

}  // namespace

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* dir = std::getenv("GARSIDE_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

std::filesystem::path memo_cache_path(const std::filesystem::path& dir, const CoxeterGroup& group) {
  const std::string spec = diagram_spec(group.graph());
  std::ostringstream name;
  name << group.graph().family_tag() << '-' << std::hex << (fnv1a(spec) & 0xffffffffull) << ".memo";
  return dir / name.str();
}

void save_memo_cache(const std::filesystem::path& file, const CoxeterGroup& group) {
  const std::string spec = diagram_spec(group.graph());
  const auto entries = group.memo_snapshot();
  std::string body(kMagic, sizeof kMagic);
  put<std::uint32_t>(body, kMemoCacheVersion);
  put<std::uint32_t>(body, static_cast<std::uint32_t>(spec.size()));
  body += spec;
  put<std::uint64_t>(body, group.order());
  put<std::uint64_t>(body, entries.size());
  for (const auto& [key, value] : entries) {
    put<std::uint64_t>(body, key);
    put<std::uint32_t>(body, value);
  }
  put<std::uint64_t>(body, fnv1a(body));

  std::error_code ec;
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw Error(ErrorCode::Io, "write failed for " + tmp);
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot move cache into place: " + file.string());
}

bool load_memo_cache(const std::filesystem::path& file, const CoxeterGroup& group) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return false;
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (data.size() < sizeof kMagic + 8 || std::memcmp(data.data(), kMagic, sizeof kMagic) != 0)
    return false;

  std::uint64_t stored_sum = 0;
  std::memcpy(&stored_sum, data.data() + data.size() - 8, 8);
  const std::string body = data.substr(0, data.size() - 8);
  if (fnv1a(body) != stored_sum) return false;

  Reader r{body, sizeof kMagic};
  std::uint32_t version = 0, spec_len = 0;
  if (!r.get(version) || version != kMemoCacheVersion) return false;
  if (!r.get(spec_len) || r.pos + spec_len > body.size()) return false;
  if (body.compare(r.pos, spec_len, diagram_spec(group.graph())) != 0) return false;
  r.pos += spec_len;
  std::uint64_t order = 0, count = 0;
  if (!r.get(order) || order != group.order()) return false;
  if (!r.get(count) || count > (body.size() - r.pos) / 12) return false;

  std::vector<std::pair<std::uint64_t, Simple>> entries;
  entries.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t key = 0;
    std::uint32_t value = 0;
    if (!r.get(key) || !r.get(value)) return false;
    if (value >= group.order()) return false;
    entries.emplace_back(key, value);
  }
  if (r.pos != body.size()) return false;
  group.preload_memo(entries);
  return true;
}

}  // namespace garside

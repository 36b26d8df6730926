#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "garside/coxeter.hpp"

namespace garside {

inline constexpr std::uint32_t kMemoCacheVersion = 1;

// Directory named by GARSIDE_CACHE_DIR, if set and nonempty.
std::optional<std::filesystem::path> cache_dir_from_env();

// <dir>/<family>-<hash>.memo, with the hash taken over the whole diagram.
std::filesystem::path memo_cache_path(const std::filesystem::path& dir, const CoxeterGroup& group);

// Writes the group's multiplication memo. Throws Io on failure.
void save_memo_cache(const std::filesystem::path& file, const CoxeterGroup& group);

// Preloads the memo from a file written for the same diagram and version.
// Missing, stale, foreign or corrupt files are ignored and return false.
bool load_memo_cache(const std::filesystem::path& file, const CoxeterGroup& group);

}  // namespace garside

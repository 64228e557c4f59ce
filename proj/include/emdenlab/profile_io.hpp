#pragma once

#include <filesystem>
#include <functional>
#include <string>

#include "emdenlab/grid.hpp"

namespace emdenlab {

/// Writes "s,r,value,derivative" rows at full double precision, preceded by a
/// comment line carrying the asymptote exponents. The write is atomic: a
/// sibling temporary is renamed into place.
void write_profile_csv(const std::filesystem::path& path, const RadialProfile& f);

/// Reads a profile written by write_profile_csv, rebuilding its grid from the
/// s column. Throws std::runtime_error on malformed input.
RadialProfile read_profile_csv(const std::filesystem::path& path);

/// 64-bit FNV-1a hash, hex encoded; used for cache file names.
std::string fnv1a_hex(const std::string& text);

/// Cache directory resolution: the explicit argument if nonempty, otherwise
/// the EMDENLAB_CACHE_DIR environment variable, otherwise ".emdenlab_cache".
std::filesystem::path cache_root(const std::string& explicit_dir);

/// Returns the profile cached under the key, or builds and stores it. The
/// directory is created on demand; corrupt entries are rebuilt.
RadialProfile cached_profile(const std::filesystem::path& dir, const std::string& key,
                             const std::function<RadialProfile()>& build);

}  // namespace emdenlab

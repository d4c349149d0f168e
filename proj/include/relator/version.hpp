#pragma once

namespace relator {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kLibrarySchemaVersion = 1;
inline constexpr int kAbiVersion = 1;

}  // namespace relator

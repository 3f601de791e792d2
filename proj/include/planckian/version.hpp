// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace planckian {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace planckian

// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace orlicz {
inline constexpr const char* kVersion = "0.1.0";
}

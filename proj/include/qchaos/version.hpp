#pragma once

namespace qchaos {

constexpr const char* kToolVersion = "0.1.0";

} // namespace qchaos

#pragma once

#include <string>
#include <string_view>

namespace qexp {

/// Porter (1980) suffix-stripping stemmer, following the reference C
/// implementation distributed by the algorithm's author. That version
/// differs from the published rules in two places: step 2 maps "bli" to
/// "ble" (instead of "abli" to "able") and adds "logi" to "log".
///
/// Input is expected to be lowercase ASCII; words of length <= 2 are
/// returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace qexp

#pragma once

#include "phonogest/errors.hpp"

#include <array>
#include <string>
#include <string_view>

namespace phonogest {

/// Controllable dimensions of the vocal tract model.
enum class TractVariable { VA, LP, LA, TH, TP, TTH, TTP, PR, CT, GA };

inline constexpr std::array<TractVariable, 10> kTractVariables{
    TractVariable::VA, TractVariable::LP, TractVariable::LA, TractVariable::TH,  TractVariable::TP,
    TractVariable::TTH, TractVariable::TTP, TractVariable::PR, TractVariable::CT, TractVariable::GA};

inline constexpr std::array<std::string_view, 10> kTractNames{"VA", "LP", "LA", "TH", "TP",
                                                             "TTH", "TTP", "PR", "CT", "GA"};

inline std::string_view to_string(TractVariable tv) { return kTractNames[static_cast<int>(tv)]; }

inline TractVariable tract_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kTractNames.size(); ++i)
    if (kTractNames[i] == s) return kTractVariables[i];
  throw LookupError("unknown tract variable '" + std::string(s) + "'");
}

inline std::size_t index_of(TractVariable tv) { return static_cast<std::size_t>(tv); }

}  // namespace phonogest

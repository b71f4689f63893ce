#pragma once

#include <string_view>

namespace colorlab {

enum class Verdict { yes, no, budget_exceeded };

constexpr std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

}  // namespace colorlab

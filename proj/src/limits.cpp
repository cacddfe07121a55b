#include "sympow/limits.hpp"

namespace sympow {

namespace {
const Limits kDefaults{};
thread_local const Limits* current = nullptr;
}  // namespace

const Limits& limits() { return current ? *current : kDefaults; }

LimitsScope::LimitsScope(const Limits& l) : value_(l), previous_(current) { current = &value_; }

LimitsScope::~LimitsScope() { current = previous_; }

}  // namespace sympow

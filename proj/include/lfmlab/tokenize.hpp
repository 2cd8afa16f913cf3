#pragma once

#include <string>
#include <vector>

namespace lfmlab {

// Rule-based tokenizer used uniformly for token budgets and per-token action
// scoring. Rules: lowercase; letter runs and digit runs are single tokens;
// every other non-space character is its own token; whitespace separates.
// The tokenizer id is embedded in model files so scoring stays consistent.
inline constexpr const char* kTokenizerId = "rule-ws-punct-digits-v1";

std::vector<std::string> tokenize(const std::string& text);
size_t count_tokens(const std::string& text);

}  // namespace lfmlab
